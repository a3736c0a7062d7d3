"""Directed hypergraphs and brute-force reachability / SCC analysis.

The functions here are deliberately simple (quadratic) and serve as the
ground truth against which :mod:`tropcone.minscc` is tested.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


def _dedup(nodes: Iterable[int]) -> tuple[int, ...]:
    return tuple(dict.fromkeys(int(v) for v in nodes))


@dataclass(frozen=True)
class Hypergraph:
    """Nodes ``0 .. node_count-1`` and hyperedges ``(tail, head)``.

    Tails and heads are stored as duplicate-free tuples in input order.
    ``labels`` is optional and only used for display and file round-trips.
    """

    node_count: int
    edges: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be non-negative")
        edges = tuple((_dedup(t), _dedup(h)) for t, h in self.edges)
        for k, (t, h) in enumerate(edges):
            if not t or not h:
                raise ValueError(f"hyperedge {k} has an empty tail or head")
            for v in t + h:
                if not (0 <= v < self.node_count):
                    raise ValueError(f"hyperedge {k} mentions node {v} outside 0..{self.node_count - 1}")
        object.__setattr__(self, "edges", edges)
        if self.labels is not None and len(self.labels) != self.node_count:
            raise ValueError("one label per node is required")

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[Iterable[int], Iterable[int]]], labels=None):
        return cls(node_count, tuple((tuple(t), tuple(h)) for t, h in edges),
                   tuple(labels) if labels is not None else None)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_digraph(self) -> bool:
        return all(len(t) == 1 for t, _ in self.edges)


def hsize(H: Hypergraph) -> int:
    """``|N| + sum(|T(e)| + |H(e)|)``."""
    return H.node_count + sum(len(t) + len(h) for t, h in H.edges)


def reachable_set(H: Hypergraph, u: int) -> frozenset[int]:
    """Nodes reachable from ``u``: least fixpoint of firing edges whose whole
    tail has been reached."""
    if not (0 <= u < H.node_count):
        raise IndexError(f"node {u} out of range")
    # Gallo-style counting: each edge fires once all its tail members are in.
    missing = [len(t) for t, _ in H.edges]
    by_tail: list[list[int]] = [[] for _ in range(H.node_count)]
    for k, (t, _) in enumerate(H.edges):
        for x in t:
            by_tail[x].append(k)
    reached = {u}
    todo = [u]
    while todo:
        x = todo.pop()
        for k in by_tail[x]:
            missing[k] -= 1
            if missing[k] == 0:
                for y in H.edges[k][1]:
                    if y not in reached:
                        reached.add(y)
                        todo.append(y)
    return frozenset(reached)


def sub_digraph(H: Hypergraph) -> Hypergraph:
    """The digraph generated by the simple (singleton-tail) hyperedges."""
    edges = []
    for t, h in H.edges:
        if len(t) == 1:
            for y in h:
                edges.append((t, (y,)))
    return Hypergraph(H.node_count, tuple(edges), H.labels)


def quotient(H: Hypergraph, x: int, y: int) -> tuple[Hypergraph, list[int]]:
    """Merge nodes ``x`` and ``y``. Returns the new hypergraph and the node map."""
    keep = [v for v in range(H.node_count) if v != y]
    pos = {v: i for i, v in enumerate(keep)}
    f = [pos[x] if v == y else pos[v] for v in range(H.node_count)]
    edges = tuple((tuple(f[v] for v in t), tuple(f[v] for v in h)) for t, h in H.edges)
    return Hypergraph(len(keep), edges), f


@dataclass(frozen=True)
class SccAnalysis:
    classes: tuple[frozenset[int], ...]
    minimal_flags: tuple[bool, ...]

    @property
    def minimal_classes(self) -> list[frozenset[int]]:
        return [c for c, m in zip(self.classes, self.minimal_flags) if m]

    def has_least(self) -> bool:
        return sum(self.minimal_flags) == 1


def scc_oracle(H: Hypergraph) -> SccAnalysis:
    """All SCCs and their minimality, from the full reachability relation."""
    reach = [reachable_set(H, u) for u in range(H.node_count)]
    seen = [False] * H.node_count
    classes, flags = [], []
    for u in range(H.node_count):
        if seen[u]:
            continue
        cls = frozenset(v for v in reach[u] if u in reach[v])
        for v in cls:
            seen[v] = True
        classes.append(cls)
        flags.append(reach[u] <= cls)
    return SccAnalysis(tuple(classes), tuple(flags))


def canonical_classes(classes: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Sorted tuple form, for order-insensitive comparison of partitions."""
    return sorted(tuple(sorted(c)) for c in classes)


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Rename node ``v`` to ``perm[v]``."""
    edges = tuple((tuple(perm[v] for v in t), tuple(perm[v] for v in h)) for t, h in H.edges)
    labels = None
    if H.labels is not None:
        labels = [None] * H.node_count
        for v, p in enumerate(perm):
            labels[p] = H.labels[v]
        labels = tuple(labels)
    return Hypergraph(H.node_count, edges, labels)
