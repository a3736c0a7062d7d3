"""Minimal strongly connected components of directed hypergraphs.

:func:`min_scc_count` is a Tarjan-style depth-first search over the digraph
generated by the simple hyperedges. Whenever it closes a minimal SCC it
collapses that SCC into a single union-find node, turns the non-simple
hyperedges whose tails became fully contained in it into ordinary edges,
and resumes the search from the collapsed node. Total time is
O(size(H) * alpha(|N|)).

:func:`min_scc_count_digraph` is the plain instrumentation of Tarjan's
algorithm for digraphs (no merging).

Both visits run on an explicit work-stack, so deep instances do not hit the
interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph


class UnionFind:
    """Disjoint-set forest with union by rank and path compression."""

    __slots__ = ("parent", "rank")

    def __init__(self, n: int = 0):
        self.parent = list(range(n))
        self.rank = [0] * n

    def __len__(self):
        return len(self.parent)

    def make_set(self) -> int:
        u = len(self.parent)
        self.parent.append(u)
        self.rank.append(0)
        return u

    def find(self, u: int) -> int:
        if u < 0:
            raise IndexError(u)
        parent = self.parent
        root = u
        while parent[root] != root:
            root = parent[root]
        while parent[u] != root:
            parent[u], u = root, parent[u]
        return root

    def merge(self, u: int, v: int) -> int:
        """Union the classes of ``u`` and ``v``; returns the new representative."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return ru
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        if self.rank[ru] == self.rank[rv]:
            self.rank[ru] += 1
        return ru


@dataclass(frozen=True)
class MinSccResult:
    """Outcome of a minimal-SCC count.

    ``find_label[v]`` is the union-find representative of ``v`` at the end of
    the run and ``ismin[U]`` is meaningful for representatives ``U`` only:
    the minimal SCCs are the classes ``{v | find_label[v] == U}`` with
    ``ismin[U]`` true.
    """

    nb: int
    find_label: tuple[int, ...]
    ismin: tuple[bool, ...]


def minimal_classes(r: MinSccResult) -> list[frozenset[int]]:
    """The minimal SCCs, ordered by their smallest member."""
    groups: dict[int, list[int]] = {}
    for v, U in enumerate(r.find_label):
        if r.ismin[U]:
            groups.setdefault(U, []).append(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


class InvariantError(AssertionError):
    pass


def min_scc_count(H: Hypergraph, check_invariants: bool = False) -> MinSccResult:
    """Count (and extract) the minimal SCCs of a directed hypergraph.

    With ``check_invariants`` the run asserts the bookkeeping invariants of the
    search after every visit; this is for tests and costs extra time.
    """
    N = H.node_count
    tails = [t for t, _ in H.edges]
    heads = [h for _, h in H.edges]
    m = len(tails)
    tail_len = [len(t) for t in tails]

    incident: list[list[int]] = [[] for _ in range(N)]
    for e, t in enumerate(tails):
        for x in t:
            incident[x].append(e)

    uf = UnionFind(N)
    find = uf.find
    index: list[int | None] = [None] * N
    low: list[int | None] = [None] * N
    ismin = [False] * N
    on_stack = [False] * N
    finished = [False] * N
    class_min = [False] * N
    S: list[int] = []
    root_of = [-1] * m
    count = [0] * m
    parked: dict[int, list[int]] = {}
    counter = 0
    nb = 0

    park_pushes = [0] * m if check_invariants else None
    visited_at = [None] * N if check_invariants else None

    def start(u):
        # Frame layout: [u, U, F, heads being scanned, position, pending w]
        nonlocal counter
        U = find(u)
        index[U] = low[U] = counter
        if visited_at is not None:
            visited_at[u] = counter
        counter += 1
        ismin[U] = True
        S.append(U)
        on_stack[U] = True
        F = []
        for e in incident[u]:
            if tail_len[e] == 1:
                F.append(e)
            else:
                if root_of[e] < 0:
                    root_of[e] = u
                R = find(root_of[e])
                if on_stack[R]:
                    count[e] += 1
                    if count[e] == tail_len[e]:
                        parked.setdefault(R, []).append(e)
                        if park_pushes is not None:
                            park_pushes[e] += 1
        return [u, U, F, None, 0, -1]

    def absorb(frame, W):
        U = frame[1]
        if finished[W]:
            ismin[U] = False
        else:
            if low[W] < low[U]:
                low[U] = low[W]
            ismin[U] = ismin[U] and ismin[W]

    for s in range(N):
        if index[find(s)] is not None:
            continue
        frames = [start(s)]
        while frames:
            frame = frames[-1]
            if frame[5] >= 0:
                # returning from the visit of the pending head member
                absorb(frame, find(frame[5]))
                frame[5] = -1
                frame[4] += 1
            U = frame[1]
            F = frame[2]
            descended = False
            while True:
                hs = frame[3]
                if hs is not None and frame[4] < len(hs):
                    w = hs[frame[4]]
                    W = find(w)
                    if index[W] is None:
                        frame[5] = w
                        frames.append(start(w))
                        descended = True
                        break
                    absorb(frame, W)
                    frame[4] += 1
                    continue
                if F:
                    frame[3] = heads[F.pop()]
                    frame[4] = 0
                    continue
                if low[U] != index[U]:
                    break
                if ismin[U]:
                    i = index[U]
                    F.extend(parked.pop(U, ()))
                    V = S.pop()
                    on_stack[V] = False
                    while index[V] > i:
                        F.extend(parked.pop(V, ()))
                        U = uf.merge(U, V)
                        V = S.pop()
                        on_stack[V] = False
                    # the surviving representative carries the root's data
                    index[U] = low[U] = i
                    ismin[U] = True
                    S.append(U)
                    on_stack[U] = True
                    frame[1] = U
                    if F:
                        continue
                    nb += 1
                flag = ismin[U]
                while True:
                    V = S.pop()
                    on_stack[V] = False
                    finished[V] = True
                    class_min[V] = flag
                    if index[V] == index[U]:
                        break
                break
            if descended:
                continue
            frames.pop()
            if check_invariants:
                _check_state(N, S, on_stack, finished, index, find, tails, root_of,
                             count, park_pushes, visited_at)

    labels = tuple(find(v) for v in range(N))
    result = MinSccResult(nb, labels, tuple(class_min))
    if check_invariants and sum(class_min[U] for U in set(labels)) != nb:
        raise InvariantError("nb disagrees with the number of minimal classes")
    return result


def _check_state(N, S, on_stack, finished, index, find, tails, root_of, count,
                 park_pushes, visited_at):
    for v in range(N):
        if on_stack[v] and finished[v]:
            raise InvariantError(f"node {v} is both on the stack and finished")
    if sorted(S) != sorted(v for v in range(N) if on_stack[v]):
        raise InvariantError("stack membership flags out of sync")
    if any(index[S[k]] >= index[S[k + 1]] for k in range(len(S) - 1)):
        raise InvariantError("stack indices are not increasing")
    for e, t in enumerate(tails):
        if park_pushes[e] > 1:
            raise InvariantError(f"hyperedge {e} parked more than once")
        if len(t) == 1:
            continue
        seen = [x for x in t if visited_at[x] is not None]
        if root_of[e] >= 0:
            first = min(seen, key=lambda x: visited_at[x])
            if first != root_of[e]:
                raise InvariantError(f"root of hyperedge {e} is not its first visited tail node")
        elif seen:
            raise InvariantError(f"hyperedge {e} has visited tail nodes but no root")
        if count[e] > len(seen):
            raise InvariantError(f"counter of hyperedge {e} exceeds its visited tail nodes")


def min_scc_count_digraph(G: Hypergraph) -> MinSccResult:
    """Minimal SCCs of a digraph (every tail a singleton), by Tarjan's search
    instrumented with minimality flags. Every node is labelled with the root
    of its SCC."""
    N = G.node_count
    succ: list[list[int]] = [[] for _ in range(N)]
    for t, h in G.edges:
        if len(t) != 1:
            raise ValueError("min_scc_count_digraph needs singleton tails")
        succ[t[0]].extend(h)
    index: list[int | None] = [None] * N
    low = [0] * N
    ismin = [False] * N
    finished = [False] * N
    class_min = [False] * N
    label = list(range(N))
    S: list[int] = []
    counter = 0
    nb = 0

    def visit(u):
        nonlocal counter
        index[u] = low[u] = counter
        counter += 1
        ismin[u] = True
        S.append(u)

    for s in range(N):
        if index[s] is not None:
            continue
        visit(s)
        work = [[s, 0]]
        while work:
            top = work[-1]
            u, pos = top
            if pos < len(succ[u]):
                w = succ[u][pos]
                if index[w] is None:
                    # the edge is examined again once w's visit returns
                    visit(w)
                    work.append([w, 0])
                    continue
                top[1] += 1
                if finished[w]:
                    ismin[u] = False
                else:
                    if low[w] < low[u]:
                        low[u] = low[w]
                    ismin[u] = ismin[u] and ismin[w]
                continue
            work.pop()
            if low[u] == index[u]:
                if ismin[u]:
                    nb += 1
                flag = ismin[u]
                while True:
                    v = S.pop()
                    finished[v] = True
                    class_min[v] = flag
                    label[v] = u
                    if v == u:
                        break
    return MinSccResult(nb, tuple(label), tuple(class_min))
