"""Extremality of a vector in a tropical cone given by inequalities.

The fast test builds the hypergraph of the tangent cone at ``g`` (one
hyperedge per row that is tight at ``g``) and checks that it has exactly one
minimal strongly connected component. The brute-force oracle enumerates the
{BOTTOM, 0}-vectors of the tangent cone instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cone import IneqSystem, satisfies
from .hypergraph import Hypergraph, reachable_set
from .maxplus import BOTTOM, UNIT, Scalar, Vector, ZeroVectorError, argmax_set, dot, support
from .minscc import min_scc_count, minimal_classes

#: Largest support size the enumeration oracle accepts by default.
ENUMERATION_CAP = 20


class NotInConeError(ValueError):
    """The vector does not satisfy the inequality system."""


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class TangentHypergraph:
    """Tangent-cone hypergraph at ``g``, on the local nodes ``0..|supp(g)|-1``.

    ``node_map[i]`` is the original coordinate of local node ``i``.
    """

    hypergraph: Hypergraph
    node_map: tuple[int, ...]

    def local(self, original: int) -> int:
        return self.node_map.index(original)


def _check_candidate(g: Sequence[Scalar], S: IneqSystem):
    if all(v == BOTTOM for v in g):
        raise ZeroVectorError("the zero vector represents no ray")
    if not satisfies(S, g):
        raise NotInConeError("vector does not belong to the cone")


def tight_rows(g: Sequence[Scalar], S: IneqSystem):
    """Yield ``(k, tail, head)`` for every row with ``A_k g = B_k g > BOTTOM``.

    Tail and head are the argmax sets of ``B_k g`` and ``A_k g`` in original
    coordinates. Rows where both sides vanish are tautologies and skipped.
    """
    for k, (a, b) in enumerate(zip(S.A, S.B)):
        av = dot(a, g)
        if av == BOTTOM or av != dot(b, g):
            continue
        yield k, argmax_set(b, g), argmax_set(a, g)


def build_tangent_hypergraph(g: Sequence[Scalar], S: IneqSystem, check: bool = True) -> TangentHypergraph:
    if check:
        _check_candidate(g, S)
    supp = support(g)
    local = {orig: i for i, orig in enumerate(supp)}
    edges = []
    for _, tail, head in tight_rows(g, S):
        edges.append((sorted(local[i] for i in tail), sorted(local[i] for i in head)))
    return TangentHypergraph(Hypergraph.from_edges(len(supp), edges), supp)


def is_extreme(g: Sequence[Scalar], S: IneqSystem, check: bool = True) -> bool:
    """Extremality of ``g`` via the minimal SCCs of its tangent hypergraph."""
    th = build_tangent_hypergraph(g, S, check=check)
    return min_scc_count(th.hypergraph).nb == 1


def extreme_type(g: Sequence[Scalar], S: IneqSystem) -> int | None:
    """A coordinate ``t`` (0-based) such that ``g`` is extreme of type ``t``.

    Returns the smallest such coordinate in the least SCC, or None when ``g``
    is not extreme.
    """
    th = build_tangent_hypergraph(g, S)
    r = min_scc_count(th.hypergraph)
    if r.nb != 1:
        return None
    (least,) = minimal_classes(r)
    return min(th.node_map[i] for i in least)


def _tangent_masks(g, S):
    supp = support(g)
    bit = {orig: 1 << i for i, orig in enumerate(supp)}
    masks = []
    for _, tail, head in tight_rows(g, S):
        masks.append((sum(bit[i] for i in tail), sum(bit[i] for i in head)))
    return supp, masks


def _enumerate(g, S, cap):
    _check_candidate(g, S)
    supp, masks = _tangent_masks(g, S)
    p = len(supp)
    if p > cap:
        raise EnumerationCapError(f"support of size {p} exceeds the enumeration cap {cap}")
    # x satisfies  max_{head} x <= max_{tail} x  iff  (x hits head) => (x hits tail)
    found = [x for x in range(1, 1 << p)
             if all(not (x & hm) or (x & tm) for tm, hm in masks)]
    return supp, found


def zero_one_tangent_elements(g: Sequence[Scalar], S: IneqSystem, cap: int = ENUMERATION_CAP) -> set[Vector]:
    """Nonzero {BOTTOM, 0}-vectors of the tangent cone at ``g``, as vectors
    over the support of ``g`` (local coordinates)."""
    supp, found = _enumerate(g, S, cap)
    p = len(supp)
    return {tuple(UNIT if x >> i & 1 else BOTTOM for i in range(p)) for x in found}


def extreme_witness_oracle(g: Sequence[Scalar], S: IneqSystem, cap: int = ENUMERATION_CAP) -> int | None:
    """Smallest original coordinate ``t`` for which the all-zero (unit) vector
    is the only enumerated element with a unit ``t``-th entry, else None."""
    supp, found = _enumerate(g, S, cap)
    full = (1 << len(supp)) - 1
    for i, orig in enumerate(supp):
        b = 1 << i
        if all(x == full for x in found if x & b):
            return orig
    return None


def is_extreme_oracle(g: Sequence[Scalar], S: IneqSystem, cap: int = ENUMERATION_CAP) -> bool:
    return extreme_witness_oracle(g, S, cap) is not None


def reachability_equals_propagation(g: Sequence[Scalar], S: IneqSystem, l: int,
                                    cap: int = ENUMERATION_CAP) -> frozenset[int]:
    """Original coordinates forced to BOTTOM whenever coordinate ``l`` is.

    Computed by enumeration; it coincides with the set of nodes reachable from
    ``l`` in the tangent hypergraph.
    """
    supp, found = _enumerate(g, S, cap)
    if l not in supp:
        raise ValueError(f"coordinate {l} is not in the support of g")
    lb = 1 << supp.index(l)
    forced = set()
    for i, orig in enumerate(supp):
        b = 1 << i
        if all(not (x & b) for x in found if not (x & lb)):
            forced.add(orig)
    return frozenset(forced)


def tangent_reachable(g: Sequence[Scalar], S: IneqSystem, l: int) -> frozenset[int]:
    """Reachable set from ``l`` in the tangent hypergraph, in original coordinates."""
    th = build_tangent_hypergraph(g, S)
    return frozenset(th.node_map[i] for i in reachable_set(th.hypergraph, th.local(l)))
