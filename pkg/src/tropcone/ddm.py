"""Tropical double description: extreme rays of ``{x | A x <= B x}``.

Starting from the canonical basis, inequalities are intersected one at a
time. For a halfspace ``a x <= b x`` the generators satisfying it are kept as
they are, and every pair (g satisfying, h violating) yields the candidate
``(a h) g (+) (b g) h``. Candidates that are not extreme in the current cone
are discarded immediately, so the working set always consists of extreme rays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cone import IneqSystem, residuation_extreme
from .extremality import is_extreme
from .maxplus import (
    DimensionError,
    Vector,
    canonical_basis,
    dot,
    normalize,
    scalar_mul,
    sort_key,
    vadd,
)

METHODS = ("hypergraph", "residuation")


class PreconditionError(ValueError):
    pass


def combine(g: Sequence, h: Sequence, a: Sequence, b: Sequence) -> Vector:
    """``(a h) g (+) (b g) h`` for ``a g <= b g`` and ``a h > b h``."""
    ag, bg, ah, bh = dot(a, g), dot(b, g), dot(a, h), dot(b, h)
    if not ag <= bg:
        raise PreconditionError("first vector must satisfy a x <= b x")
    if not ah > bh:
        raise PreconditionError("second vector must violate a x <= b x")
    return vadd(scalar_mul(ah, g), scalar_mul(bg, h))


@dataclass
class StepRecord:
    row: int
    n_le: int
    n_gt: int
    generated: int
    kept: int
    size_after: int


@dataclass
class EliminationTrace:
    d: int
    initial_size: int
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def final_size(self) -> int:
        return self.steps[-1].size_after if self.steps else self.initial_size

    @property
    def mean_intermediate(self) -> float:
        """Mean size of the generator sets fed to the elimination steps."""
        if not self.steps:
            return float(self.initial_size)
        sizes = [self.initial_size] + [s.size_after for s in self.steps[:-1]]
        return sum(sizes) / len(sizes)

    def summary_lines(self) -> list[str]:
        lines = [f"# initial {self.initial_size}"]
        for s in self.steps:
            lines.append(
                f"# row {s.row}: le={s.n_le} gt={s.n_gt} generated={s.generated} "
                f"kept={s.kept} size={s.size_after}"
            )
        lines.append(f"# final {self.final_size} mean_intermediate {self.mean_intermediate:.3f}")
        return lines


def _split(G, a, b):
    le, gt = [], []
    for g in G:
        (le if dot(a, g) <= dot(b, g) else gt).append(g)
    return le, gt


def intersect_halfspace(
    G: Sequence[Vector],
    a: Sequence,
    b: Sequence,
    full_system: IneqSystem,
    method: str = "hypergraph",
    record: StepRecord | None = None,
) -> list[Vector]:
    """Extreme rays of ``cone(G) /\\ {a x <= b x}``.

    ``G`` must consist of the extreme rays of the cone of ``full_system``
    without its last row ``(a, b)``.
    """
    if len(a) != full_system.d or len(b) != full_system.d:
        raise DimensionError("halfspace and system dimensions differ")
    le, gt = _split(G, a, b)
    kept = [normalize(g) for g in le]
    seen = set(kept)
    generated = 0
    if method == "hypergraph":
        for g in le:
            for h in gt:
                generated += 1
                c = normalize(combine(g, h, a, b))
                if c in seen:
                    continue
                seen.add(c)
                if is_extreme(c, full_system, check=False):
                    kept.append(c)
    elif method == "residuation":
        candidates = []
        for g in le:
            for h in gt:
                generated += 1
                c = normalize(combine(g, h, a, b))
                if c not in seen:
                    seen.add(c)
                    candidates.append(c)
        # test against accepted rays, G^<= and the combinations not yet tested
        pool = list(kept)
        n_base = len(pool)
        pool.extend(candidates)
        alive = [True] * len(pool)
        for k in range(n_base, len(pool)):
            others = [pool[j] for j in range(len(pool)) if alive[j] and j != k]
            if residuation_extreme(pool[k], others):
                kept.append(pool[k])
            else:
                alive[k] = False
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if record is not None:
        record.n_le, record.n_gt = len(le), len(gt)
        record.generated, record.kept, record.size_after = generated, len(kept), len(kept)
    return kept


def order_heuristic(rows: Sequence[int], S: IneqSystem, G: Sequence[Vector]) -> int:
    """Remaining row minimizing ``|G<=| * |G>|``; ties go to the lowest index."""
    if not rows:
        raise ValueError("no rows left to choose from")
    best, best_cost = None, None
    for k in sorted(rows):
        a, b = S.A[k], S.B[k]
        n_le = sum(1 for g in G if dot(a, g) <= dot(b, g))
        cost = n_le * (len(G) - n_le)
        if best_cost is None or cost < best_cost:
            best, best_cost = k, cost
    return best


def double_description(
    S: IneqSystem,
    method: str = "hypergraph",
    ordering: str = "heuristic",
    on_step: Callable[[int, IneqSystem, list[Vector], list[Vector]], None] | None = None,
) -> tuple[list[Vector], EliminationTrace]:
    """Run the elimination and return the canonically sorted rays and a trace.

    ``ordering`` is ``"heuristic"`` (dynamic choice by :func:`order_heuristic`)
    or ``"input"`` (rows in the given order). ``on_step`` is called after each
    step with ``(row, prefix_system, previous_rays, new_rays)``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if ordering not in ("heuristic", "input"):
        raise ValueError(f"unknown ordering {ordering!r}")
    G = canonical_basis(S.d)
    trace = EliminationTrace(S.d, len(G))
    remaining = list(range(S.n))
    chosen: list[int] = []
    while remaining:
        k = order_heuristic(remaining, S, G) if ordering == "heuristic" else remaining[0]
        remaining.remove(k)
        chosen.append(k)
        prefix = S.rows(chosen)
        rec = StepRecord(k, 0, 0, 0, 0, 0)
        new = intersect_halfspace(G, S.A[k], S.B[k], prefix, method=method, record=rec)
        trace.steps.append(rec)
        if on_step is not None:
            on_step(k, prefix, G, new)
        G = new
    return sorted(G, key=sort_key), trace


def compute_extreme(S: IneqSystem, ordering: str = "heuristic") -> list[Vector]:
    """One normalized representative per extreme ray, hypergraph test."""
    return double_description(S, "hypergraph", ordering)[0]


def compute_extreme_residuation(S: IneqSystem, ordering: str = "heuristic") -> list[Vector]:
    """Same output as :func:`compute_extreme`, using the residuation test."""
    return double_description(S, "residuation", ordering)[0]


def upper_bound(n: int, d: int) -> int:
    """McMullen's bound on the vertices of a d-polytope with n facets."""
    if not (n >= d >= 1):
        raise ValueError(f"upper_bound needs n >= d >= 1, got n={n}, d={d}")
    return math.comb(n - (d + 1) // 2, n - d) + math.comb(n - (d + 2) // 2, n - d)


def tropical_upper_bound(n: int, d: int) -> int:
    """Bound on the extreme rays of a cone of R_max^d cut out by n inequalities."""
    if n < 0 or d < 1:
        raise ValueError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    if d == 1:
        return 1
    return upper_bound(n + d, d - 1)


def canonical_rays(rays: Iterable[Sequence]) -> list[Vector]:
    """Normalized, deduplicated, sorted."""
    return sorted({normalize(r) for r in rays}, key=sort_key)
