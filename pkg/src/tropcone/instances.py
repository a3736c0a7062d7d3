"""Seeded instance generators and the worked examples used as golden tests."""

from __future__ import annotations

import random
from importlib import resources
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cone import IneqSystem
from .hypergraph import Hypergraph
from .maxplus import BOTTOM, Vector, canonical_basis as _basis

__all__ = [
    "RandomSpec",
    "canonical_basis",
    "random_system",
    "random_hypergraph",
    "random_hypergraph_of_size",
    "signed_cyclic_cone",
    "Fixture",
    "paper_fixtures",
    "data_path",
]


def canonical_basis(d: int) -> list[Vector]:
    return _basis(d)


@dataclass(frozen=True)
class RandomSpec:
    """Parameters of a random inequality system.

    Each coefficient is finite with probability ``density``; finite
    coefficients are uniform integers in ``coeff_range`` (inclusive).
    """

    d: int
    n: int
    density: float = 0.5
    coeff_range: tuple[int, int] = (-5, 5)
    seed: int = 0

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not (0 < self.density <= 1):
            raise ValueError("density must lie in (0, 1]")
        lo, hi = self.coeff_range
        if lo > hi:
            raise ValueError("empty coefficient range")

    def describe(self) -> str:
        lo, hi = self.coeff_range
        return f"d{self.d}-n{self.n}-p{self.density:g}-r{lo}:{hi}-s{self.seed}"


def _random_row(rng: random.Random, spec: RandomSpec) -> list:
    lo, hi = spec.coeff_range
    return [rng.randint(lo, hi) if rng.random() < spec.density else BOTTOM for _ in range(spec.d)]


def random_system(spec: RandomSpec) -> IneqSystem:
    """Random system; a pure function of ``spec``.

    Rows whose right side is all BOTTOM while the left side is not are
    resampled, since they would only force coordinates to BOTTOM.
    """
    rng = random.Random(spec.seed)
    A, B = [], []
    while len(A) < spec.n:
        a, b = _random_row(rng, spec), _random_row(rng, spec)
        if all(v == BOTTOM for v in b) and any(v != BOTTOM for v in a):
            continue
        A.append(tuple(a))
        B.append(tuple(b))
    return IneqSystem(tuple(A), tuple(B), spec.d)


def random_hypergraph(node_count: int, edge_count: int, max_tail: int, max_head: int, seed: int) -> Hypergraph:
    """Hyperedges with uniformly sized, uniformly drawn tails and heads."""
    if node_count < 1 or max_tail < 1 or max_head < 1 or edge_count < 0:
        raise ValueError("bounds must be at least 1 (edge_count at least 0)")
    rng = random.Random(seed)
    nodes = range(node_count)
    edges = []
    for _ in range(edge_count):
        t = rng.sample(nodes, rng.randint(1, min(max_tail, node_count)))
        h = rng.sample(nodes, rng.randint(1, min(max_head, node_count)))
        edges.append((t, h))
    return Hypergraph.from_edges(node_count, edges)


def random_hypergraph_of_size(size: int, seed: int, max_tail: int = 3, max_head: int = 3) -> Hypergraph:
    """Random hypergraph whose ``hsize`` is close to ``size`` (within one edge)."""
    rng = random.Random(seed)
    node_count = max(1, size // 5)
    nodes = range(node_count)
    edges = []
    total = node_count
    while total < size:
        t = rng.sample(nodes, rng.randint(1, min(max_tail, node_count)))
        h = rng.sample(nodes, rng.randint(1, min(max_head, node_count)))
        edges.append((t, h))
        total += len(t) + len(h)
    return Hypergraph.from_edges(node_count, edges)


def signed_cyclic_cone(d: int, n: int) -> IneqSystem:
    raise NotImplementedError(
        "tropical signed cyclic polyhedral cones are not constructed here; "
        "their definition lives in the literature on tropical upper bound theorems"
    )


@dataclass(frozen=True)
class Fixture:
    name: str
    value: Any
    expected: dict = field(default_factory=dict)


_ = BOTTOM


def _fig1() -> IneqSystem:
    # x3 <= x1 + 2 ; x1 <= max(x2, x3) ; x1 <= x3 + 2 ; x3 <= max(x1, x2 - 1)
    A = [(_, _, 0), (0, _, _), (0, _, _), (_, _, 0)]
    B = [(2, _, _), (_, 0, 0), (_, _, 2), (0, -1, _)]
    return IneqSystem(tuple(A), tuple(B), 3)


def paper_fixtures() -> dict[str, Fixture]:
    """The running examples: a cone in dimension 3 (plus its cut by
    ``x2 <= x3 + 5/2``), and two small hypergraphs."""
    fig1 = _fig1()
    rays = [(_, 0, _), (-2, 1, 0), (2, 2, 0), (0, _, 0)]
    fig3 = fig1.append((_, 0, _), (_, _, Fraction(5, 2)))
    # nodes u v w x y t
    fig5 = Hypergraph.from_edges(
        6,
        [([0], [1]), ([1], [2]), ([2], [0]), ([1, 2], [3, 4]), ([2, 4], [5])],
        labels=("u", "v", "w", "x", "y", "t"),
    )
    # nodes u v t x y
    appF = Hypergraph.from_edges(
        5,
        [([0], [2]), ([1], [2]), ([3], [0]), ([4], [1]), ([0, 2], [3]), ([2, 1], [4])],
        labels=("u", "v", "t", "x", "y"),
    )
    return {
        "fig1": Fixture("fig1", fig1, {"rays": rays, "type_of_g2": 0}),
        "fig3": Fixture("fig3", fig3, {
            "extreme": [(-2, Fraction(5, 2), 0)],
            "not_extreme": [(2, Fraction(5, 2), 0), (0, Fraction(5, 2), 0)],
        }),
        "fig5": Fixture("fig5", fig5, {"nb": 3, "minimal": [{"x"}, {"y"}, {"t"}]}),
        "appF": Fixture("appF", appF, {"nb": 1, "minimal": [{"t"}]}),
    }


def data_path(name: str):
    """Path of a fixture file shipped in the package (``fig1.hrep``, ``fig5.hg``, ...)."""
    return resources.files("tropcone") / "data" / name
