"""Tropical cones: H- and V-representations, membership and homogenization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .maxplus import (
    BOTTOM,
    UNIT,
    DimensionError,
    Matrix,
    Scalar,
    Vector,
    ZeroVectorError,
    dot,
    is_zero,
    matrix,
    normalize,
    proportional,
    vector,
)


@dataclass(frozen=True)
class IneqSystem:
    """The cone ``{x | A x <= B x}`` given by two ``n x d`` max-plus matrices."""

    A: Matrix
    B: Matrix
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise DimensionError("dimension must be at least 1")
        if len(self.A) != len(self.B):
            raise DimensionError(f"A has {len(self.A)} rows but B has {len(self.B)}")
        for M, name in ((self.A, "A"), (self.B, "B")):
            for k, row in enumerate(M):
                if len(row) != self.d:
                    raise DimensionError(f"row {k} of {name} has length {len(row)}, expected {self.d}")

    @classmethod
    def from_rows(cls, A: Iterable[Iterable], B: Iterable[Iterable], d: int | None = None) -> "IneqSystem":
        A, B = matrix(A), matrix(B)
        if d is None:
            if not A:
                raise DimensionError("dimension must be given for a system without rows")
            d = len(A[0])
        return cls(A, B, d)

    @property
    def n(self) -> int:
        return len(self.A)

    def row(self, k: int) -> tuple[Vector, Vector]:
        return self.A[k], self.B[k]

    def rows(self, indices: Iterable[int]) -> "IneqSystem":
        idx = list(indices)
        return IneqSystem(tuple(self.A[k] for k in idx), tuple(self.B[k] for k in idx), self.d)

    def append(self, a: Sequence[Scalar], b: Sequence[Scalar]) -> "IneqSystem":
        return IneqSystem(self.A + (vector(a),), self.B + (vector(b),), self.d)

    def pad(self, extra: int) -> "IneqSystem":
        """Add ``extra`` trailing columns of BOTTOM."""
        tail = (BOTTOM,) * extra
        return IneqSystem(
            tuple(r + tail for r in self.A), tuple(r + tail for r in self.B), self.d + extra
        )


@dataclass(frozen=True)
class AffineSystem:
    """The tropical polyhedron ``{x | A x (+) c <= B x (+) e}``."""

    A: Matrix
    c: Vector
    B: Matrix
    e: Vector
    d: int

    def __post_init__(self):
        n = len(self.A)
        if not (len(self.B) == len(self.c) == len(self.e) == n):
            raise DimensionError("A, c, B and e must have the same number of rows")
        if any(len(r) != self.d for r in self.A + self.B):
            raise DimensionError("matrix rows must have length d")

    def satisfied_by(self, x: Sequence[Scalar]) -> bool:
        for a, c, b, e in zip(self.A, self.c, self.B, self.e):
            lhs = max(dot(a, x), c)
            rhs = max(dot(b, x), e)
            if lhs > rhs:
                return False
        return True


def _check_dim(S: IneqSystem, x: Sequence[Scalar]):
    if len(x) != S.d:
        raise DimensionError(f"vector has length {len(x)}, system has dimension {S.d}")


def satisfies(S: IneqSystem, x: Sequence[Scalar]) -> bool:
    """Membership of ``x`` in the cone defined by ``S``."""
    _check_dim(S, x)
    return all(dot(a, x) <= dot(b, x) for a, b in zip(S.A, S.B))


def residual(g: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """Greatest ``lam`` with ``lam (x) g <= x``.

    BOTTOM when ``x`` vanishes somewhere on the support of ``g``.
    """
    if len(g) != len(x):
        raise DimensionError("vectors of different lengths")
    lam = None
    for gi, xi in zip(g, x):
        if gi == BOTTOM:
            continue
        if xi == BOTTOM:
            return BOTTOM
        q = xi - gi
        if lam is None or q < lam:
            lam = q
    if lam is None:
        raise ZeroVectorError("residual by the zero vector is undefined")
    return lam


def _greatest_subcombination(gens: Iterable[Sequence[Scalar]], x: Sequence[Scalar]) -> list:
    acc = [BOTTOM] * len(x)
    for g in gens:
        lam = residual(g, x)
        if lam == BOTTOM:
            continue
        for i, gi in enumerate(g):
            if gi != BOTTOM:
                v = lam + gi
                if v > acc[i]:
                    acc[i] = v
    return acc


def member(G: Iterable[Sequence[Scalar]], x: Sequence[Scalar]) -> bool:
    """True iff ``x`` is a tropical linear combination of the vectors in ``G``."""
    return tuple(_greatest_subcombination(G, x)) == tuple(x)


def residuation_extreme(h: Sequence[Scalar], H: Iterable[Sequence[Scalar]]) -> bool:
    """Classical extremality test: ``h`` is not generated by the elements of
    ``H`` that are not proportional to it."""
    if is_zero(h):
        raise ZeroVectorError("the zero vector is never extreme")
    others = [g for g in H if not proportional(g, h)]
    return tuple(_greatest_subcombination(others, h)) != tuple(h)


def homogenize(S: AffineSystem) -> IneqSystem:
    """Lift ``A x (+) c <= B x (+) e`` to the cone ``[A|c] y <= [B|e] y`` in
    dimension ``d + 1``; a point ``x`` corresponds to ``(x, 0)``."""
    A = tuple(tuple(row) + (c,) for row, c in zip(S.A, S.c))
    B = tuple(tuple(row) + (e,) for row, e in zip(S.B, S.e))
    return IneqSystem(A, B, S.d + 1)


def lift_point(x: Sequence[Scalar]) -> Vector:
    return tuple(x) + (UNIT,)


def dehomogenize(G: Iterable[Sequence[Scalar]]) -> tuple[list[Vector], list[Vector]]:
    """Split generators of a homogenized cone into extreme points and rays.

    Generators with a finite last coordinate are rescaled so that it becomes 0
    and truncated (points); the others are truncated (rays).
    """
    points, rays = [], []
    for g in G:
        last = g[-1]
        if last == BOTTOM:
            rays.append(normalize(g[:-1]))
        else:
            points.append(tuple(BOTTOM if v == BOTTOM else v - last for v in g[:-1]))
    return points, rays
