"""Exact max-plus arithmetic on scalars, vectors and matrices.

A scalar is either ``BOTTOM`` (the tropical zero, -inf) or an exact rational
stored as ``int`` or ``fractions.Fraction``. Vectors are tuples of scalars and
matrices are tuples of row tuples. Nothing here ever produces a finite float.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, float]
Vector = tuple
Matrix = tuple

#: Tropical zero. The only float value a scalar may take.
BOTTOM = float("-inf")
#: Tropical unit.
UNIT = 0


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


class ZeroVectorError(ValueError):
    """An all-BOTTOM vector was given where a ray representative is needed."""


def is_bottom(a) -> bool:
    return a == BOTTOM


def scalar(value) -> Scalar:
    """Coerce ``value`` to a canonical exact scalar.

    Accepts ints, Fractions, ``BOTTOM`` and strings in the text syntax
    (``-inf``, ``2``, ``-2.5``, ``5/2``). Finite floats are rejected because
    they cannot be represented exactly in general.
    """
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool):
        raise TypeError("booleans are not max-plus scalars")
    if isinstance(value, float):
        if value == BOTTOM:
            return BOTTOM
        raise TypeError(f"finite float {value!r} is not an exact scalar; use Fraction or a string")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        f = Fraction(value)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"cannot interpret {value!r} as a max-plus scalar")


def parse_scalar(text: str) -> Scalar:
    s = text.strip()
    if s.lower() in ("-inf", "-infinity", "bot", "bottom"):
        return BOTTOM
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid scalar literal {text!r}") from None
    return f.numerator if f.denominator == 1 else f


def format_scalar(a: Scalar) -> str:
    if a == BOTTOM:
        return "-inf"
    f = Fraction(a)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def vector(values: Iterable) -> Vector:
    v = tuple(scalar(x) for x in values)
    if not v:
        raise DimensionError("vectors must have at least one entry")
    return v


def matrix(rows: Iterable[Iterable], cols: int | None = None) -> Matrix:
    m = tuple(tuple(scalar(x) for x in row) for row in rows)
    widths = {len(r) for r in m}
    if cols is not None:
        widths.add(cols)
    if len(widths) > 1:
        raise DimensionError(f"ragged matrix: row lengths {sorted(widths)}")
    return m


def tadd(a: Scalar, b: Scalar) -> Scalar:
    """Tropical sum ``max(a, b)``."""
    return a if a >= b else b


def tmul(a: Scalar, b: Scalar) -> Scalar:
    """Tropical product ``a + b``; BOTTOM is absorbing."""
    if a == BOTTOM or b == BOTTOM:
        return BOTTOM
    return a + b


def dot(row: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """Max-plus inner product ``max_i (row_i + x_i)``."""
    if len(row) != len(x):
        raise DimensionError(f"row has length {len(row)}, vector has length {len(x)}")
    best = BOTTOM
    for c, v in zip(row, x):
        if c != BOTTOM and v != BOTTOM:
            s = c + v
            if s > best:
                best = s
    return best


def mat_vec(M: Sequence[Sequence[Scalar]], x: Sequence[Scalar]) -> Vector:
    return tuple(dot(row, x) for row in M)


def vadd(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    """Entrywise tropical sum of two vectors."""
    if len(x) != len(y):
        raise DimensionError("vectors of different lengths")
    return tuple(a if a >= b else b for a, b in zip(x, y))


def scalar_mul(lam: Scalar, x: Sequence[Scalar]) -> Vector:
    if lam == BOTTOM:
        return (BOTTOM,) * len(x)
    return tuple(BOTTOM if v == BOTTOM else lam + v for v in x)


def argmax_set(c: Sequence[Scalar], g: Sequence[Scalar]) -> frozenset[int]:
    """Indices (0-based) attaining the maximum in ``c g``.

    When ``c g`` is BOTTOM every index attains it, so the full index set is
    returned.
    """
    value = dot(c, g)
    if value == BOTTOM:
        return frozenset(range(len(g)))
    return frozenset(
        i for i, (ci, gi) in enumerate(zip(c, g))
        if ci != BOTTOM and gi != BOTTOM and ci + gi == value
    )


def support(x: Sequence[Scalar]) -> tuple[int, ...]:
    """Sorted 0-based indices of the non-BOTTOM entries."""
    return tuple(i for i, v in enumerate(x) if v != BOTTOM)


def is_zero(x: Sequence[Scalar]) -> bool:
    return all(v == BOTTOM for v in x)


def normalize(x: Sequence[Scalar]) -> Vector:
    """Rescale ``x`` so that its first non-BOTTOM entry is 0."""
    for v in x:
        if v != BOTTOM:
            return scalar_mul(-v, x) if v != 0 else tuple(x)
    raise ZeroVectorError("the zero vector represents no ray")


def proportional(x: Sequence[Scalar], y: Sequence[Scalar]) -> bool:
    """True iff ``y = lam (x) x`` for some finite ``lam``."""
    if len(x) != len(y):
        raise DimensionError("vectors of different lengths")
    zx, zy = is_zero(x), is_zero(y)
    if zx or zy:
        return zx and zy
    return normalize(x) == normalize(y)


def canonical_basis(d: int) -> list[Vector]:
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return [tuple(UNIT if j == i else BOTTOM for j in range(d)) for i in range(d)]


def format_vector(x: Sequence[Scalar]) -> str:
    return " ".join(format_scalar(v) for v in x)


def sort_key(x: Sequence[Scalar]) -> tuple:
    """Total order used to canonicalize output (BOTTOM sorts first)."""
    return tuple((0, 0) if v == BOTTOM else (1, Fraction(v)) for v in x)
