"""Exact max-plus scalars and vectors.

Scalars are :class:`fractions.Fraction` values or :data:`BOTTOM`, the
tropical zero.  ``BOTTOM`` is ``float('-inf')``: it compares below every
Fraction and absorbs addition, which is exactly the max-plus semantics, and
it is the only float ever admitted.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

BOTTOM = float("-inf")
INFINITY = math.inf

Scalar = Union[Fraction, float]


class DimensionError(ValueError):
    pass


def is_bottom(x) -> bool:
    return x == BOTTOM


def to_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar.

    Accepts ints, Fractions, ``BOTTOM`` and the text encoding (``"3"``,
    ``"-7/2"``, ``"-inf"``).  Finite floats are rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value == BOTTOM:
            return BOTTOM
        raise TypeError(f"floating-point value {value!r} is not exact; use a Fraction or 'p/q'")
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def parse_scalar(text: str) -> Scalar:
    s = text.strip()
    if s == "-inf":
        return BOTTOM
    num, sep, den = s.partition("/")
    try:
        if sep:
            d = int(den)
            if d <= 0:
                raise ValueError
            return Fraction(int(num), d)
        return Fraction(int(num))
    except ValueError:
        raise ValueError(f"invalid rational {text!r}: expected an integer, 'p/q' with q > 0, or '-inf'") from None


def format_scalar(x: Scalar) -> str:
    if x == BOTTOM:
        return "-inf"
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Point(tuple):
    """A point of the tropical projective space.

    Stored in canonical form: the first finite coordinate is 0.  Two points
    compare equal exactly when they are projectively equal.
    """

    def __new__(cls, coords: Iterable) -> "Point":
        values = [to_scalar(v) for v in coords]
        if len(values) < 2:
            raise DimensionError(f"points need dimension n >= 2, got {len(values)}")
        finite = [v for v in values if v != BOTTOM]
        if not finite:
            raise ValueError("the all-bottom vector is not a projective point")
        shift = finite[0]
        return super().__new__(cls, (v - shift if v != BOTTOM else BOTTOM for v in values))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, v in enumerate(self) if v != BOTTOM)

    def is_finite(self) -> bool:
        return all(v != BOTTOM for v in self)

    def __repr__(self) -> str:
        return "Point(" + ", ".join(format_scalar(v) for v in self) + ")"


def _check_dims(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")


def tropical_add(x: Sequence, y: Sequence) -> Point:
    _check_dims(x, y)
    return Point(max(a, b) for a, b in zip(x, y))


def scale(lam, x: Sequence) -> tuple:
    """Tropical scalar multiple ``lam x`` as a raw coordinate tuple.

    Projectively this is the identity; wrap the result in :class:`Point`
    to see that.
    """
    lam = to_scalar(lam)
    if lam == BOTTOM:
        raise ValueError("scaling by bottom yields the zero vector, which is not a projective point")
    return tuple(lam + v if v != BOTTOM else BOTTOM for v in x)


def inner(x: Sequence, y: Sequence) -> Scalar:
    """Tropical inner product ``max_i (x_i + y_i)``."""
    _check_dims(x, y)
    best = BOTTOM
    for a, b in zip(x, y):
        if a != BOTTOM and b != BOTTOM and a + b > best:
            best = a + b
    return best


def inverse(x: Sequence, indices: Iterable[int] | None = None) -> tuple:
    """The vector ``-x``, restricted to ``indices`` (bottom elsewhere) if given.

    Every kept coordinate must be finite.
    """
    keep = range(len(x)) if indices is None else set(indices)
    out = []
    for i, v in enumerate(x):
        if i in keep:
            if v == BOTTOM:
                raise ValueError(f"coordinate {i + 1} is bottom and has no inverse")
            out.append(-v)
        else:
            out.append(BOTTOM)
    return tuple(out)


def unit_vector(n: int, i: int) -> tuple:
    return tuple(Fraction(0) if k == i else BOTTOM for k in range(n))


def hilbert_distance(x: Sequence, y: Sequence):
    """Projective Hilbert distance; ``math.inf`` when the supports differ."""
    _check_dims(x, y)
    sx = [i for i, v in enumerate(x) if v != BOTTOM]
    sy = [i for i, v in enumerate(y) if v != BOTTOM]
    if sx != sy:
        return INFINITY
    diffs = [x[i] - y[i] for i in sx]
    return max(diffs) - min(diffs)


def argmax_terms(u: Sequence, x: Sequence, indices: Iterable[int]) -> frozenset:
    """Indices ``i`` in ``indices`` attaining ``max (u_i + x_i)``, exact ties included."""
    terms = {}
    for i in indices:
        if u[i] != BOTTOM and x[i] != BOTTOM:
            terms[i] = u[i] + x[i]
    if not terms:
        raise ValueError("every term of the maximum is bottom")
    best = max(terms.values())
    return frozenset(i for i, t in terms.items() if t == best)
