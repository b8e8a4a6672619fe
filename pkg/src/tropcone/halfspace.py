"""Tropical half-spaces, saturation onto a cone, and minimality."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .cone import Cone, check_conditions, contains
from .errors import PreconditionError
from .semiring import BOTTOM, DimensionError, Point, format_scalar, to_scalar


def _side_max(indices, alpha, x):
    best = BOTTOM
    for i in indices:
        if x[i] != BOTTOM and x[i] - alpha[i] > best:
            best = x[i] - alpha[i]
    return best


def _side_argmax(indices, alpha, x) -> frozenset:
    best = _side_max(indices, alpha, x)
    if best == BOTTOM:
        return frozenset()
    return frozenset(i for i in indices if x[i] != BOTTOM and x[i] - alpha[i] == best)


class _Sides:
    """Shared evaluation of ``max_{i in lhs}(x_i - alpha_i) >= max_{j in rhs}(x_j - alpha_j)``."""

    n: int
    lhs: frozenset
    rhs: frozenset
    alpha: tuple

    def _check(self, x: Sequence) -> None:
        if len(x) != self.n:
            raise DimensionError(f"point has dimension {len(x)}, half-space lives in dimension {self.n}")

    def sides(self, x: Sequence) -> tuple:
        self._check(x)
        return _side_max(self.lhs, self.alpha, x), _side_max(self.rhs, self.alpha, x)

    def member(self, x: Sequence) -> bool:
        left, right = self.sides(x)
        return left >= right

    def is_active(self, z: Sequence) -> bool:
        left, right = self.sides(z)
        return left == right

    def argmax_sides(self, z: Sequence) -> tuple:
        self._check(z)
        return _side_argmax(self.lhs, self.alpha, z), _side_argmax(self.rhs, self.alpha, z)

    def __contains__(self, x) -> bool:
        return self.member(x)


@dataclass(frozen=True, eq=True)
class HalfSpace(_Sides):
    """Non-degenerate half-space ``H(apex, sectors)`` (sectors 0-based)."""

    apex: Point
    sectors: frozenset

    def __init__(self, apex, sectors: Iterable[int]):
        a = apex if isinstance(apex, Point) else Point(apex)
        if not a.is_finite():
            raise ValueError("the apex of a non-degenerate half-space must be finite")
        sect = frozenset(sectors)
        if not sect or len(sect) >= len(a) or not sect <= set(range(len(a))):
            raise ValueError(f"sectors must be a proper non-empty subset of 1..{len(a)}")
        object.__setattr__(self, "apex", a)
        object.__setattr__(self, "sectors", sect)

    @property
    def n(self) -> int:
        return len(self.apex)

    @property
    def lhs(self) -> frozenset:
        return self.sectors

    @property
    def rhs(self) -> frozenset:
        return frozenset(range(self.n)) - self.sectors

    @property
    def alpha(self) -> tuple:
        return tuple(self.apex)

    def to_general(self) -> "GeneralHalfSpace":
        return GeneralHalfSpace(self.n, self.sectors, self.rhs, dict(enumerate(self.apex)))

    def __repr__(self) -> str:
        coords = ", ".join(format_scalar(v) for v in self.apex)
        return f"H(({coords}), {sorted(i + 1 for i in self.sectors)})"


@dataclass(frozen=True, eq=True)
class GeneralHalfSpace(_Sides):
    """``max_{i in I}(x_i - alpha_i) >= max_{j in J}(x_j - alpha_j)``, possibly degenerate.

    ``alpha`` is stored as a length-``n`` tuple (bottom outside ``I | J``),
    shifted so that its first finite entry is 0; equality therefore ignores a
    common additive constant.
    """

    n: int
    lhs: frozenset
    rhs: frozenset
    alpha: tuple

    def __init__(self, n: int, I: Iterable[int], J: Iterable[int], alpha: Mapping[int, object] | Sequence):
        I, J = frozenset(I), frozenset(J)
        if not I or not J:
            raise ValueError("both index sets must be non-empty")
        if I & J:
            raise ValueError("index sets must be disjoint")
        if not (I | J) <= set(range(n)):
            raise ValueError(f"indices must lie in 1..{n}")
        if isinstance(alpha, Mapping):
            coeffs = {int(k): to_scalar(v) for k, v in alpha.items()}
        else:
            coeffs = {k: to_scalar(v) for k, v in enumerate(alpha)}
        vec = []
        for h in range(n):
            if h in I or h in J:
                if h not in coeffs or coeffs[h] == BOTTOM:
                    raise ValueError(f"missing finite coefficient for index {h + 1}")
                vec.append(coeffs[h])
            else:
                vec.append(BOTTOM)
        shift = next(v for v in vec if v != BOTTOM)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "lhs", I)
        object.__setattr__(self, "rhs", J)
        object.__setattr__(self, "alpha", tuple(v - shift if v != BOTTOM else BOTTOM for v in vec))

    @property
    def is_degenerate(self) -> bool:
        return len(self.lhs | self.rhs) < self.n

    def to_halfspace(self) -> HalfSpace:
        if self.is_degenerate:
            raise ValueError("a degenerate half-space has no apex")
        return HalfSpace(self.alpha, self.lhs)

    def __repr__(self) -> str:
        a = {h + 1: format_scalar(self.alpha[h]) for h in sorted(self.lhs | self.rhs)}
        return f"GeneralHalfSpace(I={sorted(i + 1 for i in self.lhs)}, J={sorted(j + 1 for j in self.rhs)}, alpha={a})"


def member(h, x: Sequence) -> bool:
    return h.member(x)


def contains_cone(h, c: Cone) -> bool:
    """Half-spaces are tropical cones, so checking the generators is exact."""
    return all(h.member(v) for v in c.generators)


@dataclass(frozen=True)
class Saturation:
    halfspace: HalfSpace
    beta: tuple
    lambdas: tuple


def saturation(g, c: Cone) -> Saturation:
    """Saturate a half-space containing ``c`` onto one with apex in ``c``.

    With ``lambda_r = -max_{h in I|J}(v^r_h - alpha_h)`` the new apex is
    ``beta = max_r (lambda_r + v^r)`` and the new sectors are the indices of
    ``I`` where ``alpha`` is tight.  The result satisfies
    ``c <= H(beta, I') <= g``.
    """
    if isinstance(g, HalfSpace):
        g = g.to_general()
    if g.n != c.n:
        raise DimensionError(f"half-space dimension {g.n} does not match cone dimension {c.n}")
    for r, v in enumerate(c.generators):
        if not g.member(v):
            raise PreconditionError(f"generator {r + 1} {v!r} lies outside the half-space; saturation needs a containing half-space")
    support = g.lhs | g.rhs
    lambdas = tuple(-max(v[h] - g.alpha[h] for h in support) for v in c.generators)
    beta = tuple(max(lam + v[i] for lam, v in zip(lambdas, c.generators)) for i in range(c.n))
    tight = frozenset(i for i in g.lhs if g.alpha[i] == beta[i])
    return Saturation(HalfSpace(beta, tight), beta, lambdas)


def saturate(g, c: Cone) -> HalfSpace:
    return saturation(g, c).halfspace


def is_minimal(h: HalfSpace, c: Cone) -> bool:
    cond = check_conditions(c, h.apex, h.sectors)
    return cond.C1 and cond.C2 and cond.C3


def apex_in_cone(h: HalfSpace, c: Cone) -> bool:
    return contains(c, h.apex)
