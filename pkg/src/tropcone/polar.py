"""The j-th polar of a cone and the external representation it induces.

Non-trivial extreme vectors are found by exhaustive search over a finite
candidate grid: any finite off-j coordinate of an extreme vector ``u`` (with
``u_j = 0``) must equal ``v^r_j - v^r_i`` for some generator ``r``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cone import Cone
from .errors import CandidateCapExceeded, PreconditionError
from .halfspace import GeneralHalfSpace, HalfSpace, saturate
from .semiring import BOTTOM, format_scalar

DEFAULT_CANDIDATE_CAP = 10**6


@dataclass(frozen=True)
class PolarVector:
    """Element of the j-th polar, normalized so that ``u[j] == 0``."""

    j: int
    u: tuple

    def __post_init__(self):
        if self.u[self.j] == BOTTOM:
            raise ValueError("polar vectors handled here need a finite j-th coordinate")
        shift = self.u[self.j]
        object.__setattr__(self, "u", tuple(x - shift if x != BOTTOM else BOTTOM for x in self.u))

    def halfspace(self) -> GeneralHalfSpace:
        """The inequality ``max_{i != j}(u_i + x_i) >= u_j + x_j`` as a half-space."""
        lhs = [i for i, x in enumerate(self.u) if i != self.j and x != BOTTOM]
        if not lhs:
            raise ValueError("the vector e^j is not in any polar")
        alpha = {h: -self.u[h] for h in lhs + [self.j]}
        return GeneralHalfSpace(len(self.u), lhs, [self.j], alpha)

    def __repr__(self) -> str:
        return f"PolarVector(j={self.j + 1}, u=({', '.join(format_scalar(x) for x in self.u)}))"


def _terms(u: Sequence, v: Sequence) -> list:
    return [ui + vi if ui != BOTTOM else BOTTOM for ui, vi in zip(u, v)]


def in_polar(c: Cone, j: int, u: Sequence) -> bool:
    for v in c.generators:
        t = _terms(u, v)
        if max((t[i] for i in range(c.n) if i != j), default=BOTTOM) < t[j]:
            return False
    return True


def is_extreme_polar(c: Cone, j: int, u: Sequence) -> bool:
    """Extremality of ``u`` (with ``u_j`` finite) in the j-th polar.

    Each finite ``u_i`` (``i != j``) needs a generator with
    ``u_i + v_i = u_j + v_j > max_{k not in {i, j}} (u_k + v_k)``.
    """
    if u[j] == BOTTOM:
        raise PreconditionError("u_j must be finite")
    if not in_polar(c, j, u):
        raise PreconditionError("u is not in the j-th polar")
    rows = [_terms(u, v) for v in c.generators]
    for i in range(c.n):
        if i == j or u[i] == BOTTOM:
            continue
        if not any(
            t[i] == t[j] and t[j] > max((t[k] for k in range(c.n) if k not in (i, j)), default=BOTTOM)
            for t in rows
        ):
            return False
    return True


def enumerate_polar_extremes(c: Cone, j: int, cap: int = DEFAULT_CANDIDATE_CAP) -> list:
    """All non-trivial extreme vectors of the j-th polar, with ``u_j = 0``."""
    if not 0 <= j < c.n:
        raise ValueError(f"index {j + 1} out of range 1..{c.n}")
    choices = []
    for i in range(c.n):
        if i == j:
            choices.append((Fraction(0),))
        else:
            choices.append(tuple(sorted({v[j] - v[i] for v in c.generators})) + (BOTTOM,))
    total = 1
    for ch in choices:
        total *= len(ch)
    if total > cap:
        raise CandidateCapExceeded(f"{total} candidates for j={j + 1} exceed the cap of {cap}")
    out = []
    for u in itertools.product(*choices):
        if all(u[i] == BOTTOM for i in range(c.n) if i != j):
            continue
        if in_polar(c, j, u) and is_extreme_polar(c, j, u):
            out.append(PolarVector(j, u))
    return out


@dataclass(frozen=True)
class InitialHalfSpace:
    halfspace: HalfSpace
    sources: tuple  # PolarVectors whose saturation gives this half-space


def initial_representation_with_sources(c: Cone, cap: int = DEFAULT_CANDIDATE_CAP) -> list:
    order = []
    sources = {}
    for j in range(c.n):
        for pv in enumerate_polar_extremes(c, j, cap):
            h = saturate(pv.halfspace(), c)
            if h not in sources:
                sources[h] = []
                order.append(h)
            sources[h].append(pv)
    return [InitialHalfSpace(h, tuple(sources[h])) for h in order]


def initial_representation(c: Cone, cap: int = DEFAULT_CANDIDATE_CAP) -> list:
    """Saturations of the half-spaces of all non-trivial polar extremes, deduplicated."""
    return [entry.halfspace for entry in initial_representation_with_sources(c, cap)]
