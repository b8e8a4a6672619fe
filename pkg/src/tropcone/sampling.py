"""Randomized corroboration of exact verdicts.

Nothing here decides anything; the samplers only hunt for counterexamples.
Samples are ``a + y / q`` with integer offsets ``y``.  After scaling by a
common denominator every membership test is integer arithmetic.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional, Sequence

from .cone import Cone, contains
from .errors import VerificationError
from .hypergraph import reachable_set, tangent_hypergraph
from .semiring import BOTTOM, Point

STEPS = 64  # grid resolution: one unit is split into STEPS * 3n offsets


class _Frame:
    """Half-spaces and a base point rescaled to integers."""

    def __init__(self, halfspaces: Sequence, base: Sequence, q: int):
        dens = [Fraction(x).denominator for x in base]
        for h in halfspaces:
            dens += [x.denominator for x in h.alpha if x != BOTTOM]
        self.unit = math.lcm(*dens)
        self.q = q
        s = self.unit * q
        self.base = [int(x * s) for x in base]
        self.rows = [
            (tuple(h.lhs), tuple(h.rhs), tuple(int(x * s) if x != BOTTOM else 0 for x in h.alpha))
            for h in halfspaces
        ]

    def point(self, y: Sequence[int]) -> list:
        return [b + yi * self.unit for b, yi in zip(self.base, y)]

    @staticmethod
    def inside(row, x) -> bool:
        lhs, rhs, al = row
        return max(x[i] - al[i] for i in lhs) >= max(x[j] - al[j] for j in rhs)

    def fraction(self, x) -> tuple:
        s = self.unit * self.q
        return tuple(Fraction(v, s) for v in x)


def _chain_offsets(rng: random.Random, g, n: int, q: int) -> list:
    # lower level sets {y < t} must be closed in the tangent hypergraph
    levels = [0] * n
    reached = frozenset()
    value = 0
    while len(reached) < n:
        seed = rng.choice([i for i in range(n) if i not in reached])
        grown = reachable_set(g, reached | {seed})
        for i in grown - reached:
            levels[i] = value
        reached = grown
        value += rng.randint(1, 3)
    step = rng.randint(1, q // max(value, 1))
    return [lv * step for lv in levels]


def _samples(gamma: Sequence, a: Point, count: int, seed: int, extra: Sequence = ()):
    """Integer frame plus integer points of the intersection of ``gamma`` near ``a``.

    ``extra`` half-spaces only join the common denominator, so that callers can
    test them in the same frame (their rows follow those of ``gamma``).
    """
    rng = random.Random(seed)
    n = len(a)
    q = STEPS * 3 * n
    frame = _Frame(list(gamma) + list(extra), a, q)
    rows = frame.rows[: len(gamma)]
    g, _ = tangent_hypergraph(gamma, a)
    points = [frame.point([0] * n)]
    tries = 0
    while len(points) < count:
        tries += 1
        if tries > 50 * count + 1000:
            raise VerificationError(f"sampler accepted only {len(points)} of {count} points")
        if rng.random() < 0.6:
            y = _chain_offsets(rng, g, n, q)
        else:
            span = q >> rng.randint(0, 6)
            y = [rng.randint(-span, span) for _ in range(n)]
        if max(y) - min(y) > q:
            continue
        x = frame.point(y)
        if all(frame.inside(row, x) for row in rows):
            points.append(x)
    return frame, points


def sample_near_apex(gamma: Sequence, a: Sequence, count: int, seed: int = 0) -> list:
    """Points of the intersection of ``gamma`` within Hilbert distance 1 of ``a``."""
    frame, points = _samples(gamma, Point(a), count, seed)
    return [frame.fraction(x) for x in points]


def corroborate_redundant(h, gamma: Sequence, samples: int = 300, seed: int = 0) -> Optional[tuple]:
    """Return a sampled point of the intersection outside ``h``, or None."""
    frame, points = _samples(gamma, h.apex, samples, seed, extra=[h])
    row = frame.rows[-1]
    for x in points:
        if not frame.inside(row, x):
            return frame.fraction(x)
    return None


def falsify_representation(cone: Cone, halfspaces: Sequence, samples: int = 1000, seed: int = 0) -> Optional[tuple]:
    """Look for a point in every half-space but outside the cone.

    Candidates sit near the generators and the apices: either a random
    perturbation, or the center with a random subset of coordinates raised,
    which is the shape separating points take near an apex.
    """
    rng = random.Random(seed)
    centers = list(cone.generators) + [h.apex for h in halfspaces if hasattr(h, "apex")]
    n = cone.n
    for _ in range(samples):
        c = rng.choice(centers)
        size = Fraction(2, 2 ** rng.randint(0, 7))
        if rng.random() < 0.5:
            raised = rng.sample(range(n), rng.randint(1, n - 1))
            x = tuple(ci + size if i in raised else ci for i, ci in enumerate(c))
        else:
            x = tuple(ci + size * Fraction(rng.randint(-64, 64), 64) for ci in c)
        if all(h.member(x) for h in halfspaces) and not contains(cone, x):
            return x
    return None
