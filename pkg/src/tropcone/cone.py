"""Real polyhedral cones given by finite generators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .semiring import BOTTOM, DimensionError, Point


class Cone:
    """The tropical cone generated by finitely many finite points.

    Generators are canonicalized and projective duplicates dropped (first
    occurrence wins), so ``generators[r]`` is the generator numbered ``r + 1``
    in reports.
    """

    def __init__(self, generators: Iterable):
        gens = []
        seen = set()
        for row, g in enumerate(generators):
            p = g if isinstance(g, Point) else Point(g)
            if not p.is_finite():
                raise ValueError(f"generator {row + 1} has a bottom coordinate; generators must be finite")
            if p not in seen:
                seen.add(p)
                gens.append(p)
        if not gens:
            raise ValueError("a cone needs at least one generator")
        n = len(gens[0])
        for row, g in enumerate(gens):
            if len(g) != n:
                raise DimensionError(f"generator {row + 1} has dimension {len(g)}, expected {n}")
        self.generators: tuple = tuple(gens)
        self.n = n

    @property
    def p(self) -> int:
        return len(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and set(self.generators) == set(other.generators)

    def __hash__(self) -> int:
        return hash(frozenset(self.generators))

    def __repr__(self) -> str:
        return f"Cone({list(self.generators)!r})"

    def __contains__(self, x) -> bool:
        return contains(self, x)


def _require_finite(x: Sequence, n: int) -> None:
    if len(x) != n:
        raise DimensionError(f"point has dimension {len(x)}, cone lives in dimension {n}")
    if any(v == BOTTOM for v in x):
        raise ValueError("point must be finite")


def project(c: Cone, a: Sequence) -> tuple:
    """Residuated projection of ``a`` onto ``c``.

    Returns ``(point, lambdas)`` where ``lambdas[r]`` is the largest scalar
    with ``lambdas[r] + v^r <= a`` and ``point`` is the raw vector
    ``max_r (lambdas[r] + v^r)``.  ``point <= a`` coordinate-wise.
    """
    _require_finite(a, c.n)
    lambdas = tuple(min(ai - vi for ai, vi in zip(a, v)) for v in c.generators)
    point = tuple(max(lam + v[i] for lam, v in zip(lambdas, c.generators)) for i in range(c.n))
    return point, lambdas


def contains(c: Cone, x: Sequence) -> bool:
    point, _ = project(c, x)
    return tuple(point) == tuple(x)


def extreme_generators(c: Cone) -> list:
    """Generators not in the cone spanned by the others."""
    if c.p == 1:
        return list(c.generators)
    out = []
    for r, v in enumerate(c.generators):
        rest = Cone(g for s, g in enumerate(c.generators) if s != r)
        if not contains(rest, v):
            out.append(v)
    return out


@dataclass(frozen=True)
class TypeVector:
    """Per-coordinate sets of generator indices (0-based)."""

    sectors: tuple

    def __getitem__(self, j: int) -> frozenset:
        return self.sectors[j]

    def __len__(self) -> int:
        return len(self.sectors)

    def __iter__(self):
        return iter(self.sectors)

    def one_based(self) -> list:
        return [sorted(r + 1 for r in s) for s in self.sectors]


def type_of(c: Cone, x: Sequence) -> TypeVector:
    _require_finite(x, c.n)
    sets = [set() for _ in range(c.n)]
    for r, v in enumerate(c.generators):
        diffs = [vi - xi for vi, xi in zip(v, x)]
        best = max(diffs)
        for j, d in enumerate(diffs):
            if d == best:
                sets[j].add(r)
    return TypeVector(tuple(frozenset(s) for s in sets))


def _components(n: int, edges: Iterable[tuple]) -> int:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in edges:
        parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def cell_dimension(c: Cone, x: Sequence) -> int:
    """Dimension of the cell of the type decomposition containing ``x``."""
    t = type_of(c, x)
    edges = [(i, j) for i in range(c.n) for j in range(i + 1, c.n) if t[i] & t[j]]
    return _components(c.n, edges) - 1


@dataclass(frozen=True)
class Conditions:
    C1: bool
    C2: bool
    C3: bool
    C4: Optional[bool] = None
    C5: Optional[bool] = None


def _union(t: TypeVector, indices: Iterable[int]) -> frozenset:
    out = frozenset()
    for k in indices:
        out |= t[k]
    return out


def conditions_from_type(t: TypeVector, p: int, sectors: Iterable[int], j: Optional[int] = None) -> Conditions:
    n = len(t)
    I = frozenset(sectors)
    if not I or len(I) >= n or not I <= set(range(n)):
        raise ValueError("sector set must be a proper non-empty subset of the coordinates")
    comp = [k for k in range(n) if k not in I]
    c1 = _union(t, I) == frozenset(range(p))
    c2 = all(any(t[i] & t[h] for i in I) for h in comp)
    c3 = all(any(not (t[i] & t[h]) <= _union(t, I - {i}) for h in comp) for i in I)
    c4 = c5 = None
    if j is not None:
        if j in I:
            raise ValueError("the distinguished index must lie outside the sector set")
        c4 = all(not (t[i] & t[j]) <= _union(t, I - {i}) for i in I)
        c5 = all(not (t[i] & t[j]) <= _union(t, (k for k in range(n) if k not in (i, j))) for i in I)
    return Conditions(c1, c2, c3, c4, c5)


def check_conditions(c: Cone, a: Sequence, sectors: Iterable[int], j: Optional[int] = None) -> Conditions:
    """Evaluate the type conditions C1..C5 for apex ``a`` and sectors ``I``.

    C1: the sectors in ``I`` cover every generator.  C2: every sector outside
    ``I`` meets one inside.  C3: each ``i`` in ``I`` has a generator shared with
    some outside sector and no other sector of ``I``.  C4/C5 (only with ``j``):
    each ``i`` in ``I`` shares with ``j`` a generator avoiding the other sectors
    of ``I`` (C4), or avoiding every sector other than ``i`` and ``j`` (C5).
    """
    return conditions_from_type(type_of(c, a), c.p, sectors, j)
