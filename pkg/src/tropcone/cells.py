"""Vertices of the type decomposition, (I, j)-vertices, and generic extremities."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .canonical import ApexStructure, Representation, enumerate_Ea
from .cone import Cone, cell_dimension, conditions_from_type, contains, extreme_generators, project, type_of
from .errors import PreconditionError
from .halfspace import HalfSpace
from .semiring import BOTTOM, Point, hilbert_distance, to_scalar


@dataclass(frozen=True)
class Witness:
    I: frozenset
    j: int
    C4: bool
    C5: bool


@dataclass(frozen=True)
class VertexClassification:
    point: Point
    is_vertex: bool
    witnesses: tuple

    def sector_sets(self) -> set:
        return {w.I for w in self.witnesses}


def classify_vertex(c: Cone, a: Sequence) -> VertexClassification:
    """List every ``(I, j)`` for which ``a`` is an (I, j)-vertex, with the C5 flag."""
    a = Point(a)
    e_a = enumerate_Ea(c, a)
    if cell_dimension(c, a) != 0:
        return VertexClassification(a, False, ())
    t = type_of(c, a)
    out = []
    for I in e_a[:-1]:
        for j in range(c.n):
            if j in I:
                continue
            cond = conditions_from_type(t, c.p, I, j)
            if cond.C1 and cond.C2 and cond.C4:
                out.append(Witness(I, j, cond.C4, cond.C5))
    return VertexClassification(a, True, tuple(out))


def polar_vector_of(a: Sequence, I: Iterable[int], j: int) -> tuple:
    """The polar vector ``-a`` restricted to ``I`` and ``j``, bottom elsewhere."""
    keep = set(I) | {j}
    return tuple(-x if i in keep else BOTTOM for i, x in enumerate(a))


def cone_vertices(c: Cone) -> list:
    """All zero-dimensional cells of the type decomposition that lie in ``c``.

    A vertex is pinned down by a spanning tree of its type graph, each edge
    ``{i, j}`` labelled by a shared generator ``r`` forcing
    ``x_j - x_i = v^r_j - v^r_i``.  We enumerate labelled trees via Pruefer
    codes and keep the candidates that really are vertices.  Cost grows like
    ``n^(n-2) p^(n-1)``, fine for small examples.
    """
    n, gens = c.n, c.generators
    found = set()
    for code in itertools.product(range(n), repeat=n - 2):
        edges = _pruefer_edges(list(code), n)
        for labels in itertools.product(range(c.p), repeat=n - 1):
            x = _solve_tree(n, edges, labels, gens)
            if x in found:
                continue
            if contains(c, x) and cell_dimension(c, x) == 0:
                found.add(x)
    return sorted(found)


def _pruefer_edges(code: list, n: int) -> list:
    degree = [1] * n
    for i in code:
        degree[i] += 1
    edges = []
    for i in code:
        leaf = min(k for k in range(n) if degree[k] == 1)
        edges.append((leaf, i))
        degree[leaf] -= 1
        degree[i] -= 1
    u, w = [k for k in range(n) if degree[k] == 1]
    edges.append((u, w))
    return edges


def _solve_tree(n: int, edges: list, labels: Sequence[int], gens) -> Point:
    x = [None] * n
    x[0] = Fraction(0)
    adj = {k: [] for k in range(n)}
    for (i, j), r in zip(edges, labels):
        adj[i].append((j, r))
        adj[j].append((i, r))
    stack = [0]
    while stack:
        i = stack.pop()
        for j, r in adj[i]:
            if x[j] is None:
                x[j] = x[i] + gens[r][j] - gens[r][i]
                stack.append(j)
    return Point(x)


def vertex_halfspaces(c: Cone) -> set:
    """``H(a, I)`` for every (I, j)-vertex witness of every vertex of ``c``."""
    out = set()
    for a in cone_vertices(c):
        for w in classify_vertex(c, a).witnesses:
            out.add(HalfSpace(a, w.I))
    return out


@dataclass
class BoundsReport:
    necessary: list = field(default_factory=list)  # (apex, witnesses) for apices in the structure
    sufficient: list = field(default_factory=list)  # (apex, C5 witnesses) among representation apices
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def nonredundant_apex_bounds(c: Cone, rep: Representation, s: ApexStructure) -> BoundsReport:
    """Check both vertex bounds on the non-redundant apices.

    Every non-redundant apex must be an (I, j)-vertex, and every apex of the
    representation with a C5 witness must be non-redundant.
    """
    report = BoundsReport()
    nonred = s.apex_set()
    for a in sorted(nonred):
        cls = classify_vertex(c, a)
        report.necessary.append((a, cls.witnesses))
        if not cls.witnesses:
            report.violations.append(f"non-redundant apex {a!r} is not an (I, j)-vertex")
    for a in sorted(set(rep.apices())):
        strong = tuple(w for w in classify_vertex(c, a).witnesses if w.C5)
        if strong:
            report.sufficient.append((a, strong))
            if a not in nonred:
                report.violations.append(f"apex {a!r} satisfies C5 but is redundant")
    return report


def _positive(eps) -> Fraction:
    eps = to_scalar(eps)
    if not eps > 0:
        raise PreconditionError(f"epsilon must be positive, got {eps}")
    return eps


def _raise(v: Sequence, i: int, eps) -> tuple:
    return tuple(x + eps if k == i else x for k, x in enumerate(v))


def perturb_generic(c: Cone, eps) -> Cone:
    """Cone spanned by the Hilbert balls of radius ``eps`` around the generators."""
    eps = _positive(eps)
    return Cone(_raise(v, i, eps) for v in c.generators for i in range(c.n))


def ball_extremes(center: Sequence, eps) -> list:
    return [_raise(center, i, eps) for i in range(len(center))]


def certify_generic_extremities(c: Cone, eps) -> bool:
    """Certificate that every extreme generator lies in a radius-``eps`` ball inside ``c``.

    A True answer is proof; False only means this particular ``eps`` failed.
    """
    eps = _positive(eps)
    if c.p == 1:
        return False
    for v in extreme_generators(c):
        centers = (_raise(v, l, -eps) for l in range(c.n))
        if not any(all(contains(c, x) for x in ball_extremes(ctr, eps)) for ctr in centers):
            return False
    return True


def certify_ladder(c: Cone, epsilons: Iterable = None) -> list:
    """Per-epsilon certification results, no extrapolation between rungs."""
    if epsilons is None:
        base = default_epsilon(c)
        epsilons = [base / 2**k for k in range(4)] if base is not None else []
    return [(_positive(e), certify_generic_extremities(c, e)) for e in epsilons]


def default_epsilon(c: Cone) -> Optional[Fraction]:
    """Half the smallest positive difference between coordinate gaps ``v^r_i - v^r_j``."""
    gaps = sorted({v[i] - v[j] for v in c.generators for i in range(c.n) for j in range(c.n)})
    diffs = [b - a for a, b in zip(gaps, gaps[1:]) if b > a]
    return min(diffs) / 2 if diffs else None


def check_minor_genericity(c) -> bool:
    """All 2x2 tropical minors of the generator matrix are non-singular.

    Accepts a cone or a raw list of generators (a cone drops duplicates,
    which would hide singular minors).
    """
    gens = [Point(v) for v in (c.generators if isinstance(c, Cone) else c)]
    n = len(gens[0])
    for r, s in itertools.combinations(range(len(gens)), 2):
        for i, j in itertools.combinations(range(n), 2):
            if gens[r][i] + gens[s][j] == gens[r][j] + gens[s][i]:
                return False
    return True


def projection_distance(c: Cone, x: Sequence):
    point, _ = project(c, x)
    return hilbert_distance(point, x)
