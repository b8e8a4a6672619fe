"""Non-redundant external representations and their canonical structure.

Every non-redundant representation of a cone by half-spaces with apices in
the cone uses the same apex set.  At each such apex ``a`` the admissible
sector sets split into exchange classes, the sink components of the
reachability digraph on ``E_a``; a representation picks exactly one member
of each class.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cone import Cone, contains, type_of
from .errors import PreconditionError, VerificationError
from .halfspace import HalfSpace, contains_cone
from .hypergraph import apex_digraph, is_redundant, reachable_set, scc_quotient, tangent_hypergraph
from .semiring import Point

DERIVED = "derived-from-initial"
USER = "user-supplied"
PROVENANCES = (DERIVED, USER)


def sector_key(s: Iterable[int]) -> tuple:
    s = sorted(s)
    return (len(s), s)


class Representation:
    """Half-spaces containing ``cone`` with apices in ``cone``."""

    def __init__(self, cone: Cone, halfspaces: Iterable[HalfSpace], provenance: str = DERIVED):
        if provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}")
        hs = tuple(halfspaces)
        for k, h in enumerate(hs):
            if not isinstance(h, HalfSpace):
                raise PreconditionError(f"half-space {k + 1} is degenerate; representations use H(a, I) only")
            if h.n != cone.n:
                raise PreconditionError(f"half-space {k + 1} has dimension {h.n}, cone has {cone.n}")
            if not contains_cone(h, cone):
                raise PreconditionError(f"half-space {k + 1} {h!r} does not contain the cone")
            if not contains(cone, h.apex):
                raise PreconditionError(f"half-space {k + 1} {h!r} has its apex outside the cone; saturate it first")
        self.cone = cone
        self.halfspaces = hs
        self.provenance = provenance

    def __len__(self) -> int:
        return len(self.halfspaces)

    def __iter__(self):
        return iter(self.halfspaces)

    def apices(self) -> list:
        seen = []
        for h in self.halfspaces:
            if h.apex not in seen:
                seen.append(h.apex)
        return seen

    def replace(self, halfspaces: Iterable[HalfSpace]) -> "Representation":
        hs = tuple(halfspaces)
        if set(hs) <= set(self.halfspaces):
            # a sub-list of checked members needs no new membership tests
            out = object.__new__(Representation)
            out.cone, out.halfspaces, out.provenance = self.cone, hs, self.provenance
            return out
        return Representation(self.cone, hs, self.provenance)

    def __repr__(self) -> str:
        return f"Representation({list(self.halfspaces)!r}, provenance={self.provenance!r})"


@dataclass(frozen=True)
class Component:
    members: tuple  # sector sets, sorted by (size, elements)
    principal: frozenset
    representative: frozenset


@dataclass(frozen=True)
class ApexEntry:
    apex: Point
    components: tuple


@dataclass(frozen=True)
class ApexStructure:
    apices: tuple  # of ApexEntry

    def apex_set(self) -> set:
        return {e.apex for e in self.apices}

    def entry(self, a) -> Optional[ApexEntry]:
        a = Point(a)
        for e in self.apices:
            if e.apex == a:
                return e
        return None

    def representatives(self) -> list:
        return [HalfSpace(e.apex, comp.representative) for e in self.apices for comp in e.components]


def enumerate_Ea(c: Cone, a: Sequence) -> list:
    """``[n]`` together with every proper sector set ``I`` with ``c`` inside ``H(a, I)``."""
    if not contains(c, a):
        raise PreconditionError(f"{Point(a)!r} is not in the cone")
    t = type_of(c, a)
    full = frozenset(range(c.n))
    everyone = frozenset(range(c.p))
    out = []
    for size in range(1, c.n):
        for I in itertools.combinations(range(c.n), size):
            covered = frozenset().union(*(t[i] for i in I))
            if covered == everyone:
                out.append(frozenset(I))
    out.append(full)
    return out


def _others(halfspaces: Sequence, k: int) -> list:
    return [h for m, h in enumerate(halfspaces) if m != k]


def minimize(rep: Representation, seed: Optional[int] = None, order: Optional[Sequence[int]] = None) -> Representation:
    """Drop redundant members one at a time.

    One pass suffices: a member that survives stays non-redundant when others
    are removed later, since the intersection only grows.  The scan follows
    input order, a given permutation ``order``, or a shuffle seeded by ``seed``.
    """
    hs = list(rep.halfspaces)
    if order is None:
        order = list(range(len(hs)))
        if seed is not None:
            random.Random(seed).shuffle(order)
    elif sorted(order) != list(range(len(hs))):
        raise ValueError("order must be a permutation of the member indices")
    keep = set(range(len(hs)))
    for k in order:
        rest = [hs[m] for m in sorted(keep) if m != k]
        if is_redundant(hs[k], rest):
            keep.discard(k)
    return rep.replace(hs[m] for m in sorted(keep))


def is_nonredundant(rep: Representation) -> bool:
    hs = list(rep.halfspaces)
    return not any(is_redundant(h, _others(hs, k)) for k, h in enumerate(hs))


def apex_structure_at(rep: Representation, a: Point) -> tuple:
    """The apex digraph at ``a`` built from the members with a different apex, and its quotient."""
    lam = [h for h in rep.halfspaces if h.apex != a]
    dg = apex_digraph(lam, a, enumerate_Ea(rep.cone, a))
    return dg, scc_quotient(dg)


def canonical_structure(rep: Representation) -> ApexStructure:
    entries = []
    for a in rep.apices():
        _, q = apex_structure_at(rep, a)
        if q.is_strongly_connected():
            continue
        comps = []
        for k in q.maximal:
            members = tuple(sorted(q.components[k], key=sector_key))
            comps.append(Component(members, q.principal[k], members[0]))
        comps.sort(key=lambda comp: sector_key(comp.representative))
        entries.append(ApexEntry(a, tuple(comps)))
    entries.sort(key=lambda e: tuple(e.apex))
    return ApexStructure(tuple(entries))


def _shared_apex_closures(h1: HalfSpace, h2: HalfSpace, lam: Sequence) -> tuple:
    if h1.apex != h2.apex:
        raise PreconditionError("the two half-spaces must share their apex")
    for k, h in enumerate(lam):
        if isinstance(h, HalfSpace) and h.apex == h1.apex:
            raise PreconditionError(f"member {k + 1} of the context has the shared apex")
    g, _ = tangent_hypergraph(lam, h1.apex)
    return reachable_set(g, h1.sectors), reachable_set(g, h2.sectors)


def mutually_redundant(h1: HalfSpace, h2: HalfSpace, lam: Sequence) -> bool:
    """Whether the two sector sets reach each other in the tangent hypergraph of ``lam``."""
    r1, r2 = _shared_apex_closures(h1, h2, lam)
    return h2.sectors <= r1 and h1.sectors <= r2


def exchange(rep: Representation, h_old: HalfSpace, h_new: HalfSpace) -> Representation:
    hs = list(rep.halfspaces)
    if h_old not in hs:
        raise PreconditionError(f"{h_old!r} is not a member of the representation")
    if h_old == h_new:
        return rep
    lam = [h for h in hs if h.apex != h_old.apex]
    if not mutually_redundant(h_old, h_new, lam):
        raise PreconditionError(f"{h_old!r} and {h_new!r} lie in different exchange classes")
    was_minimal = is_nonredundant(rep)
    out = rep.replace(h_new if h == h_old else h for h in hs)
    if was_minimal and not is_nonredundant(out):
        raise VerificationError("exchange broke non-redundancy")
    return out


def verify_theorem_main(rep: Representation, s: ApexStructure) -> bool:
    """Apex set of ``rep`` matches ``s`` and each class is picked exactly once per apex."""
    if set(rep.apices()) != s.apex_set():
        return False
    for e in s.apices:
        picks = [h.sectors for h in rep.halfspaces if h.apex == e.apex]
        if len(picks) != len(e.components):
            return False
        for comp in e.components:
            if sum(1 for I in picks if I in comp.members) != 1:
                return False
    return True
