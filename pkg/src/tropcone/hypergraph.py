"""Directed hypergraphs, tangent hypergraphs, and the redundancy criterion."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import networkx as nx

from .errors import PreconditionError, VerificationError
from .halfspace import HalfSpace
from .semiring import Point


@dataclass(frozen=True)
class DirectedHypergraph:
    """Hyperarcs ``(T, H)`` over the nodes ``0..n-1``; repeated arcs are harmless."""

    n: int
    arcs: tuple

    def __init__(self, n: int, arcs: Iterable = ()):
        norm = []
        for t, h in arcs:
            t, h = frozenset(t), frozenset(h)
            if not (t | h) <= set(range(n)):
                raise ValueError(f"hyperarc ({sorted(t)}, {sorted(h)}) leaves the node set 0..{n - 1}")
            norm.append((t, h))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", tuple(norm))

    def arc_set(self) -> frozenset:
        return frozenset(self.arcs)


def reachable_with_trace(g: DirectedHypergraph, start: Iterable[int]) -> tuple:
    """Forward chaining; returns the closure and the arc indices in firing order.

    Each arc keeps a count of tail nodes not reached yet and fires when the
    count drops to zero, so the cost is linear in the total arc size.
    """
    reached = set(start)
    if not reached <= set(range(g.n)):
        raise ValueError("start set leaves the node set")
    missing = [len(t) for t, _ in g.arcs]
    watchers = [[] for _ in range(g.n)]
    for k, (t, _) in enumerate(g.arcs):
        for i in t:
            watchers[i].append(k)
    fired = []
    stack = []
    for k, m in enumerate(missing):
        if m == 0:
            stack.append(k)
    for i in reached:
        for k in watchers[i]:
            missing[k] -= 1
            if missing[k] == 0:
                stack.append(k)
    while stack:
        k = stack.pop()
        fired.append(k)
        for i in g.arcs[k][1]:
            if i not in reached:
                reached.add(i)
                for w in watchers[i]:
                    missing[w] -= 1
                    if missing[w] == 0:
                        stack.append(w)
    return frozenset(reached), fired


def reachable_set(g: DirectedHypergraph, start: Iterable[int]) -> frozenset:
    return reachable_with_trace(g, start)[0]


@lru_cache(maxsize=1 << 16)
def _tangent_arc(h, z: tuple):
    left, right = h.sides(z)
    if left < right:
        return False
    if left != right:
        return None
    return h.argmax_sides(z)


def tangent_hypergraph(gamma: Sequence, z: Sequence) -> tuple:
    """Tangent hypergraph at ``z`` and, per arc, the index in ``gamma`` it came from."""
    z = tuple(Point(z))
    n = len(z)
    arcs, origins = [], []
    for k, h in enumerate(gamma):
        if h.n != n:
            raise PreconditionError(f"member {k + 1} lives in dimension {h.n}, point in dimension {n}")
        arc = _tangent_arc(h, z)
        if arc is False:
            raise PreconditionError(f"point lies outside member {k + 1}: {h!r}")
        if arc is not None:
            arcs.append(arc)
            origins.append(k)
    return DirectedHypergraph(n, arcs), tuple(origins)


def _check_tested(h) -> HalfSpace:
    if not isinstance(h, HalfSpace):
        raise PreconditionError("the tested half-space must be non-degenerate")
    return h


@dataclass(frozen=True)
class RedundancyCertificate:
    """Verdict plus evidence: a firing trace (arc, origin) or a separating point."""

    redundant: bool
    closure: frozenset
    trace: tuple = ()
    witness: Optional[tuple] = None


def is_redundant(h: HalfSpace, gamma: Sequence) -> bool:
    h = _check_tested(h)
    g, _ = tangent_hypergraph(gamma, h.apex)
    return len(reachable_set(g, h.sectors)) == h.n


def redundancy_certificate(h: HalfSpace, gamma: Sequence) -> RedundancyCertificate:
    h = _check_tested(h)
    g, origins = tangent_hypergraph(gamma, h.apex)
    closure, fired = reachable_with_trace(g, h.sectors)
    if len(closure) == h.n:
        trace = tuple((g.arcs[k][0], g.arcs[k][1], origins[k]) for k in fired)
        return RedundancyCertificate(True, closure, trace=trace)
    return RedundancyCertificate(False, closure, witness=_witness(h, gamma, closure))


def replay_trace(h: HalfSpace, gamma: Sequence, trace: Iterable) -> bool:
    """Check a redundancy trace independently: each arc must be the tangent arc
    of its origin at the apex and be fireable when it appears."""
    z = tuple(h.apex)
    reached = set(h.sectors)
    for t, head, origin in trace:
        if not 0 <= origin < len(gamma):
            return False
        member = gamma[origin]
        if not member.member(z) or not member.is_active(z):
            return False
        if member.argmax_sides(z) != (frozenset(t), frozenset(head)):
            return False
        if not frozenset(t) <= reached:
            return False
        reached |= set(head)
    return len(reached) == h.n and all(m.member(z) for m in gamma)


def _witness(h: HalfSpace, gamma: Sequence, closure: frozenset) -> tuple:
    a = h.apex
    delta = Fraction(1)
    for _ in range(64):
        x = tuple(a[i] + (0 if i in closure else delta) for i in range(h.n))
        if not h.member(x) and all(m.member(x) for m in gamma):
            return x
        delta /= 2
    raise VerificationError(f"no separating point found for {h!r}")


def witness_point(h: HalfSpace, gamma: Sequence) -> Point:
    """A point in every member of ``gamma`` but outside ``h``; requires non-redundancy."""
    h = _check_tested(h)
    g, _ = tangent_hypergraph(gamma, h.apex)
    closure = reachable_set(g, h.sectors)
    if len(closure) == h.n:
        raise PreconditionError(f"{h!r} is redundant; no separating point exists")
    return Point(_witness(h, gamma, closure))


@dataclass
class Digraph:
    nodes: list
    succ: dict = field(default_factory=dict)

    def successors(self, v) -> list:
        return self.succ.get(v, [])


@dataclass
class ApexDigraph(Digraph):
    apex: Optional[Point] = None
    closures: dict = field(default_factory=dict)
    hypergraph: Optional[DirectedHypergraph] = None


def apex_digraph(lam: Sequence, a: Sequence, e_a: Iterable) -> ApexDigraph:
    """Arc ``I -> J`` whenever ``J`` lies in the tangent closure of ``I`` at ``a``."""
    a = Point(a)
    for k, h in enumerate(lam):
        if isinstance(h, HalfSpace) and h.apex == a:
            raise PreconditionError(f"member {k + 1} has the apex {a!r} itself")
    g, _ = tangent_hypergraph(lam, a)
    nodes = sorted({frozenset(I) for I in e_a}, key=lambda s: (len(s), sorted(s)))
    closures = {I: reachable_set(g, I) for I in nodes}
    succ = {I: [J for J in nodes if J != I and J <= closures[I]] for I in nodes}
    return ApexDigraph(nodes=nodes, succ=succ, apex=a, closures=closures, hypergraph=g)


@dataclass
class SCCQuotient:
    components: list  # each a tuple of nodes
    component_of: dict
    dag: dict  # component index -> set of successor component indices
    maximal: list  # indices of components with no outgoing quotient arc
    principal: dict  # maximal component index -> inclusion-greatest node

    def is_strongly_connected(self) -> bool:
        return len(self.components) == 1


def _components(g: Digraph) -> list:
    nx_graph = nx.DiGraph()
    nx_graph.add_nodes_from(g.nodes)
    nx_graph.add_edges_from((v, w) for v in g.nodes for w in g.successors(v))
    return list(nx.strongly_connected_components(nx_graph))


def _node_key(s) -> tuple:
    return (len(s), sorted(s)) if isinstance(s, frozenset) else (0, s)


def scc_quotient(g: Digraph) -> SCCQuotient:
    """Strongly connected components, their quotient order, and the sink components.

    For an apex digraph each sink component carries a principal element, its
    inclusion-greatest node, checked against the tangent closures.
    """
    comps = [tuple(sorted(c, key=_node_key)) for c in _components(g)]
    comps.sort(key=lambda c: [_node_key(v) for v in c])
    comp_of = {v: k for k, c in enumerate(comps) for v in c}
    dag = {k: set() for k in range(len(comps))}
    for v in g.nodes:
        for w in g.successors(v):
            if comp_of[v] != comp_of[w]:
                dag[comp_of[v]].add(comp_of[w])
    maximal = [k for k in range(len(comps)) if not dag[k]]
    principal = {}
    closures = getattr(g, "closures", None)
    if closures:
        for k in maximal:
            top = max(comps[k], key=len)
            if any(not v <= top for v in comps[k]):
                raise VerificationError(f"component {[sorted(v) for v in comps[k]]} has no greatest element")
            if any(closures[v] != top for v in comps[k]):
                raise VerificationError("principal element differs from a member's tangent closure")
            principal[k] = top
    return SCCQuotient(comps, comp_of, dag, maximal, principal)
