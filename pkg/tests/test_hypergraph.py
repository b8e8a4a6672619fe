import random

import pytest
from hypothesis import given, strategies as st

from helpers import H, arcs1, cyclic_gamma, sets1
from tropcone.canonical import Representation, enumerate_Ea, minimize
from tropcone.errors import PreconditionError, VerificationError
from tropcone.halfspace import GeneralHalfSpace
from tropcone.hypergraph import (
    ApexDigraph,
    Digraph,
    DirectedHypergraph,
    apex_digraph,
    is_redundant,
    reachable_set,
    reachable_with_trace,
    redundancy_certificate,
    replay_trace,
    scc_quotient,
    tangent_hypergraph,
    witness_point,
)
from tropcone.instances import cyclic_cone, three_point_halfspaces
from tropcone.sampling import sample_near_apex


def zero_based(*sets):
    return [frozenset(i - 1 for i in s) for s in sets]


CHAIN = DirectedHypergraph(7, [(zero_based({1})[0], zero_based({2})[0]),
                               (zero_based({2, 3})[0], zero_based({4, 5})[0]),
                               (zero_based({5, 6})[0], zero_based({7})[0])])


def test_reachability_examples():
    assert reachable_set(CHAIN, zero_based({1, 3, 6})[0]) == frozenset(range(7))
    assert reachable_set(CHAIN, zero_based({1, 3})[0]) == frozenset(zero_based({1, 2, 3, 4, 5})[0])
    assert reachable_set(DirectedHypergraph(4), {2}) == {2}


def test_trace_order_respects_tails():
    closure, fired = reachable_with_trace(CHAIN, zero_based({1, 3, 6})[0])
    assert fired == [0, 1, 2]
    with pytest.raises(ValueError):
        DirectedHypergraph(2, [({0}, {5})])


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(2, 7))
    node_sets = st.frozensets(st.integers(0, n - 1), min_size=1, max_size=3)
    arcs = draw(st.lists(st.tuples(node_sets, node_sets), max_size=8))
    return DirectedHypergraph(n, arcs)


@given(hypergraphs(), st.data())
def test_reachability_is_a_closure(g, data):
    small = data.draw(st.frozensets(st.integers(0, g.n - 1)))
    big = small | data.draw(st.frozensets(st.integers(0, g.n - 1)))
    r = reachable_set(g, small)
    assert small <= r
    assert reachable_set(g, r) == r
    assert r <= reachable_set(g, big)
    # least fixed point: no arc leaves r
    assert all(not t <= r or h <= r for t, h in g.arcs)


def test_tangent_examples():
    g, origins = tangent_hypergraph(three_point_halfspaces(), (0, 1, 3))
    assert arcs1(g) == {((2,), (1,)), ((3,), (1,)), ((1,), (3,))}
    assert len(origins) == len(g.arcs)
    g, _ = tangent_hypergraph(cyclic_gamma(drop={11}), (0, 2, 5, 8))
    assert arcs1(g) == {((4,), (3,)), ((2,), (3,)), ((1, 3), (2,))}
    g, _ = tangent_hypergraph(cyclic_gamma(drop={2, 3}), (0, 3, 7, 11))
    assert arcs1(g) == {((3,), (4,)), ((2,), (3, 4)), ((4,), (3,))}


def test_tangent_rejects_outside_point():
    with pytest.raises(PreconditionError, match="member 4"):
        tangent_hypergraph(three_point_halfspaces(), (0, 6, 5))


def test_tangent_ignores_rescaling():
    gamma = three_point_halfspaces()
    shifted = [GeneralHalfSpace(h.n, h.lhs, h.rhs, {i: h.alpha[i] + 7 for i in h.lhs | h.rhs}) for h in gamma]
    z = (0, 1, 3)
    assert tangent_hypergraph(gamma, z)[0].arc_set() == tangent_hypergraph(shifted, z)[0].arc_set()


def test_redundancy_examples():
    assert is_redundant(H((0, 1, 3), [2]), three_point_halfspaces())
    assert is_redundant(H((0, 2, 5, 8), [1, 4]), cyclic_gamma(drop={11}))
    assert not is_redundant(H((0, 3, 7, 11), [1, 3]), cyclic_gamma(drop={2, 3}))


def test_redundancy_trace_replays():
    gamma = three_point_halfspaces()
    h = H((0, 1, 3), [2])
    cert = redundancy_certificate(h, gamma)
    assert cert.redundant and cert.witness is None
    assert replay_trace(h, gamma, cert.trace)
    assert not replay_trace(h, gamma, cert.trace[:1])


def test_redundancy_precondition():
    with pytest.raises(PreconditionError):
        is_redundant(H((0, 0, 0), [1]), three_point_halfspaces())
    with pytest.raises(PreconditionError):
        is_redundant(three_point_halfspaces()[0], [])


def _check_witness(h, gamma):
    x = witness_point(h, gamma)
    assert not h.member(x)
    assert all(m.member(x) for m in gamma)


def test_witness_points():
    _check_witness(H((0, 3, 7, 11), [1, 3]), cyclic_gamma(drop={2, 3}))
    _check_witness(H((0, 1, 3), [2]), [])
    five = three_point_halfspaces()
    _check_witness(H((0, 6, 1), [3]), five[:2] + five[3:])
    with pytest.raises(PreconditionError):
        witness_point(H((0, 1, 3), [2]), five)


def test_redundant_verdicts_survive_sampling():
    h = H((0, 2, 5, 8), [1, 4])
    gamma = cyclic_gamma(drop={11})
    pts = sample_near_apex(gamma, h.apex, 300, seed=1)
    assert len(pts) == 300
    assert all(h.member(x) for x in pts)


def _fig_digraph():
    c = cyclic_cone()
    a = (0, 3, 7, 11)
    return apex_digraph(cyclic_gamma(drop={2, 3}), a, enumerate_Ea(c, a))


def test_apex_digraph_at_shared_apex():
    dg = _fig_digraph()
    n12, n13, n14, n134 = zero_based({1, 2}, {1, 3}, {1, 4}, {1, 3, 4})
    for target in (n13, n14, n134):
        assert target in dg.successors(n12)
        assert n12 not in dg.successors(target)
    for u in (n13, n14, n134):
        for v in (n13, n14, n134):
            if u != v:
                assert v in dg.successors(u)


def test_apex_digraph_rejects_own_apex():
    with pytest.raises(PreconditionError):
        apex_digraph(cyclic_gamma(), (0, 3, 7, 11), [frozenset(range(4))])


def test_scc_quotient_of_apex_digraph():
    q = scc_quotient(_fig_digraph())
    assert len(q.maximal) == 1
    k = q.maximal[0]
    assert sets1(q.components[k]) == {(1, 3), (1, 4), (1, 3, 4)}
    assert sets1([q.principal[k]]) == {(1, 3, 4)}
    assert not q.is_strongly_connected()


def test_strongly_connected_apex_digraph():
    c = cyclic_cone()
    a = (0, 2, 5, 8)
    e_a = enumerate_Ea(c, a)
    assert sets1(e_a) == {(1, 4), (1, 2, 4), (1, 3, 4), (1, 2, 3, 4)}
    q = scc_quotient(apex_digraph(cyclic_gamma(drop={11}), a, e_a))
    assert q.is_strongly_connected()
    assert q.principal[0] == frozenset(range(4))


def test_single_node():
    full = frozenset(range(3))
    dg = apex_digraph([], (0, 1, 3), [full])
    q = scc_quotient(dg)
    assert q.components == [(full,)] and q.maximal == [0] and q.principal[0] == full


def test_components_on_plain_digraph():
    g = Digraph(nodes=[1, 2, 3, 4, 5], succ={1: [2], 2: [1, 3], 3: [4], 4: [3], 5: [4]})
    q = scc_quotient(g)
    comps = {frozenset(c) for c in q.components}
    assert comps == {frozenset({1, 2}), frozenset({3, 4}), frozenset({5})}
    assert [set(q.components[k]) for k in q.maximal] == [{3, 4}]
    assert q.principal == {}


def test_long_chain_is_iterative():
    n = 5000
    g = Digraph(nodes=list(range(n)), succ={i: [i + 1] for i in range(n - 1)})
    q = scc_quotient(g)
    assert len(q.components) == n and len(q.maximal) == 1


def test_principal_validation_catches_inconsistency():
    a, b = frozenset({0}), frozenset({0, 1})
    bogus = ApexDigraph(nodes=[a, b], succ={a: [b], b: [a]}, closures={a: a, b: b})
    with pytest.raises(VerificationError):
        scc_quotient(bogus)


def test_closures_depend_only_on_the_intersection():
    c = cyclic_cone()
    full = Representation(c, cyclic_gamma())
    m = list(minimize(full).halfspaces)
    extras = [h for h in full.halfspaces if h not in m]
    rng = random.Random(2)
    for a in {h.apex for h in m}:
        lam = [h for h in m if h.apex != a]
        more = lam + [h for h in extras if h.apex != a and rng.random() < 0.7]
        e_a = enumerate_Ea(c, a)
        assert apex_digraph(lam, a, e_a).closures == apex_digraph(more, a, e_a).closures
