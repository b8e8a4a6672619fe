import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from helpers import H, cyclic_gamma
from tropcone.canonical import Representation, canonical_structure
from tropcone.cells import classify_vertex
from tropcone.cone import Cone
from tropcone.halfspace import GeneralHalfSpace, HalfSpace
from tropcone.hypergraph import tangent_hypergraph
from tropcone.instances import perturbed_cyclic_cone, three_point_cone, three_point_halfspaces
from tropcone.io import (
    ParseError,
    decode_cone,
    decode_halfspace,
    decode_halfspace_list,
    decode_hypergraph,
    decode_structure,
    dumps,
    encode_classification,
    encode_cone,
    encode_halfspace,
    encode_hypergraph,
    encode_structure,
)
from tropcone.polar import initial_representation

small = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def roundtrip(obj):
    return json.loads(dumps(obj))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5))
def test_cone_roundtrip(rows):
    c = Cone(rows)
    assert decode_cone(roundtrip(encode_cone(c))) == c


@given(st.lists(small, min_size=4, max_size=4), st.sets(st.integers(0, 3), min_size=1, max_size=3))
def test_halfspace_roundtrip(apex, sectors):
    h = HalfSpace(apex, sectors)
    assert decode_halfspace(roundtrip(encode_halfspace(h))) == h


def test_general_halfspace_roundtrip():
    for g in three_point_halfspaces():
        assert decode_halfspace(roundtrip(encode_halfspace(g))) == g
    g = GeneralHalfSpace(4, [0], [2], {0: F(1, 3), 2: F(-7, 2)})
    assert decode_halfspace(roundtrip(encode_halfspace(g))) == g


def test_halfspace_list_forms():
    items = [encode_halfspace(h) for h in cyclic_gamma()]
    assert decode_halfspace_list({"halfspaces": items}) == cyclic_gamma()
    assert decode_halfspace_list(items) == cyclic_gamma()
    assert decode_halfspace_list(items[0]) == cyclic_gamma()[:1]


def test_structure_roundtrip():
    c = perturbed_cyclic_cone()
    s = canonical_structure(Representation(c, initial_representation(c)))
    assert decode_structure(roundtrip(encode_structure(s)), c.n) == s


def test_hypergraph_roundtrip():
    g, origins = tangent_hypergraph(three_point_halfspaces(), (0, 1, 3))
    g2, o2 = decode_hypergraph(roundtrip(encode_hypergraph(g, origins)))
    assert g2 == g and o2 == list(origins)


def test_classification_encoding():
    data = encode_classification(classify_vertex(three_point_cone(), (0, 8, 3)))
    assert data == {"point": ["0", "8", "3"], "is_vertex": True, "witnesses": [{"I": [1, 2], "j": 3, "C4": True, "C5": True}]}


def test_rationals_are_strings():
    data = encode_cone(Cone([(0, F(7, 2), 1)]))
    assert data["generators"] == [["0", "7/2", "1"]]


@pytest.mark.parametrize(
    "data, message",
    [
        ({"dim": 3, "generators": [[0, 1, 2], [0, 1.5, 2]]}, r"row 2\[2\]"),
        ({"dim": 3, "generators": [[0, 1, 2], [0, 1]]}, "row 2"),
        ({"dim": 3, "generators": [[0, 1, 2], [0, "x", 2]]}, r"row 2\[2\]"),
        ({"dim": 3, "generators": [[0, "-inf", 2]]}, "bottom"),
        ({"dim": 3}, "generators"),
        ({"generators": []}, "non-empty"),
        ([1, 2], "top level"),
    ],
)
def test_cone_parse_errors(data, message):
    with pytest.raises(ParseError, match=message):
        decode_cone(data)


def test_halfspace_parse_errors():
    with pytest.raises(ParseError, match="sectors"):
        decode_halfspace({"apex": [0, 1, 3]})
    with pytest.raises(ParseError, match="outside 1..3"):
        decode_halfspace({"apex": [0, 1, 3], "sectors": [4]})
    with pytest.raises(ParseError, match="dim"):
        decode_halfspace({"I": [1], "J": [2], "alpha": {"1": 0, "2": 0}})
    with pytest.raises(ParseError, match="missing finite coefficient"):
        decode_halfspace({"I": [1], "J": [2], "alpha": {"1": 0}, "dim": 3})
    with pytest.raises(ParseError, match=r"halfspaces\[2\]"):
        decode_halfspace_list({"halfspaces": [encode_halfspace(H((0, 1, 3), [2])), {"apex": [0, 1]}]}, 3)
