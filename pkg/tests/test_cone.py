import random
from fractions import Fraction as F

import pytest

from helpers import random_cones
from tropcone.cone import (
    Cone,
    cell_dimension,
    check_conditions,
    contains,
    extreme_generators,
    project,
    type_of,
)
from tropcone.instances import cyclic_cone, three_point_cone
from tropcone.semiring import BOTTOM, DimensionError, Point


def test_generators_are_canonical_and_deduplicated():
    c = Cone([(1, 2, 4), (0, 1, 3), (0, 4, 1)])
    assert c.p == 2
    assert c.generators[0] == Point((0, 1, 3))


def test_bad_generators_name_the_row():
    with pytest.raises(ValueError, match="generator 2"):
        Cone([(0, 1, 2), (0, BOTTOM, 1)])
    with pytest.raises(DimensionError, match="generator 2"):
        Cone([(0, 1, 2), (0, 1)])


def test_membership_and_projection():
    c = three_point_cone()
    assert contains(c, (0, 6, 1))
    assert (0, 8, 3) in c
    assert not contains(c, (0, 0, 0))
    point, lambdas = project(c, (0, 8, 0))
    assert Point(point) == Point((0, 6, 1))
    assert lambdas == (-3, -1, -4)


def test_projection_is_below_and_idempotent():
    rng = random.Random(3)
    for c in random_cones(8):
        for _ in range(10):
            x = tuple(F(rng.randint(-20, 20), 4) for _ in range(c.n))
            p, _ = project(c, x)
            assert all(pi <= xi for pi, xi in zip(p, x))
            assert contains(c, p)
            assert project(c, p)[0] == p


def test_tropical_combinations_stay_inside():
    rng = random.Random(5)
    for c in random_cones(8):
        for _ in range(10):
            lam = [rng.randint(-5, 5) for _ in c.generators]
            x = tuple(max(l + v[i] for l, v in zip(lam, c.generators)) for i in range(c.n))
            assert contains(c, x)


def test_extreme_generators():
    assert len(extreme_generators(cyclic_cone())) == 4
    inner = (0, 4, 3)  # max of (0,1,3) and (0,4,1)
    c = Cone([(0, 1, 3), (0, 4, 1), (0, 9, 4), inner])
    assert Point(inner) not in extreme_generators(c)
    assert len(extreme_generators(c)) == 3


def test_types():
    c = three_point_cone()
    assert type_of(c, (0, 8, 3)).one_based() == [[1, 2], [3], [1, 3]]
    assert type_of(c, (0, 9, 4)).one_based() == [[1, 2, 3], [3], [3]]
    assert type_of(c, (0, 5, 2)).one_based() == [[2], [3], [1]]


def test_cell_dimensions():
    c = three_point_cone()
    assert cell_dimension(c, (0, 8, 3)) == 0
    assert cell_dimension(c, (0, 7, 3)) == 1
    assert cell_dimension(c, (0, 5, 2)) == 2


def test_type_covers_every_generator():
    rng = random.Random(9)
    for c in random_cones(6):
        x = tuple(rng.randint(0, 8) for _ in range(c.n))
        t = type_of(c, x)
        assert set().union(*t.sectors) == set(range(c.p))


def test_conditions():
    c = three_point_cone()
    cond = check_conditions(c, (0, 6, 1), [2])
    assert (cond.C1, cond.C2, cond.C3) == (True, True, True)
    assert cond.C4 is None
    # H((0,6,1),{1}) misses a generator
    assert not check_conditions(c, (0, 6, 1), [0]).C1
    cond = check_conditions(c, (0, 8, 3), [0, 1], j=2)
    assert cond.C4 and cond.C5
    with pytest.raises(ValueError):
        check_conditions(c, (0, 8, 3), [0, 1], j=1)
    with pytest.raises(ValueError):
        check_conditions(c, (0, 8, 3), [0, 1, 2])
