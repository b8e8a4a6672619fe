"""Small cones used across the tests, the CLI self-checks and the README."""
from fractions import Fraction as F

from .cone import Cone
from .halfspace import GeneralHalfSpace


def three_point_cone() -> Cone:
    return Cone([(0, 1, 3), (0, 4, 1), (0, 9, 4)])


def three_point_halfspaces() -> list:
    """Five general-form half-spaces whose intersection is the three-point cone."""
    return [
        GeneralHalfSpace(3, [1], [0], {1: 0, 0: -1}),
        GeneralHalfSpace(3, [1, 2], [0], {1: 4, 2: 3, 0: 0}),
        GeneralHalfSpace(3, [2], [0, 1], {2: 1, 0: 0, 1: 6}),
        GeneralHalfSpace(3, [0], [2], {0: 0, 2: 4}),
        GeneralHalfSpace(3, [0, 1], [2], {0: 0, 1: 8, 2: 3}),
    ]


def cyclic_cone(n: int = 4, p: int = None) -> Cone:
    """Generators ``t * (0, 1, ..., n-1)`` for ``t = 1..p``."""
    p = n if p is None else p
    return Cone([tuple(t * m for m in range(n)) for t in range(1, p + 1)])


def perturbed_cyclic_cone() -> Cone:
    return Cone([
        (0, 1, 2, 3), (0, 1, F(5, 2), F(7, 2)), (0, F(3, 2), F(5, 2), F(7, 2)),
        (0, F(3, 2), 4, 6), (0, 2, 4, 6), (0, F(5, 2), 6, 9), (0, 3, 6, 9),
        (0, F(7, 2), F(15, 2), 12), (0, F(7, 2), 8, 12), (0, 4, 8, 12),
    ])


def ball_perturbed_three_point(eps=F(1, 2)) -> Cone:
    from .cells import perturb_generic

    return perturb_generic(three_point_cone(), eps)
