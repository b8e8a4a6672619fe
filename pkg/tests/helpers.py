"""Shared test instances and small oracles."""
import random
from fractions import Fraction as F

from tropcone.cone import Cone
from tropcone.halfspace import HalfSpace


def random_cones(count=25, seed=20240601):
    """Integer cones with n in {3, 4}, p in 3..6 and coordinates in 0..8."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((3, 4))
        p = rng.randint(3, 6)
        gens = [tuple(rng.randint(0, 8) for _ in range(n)) for _ in range(p)]
        out.append(Cone(gens))
    return out


def H(apex, sectors):
    """Half-space from 1-based sector indices."""
    return HalfSpace(tuple(F(x) for x in apex), [i - 1 for i in sectors])


def sets1(collection):
    """Sector sets as sorted 1-based tuples."""
    return {tuple(sorted(i + 1 for i in s)) for s in collection}


def anti_exchange_triples(reps, count=500, seed=4242, attempts=20):
    """Random (gamma, h, h_prime) drawn from the given representations.

    ``h_prime`` and ``gamma`` are drawn first; ``h`` is preferably one of the
    members whose addition makes ``h_prime`` redundant, so that the
    implication under test is rarely vacuous.
    """
    from tropcone.hypergraph import is_redundant

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        drawn = None
        for _ in range(attempts):
            rep = rng.choice(reps)
            hs = list(rep.halfspaces)
            hp = rng.choice(hs)
            others = [x for x in hs if x != hp]
            keep = rng.choice((0.3, 0.6, 0.9))
            gamma = [x for x in others if rng.random() < keep]
            pool = [x for x in others if x not in gamma and x.apex != hp.apex]
            if not pool:
                continue
            hits = []
            if not is_redundant(hp, gamma):
                hits = [x for x in pool if is_redundant(hp, gamma + [x])]
            drawn = (gamma, rng.choice(hits or pool), hp)
            if hits:
                break
        if drawn is not None:
            out.append(drawn)
    return out


class VerdictLog:
    """Records every distinct (h, gamma) redundancy verdict passed through it."""

    def __init__(self, func):
        self.func = func
        self.verdicts = {}

    def __call__(self, h, gamma):
        verdict = self.func(h, gamma)
        self.verdicts.setdefault((h, frozenset(gamma)), (verdict, list(gamma)))
        return verdict

    def merge(self, other):
        for k, v in other.verdicts.items():
            self.verdicts.setdefault(k, v)


CYCLIC_ROWS = [
    ((0, 1, 2, 3), (4,)),
    ((0, 3, 7, 11), (1, 3)),
    ((0, 3, 7, 11), (1, 4)),
    ((0, 1, 2, 6), (3,)),
    ((0, 1, 3, 5), (1, 4)),
    ((0, 1, 3, 6), (2, 4)),
    ((0, 1, 3, 7), (1, 3)),
    ((0, 1, 4, 8), (2, 4)),
    ((0, 1, 5, 9), (2,)),
    ((0, 2, 4, 7), (1, 4)),
    ((0, 2, 5, 8), (1, 4)),
    ((0, 2, 5, 9), (1, 3)),
    ((0, 3, 6, 10), (1, 4)),
    ((0, 1, 2, 4), (1, 4)),
    ((0, 1, 2, 4), (2, 4)),
    ((0, 4, 8, 12), (1,)),
]


def cyclic_gamma(drop=()):
    """The sixteen half-spaces of the cyclic cone, numbered 1..16; ``drop`` removes some."""
    return [H(a, s) for k, (a, s) in enumerate(CYCLIC_ROWS, start=1) if k not in drop]


def arcs1(g):
    """Arc set of a hypergraph with 1-based tuples."""
    return {(tuple(sorted(i + 1 for i in t)), tuple(sorted(i + 1 for i in h))) for t, h in g.arcs}
