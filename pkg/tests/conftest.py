import itertools

import pytest

from legtheta import parse, realize_theta, theta_realizable

HEADER = """mode theta
vertex a degree 3
vertex b degree 3
edge e1 a b
edge e2 a b
edge e3 a b
events:
"""

PARALLEL = HEADER + "V a 0 in=0 out=3 labels=e3,e2,e1\nV b 0 in=3 out=0\n"
ANTIPARALLEL = HEADER + "V a 0 in=0 out=3 labels=e3,e2,e1\nX 0\nV b 0 in=3 out=0\n"


def theta(body: str):
    return parse(HEADER + body)


def realizable_vectors(tb_range=range(-6, 0), Rs=(0, -1)):
    """Every admissible (tb, rot) pair of triples with tb_i in ``tb_range``."""
    for tbv in itertools.product(tb_range, repeat=3):
        rots = [[r for r in range(t + 1, -t) if (t + r) % 2 and t + abs(r) <= -1] for t in tbv]
        for rotv in itertools.product(*rots):
            if rotv[0] - rotv[1] + rotv[2] in Rs:
                yield tbv, rotv


def small_corpus():
    """Realizations with tb_i >= -3: push-offs stay under 24 crossings for most."""
    return [realize_theta(t, r) for t, r in realizable_vectors(range(-3, 0))]


@pytest.fixture
def parallel():
    return parse(PARALLEL)


@pytest.fixture
def antiparallel():
    return parse(ANTIPARALLEL)


@pytest.fixture
def seeds():
    return [parse(PARALLEL), parse(ANTIPARALLEL),
            realize_theta((-2, -2, -2), (1, 1, -1)),
            realize_theta((-1, -1, -2), (0, 0, -1)),
            realize_theta((-1, -5, -3), (0, 0, 0))]
