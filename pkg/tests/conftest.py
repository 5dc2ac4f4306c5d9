import random

import pytest

from temporal_betweenness import from_edges


def make_random_network(seed, max_nodes, max_edges, t_max=50):
    """Seeded random temporal network; labels '0'..'n-1' map to indices."""
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        while v == u:
            v = rng.randrange(n)
        edges.append((str(u), str(v), rng.randint(1, t_max)))
    return from_edges(edges, nodes=[str(i) for i in range(n)])


def stp_corpus():
    """Corpus for shortest-path validation: 200 networks, n<=8, m<=20."""
    return [make_random_network(1000 + i, 8, 20) for i in range(200)]


def rtp_corpus():
    """Corpus for restless-walk validation: 200 networks, n<=6, m<=14."""
    return [make_random_network(2000 + i, 6, 14) for i in range(200)]


@pytest.fixture
def line_network():
    # a -> b -> c, one time-respecting path
    return from_edges([("a", "b", 1), ("b", "c", 2)])


@pytest.fixture
def diamond_network():
    # two shortest temporal paths s -> z, through x and through y
    return from_edges([("s", "x", 1), ("s", "y", 2), ("x", "z", 3), ("y", "z", 4)])


@pytest.fixture
def multi_appearance_network():
    # node a appears at two times; both shortest paths pass through it
    return from_edges([("s", "a", 1), ("s", "a", 2), ("a", "z", 3)])


@pytest.fixture
def cycle_network():
    # under delta=1 the only optimal walk is a->b->c->b->d (b visited twice)
    return from_edges(
        [("a", "b", 1), ("b", "c", 2), ("c", "b", 3), ("b", "d", 4)]
    )


@pytest.fixture
def path4_network():
    return from_edges([("a", "b", 1), ("b", "c", 2), ("c", "d", 3)])


@pytest.fixture
def star_network():
    # 2-in/2-out temporal star around c, n=5
    return from_edges(
        [("x1", "c", 1), ("x2", "c", 2), ("c", "y1", 3), ("c", "y2", 4)]
    )


@pytest.fixture
def untimely_network():
    # the edge into c precedes the edge out of a: no time-respecting path a->c
    return from_edges([("b", "c", 1), ("a", "b", 2)])
