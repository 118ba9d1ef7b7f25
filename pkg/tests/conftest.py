import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_graph(rng, n: int, p: float):
    from zcert import from_edge_list

    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edge_list(n, edges)
