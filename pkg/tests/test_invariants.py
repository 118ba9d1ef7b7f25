import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zcert import (
    IsolatedVertexError,
    first_zagreb,
    forgotten_index,
    from_edge_list,
    inverse_degree,
    min_max_degree,
    profile,
    radon_chain,
)

from conftest import random_graph
from named import complete, complete_bipartite, cycle, hypercube3, petersen, star


def test_first_zagreb_examples():
    assert first_zagreb(cycle(4)) == 16
    assert first_zagreb(complete(4)) == 36
    assert first_zagreb(from_edge_list(1, [])) == 0


def test_forgotten_examples():
    assert forgotten_index(cycle(4)) == 32
    assert forgotten_index(petersen()) == 270
    assert forgotten_index(from_edge_list(1, [])) == 0


def test_inverse_degree_examples():
    assert inverse_degree(cycle(4)) == 2
    assert inverse_degree(complete(4)) == Fraction(4, 3)
    with pytest.raises(IsolatedVertexError):
        inverse_degree(from_edge_list(1, []))


def test_min_max_degree():
    assert min_max_degree(star(3)) == (1, 3)
    assert min_max_degree(cycle(4)) == (2, 2)
    assert min_max_degree(from_edge_list(1, [])) == (0, 0)
    with pytest.raises(ValueError):
        min_max_degree(from_edge_list(0, []))


def test_profile_named_graphs():
    p = profile(petersen())
    assert (p.n, p.e, p.delta, p.Delta) == (10, 15, 3, 3)
    assert (p.z1, p.f, p.inv) == (90, 270, Fraction(10, 3))
    q = profile(hypercube3())
    assert (q.n, q.e, q.z1, q.f, q.inv) == (8, 12, 72, 216, Fraction(8, 3))
    k23 = profile(complete_bipartite(2, 3))
    assert (k23.n, k23.e, k23.delta, k23.Delta) == (5, 6, 2, 3)
    assert (k23.z1, k23.f, k23.inv) == (30, 78, Fraction(13, 6))


def test_profile_tolerates_isolated_vertex():
    p = profile(from_edge_list(3, [(0, 1)]))
    assert p.inv is None
    assert p.delta == 0 and p.z1 == 2


def test_profile_with_structure():
    p = profile(petersen(), with_structure=True)
    assert p.beta == 4 and p.kappa == 3


def test_radon_chain_example():
    lhs, mid, rhs = radon_chain([Fraction(1), Fraction(2)], [Fraction(1), Fraction(1)])
    assert (lhs, mid, rhs) == (Fraction(9, 4), Fraction(1), Fraction(0))
    assert lhs >= mid >= rhs


def test_radon_chain_equality_cases():
    vec = [Fraction(3, 2), Fraction(5), Fraction(1, 7)]
    lhs, mid, _ = radon_chain(vec, vec)
    assert lhs == 0 and mid == 0
    lhs, mid, _ = radon_chain([Fraction(3)], [Fraction(5)])
    assert lhs == 0 and mid == 0


def test_radon_chain_errors():
    with pytest.raises(ValueError):
        radon_chain([Fraction(1)], [Fraction(1), Fraction(2)])
    with pytest.raises(ValueError):
        radon_chain([Fraction(0)], [Fraction(1)])
    with pytest.raises(ValueError):
        radon_chain([], [])


positive_fractions = st.fractions(min_value=Fraction(1, 100), max_value=100)


@given(st.integers(1, 8).flatmap(
    lambda s: st.tuples(
        st.lists(positive_fractions, min_size=s, max_size=s),
        st.lists(positive_fractions, min_size=s, max_size=s))))
@settings(max_examples=300, deadline=None)
def test_radon_chain_property(pair):
    a, b = pair
    lhs, mid, rhs = radon_chain(a, b)
    assert lhs >= mid >= rhs == 0


def test_indices_invariant_under_relabeling(rng):
    for _ in range(40):
        n = rng.randrange(2, 9)
        g = random_graph(rng, n, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        h = from_edge_list(n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert first_zagreb(g) == first_zagreb(h)
        assert forgotten_index(g) == forgotten_index(h)


def test_index_degree_bounds(rng):
    # n*delta^2 <= Z1 <= n*Delta^2 and friends, for graphs with delta >= 1
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randrange(2, 10), 0.3 + 0.7 * rng.random())
        delta, Delta = min_max_degree(g)
        if delta == 0:
            continue
        checked += 1
        n = g.n
        assert n * delta ** 2 <= first_zagreb(g) <= n * Delta ** 2
        assert n * delta ** 3 <= forgotten_index(g) <= n * Delta ** 3
        assert Fraction(n, Delta) <= inverse_degree(g) <= Fraction(n, delta)
