import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_label
from digraph_ricci.errors import (
    InfiniteRequiredDistance,
    LipschitzViolation,
    MassMismatch,
    SupportTooLarge,
)
from digraph_ricci.families import (
    binary_tree,
    circulant,
    cycle_product,
    oriented_complete,
    rooted_in_tree,
)
from digraph_ricci.measure import SparseMeasure, build_walk_measure
from digraph_ricci.scalar import ONE_MINUS_EPSILON, Infinitesimal
from digraph_ricci.transport import lipschitz_objective, oracle_wasserstein, wasserstein
from oracles import dual_bruteforce

HALF = Fraction(1, 2)


def walk_pair(G, x, y, alpha):
    return build_walk_measure(G, x, alpha), build_walk_measure(G, y, alpha)


class TestFrozenValues:
    # expected values below come from tests/oracles.dual_bruteforce
    def test_identity(self, K5):
        m = build_walk_measure(K5, 0, HALF)
        res = wasserstein(m, m, K5)
        assert res.value == 0
        assert res.coupling == {(z, z): p for z, p in m.items()}

    def test_cycle_half(self, C5):
        mu, nu = walk_pair(C5, 0, 1, HALF)
        assert dual_bruteforce(mu, nu, C5.distance) == 1
        res = wasserstein(mu, nu, C5)
        assert res.value == 1
        # -d(x1, .) is an optimal potential here
        assert lipschitz_objective({0: 0, 1: -1, 2: -2}, mu, nu, C5) == 1

    def test_k5_limit(self, K5):
        mu, nu = walk_pair(K5, from_label(1), from_label(2), ONE_MINUS_EPSILON)
        expected = Infinitesimal(1, Fraction(-1, 4))
        assert dual_bruteforce(mu, nu, K5.distance) == expected
        assert wasserstein(mu, nu, K5).value == expected

    @pytest.mark.parametrize("k", [4, 5])
    def test_k5_limit_matches_rational_evaluation(self, K5, k):
        alpha = 1 - Fraction(1, 2**k)
        mu, nu = walk_pair(K5, 0, 1, alpha)
        assert wasserstein(mu, nu, K5).value == 1 - Fraction(1, 4) * (1 - alpha)

    def test_k5_half(self, K5):
        mu, nu = walk_pair(K5, 0, 1, HALF)
        assert dual_bruteforce(mu, nu, K5.distance) == Fraction(7, 8)
        assert oracle_wasserstein(mu, nu, K5) == Fraction(7, 8)


class TestLipschitzObjective:
    def test_constant_potential(self, K5):
        mu, nu = walk_pair(K5, 0, 1, HALF)
        assert lipschitz_objective({z: 5 for z in range(5)}, mu, nu, K5) == 0

    def test_k5_potential(self, K5):
        mu, nu = walk_pair(K5, from_label(1), from_label(2), ONE_MINUS_EPSILON)
        f = {from_label(1): 1, from_label(2): 0, from_label(3): 0, from_label(4): -1}
        assert lipschitz_objective(f, mu, nu, K5) == Infinitesimal(1, Fraction(-1, 4))

    def test_violation_names_pair(self, C5):
        mu, nu = walk_pair(C5, 0, 1, HALF)
        with pytest.raises(LipschitzViolation) as info:
            lipschitz_objective({0: 3, 1: 0, 2: 0}, mu, nu, C5)
        assert (info.value.u, info.value.v) == (0, 1)


class TestErrors:
    def test_mass_mismatch(self, C5):
        with pytest.raises(MassMismatch):
            wasserstein(SparseMeasure({0: HALF}), SparseMeasure({1: Fraction(1)}), C5)

    def test_infinite_distance(self):
        G = rooted_in_tree(binary_tree(2))
        with pytest.raises(InfiniteRequiredDistance):
            wasserstein(SparseMeasure({0: 1}), SparseMeasure({3: 1}), G)

    def test_oracle_support_limit(self):
        G = oriented_complete(15)
        mu, nu = walk_pair(G, 0, 1, HALF)
        with pytest.raises(SupportTooLarge):
            oracle_wasserstein(mu, nu, G)


class TestOracle:
    def test_point_masses(self, C5):
        assert oracle_wasserstein(SparseMeasure({0: 1}), SparseMeasure({3: 1}), C5) == 3

    def test_identity(self, C5):
        m = SparseMeasure({0: HALF, 1: HALF})
        assert oracle_wasserstein(m, m, C5) == 0


GRAPHS = [oriented_complete(5), oriented_complete(7), circulant(9, [1, 3]), cycle_product(3, 4), oriented_complete(8)]


def random_measure(rng, n, size):
    support = rng.sample(range(n), size)
    weights = [rng.randint(1, 6) for _ in support]
    total = sum(weights)
    return SparseMeasure({v: Fraction(w, total) for v, w in zip(support, weights)})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(GRAPHS) - 1), st.integers(0, 2**32), st.integers(1, 4), st.integers(1, 4))
def test_three_way_agreement_and_certificate(gi, seed, a, b):
    G = GRAPHS[gi]
    rng = random.Random(seed)
    mu, nu = random_measure(rng, G.n, a), random_measure(rng, G.n, b)
    res = wasserstein(mu, nu, G)
    assert res.value == oracle_wasserstein(mu, nu, G) == dual_bruteforce(mu, nu, G.distance)
    rows, cols = {}, {}
    for (u, v), m in res.coupling.items():
        assert m > 0
        rows[u] = rows.get(u, 0) + m
        cols[v] = cols.get(v, 0) + m
    assert SparseMeasure(rows) == mu and SparseMeasure(cols) == nu
    assert sum(m * G.distance(u, v) for (u, v), m in res.coupling.items()) == res.value
    assert lipschitz_objective(res.potential, mu, nu, G) == res.value
    assert res.potential[min(res.potential)] == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, len(GRAPHS) - 1), st.integers(0, 2**32))
def test_infinitesimal_walks(gi, seed):
    G = GRAPHS[gi]
    rng = random.Random(seed)
    x, y = rng.sample(range(G.n), 2)
    mu, nu = walk_pair(G, x, y, ONE_MINUS_EPSILON)
    res = wasserstein(mu, nu, G)
    assert res.value == oracle_wasserstein(mu, nu, G)
    assert Infinitesimal(0, 0) + res.value - G.distance(x, y) < Fraction(1, 10**9)
    assert (Infinitesimal(0, 0) + res.value).const == G.distance(x, y)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(GRAPHS) - 1), st.integers(0, 2**32))
def test_weak_duality_random_potentials(gi, seed):
    G = GRAPHS[gi]
    rng = random.Random(seed)
    mu, nu = random_measure(rng, G.n, 3), random_measure(rng, G.n, 3)
    w = wasserstein(mu, nu, G).value
    domain = sorted(set(mu) | set(nu))
    for _ in range(20):
        g = {z: Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for z in domain}
        # c-transform: min_v d(z, v) + g(v) is always 1-Lipschitz
        f = {z: min(G.distance(z, v) + g[v] for v in domain) for z in domain}
        assert lipschitz_objective(f, mu, nu, G) <= w


def test_deterministic_coupling(K5):
    mu, nu = walk_pair(K5, 0, 1, HALF)
    assert wasserstein(mu, nu, K5) == wasserstein(mu, nu, K5)


@given(
    st.lists(
        st.tuples(
            st.fractions(min_value=-5, max_value=5, max_denominator=12),
            st.fractions(min_value=-5, max_value=5, max_denominator=12),
        ),
        min_size=2,
        max_size=6,
    ),
    st.integers(min_value=1, max_value=4),
)
def test_integer_encoding_preserves_order_and_sums(pairs, max_cost):
    from digraph_ricci.transport import _integer_encoding

    xs = [Infinitesimal(a, b) for a, b in pairs]
    encode, decode = _integer_encoding(xs, max_cost)
    for x in xs:
        assert decode(encode(x)) == x
        for y in xs:
            assert (encode(x) < encode(y)) == (x < y)
    total = sum((x * max_cost for x in xs), Fraction(0))
    assert decode(sum(encode(x) * max_cost for x in xs)) == total
