import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sidoncolor import BudgetExceeded, SidonSet, sidon
from sidoncolor.sidon import (
    aux_graph_components,
    density_R,
    density_S,
    density_T,
    factor_profile,
    generate_R,
    generate_S,
    generate_T,
    is_k_multiplicative,
    is_k_multiplicative_naive,
    max_sidon_subset,
    min_neighbourhood_check,
)

import oracles


# -- factor profiles ----------------------------------------------------------

def test_factor_profile_examples():
    p = factor_profile(12, 3)
    assert p.primes == (2, 3) and p.small_exponents == (2, 1) and p.coprime_part == 1
    p = factor_profile(45, 4)
    assert p.small_exponents == (0, 2) and p.coprime_part == 5
    assert 3**2 * 5 == 45
    p = factor_profile(77, 1)
    assert p.primes == () and p.small_exponents == () and p.coprime_part == 77


@pytest.mark.parametrize("x,k", [(0, 3), (5, 0), (-2, 2)])
def test_factor_profile_rejects(x, k):
    with pytest.raises(ValueError):
        factor_profile(x, k)


@given(st.integers(1, 10**6), st.integers(1, 40))
def test_factor_profile_reconstructs(x, k):
    p = factor_profile(x, k)
    assert p.value() == x
    assert math.gcd(p.coprime_part, sidon.primorial(k)) == 1


# -- verification -------------------------------------------------------------

@pytest.mark.parametrize("elements,k,expected", [
    ({1, 3, 5, 7}, 2, True),
    ({2, 3}, 3, False),
    ({1, 7, 11, 13, 17}, 6, True),
    ({1, 2}, 2, False),
    (set(), 5, True),
])
def test_is_k_multiplicative_examples(elements, k, expected):
    assert is_k_multiplicative(elements, k) is expected
    assert is_k_multiplicative_naive(elements, k) is expected


def test_violation_witness():
    a, b, x, y = sidon.find_violation([2, 3], 3)
    assert (a, b, x, y) == (3, 2, 2, 3)
    assert a * x == b * y


@settings(max_examples=1000)
@given(st.sets(st.integers(1, 100), max_size=12), st.integers(1, 10))
def test_fast_check_matches_quadruple_scan(elements, k):
    assert is_k_multiplicative(elements, k) == is_k_multiplicative_naive(elements, k)


def test_sidonset_rejects_bad_input():
    with pytest.raises(ValueError):
        SidonSet(3, (2, 3))
    with pytest.raises(ValueError):
        SidonSet(2, (3, 1))
    with pytest.raises(ValueError):
        SidonSet(0, (1,))
    assert SidonSet(3, (1, 4, 7)).prefix(2).elements == (1, 4)


# -- generators ---------------------------------------------------------------

def test_generate_R_examples():
    assert generate_R(3, 5).elements == (1, 4, 7, 10, 13)
    assert generate_R(1, 4).elements == (1, 2, 3, 4)
    assert generate_R(4, 3).elements == (1, 5, 9)
    assert is_k_multiplicative_naive((1, 5, 9), 4)


def test_generate_S_examples():
    assert generate_S(5, 53).elements == (1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53)
    assert generate_S(2, 10).elements == (1, 3, 5, 7, 9)
    assert generate_S(13, 71).elements == (1, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)
    assert generate_S(1, 6).elements == tuple(range(1, 7))


def test_generate_T_examples():
    assert generate_T(2, 21).elements == (1, 3, 4, 5, 7, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21)
    assert generate_T(7, 47).elements == (1, 8, 9, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 47)
    assert generate_T(9, 47).elements == (1, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47)


def test_exponent_moduli():
    # floor(log_p k) + 1 checked against float logs away from exact powers
    for k in range(2, 200):
        for p, a in zip(sidon.primes_upto(k), sidon.exponent_moduli(k)):
            assert p ** (a - 1) <= k < p**a


@pytest.mark.parametrize("k", range(1, 31))
def test_generated_prefixes_pass_naive_check(k):
    for gen in (lambda: generate_R(k, 200 // k + 1), lambda: generate_S(k, 200), lambda: generate_T(k, 200)):
        s = gen()
        s = [x for x in s.elements if x <= 200]
        assert is_k_multiplicative_naive(s, k)


# -- densities ----------------------------------------------------------------

def test_density_examples():
    assert density_S(5) == Fraction(4, 15)
    assert density_T(2) == Fraction(2, 3)
    assert density_T(11) == Fraction(77, 312)
    assert density_S(29) == Fraction(442368, 2800733)
    assert density_R(7) == Fraction(1, 7)
    assert density_S(1) == density_T(1) == 1


@pytest.mark.parametrize("k", range(1, 14))
def test_density_S_matches_period_count(k):
    period = sidon.primorial(k)
    if period > 10**5:
        pytest.skip("period too long for a direct count")
    assert sidon.density_periodic("s", period, k) == density_S(k)


@pytest.mark.parametrize("k", range(2, 16))
def test_density_T_matches_count(k):
    # T_k splits into exponent classes, each a scaled copy of S_k whose count
    # is within 2^l of its expectation (inclusion-exclusion over l primes)
    n = 10**5
    primes = sidon.primes_upto(k)
    classes = math.prod(math.floor(math.log(n, p)) + 1 for p in primes)
    count = sum(sidon.in_T(x, k) for x in range(1, n + 1))
    assert abs(count - n * density_T(k)) <= (classes + 1) * 2 ** len(primes)


@pytest.mark.parametrize("k", range(1, 14))
def test_S_membership_periodic(k):
    period = sidon.primorial(k)
    if period > 10**5:
        pytest.skip("period too long")
    for x in range(1, 3 * period + 1):
        assert sidon.in_S(x, k) == sidon.in_S(x + period, k)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_empirical_density_converges(k):
    delta, period = density_S(k), sidon.primorial(k)
    count = 0
    for n in range(1, 10**4 + 1):
        count += sidon.in_S(n, k)
        assert abs(Fraction(count, n) - delta) <= Fraction(period, n)


@pytest.mark.parametrize("k", range(1, 16))
def test_S_subset_of_T(k):
    assert set(generate_S(k, 500)) <= set(generate_T(k, 500))


def test_T2_growth_envelope():
    t2 = list(itertools.islice(sidon.iter_set("t", 2), 10**4))
    for d, t in enumerate(t2, start=1):
        assert t <= math.ceil(3 * d / 2) + 8 * math.ceil(math.log2(d + 1))


# -- auxiliary graph ----------------------------------------------------------

def test_components_examples():
    comps = [c.members for c in aux_graph_components(10, 2)]
    assert comps == [(1, 2, 4, 8), (3, 6), (5, 10), (7,), (9,)]
    assert [c.members for c in aux_graph_components(5, 5)] == [(1, 2, 3, 4, 5)]
    assert [c.members for c in aux_graph_components(1, 3)] == [(1,)]


@pytest.mark.parametrize("n,k", [(n, k) for n in (1, 7, 18, 30, 45) for k in (2, 3, 4, 6)])
def test_components_match_explicit_graph(n, k):
    ours = sorted(list(c.members) for c in aux_graph_components(n, k))
    assert ours == oracles.components(oracles.explicit_aux_graph(n, k))
    for c in aux_graph_components(n, k):
        assert all(sidon.coprime_part(x, k) == c.seed for x in c.members)
        assert sidon.in_S(c.seed, k)


@given(st.integers(1, 60), st.integers(2, 8))
def test_adjacency_matches_definition(n, k):
    adj = oracles.explicit_aux_graph(n, k)
    for x in range(1, n + 1):
        assert sidon.closed_neighbourhood(x, n, k) == adj[x] | {x}


@pytest.mark.parametrize("n,k", [(n, k) for n in (10, 40, 100) for k in (2, 3, 5, 7)])
def test_start_clique(n, k):
    for comp in aux_graph_components(n, k):
        r = min(k, len(comp.members))
        assert comp.members[:r] == tuple(i * comp.seed for i in range(1, r + 1))


@pytest.mark.parametrize("n,k", [(30, 4), (100, 9), (5, 2), (60, 16), (80, 25)])
def test_min_neighbourhood(n, k):
    assert min_neighbourhood_check(n, k)


# -- maximum subsets ----------------------------------------------------------

def test_max_subset_examples():
    best = max_sidon_subset(10, 2)
    assert len(best) == 6 and best.elements == (1, 3, 4, 5, 7, 9)
    for k in range(1, 9):
        assert len(max_sidon_subset(k, k)) == 1
    assert len(max_sidon_subset(20, 2)) == 14 == len(generate_T(2, 20))


@pytest.mark.parametrize("n,k", [(n, k) for n in (1, 6, 13, 22) for k in (2, 3, 4)])
def test_max_subset_matches_brute_force(n, k):
    best = max_sidon_subset(n, k)
    assert is_k_multiplicative_naive(best.elements, k)
    assert len(best) == oracles.max_independent_set_size(oracles.explicit_aux_graph(n, k))


@pytest.mark.parametrize("n,k", [(n, k) for n in (5, 17, 29, 40) for k in range(1, 6)])
def test_max_subset_beats_constructions(n, k):
    size = len(max_sidon_subset(n, k))
    r_prefix = len([x for x in range(1, n + 1) if sidon.in_R(x, k)])
    assert size >= max(len(generate_S(k, n)), len(generate_T(k, n)), r_prefix)


def test_max_subset_budget():
    with pytest.raises(BudgetExceeded) as info:
        max_sidon_subset(60, 3, budget=5)
    partial = info.value.best
    assert isinstance(partial, SidonSet) and is_k_multiplicative(partial.elements, 3)
    assert info.value.optimal is False


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SIDON_COLOR_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        max_sidon_subset(60, 3)
