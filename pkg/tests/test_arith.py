"""Numerical semigroup primitives against brute-force oracles."""

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from wcikit.arith import (
    SemigroupTable,
    brauer_bound,
    brauer_bound_min,
    factorize,
    frobenius,
    gcd_many,
    is_prime,
    lcm_many,
    monomial_count,
    representable,
)
from wcikit.errors import DomainError, UsageError


def test_gcd_lcm_basics():
    assert gcd_many([12, 18, 30]) == 6
    assert gcd_many([7]) == 7
    assert lcm_many([2, 3, 5]) == 30
    assert lcm_many([6, 10, 15]) == 30


def test_gcd_lcm_empty_rejected():
    with pytest.raises(UsageError):
        gcd_many([])
    with pytest.raises(UsageError):
        lcm_many([])


def test_is_prime_small():
    primes = [p for p in range(2, 60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert not is_prime(1)
    assert not is_prime(0)


def test_factorize_round_trip():
    for n in (2, 12, 30, 97, 360, 1024, 35 * 35):
        fac = factorize(n)
        prod = 1
        for p, e in fac:
            assert is_prime(p)
            prod *= p**e
        assert prod == n
    assert factorize(1) == []


@given(
    d=st.integers(min_value=0, max_value=60),
    weights=st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=6),
)
def test_representable_matches_oracle(d, weights):
    assert representable(d, weights) == oracles.representable(d, tuple(weights))


@given(
    d=st.integers(min_value=0, max_value=40),
    weights=st.lists(st.integers(min_value=1, max_value=10), min_size=1, max_size=5),
)
def test_monomial_count_matches_oracle(d, weights):
    assert monomial_count(d, weights) == oracles.monomial_count(d, tuple(weights))


def test_monomial_count_examples():
    assert monomial_count(8, [2, 2, 2, 2]) == 35  # compositions of 4 into 4 parts
    assert monomial_count(35, [2] * 5) == 0
    assert monomial_count(0, [3, 5]) == 1
    assert monomial_count(6, [1, 2, 3]) == 7


def test_semigroup_table_prefix():
    table = SemigroupTable.build([3, 5], 15)
    hits = [k for k in range(16) if table.contains(k)]
    assert hits == [0, 3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15]
    assert table.gaps() == (1, 2, 4, 7)


def test_semigroup_table_counts_match_monomials():
    table = SemigroupTable.build([2, 2, 3], 12, with_counts=True)
    assert table.counts is not None
    for k in range(13):
        assert table.counts[k] == monomial_count(k, [2, 2, 3])


def test_frobenius_pairs_closed_form():
    assert frobenius([2, 3]) == 1
    assert frobenius([3, 5]) == 7
    assert frobenius([5, 8]) == 27


def test_frobenius_classics():
    assert frobenius([6, 10, 15]) == 29
    assert frobenius([10, 14, 15, 21]) == 47
    assert frobenius([1, 7]) == -1


def test_frobenius_requires_gcd_one():
    with pytest.raises(DomainError):
        frobenius([6, 10])
    with pytest.raises(UsageError):
        frobenius([])


@settings(max_examples=150)
@given(
    gens=st.lists(st.integers(min_value=2, max_value=30), min_size=2, max_size=4).filter(
        lambda g: gcd_many(g) == 1
    )
)
def test_frobenius_matches_oracle(gens):
    assert frobenius(gens) == oracles.frobenius(gens)


def test_brauer_bound_order_sensitive():
    assert brauer_bound([10, 15, 14, 21]) == 61
    assert brauer_bound([2, 3]) == 1  # sharp for coprime pairs: ab - a - b
    assert brauer_bound_min([10, 15, 14, 21]) == 61


@settings(max_examples=100)
@given(
    gens=st.lists(st.integers(min_value=2, max_value=24), min_size=2, max_size=4).filter(
        lambda g: gcd_many(g) == 1
    )
)
def test_brauer_bound_dominates_frobenius(gens):
    f = frobenius(gens)
    assert brauer_bound(gens) >= f
    assert brauer_bound_min(gens) >= f
