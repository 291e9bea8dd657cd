"""Monomial bases, multinomials, and the binomial-expansion calculus."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz_props.combinatorics import (
    BinomialExpansion,
    basis_index,
    basis_size,
    binom,
    macaulay_expansion,
    macaulay_growth,
    macaulay_lower,
    monomial_basis,
    multinomial,
)


def all_strict_expansions(m, i, top_bound):
    """Brute-force oracle: every expansion of m over consecutive bottoms
    i, i-1, ..., j >= 1 with strictly decreasing tops."""
    out = []
    for t in range(i, top_bound):
        c = math.comb(t, i)
        if c > m:
            break
        if c == m:
            out.append(((t, i),))
        elif i > 1:
            for rest in all_strict_expansions(m - c, i - 1, t):
                out.append(((t, i),) + rest)
    return out


@pytest.mark.parametrize(
    "n,d,count", [(3, 2, 6), (3, 5, 21), (4, 2, 10), (5, 3, 35), (3, 0, 1)]
)
def test_basis_counts(n, d, count):
    assert len(monomial_basis(n, d)) == count == basis_size(n, d)


def test_basis_colex_order():
    assert monomial_basis(3, 2) == (
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    )


def test_basis_properties():
    for n, d in [(3, 4), (4, 3), (5, 2)]:
        mons = monomial_basis(n, d)
        assert len(set(mons)) == len(mons)
        assert all(sum(m) == d and len(m) == n for m in mons)
        assert mons[0] == (d,) + (0,) * (n - 1)
        assert basis_index(n, d)[mons[-1]] == len(mons) - 1
    # deterministic across calls
    assert monomial_basis(3, 4) is monomial_basis(3, 4)


def test_basis_validation():
    with pytest.raises(ValueError):
        monomial_basis(0, 2)
    with pytest.raises(ValueError):
        monomial_basis(3, -1)


@pytest.mark.parametrize(
    "i,a,value", [(2, (1, 1, 0), 2), (3, (3, 0, 0), 1), (3, (1, 1, 1), 6)]
)
def test_multinomial_examples(i, a, value):
    assert multinomial(i, a) == value


def test_multinomial_degree_mismatch():
    with pytest.raises(ValueError):
        multinomial(2, (1, 1, 1))


@pytest.mark.parametrize("n,i", [(3, 2), (3, 4), (4, 3), (5, 2)])
def test_multinomial_sum_is_power(n, i):
    assert sum(multinomial(i, a) for a in monomial_basis(n, i)) == n**i


@pytest.mark.parametrize(
    "m,i,terms",
    [
        (5, 3, ((4, 3), (2, 2))),
        (10, 2, ((5, 2),)),  # greedy oracle below confirms uniqueness
        (1, 1, ((1, 1),)),
        (6, 3, ((4, 3), (2, 2), (1, 1))),
    ],
)
def test_macaulay_expansion_examples(m, i, terms):
    exp = macaulay_expansion(m, i)
    assert exp.terms == terms
    assert exp.value() == m


@pytest.mark.parametrize("m", list(range(1, 80)))
@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_expansion_matches_unique_strict_oracle(m, i):
    oracle = all_strict_expansions(m, i, m + i + 2)
    assert len(oracle) == 1
    assert macaulay_expansion(m, i).terms == oracle[0]


def test_expansion_round_trip_grid():
    for m in range(1, 501):
        for i in range(1, 11):
            exp = macaulay_expansion(m, i)
            assert exp.value() == m
            tops = [t for t, _ in exp.terms]
            bottoms = [b for _, b in exp.terms]
            assert all(a > b for a, b in zip(tops, tops[1:]))
            assert bottoms == list(range(i, i - len(bottoms), -1))
            assert bottoms[-1] >= 1
            assert all(t >= b for t, b in exp.terms)


@settings(max_examples=150, derandomize=True)
@given(st.integers(1, 10**6), st.integers(1, 12))
def test_expansion_round_trip_random(m, i):
    exp = macaulay_expansion(m, i)
    assert exp.value() == m
    tops = [t for t, _ in exp.terms]
    assert all(a > b for a, b in zip(tops, tops[1:]))


def test_expansion_validation():
    with pytest.raises(ValueError):
        macaulay_expansion(0, 1)
    with pytest.raises(ValueError):
        macaulay_expansion(3, 0)


@pytest.mark.parametrize("m,i,value", [(5, 3, 4), (0, 2, 0), (10, 2, 4)])
def test_macaulay_lower_examples(m, i, value):
    assert macaulay_lower(m, i) == value


def test_lower_identity_on_middle_range():
    # (m in d+1..2d-1 expanded at index d) shifts down to exactly m-1
    for d in range(2, 11):
        for m in range(d + 1, 2 * d):
            assert macaulay_lower(m, d) == m - 1


@pytest.mark.parametrize("m,i,value", [(3, 1, 6), (0, 5, 0), (5, 3, 6)])
def test_macaulay_growth_examples(m, i, value):
    assert macaulay_growth(m, i) == value


def test_growth_of_full_piece_is_next_full_piece():
    # growth of dim S_i equals dim S_{i+1} for the polynomial ring
    for n in range(1, 6):
        for i in range(1, 8):
            assert macaulay_growth(basis_size(n, i), i) == basis_size(n, i + 1)


def test_binomial_inequality_grid():
    # C(n+d-i-1, n-1) >= d-i+2 for n >= 3, 1 <= i <= d-1
    for n in range(3, 9):
        for d in range(2, 11):
            for i in range(1, d):
                assert binom(n + d - i - 1, n - 1) >= d - i + 2


def test_binomial_expansion_str_and_value():
    exp = BinomialExpansion(3, ((4, 3), (2, 2)))
    assert exp.value() == 5
    assert str(exp) == "C(4,3) + C(2,2)"
