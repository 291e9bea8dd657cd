"""Contraction action, dual supports, extremal elements, kernel search."""

import math
import random
from fractions import Fraction

import pytest

from lefschetz_props._kernels import BACKEND
from lefschetz_props.combinatorics import basis_size, monomial_basis
from lefschetz_props.duality import (
    DualElement,
    contract,
    contraction_matrix,
    dual_ideal_from_support,
    ell_power_contract,
    extremal_dual,
    inverse_system_piece,
    kernel_witness,
    min_kernel_support,
)
from lefschetz_props.errors import BudgetExceededError
from lefschetz_props.exactlinalg import rank
from lefschetz_props.ideals import MonomialIdeal, is_artinian
from lefschetz_props.lefschetz import mult_map_matrix


def dual(n, terms):
    return DualElement.from_terms(n, terms)


def test_contract_examples():
    assert contract((1, 0, 0), dual(3, {(2, 0, 0): 1})).support == {(1, 0, 0): 2}
    f = dual(3, {(0, 1, 0): 1, (0, 0, 1): -1})
    total = sum(
        (contract(m, f).support.get((0, 0, 0), 0))
        for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    )
    assert total == 0
    assert contract((1, 1, 0), dual(3, {(1, 1, 1): 1})).support == {(0, 0, 1): 1}


def test_contract_degree_overrun():
    with pytest.raises(ValueError):
        contract((2, 0, 0), dual(3, {(1, 0, 0): 1}))


def test_contract_contravariant():
    rng = random.Random(31)
    for _ in range(25):
        d = rng.randint(2, 5)
        support = {
            m: Fraction(rng.randint(-4, 4))
            for m in rng.sample(monomial_basis(3, d), rng.randint(1, 5))
        }
        support = {m: c for m, c in support.items() if c}
        if not support:
            continue
        f = dual(3, support)
        m1 = tuple(rng.randint(0, 1) for _ in range(3))
        m2 = tuple(rng.randint(0, 1) for _ in range(3))
        if sum(m1) + sum(m2) > d:
            continue
        prod = tuple(a + b for a, b in zip(m1, m2))
        assert contract(prod, f).support == contract(m1, contract(m2, f)).support


def test_ell_power_examples():
    assert ell_power_contract(dual(3, {(0, 1, 0): 1, (0, 0, 1): -1}), 1).is_zero()
    for d in range(2, 7):
        assert ell_power_contract(dual(3, {(d, 0, 0): 1}), d).support == {
            (0, 0, 0): math.factorial(d)
        }
    for d in range(3, 7):
        for i in range(2, d):
            f = kernel_witness(3, d, i)
            assert ell_power_contract(f, i).is_zero()


def test_inverse_system_piece_sizes():
    zero = MonomialIdeal(3, [])
    assert len(inverse_system_piece(zero, 4).dual_monomials) == basis_size(3, 4)
    bk = MonomialIdeal(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
    assert len(inverse_system_piece(bk, 3).dual_monomials) == 6
    full = MonomialIdeal(3, monomial_basis(3, 2))
    assert inverse_system_piece(full, 2).dual_monomials == ()


def test_dual_ideal_examples():
    f = kernel_witness(3, 3, 2)  # y1 (y2 - y3)^2
    I = dual_ideal_from_support(f.support_monomials(), 3, 3)
    assert len(I.generators) == 7
    assert I.hf(3) == 3
    assert is_artinian(I)
    everything = dual_ideal_from_support(monomial_basis(3, 2), 3, 2)
    assert everything.generators == ()
    single = dual_ideal_from_support([(0, 1, 3)], 3, 4)
    assert single.hf(4) == 1
    assert is_artinian(single)
    # a pure power inside the support removes it from the generators
    assert not is_artinian(dual_ideal_from_support([(4, 0, 0)], 3, 4))


def test_extremal_dual_examples():
    f, I = extremal_dual(3, 3, 2)
    assert f.support == {
        (1, 2, 0): 1, (1, 1, 1): -2, (1, 0, 2): 1,
    }
    assert I.hf(3) == 3
    for d in range(3, 7):
        for i in range(2, d):
            f, I = extremal_dual(3, d, i)
            assert len(f.support) == d - i + 2 == I.hf(d)
            assert ell_power_contract(f, i).is_zero()
            assert is_artinian(I)
    with pytest.raises(ValueError):
        extremal_dual(3, 4, 1)
    with pytest.raises(ValueError):
        extremal_dual(3, 4, 4)


def test_extremal_dual_more_variables():
    f, I = extremal_dual(4, 4, 2)
    assert len(f.support) == 4 == I.hf(4)
    assert ell_power_contract(f, 2).is_zero()
    assert is_artinian(I)


def test_min_kernel_support_examples():
    zero = MonomialIdeal(3, [])
    assert min_kernel_support(zero, 4, 2, bound=4) == 4
    assert min_kernel_support(zero, 4, 2, bound=3) is None
    for d in (2, 3, 4):
        assert min_kernel_support(MonomialIdeal(3, []), d, d, bound=2) == 2


def test_min_kernel_support_budget():
    with pytest.raises(BudgetExceededError):
        min_kernel_support(MonomialIdeal(3, []), 5, 2, bound=5, budget=10)


def test_min_kernel_support_bound_validation():
    with pytest.raises(ValueError):
        min_kernel_support(MonomialIdeal(3, []), 3, 2, bound=0)
    with pytest.raises(ValueError):
        min_kernel_support(MonomialIdeal(3, []), 3, 2, bound=11)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_min_support_grid_matches_bound(d):
    # over the full dual space the minimum is d-i+2 (power below the degree)
    # and 2 at the degree itself
    zero = MonomialIdeal(3, [])
    for i in range(1, d + 1):
        expected = d - i + 2 if i < d else 2
        assert min_kernel_support(zero, d, i, bound=expected) == expected
        if expected > 1:
            assert min_kernel_support(zero, d, i, bound=expected - 1) is None


@pytest.mark.skipif(
    BACKEND != "compiled",
    reason="the d=6 subset sweep needs the compiled kernel to stay in budget",
)
def test_min_support_grid_degree_six():
    zero = MonomialIdeal(3, [])
    for i in range(1, 7):
        expected = 6 - i + 2 if i < 6 else 2
        assert min_kernel_support(zero, 6, i, bound=expected) == expected


def test_rank_duality_on_brenner_kaid():
    bk = MonomialIdeal(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
    for i in (1, 2, 3):
        for j in range(0, 5 - i):
            primal = rank(mult_map_matrix(bk, None, i, j))
            dualr = rank(contraction_matrix(bk, i, j + i))
            assert primal == dualr


def test_dual_element_str_round_trip():
    from lefschetz_props.parsing import parse_dual_element

    f = kernel_witness(3, 4, 2)
    n, terms = parse_dual_element(str(f), 3)
    assert n == 3
    assert DualElement.from_terms(n, terms).support == f.support
