"""Ideal and dual-element grammar, including positioned errors."""

from fractions import Fraction

import pytest

from lefschetz_props.ideals import FormIdeal, MonomialIdeal
from lefschetz_props.parsing import (
    IdealSyntaxError,
    format_monomial,
    format_terms,
    parse_dual_element,
    parse_ideal,
    parse_inline_ideal,
)


def test_parse_monomial_symbolic():
    I = parse_ideal("x1^3\nx2^3\nx3^3\nx1*x2*x3\n")
    assert isinstance(I, MonomialIdeal)
    assert I.n == 3
    assert set(I.generators) == {(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)}


def test_parse_exponent_vectors():
    I = parse_ideal("2 0 1\n0 2 0\n")
    assert isinstance(I, MonomialIdeal)
    assert set(I.generators) == {(2, 0, 1), (0, 2, 0)}


def test_parse_mixed_lines_with_comments():
    text = "# a comment\nx1^2  # trailing\n\n0 2 0\n"
    I = parse_ideal(text)
    assert set(I.generators) == {(2, 0, 0), (0, 2, 0)}


def test_parse_form_ideal():
    I = parse_ideal("3*x1^2 - x2*x3\n1/2*x2^2 + x1*x3\n")
    assert isinstance(I, FormIdeal)
    assert I.n == 3
    (d0, terms0), (d1, terms1) = I.generators
    assert d0 == d1 == 2
    assert dict(terms0) == {(2, 0, 0): 3, (0, 1, 1): -1}
    assert dict(terms1) == {(0, 2, 0): Fraction(1, 2), (1, 0, 1): 1}


def test_parse_signs_and_rationals():
    I = parse_ideal("-x1^2 + 2/3*x1*x2 - -1*x2^2\n", arity=2)
    (deg, terms), = I.generators
    assert deg == 2
    assert dict(terms) == {
        (2, 0): -1, (1, 1): Fraction(2, 3), (0, 2): 1,
    }


def test_parse_inline():
    I = parse_inline_ideal("x1^3,x2^3,x3^3,x1*x2*x3")
    assert isinstance(I, MonomialIdeal)
    assert len(I.generators) == 4


def test_arity_inference_and_override():
    I = parse_ideal("x1*x2\n", arity=4)
    assert I.n == 4
    assert I.generators == ((1, 1, 0, 0),)
    with pytest.raises(IdealSyntaxError):
        parse_ideal("x1*x5\n", arity=3)


def test_exponent_vector_width_consistency():
    with pytest.raises(IdealSyntaxError) as err:
        parse_ideal("2 0 1\n1 0\n")
    assert err.value.line == 2


def test_error_positions():
    with pytest.raises(IdealSyntaxError) as err:
        parse_ideal("x1^3\nx2^@3\n")
    assert (err.value.line, err.value.column) == (2, 4)
    with pytest.raises(IdealSyntaxError) as err:
        parse_ideal("x1 +\n")
    assert err.value.line == 1
    with pytest.raises(IdealSyntaxError) as err:
        parse_ideal("3*x1/2\n")
    assert err.value.line == 1
    with pytest.raises(IdealSyntaxError):
        parse_ideal("")
    with pytest.raises(IdealSyntaxError):
        parse_ideal("y1^2\n")  # ideals use x


def test_parse_dual_element():
    n, terms = parse_dual_element("y1*y2^2 - 2*y1*y2*y3 + y1*y3^2")
    assert n == 3
    assert terms == {(1, 2, 0): 1, (1, 1, 1): -2, (1, 0, 2): 1}
    with pytest.raises(IdealSyntaxError):
        parse_dual_element("y1\ny2\n")  # two elements


def test_format_round_trips():
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0, 0)) == "1"
    s = format_terms([((1, 2, 0), 1), ((1, 1, 1), -2)], "y")
    assert s == "y1*y2^2 - 2*y1*y2*y3"
    n, terms = parse_dual_element(s)
    assert terms == {(1, 2, 0): 1, (1, 1, 1): -2}
    s2 = format_terms([((2, 0), Fraction(1, 2)), ((0, 2), Fraction(-3, 4))], "x")
    I = parse_ideal(s2, arity=2)
    (deg, items), = I.generators
    assert dict(items) == {(2, 0): Fraction(1, 2), (0, 2): Fraction(-3, 4)}


def test_repeated_variables_multiply():
    I = parse_ideal("x1*x1*x2\n")
    assert I.generators == ((2, 1),) or I.generators == ((2, 1, 0),)[:1]
    # arity inferred from the largest index seen
    assert I.n == 2
    assert I.generators == ((2, 1),)
