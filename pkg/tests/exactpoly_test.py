import random
from fractions import Fraction

import pytest

from qbinomial_identities.exactpoly import ONE
from qbinomial_identities.exactpoly import Q
from qbinomial_identities.exactpoly import ZERO
from qbinomial_identities.exactpoly import IntPoly
from qbinomial_identities.exactpoly import parse_poly
from qbinomial_identities.exactpoly import poly_dilate
from qbinomial_identities.exactpoly import poly_eval_int
from qbinomial_identities.exactpoly import poly_from_sympy
from qbinomial_identities.exactpoly import poly_from_terms
from qbinomial_identities.exactpoly import poly_monomial
from qbinomial_identities.exactpoly import poly_to_sympy
from qbinomial_identities.exactpoly import render_poly
from qbinomial_identities.exceptions import LiteralError
from qbinomial_identities.exceptions import ParameterError

GAUSS_4_2 = IntPoly([1, 1, 2, 1, 1])


def test_trailing_zeros_are_trimmed():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly([1, 2, 0]).degree == 1
    assert ZERO.degree is None
    assert ZERO.is_zero()
    assert not ZERO


def test_values_are_immutable():
    with pytest.raises(AttributeError):
        ONE.coeffs = (2,)


def test_equality_with_integers():
    assert IntPoly([3]) == 3
    assert ZERO == 0
    assert Q != 1
    assert hash(IntPoly([3])) == hash(3)
    assert hash(ZERO) == hash(0)
    assert {IntPoly([3]), 3, ZERO, 0} == {3, 0}


@pytest.mark.parametrize("coefficients", [[1.5], [1, Fraction(1, 2)], ["1"], [None]])
def test_non_integer_coefficients(coefficients):
    with pytest.raises(ParameterError):
        IntPoly(coefficients)


def test_arithmetic():
    assert IntPoly([1, 0, 1]) * IntPoly([1, 1, 1]) == GAUSS_4_2
    assert IntPoly([1, 1]) - IntPoly([1, 1]) == ZERO
    assert 1 - Q == IntPoly([1, -1])
    assert Q + 1 == IntPoly([1, 1])
    assert -Q == IntPoly([0, -1])
    assert 3 * Q == IntPoly([0, 3])
    assert Q * ZERO == ZERO
    assert Q.shift(2) == IntPoly([0, 0, 0, 1])
    assert ZERO.shift(5) == ZERO


def test_product_agrees_with_sympy():
    rng = random.Random(7)
    for _ in range(20):
        a = IntPoly(rng.randint(-50, 50) for _ in range(rng.randint(1, 15)))
        b = IntPoly(rng.randint(-50, 50) for _ in range(rng.randint(1, 15)))
        expected = poly_from_sympy(poly_to_sympy(a) * poly_to_sympy(b))
        assert a * b == expected


def test_dilate():
    assert poly_dilate(IntPoly([1, 1]), 3) == IntPoly([1, 0, 0, 1])
    assert poly_dilate(GAUSS_4_2, 1) == GAUSS_4_2
    assert Q.dilate(2) == IntPoly([0, 0, 1])
    with pytest.raises(ParameterError):
        poly_dilate(Q, 0)


def test_evaluate():
    assert poly_eval_int(GAUSS_4_2, 1) == 6
    assert poly_eval_int(GAUSS_4_2, 2) == 35
    assert poly_eval_int(ZERO, 5) == 0
    assert IntPoly([1, -1]).evaluate(-1) == 2


def test_evaluation_is_a_ring_map_compatible_with_dilation():
    rng = random.Random(11)
    for _ in range(50):
        a = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(0, 10)))
        b = IntPoly(rng.randint(-20, 20) for _ in range(rng.randint(0, 10)))
        r = rng.randint(1, 4)
        v = rng.randint(-5, 5)
        assert poly_eval_int(poly_dilate(a, r), v) == poly_eval_int(a, v ** r)
        assert poly_eval_int(a * b, v) == poly_eval_int(a, v) * poly_eval_int(b, v)
        assert poly_eval_int(a + b, v) == poly_eval_int(a, v) + poly_eval_int(b, v)


def test_monomial():
    assert poly_monomial(-2, 3) == IntPoly([0, 0, 0, -2])
    assert poly_monomial(0, 3) == ZERO
    with pytest.raises(ParameterError):
        poly_monomial(1, -1)


def test_from_terms():
    assert poly_from_terms([(1, 2), (1, 2), (-1, 0)]) == IntPoly([-1, 0, 2])
    assert poly_from_terms([(1, 1), (-1, 1)]) == ZERO
    assert poly_from_terms([]) == ZERO


def test_render():
    assert render_poly(GAUSS_4_2) == "1 + q + 2*q^2 + q^3 + q^4"
    assert render_poly(ZERO) == "0"
    assert render_poly(IntPoly([0, -1, 0, 2])) == "-q + 2*q^3"
    assert render_poly(IntPoly([-3])) == "-3"
    assert render_poly(IntPoly([1, -1])) == "1 - q"
    assert render_poly(IntPoly([0, 0, -5])) == "-5*q^2"
    assert render_poly(Q, variable="x") == "x"


def test_parse():
    assert parse_poly("1 + q + 2*q^2 + q^3 + q^4") == GAUSS_4_2
    assert parse_poly("(1 + q)*(1 - q)") == IntPoly([1, 0, -1])
    assert parse_poly("0") == ZERO
    assert parse_poly("7") == IntPoly([7])
    assert parse_poly(render_poly(IntPoly([0, -1, 0, 2]))) == IntPoly([0, -1, 0, 2])


@pytest.mark.parametrize(
    "text",
    [
        "q/2",
        "q^-1",
        "x + q",
        "1 +",
        "sin(q)",
        "",
        "__import__('os').getcwd() or q",
        "q.__class__",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(LiteralError):
        parse_poly(text)


def test_parse_does_not_evaluate_python(tmp_path):
    marker = tmp_path / "marker"
    with pytest.raises(LiteralError):
        text = "__import__('pathlib').Path({m!r}).touch() or q"
        parse_poly(text.format(m=str(marker)))
    assert not marker.exists()
