#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact arithmetic on polynomials in one variable q with arbitrary precision
integer coefficients.

A polynomial is stored densely: index i holds the coefficient of q^i. The
highest stored coefficient is never zero; the zero polynomial stores nothing.
"""

from __future__ import absolute_import
from __future__ import division

import collections
import re
from tokenize import TokenError

from sympy import Poly
from sympy import Symbol
from sympy import SympifyError
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations
from sympy.polys.polyerrors import PolynomialError

from .constants import SPACY_MINUS
from .constants import SPACY_PLUS
from .constants import POWER
from .constants import VARIABLE
from .exceptions import LiteralError
from .exceptions import ParameterError


def normalize(coefficients):
    """Strip trailing zero coefficients

    Parameters
    ----------
    coefficients :
        A sequence of integers, lowest exponent first

    Returns
    -------
    coefficients :
        A tuple whose last entry is nonzero, or the empty tuple

    Raises
    ------
    ParameterError
        If a coefficient is not an int
    """
    for coefficient in coefficients:
        if not isinstance(coefficient, int):
            msg = "Coefficients must be integers, got {c!r}"
            raise ParameterError(msg.format(c=coefficient))
    end = len(coefficients)
    while end and coefficients[end - 1] == 0:
        end -= 1
    return tuple(coefficients[:end])


class IntPoly(object):
    """A polynomial in q with integer coefficients, immutable

    >>> IntPoly([1, 0, 1]) * IntPoly([1, 1, 1])
    IntPoly('1 + q + 2*q^2 + q^3 + q^4')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", normalize(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly values are immutable")

    @property
    def degree(self):
        """Highest exponent with a nonzero coefficient, None for zero"""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, exponent):
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, int):
            other = poly_monomial(other, 0)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        equal = self.__eq__(other)
        if equal is NotImplemented:
            return equal
        return not equal

    def __hash__(self):
        # IntPoly([c]) == c
        if len(self.coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(self.coeffs)

    def __add__(self, other):
        other = as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-coefficient for coefficient in self.coeffs)

    def __sub__(self, other):
        other = as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = as_poly(other)
        if other is None:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(other * coefficient for coefficient in self.coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, exponent):
        """Multiply by q^exponent"""
        if exponent < 0:
            raise ParameterError("Cannot shift by a negative exponent")
        if not self.coeffs:
            return self
        return IntPoly((0,) * exponent + self.coeffs)

    def dilate(self, r):
        return poly_dilate(self, r)

    def evaluate(self, value):
        return poly_eval_int(self, value)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return "IntPoly('{text}')".format(text=render_poly(self))


def as_poly(value):
    """Promote an integer to a constant polynomial, None if not possible"""
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return poly_monomial(value, 0)
    return None


def poly_add(a, b):
    """Coefficientwise sum, normalised"""
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    result = list(a.coeffs)
    for exponent, coefficient in enumerate(b.coeffs):
        result[exponent] += coefficient
    return IntPoly(result)


def poly_mul(a, b):
    """Schoolbook convolution product

    Parameters
    ----------
    a, b :
        IntPoly factors

    Returns
    -------
    product :
        IntPoly of degree degree(a) + degree(b), or zero
    """
    if not a.coeffs or not b.coeffs:
        return ZERO
    result = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            result[i + j] += x * y
    return IntPoly(result)


def poly_dilate(a, r):
    """Substitute q -> q^r

    Parameters
    ----------
    a :
        IntPoly

    r :
        Positive integer dilation

    Returns
    -------
    dilated :
        IntPoly whose coefficient of q^(r*i) is the coefficient of q^i in 'a'
    """
    if r < 1:
        msg = "Dilation must be a positive integer, got {r}"
        raise ParameterError(msg.format(r=r))
    if r == 1 or not a.coeffs:
        return a
    result = [0] * (r * (len(a.coeffs) - 1) + 1)
    for exponent, coefficient in enumerate(a.coeffs):
        result[r * exponent] = coefficient
    return IntPoly(result)


def poly_eval_int(a, value):
    """Exact integer value of 'a' at q = value, by Horner's rule"""
    total = 0
    for coefficient in reversed(a.coeffs):
        total = total * value + coefficient
    return total


def poly_monomial(coefficient, exponent):
    """The polynomial coefficient * q^exponent"""
    if exponent < 0:
        msg = "Monomial exponent must be nonnegative, got {e}"
        raise ParameterError(msg.format(e=exponent))
    if coefficient == 0:
        return ZERO
    return IntPoly([0] * exponent + [coefficient])


def poly_from_terms(terms):
    """Accumulate (coefficient, exponent) pairs into one polynomial

    Parameters
    ----------
    terms :
        An iterable of (coefficient, exponent) pairs; repeated exponents add up

    Returns
    -------
    polynomial :
        IntPoly
    """
    counter = collections.Counter()
    for coefficient, exponent in terms:
        counter[exponent] += coefficient
    if not counter:
        return ZERO
    result = [0] * (max(counter) + 1)
    for exponent, coefficient in counter.items():
        result[exponent] = coefficient
    return IntPoly(result)


def render_poly(a, variable=VARIABLE):
    """Render as 'c0 + c1*q + c2*q^2 + ...'

    Zero terms are omitted, unit coefficients are not written and negative
    coefficients carry a leading minus.

    >>> render_poly(IntPoly([0, -1, 0, 2]))
    '-q + 2*q^3'
    """
    terms = []
    for exponent, coefficient in enumerate(a.coeffs):
        if not coefficient:
            continue
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = variable if exponent == 1 else POWER.format(
                variable=variable, exponent=exponent
            )
            if magnitude == 1:
                body = power
            else:
                body = "{c}*{power}".format(c=magnitude, power=power)
        terms.append((coefficient < 0, body))

    if not terms:
        return "0"

    negative, body = terms[0]
    text = "-" + body if negative else body
    for negative, body in terms[1:]:
        text += (SPACY_MINUS if negative else SPACY_PLUS) + body
    return text


def parse_poly(text, variable=VARIABLE):
    """Parse the text format of render_poly() back into an IntPoly

    Parsing is delegated to sympy, so any integer polynomial expression in
    the variable is accepted, e.g. '(1 + q)*(1 - q)' or '1 - q^2'. Only
    digits, the variable, whitespace, parentheses and + - * ^ may appear;
    anything else is rejected before the text reaches sympy.

    Raises
    ------
    LiteralError
        If the text is not a polynomial in 'variable' with integer
        coefficients
    """
    alphabet = r"[0-9\s()+\-*^]|" + re.escape(variable)
    if not re.fullmatch("(?:{a})*".format(a=alphabet), text):
        msg = "'{text}' contains characters outside a polynomial in {v}"
        raise LiteralError(msg.format(text=text, v=variable))

    symbol = Symbol(variable)
    try:
        expression = parse_expr(
            text,
            local_dict={variable: symbol},
            transformations=standard_transformations + (convert_xor,),
        )
        polynomial = Poly(expression, symbol)
    except (
        SympifyError,
        SyntaxError,
        TokenError,
        TypeError,
        ValueError,
        PolynomialError,
    ) as error:
        msg = "Cannot parse '{text}' as a polynomial in {v}: {e}"
        raise LiteralError(msg.format(text=text, v=variable, e=error))

    if not polynomial.get_domain().is_ZZ:
        msg = "Polynomial '{text}' does not have integer coefficients in {v}"
        raise LiteralError(msg.format(text=text, v=variable))

    return poly_from_sympy(polynomial)


def poly_to_sympy(a, variable=VARIABLE):
    """Convert to a sympy Poly over ZZ"""
    return Poly(list(reversed(a.coeffs)) or [0], Symbol(variable), domain="ZZ")


def poly_from_sympy(polynomial):
    """Convert a univariate sympy Poly with integer coefficients"""
    return IntPoly(int(c) for c in reversed(polynomial.all_coeffs()))


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])
