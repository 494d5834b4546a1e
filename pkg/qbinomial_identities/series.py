#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Truncated formal power series in z whose coefficients are IntPoly values.

A ZSeries of order N stores exactly N + 1 coefficients, those of z^0 to z^N,
zero polynomials included. Arithmetic is exact modulo z^(N+1). Series of
different order are never combined silently.
"""

from __future__ import absolute_import
from __future__ import division

import collections

from .constants import SERIES_LINE
from .constants import SERIES_NAMES
from .constants import SERIES_SEPARATOR
from .exactpoly import ONE
from .exactpoly import ZERO
from .exactpoly import IntPoly
from .exactpoly import poly_monomial
from .exactpoly import render_poly
from .exceptions import NotInvertibleError
from .exceptions import OrderMismatchError
from .exceptions import ParameterError
from .messages import debug
from .qfunctions import choose2
from .qfunctions import gauss_binomial_dilated

PochSpec = collections.namedtuple("PochSpec", ["sign", "zpow", "dilation", "count"])


class ZSeries(object):
    """A power series in z truncated after z^order, immutable"""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order):
        if order < 0:
            msg = "Truncation order must be nonnegative, got {order}"
            raise ParameterError(msg.format(order=order))
        coeffs = list(coeffs)[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ZSeries values are immutable")

    def __eq__(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __ne__(self, other):
        equal = self.__eq__(other)
        if equal is NotImplemented:
            return equal
        return not equal

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __neg__(self):
        return ZSeries([-coefficient for coefficient in self.coeffs], self.order)

    def __mul__(self, other):
        return series_mul(self, other)

    def __getitem__(self, n):
        return series_coeff(self, n)

    def __str__(self):
        return render_series(self)

    def __repr__(self):
        return "ZSeries('{text}')".format(text=render_series(self, SERIES_SEPARATOR))


def series_one(order):
    return ZSeries([ONE], order)


def series_from(coeffs, order):
    """Build a series of the given order from leading IntPoly coefficients;
    missing coefficients are zero, surplus ones are truncated"""
    return ZSeries(coeffs, order)


def check_orders(a, b):
    if a.order != b.order:
        msg = "Cannot combine series of order {a} and {b}"
        raise OrderMismatchError(msg.format(a=a.order, b=b.order))


def series_add(a, b):
    check_orders(a, b)
    return ZSeries([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)


def series_mul(a, b):
    """
    Truncated convolution: the coefficient of z^n in the product is
    sum_{i+j=n} a_i * b_j, for n up to the common order

    Raises
    ------
    OrderMismatchError
        If the two series are not of the same order
    """
    check_orders(a, b)
    product = []
    for n in range(a.order + 1):
        coefficient = ZERO
        for i in range(n + 1):
            if a.coeffs[i] and b.coeffs[n - i]:
                coefficient = coefficient + a.coeffs[i] * b.coeffs[n - i]
        product.append(coefficient)
    return ZSeries(product, a.order)


def series_inverse(a):
    """
    Reciprocal of a series with constant term 1, by the recurrence

        b_0 = 1,  b_n = - sum_{i=1..n} a_i * b_{n-i}

    The recurrence does not care about signs inside the coefficients, so
    series such as (-z^2;q^2)_{m+1} invert unchanged.

    Raises
    ------
    NotInvertibleError
        If the constant coefficient is not the polynomial 1
    """
    if a.coeffs[0] != ONE:
        msg = "Only series with constant term 1 are inverted, got '{c}'"
        raise NotInvertibleError(msg.format(c=render_poly(a.coeffs[0])))
    inverse = [ONE]
    for n in range(1, a.order + 1):
        coefficient = ZERO
        for i in range(1, n + 1):
            if a.coeffs[i] and inverse[n - i]:
                coefficient = coefficient - a.coeffs[i] * inverse[n - i]
        inverse.append(coefficient)
    return ZSeries(inverse, a.order)


def check_poch_spec(spec):
    if spec.sign not in (1, -1):
        raise ParameterError("Sign of a must be +1 or -1, got {s}".format(s=spec.sign))
    if spec.zpow < 1:
        raise ParameterError("Power of z must be positive, got {j}".format(j=spec.zpow))
    if spec.dilation < 1:
        msg = "Dilation must be a positive integer, got {r}"
        raise ParameterError(msg.format(r=spec.dilation))
    if spec.count < 0:
        msg = "Number of factors must be nonnegative, got {n}"
        raise ParameterError(msg.format(n=spec.count))


def poch_series(spec, order):
    """
    The q-shifted factorial (a; q^r)_n for a = sign * z^zpow, that is

        prod_{k=0}^{n-1} (1 - sign * z^zpow * q^(r*k))

    truncated after z^order. Each factor has two terms, so multiplying it in
    is a shifted update of the running coefficients.

    Parameters
    ----------
    spec :
        PochSpec(sign, zpow, dilation, count)

    order :
        Truncation order

    Returns
    -------
    series :
        ZSeries
    """
    check_poch_spec(spec)
    coeffs = [ONE] + [ZERO] * order
    for k in range(spec.count):
        factor = poly_monomial(-spec.sign, spec.dilation * k)
        for n in range(order, spec.zpow - 1, -1):
            if coeffs[n - spec.zpow]:
                coeffs[n] = coeffs[n] + factor * coeffs[n - spec.zpow]
    return ZSeries(coeffs, order)


def series_coeff(a, n):
    """The IntPoly coefficient of z^n"""
    if n < 0 or n > a.order:
        msg = "Coefficient z^{n} is outside a series of order {order}"
        raise ParameterError(msg.format(n=n, order=a.order))
    return a.coeffs[n]


def render_series(a, separator="\n"):
    """One 'z^n: <polynomial>' entry per power of z"""
    return separator.join(
        SERIES_LINE.format(power=power, coefficient=render_poly(coefficient))
        for power, coefficient in enumerate(a.coeffs)
    )


def qbinomial_theorem_inverse(m, order, sign=1, zpow=1, dilation=1):
    """
    Closed form of 1 / (sign * z^zpow; q^r)_{m+1} from the q-binomial
    theorem: sum_k sign^k [m+k, k]_{q^r} z^(zpow*k)
    """
    coeffs = [ZERO] * (order + 1)
    for k in range(order // zpow + 1):
        coeffs[zpow * k] = gauss_binomial_dilated(m + k, k, dilation) * sign ** k
    return ZSeries(coeffs, order)


def qbinomial_theorem_finite(m, order, sign=1, zpow=1, dilation=1):
    """
    Closed form of the finite product (sign * z^zpow; q^r)_{m+1}:
    sum_k (-sign)^k [m+1, k]_{q^r} q^(r*C(k,2)) z^(zpow*k)
    """
    coeffs = [ZERO] * (order + 1)
    for k in range(min(m + 1, order // zpow) + 1):
        term = gauss_binomial_dilated(m + 1, k, dilation).shift(dilation * choose2(k))
        coeffs[zpow * k] = term * (-sign) ** k
    return ZSeries(coeffs, order)


def named_series(name, m, order):
    """
    Build one of the series the command line can expand, see SERIES_NAMES

    Raises
    ------
    ParameterError
        If the name is unknown or m is negative
    """
    if m < 0:
        raise ParameterError("m must be nonnegative, got {m}".format(m=m))

    count = m + 1

    def poch(sign, zpow, dilation):
        return poch_series(PochSpec(sign, zpow, dilation, count), order)

    builders = {
        "poch-z": lambda: poch(1, 1, 1),
        "inv-poch-z": lambda: series_inverse(poch(1, 1, 1)),
        "poch-neg-z": lambda: poch(-1, 1, 1),
        "inv-poch-z2": lambda: series_inverse(poch(1, 2, 2)),
        "inv-poch-z4": lambda: series_inverse(poch(1, 4, 4)),
        "inv-poch-neg-z2": lambda: series_inverse(poch(-1, 2, 2)),
        "qbione-lhs": lambda: series_mul(
            series_inverse(poch(1, 2, 2)), poch(-1, 1, 1)
        ),
        "qbione-rhs": lambda: series_inverse(poch(1, 1, 1)),
        "qbitwo-lhs": lambda: series_mul(
            series_inverse(poch(1, 4, 4)), poch(-1, 1, 1)
        ),
        "qbitwo-rhs": lambda: series_mul(
            series_inverse(poch(1, 1, 1)), series_inverse(poch(-1, 2, 2))
        ),
    }
    if name not in builders:
        msg = "Unknown series '{name}', expected one of: {names}"
        raise ParameterError(msg.format(name=name, names=", ".join(SERIES_NAMES)))

    msg = "Building series '{name}' for m={m} to order {order}"
    debug(msg.format(name=name, m=m, order=order))
    return builders[name]()
