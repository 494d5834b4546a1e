#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Gaussian (q-)binomial coefficients and small combinatorial exponents,
computed exactly as IntPoly values
"""

from __future__ import absolute_import
from __future__ import division

import collections
import functools
import math

from .exactpoly import ONE
from .exactpoly import ZERO
from .exactpoly import IntPoly
from .exactpoly import poly_dilate
from .exactpoly import poly_from_sympy
from .exactpoly import poly_to_sympy
from .exceptions import ParameterError
from .messages import debug

QBinomArgs = collections.namedtuple(
    "QBinomArgs", ["upper", "lower", "dilation"], defaults=(1,)
)


def check_upper(n):
    if n < 0:
        msg = "Upper argument of a q-binomial must be nonnegative, got {n}"
        raise ParameterError(msg.format(n=n))


@functools.lru_cache(maxsize=None)
def gauss_binomial(n, k):
    """
    The Gaussian binomial [n choose k]_q

    Computed with the q-Pascal recurrence

        [n, k] = [n-1, k] + q^(n-k) [n-1, k-1]

    which stays inside integer polynomial arithmetic. The triangle is
    filled iteratively, row by row up to n, keeping only the columns up to
    min(k, n-k). Results are memoised per process.

    Parameters
    ----------
    n :
        Nonnegative upper argument

    k :
        Lower argument, any integer

    Returns
    -------
    polynomial :
        IntPoly of degree k(n-k) with positive coefficients, or the zero
        polynomial when k < 0 or k > n

    Examples
    --------
    >>> gauss_binomial(4, 2)
    IntPoly('1 + q + 2*q^2 + q^3 + q^4')
    """
    check_upper(n)
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    row = [ONE] + [ZERO] * k
    for i in range(1, n + 1):
        # descending, so row[j - 1] still holds row i - 1
        for j in range(min(i, k), 0, -1):
            row[j] = row[j] + row[j - 1].shift(i - j)
    return row[k]


def gauss_binomial_dilated(n, k, r):
    """[n choose k]_{q^r}"""
    return poly_dilate(gauss_binomial(n, k), r)


def qbinomial(args):
    """Evaluate a QBinomArgs(upper, lower, dilation) record"""
    if args.dilation < 1:
        msg = "Dilation must be a positive integer, got {r}"
        raise ParameterError(msg.format(r=args.dilation))
    return gauss_binomial_dilated(args.upper, args.lower, args.dilation)


def gauss_binomial_product(n, k):
    """
    [n choose k]_q from the closed product formula

        prod_{i=1..k} (1 - q^(n-i+1)) / (1 - q^i)

    The numerator and denominator products are expanded and divided exactly
    with sympy; a nonzero remainder is an error. This is the oracle the
    memoised recurrence of gauss_binomial() is checked against.
    """
    check_upper(n)
    if k < 0 or k > n:
        # a factor 1 - q^0 vanishes once i > n
        return ZERO
    numerator = ONE
    denominator = ONE
    for i in range(1, k + 1):
        numerator = numerator * IntPoly([1] + [0] * (n - i) + [-1])
        denominator = denominator * IntPoly([1] + [0] * (i - 1) + [-1])

    quotient, remainder = poly_to_sympy(numerator).div(poly_to_sympy(denominator))
    if not remainder.is_zero:
        msg = "Product formula for [{n}, {k}] left a nonzero remainder"
        raise ArithmeticError(msg.format(n=n, k=k))

    msg = "Product formula for [{n}, {k}] divided exactly"
    debug(msg.format(n=n, k=k))
    return poly_from_sympy(quotient)


def choose2(a):
    """C(a, 2) = a(a-1)/2"""
    if a < 0:
        msg = "choose2 expects a nonnegative integer, got {a}"
        raise ParameterError(msg.format(a=a))
    return a * (a - 1) // 2


def binomial(x, j):
    """
    The classical binomial C(x, j) for a nonnegative integer x, with
    C(x, j) = 0 whenever j < 0 or j > x
    """
    if x < 0:
        msg = "Binomial upper argument must be nonnegative, got {x}"
        raise ParameterError(msg.format(x=x))
    if j < 0 or j > x:
        return 0
    return math.comb(x, j)
