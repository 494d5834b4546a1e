#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact evaluators for both sides of every identity, along the algebraic,
the combinatorial and the generating function route, a registry keyed by
identity name and the sweep verifier.
"""

from __future__ import absolute_import
from __future__ import division

import collections
import itertools
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .constants import CLASSICAL_IDENTITIES
from .constants import DEFAULT_RANGES
from .constants import FIXED
from .constants import IDENTITY_NAMES
from .constants import PARAMETERS
from .constants import SERIES_IDENTITIES
from .exactpoly import ZERO
from .exceptions import ParameterError
from .exceptions import UnknownIdentityError
from .messages import debug
from .messages import verbose
from .messages import warning
from .partitions import enumerate_bounded
from .partitions import enumerate_distinct_bounded
from .partitions import enumerate_set
from .partitions import enumerate_set_quadruple
from .partitions import weight_polynomial
from .qfunctions import binomial
from .qfunctions import choose2
from .qfunctions import gauss_binomial
from .qfunctions import gauss_binomial_dilated
from .series import named_series

ParamPoint = collections.namedtuple("ParamPoint", ["m", "n", "a"], defaults=(0, 0, 0))

VerificationReport = collections.namedtuple(
    "VerificationReport", ["identity", "point", "lhs", "rhs", "passed"]
)

IdentityId = collections.namedtuple(
    "IdentityId", ["name", "parameters", "evaluate", "admissible"]
)


def check_sizes(m, n):
    if m < 0 or n < 0:
        msg = "m and n must be nonnegative, got m={m}, n={n}"
        raise ParameterError(msg.format(m=m, n=n))


def eval_new3_lhs(m, n):
    """sum_k [m+k, k]_{q^2} [m+1, n-2k]_q q^C(n-2k, 2)"""
    check_sizes(m, n)
    total = ZERO
    for k in range(n // 2 + 1):
        term = gauss_binomial_dilated(m + k, k, 2) * gauss_binomial(m + 1, n - 2 * k)
        total = total + term.shift(choose2(n - 2 * k))
    return total


def eval_new3_rhs(m, n):
    """[m+n, n]_q"""
    check_sizes(m, n)
    return gauss_binomial(m + n, n)


def eval_new4_lhs(m, n):
    """sum_k [m+k, k]_{q^4} [m+1, n-4k]_q q^C(n-4k, 2)"""
    check_sizes(m, n)
    total = ZERO
    for k in range(n // 4 + 1):
        term = gauss_binomial_dilated(m + k, k, 4) * gauss_binomial(m + 1, n - 4 * k)
        total = total + term.shift(choose2(n - 4 * k))
    return total


def eval_new4_rhs(m, n):
    """sum_k (-1)^k [m+k, k]_{q^2} [m+n-2k, n-2k]_q"""
    check_sizes(m, n)
    total = ZERO
    for k in range(n // 2 + 1):
        term = gauss_binomial_dilated(m + k, k, 2) * gauss_binomial(
            m + n - 2 * k, n - 2 * k
        )
        total = total + term * (-1) ** k
    return total


def pair_weight(pair):
    return pair.weight(2)


def quadruple_weight(pair):
    return pair.weight(4)


def pair_sign(pair):
    return pair.sign


def eval_partition_side(identity, m, n):
    """
    Both sides of new3 or new4 multiplied by q^n, as partition sums

    For new3 the pair holds the sum of q^(2|lambda| + |mu|) over B and the
    sum of q^|lambda| over A. For new4 it holds the sum of
    q^(4|tau| + |mu|) over the pairs with 4l(tau) + l(mu) = n and the
    signed sum of (-1)^l(lambda) q^(2|lambda| + |mu|) over U.

    Parameters
    ----------
    identity :
        'new3' or 'new4'

    m, n :
        Nonnegative integers

    Returns
    -------
    sides :
        Tuple of two IntPoly values
    """
    check_sizes(m, n)
    if identity == "new3":
        return (
            weight_polynomial(enumerate_set("B", m, n), pair_weight),
            weight_polynomial(enumerate_set("A", m, n), lambda p: p.weight),
        )
    if identity == "new4":
        return (
            weight_polynomial(enumerate_set_quadruple(m, n), quadruple_weight),
            weight_polynomial(enumerate_set("U", m, n), pair_weight, pair_sign),
        )
    msg = "Partition sums exist for new3 and new4 only, not '{identity}'"
    raise ParameterError(msg.format(identity=identity))


def eval_series_side(identity, m, order):
    """Both sides of qbione or qbitwo as ZSeries truncated after z^order"""
    if identity not in SERIES_IDENTITIES:
        msg = "Series sides exist for {names} only, not '{identity}'"
        raise ParameterError(
            msg.format(names=", ".join(SERIES_IDENTITIES), identity=identity)
        )
    return (
        named_series(identity + "-lhs", m, order),
        named_series(identity + "-rhs", m, order),
    )


def eval_special(identity, n):
    """
    Both sides of spe1 or spe2

        spe1: sum_k [n+k, k]_{q^2} [n+1, 2k+1]_q q^C(n-2k, 2) = [2n, n]_q
        spe2: sum_k [n+k, k+1]_{q^2} [n, 2k+1]_q q^C(n-2k-1, 2) = [2n, n-1]_q

    Terms of spe2 with 2k+1 > n vanish and are not formed; at n = 0 both
    sides are the zero polynomial.
    """
    check_sizes(0, n)
    total = ZERO
    if identity == "spe1":
        for k in range(n // 2 + 1):
            term = gauss_binomial_dilated(n + k, k, 2) * gauss_binomial(
                n + 1, 2 * k + 1
            )
            total = total + term.shift(choose2(n - 2 * k))
        return total, gauss_binomial(2 * n, n)
    if identity == "spe2":
        for k in range((n + 1) // 2):
            term = gauss_binomial_dilated(n + k, k + 1, 2) * gauss_binomial(
                n, 2 * k + 1
            )
            total = total + term.shift(choose2(n - 2 * k - 1))
        return total, gauss_binomial(2 * n, n - 1)
    msg = "Special cases are spe1 and spe2, not '{identity}'"
    raise ParameterError(msg.format(identity=identity))


def check_classical_point(identity, point):
    if min(point) < 0:
        msg = "Parameters must be nonnegative, got {point}"
        raise ParameterError(msg.format(point=tuple(point)))
    if identity == "s2" and point.n < 1:
        msg = "s2 requires n >= 1, got n={n}"
        raise ParameterError(msg.format(n=point.n))
    if identity == "s3" and point.a == 0 and point.n == 0:
        raise ParameterError("s3 is undefined at a=0, n=0")


def s3_term(n, a, k):
    if a == 0 and k == 0:
        # limit of (1/a) C(n+a-1, n) as a -> 0
        return Fraction(1, n)
    return Fraction(
        binomial(3 * k + a, k) * binomial(n + a + k - 1, n - 2 * k), 3 * k + a
    )


def eval_classical(identity, point):
    """
    Both sides of a classical identity as exact rationals

    Parameters
    ----------
    identity :
        One of s1, s2, s3, s4, s5, new1, new2

    point :
        ParamPoint; s1, s2 and s4 read n, s3 and s5 read n and a, new1 and
        new2 read m and n

    Returns
    -------
    sides :
        Tuple of two fractions.Fraction values

    Raises
    ------
    ParameterError
        If the point lies outside the identity's domain
    """
    check_classical_point(identity, point)
    m, n, a = point

    if identity == "s1":
        lhs = sum(
            Fraction(binomial(3 * k, k) * binomial(n + k, 3 * k), 2 * k + 1)
            for k in range(n + 1)
        )
        return Fraction(lhs), Fraction(binomial(2 * n, n), n + 1)

    if identity == "s2":
        lhs = sum(
            Fraction(binomial(3 * k + 1, k + 1) * binomial(n + k, 3 * k + 1), 2 * k + 1)
            for k in range(n + 1)
        )
        return Fraction(lhs), Fraction(binomial(2 * n, n), n + 1)

    if identity == "s3":
        lhs = sum(s3_term(n, a, k) for k in range(n // 2 + 1))
        return Fraction(lhs), Fraction(binomial(2 * n + a, n), 2 * n + a)

    if identity == "s4":
        lhs = sum(
            Fraction(binomial(5 * k, k) * binomial(n + k, 5 * k), 4 * k + 1)
            for k in range(n + 1)
        )
        rhs = sum(
            Fraction((-1) ** k * binomial(n + k, k) * binomial(2 * n - 2 * k, n), n + 1)
            for k in range(n // 2 + 1)
        )
        return Fraction(lhs), Fraction(rhs)

    if identity == "s5":
        lhs = sum(
            Fraction(
                (n + a + 1) * binomial(5 * k + a, k) * binomial(n + a + k, 5 * k + a),
                4 * k + a + 1,
            )
            for k in range(n + 1)
        )
        rhs = sum(
            (-1) ** k * binomial(n + a + k, k) * binomial(2 * n + a - 2 * k, n + a)
            for k in range(n // 2 + 1)
        )
        return Fraction(lhs), Fraction(rhs)

    if identity == "new1":
        lhs = sum(
            binomial(m + k, k) * binomial(m + 1, n - 2 * k) for k in range(n // 2 + 1)
        )
        return Fraction(lhs), Fraction(binomial(m + n, n))

    if identity == "new2":
        lhs = sum(
            binomial(m + k, k) * binomial(m + 1, n - 4 * k) for k in range(n // 4 + 1)
        )
        rhs = sum(
            (-1) ** k * binomial(m + k, k) * binomial(m + n - 2 * k, m)
            for k in range(n // 2 + 1)
        )
        return Fraction(lhs), Fraction(rhs)

    msg = "'{identity}' is not a classical identity, expected one of: {names}"
    raise ParameterError(
        msg.format(identity=identity, names=", ".join(CLASSICAL_IDENTITIES))
    )


def eval_gf_bounded(m, n):
    """Partitions with lambda_1 <= m+1 and n parts: (sum q^|lambda|, q^n [m+n, n]_q)"""
    check_sizes(m, n)
    lhs = weight_polynomial(enumerate_bounded(m + 1, n), lambda p: p.weight)
    return lhs, gauss_binomial(m + n, n).shift(n)


def eval_gf_distinct(m, n):
    """Distinct partitions with lambda_1 <= m+1 and n parts:
    (sum q^|lambda|, [m+1, n]_q q^C(n+1, 2))"""
    check_sizes(m, n)
    lhs = weight_polynomial(enumerate_distinct_bounded(m + 1, n), lambda p: p.weight)
    return lhs, gauss_binomial(m + 1, n).shift(choose2(n + 1))


def always(point):
    return True


def s2_admissible(point):
    return point.n >= 1


def s3_admissible(point):
    return point.a > 0 or point.n > 0


def classical(name):
    return lambda point: eval_classical(name, point)


REGISTRY = {
    "s1": IdentityId("s1", ("n",), classical("s1"), always),
    "s2": IdentityId("s2", ("n",), classical("s2"), s2_admissible),
    "s3": IdentityId("s3", ("n", "a"), classical("s3"), s3_admissible),
    "s4": IdentityId("s4", ("n",), classical("s4"), always),
    "s5": IdentityId("s5", ("n", "a"), classical("s5"), always),
    "new1": IdentityId("new1", ("m", "n"), classical("new1"), always),
    "new2": IdentityId("new2", ("m", "n"), classical("new2"), always),
    "new3": IdentityId(
        "new3",
        ("m", "n"),
        lambda p: (eval_new3_lhs(p.m, p.n), eval_new3_rhs(p.m, p.n)),
        always,
    ),
    "new4": IdentityId(
        "new4",
        ("m", "n"),
        lambda p: (eval_new4_lhs(p.m, p.n), eval_new4_rhs(p.m, p.n)),
        always,
    ),
    "spe1": IdentityId("spe1", ("n",), lambda p: eval_special("spe1", p.n), always),
    "spe2": IdentityId("spe2", ("n",), lambda p: eval_special("spe2", p.n), always),
    "gf_A": IdentityId("gf_A", ("m", "n"), lambda p: eval_gf_bounded(p.m, p.n), always),
    "gf_D": IdentityId(
        "gf_D", ("m", "n"), lambda p: eval_gf_distinct(p.m, p.n), always
    ),
    "qbione": IdentityId(
        "qbione", ("m", "n"), lambda p: eval_series_side("qbione", p.m, p.n), always
    ),
    "qbitwo": IdentityId(
        "qbitwo", ("m", "n"), lambda p: eval_series_side("qbitwo", p.m, p.n), always
    ),
}


def get_identity(name):
    """
    Look up a registered identity

    Raises
    ------
    UnknownIdentityError
    """
    try:
        return REGISTRY[name]
    except KeyError:
        msg = "Unknown identity '{name}', expected one of: {names}"
        raise UnknownIdentityError(
            msg.format(name=name, names=", ".join(IDENTITY_NAMES))
        )


def sweep_ranges(name, overrides=None):
    """
    Inclusive (minimum, maximum) bounds per parameter: the identity's
    defaults updated with 'overrides'. Parameters the identity does not read
    stay at (0, 0).

    Parameters
    ----------
    name :
        Identity name

    overrides :
        Mapping of parameter name to a (minimum, maximum) pair in which
        either entry may be None to keep the default

    Returns
    -------
    ranges :
        Dictionary of (minimum, maximum) pairs keyed by 'm', 'n', 'a'
    """
    identity = get_identity(name)
    ranges = dict(DEFAULT_RANGES[name])
    for parameter, (minimum, maximum) in (overrides or {}).items():
        if minimum is None and maximum is None:
            continue
        if parameter not in identity.parameters:
            msg = "Identity {name} does not use '{parameter}', keeping it at 0"
            warning(msg.format(name=name, parameter=parameter))
            continue
        default_minimum, default_maximum = ranges[parameter]
        ranges[parameter] = (
            default_minimum if minimum is None else minimum,
            default_maximum if maximum is None else maximum,
        )
    for parameter in PARAMETERS:
        if parameter not in identity.parameters:
            ranges[parameter] = FIXED
    return ranges


def sweep_points(identity, ranges):
    """Admissible points in (m, n, a) order"""
    axes = []
    for parameter in PARAMETERS:
        minimum, maximum = ranges.get(parameter, FIXED)
        if minimum < 0:
            msg = "Range of {parameter} must be nonnegative, got minimum {minimum}"
            raise ParameterError(msg.format(parameter=parameter, minimum=minimum))
        axes.append(range(minimum, maximum + 1))

    points = []
    for values in itertools.product(*axes):
        point = ParamPoint(*values)
        if identity.admissible(point):
            points.append(point)
        else:
            msg = "Skipping {name} at {point}, outside its domain"
            debug(msg.format(name=identity.name, point=point))
    return points


def verify_point(identity, point):
    lhs, rhs = identity.evaluate(point)
    report = VerificationReport(identity.name, point, lhs, rhs, lhs == rhs)
    msg = "{name} at m={m}, n={n}, a={a}: {status}"
    debug(
        msg.format(
            name=identity.name,
            m=point.m,
            n=point.n,
            a=point.a,
            status="pass" if report.passed else "FAIL",
        )
    )
    return report


def verify_sweep(name, ranges, workers=1):
    """
    Evaluate both sides of an identity at every admissible point of the
    ranges and compare them exactly

    Parameters
    ----------
    name :
        Identity name

    ranges :
        Dictionary of inclusive (minimum, maximum) pairs keyed by 'm', 'n',
        'a'; missing parameters are fixed at 0

    workers :
        Number of threads evaluating points; the report order does not
        depend on it

    Returns
    -------
    reports :
        List of VerificationReport, ordered by (m, n, a)

    Raises
    ------
    UnknownIdentityError
        If no identity is registered under 'name'

    ParameterError
        If the ranges hold no admissible point
    """
    identity = get_identity(name)
    points = sweep_points(identity, ranges)
    if not points:
        msg = "No admissible point for {name} in the ranges {ranges}"
        raise ParameterError(msg.format(name=name, ranges=ranges))

    msg = "Verifying {name} at {count} points"
    verbose(msg.format(name=name, count=len(points)))

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reports = list(
                executor.map(lambda point: verify_point(identity, point), points)
            )
    else:
        reports = [verify_point(identity, point) for point in points]

    failures = sum(1 for report in reports if not report.passed)
    msg = "{name}: {passed} of {total} points pass"
    verbose(msg.format(name=name, passed=len(reports) - failures, total=len(reports)))
    return reports
