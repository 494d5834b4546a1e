#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exhaustive and randomised checks of every identity along every route, run
by the `selftest` command. Each suite returns a SuiteResult; a suite
passes when its list of failures is empty.
"""

from __future__ import absolute_import
from __future__ import division

import collections
import random

from . import bijections
from .constants import HALVE_LENGTH_MAX
from .constants import HALVE_PART_MAX
from .constants import INVERSE_CASES
from .constants import INVERSE_DEGREE
from .constants import INVERSE_ORDER
from .constants import PASCAL_N_MAX
from .constants import PHI_M_MAX
from .constants import PHI_N_MAX
from .constants import QUICK_M_MAX
from .constants import QUICK_N_MAX
from .constants import RANDOM_SEED
from .constants import RING_AXIOM_BOUND
from .constants import RING_AXIOM_CASES
from .constants import RING_AXIOM_DEGREE
from .constants import SERIES_M_MAX
from .constants import SERIES_ORDER
from .constants import SPECIAL_Q_ONE_N_MAX
from .constants import THETA_M_MAX
from .constants import THETA_N_MAX
from .exactpoly import ONE
from .exactpoly import ZERO
from .exactpoly import IntPoly
from .exactpoly import poly_eval_int
from .exactpoly import poly_from_sympy
from .exactpoly import poly_to_sympy
from .exceptions import FixedSetError
from .identities import ParamPoint
from .identities import eval_classical
from .identities import eval_new3_lhs
from .identities import eval_new3_rhs
from .identities import eval_new4_lhs
from .identities import eval_new4_rhs
from .identities import eval_partition_side
from .identities import eval_series_side
from .identities import eval_special
from .identities import sweep_ranges
from .identities import verify_sweep
from .messages import verbose
from .messages import warning
from .partitions import Partition
from .partitions import PartitionPair
from .partitions import enumerate_bounded
from .partitions import enumerate_distinct_bounded
from .partitions import enumerate_set
from .partitions import enumerate_set_quadruple
from .partitions import is_distinct
from .partitions import is_in_V
from .partitions import weight_polynomial
from .qfunctions import binomial
from .qfunctions import choose2
from .qfunctions import gauss_binomial
from .qfunctions import gauss_binomial_product
from .series import PochSpec
from .series import ZSeries
from .series import poch_series
from .series import qbinomial_theorem_finite
from .series import qbinomial_theorem_inverse
from .series import series_coeff
from .series import series_inverse
from .series import series_mul
from .series import series_one

SuiteResult = collections.namedtuple("SuiteResult", ["name", "checks", "failures"])

MAX_REPORTED_FAILURES = 5


class Checker(object):
    """Count checks and collect the messages of failed ones"""

    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.failures = []

    def check(self, condition, msg):
        self.checks += 1
        if not condition:
            self.failures.append(msg)
            if len(self.failures) <= MAX_REPORTED_FAILURES:
                warning("{name}: {msg}".format(name=self.name, msg=msg))

    def result(self):
        return SuiteResult(self.name, self.checks, list(self.failures))


def bound(value, quick_value, quick):
    return min(value, quick_value) if quick else value


def grid(m_max, n_max):
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            yield m, n


def check_sweep(checker, name, quick):
    """Run the default sweep of an identity, capped in quick mode"""
    ranges = sweep_ranges(name)
    if quick:
        ranges = {
            "m": (ranges["m"][0], min(ranges["m"][1], QUICK_M_MAX)),
            "n": (ranges["n"][0], min(ranges["n"][1], QUICK_N_MAX)),
            "a": (ranges["a"][0], min(ranges["a"][1], QUICK_M_MAX)),
        }
    for report in verify_sweep(name, ranges):
        msg = "{name} fails at {point}".format(name=name, point=tuple(report.point))
        checker.check(report.passed, msg)


def suite_new3(quick=False):
    """new3 exactly, through partition sums and at q = 1"""
    checker = Checker("new3")
    check_sweep(checker, "new3", quick)

    m_max = bound(PHI_M_MAX, QUICK_M_MAX, quick)
    n_max = bound(PHI_N_MAX, QUICK_N_MAX, quick)
    for m, n in grid(m_max, n_max):
        expected = eval_new3_lhs(m, n).shift(n)
        over_b, over_a = eval_partition_side("new3", m, n)
        msg = "partition sums of new3 disagree at m={m}, n={n}".format(m=m, n=n)
        checker.check(over_b == expected and over_a == expected, msg)

    for m, n in grid(bound(6, QUICK_M_MAX, quick), bound(12, QUICK_N_MAX, quick)):
        lhs, rhs = eval_classical("new1", ParamPoint(m, n))
        msg = "new3 at q=1 is not new1 at m={m}, n={n}".format(m=m, n=n)
        checker.check(
            poly_eval_int(eval_new3_lhs(m, n), 1) == lhs
            and poly_eval_int(eval_new3_rhs(m, n), 1) == rhs,
            msg,
        )
    return checker.result()


def suite_new4(quick=False):
    """new4 exactly, through partition sums, series coefficients and at q = 1"""
    checker = Checker("new4")
    check_sweep(checker, "new4", quick)

    m_max = bound(THETA_M_MAX, QUICK_M_MAX, quick)
    n_max = bound(THETA_N_MAX, QUICK_N_MAX, quick)
    for m, n in grid(m_max, n_max):
        lhs = eval_new4_lhs(m, n)
        quadruple, signed = eval_partition_side("new4", m, n)
        msg = "partition sums of new4 disagree at m={m}, n={n}".format(m=m, n=n)
        checker.check(quadruple == lhs.shift(n) and signed == lhs.shift(n), msg)

    for m in range(m_max + 1):
        series_lhs, series_rhs = eval_series_side("qbitwo", m, n_max)
        for n in range(n_max + 1):
            msg = "coefficient z^{n} of qbitwo is not new4 at m={m}".format(n=n, m=m)
            checker.check(
                series_coeff(series_lhs, n) == eval_new4_lhs(m, n)
                and series_coeff(series_rhs, n) == eval_new4_rhs(m, n),
                msg,
            )

    for m, n in grid(bound(6, QUICK_M_MAX, quick), bound(12, QUICK_N_MAX, quick)):
        lhs, rhs = eval_classical("new2", ParamPoint(m, n))
        msg = "new4 at q=1 is not new2 at m={m}, n={n}".format(m=m, n=n)
        checker.check(
            poly_eval_int(eval_new4_lhs(m, n), 1) == lhs
            and poly_eval_int(eval_new4_rhs(m, n), 1) == rhs,
            msg,
        )
    return checker.result()


def suite_phi(quick=False):
    """
    phi is a weight preserving bijection from A onto B, bounds are
    preserved and phi_inverse undoes it on both sides
    """
    checker = Checker("phi-bijection")
    m_max = bound(PHI_M_MAX, QUICK_M_MAX, quick)
    n_max = bound(PHI_N_MAX, QUICK_N_MAX, quick)
    for m, n in grid(m_max, n_max):
        where = "m={m}, n={n}".format(m=m, n=n)
        members_a = list(enumerate_set("A", m, n))
        members_b = list(enumerate_set("B", m, n))
        images = []
        for partition in members_a:
            pair = bijections.phi(partition)
            images.append(pair)
            checker.check(
                partition.weight == pair.weight(2),
                "weight law fails for {p} at {where}".format(p=partition, where=where),
            )
            checker.check(
                max(pair.first.largest, pair.second.largest) <= partition.largest,
                "phi raises the largest part of {p}".format(p=partition),
            )
            checker.check(
                bijections.phi_inverse(pair) == partition,
                "phi_inverse does not undo phi on {p}".format(p=partition),
            )
        checker.check(
            len(set(images)) == len(images), "phi is not injective at " + where
        )
        checker.check(
            set(images) == set(members_b), "image of phi is not B at " + where
        )
        for pair in members_b:
            checker.check(
                bijections.phi(bijections.phi_inverse(pair)) == pair,
                "phi does not undo phi_inverse on {pair}".format(pair=pair),
            )

        expected = gauss_binomial(m + n, n).shift(n)
        sum_a = weight_polynomial(members_a, lambda p: p.weight)
        sum_b = weight_polynomial(members_b, lambda pair: pair.weight(2))
        checker.check(
            sum_a == expected and sum_b == expected,
            "weight sums over A and B are not q^n [m+n, n] at " + where,
        )
    return checker.result()


def in_U(pair, m, n):
    return (
        max(pair.first.largest, pair.second.largest) <= m + 1
        and 2 * pair.first.length + pair.second.length == n
    )


def suite_theta(quick=False):
    """
    theta is a fixed point free, weight preserving, sign reversing
    involution on U minus V, and the signed sum over U equals the sum over
    V and, through halve, the sum over the quadruple set
    """
    checker = Checker("theta-involution")
    m_max = bound(THETA_M_MAX, QUICK_M_MAX, quick)
    n_max = bound(THETA_N_MAX, QUICK_N_MAX, quick)
    for m, n in grid(m_max, n_max):
        where = "m={m}, n={n}".format(m=m, n=n)
        for pair in enumerate_set("U", m, n):
            if is_in_V(pair):
                continue
            image, case = bijections.theta(pair)
            try:
                back, _ = bijections.theta(image)
            except FixedSetError:
                back = None
            checker.check(
                back == pair,
                "theta(theta({pair})) = {back}, {branch} with pivot {pivot}".format(
                    pair=pair, back=back, branch=case.branch, pivot=case.pivot
                ),
            )
            checker.check(image != pair, "{pair} is fixed by theta".format(pair=pair))
            checker.check(
                in_U(image, m, n) and not is_in_V(image),
                "theta({pair}) = {image} leaves U minus V".format(
                    pair=pair, image=image
                ),
            )
            checker.check(
                image.weight(2) == pair.weight(2),
                "theta changes the weight of {pair}".format(pair=pair),
            )
            checker.check(
                image.sign == -pair.sign,
                "theta keeps the sign of {pair}".format(pair=pair),
            )

        signed = weight_polynomial(
            enumerate_set("U", m, n),
            lambda pair: pair.weight(2),
            lambda pair: pair.sign,
        )
        members_v = list(enumerate_set("V", m, n))
        over_v = weight_polynomial(members_v, lambda pair: pair.weight(2))
        halved = set(
            PartitionPair(bijections.halve(pair.first), pair.second)
            for pair in members_v
        )
        quadruple = list(enumerate_set_quadruple(m, n))
        over_quadruple = weight_polynomial(quadruple, lambda pair: pair.weight(4))
        checker.check(
            signed == over_v, "signed sum over U is not the sum over V at " + where
        )
        checker.check(
            halved == set(quadruple),
            "halve does not map V onto the quadruple set at " + where,
        )
        checker.check(
            over_v == over_quadruple == eval_new4_lhs(m, n).shift(n),
            "sum over V is not q^n times the new4 sum at " + where,
        )
    return checker.result()


def suite_generating_function(quick=False):
    """qbione and qbitwo as truncated series, their coefficients are new3 and new4"""
    checker = Checker("generating-function")
    m_max = bound(SERIES_M_MAX, QUICK_M_MAX, quick)
    order = bound(SERIES_ORDER, QUICK_N_MAX, quick)
    for m in range(m_max + 1):
        one_lhs, one_rhs = eval_series_side("qbione", m, order)
        two_lhs, two_rhs = eval_series_side("qbitwo", m, order)
        checker.check(one_lhs == one_rhs, "qbione fails at m={m}".format(m=m))
        checker.check(two_lhs == two_rhs, "qbitwo fails at m={m}".format(m=m))
        for n in range(order + 1):
            checker.check(
                series_coeff(one_lhs, n) == eval_new3_lhs(m, n)
                and series_coeff(one_rhs, n) == eval_new3_rhs(m, n),
                "coefficient z^{n} of qbione is not new3 at m={m}".format(n=n, m=m),
            )
            checker.check(
                series_coeff(two_lhs, n) == eval_new4_lhs(m, n)
                and series_coeff(two_rhs, n) == eval_new4_rhs(m, n),
                "coefficient z^{n} of qbitwo is not new4 at m={m}".format(n=n, m=m),
            )
    for name in ("gf_A", "gf_D"):
        check_sweep(checker, name, quick)
    return checker.result()


def suite_qbinomial_theorem(quick=False):
    """Products and reciprocals of q-shifted factorials match the closed forms"""
    checker = Checker("qbinomial-theorem")
    m_max = bound(SERIES_M_MAX, QUICK_M_MAX, quick)
    order = bound(SERIES_ORDER, QUICK_N_MAX, quick)
    for m in range(m_max + 1):
        inverse = series_inverse(poch_series(PochSpec(1, 1, 1, m + 1), order))
        finite = poch_series(PochSpec(-1, 1, 1, m + 1), order)
        for k in range(order + 1):
            checker.check(
                series_coeff(inverse, k) == gauss_binomial(m + k, k),
                "z^{k} of 1/(z;q)_{{m+1}} is not [m+k, k] at m={m}".format(k=k, m=m),
            )
            expected = gauss_binomial(m + 1, k).shift(choose2(k))
            checker.check(
                series_coeff(finite, k) == expected,
                "z^{k} of (-z;q)_{{m+1}} is not [m+1, k] q^C(k,2) at m={m}".format(
                    k=k, m=m
                ),
            )
        for sign, zpow in ((1, 2), (1, 4), (-1, 2)):
            spec = PochSpec(sign, zpow, zpow, m + 1)
            msg = "closed forms disagree for {spec}".format(spec=tuple(spec))
            checker.check(
                series_inverse(poch_series(spec, order))
                == qbinomial_theorem_inverse(m, order, sign, zpow, zpow),
                msg,
            )
            checker.check(
                poch_series(spec, order)
                == qbinomial_theorem_finite(m, order, sign, zpow, zpow),
                msg,
            )
    return checker.result()


def suite_classical(quick=False):
    """The classical identities and the exact relations tying them together"""
    checker = Checker("classical")
    for name in ("s1", "s2", "s3", "s4", "s5", "new1", "new2"):
        check_sweep(checker, name, quick)

    n_max = bound(12, QUICK_N_MAX, quick)
    a_max = bound(4, QUICK_M_MAX, quick)
    for n in range(n_max + 1):
        s1 = eval_classical("s1", ParamPoint(n=n))[1]
        s4 = eval_classical("s4", ParamPoint(n=n))[1]
        checker.check(
            s1 == eval_classical("s3", ParamPoint(n=n, a=1))[1],
            "s1 is not s3 at a=1, n={n}".format(n=n),
        )
        checker.check(
            (n + 1) * s4 == eval_classical("s5", ParamPoint(n=n, a=0))[1],
            "(n+1) s4 is not s5 at a=0, n={n}".format(n=n),
        )
        if n >= 1:
            checker.check(
                eval_classical("s2", ParamPoint(n=n))[1]
                == 2 * eval_classical("s3", ParamPoint(n=n - 1, a=2))[1],
                "s2 is not twice s3 at a=2, n={n}".format(n=n - 1),
            )
        for a in range(a_max + 1):
            s5 = eval_classical("s5", ParamPoint(n=n, a=a))[1]
            checker.check(
                s5 == eval_classical("new2", ParamPoint(m=n + a, n=n))[1],
                "s5 is not new2 at m=n+a, n={n}, a={a}".format(n=n, a=a),
            )
            if n + a == 0:
                continue
            s3 = eval_classical("s3", ParamPoint(n=n, a=a))[1]
            checker.check(
                (n + a) * s3 == eval_classical("new1", ParamPoint(m=n + a - 1, n=n))[1],
                "(n+a) s3 is not new1 at m=n+a-1, n={n}, a={a}".format(n=n, a=a),
            )
    return checker.result()


def suite_special(quick=False):
    """spe1 and spe2 exactly, at q = 1, and spe1 as new3 on the diagonal"""
    checker = Checker("special")
    for name in ("spe1", "spe2"):
        check_sweep(checker, name, quick)

    for n in range(1, bound(SPECIAL_Q_ONE_N_MAX, QUICK_N_MAX, quick) + 1):
        spe1_lhs, spe1_rhs = eval_special("spe1", n)
        spe2_lhs, spe2_rhs = eval_special("spe2", n)
        s1 = eval_classical("s1", ParamPoint(n=n))[0]
        s2 = eval_classical("s2", ParamPoint(n=n))[0]
        checker.check(
            poly_eval_int(spe1_lhs, 1) == (n + 1) * s1 == poly_eval_int(spe1_rhs, 1),
            "spe1 at q=1 is not (n+1) s1 at n={n}".format(n=n),
        )
        checker.check(
            poly_eval_int(spe2_lhs, 1) == n * s2 == poly_eval_int(spe2_rhs, 1),
            "spe2 at q=1 is not n s2 at n={n}".format(n=n),
        )

    for n in range(bound(10, QUICK_N_MAX, quick) + 1):
        checker.check(
            eval_special("spe1", n)[0] == eval_new3_lhs(n, n),
            "spe1 is not new3 at m=n={n}".format(n=n),
        )
    return checker.result()


def random_poly(rng):
    degree = rng.randint(0, RING_AXIOM_DEGREE)
    return IntPoly(
        rng.randint(-RING_AXIOM_BOUND, RING_AXIOM_BOUND) for _ in range(degree + 1)
    )


def random_series(rng, order):
    coefficients = [ONE]
    for _ in range(order):
        degree = rng.randint(0, INVERSE_DEGREE)
        coefficients.append(IntPoly(rng.randint(-9, 9) for _ in range(degree + 1)))
    return ZSeries(coefficients, order)


def suite_structural(quick=False):
    """
    Ring axioms of IntPoly against sympy, the q-Pascal recurrence and
    symmetry, the series inverse contract and soundness of the enumerators
    """
    checker = Checker("structural")
    rng = random.Random(RANDOM_SEED)

    cases = RING_AXIOM_CASES // 10 if quick else RING_AXIOM_CASES
    for _ in range(cases):
        a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
        checker.check(a + b == b + a and a * b == b * a, "commutativity fails")
        checker.check(
            (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c),
            "associativity fails",
        )
        checker.check(a * (b + c) == a * b + a * c, "distributivity fails")
        checker.check(
            a + ZERO == a and a * ONE == a and (a - a).is_zero(), "identities fail"
        )
        checker.check(
            a * b == poly_from_sympy(poly_to_sympy(a) * poly_to_sympy(b)),
            "product disagrees with sympy",
        )

    for n in range(bound(PASCAL_N_MAX, 2 * QUICK_N_MAX, quick) + 1):
        for k in range(n + 1):
            where = "[{n}, {k}]".format(n=n, k=k)
            polynomial = gauss_binomial(n, k)
            checker.check(
                polynomial == gauss_binomial(n, n - k), "symmetry fails at " + where
            )
            checker.check(
                poly_eval_int(polynomial, 1) == binomial(n, k),
                "q=1 value is not C(n, k) at " + where,
            )
            if 0 < k < n:
                checker.check(
                    polynomial
                    == gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k).shift(k),
                    "second q-Pascal recurrence fails at " + where,
                )
            if n <= 12:
                checker.check(
                    polynomial == gauss_binomial_product(n, k),
                    "product formula disagrees at " + where,
                )

    cases = INVERSE_CASES // 10 if quick else INVERSE_CASES
    for _ in range(cases):
        order = rng.randint(0, INVERSE_ORDER)
        a = random_series(rng, order)
        checker.check(
            series_mul(a, series_inverse(a)) == series_one(order),
            "series times its inverse is not 1 at order {order}".format(order=order),
        )

    m_max = bound(THETA_M_MAX, QUICK_M_MAX, quick)
    n_max = bound(THETA_N_MAX, QUICK_N_MAX, quick)
    for m, n in grid(m_max, n_max):
        where = "m={m}, n={n}".format(m=m, n=n)
        bounded = list(enumerate_bounded(m + 1, n))
        distinct = list(enumerate_distinct_bounded(m + 1, n))
        checker.check(
            len(set(bounded)) == len(bounded) == binomial(m + n, n),
            "A count at " + where,
        )
        checker.check(
            len(set(distinct)) == len(distinct) == binomial(m + 1, n),
            "distinct count at " + where,
        )
        checker.check(
            all(p.length == n and p.largest <= m + 1 for p in bounded),
            "bounded enumerator out of range at " + where,
        )
        checker.check(
            all(is_distinct(p) for p in distinct), "repeated part at " + where
        )
        for name in ("B", "U", "V"):
            members = list(enumerate_set(name, m, n))
            checker.check(
                len(set(members)) == len(members)
                and all(in_U(p, m, n) for p in members),
                "set {name} unsound at {where}".format(name=name, where=where),
            )
        checker.check(
            all(is_distinct(p.second) for p in enumerate_set("B", m, n)),
            "B holds a repeated part at " + where,
        )

    for length in range(HALVE_LENGTH_MAX + 1):
        for tau in enumerate_bounded(HALVE_PART_MAX, length):
            checker.check(
                bijections.halve(bijections.double(tau)) == tau,
                "halve does not undo doubling on {tau}".format(tau=tau),
            )
    checker.check(bijections.halve(Partition()) == Partition(), "halve of [] is not []")
    return checker.result()


SUITES = (
    suite_new3,
    suite_new4,
    suite_phi,
    suite_theta,
    suite_generating_function,
    suite_qbinomial_theorem,
    suite_classical,
    suite_special,
    suite_structural,
)


def run_suites(quick=False):
    """
    Run every suite

    Parameters
    ----------
    quick :
        Cap m at 2 and n at 4 and cut the randomised case counts

    Returns
    -------
    results :
        List of SuiteResult in a fixed order
    """
    results = []
    for suite in SUITES:
        result = suite(quick)
        msg = "Suite {name}: {checks} checks, {failures} failures"
        verbose(
            msg.format(
                name=result.name,
                checks=result.checks,
                failures=len(result.failures),
            )
        )
        results.append(result)
    return results


def summary_line(result):
    status = "FAIL" if result.failures else "pass"
    line = "{name}: {status} ({checks} checks, {failures} failures)"
    return line.format(
        name=result.name,
        status=status,
        checks=result.checks,
        failures=len(result.failures),
    )
