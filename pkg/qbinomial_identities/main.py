#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The commands behind the q.binomial.identities script. Every run_* function
writes its results to 'stream' and returns an exit code.
"""

from __future__ import division
from __future__ import absolute_import
from __future__ import print_function

import sys

from . import bijections
from .cli import parse_arguments
from .constants import EXIT_FAILURE
from .constants import EXIT_SUCCESS
from .constants import EXIT_USAGE
from .exactpoly import poly_dilate
from .exactpoly import parse_poly
from .exactpoly import render_poly
from .exceptions import ParameterError
from .exceptions import QBinomialError
from .identities import sweep_ranges
from .identities import verify_sweep
from .messages import error
from .messages import message
from .messages import set_verbosity
from .messages import verbose
from .partitions import enumerate_set
from .partitions import parse_pair
from .partitions import parse_partition
from .partitions import set_weight
from .partitions import weight_polynomial
from .qfunctions import QBinomArgs
from .qfunctions import check_upper
from .qfunctions import qbinomial
from .selftest import run_suites
from .selftest import summary_line
from .series import named_series
from .series import render_series
from .utilities import render_arrow
from .utilities import render_theta_case
from .utilities import serialise_reports
from .utilities import theta_label
from .utilities import write_text


def run_verify(config, stream):
    """Sweep an identity and serialise the reports"""
    overrides = {
        "m": (config.m_min, config.m_max),
        "n": (config.n_min, config.n_max),
        "a": (config.a_min, config.a_max),
    }
    ranges = sweep_ranges(config.identity, overrides)
    reports = verify_sweep(config.identity, ranges, workers=config.workers or 1)
    text = serialise_reports(reports, config.output_format)

    if config.output:
        write_text(config.output, text)
        msg = "Report of {count} points written to '{output}'"
        message(msg.format(count=len(reports), output=config.output))
    else:
        stream.write(text)

    failures = [report for report in reports if not report.passed]
    if failures:
        first = failures[0].point
        msg = "{name} fails at {count} of {total} points, first at m={m}, n={n}, a={a}"
        error(
            msg.format(
                name=config.identity,
                count=len(failures),
                total=len(reports),
                m=first.m,
                n=first.n,
                a=first.a,
            )
        )
        return EXIT_FAILURE
    return EXIT_SUCCESS


def run_expand(config, stream):
    """Print a q-binomial, a named series or a parsed polynomial"""
    dilation = config.dilation or 1
    if config.qbinom is not None:
        upper, lower = config.qbinom
        check_upper(upper)
        text = render_poly(qbinomial(QBinomArgs(upper, lower, dilation)))
    elif config.series is not None:
        if dilation != 1:
            raise ParameterError("--dilation applies to --qbinom and --poly only")
        text = render_series(named_series(config.series, config.m, config.order))
    else:
        text = render_poly(poly_dilate(parse_poly(config.poly), dilation))
    print(text, file=stream)
    return EXIT_SUCCESS


def run_census(config, stream):
    """Cardinality and weight sum of a partition set, optionally its members"""
    if config.signed and config.set_name == "A":
        raise ParameterError("--signed applies to the sets of pairs B, U and V")

    members = list(enumerate_set(config.set_name, config.m, config.n))
    msg = "Set {name} for m={m}, n={n} holds {count} members"
    verbose(
        msg.format(name=config.set_name, m=config.m, n=config.n, count=len(members))
    )

    if config.members:
        for member in members:
            print(member, file=stream)

    sign = (lambda pair: pair.sign) if config.signed else None
    weight = weight_polynomial(
        members, lambda member: set_weight(config.set_name, member), sign
    )
    print("cardinality={count}".format(count=len(members)), file=stream)
    print("weight={weight}".format(weight=render_poly(weight)), file=stream)
    return EXIT_SUCCESS


def run_trace(config, stream):
    """Apply phi, its inverse, theta or halve to a literal"""
    if config.map_name == "phi":
        source = parse_partition(config.input)
        steps = [(source, "phi", bijections.phi(source), None)]
    elif config.map_name == "phi-inverse":
        source = parse_pair(config.input)
        steps = [(source, "phi-inverse", bijections.phi_inverse(source), None)]
    elif config.map_name == "halve":
        source = parse_partition(config.input)
        steps = [(source, "halve", bijections.halve(source), None)]
    else:
        source = parse_pair(config.input)
        steps = []
        for _ in range(config.steps or 1):
            target, case = bijections.theta(source)
            steps.append((source, theta_label(case), target, case))
            source = target

    for source, label, target, case in steps:
        if config.arrow:
            line = render_arrow(source, label, target)
        elif case is not None:
            line = "{target} {case}".format(target=target, case=render_theta_case(case))
        else:
            line = str(target)
        print(line, file=stream)
    return EXIT_SUCCESS


def run_selftest(config, stream):
    """Run every suite, one summary line each"""
    results = run_suites(quick=bool(config.quick))
    for result in results:
        print(summary_line(result), file=stream)

    failed = [result.name for result in results if result.failures]
    if failed:
        msg = "Failing suites: {names}"
        error(msg.format(names=", ".join(failed)))
        return EXIT_FAILURE
    return EXIT_SUCCESS


COMMANDS = {
    "verify": run_verify,
    "expand": run_expand,
    "census": run_census,
    "trace": run_trace,
    "selftest": run_selftest,
}


def main(argv=None, stream=None):
    """
    Main program

    Parameters
    ----------
    argv :
        Command line arguments, sys.argv[1:] by default

    stream :
        Where results are written, standard output by default

    Returns
    -------
    status :
        0 if everything passed, 1 on a verification failure, 2 on a usage
        error
    """
    try:
        config = parse_arguments(argv)
    except SystemExit as exiting:
        # argparse exits with 2 on bad usage, 0 after --help
        return exiting.code
    except QBinomialError as e:
        set_verbosity()
        error(str(e))
        return EXIT_USAGE

    set_verbosity(verbose=config.verbose, debugging=config.debug, quiet=config.quiet)
    stream = stream or sys.stdout
    try:
        return COMMANDS[config.command](config, stream)
    except QBinomialError as e:
        error(str(e))
        return EXIT_USAGE


def console_main():
    sys.exit(main())
