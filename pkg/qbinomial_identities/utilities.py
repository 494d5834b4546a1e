#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Rendering and serialisation of exact values, verification reports and
bijection traces
"""

from __future__ import division
from __future__ import absolute_import
from __future__ import print_function

import csv
import io
import json
from fractions import Fraction

from .constants import CSV
from .constants import JSON
from .constants import PLAIN
from .constants import REPORT_COLUMNS
from .constants import SERIES_SEPARATOR
from .exactpoly import IntPoly
from .exactpoly import render_poly
from .exceptions import ParameterError
from .series import ZSeries
from .series import render_series


def render_value(value):
    """Render an IntPoly, a ZSeries or an exact rational as text

    Rationals with denominator 1 are written as integers, others as 'p/q'.
    Series are written on one line, 'z^0: ...; z^1: ...'.
    """
    if isinstance(value, IntPoly):
        return render_poly(value)
    if isinstance(value, ZSeries):
        return render_series(value, SERIES_SEPARATOR)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    msg = "Cannot render a value of type {kind}"
    raise TypeError(msg.format(kind=type(value).__name__))


def report_to_dictionary(report):
    """One report as a dictionary keyed by REPORT_COLUMNS"""
    values = (
        report.identity,
        report.point.m,
        report.point.n,
        report.point.a,
        render_value(report.lhs),
        render_value(report.rhs),
        report.passed,
    )
    return dict(zip(REPORT_COLUMNS, values))


def reports_to_plain(reports):
    """
    One line per report

    Examples
    --------
    new3 m=1 n=2 a=0 pass: 1 + q + q^2 == 1 + q + q^2
    """
    lines = []
    for report in reports:
        line = "{identity} m={m} n={n} a={a} {status}: {lhs} {relation} {rhs}"
        lines.append(
            line.format(
                identity=report.identity,
                m=report.point.m,
                n=report.point.n,
                a=report.point.a,
                status="pass" if report.passed else "FAIL",
                lhs=render_value(report.lhs),
                relation="==" if report.passed else "!=",
                rhs=render_value(report.rhs),
            )
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports):
    """A JSON array of objects with the keys of REPORT_COLUMNS"""
    records = [report_to_dictionary(report) for report in reports]
    return json.dumps(records, indent=2) + "\n"


def reports_to_csv(reports):
    """CSV text with a header row of REPORT_COLUMNS"""
    stream = io.StringIO()
    w = csv.writer(stream, lineterminator="\n")

    # write a header
    w.writerow(REPORT_COLUMNS)

    for report in reports:
        record = report_to_dictionary(report)
        record["pass"] = "true" if record["pass"] else "false"
        w.writerow([record[column] for column in REPORT_COLUMNS])

    return stream.getvalue()


SERIALISERS = {PLAIN: reports_to_plain, JSON: reports_to_json, CSV: reports_to_csv}


def serialise_reports(reports, output_format=PLAIN):
    """Serialise reports in one of the output formats

    Raises
    ------
    ParameterError
        If the format is unknown
    """
    try:
        serialiser = SERIALISERS[output_format]
    except KeyError:
        msg = "Unknown output format '{output_format}', expected one of: {formats}"
        raise ParameterError(
            msg.format(output_format=output_format, formats=", ".join(SERIALISERS))
        )
    return serialiser(reports)


def write_text(filename, text):
    """Write 'text' to a file named 'filename'"""
    with open(filename, "w", newline="") as f:
        f.write(text)


def render_theta_case(case):
    """'branch=REMOVE_FROM_LAMBDA pivot=4'"""
    return "branch={branch} pivot={pivot}".format(branch=case.branch, pivot=case.pivot)


def render_arrow(source, label, target):
    """'<source> --<label>--> <target>'"""
    return "{source} --{label}--> {target}".format(
        source=source, label=label, target=target
    )


def theta_label(case):
    """'theta[REMOVE_FROM_LAMBDA,4]'"""
    return "theta[{branch},{pivot}]".format(branch=case.branch, pivot=case.pivot)
