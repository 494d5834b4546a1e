#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command line options and the CliConfig record built from them
"""

from __future__ import absolute_import
from __future__ import print_function

import argparse
import collections

from . import version
from .constants import FORMATS
from .constants import MAP_NAMES
from .constants import PLAIN
from .constants import SERIES_NAMES
from .constants import SET_NAMES
from .exceptions import ParameterError
from .labels import IDENTITY_LABELS
from .labels import SERIES_LABELS
from .labels import SET_LABELS
from .labels import labels_to_dictionary

CONFIG_FIELDS = [
    "command",
    "identity",
    "m_min",
    "m_max",
    "n_min",
    "n_max",
    "a_min",
    "a_max",
    "output_format",
    "output",
    "workers",
    "qbinom",
    "dilation",
    "series",
    "m",
    "n",
    "order",
    "poly",
    "set_name",
    "members",
    "signed",
    "map_name",
    "input",
    "arrow",
    "steps",
    "quick",
    "verbose",
    "debug",
    "quiet",
]

CliConfig = collections.namedtuple(
    "CliConfig", CONFIG_FIELDS, defaults=(None,) * len(CONFIG_FIELDS)
)


def nonnegative(text):
    """argparse type: an integer >= 0"""
    value = int(text)
    if value < 0:
        msg = "expected a nonnegative integer, got {value}"
        raise argparse.ArgumentTypeError(msg.format(value=value))
    return value


def positive(text):
    """argparse type: an integer >= 1"""
    value = int(text)
    if value < 1:
        msg = "expected a positive integer, got {value}"
        raise argparse.ArgumentTypeError(msg.format(value=value))
    return value


def epilog(labels):
    dictionary = labels_to_dictionary(labels)
    return "\n".join(
        "  {key}  {label}".format(key=key, label=label)
        for key, label in dictionary.items()
    )


def build_parser():
    """The argument parser of the q.binomial.identities command"""
    parser = argparse.ArgumentParser(
        prog="q.binomial.identities",
        description="Verify q-binomial identities exactly, expand q-binomials "
        "and series, enumerate partition sets and trace bijections",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + version
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Verbose messages"
    )
    parser.add_argument(
        "--debug", action="store_true", help="Debug messages, implies --verbose"
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="Warnings and errors only"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    # verify

    verify = commands.add_parser(
        "verify",
        help="Compare both sides of an identity over a parameter range",
        epilog="identities:\n" + epilog(IDENTITY_LABELS),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    verify.add_argument("--identity", required=True, help="Identity name")
    for parameter in ("m", "n", "a"):
        verify.add_argument(
            "--{p}-min".format(p=parameter),
            type=nonnegative,
            help="Smallest {p}, inclusive".format(p=parameter),
        )
        verify.add_argument(
            "--{p}-max".format(p=parameter),
            type=nonnegative,
            help="Largest {p}, inclusive".format(p=parameter),
        )
    verify.add_argument(
        "--format",
        dest="output_format",
        choices=FORMATS,
        default=PLAIN,
        help="Report format",
    )
    verify.add_argument("--output", help="Write the report to a file")
    verify.add_argument(
        "--workers", type=positive, default=1, help="Threads evaluating points"
    )

    # expand

    expand = commands.add_parser(
        "expand",
        help="Expand a q-binomial, a named series or a polynomial",
        epilog="series:\n" + epilog(SERIES_LABELS),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    what = expand.add_mutually_exclusive_group(required=True)
    what.add_argument(
        "--qbinom",
        nargs=2,
        type=int,
        metavar=("N", "K"),
        help="The q-binomial [N choose K]",
    )
    what.add_argument("--series", choices=SERIES_NAMES, help="A named series")
    what.add_argument("--poly", help="A polynomial in q, e.g. '(1 + q)*(1 - q^2)'")
    expand.add_argument(
        "--dilation", type=positive, default=1, help="Substitute q -> q^R"
    )
    expand.add_argument("--m", type=nonnegative, help="m of a named series")
    expand.add_argument("--order", type=nonnegative, help="Truncation order")

    # census

    census = commands.add_parser(
        "census",
        help="Enumerate one of the partition sets A, B, U, V",
        epilog="sets:\n" + epilog(SET_LABELS),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    census.add_argument("--set", dest="set_name", choices=SET_NAMES, required=True)
    census.add_argument("--m", type=nonnegative, required=True)
    census.add_argument("--n", type=nonnegative, required=True)
    census.add_argument("--members", action="store_true", help="List the members")
    census.add_argument(
        "--signed", action="store_true", help="Weight members by (-1)^l(lambda)"
    )

    # trace

    trace = commands.add_parser("trace", help="Apply a bijection to a literal")
    trace.add_argument("--map", dest="map_name", choices=MAP_NAMES, required=True)
    trace.add_argument(
        "--input",
        required=True,
        help="A partition '[7,5,5,1]' or a pair '([5,4],[7,2,1])'",
    )
    trace.add_argument(
        "--arrow",
        action="store_true",
        help="Print '<input> --map--> <output>' lines",
    )
    trace.add_argument(
        "--steps", type=positive, default=1, help="Apply theta repeatedly"
    )

    # selftest

    selftest = commands.add_parser("selftest", help="Run every verification suite")
    selftest.add_argument(
        "--quick", action="store_true", help="Reduced ranges, m <= 2 and n <= 4"
    )

    return parser


def config_from_namespace(namespace):
    """
    Build a CliConfig from parsed arguments and check what argparse can not

    Raises
    ------
    ParameterError
        If a command misses a field it needs
    """
    values = {
        field: getattr(namespace, field)
        for field in CONFIG_FIELDS
        if hasattr(namespace, field)
    }
    config = CliConfig(**values)

    if config.command == "expand" and config.series is not None:
        if config.m is None or config.order is None:
            raise ParameterError("expand --series needs --m and --order")

    if config.command == "expand" and config.series is None:
        if config.m is not None or config.order is not None:
            raise ParameterError("--m and --order apply to expand --series only")

    if config.command == "trace" and config.steps > 1 and config.map_name != "theta":
        raise ParameterError("--steps applies to --map theta only")

    return config


def parse_arguments(argv=None):
    """Parse command line arguments into a CliConfig"""
    return config_from_namespace(build_parser().parse_args(argv))
