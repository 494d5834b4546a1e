#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Defaults shared by the library and the command line front end
"""

SPACY_PLUS = " + "
SPACY_MINUS = " - "
VARIABLE = "q"
SERIES_VARIABLE = "z"
POWER = "{variable}^{exponent}"
SERIES_LINE = SERIES_VARIABLE + "^{power}: {coefficient}"
SERIES_SEPARATOR = "; "

LOGGER_NAME = "qbinomial_identities"
VERBOSE = 15  # between logging.DEBUG and logging.INFO

# Exit codes

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Output

PLAIN = "plain"
JSON = "json"
CSV = "csv"
FORMATS = (PLAIN, JSON, CSV)
REPORT_COLUMNS = ("identity", "m", "n", "a", "lhs", "rhs", "pass")

# Identities

CLASSICAL_IDENTITIES = ("s1", "s2", "s3", "s4", "s5", "new1", "new2")
SERIES_IDENTITIES = ("qbione", "qbitwo")
IDENTITY_NAMES = (
    "s1",
    "s2",
    "s3",
    "s4",
    "s5",
    "new1",
    "new2",
    "new3",
    "new4",
    "spe1",
    "spe2",
    "gf_A",
    "gf_D",
    "qbione",
    "qbitwo",
)

# Default sweep ranges, inclusive, as (minimum, maximum) per parameter.
# Parameters an identity does not use stay fixed at (0, 0).

FIXED = (0, 0)
DEFAULT_RANGES = {
    "s1": {"m": FIXED, "n": (0, 20), "a": FIXED},
    "s2": {"m": FIXED, "n": (1, 20), "a": FIXED},
    "s3": {"m": FIXED, "n": (0, 12), "a": (0, 4)},
    "s4": {"m": FIXED, "n": (0, 12), "a": FIXED},
    "s5": {"m": FIXED, "n": (0, 12), "a": (0, 4)},
    "new1": {"m": (0, 6), "n": (0, 12), "a": FIXED},
    "new2": {"m": (0, 6), "n": (0, 12), "a": FIXED},
    "new3": {"m": (0, 6), "n": (0, 12), "a": FIXED},
    "new4": {"m": (0, 6), "n": (0, 12), "a": FIXED},
    "spe1": {"m": FIXED, "n": (0, 10), "a": FIXED},
    "spe2": {"m": FIXED, "n": (0, 10), "a": FIXED},
    "gf_A": {"m": (0, 6), "n": (0, 10), "a": FIXED},
    "gf_D": {"m": (0, 6), "n": (0, 7), "a": FIXED},
    "qbione": {"m": (0, 6), "n": (0, 12), "a": FIXED},
    "qbitwo": {"m": (0, 6), "n": (0, 12), "a": FIXED},
}
PARAMETERS = ("m", "n", "a")

# Self test

QUICK_M_MAX = 2
QUICK_N_MAX = 4
PHI_M_MAX = 5
PHI_N_MAX = 10
THETA_M_MAX = 4
THETA_N_MAX = 8
SERIES_M_MAX = 6
SERIES_ORDER = 12
SPECIAL_Q_ONE_N_MAX = 15
PASCAL_N_MAX = 30
RING_AXIOM_CASES = 1000
RING_AXIOM_DEGREE = 50
RING_AXIOM_BOUND = 10 ** 6
INVERSE_CASES = 50
INVERSE_ORDER = 20
INVERSE_DEGREE = 10
HALVE_PART_MAX = 7
HALVE_LENGTH_MAX = 5
RANDOM_SEED = 20100

# Partition sets

SET_NAMES = ("A", "B", "U", "V")

# Series names understood by `expand --series`

SERIES_NAMES = (
    "poch-z",
    "inv-poch-z",
    "poch-neg-z",
    "inv-poch-z2",
    "inv-poch-z4",
    "inv-poch-neg-z2",
    "qbione-lhs",
    "qbione-rhs",
    "qbitwo-lhs",
    "qbitwo-rhs",
)

# Bijection maps understood by `trace`

MAP_NAMES = ("phi", "phi-inverse", "theta", "halve")
