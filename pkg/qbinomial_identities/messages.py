#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Messaging front end: message(), verbose(), debug(), warning() and error(),
routed through one logging.Logger
"""

from __future__ import absolute_import

import logging
import sys

from .constants import LOGGER_NAME
from .constants import VERBOSE

logging.addLevelName(VERBOSE, "VERBOSE")
logger = logging.getLogger(LOGGER_NAME)
logger.addHandler(logging.NullHandler())


def set_verbosity(verbose=False, debugging=False, quiet=False, stream=None):
    """Attach a stream handler to the package logger and set its level

    Parameters
    ----------
    verbose :
        Show verbose messages

    debugging :
        Show debug messages as well, implies 'verbose'

    quiet :
        Show warnings and errors only

    stream :
        Where log records are written, standard error by default

    Returns
    -------
    handler :
        The handler that was attached
    """
    level = logging.INFO
    if quiet:
        level = logging.WARNING
    if verbose:
        level = VERBOSE
    if debugging:
        level = logging.DEBUG

    for handler in list(logger.handlers):
        if not isinstance(handler, logging.NullHandler):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    return handler


def message(msg):
    logger.info(msg)


def verbose(msg):
    logger.log(VERBOSE, msg)


def debug(msg):
    logger.debug(msg)


def warning(msg):
    logger.warning(msg)


def error(msg):
    logger.error(msg)
