#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exceptions raised by the library. The command line front end maps them to
exit codes.
"""


class QBinomialError(ValueError):
    """Base class of every error raised by this package"""


class ParameterError(QBinomialError):
    """A precondition on a size, dilation or identity parameter failed"""


class OrderMismatchError(QBinomialError):
    """Two truncated series of different order were combined"""


class NotInvertibleError(QBinomialError):
    """A series whose constant term is not 1 was inverted"""


class MultiplicityError(QBinomialError):
    """A partition's part multiplicities do not fit the requested map"""


class FixedSetError(QBinomialError):
    """The involution theta was applied to a member of its fixed set"""


class UnknownIdentityError(QBinomialError):
    """No identity is registered under the requested name"""


class LiteralError(QBinomialError):
    """A partition, pair or polynomial literal could not be parsed"""
