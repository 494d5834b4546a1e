#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Partitions, pairs of partitions and the constrained enumerators producing
the sets A, B, U and V.

Enumerators are generators: every call streams a fresh, deterministic
sequence, lexicographically decreasing on the parts.
"""

from __future__ import absolute_import
from __future__ import division

import ast
import collections
import itertools

from .constants import SET_NAMES
from .exactpoly import poly_from_terms
from .exceptions import LiteralError
from .exceptions import MultiplicityError
from .exceptions import ParameterError
from .messages import debug


class Partition(object):
    """A weakly decreasing finite sequence of positive integers, immutable

    >>> Partition([3, 1, 1]).weight
    5
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(parts)
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                msg = "Parts must be positive integers, got {parts}"
                raise ParameterError(msg.format(parts=list(parts)))
        for larger, smaller in zip(parts, parts[1:]):
            if larger < smaller:
                msg = "Parts must be weakly decreasing, got {parts}"
                raise ParameterError(msg.format(parts=list(parts)))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition values are immutable")

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    @property
    def largest(self):
        """The largest part, 0 for the empty partition"""
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __ne__(self, other):
        equal = self.__eq__(other)
        if equal is NotImplemented:
            return equal
        return not equal

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return render_partition(self)

    def __repr__(self):
        return "Partition({text})".format(text=render_partition(self))


EMPTY = Partition()


class PartitionPair(collections.namedtuple("PartitionPair", ["first", "second"])):
    """A pair (lambda, mu) of partitions

    Membership in B, U or V is decided by predicates, never by construction.
    """

    __slots__ = ()

    @property
    def sign(self):
        """(-1)^l(lambda)"""
        return -1 if self.first.length % 2 else 1

    def weight(self, scale=2):
        """scale * |lambda| + |mu|"""
        return scale * self.first.weight + self.second.weight

    def __str__(self):
        return render_pair(self)


def check_sizes(max_part, length):
    if max_part < 0 or length < 0:
        msg = "Largest part and length must be nonnegative, got {p} and {l}"
        raise ParameterError(msg.format(p=max_part, l=length))


def enumerate_bounded(max_part, length):
    """
    Partitions with largest part at most 'max_part' and exactly 'length'
    parts

    Parameters
    ----------
    max_part :
        Upper bound for every part

    length :
        Number of parts

    Returns
    -------
    partitions :
        A generator of Partition values, lexicographically decreasing; the
        empty partition exactly when length is 0

    Examples
    --------
    >>> [str(p) for p in enumerate_bounded(2, 2)]
    ['[2,2]', '[2,1]', '[1,1]']
    """
    check_sizes(max_part, length)
    for parts in itertools.combinations_with_replacement(
        range(max_part, 0, -1), length
    ):
        yield Partition(parts)


def enumerate_distinct_bounded(max_part, length):
    """
    Partitions into distinct parts, largest part at most 'max_part' and
    exactly 'length' parts; lexicographically decreasing
    """
    check_sizes(max_part, length)
    for parts in itertools.combinations(range(max_part, 0, -1), length):
        yield Partition(parts)


def partition_union(a, b):
    """All parts of 'a' and 'b' together, in decreasing order"""
    return Partition(sorted(a.parts + b.parts, reverse=True))


def remove_parts(p, value, count):
    """
    Remove 'count' copies of the part 'value' from 'p'

    Raises
    ------
    MultiplicityError
        If 'p' holds fewer than 'count' copies of 'value'
    """
    parts = list(p.parts)
    for _ in range(count):
        try:
            parts.remove(value)
        except ValueError:
            msg = "Partition {p} holds fewer than {count} parts equal to {value}"
            raise MultiplicityError(msg.format(p=p, count=count, value=value))
    return Partition(parts)


def multiplicity_map(p):
    """(part, multiplicity) pairs, decreasing by part"""
    return [(value, len(list(group))) for value, group in itertools.groupby(p.parts)]


def expand_multiplicities(multiplicities):
    """Inverse of multiplicity_map()"""
    parts = []
    for value, count in multiplicities:
        parts.extend([value] * count)
    return Partition(parts)


def is_distinct(p):
    return all(count == 1 for _, count in multiplicity_map(p))


def has_even_multiplicities(p):
    return all(count % 2 == 0 for _, count in multiplicity_map(p))


def is_in_V(pair):
    """Every part of lambda repeats an even number of times and mu is
    distinct"""
    return has_even_multiplicities(pair.first) and is_distinct(pair.second)


def check_set_parameters(m, n):
    if m < 0 or n < 0:
        msg = "Set parameters m and n must be nonnegative, got m={m}, n={n}"
        raise ParameterError(msg.format(m=m, n=n))


def enumerate_pairs(m, n, scale, distinct):
    """
    Pairs (lambda, mu) with lambda_1, mu_1 <= m+1 and
    scale * l(lambda) + l(mu) = n, grouped by l(lambda) ascending
    """
    check_set_parameters(m, n)
    second = enumerate_distinct_bounded if distinct else enumerate_bounded
    for k in range(n // scale + 1):
        for first in enumerate_bounded(m + 1, k):
            for mu in second(m + 1, n - scale * k):
                yield PartitionPair(first, mu)


def enumerate_set(name, m, n):
    """
    Stream the members of one of the sets A, B, U, V for parameters m, n

    A holds partitions; B, U and V hold PartitionPair values.

    Raises
    ------
    ParameterError
        If the set name is unknown
    """
    msg = "Enumerating set {name} for m={m}, n={n}"
    debug(msg.format(name=name, m=m, n=n))

    if name == "A":
        check_set_parameters(m, n)
        return enumerate_bounded(m + 1, n)
    if name == "B":
        return enumerate_pairs(m, n, scale=2, distinct=True)
    if name == "U":
        return enumerate_pairs(m, n, scale=2, distinct=False)
    if name == "V":
        return (pair for pair in enumerate_pairs(m, n, 2, False) if is_in_V(pair))

    msg = "Unknown set '{name}', expected one of: {names}"
    raise ParameterError(msg.format(name=name, names=", ".join(SET_NAMES)))


def enumerate_set_quadruple(m, n):
    """Pairs (tau, mu), mu distinct, tau_1, mu_1 <= m+1, 4l(tau) + l(mu) = n"""
    return enumerate_pairs(m, n, scale=4, distinct=True)


def set_weight(name, member):
    """Weight statistic of a member of A (|lambda|) or B, U, V
    (2|lambda| + |mu|)"""
    if name == "A":
        return member.weight
    return member.weight(2)


def weight_polynomial(members, weight, sign=None):
    """
    Sum of sign(x) * q^weight(x) over a stream of members

    Parameters
    ----------
    members :
        Iterable of partitions or pairs, consumed once

    weight :
        Callable giving the exponent of a member

    sign :
        Optional callable giving +1 or -1 for a member

    Returns
    -------
    polynomial :
        IntPoly
    """
    if sign is None:
        return poly_from_terms((1, weight(member)) for member in members)
    return poly_from_terms((sign(member), weight(member)) for member in members)


def render_partition(p):
    """'[7,5,5,1]'; the empty partition is '[]'"""
    return "[" + ",".join(str(part) for part in p.parts) + "]"


def render_pair(pair):
    """'([5,4],[7,2,1])'"""
    return "({first},{second})".format(
        first=render_partition(pair.first), second=render_partition(pair.second)
    )


def literal_to_partition(value, text):
    if not isinstance(value, list):
        msg = "Expected a bracketed list of parts in '{text}'"
        raise LiteralError(msg.format(text=text))
    try:
        return Partition(value)
    except ParameterError as error:
        raise LiteralError("{text}: {e}".format(text=text, e=error))


def read_literal(text):
    try:
        return ast.literal_eval(text.strip())
    except (ValueError, SyntaxError):
        raise LiteralError("Malformed literal '{text}'".format(text=text))


def parse_partition(text):
    """
    Parse '[7,5,5,1]'. Sequences that are not weakly decreasing are rejected,
    never sorted.

    Raises
    ------
    LiteralError
    """
    return literal_to_partition(read_literal(text), text)


def parse_pair(text):
    """Parse '([5,4],[7,2,1])'

    Raises
    ------
    LiteralError
    """
    value = read_literal(text)
    if not isinstance(value, tuple) or len(value) != 2:
        msg = "Expected a pair '([...],[...])', got '{text}'"
        raise LiteralError(msg.format(text=text))
    return PartitionPair(
        literal_to_partition(value[0], text), literal_to_partition(value[1], text)
    )
