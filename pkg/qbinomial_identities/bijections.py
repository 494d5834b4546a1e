#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
The weight-preserving bijection phi from A to B, its inverse, the
sign-reversing involution theta on U minus V, and the halving map
lambda = tau U tau.
"""

from __future__ import absolute_import
from __future__ import division

import collections

from .exceptions import FixedSetError
from .exceptions import MultiplicityError
from .messages import debug
from .partitions import Partition
from .partitions import PartitionPair
from .partitions import expand_multiplicities
from .partitions import has_even_multiplicities
from .partitions import is_distinct
from .partitions import is_in_V
from .partitions import multiplicity_map
from .partitions import partition_union
from .partitions import remove_parts

REMOVE_FROM_LAMBDA = "REMOVE_FROM_LAMBDA"
MOVE_TO_LAMBDA = "MOVE_TO_LAMBDA"
BRANCHES = (REMOVE_FROM_LAMBDA, MOVE_TO_LAMBDA)

ThetaCase = collections.namedtuple("ThetaCase", ["branch", "pivot"])


def phi(partition):
    """
    Split every multiplicity r into floor(r/2) copies for the first and
    r mod 2 copies for the second partition of the pair

    Parameters
    ----------
    partition :
        Any Partition

    Returns
    -------
    pair :
        PartitionPair (lambda bar, mu) with mu distinct and
        |partition| = 2|lambda bar| + |mu|

    Examples
    --------
    >>> str(phi(Partition([7, 5, 5, 4, 4, 4, 4, 2, 2, 2, 1])))
    '([5,4,4,2],[7,2,1])'
    """
    multiplicities = multiplicity_map(partition)
    first = expand_multiplicities(
        (value, count // 2) for value, count in multiplicities
    )
    second = expand_multiplicities(
        (value, count % 2) for value, count in multiplicities
    )
    return PartitionPair(first, second)


def phi_inverse(pair):
    """
    lambda bar U lambda bar U mu

    Raises
    ------
    MultiplicityError
        If the second partition of the pair repeats a part
    """
    if not is_distinct(pair.second):
        msg = "Second partition of {pair} must have distinct parts"
        raise MultiplicityError(msg.format(pair=pair))
    return partition_union(pair.first, partition_union(pair.first, pair.second))


def largest_odd_multiplicity(partition):
    """Largest part repeated an odd number of times, None if there is none"""
    for value, count in multiplicity_map(partition):
        if count % 2:
            return value
    return None


def largest_repeated(partition):
    """Largest part repeated at least twice, None if there is none"""
    for value, count in multiplicity_map(partition):
        if count > 1:
            return value
    return None


def theta(pair):
    """
    The involution on U minus V

    Let lambda_i0 be the largest part of lambda with odd multiplicity and
    mu_j0 the largest repeated part of mu. If lambda_i0 exists and mu_j0
    does not, or lambda_i0 >= mu_j0, one copy of lambda_i0 leaves lambda and
    two copies join mu. Otherwise two copies of mu_j0 leave mu and one joins
    lambda. 2|lambda| + |mu| is preserved and l(lambda) changes by one.

    Parameters
    ----------
    pair :
        PartitionPair outside V

    Returns
    -------
    image, case :
        The image pair and a ThetaCase(branch, pivot) naming the branch
        taken and the part moved

    Raises
    ------
    FixedSetError
        If the pair is in V
    """
    if is_in_V(pair):
        msg = "theta is not defined on {pair}, a member of the fixed set V"
        raise FixedSetError(msg.format(pair=pair))

    lambda_pivot = largest_odd_multiplicity(pair.first)
    mu_pivot = largest_repeated(pair.second)

    if lambda_pivot is not None and (mu_pivot is None or lambda_pivot >= mu_pivot):
        case = ThetaCase(REMOVE_FROM_LAMBDA, lambda_pivot)
        image = PartitionPair(
            remove_parts(pair.first, lambda_pivot, 1),
            partition_union(pair.second, Partition([lambda_pivot] * 2)),
        )
    else:
        case = ThetaCase(MOVE_TO_LAMBDA, mu_pivot)
        image = PartitionPair(
            partition_union(pair.first, Partition([mu_pivot])),
            remove_parts(pair.second, mu_pivot, 2),
        )

    msg = "theta {pair} -> {image} ({branch}, pivot {pivot})"
    debug(msg.format(pair=pair, image=image, branch=case.branch, pivot=case.pivot))
    return image, case


def halve(partition):
    """
    The partition tau with tau U tau = partition

    Raises
    ------
    MultiplicityError
        If some part has odd multiplicity
    """
    if not has_even_multiplicities(partition):
        msg = "Cannot halve {p}: some part has odd multiplicity"
        raise MultiplicityError(msg.format(p=partition))
    return expand_multiplicities(
        (value, count // 2) for value, count in multiplicity_map(partition)
    )


def double(partition):
    """tau U tau"""
    return partition_union(partition, partition)
