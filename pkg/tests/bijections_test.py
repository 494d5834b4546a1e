import pytest

from qbinomial_identities.bijections import BRANCHES
from qbinomial_identities.bijections import MOVE_TO_LAMBDA
from qbinomial_identities.bijections import REMOVE_FROM_LAMBDA
from qbinomial_identities.bijections import ThetaCase
from qbinomial_identities.bijections import double
from qbinomial_identities.bijections import halve
from qbinomial_identities.bijections import phi
from qbinomial_identities.bijections import phi_inverse
from qbinomial_identities.bijections import theta
from qbinomial_identities.exceptions import FixedSetError
from qbinomial_identities.exceptions import MultiplicityError
from qbinomial_identities.partitions import Partition
from qbinomial_identities.partitions import PartitionPair
from qbinomial_identities.partitions import enumerate_bounded
from qbinomial_identities.partitions import enumerate_set
from qbinomial_identities.partitions import is_in_V


def pair(first, second):
    return PartitionPair(Partition(first), Partition(second))


@pytest.mark.parametrize(
    "partition, expected",
    [
        ([7, 5, 5, 4, 4, 4, 4, 2, 2, 2, 1], ([5, 4, 4, 2], [7, 2, 1])),
        ([], ([], [])),
        ([3, 3], ([3], [])),
        ([2, 2, 2], ([2], [2])),
    ],
)
def test_phi(partition, expected):
    assert phi(Partition(partition)) == pair(*expected)


@pytest.mark.parametrize(
    "value, expected",
    [
        (([5, 4, 4, 2], [7, 2, 1]), [7, 5, 5, 4, 4, 4, 4, 2, 2, 2, 1]),
        (([], []), []),
        (([3], [3]), [3, 3, 3]),
    ],
)
def test_phi_inverse(value, expected):
    assert phi_inverse(pair(*value)) == Partition(expected)


def test_phi_inverse_rejects_repeated_parts():
    with pytest.raises(MultiplicityError):
        phi_inverse(pair([1], [2, 2]))


def test_phi_is_a_bijection_onto_B():
    for m in range(3):
        for n in range(6):
            members_a = list(enumerate_set("A", m, n))
            images = [phi(partition) for partition in members_a]
            assert len(set(images)) == len(images)
            assert set(images) == set(enumerate_set("B", m, n))
            for partition, image in zip(members_a, images):
                assert partition.weight == image.weight(2)
                assert phi_inverse(image) == partition


@pytest.mark.parametrize(
    "value, expected, case",
    [
        (
            ([5, 5, 4, 4, 4, 3, 3, 3, 1, 1], [5, 3, 2, 2, 1]),
            ([5, 5, 4, 4, 3, 3, 3, 1, 1], [5, 4, 4, 3, 2, 2, 1]),
            ThetaCase(REMOVE_FROM_LAMBDA, 4),
        ),
        (([2, 2], [3, 3, 1]), ([3, 2, 2], [1]), ThetaCase(MOVE_TO_LAMBDA, 3)),
        (([5], []), ([], [5, 5]), ThetaCase(REMOVE_FROM_LAMBDA, 5)),
        (([], [2, 2]), ([2], []), ThetaCase(MOVE_TO_LAMBDA, 2)),
    ],
)
def test_theta(value, expected, case):
    assert theta(pair(*value)) == (pair(*expected), case)


def test_theta_tie_takes_the_first_branch():
    image, case = theta(pair([2], [2, 2]))
    assert image == pair([], [2, 2, 2, 2])
    assert case == ThetaCase(REMOVE_FROM_LAMBDA, 2)
    assert theta(image) == (pair([2], [2, 2]), ThetaCase(MOVE_TO_LAMBDA, 2))


@pytest.mark.parametrize("value", [([], []), ([2, 2], [3, 1]), ([1, 1], [])])
def test_theta_rejects_fixed_set(value):
    with pytest.raises(FixedSetError):
        theta(pair(*value))


def test_theta_is_a_sign_reversing_involution():
    for m in range(3):
        for n in range(7):
            for value in enumerate_set("U", m, n):
                if is_in_V(value):
                    continue
                image, case = theta(value)
                assert case.branch in BRANCHES
                assert image != value
                assert not is_in_V(image)
                assert theta(image)[0] == value
                assert image.weight(2) == value.weight(2)
                assert image.sign == -value.sign


def test_halve():
    assert halve(Partition()) == Partition()
    assert halve(Partition([5, 5, 4, 4, 4, 4])) == Partition([5, 4, 4])
    with pytest.raises(MultiplicityError):
        halve(Partition([3, 3, 3]))


def test_halve_undoes_double():
    assert double(Partition([5, 4, 4])) == Partition([5, 5, 4, 4, 4, 4])
    for length in range(4):
        for tau in enumerate_bounded(5, length):
            assert halve(double(tau)) == tau
