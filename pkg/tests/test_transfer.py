import itertools

import numpy as np
import pytest

from gtsij.errors import InterfaceError
from gtsij.triangles.monotone import arrow_rows_through, brute_force_multiplicity
from gtsij.triangles.transfer import A1, A4, O, m_multiplicity, transfer_matrix


def test_transfer_matrix_cases():
    assert np.array_equal(transfer_matrix(1, 3, 1), A1)
    assert np.array_equal(transfer_matrix(1, 2, 1), A4)
    assert np.array_equal(transfer_matrix(1, 2, 0), O)
    assert np.array_equal(transfer_matrix(1, 5, 7), O)


@pytest.mark.parametrize("k,l,expected", [
    ((3, 1), (0,), 0),
    ((1, 3), (1,), 1),
    ((0, 1), (0,), 1),
    ((0, 3), (1,), 1),
    ((2, 0), (1,), -1),
    ((0, 2, 4), (1, 2), 0),
    ((0, 2, 4), (0, 3), 1),
])
def test_multiplicity_examples(k, l, expected):
    assert m_multiplicity(k, l) == expected
    assert brute_force_multiplicity(k, l) == expected


@pytest.mark.parametrize("k", list(itertools.product(range(4), repeat=2)) + [(0, 2, 1), (3, 1, 2), (1, 2, 4)])
def test_multiplicity_matches_enumeration(k):
    low, high = min(k) - 1, max(k) + 1
    for l in itertools.product(range(low, high + 1), repeat=len(k) - 1):
        assert m_multiplicity(k, l) == brute_force_multiplicity(k, l), l


def test_arrow_rows_through_sizes():
    k = (0, 2, 3)
    for l, rows in arrow_rows_through(k).items():
        assert rows.size == m_multiplicity(k, l)


def test_multiplicity_length_check():
    with pytest.raises(InterfaceError):
        m_multiplicity((0, 2), (0, 1))
