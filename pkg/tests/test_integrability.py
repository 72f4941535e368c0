import pytest

from gtsij.core.sijection import dom
from gtsij.errors import InterfaceError
from gtsij.patterns.constructions import swap_path_sij
from gtsij.patterns.gt import gt
from gtsij.patterns.integrability import check_partial_integrability, closed_paths


def test_closed_paths():
    assert closed_paths(3, 2) == [(), (1, 1), (2, 2)]
    assert len(closed_paths(2, 4)) == 3


def test_double_swap_fixes_plus_part():
    chain = swap_path_sij((0, 2), [1, 1])
    assert chain.codomain.plus == gt((0, 2)).plus
    assert chain.codomain.minus == gt((0, 2)).minus
    for element in gt((0, 2)).plus:
        assert chain.apply(dom(element)).element == element


def test_paths_on_three_rows():
    report = check_partial_integrability((0, 2, 4), 2)
    assert report.ok
    assert report.paths == closed_paths(3, 2)
    assert report.summary().startswith("3 closed paths")


def test_integrability_preconditions():
    with pytest.raises(InterfaceError):
        check_partial_integrability((2, 0), 2)
    with pytest.raises(InterfaceError):
        check_partial_integrability((0, 1, 2, 3), 2)
