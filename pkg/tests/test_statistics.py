import pytest

from gtsij.core.builders import explicit_sij, interval_split, product_split
from gtsij.core.elements import Tagged
from gtsij.core.signed_set import box, disjoint_union, indexed_union, interval, singleton
from gtsij.core.sijection import cod, compose, dom, identity_sij
from gtsij.core.statistics import (
    Statistic,
    check_compatibility,
    constant_statistic,
    normal_statistic,
    pair_statistic,
    product_statistic,
    union_statistic,
)
from gtsij.errors import InterfaceError

IDENTITY = Statistic("id", lambda e: e)


def test_normal_statistic_values():
    assert normal_statistic(interval(2, 5))(3) == 3
    assert normal_statistic(box([(1, 2), (4, 6)]))((1, 5)) == (1, 5)
    union = disjoint_union([interval(0, 2), box([(0, 1), (3, 5)])])
    assert normal_statistic(union)(Tagged(1, (0, 4))) == (0, 4)


def test_normal_statistic_needs_normal_sets():
    with pytest.raises(InterfaceError):
        normal_statistic(indexed_union(interval(0, 2), lambda t: interval(0, t)))
    with pytest.raises(InterfaceError):
        normal_statistic(singleton(3))


@pytest.mark.parametrize("a, b, c", [(0, 4, 2), (0, 2, 5), (3, -1, 1)])
def test_interval_split_keeps_normal(a, b, c):
    phi = interval_split(a, b, c)
    report = check_compatibility(phi, normal_statistic(phi.domain), normal_statistic(phi.codomain))
    assert report.compatible
    assert report.checked == len(phi.domain.support) + len(phi.codomain.support)


def test_compatibility_survives_composition():
    first = product_split([(0, 3), (1, 4)], 0, 1)
    second = identity_sij(first.codomain)
    both = compose(first, second)
    assert check_compatibility(both, normal_statistic(both.domain), normal_statistic(both.codomain)).compatible


def test_incompatible_witness():
    phi = explicit_sij(singleton(0), singleton(1), [(dom(0), cod(1))])
    report = check_compatibility(phi, IDENTITY)
    assert not report.compatible
    assert report.witness == dom(0)
    assert report.summary() == "incompatible with id: value 0 becomes 1 at domain:0"
    assert check_compatibility(phi, constant_statistic(5)).compatible


def test_combined_statistics():
    top = Statistic("top", lambda e: e[0])
    size = Statistic("len", len)
    assert pair_statistic(top, size)((4, 5, 6)) == (4, 3)
    assert pair_statistic(top, size).name == "(top,len)"
    split = union_statistic(constant_statistic(0), constant_statistic(1))
    assert [split(Tagged(i, 9)) for i in (0, 1)] == [0, 1]
    assert product_statistic(IDENTITY, constant_statistic("x"))((2, 3)) == (2, "x")
