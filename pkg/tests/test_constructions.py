import pytest

from gtsij.core.builders import interval_split
from gtsij.core.elements import Tagged
from gtsij.core.signed_set import box, opposite
from gtsij.core.sijection import cod, dom
from gtsij.core.statistics import Statistic, check_compatibility, normal_statistic
from gtsij.core.verify import graph_edges, verify_sijection
from gtsij.errors import InterfaceError
from gtsij.patterns.constructions import (
    beta,
    gamma_row,
    gamma_row_parts,
    move_sij,
    moved,
    pi,
    replace,
    rho,
    sigma,
    swap,
    tau,
)
from gtsij.patterns.gt import eta_row, eta_row_statistic, eta_top_statistic, gt, gt_rows


def assert_valid(phi):
    report = verify_sijection(phi)
    assert report.valid, report.summary()


def assert_compatible(phi, on_domain, on_codomain=None):
    report = check_compatibility(phi, on_domain, on_codomain)
    assert report.compatible, report.summary()


def test_index_helpers():
    assert swap((1, 3, 5), 2) == (1, 5, 3)
    assert replace((1, 3, 5), 1, 9) == (9, 3, 5)
    assert moved((1, 3, 5), 1, 3) == (3, 5, 1)
    assert moved((1, 3, 5), 3, 1) == (5, 1, 3)


@pytest.mark.parametrize("a, b, x", [((0,), (3,), 1), ((0, 2), (2, 4), 5), ((1, 3), (0, 4), 2), ((0, 1, 0), (2, 0, 2), 3)])
def test_beta_keeps_l(a, b, x):
    phi = beta(a, b, x)
    assert_valid(phi)
    assert_compatible(phi, normal_statistic(phi.domain), Statistic("normal", lambda e: e[0]))


def test_beta_single_coordinate_is_the_interval_split():
    assert len(graph_edges(beta((1,), (3,), 2))) == len(graph_edges(interval_split(1, 3, 2)))


def test_beta_on_empty_box():
    phi = beta((1, 2), (1, 2), 4)
    assert phi.domain.is_empty() and phi.codomain.size == 0


def test_rho_single_row():
    phi = rho((1,), (2,), 5)
    assert phi.apply(dom((1, (1,)))) == cod(((1, (1,)), (Tagged(0, 1),)))


@pytest.mark.parametrize("a, b, x", [((0, 1), (2, 3), 4), ((2, 0), (0, 2), 3)])
def test_rho_keeps_top_rows(a, b, x):
    phi = rho(a, b, x)
    assert_valid(phi)
    top = eta_top_statistic()
    assert_compatible(phi, top, top)

    def rows(element):
        child, l = element
        return tuple(tuple(sorted(row)) for row in gt_rows(l, child))

    assert_compatible(phi, Statistic("rows", rows), Statistic("rows", lambda e: rows(e[0])))


def test_pi_two_rows_is_forced():
    phi = pi((1, 3), 1)
    assert phi.codomain == opposite(gt((3, 1)))
    assert phi.apply(dom((1, (1,)))) == cod((1, (1,)))


@pytest.mark.parametrize("k, i", [((1, 3, 5), 1), ((1, 3, 5), 2), ((0, 2, 1), 1), ((0, 1, 2, 3), 2), ((0, 2, 1, 3), 1), ((0, 2, 1, 3), 3)])
def test_pi_keeps_rows(k, i):
    phi = pi(k, i)
    assert phi.codomain == opposite(gt(swap(k, i)))
    assert_valid(phi)
    assert_compatible(phi, eta_row_statistic(k), eta_row_statistic(swap(k, i)))


def test_pi_position_range():
    with pytest.raises(InterfaceError):
        pi((1, 3, 5), 3)


@pytest.mark.parametrize("a, b, i", [((0, 0), (2, 2), 1), ((0, 2), (2, 0), 1), ((0, 1, 1), (2, 1, 1), 2), ((3, 0, 0), (1, 3, 3), 2)])
def test_sigma_cancels(a, b, i):
    phi = sigma(a, b, i)
    assert phi.codomain.is_empty()
    assert phi.domain.size == 0
    assert_valid(phi)
    rows = Statistic("eta_row", lambda e: eta_row(e[1], e[0]))
    assert_compatible(phi, rows, rows)


def test_sigma_needs_matching_coordinates():
    with pytest.raises(InterfaceError):
        sigma((0, 0), (2, 3), 1)


def test_gamma_row_parts():
    assert gamma_row_parts((0, 2, 4), 6) == [
        [(6, 2), (2, 4)],
        [(0, 6), (6, 4)],
        [(0, 2), (2, 6)],
        [(2, 6), (2, 6)],
    ]


@pytest.mark.parametrize("k, x", [((1, 4), 2), ((0, 2, 4), 1), ((0, 2, 4), 2), ((3, 1, 2), 5), ((0, 1, 3, 4), 2)])
def test_gamma_row_keeps_normal(k, x):
    phi = gamma_row(k, x)
    assert phi.domain == box([(k[j], k[j + 1]) for j in range(len(k) - 1)])
    assert_valid(phi)
    assert_compatible(phi, normal_statistic(phi.domain), normal_statistic(phi.codomain))


def test_gamma_row_needs_two_entries():
    with pytest.raises(InterfaceError):
        gamma_row((1,), 3)


def test_tau_single_entry():
    assert tau((7,), 3).apply(dom(7)) == cod(Tagged(0, 3))


@pytest.mark.parametrize("k, x", [((0, 2), 4), ((0, 2), -1), ((0, 2, 5), 3), ((2, 0, 1), 4)])
def test_tau(k, x):
    phi = tau(k, x)
    assert_valid(phi)
    assert gt(k).size == sum(gt(replace(k, i, x)).size for i in range(1, len(k) + 1))
    top = eta_top_statistic()
    assert_compatible(phi, top, top)


def test_move_sij_lands_on_moved_row():
    phi = move_sij((0, 2, 4), 1, 3)
    assert phi.codomain == gt((2, 4, 0))
    assert_valid(phi)
    assert_compatible(phi, eta_row_statistic((0, 2, 4)), eta_row_statistic((2, 4, 0)))
