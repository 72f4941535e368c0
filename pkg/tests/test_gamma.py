import itertools

import pytest

from gtsij.core.elements import UNIT, Arrow
from gtsij.core.sijection import cod, dom
from gtsij.core.statistics import check_compatibility
from gtsij.core.verify import verify_sijection
from gtsij.errors import InterfaceError
from gtsij.gamma.pipeline import (
    first_descent,
    gamma_limit,
    gamma_sij,
    gamma_stability_check,
    gamma_statistics,
    gamma_translate_check,
    limit_parameter,
    m_value,
    mid_row,
    omega_involution,
    omega_words,
    phi1,
    phi1_inv_statistics,
    phi3p,
    phi4_inv_statistics,
    phi4p,
    phi4pp,
    phi_ar1,
    psi_rearrange,
    staircase,
    staircase_index,
    stage_top_statistic,
)
from gtsij.patterns.constructions import swap
from gtsij.triangles.arrows import SignMode, ap, ar
from gtsij.triangles.monotone import gmt, sgt

NW, NE, NWNE = Arrow.NW, Arrow.NE, Arrow.NWNE
SE, SW, SESW = Arrow.SE, Arrow.SW, Arrow.SESW


def assert_valid(phi):
    report = verify_sijection(phi)
    assert report.valid, report.summary()


def test_mid_row_values():
    k, mu, pattern = (1, 3, 5), (NW, NWNE, NE), (SW,)
    assert m_value(k, mu, pattern, 1, 0) == 2
    assert m_value(k, mu, pattern, 1, 1) == 3
    assert m_value(k, mu, pattern, 2, 0) == 4
    assert m_value(k, mu, pattern, 2, 1) == 5
    assert mid_row(k, mu, pattern, (0, 1)) == (2, 5)
    with pytest.raises(InterfaceError):
        m_value(k, mu, pattern, 3, 0)
    with pytest.raises(InterfaceError):
        m_value(k, mu, pattern, 1, 2)


def test_words():
    assert staircase(4, 1) == (1, 1, 1)
    assert staircase(4, 2) == (0, 1, 1)
    assert staircase(4, 4) == (0, 0, 0)
    assert staircase_index((0, 1, 1)) == 2
    assert staircase_index((1, 0, 1)) == 0
    assert first_descent((1, 0, 1)) == 1
    assert first_descent((0, 1, 0)) == 2
    with pytest.raises(InterfaceError):
        first_descent((0, 1))
    words = omega_words(2)
    assert words.size == 0
    assert words.sign((1, 1)) == 1
    assert words.sign((0, 1)) == -1


def test_omega_involution_swaps_mid_rows():
    k = (0, 2, 5, 7)
    for i, omega in [(1, (1, 0, 0)), (2, (0, 1, 0)), (1, (1, 0, 1))]:
        for mu in ar(4).elements():
            for pattern in ap(3).elements():
                other_mu, other_pattern = omega_involution(mu, pattern, i)
                assert omega_involution(other_mu, other_pattern, i) == (mu, pattern)
                row = mid_row(k, mu, pattern, omega)
                assert mid_row(k, other_mu, other_pattern, omega) == swap(row + (9,), i)[:-1]


def test_omega_involution_range():
    with pytest.raises(InterfaceError):
        omega_involution((NW, NW, NW), (SE,), 2)


def test_psi_rearrange():
    assert psi_rearrange(2, 1, (NW, NE), ()) == ((NW,), (SW,))
    assert psi_rearrange(2, 2, (NW, NE), ()) == ((NE,), (SE,))
    for i in (1, 2, 3):
        images = {psi_rearrange(3, i, mu, t) for mu in ar(3).elements() for t in ap(2).elements()}
        assert len(images) == 27 * 3
    with pytest.raises(InterfaceError):
        psi_rearrange(2, 3, (NW, NE), ())


def test_ar1_cancellation():
    phi = phi_ar1()
    assert phi.apply(dom((NW,))) == cod(UNIT)
    assert phi.apply(dom((NE,))) == dom((NWNE,))
    assert_valid(phi)
    with pytest.raises(InterfaceError):
        phi_ar1("af")


@pytest.mark.parametrize("mode", ["fk", "af"])
def test_pipeline_stages(mode):
    for stage in (phi1((0, 2), 4, mode), phi3p((0, 2), 4, mode)):
        assert_valid(stage)
    assert phi1((0, 2), 4, mode).codomain == phi3p((0, 2), 4, mode).domain


@pytest.mark.parametrize("mode", ["fk", "af"])
@pytest.mark.parametrize("k", [(0, 2), (2, 0), (1, 1), (0, 1, 3)])
def test_pipeline_stages_keep_top(mode, k):
    top = stage_top_statistic()
    for x in (limit_parameter(k, "+"), limit_parameter(k, "-"), k[0]):
        for stage in (phi1(k, x, mode), phi3p(k, x, mode)):
            report = check_compatibility(stage, top, top)
            assert report.compatible, report.summary()


@pytest.mark.parametrize("mode", ["fk", "af"])
def test_phi1_keeps_arrow_inversions(mode):
    on_domain, on_codomain = phi1_inv_statistics()
    for k in [(0, 2), (2, 1), (0, 1, 3)]:
        report = check_compatibility(phi1(k, limit_parameter(k, "+"), mode), on_domain, on_codomain)
        assert report.compatible, report.summary()


@pytest.mark.parametrize("k", [(0, 2), (2, 0), (1, 1), (0, 1, 3)])
def test_last_stages_keep_inversions(k):
    x = limit_parameter(k, "+")
    report = check_compatibility(phi4p(k, x), *phi4_inv_statistics(keep_arrow=False))
    assert report.compatible, report.summary()
    report = check_compatibility(phi4pp(k, x), *phi4_inv_statistics(keep_arrow=True))
    assert report.compatible, report.summary()


def test_last_stage_modes():
    assert_valid(phi4p((0, 2), 4))
    assert_valid(phi4pp((0, 2), 4))
    with pytest.raises(InterfaceError):
        phi4p((0, 2), 4, "af")
    with pytest.raises(InterfaceError):
        phi4pp((0, 2), 4, "fk")
    with pytest.raises(InterfaceError):
        phi1((3,), 4)


def test_gamma_single_row():
    phi = gamma_sij((5,))
    assert phi.apply(dom((NW,))) == cod((5, UNIT))
    assert phi.apply(dom((NE,))) == dom((NWNE,))
    assert_valid(phi)


@pytest.mark.parametrize("k", [(0, 2), (2, 0), (1, 1), (0, 1, 3)])
@pytest.mark.parametrize("direction", ["+", "-"])
def test_gamma(k, direction):
    phi = gamma_limit(k, direction)
    assert phi.domain == gmt(k)
    assert phi.codomain == sgt(k)
    assert_valid(phi)
    on_gmt, on_sgt = gamma_statistics(k)
    report = check_compatibility(phi, on_gmt, on_sgt)
    assert report.compatible, report.summary()


def test_limit_parameter():
    assert limit_parameter((0, 2), "+") == 4
    assert limit_parameter((0, 2), "-") == -2
    assert gamma_sij((0, 2)) is gamma_sij((0, 2), 4)
    with pytest.raises(InterfaceError):
        limit_parameter((0, 2), "sideways")
    with pytest.raises(InterfaceError):
        gamma_sij(())


@pytest.mark.parametrize("k", list(itertools.product(range(3), repeat=2)))
def test_gamma_stabilizes(k):
    for direction in ("+", "-"):
        report = gamma_stability_check(k, direction, (1, 3))
        assert report.valid, report.summary()


@pytest.mark.parametrize("t", [-1, 2])
def test_gamma_commutes_with_translation(t):
    for direction in ("+", "-"):
        report = gamma_translate_check((0, 2), t, direction)
        assert report.valid, report.summary()
