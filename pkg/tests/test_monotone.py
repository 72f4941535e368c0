import itertools
import logging

import pytest

from gtsij.catalog import SijParams, statistic_pairs
from gtsij.core.elements import Arrow
from gtsij.core.sijection import cod, dom
from gtsij.core.statistics import check_compatibility
from gtsij.core.verify import verify_sijection
from gtsij.errors import InterfaceError
from gtsij.triangles.arrows import SignMode
from gtsij.triangles.monotone import (
    eta_inv_gmt,
    eta_inv_sgt,
    eta_top_gmt,
    eta_top_sgt,
    gmt,
    gmt_element,
    gmt_parts,
    iota_mt,
    is_partially_successive,
    mt,
    mu_l,
    sgt,
    sgt_element,
    sgt_parts,
    sgt_sign,
)

NW, NE, NWNE = Arrow.NW, Arrow.NE, Arrow.NWNE
SE, SW, SESW = Arrow.SE, Arrow.SW, Arrow.SESW

ROWS = ((2,), (1, 4), (1, 3, 5))
ARROWS = ((NW,), (NWNE, NWNE), (NW, NWNE, NE))


def test_monotone_triangle_sizes():
    assert mt((1, 3, 5)).size == 7
    assert mt((1, 3, 5, 7)).size == 42
    assert not mt((1, 3, 5)).minus
    for k in [(1, 1, 3), (0, 1, 2), (3, 1)]:
        assert mt(k).is_empty()
    with pytest.raises(InterfaceError):
        mt(())


def test_generalized_triangle_example():
    k = (1, 3, 5)
    element = gmt_element(ROWS, ARROWS)
    patterns = gmt(k)
    assert element in patterns
    assert patterns.sign(element) == -1
    assert gmt_parts(k, element) == (ROWS, ARROWS)
    assert eta_inv_gmt(k, element) == 4
    assert eta_top_gmt(k, element) == 2


def test_gmt_parts_inverts_element():
    k = (0, 2)
    for element in gmt(k).elements():
        rows, arrows = gmt_parts(k, element)
        assert rows[-1] == k
        assert gmt_element(rows, arrows) == element


def test_single_row():
    assert gmt((4,)).elements() == [(NW,), (NE,), (NWNE,)]
    assert gmt((4,)).size == 1
    assert gmt((4,), "af").size == 3
    assert sgt((4,)).size == 1


@pytest.mark.parametrize("k", list(itertools.product(range(4), repeat=2)))
def test_gmt_and_sgt_sizes_agree(k):
    assert gmt(k).size == sgt(k).size


@pytest.mark.parametrize("k", [(0, 2), (1, 3, 5), (0, 1, 2)])
def test_gmt_size_counts_monotone_triangles(k):
    assert gmt(k).size == mt(k).size


def test_shifted_pattern_parts():
    k = (0, 3)
    for element in sgt(k, SignMode.AF_UNSIGNED).elements():
        rows, pattern = sgt_parts(k, element)
        assert eta_top_sgt(element) == rows[0][0]
        assert eta_inv_sgt(element) == sum(a.delta_sw for a in pattern)
    assert len(sgt(k).support) == 5


def test_shifted_pattern_sample_sign(caplog):
    k = (3, 1, 4, 1)
    pattern = (SE, SESW, SW, SESW, SW, SW)
    element = sgt_element(((2,), (3, 1), (4, 2, 1), (5, 2, 3, 1)), pattern)
    assert sgt_parts(k, element) == (((2,), (3, 1), (4, 2, 1), (5, 2, 3, 1)), pattern)
    assert sgt_sign(k, element) == -1
    assert sgt_sign(k, element, SignMode.AF_UNSIGNED) == -1
    assert eta_top_sgt(element) == 2
    with caplog.at_level(logging.WARNING):
        sgt_sign(k, element, stated=1)
    assert "stated as 1" in caplog.text


def test_mu_l():
    assert mu_l((1, 3, 5), (2, 4)) == (NW, NE, NE)
    assert mu_l((1, 3, 5), (1, 3)) == (NW, NW, NW)


def test_partially_successive():
    assert is_partially_successive((0, 1, 2))
    assert is_partially_successive((5, 0, 1, 2))
    assert not is_partially_successive((0, 1, 3))
    assert not is_partially_successive((0, 1))


def test_iota_single_row():
    phi = iota_mt((4,))
    assert phi.apply(dom(4)) == cod((NW,))
    assert phi.apply(cod((NE,))) == cod((NWNE,))
    assert verify_sijection(phi).valid


@pytest.mark.parametrize("k", [(0, 2), (1, 3, 5), (0, 1, 3), (0, 1, 2)])
def test_iota_mt(k):
    phi = iota_mt(k)
    report = verify_sijection(phi)
    assert report.valid, report.summary()
    params = SijParams(k=k)
    for on_domain, on_codomain in statistic_pairs("iota_mt", params, phi):
        compatibility = check_compatibility(phi, on_domain, on_codomain)
        assert compatibility.compatible, compatibility.summary()


def test_iota_mt_keeps_inversions_for_wide_rows():
    names = [pair[0].name for pair in statistic_pairs("iota_mt", SijParams(k=(1, 3, 5)), iota_mt((1, 3, 5)))]
    assert names == ["eta_MT", "eta_inv"]


def test_iota_mt_needs_increasing_rows():
    with pytest.raises(InterfaceError):
        iota_mt((2, 2))
