import pytest

from gtsij.core.elements import Arrow
from gtsij.errors import InterfaceError
from gtsij.triangles.arrows import (
    SignMode,
    ap,
    ap_apply,
    ap_positions,
    ar,
    c_vector,
    eta_inv_ap,
    eta_inv_ar,
    mu_apply,
    mu_bounds,
    parse_arrows,
    pattern_entries,
    pattern_from_entries,
)

NW, NE, NWNE = Arrow.NW, Arrow.NE, Arrow.NWNE
SE, SW, SESW = Arrow.SE, Arrow.SW, Arrow.SESW

PATTERN = (SE, SESW, SW, SESW, SW, SW)


def test_sign_modes():
    assert SignMode.parse("fk") is SignMode.FK_SIGNED
    assert SignMode.parse("AF_UNSIGNED") is SignMode.AF_UNSIGNED
    with pytest.raises(InterfaceError):
        SignMode.parse("signed")


def test_arrow_row_sets():
    rows = ar(2)
    assert len(rows.support) == 9
    assert rows.size == 1
    assert rows.sign((NWNE, NW)) == -1
    assert rows.sign((NWNE, NWNE)) == 1
    assert ar(2, "af").size == 9
    assert ar(0).elements() == [()]


def test_arrow_pattern_sets():
    assert ap(1).elements() == [()]
    assert len(ap(3).support) == 27
    assert ap(3).size == 1
    assert ap(3, SignMode.AF_UNSIGNED).size == 27
    with pytest.raises(InterfaceError):
        ap(0)


def test_pattern_storage_order():
    assert ap_positions(4) == ((1, 2), (2, 3), (3, 4), (1, 3), (2, 4), (1, 4))
    entries = pattern_entries(4, PATTERN)
    assert entries[(1, 3)] is SESW
    assert pattern_from_entries(4, entries) == PATTERN
    with pytest.raises(InterfaceError):
        pattern_entries(3, PATTERN)


def test_shift_vector():
    assert c_vector(4, PATTERN) == (2, 1, -1, 0)
    assert ap_apply(PATTERN, (3, 1, 4, 1)) == (5, 2, 3, 1)
    assert c_vector(1, ()) == (0,)


def test_arrow_row_action():
    assert mu_bounds((NW, NWNE, NE), (1, 3, 5)) == [(1, 2), (4, 5)]
    assert mu_apply((NW, NWNE, NE), (1, 3, 5)).elements() == [(1, 4)]
    assert mu_apply((NE, NW), (0, 0)).size == -2
    with pytest.raises(InterfaceError):
        mu_apply((NE,), (0, 0))


def test_inversion_counts():
    assert eta_inv_ar((NE, NWNE, NW)) == 2
    assert eta_inv_ap((SW, SESW, SE)) == 2
    assert eta_inv_ap(()) == 0


def test_parse_arrows():
    assert parse_arrows("nw, NWNE ne") == (NW, NWNE, NE)
    assert parse_arrows("") == ()
    with pytest.raises(InterfaceError):
        parse_arrows("NW,N")
