from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gtsij.errors import InterfaceError
from gtsij.gamma.laurent import LaurentPoly, poly_sum, variable_names

exponent = st.integers(min_value=-2, max_value=2)
natural = st.integers(min_value=0, max_value=2)
monomials = st.builds(
    lambda u, v, w, x1, x2, c: LaurentPoly.monomial(2, u, v, w, (x1, x2), c),
    natural, natural, natural, exponent, exponent, st.integers(min_value=-3, max_value=3),
)
polys = st.lists(monomials, max_size=4).map(lambda parts: poly_sum(2, parts))


def test_variable_names():
    assert variable_names(2) == ("u", "v", "w", "X1", "X2")


def test_cancellation_drops_terms():
    p = LaurentPoly.monomial(1, u=1, x=(1,))
    assert (p - p).is_zero()
    assert p - p == LaurentPoly.zero(1)
    assert 3 * p == p + p + p


def test_lines_are_sorted():
    p = LaurentPoly.monomial(1, u=1, x=(1,)) + LaurentPoly.monomial(1, v=1, x=(-1,)) + LaurentPoly.monomial(1, w=1)
    assert p.lines() == ["1 w", "1 v X1^-1", "1 u X1^1"]
    assert LaurentPoly.one(1).lines() == ["1 1"]
    assert LaurentPoly.monomial(0, u=2, coefficient=-4).lines() == ["-4 u^2"]


def test_evaluate():
    p = LaurentPoly.monomial(1, u=1, x=(1,)) + LaurentPoly.monomial(1, v=1, x=(-1,), coefficient=2)
    assert p.evaluate({}) == 3
    assert p.evaluate({"X1": 2}) == Fraction(3)
    assert p.evaluate({"u": 0, "X1": 4}) == Fraction(1, 2)
    with pytest.raises(InterfaceError):
        p.evaluate({"X1": 0})
    with pytest.raises(InterfaceError):
        p.evaluate({"y": 1})


def test_to_sympy():
    u, v, w, x1 = sympy.symbols("u v w X1")
    p = LaurentPoly.monomial(1, u=1, x=(1,)) + LaurentPoly.monomial(1, v=1, x=(-1,)) + LaurentPoly.monomial(1, w=1)
    assert sympy.simplify(p.to_sympy() - (u * x1 + v / x1 + w)) == 0


def test_bad_terms():
    with pytest.raises(InterfaceError):
        LaurentPoly.monomial(1, u=-1)
    with pytest.raises(InterfaceError):
        LaurentPoly.monomial(1, x=(1, 2))
    with pytest.raises(InterfaceError):
        LaurentPoly.one(1) + LaurentPoly.one(2)


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * LaurentPoly.one(2) == p


@given(polys, polys)
def test_evaluation_is_a_homomorphism(p, q):
    point = {"u": 2, "v": 3, "w": -1, "X1": Fraction(1, 2), "X2": 5}
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p - q).evaluate(point) == p.evaluate(point) - q.evaluate(point)
