import pytest
from hypothesis import given, strategies as st

from gtsij.core.elements import Tagged
from gtsij.core.signed_set import (
    EMPTY,
    SignedSet,
    box,
    cartesian_product,
    disjoint_union,
    from_signed,
    indexed_union,
    interval,
    make_interval,
    opposite,
    restrict,
    set_element_budget,
    signed_pair,
    singleton,
)
from gtsij.errors import BudgetExceededError, InterfaceError, InvariantViolation
from gtsij.patterns.gt import gt

small = st.integers(-4, 4)


def test_interval_signs():
    up = interval(2, 5)
    assert up.plus == frozenset({2, 3, 4}) and not up.minus and up.size == 3
    down = interval(5, 2)
    assert down.minus == frozenset({2, 3, 4}) and not down.plus and down.size == -3
    assert make_interval(5, 2) == opposite(up)
    assert interval(5, 5).is_empty()


def test_opposite():
    assert opposite(singleton(7)) == singleton(7, -1)
    assert opposite(interval(2, 5)) == interval(5, 2)
    assert opposite(EMPTY).is_empty()


def test_disjoint_union_tags():
    s = disjoint_union([singleton(1), singleton(2, -1)])
    assert s.plus == frozenset({Tagged(0, 1)})
    assert s.minus == frozenset({Tagged(1, 2)})
    assert disjoint_union([]).is_empty()
    assert disjoint_union([interval(1, 3), interval(3, 2)]).size == 1


def test_cartesian_product_signs():
    s = cartesian_product([signed_pair(1, 2), singleton(3)])
    assert s.plus == frozenset({(Tagged(0, 1), 3)})
    assert s.minus == frozenset({(Tagged(1, 2), 3)})
    assert cartesian_product([interval(0, 2), EMPTY]).is_empty()
    both = cartesian_product([interval(3, 1), interval(3, 1)])
    assert both.size == 4 and len(both.plus) == 4


def test_indexed_union_signs():
    def family(t):
        return from_signed([(10, 1), (11, -1)])

    up = indexed_union(singleton(0), family)
    assert up.plus == frozenset({(10, 0)}) and up.minus == frozenset({(11, 0)})
    down = indexed_union(singleton(0, -1), family)
    assert down.plus == frozenset({(11, 0)}) and down.minus == frozenset({(10, 0)})


def test_indexed_union_unfolds_gt():
    s = indexed_union(box([(1, 3)]), lambda l: singleton(l[0]))
    assert s == gt((1, 3))
    assert s.plus == frozenset({(1, (1,)), (2, (2,))})


def test_signed_pair_allows_equal_ends():
    s = signed_pair(4, 4)
    assert s.size == 0 and len(s.support) == 2


def test_restrict_keeps_signs():
    s = gt((1, 3))
    top = restrict(s, lambda e: e[0], 2)
    assert top.plus == frozenset({(2, (2,))}) and not top.minus
    assert restrict(s, lambda e: e[0], 9).is_empty()
    assert restrict(s, lambda e: 0, 0) == s


def test_sign_lookup():
    s = interval(3, 1)
    assert s.sign(2) == -1
    assert 1 in s and 3 not in s
    with pytest.raises(InterfaceError):
        s.sign(3)


def test_elements_are_sorted():
    s = from_signed([(3, 1), (-1, -1), (0, 1)])
    assert s.elements() == [-1, 0, 3]
    assert s.signed_elements() == [(-1, -1), (0, 1), (3, 1)]


def test_overlapping_parts_rejected():
    with pytest.raises(InvariantViolation):
        SignedSet(frozenset({1}), frozenset({1}))


def test_bad_sign_rejected():
    with pytest.raises(InterfaceError):
        from_signed([(1, 0)])
    with pytest.raises(InterfaceError):
        singleton(1, 2)


def test_budget_is_enforced():
    set_element_budget(5)
    with pytest.raises(BudgetExceededError) as info:
        interval(0, 10)
    assert info.value.requested == 10 and info.value.budget == 5
    with pytest.raises(BudgetExceededError):
        box([(0, 3), (0, 3)])
    with pytest.raises(InterfaceError):
        set_element_budget(0)


@given(small, small)
def test_interval_size(a, b):
    assert interval(a, b).size == b - a


@given(small, small, small, small)
def test_product_size_multiplies(a, b, c, d):
    assert box([(a, b), (c, d)]).size == (b - a) * (d - c)


@given(small, small, small, small)
def test_union_size_adds(a, b, c, d):
    assert disjoint_union([interval(a, b), interval(c, d)]).size == (b - a) + (d - c)
