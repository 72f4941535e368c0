"""
Signed sets: pairs of disjoint finite sets of element trees.

All constructors materialize their result and refuse to build more than
the process-wide element budget. Each set remembers how it was built
(its provenance) so that the normal statistic can be derived for sets
made only of intervals, unions and products.
"""
import itertools
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from gtsij.config import BUDGET_ENV_VAR, DEFAULT_ELEMENT_BUDGET
from gtsij.core.elements import Element, Tagged, check_element, sort_key
from gtsij.errors import BudgetExceededError, InterfaceError, InvariantViolation


def _initial_budget() -> int:
    value = os.environ.get(BUDGET_ENV_VAR)
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            logging.warning(f"Ignoring non-integer {BUDGET_ENV_VAR}={value!r}")
    return DEFAULT_ELEMENT_BUDGET


_element_budget = _initial_budget()


def set_element_budget(budget: int) -> None:
    """Set the process-wide cap on support elements per signed set."""
    global _element_budget
    if isinstance(budget, bool) or int(budget) < 1:
        raise InterfaceError(f"Element budget must be >= 1, got {budget}")
    _element_budget = int(budget)


def get_element_budget() -> int:
    return _element_budget


def _check_budget(requested: int, what: str) -> None:
    if requested > _element_budget:
        logging.error(f"Refusing to materialize {what}: {requested} elements over budget {_element_budget}")
        raise BudgetExceededError(requested, _element_budget, what)


# Provenance records

@dataclass(frozen=True)
class Interval:
    a: int
    b: int


@dataclass(frozen=True)
class Union:
    parts: Tuple[Any, ...]


@dataclass(frozen=True)
class Product:
    parts: Tuple[Any, ...]


@dataclass(frozen=True)
class Opposite:
    inner: Any


@dataclass(frozen=True)
class Indexed:
    index: Any


@dataclass(frozen=True)
class SignedSet:
    """A pair of disjoint finite sets (plus part, minus part)"""
    plus: frozenset
    minus: frozenset
    provenance: Any = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        _check_budget(len(self.plus) + len(self.minus), "signed set")
        if not self.plus.isdisjoint(self.minus):
            common = sorted(self.plus & self.minus, key=sort_key)[0]
            raise InvariantViolation(f"Element {common!r} is both plus and minus")

    @property
    def size(self) -> int:
        """#S = #S+ - #S-"""
        return len(self.plus) - len(self.minus)

    @cached_property
    def support(self) -> frozenset:
        return self.plus | self.minus

    @cached_property
    def _sorted(self) -> Tuple[Element, ...]:
        return tuple(sorted(self.support, key=sort_key))

    def elements(self) -> List[Element]:
        """Support elements in canonical order."""
        return list(self._sorted)

    def signed_elements(self) -> List[Tuple[Element, int]]:
        return [(element, self.sign(element)) for element in self._sorted]

    def sign(self, element: Element) -> int:
        if element in self.plus:
            return 1
        if element in self.minus:
            return -1
        raise InterfaceError(f"Element {element!r} is not in the support")

    def __contains__(self, element) -> bool:
        return element in self.plus or element in self.minus

    def is_empty(self) -> bool:
        return not self.plus and not self.minus

    def filter(self, predicate: Callable[[Element], bool]) -> "SignedSet":
        """Keep the elements satisfying `predicate`, with their signs."""
        return SignedSet(
            frozenset(e for e in self.plus if predicate(e)),
            frozenset(e for e in self.minus if predicate(e)),
        )

    def __repr__(self) -> str:
        return f"SignedSet(+{len(self.plus)}/-{len(self.minus)})"


EMPTY = SignedSet(frozenset(), frozenset(), Union(()))


def interval(a: int, b: int) -> SignedSet:
    """The signed interval [a, b)."""
    _check_budget(abs(b - a), f"interval [{a},{b})")
    if a <= b:
        return SignedSet(frozenset(range(a, b)), frozenset(), Interval(a, b))
    return SignedSet(frozenset(), frozenset(range(b, a)), Interval(a, b))


make_interval = interval


def singleton(element: Element, sign: int = 1) -> SignedSet:
    check_element(element)
    if sign == 1:
        return SignedSet(frozenset([element]), frozenset())
    if sign == -1:
        return SignedSet(frozenset(), frozenset([element]))
    raise InterfaceError(f"Sign must be +1 or -1, got {sign}")


def from_signed(pairs: Iterable[Tuple[Element, int]]) -> SignedSet:
    """Build a signed set from (element, sign) pairs."""
    plus, minus = set(), set()
    for element, sign in pairs:
        if sign == 1:
            plus.add(element)
        elif sign == -1:
            minus.add(element)
        else:
            raise InterfaceError(f"Sign must be +1 or -1, got {sign}")
    return SignedSet(frozenset(plus), frozenset(minus))


def opposite(s: SignedSet) -> SignedSet:
    """-S = (S-, S+)"""
    return SignedSet(s.minus, s.plus, Opposite(s.provenance))


def disjoint_union(parts: Sequence[SignedSet]) -> SignedSet:
    """Part i contributes Tagged(i, e) for each of its elements."""
    parts = list(parts)
    _check_budget(sum(len(p.plus) + len(p.minus) for p in parts), "disjoint union")
    plus = frozenset(Tagged(i, e) for i, p in enumerate(parts) for e in p.plus)
    minus = frozenset(Tagged(i, e) for i, p in enumerate(parts) for e in p.minus)
    return SignedSet(plus, minus, Union(tuple(p.provenance for p in parts)))


def signed_pair(a: Element, b: Element) -> SignedSet:
    """({a}, {b}) as a disjoint union, so that a == b is representable."""
    return disjoint_union([singleton(a), singleton(b, -1)])


def cartesian_product(parts: Sequence[SignedSet]) -> SignedSet:
    """Flat tuples; the sign of a tuple is the product of coordinate signs."""
    parts = list(parts)
    total = 1
    for p in parts:
        total *= len(p.plus) + len(p.minus)
    _check_budget(total, "cartesian product")
    plus, minus = [], []
    factors = [p.signed_elements() for p in parts]
    for combo in itertools.product(*factors):
        sign = 1
        for _, s in combo:
            sign *= s
        (plus if sign == 1 else minus).append(tuple(e for e, _ in combo))
    return SignedSet(frozenset(plus), frozenset(minus), Product(tuple(p.provenance for p in parts)))


def box(bounds: Sequence[Tuple[int, int]]) -> SignedSet:
    """[a_1,b_1) x ... x [a_n,b_n)"""
    return cartesian_product([interval(a, b) for a, b in bounds])


def indexed_union(index: SignedSet, family: Callable[[Element], SignedSet]) -> SignedSet:
    """The disjoint union with signed index: elements (s_t, t) with sign sign(t) * sign(s_t)."""
    plus, minus = [], []
    count = 0
    for t in index.elements():
        part = family(t)
        count += len(part.plus) + len(part.minus)
        _check_budget(count, "indexed union")
        if t in index.plus:
            plus.extend((s, t) for s in part.plus)
            minus.extend((s, t) for s in part.minus)
        else:
            plus.extend((s, t) for s in part.minus)
            minus.extend((s, t) for s in part.plus)
    return SignedSet(frozenset(plus), frozenset(minus), Indexed(index.provenance))


def restrict(s: SignedSet, statistic: Callable[[Element], Any], value: Any) -> SignedSet:
    """The elements of S whose statistic equals `value`, keeping their signs."""
    return s.filter(lambda e: statistic(e) == value)


def size(s: SignedSet) -> int:
    return s.size
