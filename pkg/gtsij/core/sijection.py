"""
Sijections and their structural combinators.

A sijection S <=> T is an involution on the disjoint union of the supports
of S and T that maps S+ and T- onto S- and T+. Sijections here are trees of
combinators evaluated on demand; nothing is materialized until a caller
asks for it.
"""
from abc import ABC, abstractmethod
from enum import Enum
from typing import Callable, Dict, List, NamedTuple, Sequence

from gtsij.core.elements import Element, Tagged
from gtsij.core.signed_set import (
    SignedSet,
    cartesian_product,
    disjoint_union,
    indexed_union,
    opposite,
)
from gtsij.errors import InterfaceError, InvariantViolation


class Side(Enum):
    DOM = "domain"
    COD = "codomain"

    def flip(self) -> "Side":
        return Side.COD if self is Side.DOM else Side.DOM


class SidedElement(NamedTuple):
    side: Side
    element: Element


def dom(element: Element) -> SidedElement:
    return SidedElement(Side.DOM, element)


def cod(element: Element) -> SidedElement:
    return SidedElement(Side.COD, element)


class Sijection(ABC):
    """Base class: a domain, a codomain and an evaluation rule."""

    name = "sijection"

    def __init__(self, domain: SignedSet, codomain: SignedSet):
        self.domain = domain
        self.codomain = codomain
        self._cache: Dict[SidedElement, SidedElement] = {}

    def signed_set(self, side: Side) -> SignedSet:
        return self.domain if side is Side.DOM else self.codomain

    def apply(self, item: SidedElement) -> SidedElement:
        """Evaluate the involution on one sided element."""
        result = self._cache.get(item)
        if result is not None:
            return result
        if item.element not in self.signed_set(item.side):
            raise InterfaceError(
                f"{self.name}: {item.element!r} is not in the {item.side.value} support"
            )
        result = self._evaluate(item)
        self._cache[item] = result
        return result

    def __call__(self, side: Side, element: Element) -> SidedElement:
        return self.apply(SidedElement(side, element))

    def items(self) -> List[SidedElement]:
        """All sided elements, domain first, each side in canonical order."""
        return [dom(e) for e in self.domain.elements()] + [cod(e) for e in self.codomain.elements()]

    @abstractmethod
    def _evaluate(self, item: SidedElement) -> SidedElement:
        ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}: {self.domain!r} <=> {self.codomain!r})"


class IdentitySij(Sijection):
    name = "identity"

    def __init__(self, s: SignedSet):
        super().__init__(s, s)

    def _evaluate(self, item):
        return SidedElement(item.side.flip(), item.element)


class InverseSij(Sijection):
    """The same graph read from the other side: T <=> S."""

    name = "inverse"

    def __init__(self, inner: Sijection):
        super().__init__(inner.codomain, inner.domain)
        self.inner = inner

    def _evaluate(self, item):
        result = self.inner.apply(SidedElement(item.side.flip(), item.element))
        return SidedElement(result.side.flip(), result.element)


class OppositeSij(Sijection):
    """-S <=> -T with the same graph."""

    name = "opposite"

    def __init__(self, inner: Sijection):
        super().__init__(opposite(inner.domain), opposite(inner.codomain))
        self.inner = inner

    def _evaluate(self, item):
        return self.inner.apply(item)


class ComposeSij(Sijection):
    """psi o phi for phi: S <=> T and psi: T <=> U."""

    name = "compose"

    def __init__(self, phi: Sijection, psi: Sijection):
        if phi.codomain != psi.domain:
            raise InterfaceError(
                f"Cannot compose: middle sets differ ({phi.codomain!r} vs {psi.domain!r})"
            )
        super().__init__(phi.domain, psi.codomain)
        self.phi = phi
        self.psi = psi
        self._step_bound = (
            len(phi.domain.support) + len(phi.codomain.support) + len(psi.codomain.support) + 2
        )

    def _evaluate(self, item):
        phi, psi = self.phi, self.psi
        # `current` always lies in the middle set T; `use_psi` says which map moves next.
        if item.side is Side.DOM:
            first = phi.apply(item)
            if first.side is Side.DOM:
                return first
            current, use_psi = first.element, True
        else:
            first = psi.apply(item)
            if first.side is Side.COD:
                return first
            current, use_psi = first.element, False
        for _ in range(self._step_bound):
            if use_psi:
                step = psi.apply(SidedElement(Side.DOM, current))
                if step.side is Side.COD:
                    return step
            else:
                step = phi.apply(SidedElement(Side.COD, current))
                if step.side is Side.DOM:
                    return step
            current, use_psi = step.element, not use_psi
        raise InvariantViolation(f"Composition did not terminate from {item!r}")


class ProductSij(Sijection):
    """phi_1 x ... x phi_r: the leftmost factor that stays on its side moves alone."""

    name = "product"

    def __init__(self, factors: Sequence[Sijection]):
        self.factors = list(factors)
        super().__init__(
            cartesian_product([f.domain for f in self.factors]),
            cartesian_product([f.codomain for f in self.factors]),
        )

    def _evaluate(self, item):
        side, coords = item.side, item.element
        images = []
        for j, factor in enumerate(self.factors):
            image = factor.apply(SidedElement(side, coords[j]))
            if image.side is side:
                return SidedElement(side, coords[:j] + (image.element,) + coords[j + 1:])
            images.append(image.element)
        return SidedElement(side.flip(), tuple(images))


class UnionSij(Sijection):
    """Juxtaposition of sijections, dispatched on the union tag."""

    name = "union"

    def __init__(self, parts: Sequence[Sijection]):
        self.parts = list(parts)
        super().__init__(
            disjoint_union([p.domain for p in self.parts]),
            disjoint_union([p.codomain for p in self.parts]),
        )

    def _evaluate(self, item):
        element = item.element
        if not isinstance(element, Tagged) or not 0 <= element.index < len(self.parts):
            raise InterfaceError(f"union: no part for {element!r}")
        image = self.parts[element.index].apply(SidedElement(item.side, element.child))
        return SidedElement(image.side, Tagged(element.index, image.element))


class FiberwiseSij(Sijection):
    """The union of phi_t: S_t <=> S~_t over one index set, elements (s, t)."""

    name = "fiberwise"

    def __init__(
        self,
        index: SignedSet,
        domain_family: Callable[[Element], SignedSet],
        codomain_family: Callable[[Element], SignedSet],
        fiber: Callable[[Element], Sijection],
    ):
        super().__init__(indexed_union(index, domain_family), indexed_union(index, codomain_family))
        self._fiber = fiber
        self._fibers: Dict[Element, Sijection] = {}

    def fiber(self, t: Element) -> Sijection:
        if t not in self._fibers:
            self._fibers[t] = self._fiber(t)
        return self._fibers[t]

    def _evaluate(self, item):
        s, t = item.element
        image = self.fiber(t).apply(SidedElement(item.side, s))
        return SidedElement(image.side, (image.element, t))


class IndexedUnionSij(Sijection):
    """Disjoint union with signed index along psi: T <=> T~.

    `fiber(lead)` is called for the leading sided index elements
    (domain plus and codomain minus) and must return a sijection from the
    family at `lead` to the family at psi(lead).
    """

    name = "indexed_union"

    def __init__(
        self,
        psi: Sijection,
        domain_family: Callable[[Element], SignedSet],
        codomain_family: Callable[[Element], SignedSet],
        fiber: Callable[[SidedElement], Sijection],
    ):
        super().__init__(
            indexed_union(psi.domain, domain_family),
            indexed_union(psi.codomain, codomain_family),
        )
        self.psi = psi
        self._fiber = fiber
        self._fibers: Dict[SidedElement, Sijection] = {}

    def is_lead(self, index_item: SidedElement) -> bool:
        if index_item.side is Side.DOM:
            return index_item.element in self.psi.domain.plus
        return index_item.element in self.psi.codomain.minus

    def fiber(self, lead: SidedElement) -> Sijection:
        if lead not in self._fibers:
            self._fibers[lead] = self._fiber(lead)
        return self._fibers[lead]

    def _evaluate(self, item):
        s, t = item.element
        here = SidedElement(item.side, t)
        if self.is_lead(here):
            image = self.fiber(here).apply(SidedElement(Side.DOM, s))
            if image.side is Side.DOM:
                return SidedElement(item.side, (image.element, t))
            there = self.psi.apply(here)
            return SidedElement(there.side, (image.element, there.element))
        lead = self.psi.apply(here)
        image = self.fiber(lead).apply(SidedElement(Side.COD, s))
        if image.side is Side.COD:
            return SidedElement(item.side, (image.element, t))
        return SidedElement(lead.side, (image.element, lead.element))


def identity_sij(s: SignedSet) -> Sijection:
    return IdentitySij(s)


def inverse(phi: Sijection) -> Sijection:
    if isinstance(phi, InverseSij):
        return phi.inner
    return InverseSij(phi)


def opposite_sij(phi: Sijection) -> Sijection:
    return OppositeSij(phi)


def compose(phi: Sijection, psi: Sijection) -> Sijection:
    """psi o phi (phi applied first)."""
    return ComposeSij(phi, psi)


def compose_all(*sijections: Sijection) -> Sijection:
    """Chain left to right: the first argument is applied first."""
    if not sijections:
        raise InterfaceError("compose_all needs at least one sijection")
    result = sijections[0]
    for nxt in sijections[1:]:
        result = ComposeSij(result, nxt)
    return result


def product_sij(*factors: Sijection) -> Sijection:
    if len(factors) == 1 and isinstance(factors[0], (list, tuple)):
        factors = tuple(factors[0])
    return ProductSij(factors)


def union_sij(parts: Sequence[Sijection]) -> Sijection:
    return UnionSij(parts)


def fiberwise_sij(index, family, fiber, codomain_family=None) -> Sijection:
    """indexed_union_sij with psi the identity of `index`."""
    return FiberwiseSij(index, family, codomain_family or family, fiber)


def indexed_union_sij(psi, domain_family, codomain_family, fiber) -> Sijection:
    return IndexedUnionSij(psi, domain_family, codomain_family, fiber)


def identity_fibers(domain_family, codomain_family=None) -> Callable[[SidedElement], Sijection]:
    """Fiber rule for indexed unions whose family takes equal values along psi."""
    codomain_family = codomain_family or domain_family

    def fiber(lead: SidedElement) -> Sijection:
        family = domain_family if lead.side is Side.DOM else codomain_family
        return IdentitySij(family(lead.element))
    return fiber


def fiberwise_over(index: SignedSet, fiber: Callable[[Element], Sijection]) -> Sijection:
    """Fiberwise union whose families are read off the fibers themselves."""
    fibers: Dict[Element, Sijection] = {}

    def get(t: Element) -> Sijection:
        if t not in fibers:
            fibers[t] = fiber(t)
        return fibers[t]

    return FiberwiseSij(index, lambda t: get(t).domain, lambda t: get(t).codomain, get)
