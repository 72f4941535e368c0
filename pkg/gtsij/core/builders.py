"""
Sijections built from explicit data rather than from other sijections:
relabelings, edge lists, matchings, cancellations and interval splits.
"""
import itertools
import random
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from gtsij.core.elements import Element, Tagged
from gtsij.core.signed_set import (
    EMPTY,
    SignedSet,
    box,
    disjoint_union,
    indexed_union,
    interval,
    opposite,
)
from gtsij.core.sijection import (
    ComposeSij,
    IdentitySij,
    ProductSij,
    Side,
    SidedElement,
    Sijection,
)
from gtsij.errors import InterfaceError, InvariantViolation


class RelabelSij(Sijection):
    """A sign-preserving bijection of supports, read as a sijection."""

    name = "relabel"

    def __init__(self, domain: SignedSet, codomain: SignedSet, forward: Callable[[Element], Element]):
        super().__init__(domain, codomain)
        self._forward: Dict[Element, Element] = {}
        self._backward: Dict[Element, Element] = {}
        for element in domain.support:
            image = forward(element)
            if image not in codomain:
                raise InterfaceError(f"relabel: image {image!r} of {element!r} is not in the codomain")
            if domain.sign(element) != codomain.sign(image):
                raise InterfaceError(f"relabel: {element!r} -> {image!r} changes sign")
            if image in self._backward:
                raise InterfaceError(
                    f"relabel: {element!r} and {self._backward[image]!r} both map to {image!r}"
                )
            self._forward[element] = image
            self._backward[image] = element
        if len(self._backward) != len(codomain.support):
            raise InterfaceError(
                f"relabel: {len(codomain.support) - len(self._backward)} codomain elements are not hit"
            )

    def _evaluate(self, item):
        if item.side is Side.DOM:
            return SidedElement(Side.COD, self._forward[item.element])
        return SidedElement(Side.DOM, self._backward[item.element])


class ExplicitSij(Sijection):
    """A sijection listed edge by edge; each pair is stored in both directions."""

    name = "explicit"

    def __init__(self, domain: SignedSet, codomain: SignedSet, pairs: Iterable[Tuple[SidedElement, SidedElement]]):
        super().__init__(domain, codomain)
        self._table: Dict[SidedElement, SidedElement] = {}
        for left, right in pairs:
            self._table[left] = right
            self._table[right] = left

    def _evaluate(self, item):
        try:
            return self._table[item]
        except KeyError:
            raise InterfaceError(f"explicit: no edge at {item!r}")


def relabel_sij(domain: SignedSet, codomain: SignedSet, forward: Callable[[Element], Element]) -> Sijection:
    return RelabelSij(domain, codomain, forward)


def explicit_sij(domain: SignedSet, codomain: SignedSet, pairs, check: bool = True) -> Sijection:
    """Build a sijection from its edges; with `check` the result is verified eagerly."""
    sij = ExplicitSij(domain, codomain, pairs)
    if check:
        from gtsij.core.verify import verify_sijection
        report = verify_sijection(sij)
        if not report.valid:
            raise InterfaceError(f"explicit: not a sijection ({report.reason} at {report.witness!r})")
    return sij


def _positive_class(item: SidedElement, domain: SignedSet, codomain: SignedSet) -> bool:
    """True for S+ and T- (the side a sijection maps from)."""
    if item.side is Side.DOM:
        return item.element in domain.plus
    return item.element in codomain.minus


def _sources_and_targets(domain: SignedSet, codomain: SignedSet) -> Tuple[List[SidedElement], List[SidedElement]]:
    if domain.size != codomain.size:
        raise InterfaceError(f"matching: sizes differ ({domain.size} vs {codomain.size})")
    sources = [SidedElement(Side.DOM, e) for e in domain.elements() if e in domain.plus]
    sources += [SidedElement(Side.COD, e) for e in codomain.elements() if e in codomain.minus]
    targets = [SidedElement(Side.DOM, e) for e in domain.elements() if e in domain.minus]
    targets += [SidedElement(Side.COD, e) for e in codomain.elements() if e in codomain.plus]
    return sources, targets


def matching_sij(domain: SignedSet, codomain: SignedSet) -> Sijection:
    """Pair S+ then T- with S- then T+ in canonical order; needs #S == #T."""
    sources, targets = _sources_and_targets(domain, codomain)
    return ExplicitSij(domain, codomain, zip(sources, targets))


def shuffled_matching(domain: SignedSet, codomain: SignedSet, rng: random.Random) -> Sijection:
    """A random sijection: matching_sij with both lists shuffled."""
    sources, targets = _sources_and_targets(domain, codomain)
    rng.shuffle(sources)
    rng.shuffle(targets)
    return ExplicitSij(domain, codomain, zip(sources, targets))


class CancelOppositeSij(Sijection):
    """S + (-T) <=> (empty) from phi: S <=> T."""

    name = "cancel_opposite"

    def __init__(self, phi: Sijection):
        super().__init__(disjoint_union([phi.domain, opposite(phi.codomain)]), EMPTY)
        self.phi = phi

    def _evaluate(self, item):
        tagged = item.element
        if tagged.index == 0:
            image = self.phi.apply(SidedElement(Side.DOM, tagged.child))
        else:
            image = self.phi.apply(SidedElement(Side.COD, tagged.child))
        return SidedElement(Side.DOM, Tagged(0 if image.side is Side.DOM else 1, image.element))


def cancel_opposite(phi: Sijection) -> Sijection:
    return CancelOppositeSij(phi)


class IntervalSplitSij(Sijection):
    """[a,b) <=> [a,c) + [c,b), matching equal values.

    For each value v the occurrences in S+ and T- (domain first, then the
    codomain parts in tag order) are paired positionally with the
    occurrences in S- and T+ listed the same way.
    """

    name = "interval_split"

    def __init__(self, a: int, b: int, c: int):
        self.a, self.b, self.c = a, b, c
        self.parts = ((a, c), (c, b))
        super().__init__(interval(a, b), disjoint_union([interval(a, c), interval(c, b)]))

    @staticmethod
    def _inside(v: int, lo: int, hi: int, sign: int) -> bool:
        if sign == 1:
            return lo <= v < hi
        return hi <= v < lo

    def _occurrences(self, v: int, positive: bool) -> List[SidedElement]:
        # positive: domain plus and codomain minus
        sign = 1 if positive else -1
        found = []
        if self._inside(v, self.a, self.b, sign):
            found.append(SidedElement(Side.DOM, v))
        for index, (lo, hi) in enumerate(self.parts):
            if self._inside(v, lo, hi, -sign):
                found.append(SidedElement(Side.COD, Tagged(index, v)))
        return found

    def _evaluate(self, item):
        v = item.element if item.side is Side.DOM else item.element.child
        positive = _positive_class(item, self.domain, self.codomain)
        mine = self._occurrences(v, positive)
        other = self._occurrences(v, not positive)
        if len(mine) != len(other):
            raise InvariantViolation(f"interval_split({self.a},{self.b},{self.c}): unbalanced value {v}")
        return other[mine.index(item)]


def interval_split(a: int, b: int, c: int) -> Sijection:
    return IntervalSplitSij(a, b, c)


class ProductSplitSij(Sijection):
    """prod [a_j,b_j) <=> prod(.. [a_p,c) ..) + prod(.. [c,b_p) ..): one coordinate split."""

    name = "product_split"

    def __init__(self, bounds: Sequence[Tuple[int, int]], position: int, c: int):
        bounds = [tuple(pair) for pair in bounds]
        if not 0 <= position < len(bounds):
            raise InterfaceError(f"product_split: position {position} outside {len(bounds)} factors")
        self.position = position
        self.split = IntervalSplitSij(bounds[position][0], bounds[position][1], c)
        left = bounds[:position] + [(bounds[position][0], c)] + bounds[position + 1:]
        right = bounds[:position] + [(c, bounds[position][1])] + bounds[position + 1:]
        super().__init__(box(bounds), disjoint_union([box(left), box(right)]))

    def _evaluate(self, item):
        p = self.position
        if item.side is Side.DOM:
            coords = item.element
            image = self.split.apply(SidedElement(Side.DOM, coords[p]))
        else:
            coords = item.element.child
            image = self.split.apply(SidedElement(Side.COD, Tagged(item.element.index, coords[p])))
        if image.side is Side.DOM:
            return SidedElement(Side.DOM, coords[:p] + (image.element,) + coords[p + 1:])
        value = image.element
        return SidedElement(
            Side.COD, Tagged(value.index, coords[:p] + (value.child,) + coords[p + 1:])
        )


def product_split(bounds: Sequence[Tuple[int, int]], position: int, c: int) -> Sijection:
    return ProductSplitSij(bounds, position, c)


def act_on(factors: Sequence[SignedSet], position: int, phi: Sijection) -> Sijection:
    """id x ... x phi x ... x id with phi at `position`."""
    parts = [IdentitySij(f) for f in factors]
    parts[position] = phi
    return ProductSij(parts)


class PairCancelSij(Sijection):
    """The union of family(t) over `index`, cancelled against (empty).

    `partner` is a sign-preserving involution on the index support and
    pair_sij(t) a sijection family(t) <=> -family(partner(t)) given for
    the leading member of each pair. Fixed points must carry empty fibers.
    """

    name = "pair_cancel"

    def __init__(
        self,
        index: SignedSet,
        family: Callable[[Element], SignedSet],
        partner: Callable[[Element], Element],
        pair_sij: Callable[[Element], Sijection],
        leads: Callable[[Element], bool],
    ):
        super().__init__(indexed_union(index, family), EMPTY)
        self.index = index
        self.partner = partner
        self.leads = leads
        self._pair_sij = pair_sij
        self._pairs: Dict[Element, Sijection] = {}

    def pair(self, t: Element) -> Sijection:
        if t not in self._pairs:
            self._pairs[t] = self._pair_sij(t)
        return self._pairs[t]

    def _evaluate(self, item):
        s, t = item.element
        u = self.partner(t)
        if u == t:
            raise InvariantViolation(f"pair_cancel: fixed index {t!r} has a nonempty fiber")
        if u not in self.index or self.index.sign(u) != self.index.sign(t):
            raise InvariantViolation(f"pair_cancel: partner {u!r} of {t!r} breaks the index signs")
        if self.leads(t) == self.leads(u):
            raise InvariantViolation(f"pair_cancel: exactly one of {t!r} and {u!r} must lead")
        if self.leads(t):
            image = self.pair(t).apply(SidedElement(Side.DOM, s))
            owner = t if image.side is Side.DOM else u
        else:
            image = self.pair(u).apply(SidedElement(Side.COD, s))
            owner = t if image.side is Side.COD else u
        return SidedElement(Side.DOM, (image.element, owner))


def pair_cancel(index, family, partner, pair_sij, leads) -> Sijection:
    return PairCancelSij(index, family, partner, pair_sij, leads)


def multi_split(bounds: Sequence[Tuple[int, int]], splits: Sequence[Tuple[int, int]]) -> Tuple[Sijection, List[List[Tuple[int, int]]]]:
    """Split several coordinates of a box at once.

    `splits` lists (position, c) pairs in increasing position. The codomain
    is the disjoint union of the resulting boxes, ordered lexicographically
    by the tags of the split coordinates. Returns the sijection and the
    bounds of each term.
    """
    bounds = [tuple(pair) for pair in bounds]
    cuts = dict(splits)
    positions = [p for p, _ in splits]
    factors = []
    for p, (a, b) in enumerate(bounds):
        factors.append(IntervalSplitSij(a, b, cuts[p]) if p in cuts else IdentitySij(interval(a, b)))
    spread = ProductSij(factors)
    terms = []
    for combo in itertools.product((0, 1), repeat=len(positions)):
        term = list(bounds)
        for p, tag in zip(positions, combo):
            a, b = bounds[p]
            term[p] = (a, cuts[p]) if tag == 0 else (cuts[p], b)
        terms.append(term)

    def gather(element):
        index = 0
        for p in positions:
            index = 2 * index + element[p].index
        return Tagged(index, tuple(x.child if p in cuts else x for p, x in enumerate(element)))

    gathered = RelabelSij(spread.codomain, disjoint_union([box(term) for term in terms]), gather)
    return ComposeSij(spread, gathered), terms
