"""
Statistics on signed sets and compatibility checks.

A statistic is a total function on a support. Values are ints, tuples of
ints, or tuples of those; multisets are sorted tuples.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from gtsij.core.elements import Element
from gtsij.core.signed_set import Indexed, Interval, Opposite, Product, SignedSet, Union
from gtsij.core.sijection import Side, SidedElement, Sijection
from gtsij.core.verify import describe
from gtsij.errors import GtsijError, InterfaceError


@dataclass(frozen=True)
class Statistic:
    """A named function on support elements"""
    name: str
    fn: Callable[[Element], Any]

    def __call__(self, element: Element) -> Any:
        return self.fn(element)


@dataclass
class CompatibilityReport:
    """Outcome of check_compatibility"""
    compatible: bool
    statistic: str
    checked: int
    witness: Optional[SidedElement] = None
    reason: str = ""

    def summary(self) -> str:
        if self.compatible:
            return f"compatible with {self.statistic} ({self.checked} elements)"
        return f"incompatible with {self.statistic}: {self.reason} at {describe(self.witness)}"


def check_compatibility(
    phi: Sijection,
    statistic: Statistic,
    codomain_statistic: Optional[Statistic] = None,
) -> CompatibilityReport:
    """Check eta(phi(s)) == eta(s) for every s in both supports.

    Args:
        phi (Sijection): The sijection to check.
        statistic (Statistic): Statistic on the domain (and the codomain unless given).
        codomain_statistic (Statistic, optional): Statistic on the codomain.

    Returns:
        CompatibilityReport: First witness on failure.
    """
    on_codomain = codomain_statistic or statistic
    checked = 0

    def value(item: SidedElement):
        return (statistic if item.side is Side.DOM else on_codomain)(item.element)

    for item in phi.items():
        checked += 1
        try:
            before = value(item)
            after = value(phi.apply(item))
        except GtsijError as exc:
            return CompatibilityReport(False, statistic.name, checked, item, f"evaluation failed: {exc}")
        if before != after:
            return CompatibilityReport(
                False, statistic.name, checked, item, f"value {before!r} becomes {after!r}"
            )
    logging.debug(f"{phi.name} is compatible with {statistic.name} on {checked} elements")
    return CompatibilityReport(True, statistic.name, checked)


def constant_statistic(value: Any) -> Statistic:
    return Statistic(f"const({value!r})", lambda element: value)


def pair_statistic(first: Statistic, second: Statistic) -> Statistic:
    """Both statistics evaluated on the same element."""
    return Statistic(f"({first.name},{second.name})", lambda e: (first(e), second(e)))


def union_statistic(*parts: Statistic) -> Statistic:
    """eta_1 + eta_2 + ...: dispatch on the union tag."""
    def fn(element):
        return parts[element.index](element.child)
    return Statistic("+".join(p.name for p in parts), fn)


def product_statistic(*factors: Statistic) -> Statistic:
    """eta_1 x eta_2 x ...: the tuple of coordinate values."""
    def fn(element):
        return tuple(f(x) for f, x in zip(factors, element))
    return Statistic("x".join(f.name for f in factors), fn)


def indexed_statistic(name: str, fiber_statistic: Callable[[Element], Statistic]) -> Statistic:
    """On (s, t) elements, the statistic chosen by t evaluated at s."""
    return Statistic(name, lambda e: fiber_statistic(e[1])(e[0]))


def _normal_fn(provenance) -> Callable[[Element], Any]:
    if isinstance(provenance, Interval):
        return lambda e: e
    if isinstance(provenance, Opposite):
        return _normal_fn(provenance.inner)
    if isinstance(provenance, Union):
        parts = [_normal_fn(p) for p in provenance.parts]
        return lambda e: parts[e.index](e.child)
    if isinstance(provenance, Product):
        factors = [_normal_fn(p) for p in provenance.parts]
        return lambda e: tuple(f(x) for f, x in zip(factors, e))
    raise InterfaceError(f"Not a normal signed set (built from {type(provenance).__name__})")


def normal_statistic(s: SignedSet) -> Statistic:
    """The normal statistic of a set built from intervals by unions and products."""
    if isinstance(s.provenance, Indexed) or s.provenance is None:
        raise InterfaceError("Normal statistics need a set built from intervals, unions and products")
    return Statistic("normal", _normal_fn(s.provenance))
