"""
Checking sijections and exporting their graphs.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from gtsij.core.elements import serialize
from gtsij.core.sijection import Side, SidedElement, Sijection
from gtsij.errors import GtsijError


@dataclass
class VerificationReport:
    """Outcome of verify_sijection"""
    valid: bool                              # All checks passed
    checked: int                             # Sided elements examined
    witness: Optional[SidedElement] = None   # First offending element
    reason: str = ""                         # What went wrong at the witness

    def summary(self) -> str:
        if self.valid:
            return f"valid ({self.checked} elements)"
        return f"invalid: {self.reason} at {describe(self.witness)}"


def describe(item: Optional[SidedElement]) -> str:
    if item is None:
        return "-"
    return f"{item.side.value}:{serialize(item.element)}"


def _from_class(phi: Sijection, item: SidedElement) -> bool:
    """S+ and T- are the elements a sijection maps from."""
    if item.side is Side.DOM:
        return item.element in phi.domain.plus
    return item.element in phi.codomain.minus


def verify_sijection(phi: Sijection) -> VerificationReport:
    """Check totality, the involution law and the sign condition on both supports."""
    checked = 0
    for item in phi.items():
        checked += 1
        try:
            image = phi.apply(item)
        except GtsijError as exc:
            return VerificationReport(False, checked, item, f"evaluation failed: {exc}")
        if image.element not in phi.signed_set(image.side):
            return VerificationReport(False, checked, item, f"image {describe(image)} outside the supports")
        if image == item:
            return VerificationReport(False, checked, item, "fixed point")
        if _from_class(phi, item) == _from_class(phi, image):
            return VerificationReport(False, checked, item, f"image {describe(image)} has the wrong sign class")
        try:
            back = phi.apply(image)
        except GtsijError as exc:
            return VerificationReport(False, checked, image, f"evaluation failed: {exc}")
        if back != item:
            return VerificationReport(False, checked, item, f"not an involution (returns to {describe(back)})")
    logging.debug(f"Verified {phi.name}: {checked} elements")
    return VerificationReport(True, checked)


def graph_edges(phi: Sijection) -> List[Tuple[SidedElement, SidedElement]]:
    """Edges {v, phi(v)} for v in S+ and T-, in canonical order."""
    return [(item, phi.apply(item)) for item in phi.items() if _from_class(phi, item)]


def _node(item: SidedElement) -> str:
    prefix = "s" if item.side is Side.DOM else "t"
    return '"' + prefix + ":" + serialize(item.element) + '"'


def to_dot(phi: Sijection, graphname: str = "sijection") -> str:
    """DOT text: one cluster per side, boxes for plus elements, circles for minus."""
    lines = [f"graph {graphname} {{"]
    for side, cluster in ((Side.DOM, "domain"), (Side.COD, "codomain")):
        s = phi.signed_set(side)
        lines.append(f"  subgraph cluster_{cluster} {{")
        lines.append(f'    label="{cluster}";')
        for element in s.elements():
            sign = "+" if element in s.plus else "-"
            shape = "box" if sign == "+" else "ellipse"
            label = f"{sign} {serialize(element)}"
            lines.append(f'    {_node(SidedElement(side, element))} [label="{label}", shape={shape}];')
        lines.append("  }")
    for source, target in graph_edges(phi):
        lines.append(f"  {_node(source)} -- {_node(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_dot(phi: Sijection, graphname: str, path: Optional[str] = None) -> str:
    """Write the DOT text to `path` (default `<graphname>.dot`) and return the path."""
    path = path or f"{graphname}.dot"
    with open(path, "w") as f:
        print(to_dot(phi, graphname), file=f, end="")
    logging.info(f"Wrote graph of {phi.name} to {path}")
    return path
