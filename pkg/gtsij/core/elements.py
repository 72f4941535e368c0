"""
Canonical element trees.

Every member of every signed set in gtsij is built from four shapes:
integers, arrow symbols, tuples (the empty tuple is the unit) and
tagged children of a disjoint union. Elements are plain hashable Python
values so that independently built sets agree on equality.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, List, Tuple, Union

from gtsij.errors import InterfaceError, ParseError


class Arrow(Enum):
    """Decorated arrows of arrow rows (NW, NE, NWNE) and arrow patterns (SE, SW, SESW)"""
    NW = "NW"
    NE = "NE"
    NWNE = "NWNE"
    SE = "SE"
    SW = "SW"
    SESW = "SESW"

    @property
    def delta_nw(self) -> int:
        return int(self in (Arrow.NW, Arrow.NWNE))

    @property
    def delta_ne(self) -> int:
        return int(self in (Arrow.NE, Arrow.NWNE))

    @property
    def delta_se(self) -> int:
        return int(self in (Arrow.SE, Arrow.SESW))

    @property
    def delta_sw(self) -> int:
        return int(self in (Arrow.SW, Arrow.SESW))

    @property
    def is_double(self) -> bool:
        return self in (Arrow.NWNE, Arrow.SESW)

    def reverse(self) -> "Arrow":
        """The direction-reversing involution r."""
        return _REVERSED[self]

    @property
    def order(self) -> int:
        return _ARROW_ORDER[self]


_ARROW_ORDER = {arrow: position for position, arrow in enumerate(Arrow)}
_REVERSED = {
    Arrow.NW: Arrow.SE, Arrow.SE: Arrow.NW,
    Arrow.NE: Arrow.SW, Arrow.SW: Arrow.NE,
    Arrow.NWNE: Arrow.SESW, Arrow.SESW: Arrow.NWNE,
}


@dataclass(frozen=True)
class Tagged:
    """Component `index` of a disjoint union, wrapping `child`"""
    index: int
    child: Any

    def __repr__(self) -> str:
        return f"Tagged({self.index}, {self.child!r})"


UNIT: Tuple = ()

Element = Union[int, Arrow, tuple, Tagged]


def check_element(element: Any) -> Any:
    """Raise InterfaceError unless `element` is a well-formed element tree."""
    if isinstance(element, bool):
        raise InterfaceError(f"Booleans are not elements: {element!r}")
    if isinstance(element, (int, Arrow)):
        return element
    if isinstance(element, tuple):
        for child in element:
            check_element(child)
        return element
    if isinstance(element, Tagged):
        if isinstance(element.index, bool) or not isinstance(element.index, int) or element.index < 0:
            raise InterfaceError(f"Tag index must be a non-negative integer: {element!r}")
        check_element(element.child)
        return element
    raise InterfaceError(f"Not an element tree: {element!r}")


def sort_key(element: Element) -> tuple:
    """Total structural order on element trees (ints numerically, then arrows, tuples, tags)."""
    if isinstance(element, Tagged):
        return (3, element.index, sort_key(element.child))
    if isinstance(element, tuple):
        return (2, tuple(sort_key(child) for child in element))
    if isinstance(element, Arrow):
        return (1, element.order)
    return (0, element)


def serialize(element: Element) -> str:
    """Canonical s-expression text, e.g. `(tag 0 (tup 1 4))`."""
    if isinstance(element, Tagged):
        return f"(tag {element.index} {serialize(element.child)})"
    if isinstance(element, tuple):
        if not element:
            return "unit"
        return "(tup " + " ".join(serialize(child) for child in element) + ")"
    if isinstance(element, Arrow):
        return element.value
    if isinstance(element, bool) or not isinstance(element, int):
        raise InterfaceError(f"Not an element tree: {element!r}")
    return str(element)


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_element(text: str) -> Element:
    """Inverse of serialize."""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseError("Empty element text")
    element, position = _parse(tokens, 0)
    if position != len(tokens):
        raise ParseError(f"Trailing input after element: {' '.join(tokens[position:])}")
    return element


def _parse(tokens: List[str], position: int):
    if position >= len(tokens):
        raise ParseError("Unexpected end of element text")
    token = tokens[position]
    if token == ")":
        raise ParseError("Unexpected ')'")
    if token != "(":
        return _parse_atom(token), position + 1
    if position + 1 >= len(tokens):
        raise ParseError("Unexpected end after '('")
    head = tokens[position + 1]
    position += 2
    if head == "tup":
        children = []
        while position < len(tokens) and tokens[position] != ")":
            child, position = _parse(tokens, position)
            children.append(child)
        if position >= len(tokens):
            raise ParseError("Unclosed (tup ...)")
        if not children:
            raise ParseError("Empty tuple must be written as 'unit'")
        return tuple(children), position + 1
    if head == "tag":
        if position >= len(tokens):
            raise ParseError("Missing tag index")
        try:
            index = int(tokens[position])
        except ValueError:
            raise ParseError(f"Tag index must be an integer, got {tokens[position]!r}")
        if index < 0:
            raise ParseError(f"Tag index must be non-negative, got {index}")
        child, position = _parse(tokens, position + 1)
        if position >= len(tokens) or tokens[position] != ")":
            raise ParseError("Unclosed (tag ...)")
        return Tagged(index, child), position + 1
    raise ParseError(f"Unknown form '({head}'")


def _parse_atom(token: str) -> Element:
    if token == "unit":
        return UNIT
    if token in Arrow.__members__:
        return Arrow[token]
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"Unknown atom {token!r}")


def translate(shift: int, element: Element) -> Element:
    """Shift every integer atom by `shift`; arrows, tags and tuple shape are fixed."""
    if isinstance(element, Tagged):
        return Tagged(element.index, translate(shift, element.child))
    if isinstance(element, tuple):
        return tuple(translate(shift, child) for child in element)
    if isinstance(element, Arrow):
        return element
    return element + shift
