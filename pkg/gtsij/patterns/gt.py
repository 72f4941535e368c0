"""
Gelfand-Tsetlin signed sets and their statistics.

GT(k) is built recursively: for n >= 2 it is the disjoint union of GT(l)
over l in [k_1,k_2) x ... x [k_{n-1},k_n). An element is therefore the
pair (A, l) with A in GT(l); for n = 1 the only element is k_1 itself.
The bottom row is not stored in the element, so decoding needs k.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple

from sympy.combinatorics import Permutation

from gtsij.core.elements import Tagged
from gtsij.core.signed_set import SignedSet, box, indexed_union, restrict, singleton
from gtsij.core.statistics import Statistic
from gtsij.errors import InterfaceError

Rows = Tuple[Tuple[int, ...], ...]
RowProfile = Tuple[Tuple[int, ...], ...]


def chain(k: Sequence[int]) -> List[Tuple[int, int]]:
    """The interval bounds (k_1,k_2), ..., (k_{n-1},k_n)."""
    return [(k[i], k[i + 1]) for i in range(len(k) - 1)]


@lru_cache(maxsize=None)
def _gt(k: Tuple[int, ...]) -> SignedSet:
    if len(k) == 1:
        return singleton(k[0])
    result = indexed_union(box(chain(k)), _gt)
    logging.debug(f"GT{k}: {len(result.plus)} plus, {len(result.minus)} minus")
    return result


def gt(k: Sequence[int]) -> SignedSet:
    """The signed set GT(k)."""
    k = tuple(k)
    if not k:
        raise InterfaceError("GT needs a non-empty bottom row")
    return _gt(k)


def gt_rows(k: Sequence[int], element) -> Rows:
    """Rows of a pattern, top first, the last one being k."""
    k = tuple(k)
    if len(k) == 1:
        return (k,)
    child, l = element
    return gt_rows(l, child) + (k,)


def gt_element(rows: Sequence[Sequence[int]]):
    """Inverse of gt_rows."""
    rows = [tuple(row) for row in rows]
    if len(rows) == 1:
        return rows[0][0]
    return (gt_element(rows[:-1]), rows[-2])


def top_entry(element) -> int:
    """The top entry of a pattern element, looking through unions and indices."""
    while not isinstance(element, int):
        element = element.child if isinstance(element, Tagged) else element[0]
    return element


def eta_row(k: Sequence[int], element) -> RowProfile:
    """Each row as a sorted multiset, top first."""
    return tuple(tuple(sorted(row)) for row in gt_rows(k, element))


def eta_row_i(k: Sequence[int], element, i: int) -> Tuple[int, ...]:
    return eta_row(k, element)[i - 1]


def eta_top(element) -> int:
    return top_entry(element)


def eta_row_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_row", lambda e: eta_row(k, e))


def eta_top_statistic() -> Statistic:
    return Statistic("eta_top", top_entry)


def indexed_rows(element) -> Rows:
    """Rows of an (A, l) element of a union of GT(l), without the implicit bottom row above l."""
    child, l = element
    return gt_rows(l, child)


def gt_enumerate(k: Sequence[int]) -> List[Tuple[Rows, int]]:
    """All patterns of GT(k) with their signs, sorted by rows."""
    s = gt(k)
    return sorted((gt_rows(k, e), s.sign(e)) for e in s.support)


def gt_size_formula(k: Sequence[int]) -> int:
    """prod_{i<j} (k_j - k_i) / (j - i)"""
    value = Fraction(1)
    for i, j in combinations(range(len(k)), 2):
        value *= Fraction(k[j] - k[i], j - i)
    if value.denominator != 1:
        raise InterfaceError(f"Size formula for {tuple(k)} is not integral: {value}")
    return int(value)


def sgn_seq(k: Sequence[int]) -> int:
    """Sign of the permutation sorting k; 0 when k has repeated entries."""
    if len(set(k)) != len(k):
        return 0
    order = sorted(range(len(k)), key=lambda i: k[i])
    return Permutation(order).signature()


def is_classical_profile(profile: RowProfile) -> bool:
    """a_{i+1,j} <= a_{i,j} < a_{i+1,j+1} between consecutive rows."""
    for upper, lower in zip(profile, profile[1:]):
        if len(lower) != len(upper) + 1:
            return False
        for j, value in enumerate(upper):
            if not lower[j] <= value < lower[j + 1]:
                return False
    return True


def restricted_count(k: Sequence[int], profile: RowProfile) -> int:
    """#GT(k) restricted to eta_row = profile, by the closed form."""
    profile = tuple(tuple(row) for row in profile)
    if not profile or profile[-1] != tuple(sorted(k)):
        raise InterfaceError(f"Profile bottom {profile[-1] if profile else ()} does not match k={tuple(k)}")
    if any(len(row) != i + 1 for i, row in enumerate(profile)):
        raise InterfaceError(f"Profile rows must have lengths 1..n: {profile}")
    return sgn_seq(k) if is_classical_profile(profile) else 0


def restricted_set(k: Sequence[int], profile: RowProfile) -> SignedSet:
    """GT(k) restricted to one row profile, by enumeration."""
    return restrict(gt(k), eta_row_statistic(k), tuple(tuple(row) for row in profile))


def row_profiles(k: Sequence[int]) -> List[RowProfile]:
    """The row profiles occurring in GT(k)."""
    statistic = eta_row_statistic(k)
    return sorted({statistic(e) for e in gt(k).support})
