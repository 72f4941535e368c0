"""
Monotone triangles, generalized monotone triangles and shifted GT patterns.

MT(k) reuses the GT encoding: (A, l) with A in MT(l), the first entry for
a single row. GMT(k) is built from its recursive description
    GMT(k) = disjoint union over mu in AR_n and l in mu(k) of GMT(l),
so an element is ((A, l), mu) and the top level (n = 1) is an AR_1 tuple.
SGT(k) = disjoint union over T in AP_n of GT(T(k)), elements (A, T).
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from gtsij.core.builders import explicit_sij, matching_sij
from gtsij.core.elements import UNIT, Arrow
from gtsij.core.signed_set import (
    EMPTY,
    SignedSet,
    box,
    from_signed,
    indexed_union,
    singleton,
)
from gtsij.core.sijection import (
    Side,
    SidedElement,
    Sijection,
    cod,
    compose,
    dom,
    fiberwise_over,
)
from gtsij.core.statistics import Statistic
from gtsij.errors import InterfaceError, InvariantViolation
from gtsij.patterns.gt import _gt, chain, gt_element, gt_rows, top_entry
from gtsij.triangles.asm import eta_inv_mt
from gtsij.triangles.arrows import (
    SignMode,
    ap,
    ap_apply,
    ar,
    eta_inv_ap,
    eta_inv_ar,
    mu_apply,
)

Rows = Tuple[Tuple[int, ...], ...]
ArrowRows = Tuple[Tuple[Arrow, ...], ...]


def is_strictly_increasing(k: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(k, k[1:]))


def is_admissible(l: Sequence[int]) -> bool:
    """A non-bottom row of a monotone triangle: a_j < a_{j+1} - 1."""
    return all(a < b - 1 for a, b in zip(l, l[1:]))


# Monotone triangles

@lru_cache(maxsize=None)
def _mt(k: Tuple[int, ...]) -> SignedSet:
    if len(k) == 1:
        return singleton(k[0])
    rows = box(chain(k)).filter(is_admissible)
    return indexed_union(rows, _mt)


def mt(k: Sequence[int]) -> SignedSet:
    """MT(k): all plus, empty unless k is strictly increasing."""
    k = tuple(k)
    if not k:
        raise InterfaceError("MT needs a non-empty bottom row")
    if not is_strictly_increasing(k):
        return EMPTY
    return _mt(k)


def eta_mt(k: Sequence[int], element) -> Rows:
    """Rows of a monotone triangle, top first."""
    return gt_rows(k, element)


def eta_inv_mt_element(k: Sequence[int], element) -> int:
    return eta_inv_mt(gt_rows(k, element))


# Generalized monotone triangles

@lru_cache(maxsize=None)
def _gmt(k: Tuple[int, ...], mode: SignMode) -> SignedSet:
    if len(k) == 1:
        return ar(1, mode)
    result = indexed_union(ar(len(k), mode), lambda mu: indexed_union(mu_apply(mu, k), lambda l: _gmt(l, mode)))
    logging.debug(f"GMT{k} ({mode.value}): {len(result.plus)} plus, {len(result.minus)} minus")
    return result


def gmt(k: Sequence[int], mode: SignMode = SignMode.FK_SIGNED) -> SignedSet:
    """The signed set GMT(k) in the given sign mode."""
    k = tuple(k)
    if not k:
        raise InterfaceError("GMT needs a non-empty bottom row")
    return _gmt(k, SignMode.parse(mode))


def gmt_parts(k: Sequence[int], element) -> Tuple[Rows, ArrowRows]:
    """(rows, arrow rows), both top first; the last row is k."""
    k = tuple(k)
    if len(k) == 1:
        return (k,), (tuple(element),)
    (child, l), mu = element
    rows, arrows = gmt_parts(l, child)
    return rows + (k,), arrows + (tuple(mu),)


def gmt_element(rows: Sequence[Sequence[int]], arrows: Sequence[Sequence[Arrow]]):
    """Inverse of gmt_parts."""
    rows = [tuple(row) for row in rows]
    arrows = [tuple(a) for a in arrows]
    if len(rows) != len(arrows):
        raise InterfaceError(f"{len(rows)} rows need as many arrow rows, got {len(arrows)}")
    if len(rows) == 1:
        return arrows[0]
    return ((gmt_element(rows[:-1], arrows[:-1]), rows[-2]), arrows[-1])


def eta_inv_gmt(k: Sequence[int], element) -> int:
    """Number of NE and NWNE over all arrow rows."""
    return sum(eta_inv_ar(mu) for mu in gmt_parts(k, element)[1])


def eta_top_gmt(k: Sequence[int], element) -> int:
    return gmt_parts(k, element)[0][0][0]


def eta_mt_gmt(k: Sequence[int], element) -> Rows:
    return gmt_parts(k, element)[0]


# Shifted GT patterns

@lru_cache(maxsize=None)
def _sgt(k: Tuple[int, ...], mode: SignMode) -> SignedSet:
    return indexed_union(ap(len(k), mode), lambda t: _gt(ap_apply(t, k)))


def sgt(k: Sequence[int], mode: SignMode = SignMode.FK_SIGNED) -> SignedSet:
    """SGT(k): pairs (A, T) with A in GT(T(k))."""
    k = tuple(k)
    if not k:
        raise InterfaceError("SGT needs a non-empty bottom row")
    return _sgt(k, SignMode.parse(mode))


def sgt_parts(k: Sequence[int], element) -> Tuple[Rows, Tuple[Arrow, ...]]:
    """(rows of A top first, T); the last row of A is T(k)."""
    a, t = element
    return gt_rows(ap_apply(t, k), a), tuple(t)


def sgt_element(rows: Sequence[Sequence[int]], pattern: Sequence[Arrow]):
    """Inverse of sgt_parts."""
    return gt_element(rows), tuple(pattern)


def sgt_sign(k: Sequence[int], element, mode: SignMode = SignMode.FK_SIGNED, stated: Optional[int] = None) -> int:
    """Sign of (A, T) in SGT(k): the sign of T in AP_n times the sign of A in GT(T(k)).

    When a `stated` sign is given and disagrees, the mismatch is logged.
    """
    k = tuple(k)
    mode = SignMode.parse(mode)
    a, t = element
    sign = ap(len(k), mode).sign(tuple(t)) * _gt(ap_apply(t, k)).sign(a)
    if stated is not None and stated != sign:
        logging.warning(f"SGT{k} element with T={tuple(a.name for a in t)} has sign {sign}, stated as {stated}")
    return sign


def eta_inv_sgt(element) -> int:
    return eta_inv_ap(element[1])


def eta_top_sgt(element) -> int:
    return top_entry(element[0])


# Statistics for compatibility checks

def eta_mt_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_MT", lambda e: eta_mt(k, e))


def eta_mt_gmt_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_MT", lambda e: eta_mt_gmt(k, e))


def eta_inv_mt_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_inv", lambda e: eta_inv_mt_element(k, e))


def eta_inv_gmt_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_inv", lambda e: eta_inv_gmt(k, e))


def eta_top_gmt_statistic(k: Sequence[int]) -> Statistic:
    k = tuple(k)
    return Statistic("eta_top", lambda e: eta_top_gmt(k, e))


def eta_inv_sgt_statistic() -> Statistic:
    return Statistic("eta_inv", eta_inv_sgt)


def eta_top_sgt_statistic() -> Statistic:
    return Statistic("eta_top", eta_top_sgt)


# The sijection MT(k) <=> GMT(k)

def mu_l(k: Sequence[int], l: Sequence[int]) -> Tuple[Arrow, ...]:
    """(mu_l)_i = NE when i >= 2 and k_i = l_{i-1} + 1, NW otherwise."""
    return tuple(
        Arrow.NE if i >= 1 and k[i] == l[i - 1] + 1 else Arrow.NW
        for i in range(len(k))
    )


def arrow_rows_through(k: Sequence[int], mode: SignMode = SignMode.FK_SIGNED) -> Dict[Tuple[int, ...], SignedSet]:
    """l -> M_l, the arrow rows mu with l in mu(k), signed by sign(mu) * sign(l in mu(k))."""
    k = tuple(k)
    rows = ar(len(k), mode)
    found: Dict[Tuple[int, ...], List[Tuple[Tuple[Arrow, ...], int]]] = {}
    for mu in rows.elements():
        image = mu_apply(mu, k)
        for l in image.elements():
            found.setdefault(l, []).append((mu, rows.sign(mu) * image.sign(l)))
    return {l: from_signed(pairs) for l, pairs in found.items()}


def brute_force_multiplicity(k: Sequence[int], l: Sequence[int], mode: SignMode = SignMode.FK_SIGNED) -> int:
    """#M_{k,l} by enumeration over AR_n."""
    k, l = tuple(k), tuple(l)
    if len(l) != len(k) - 1:
        raise InterfaceError(f"l must have {len(k) - 1} entries, got {l}")
    rows = ar(len(k), mode)
    total = 0
    for mu, sign in rows.signed_elements():
        image = mu_apply(mu, k)
        if l in image:
            total += sign * image.sign(l)
    return total


def is_partially_successive(m: Sequence[int]) -> bool:
    """Some m_i = m_{i+1} - 1 = m_{i+2} - 2."""
    return any(m[i] + 1 == m[i + 1] and m[i] + 2 == m[i + 2] for i in range(len(m) - 2))


def _toggle(arrow: Arrow) -> Optional[Arrow]:
    if arrow is Arrow.NE:
        return Arrow.NWNE
    if arrow is Arrow.NWNE:
        return Arrow.NE
    return None


def _toggle_pairs(target: SignedSet, base: Tuple[Arrow, ...]) -> Optional[List[Tuple[SidedElement, SidedElement]]]:
    """Pair every mu != base by adding or removing NW at the first position where it differs from base.

    Returns None when the rule does not close up on `target`.
    """
    pairs = []
    for mu in target.elements():
        if mu == base:
            continue
        i = next(j for j in range(len(mu)) if mu[j] != base[j])
        if base[i] is not Arrow.NW:
            return None
        other = _toggle(mu[i])
        partner = mu[:i] + (other,) + mu[i + 1:]
        if partner not in target or target.sign(partner) == target.sign(mu):
            return None
        if target.sign(mu) == 1:
            pairs.append((cod(partner), cod(mu)))
    return pairs


def unit_to_arrow_rows(k: Sequence[int], l: Sequence[int], target: SignedSet) -> Sijection:
    """The sijection E_l <=> M_l, E_l a point when l can sit above k in a monotone triangle."""
    k, l = tuple(k), tuple(l)
    source = singleton(UNIT) if is_admissible(l) and l in box(chain(k)) else EMPTY
    base = mu_l(k, l)
    pairs = _toggle_pairs(target, base)
    if pairs is not None and not source.is_empty() and base in target.plus:
        return explicit_sij(source, target, [(dom(UNIT), cod(base))] + pairs, check=False)
    if pairs is not None and source.is_empty() and base not in target:
        return explicit_sij(source, target, pairs, check=False)
    if source.size != target.size:
        raise InvariantViolation(f"M_l for k={k}, l={l} has size {target.size}, expected {source.size}")
    logging.debug(f"Arrow rows through l={l} over k={k}: toggle rule does not close, using a matching")
    return matching_sij(source, target)


class XiSij(Sijection):
    """MT(k) <=> disjoint union over mu in AR_n and l in mu(k) of MT(l).

    The second row l is kept; the arrow row is chosen by unit_to_arrow_rows(k, l).
    """

    name = "xi"

    def __init__(self, k: Tuple[int, ...]):
        self.k = k
        self.through = arrow_rows_through(k)
        super().__init__(
            _mt(k),
            indexed_union(ar(len(k)), lambda mu: indexed_union(mu_apply(mu, k), mt)),
        )
        self._fibers: Dict[Tuple[int, ...], Sijection] = {}

    def fiber(self, l: Tuple[int, ...]) -> Sijection:
        if l not in self._fibers:
            self._fibers[l] = unit_to_arrow_rows(self.k, l, self.through.get(l, EMPTY))
        return self._fibers[l]

    def _evaluate(self, item):
        if item.side is Side.DOM:
            a, l = item.element
            image = self.fiber(l).apply(dom(UNIT))
            return cod(((a, l), image.element))
        (a, l), mu = item.element
        image = self.fiber(l).apply(cod(mu))
        if image.side is Side.DOM:
            return dom((a, l))
        return cod(((a, l), image.element))


def _vanishing_gmt(l: Tuple[int, ...]) -> Sijection:
    """(empty) <=> GMT(l) for a row with repeated entries."""
    target = gmt(l)
    if target.size != 0:
        raise InvariantViolation(f"GMT{l} has size {target.size}; expected 0 for a repeated row")
    return matching_sij(EMPTY, target)


@lru_cache(maxsize=None)
def _iota_mt(k: Tuple[int, ...]) -> Sijection:
    if len(k) == 1:
        pairs = [
            (dom(k[0]), cod((Arrow.NW,))),
            (cod((Arrow.NE,)), cod((Arrow.NWNE,))),
        ]
        return explicit_sij(_mt(k), gmt(k), pairs, check=False)

    def lower(l):
        return _iota_mt(l) if is_strictly_increasing(l) else _vanishing_gmt(l)

    lift = fiberwise_over(ar(len(k)), lambda mu: fiberwise_over(mu_apply(mu, k), lower))
    return compose(XiSij(k), lift)


def iota_mt(k: Sequence[int]) -> Sijection:
    """iota_MT(k): MT(k) <=> GMT(k) for strictly increasing k, compatible with eta_MT."""
    k = tuple(k)
    if not k or not is_strictly_increasing(k):
        raise InterfaceError(f"iota_MT needs a strictly increasing bottom row, got {k}")
    return _iota_mt(k)
