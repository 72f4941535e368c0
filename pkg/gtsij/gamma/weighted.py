"""
Weighted enumeration with unsigned double arrows (mode af).

A GMT gets weight u^#NE v^#NW w^#NWNE times prod_i X_i^(row sum difference
+ #NE - #NW in arrow row i). The sijection GMT(k) <=> AR_n x SGT(k) keeps
the arrows instead of cancelling them, so it preserves all n+3 exponents
and the two weighted sums agree. On the AR_n x SGT(k) side SW counts
towards u, SE towards v and SESW towards w.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from gtsij.core.builders import relabel_sij
from gtsij.core.elements import Arrow
from gtsij.core.signed_set import SignedSet, cartesian_product
from gtsij.core.sijection import Sijection, compose_all, fiberwise_over, identity_sij, product_sij
from gtsij.core.statistics import Statistic, check_compatibility
from gtsij.errors import InterfaceError
from gtsij.gamma.laurent import LaurentPoly, poly_sum
from gtsij.gamma.pipeline import _phi1, _phi3p, _phi4pp
from gtsij.patterns.gt import _gt, gt_rows
from gtsij.triangles.arrows import SignMode, ap_apply, ar, mu_apply
from gtsij.triangles.monotone import _gmt, _sgt, gmt_parts

AF = SignMode.AF_UNSIGNED
STATISTIC_NAMES = ("eta_u", "eta_v", "eta_w")

Weights = Tuple[int, ...]


def _count(arrows, symbol: Arrow) -> int:
    return sum(1 for a in arrows if a is symbol)


def _row_sums(rows) -> List[int]:
    return [sum(row) for row in rows]


def gmt_weights(k: Sequence[int], element) -> Weights:
    """(eta_u, eta_v, eta_w, eta_X1, ..., eta_Xn) of a GMT element."""
    rows, arrows = gmt_parts(tuple(k), element)
    flat = [a for row in arrows for a in row]
    sums = [0] + _row_sums(rows)
    xs = tuple(
        sums[i] - sums[i - 1] + _count(arrows[i - 1], Arrow.NE) - _count(arrows[i - 1], Arrow.NW)
        for i in range(1, len(rows) + 1)
    )
    return (_count(flat, Arrow.NE), _count(flat, Arrow.NW), _count(flat, Arrow.NWNE)) + xs


def ar_sgt_weights(k: Sequence[int], element) -> Weights:
    """The same exponents on an element (mu, (A, T)) of AR_n x SGT(k)."""
    k = tuple(k)
    mu, (a, t) = element
    rows = gt_rows(ap_apply(t, k), a)
    sums = [0] + _row_sums(rows)
    xs = tuple(
        sums[i] - sums[i - 1] + int(mu[i - 1] is Arrow.NE) - int(mu[i - 1] is Arrow.NW)
        for i in range(1, len(k) + 1)
    )
    return (
        _count(mu, Arrow.NE) + _count(t, Arrow.SW),
        _count(mu, Arrow.NW) + _count(t, Arrow.SE),
        _count(mu, Arrow.NWNE) + _count(t, Arrow.SESW),
    ) + xs


def weight_statistics(k: Sequence[int], side: str) -> List[Statistic]:
    """eta_u, eta_v, eta_w, eta_X1..eta_Xn as separate statistics on one side ('gmt' or 'arsgt')."""
    k = tuple(k)
    weights = _weights_for(side)
    names = STATISTIC_NAMES + tuple(f"eta_X{i}" for i in range(1, len(k) + 1))
    return [Statistic(name, lambda e, j=j: weights(k, e)[j]) for j, name in enumerate(names)]


def _weights_for(side: str) -> Callable:
    if side == "gmt":
        return gmt_weights
    if side == "arsgt":
        return ar_sgt_weights
    raise InterfaceError(f"Unknown side {side!r} (use 'gmt' or 'arsgt')")


def ar_sgt(k: Sequence[int]) -> SignedSet:
    """AR_n x SGT(k) in mode af; elements (mu, (A, T))."""
    k = tuple(k)
    if not k:
        raise InterfaceError("AR_n x SGT(k) needs a non-empty bottom row")
    return cartesian_product([ar(len(k), AF), _sgt(k, AF)])


@lru_cache(maxsize=None)
def _gmt_ar_sgt(k: Tuple[int, ...], x: int) -> Sijection:
    n = len(k)
    target = ar_sgt(k)
    if n == 1:
        return relabel_sij(_gmt(k, AF), target, lambda mu: (mu, (k[0], ())))

    lift = fiberwise_over(ar(n, AF), lambda mu: fiberwise_over(mu_apply(mu, k), lambda l: _gmt_ar_sgt(l, x)))
    rest = compose_all(_phi1(k, x, AF), _phi3p(k, x, AF), _phi4pp(k, x))
    lower = ar(n - 1, AF)
    kept = product_sij(identity_sij(lower), rest)

    def pull_out(element):
        ((nu, s), l), mu = element
        return nu, ((s, l), mu)

    def join(element):
        nu, (arrow, s) = element
        return nu + arrow, s

    logging.debug(f"AR_n x SGT{k} at x={x}: {len(target.support)} elements")
    return compose_all(
        lift,
        relabel_sij(lift.codomain, kept.domain, pull_out),
        kept,
        relabel_sij(kept.codomain, target, join),
    )


def gmt_ar_sgt_sij(k: Sequence[int], x: Optional[int] = None) -> Sijection:
    """GMT(k) <=> AR_n x SGT(k) in mode af, compatible with eta_u, eta_v, eta_w and every eta_Xi."""
    k = tuple(k)
    if not k:
        raise InterfaceError("The weighted sijection needs a non-empty bottom row")
    if x is None:
        x = max(k) + len(k)
    return _gmt_ar_sgt(k, int(x))


def weight_monomial(n: int, weights: Weights) -> LaurentPoly:
    return LaurentPoly.monomial(n, weights[0], weights[1], weights[2], weights[3:])


def weighted_sum(s: SignedSet, n: int, weights: Callable[[object], Weights]) -> LaurentPoly:
    """Sum of sign(e) * weight(e) over the support of s."""
    return poly_sum(n, (weight_monomial(n, weights(e)) * sign for e, sign in s.signed_elements()))


def gmt_weighted_sum(k: Sequence[int]) -> LaurentPoly:
    k = tuple(k)
    return weighted_sum(_gmt(k, AF), len(k), lambda e: gmt_weights(k, e))


def ar_sgt_weighted_sum(k: Sequence[int]) -> LaurentPoly:
    k = tuple(k)
    return weighted_sum(ar_sgt(k), len(k), lambda e: ar_sgt_weights(k, e))


def arrow_factor(n: int) -> LaurentPoly:
    """prod_i (u X_i + v X_i^-1 + w)."""
    result = LaurentPoly.one(n)
    for i in range(n):
        x_up = [0] * n
        x_down = [0] * n
        x_up[i], x_down[i] = 1, -1
        factor = (
            LaurentPoly.monomial(n, u=1, x=x_up)
            + LaurentPoly.monomial(n, v=1, x=x_down)
            + LaurentPoly.monomial(n, w=1)
        )
        result = result * factor
    return result


def schur_tilde(k: Sequence[int]) -> LaurentPoly:
    """sum over A in GT(k) of sign(A) prod_i X_i^(row sum i - row sum i-1)."""
    k = tuple(k)
    n = len(k)
    if not k:
        raise InterfaceError("s~ needs a non-empty bottom row")

    def weights(e):
        sums = [0] + _row_sums(gt_rows(k, e))
        return (0, 0, 0) + tuple(sums[i] - sums[i - 1] for i in range(1, n + 1))

    return weighted_sum(_gt(k), n, weights)


def slot_total(n: int) -> int:
    """Arrow slots of a GMT with n rows: n(n+1)/2."""
    return n * (n + 1) // 2


def relation_violations(k: Sequence[int], side: str) -> Dict[str, list]:
    """Support elements breaking sum eta_Xi - eta_u + eta_v = sum k or eta_u + eta_v + eta_w = n(n+1)/2."""
    k = tuple(k)
    n = len(k)
    weights = _weights_for(side)
    s = _gmt(k, AF) if side == "gmt" else ar_sgt(k)
    found: Dict[str, list] = {"x_sum": [], "slots": []}
    for e in s.elements():
        w = weights(k, e)
        if sum(w[3:]) - w[0] + w[1] != sum(k):
            found["x_sum"].append(e)
        if w[0] + w[1] + w[2] != slot_total(n):
            found["slots"].append(e)
    if n >= 2:
        _note_slot_constant(n)
    return found


@lru_cache(maxsize=None)
def _note_slot_constant(n: int) -> None:
    logging.warning(
        f"Arrow slots total n(n+1)/2 = {slot_total(n)} for n={n}; "
        f"the value C(n,2) = {n * (n - 1) // 2} quoted in the literature counts only the pattern slots"
    )


def weighted_compatibility(k: Sequence[int], x: Optional[int] = None):
    """check_compatibility of gmt_ar_sgt_sij(k, x) for each of the n+3 statistics, in order."""
    k = tuple(k)
    phi = gmt_ar_sgt_sij(k, x)
    on_gmt = weight_statistics(k, "gmt")
    on_arsgt = weight_statistics(k, "arsgt")
    return [check_compatibility(phi, a, b) for a, b in zip(on_gmt, on_arsgt)]
