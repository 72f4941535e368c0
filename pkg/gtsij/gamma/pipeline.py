"""
The sijection Gamma: GMT(k) <=> SGT(k).

For n >= 2 it is the composite

    GMT(k) = union over mu, l of GMT(l)
           <=> union over mu, l of SGT(l)                      (Gamma(l) fiberwise)
           <=> union over mu, T, m of GT(m_1, ..., m_{n-1}, x)   phi1
           <=> union over i, mu, T of GT(m(0).., x, m(1)..)      phi3p
           <=> SGT(k)                                          phi4p

with mu in AR_n, T in AP_{n-1} and m_i = m_i(mu, T, omega_i). Every
stage takes the same limit parameter x; Gamma(l) below is built with it
too. Element layouts per stage:

    phi1 domain     (((A, T), l), mu)
    phi1 codomain   ((((A, l'), m), T), mu)      (A, l') in GT(m, x)
    phi3p codomain  Tagged(i-1, ((B, T), mu))    B in GT(m(0).., x, m(1)..)
    phi4p codomain  (A, T')                      the SGT(k) layout
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from gtsij.core.builders import explicit_sij, pair_cancel, relabel_sij
from gtsij.core.elements import UNIT, Arrow, Tagged, sort_key, translate
from gtsij.core.signed_set import (
    SignedSet,
    cartesian_product,
    disjoint_union,
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
    compose_all,
    dom,
    fiberwise_over,
    identity_fibers,
    identity_sij,
    indexed_union_sij,
    inverse,
    product_sij,
    union_sij,
)
from gtsij.core.statistics import Statistic, pair_statistic
from gtsij.core.verify import VerificationReport
from gtsij.errors import InterfaceError, InvariantViolation
from gtsij.patterns.constructions import _pi, _rho, _tau, move_sij, replace, swap
from gtsij.patterns.gt import _gt, top_entry
from gtsij.triangles.arrows import (
    SignMode,
    ap,
    ap_apply,
    ar,
    c_vector,
    eta_inv_ap,
    eta_inv_ar,
    mu_apply,
    pattern_entries,
    pattern_from_entries,
)
from gtsij.triangles.monotone import _gmt, _sgt, eta_inv_gmt, eta_inv_sgt, eta_top_gmt, eta_top_sgt

Word = Tuple[int, ...]
ArrowRow = Tuple[Arrow, ...]
Pattern = Tuple[Arrow, ...]

OMEGA = from_signed([(0, 1), (1, -1)])


# Mid rows and words

def m_value(k: Sequence[int], mu: ArrowRow, pattern: Pattern, i: int, omega_i: int) -> int:
    """m_i(mu, T, omega_i) for mu in AR_n and T in AP_{n-1}; i is 1-based."""
    n = len(k)
    if not 1 <= i <= n - 1:
        raise InterfaceError(f"m_i needs 1 <= i <= {n - 1}, got {i}")
    c = c_vector(n - 1, pattern)[i - 1]
    if omega_i == 0:
        return k[i - 1] + mu[i - 1].delta_ne + c
    if omega_i == 1:
        return k[i] - mu[i].delta_nw + c
    raise InterfaceError(f"omega_i must be 0 or 1, got {omega_i}")


def mid_row(k: Sequence[int], mu: ArrowRow, pattern: Pattern, omega: Word) -> Tuple[int, ...]:
    return tuple(m_value(k, mu, pattern, i, w) for i, w in enumerate(omega, start=1))


def staircase(n: int, i: int) -> Word:
    """omega^(i): 0 before position i, 1 from position i on (length n-1)."""
    return tuple(0 if j < i else 1 for j in range(1, n))


def staircase_index(omega: Word) -> int:
    """i with omega = omega^(i), or 0 when omega is not a staircase."""
    if list(omega) != sorted(omega):
        return 0
    return omega.count(0) + 1


def first_descent(omega: Word) -> int:
    """The least i with omega_i = 1 and omega_{i+1} = 0."""
    for i in range(1, len(omega)):
        if omega[i - 1] == 1 and omega[i] == 0:
            return i
    raise InterfaceError(f"{omega} is a staircase word and has no descent")


@lru_cache(maxsize=None)
def omega_words(length: int) -> SignedSet:
    """Omega^length; the sign of a word is (-1)^(number of ones)."""
    return cartesian_product([OMEGA] * length)


def staircase_row(k: Sequence[int], mu: ArrowRow, pattern: Pattern, i: int, x: int) -> Tuple[int, ...]:
    """(m_1(0), ..., m_{i-1}(0), x, m_i(1), ..., m_{n-1}(1))."""
    n = len(k)
    low = tuple(m_value(k, mu, pattern, j, 0) for j in range(1, i))
    high = tuple(m_value(k, mu, pattern, j, 1) for j in range(i, n))
    return low + (x,) + high


def omega_involution(mu: ArrowRow, pattern: Pattern, i: int) -> Tuple[ArrowRow, Pattern]:
    """(mu, T) <-> (mu', T') at the descent position i, T in AP_{n-1}.

    Columns i and i+1 of T are exchanged above row i, rows i and i+1 are
    exchanged right of column i+1, and t_{i,i+1} trades places with
    mu_{i+1}, both reversed.
    """
    n = len(mu)
    if not 1 <= i <= n - 2:
        raise InterfaceError(f"The involution needs 1 <= i <= {n - 2}, got i={i}")
    t = pattern_entries(n - 1, pattern)
    s = dict(t)
    for j in range(1, i):
        s[(j, i)], s[(j, i + 1)] = t[(j, i + 1)], t[(j, i)]
    for j in range(i + 2, n):
        s[(i, j)], s[(i + 1, j)] = t[(i + 1, j)], t[(i, j)]
    s[(i, i + 1)] = mu[i].reverse()
    new_mu = mu[:i] + (t[(i, i + 1)].reverse(),) + mu[i + 1:]
    return new_mu, pattern_from_entries(n - 1, s)


def psi_rearrange(n: int, i: int, mu: ArrowRow, pattern: Pattern) -> Tuple[ArrowRow, Pattern]:
    """AR_n x AP_{n-1} -> AR_1 x AP_n: mu_i is kept, the other mu_p move into row and column i reversed."""
    if not 1 <= i <= n:
        raise InterfaceError(f"psi_rearrange needs 1 <= i <= {n}, got i={i}")
    if len(mu) != n:
        raise InterfaceError(f"Arrow row {mu} does not have length {n}")
    t = pattern_entries(n - 1, pattern)
    s: Dict[Tuple[int, int], Arrow] = {}
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if q < i:
                s[(p, q)] = t[(p, q)]
            elif p < i < q:
                s[(p, q)] = t[(p, q - 1)]
            elif i < p:
                s[(p, q)] = t[(p - 1, q - 1)]
            elif q == i:
                s[(p, q)] = mu[p - 1].reverse()
            else:
                s[(p, q)] = mu[q - 1].reverse()
    return (mu[i - 1],), pattern_from_entries(n, s)


def phi_ar1(mode: SignMode = SignMode.FK_SIGNED) -> Sijection:
    """AR_1 <=> {unit}: NW <-> unit, NE <-> NWNE."""
    mode = SignMode.parse(mode)
    if mode is not SignMode.FK_SIGNED:
        raise InterfaceError("The AR_1 cancellation needs signed double arrows (mode fk)")
    pairs = [
        (dom((Arrow.NW,)), cod(UNIT)),
        (dom((Arrow.NE,)), dom((Arrow.NWNE,))),
    ]
    return explicit_sij(ar(1, mode), singleton(UNIT), pairs, check=False)


def _check_length(k: Tuple[int, ...], what: str) -> None:
    if len(k) < 2:
        raise InterfaceError(f"{what} needs n >= 2, got k={k}")


# phi1

@lru_cache(maxsize=None)
def _phi1(k: Tuple[int, ...], x: int, mode: SignMode) -> Sijection:
    n = len(k)
    arrows, patterns = ar(n, mode), ap(n - 1, mode)

    def rho_at(mu, t):
        lows = tuple(m_value(k, mu, t, i, 0) for i in range(1, n))
        highs = tuple(m_value(k, mu, t, i, 1) for i in range(1, n))
        return _rho(lows, highs, x)

    spread = fiberwise_over(arrows, lambda mu: fiberwise_over(patterns, lambda t: rho_at(mu, t)))
    source = indexed_union(arrows, lambda mu: indexed_union(mu_apply(mu, k), lambda l: _sgt(l, mode)))

    def reorder(element):
        ((a, t), l), mu = element
        return ((a, ap_apply(t, l)), t), mu

    return compose(relabel_sij(source, spread.domain, reorder), spread)


def phi1(k: Sequence[int], x: int, mode: SignMode = SignMode.FK_SIGNED) -> Sijection:
    """Union over mu in AR_n, l in mu(k) of SGT(l) <=> union over mu, T, m of GT(m + c(T), x).

    The GT pattern A is carried along unchanged.
    """
    k = tuple(k)
    _check_length(k, "phi1")
    return _phi1(k, x, SignMode.parse(mode))


# phi3p

def _word_of(m) -> Word:
    return tuple(t.index for t in m)


@lru_cache(maxsize=None)
def _phi3p(k: Tuple[int, ...], x: int, mode: SignMode) -> Sijection:
    n = len(k)
    arrows, patterns = ar(n, mode), ap(n - 1, mode)
    words = omega_words(n - 1)
    stairs = words.filter(lambda w: staircase_index(w) > 0)
    rest = words.filter(lambda w: staircase_index(w) == 0)

    def move_at(omega, mu, t):
        i = staircase_index(omega)
        row = mid_row(k, mu, t, omega) + (x,)
        return move_sij(row, n, i)

    # the word sign (-1)^(n-i) cancels the sign of the move
    stair = fiberwise_over(
        stairs,
        lambda omega: fiberwise_over(arrows, lambda mu: fiberwise_over(patterns, lambda t: move_at(omega, mu, t))),
    )

    def family(index):
        omega, mu, t = index
        return _gt(mid_row(k, mu, t, omega) + (x,))

    def partner(index):
        omega, mu, t = index
        return (omega,) + omega_involution(mu, t, first_descent(omega))

    def leads(index):
        omega, mu, t = index
        _, other_mu, other_t = partner(index)
        return sort_key((mu, t)) < sort_key((other_mu, other_t))

    def swap_at(index):
        omega, mu, t = index
        i = first_descent(omega)
        row = mid_row(k, mu, t, omega) + (x,)
        _, other_mu, other_t = partner(index)
        expected = mid_row(k, other_mu, other_t, omega) + (x,)
        if swap(row, i) != expected:
            raise InvariantViolation(f"phi3p{k}: swapping {row} at {i} gives {swap(row, i)}, partner row is {expected}")
        return _pi(row, i)

    cancel = pair_cancel(cartesian_product([rest, arrows, patterns]), family, partner, swap_at, leads)
    merged = union_sij([stair, cancel])
    target = disjoint_union([
        indexed_union(arrows, lambda mu, i=i: indexed_union(patterns, lambda t: _gt(staircase_row(k, mu, t, i, x))))
        for i in range(1, n + 1)
    ])

    def split(element):
        (((b, m), t), mu) = element
        omega = _word_of(m)
        if staircase_index(omega):
            return Tagged(0, (((b, t), mu), omega))
        return Tagged(1, (b, (omega, mu, t)))

    def gather(element):
        ((b, t), mu), omega = element.child
        return Tagged(staircase_index(omega) - 1, ((b, t), mu))

    source = _phi1(k, x, mode).codomain
    return compose_all(
        relabel_sij(source, merged.domain, split),
        merged,
        relabel_sij(merged.codomain, target, gather),
    )


def phi3p(k: Sequence[int], x: int, mode: SignMode = SignMode.FK_SIGNED) -> Sijection:
    """The phi1 codomain <=> union over i, mu, T of GT(m_1(0), .., m_{i-1}(0), x, m_i(1), .., m_{n-1}(1)).

    Staircase words move x into place by adjacent swaps; the remaining
    words cancel in pairs through omega_involution and one swap.
    """
    k = tuple(k)
    _check_length(k, "phi3p")
    return _phi3p(k, x, SignMode.parse(mode))


# phi4p and phi4pp

def _rearrange_sij(n: int, i: int, mode: SignMode) -> Sijection:
    source = cartesian_product([ar(n, mode), ap(n - 1, mode)])
    target = cartesian_product([ar(1, mode), ap(n, mode)])
    return relabel_sij(source, target, lambda e: psi_rearrange(n, i, e[0], e[1]))


def _psi_sij(n: int, i: int) -> Sijection:
    """Psi_{n,i}: AR_n x AP_{n-1} <=> AP_n."""
    rearranged = _rearrange_sij(n, i, SignMode.FK_SIGNED)
    patterns = ap(n, SignMode.FK_SIGNED)
    cancelled = product_sij(phi_ar1(), identity_sij(patterns))
    return compose_all(
        rearranged,
        cancelled,
        relabel_sij(cancelled.codomain, patterns, lambda e: e[1]),
    )


def _pattern_of(index) -> Pattern:
    """T' from an index element: T' itself, or (mu'_1, T') when AR_1 is kept."""
    if index and isinstance(index[0], tuple):
        return index[1]
    return index


def _phi4(k: Tuple[int, ...], x: int, mode: SignMode, keep_arrow: bool) -> Sijection:
    n = len(k)
    arrows, patterns = ar(n, mode), ap(n - 1, mode)
    lifted: List[Sijection] = []
    for i in range(1, n + 1):
        psi = _rearrange_sij(n, i, mode) if keep_arrow else _psi_sij(n, i)

        def domain_family(index, i=i):
            mu, t = index
            return _gt(staircase_row(k, mu, t, i, x))

        def codomain_family(index, i=i):
            return _gt(replace(ap_apply(_pattern_of(index), k), i, x))

        lifted.append(indexed_union_sij(psi, domain_family, codomain_family, _checked_identity(domain_family, codomain_family, psi)))
    merged = union_sij(lifted)
    index_set = lifted[0].psi.codomain

    def regroup(element):
        b, index = element.child
        return Tagged(element.index, b), index

    untau = fiberwise_over(index_set, lambda index: inverse(_tau(ap_apply(_pattern_of(index), k), x)))
    source = disjoint_union([
        indexed_union(arrows, lambda mu, i=i: indexed_union(patterns, lambda t: _gt(staircase_row(k, mu, t, i, x))))
        for i in range(1, n + 1)
    ])

    def flatten(element):
        (b, t), mu = element.child
        return Tagged(element.index, (b, (mu, t)))

    steps = [
        relabel_sij(source, merged.domain, flatten),
        merged,
        relabel_sij(merged.codomain, untau.domain, regroup),
        untau,
    ]
    if keep_arrow:
        target = cartesian_product([ar(1, mode), _sgt(k, mode)])
        steps.append(relabel_sij(untau.codomain, target, lambda e: (e[1][0], (e[0], e[1][1]))))
    return compose_all(*steps)


def _checked_identity(domain_family: Callable, codomain_family: Callable, psi: Sijection):
    """Identity fibers, after checking that the two families agree along psi."""
    plain = identity_fibers(domain_family, codomain_family)

    def fiber(lead: SidedElement) -> Sijection:
        there = psi.apply(lead)
        here_family = (domain_family if lead.side is Side.DOM else codomain_family)(lead.element)
        there_family = (domain_family if there.side is Side.DOM else codomain_family)(there.element)
        if here_family != there_family:
            raise InvariantViolation(f"Families differ along psi at {lead!r} and {there!r}")
        return plain(lead)
    return fiber


@lru_cache(maxsize=None)
def _phi4p(k: Tuple[int, ...], x: int) -> Sijection:
    return _phi4(k, x, SignMode.FK_SIGNED, keep_arrow=False)


@lru_cache(maxsize=None)
def _phi4pp(k: Tuple[int, ...], x: int) -> Sijection:
    return _phi4(k, x, SignMode.AF_UNSIGNED, keep_arrow=True)


def phi4p(k: Sequence[int], x: int, mode: SignMode = SignMode.FK_SIGNED) -> Sijection:
    """The phi3p codomain <=> SGT(k), through Psi_{n,i} and tau (signed double arrows only)."""
    k = tuple(k)
    _check_length(k, "phi4p")
    if SignMode.parse(mode) is not SignMode.FK_SIGNED:
        raise InterfaceError("phi4p cancels NE against NWNE and needs mode fk; use phi4pp for mode af")
    return _phi4p(k, x)


def phi4pp(k: Sequence[int], x: int, mode: SignMode = SignMode.AF_UNSIGNED) -> Sijection:
    """The phi3p codomain <=> AR_1 x SGT(k), keeping mu_i (unsigned double arrows only)."""
    k = tuple(k)
    _check_length(k, "phi4pp")
    if SignMode.parse(mode) is not SignMode.AF_UNSIGNED:
        raise InterfaceError("phi4pp keeps the AR_1 coordinate and needs mode af; use phi4p for mode fk")
    return _phi4pp(k, x)


# Gamma

@lru_cache(maxsize=None)
def _gamma(k: Tuple[int, ...], x: int) -> Sijection:
    mode = SignMode.FK_SIGNED
    if len(k) == 1:
        pairs = [
            (dom((Arrow.NW,)), cod((k[0], UNIT))),
            (dom((Arrow.NE,)), dom((Arrow.NWNE,))),
        ]
        return explicit_sij(_gmt(k, mode), _sgt(k, mode), pairs, check=False)

    lift = fiberwise_over(ar(len(k), mode), lambda mu: fiberwise_over(mu_apply(mu, k), lambda l: _gamma(l, x)))
    logging.debug(f"Gamma{k} at x={x}: {len(lift.domain.support)} GMT elements")
    return compose_all(lift, _phi1(k, x, mode), _phi3p(k, x, mode), _phi4p(k, x))


def gamma_sij(k: Sequence[int], x: Optional[int] = None) -> Sijection:
    """Gamma_{k,x}: GMT(k) <=> SGT(k), compatible with eta_top and eta_inv.

    Args:
        k (Sequence[int]): The bottom row.
        x (int, optional): The limit parameter. Defaults to X+ = max(k) + n.

    Returns:
        Sijection: Domain gmt(k), codomain sgt(k), both in mode fk.
    """
    k = tuple(k)
    if not k:
        raise InterfaceError("Gamma needs a non-empty bottom row")
    if x is None:
        x = limit_parameter(k, "+")
    return _gamma(k, int(x))


def limit_parameter(k: Sequence[int], direction: str) -> int:
    """X+ = max(k) + n or X- = min(k) - n."""
    k = tuple(k)
    if not k:
        raise InterfaceError("The limit parameter needs a non-empty bottom row")
    if direction in ("+", "+inf", "plus", "up"):
        return max(k) + len(k)
    if direction in ("-", "-inf", "minus", "down"):
        return min(k) - len(k)
    raise InterfaceError(f"Unknown direction {direction!r} (use '+' or '-')")


def gamma_limit(k: Sequence[int], direction: str = "+") -> Sijection:
    """Gamma_{k,+inf} or Gamma_{k,-inf}, built at X+ or X-."""
    return gamma_sij(k, limit_parameter(k, direction))


# Statistics and pointwise checks

def gamma_statistics(k: Sequence[int]) -> Tuple[Statistic, Statistic]:
    """(eta_top, eta_inv) on GMT(k) and on SGT(k)."""
    k = tuple(k)
    on_gmt = pair_statistic(
        Statistic("eta_top", lambda e: eta_top_gmt(k, e)),
        Statistic("eta_inv", lambda e: eta_inv_gmt(k, e)),
    )
    on_sgt = pair_statistic(Statistic("eta_top", eta_top_sgt), Statistic("eta_inv", eta_inv_sgt))
    return on_gmt, on_sgt


def stage_top_statistic() -> Statistic:
    """eta_top on every stage layout: the GT pattern always leads the element."""
    return Statistic("eta_top", top_entry)


def _arrow_inversions(mu: ArrowRow, pattern: Pattern) -> int:
    return eta_inv_ar(mu) + eta_inv_ap(pattern)


def phi1_inv_statistics() -> Tuple[Statistic, Statistic]:
    """eta_inv of the (mu, T) part on the phi1 domain and codomain."""
    return (
        Statistic("eta_inv", lambda e: _arrow_inversions(e[1], e[0][0][1])),
        Statistic("eta_inv", lambda e: _arrow_inversions(e[1], e[0][1])),
    )


def phi4_inv_statistics(keep_arrow: bool) -> Tuple[Statistic, Statistic]:
    """eta_inv on the phi3p codomain and on SGT(k), or on AR_1 x SGT(k) when the arrow is kept."""
    def on_domain(element):
        (_, t), mu = element.child
        return _arrow_inversions(mu, t)

    if keep_arrow:
        on_codomain = Statistic("eta_inv", lambda e: _arrow_inversions(e[0], e[1][1]))
    else:
        on_codomain = Statistic("eta_inv", eta_inv_sgt)
    return Statistic("eta_inv", on_domain), on_codomain


def same_graph(phi: Sijection, psi: Sijection) -> VerificationReport:
    """Pointwise equality of two sijections between the same signed sets."""
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        return VerificationReport(False, 0, None, "domains or codomains differ")
    checked = 0
    for item in phi.items():
        checked += 1
        first, second = phi.apply(item), psi.apply(item)
        if first != second:
            return VerificationReport(False, checked, item, f"images differ ({first!r} vs {second!r})")
    return VerificationReport(True, checked)


def gamma_stability_check(k: Sequence[int], direction: str = "+", offsets: Sequence[int] = (1, 3)) -> VerificationReport:
    """Gamma at X+ (or X-) against Gamma at X+ + d (X- - d) for each offset d."""
    k = tuple(k)
    base_x = limit_parameter(k, direction)
    step = 1 if base_x > max(k) else -1
    base = gamma_sij(k, base_x)
    checked = 0
    for offset in offsets:
        report = same_graph(base, gamma_sij(k, base_x + step * offset))
        checked += report.checked
        if not report.valid:
            report.reason = f"x={base_x + step * offset}: {report.reason}"
            return report
    return VerificationReport(True, checked)


def gamma_translate_check(k: Sequence[int], t: int, direction: str = "+") -> VerificationReport:
    """f_t o Gamma_{k} == Gamma_{k+t} o f_t at the given limit, pointwise."""
    k = tuple(k)
    here = gamma_limit(k, direction)
    there = gamma_limit(translate(t, k), direction)
    checked = 0
    for item in here.items():
        checked += 1
        image = here.apply(item)
        moved = there.apply(SidedElement(item.side, translate(t, item.element)))
        if moved != SidedElement(image.side, translate(t, image.element)):
            return VerificationReport(False, checked, item, f"translating by {t} does not commute")
    return VerificationReport(True, checked)
