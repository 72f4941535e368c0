"""
Arrow rows and arrow patterns.

An arrow row mu in AR_n acts on k in Z^n by
    mu(k) = [k_1 + d_NE(mu_1), k_2 - d_NW(mu_2)) x ... x [k_{n-1} + d_NE(mu_{n-1}), k_n - d_NW(mu_n)).
An arrow pattern T in AP_n is stored as a flat tuple read diagonal by
diagonal: t_{1,2}, t_{2,3}, ..., t_{n-1,n}, t_{1,3}, ..., t_{1,n}. It shifts
k by c(T).
"""
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from gtsij.core.elements import Arrow
from gtsij.core.signed_set import SignedSet, box, cartesian_product, from_signed
from gtsij.errors import InterfaceError

ROW_ARROWS = (Arrow.NW, Arrow.NE, Arrow.NWNE)
PATTERN_ARROWS = (Arrow.SE, Arrow.SW, Arrow.SESW)


class SignMode(Enum):
    """fk: double arrows are minus; af: every arrow is plus"""
    FK_SIGNED = "fk"
    AF_UNSIGNED = "af"

    @classmethod
    def parse(cls, value) -> "SignMode":
        if isinstance(value, cls):
            return value
        for mode in cls:
            if value in (mode.value, mode.name, mode.name.lower()):
                return mode
        raise InterfaceError(f"Unknown sign mode: {value!r} (use 'fk' or 'af')")


def arrow_sign(arrow: Arrow, mode: SignMode) -> int:
    if mode is SignMode.FK_SIGNED and arrow.is_double:
        return -1
    return 1


@lru_cache(maxsize=None)
def _arrow_set(symbols: Tuple[Arrow, ...], mode: SignMode) -> SignedSet:
    return from_signed((a, arrow_sign(a, mode)) for a in symbols)


def arrow_set(symbols: Sequence[Arrow], mode: SignMode = SignMode.FK_SIGNED) -> SignedSet:
    return _arrow_set(tuple(symbols), mode)


@lru_cache(maxsize=None)
def _ar(n: int, mode: SignMode) -> SignedSet:
    return cartesian_product([_arrow_set(ROW_ARROWS, mode)] * n)


def ar(n: int, mode: SignMode = SignMode.FK_SIGNED) -> SignedSet:
    """AR_n: arrow rows of length n."""
    if n < 0:
        raise InterfaceError(f"Arrow rows need n >= 0, got {n}")
    return _ar(n, SignMode.parse(mode))


@lru_cache(maxsize=None)
def ap_positions(n: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs (i, j), i < j, in storage order."""
    return tuple((i, i + d) for d in range(1, n) for i in range(1, n - d + 1))


@lru_cache(maxsize=None)
def _ap(n: int, mode: SignMode) -> SignedSet:
    return cartesian_product([_arrow_set(PATTERN_ARROWS, mode)] * len(ap_positions(n)))


def ap(n: int, mode: SignMode = SignMode.FK_SIGNED) -> SignedSet:
    """AP_n: arrow patterns of size n; AP_1 holds the empty pattern only."""
    if n < 1:
        raise InterfaceError(f"Arrow patterns need n >= 1, got {n}")
    return _ap(n, SignMode.parse(mode))


def pattern_entries(n: int, pattern: Sequence[Arrow]) -> Dict[Tuple[int, int], Arrow]:
    positions = ap_positions(n)
    if len(pattern) != len(positions):
        raise InterfaceError(f"An arrow pattern of size {n} has {len(positions)} entries, got {len(pattern)}")
    return dict(zip(positions, pattern))


def pattern_from_entries(n: int, entries: Dict[Tuple[int, int], Arrow]) -> Tuple[Arrow, ...]:
    return tuple(entries[position] for position in ap_positions(n))


def c_vector(n: int, pattern: Sequence[Arrow]) -> Tuple[int, ...]:
    """c_i(T) = #{j > i: t_{i,j} points SW} - #{j < i: t_{j,i} points SE}."""
    t = pattern_entries(n, pattern)
    return tuple(
        sum(t[(i, j)].delta_sw for j in range(i + 1, n + 1)) - sum(t[(j, i)].delta_se for j in range(1, i))
        for i in range(1, n + 1)
    )


def ap_apply(pattern: Sequence[Arrow], k: Sequence[int]) -> Tuple[int, ...]:
    """T(k) = k + c(T)."""
    return tuple(a + c for a, c in zip(k, c_vector(len(k), pattern)))


def mu_bounds(mu: Sequence[Arrow], k: Sequence[int]) -> List[Tuple[int, int]]:
    if len(mu) != len(k):
        raise InterfaceError(f"Arrow row of length {len(mu)} cannot act on k={tuple(k)}")
    return [(k[i] + mu[i].delta_ne, k[i + 1] - mu[i + 1].delta_nw) for i in range(len(k) - 1)]


def mu_apply(mu: Sequence[Arrow], k: Sequence[int]) -> SignedSet:
    """mu(k), a product of n-1 shifted intervals."""
    return box(mu_bounds(mu, k))


def eta_inv_ar(mu: Sequence[Arrow]) -> int:
    """Number of NE and NWNE in an arrow row."""
    return sum(a.delta_ne for a in mu)


def eta_inv_ap(pattern: Sequence[Arrow]) -> int:
    """Number of SW and SESW in an arrow pattern."""
    return sum(a.delta_sw for a in pattern)


def parse_arrows(text: str) -> Tuple[Arrow, ...]:
    """Comma or space separated arrow names, e.g. `NW,NWNE,NE`."""
    names = [name for name in text.replace(",", " ").split() if name]
    try:
        return tuple(Arrow[name.upper()] for name in names)
    except KeyError as exc:
        raise InterfaceError(f"Unknown arrow {exc.args[0]!r}")
