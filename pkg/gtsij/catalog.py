"""
Named sijections and the statistics each of them preserves.

The CLI (`sij verify --name ...`) and the acceptance runner look
constructions up here by name, so both agree on how an instance is built
from its parameters and on which statistic pairs it must be checked
against.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from gtsij.core.builders import interval_split
from gtsij.core.sijection import Sijection
from gtsij.core.statistics import Statistic, normal_statistic
from gtsij.errors import InterfaceError
from gtsij.gamma.pipeline import (
    gamma_sij,
    phi1,
    phi1_inv_statistics,
    phi3p,
    phi4_inv_statistics,
    phi4p,
    phi4pp,
    stage_top_statistic,
)
from gtsij.gamma.weighted import gmt_ar_sgt_sij, weight_statistics
from gtsij.patterns.constructions import beta, gamma_row, pi, replace, rho, sigma, swap, tau
from gtsij.patterns.gt import eta_row, eta_row_statistic, eta_top_statistic, gt_rows
from gtsij.triangles.arrows import SignMode
from gtsij.triangles.monotone import (
    eta_inv_gmt_statistic,
    eta_inv_mt_statistic,
    eta_inv_sgt_statistic,
    eta_mt_gmt_statistic,
    eta_mt_statistic,
    eta_top_gmt_statistic,
    eta_top_sgt_statistic,
    iota_mt,
)

StatisticPair = Tuple[Statistic, Statistic]


@dataclass
class SijParams:
    """Parameters of a named construction; each name reads only the fields it needs"""
    k: Tuple[int, ...] = ()
    a: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    c: Optional[int] = None
    x: Optional[int] = None
    i: Optional[int] = None
    mode: str = "fk"

    def need(self, name: str, *fields: str) -> None:
        missing = [f for f in fields if getattr(self, f) in (None, ())]
        if missing:
            raise InterfaceError(f"{name} needs --{' --'.join(missing)}")

    def describe(self) -> str:
        shown = {f: getattr(self, f) for f in ("k", "a", "b", "c", "x", "i") if getattr(self, f) not in (None, ())}
        return ", ".join(f"{key}={value}" for key, value in shown.items())


class CatalogEntry(NamedTuple):
    build: Callable[[SijParams], Sijection]
    statistics: Callable[[SijParams, Sijection], List[StatisticPair]]


def _single(values: Tuple[int, ...], what: str) -> int:
    if len(values) != 1:
        raise InterfaceError(f"interval_split takes a single integer for --{what}, got {values}")
    return values[0]


def _sorted_rows(rows) -> tuple:
    return tuple(tuple(sorted(row)) for row in rows)


def _normal_pair(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return [(normal_statistic(phi.domain), normal_statistic(phi.codomain))]


# Builders

def _build_interval_split(p: SijParams) -> Sijection:
    p.need("interval_split", "a", "b", "c")
    return interval_split(_single(p.a, "a"), _single(p.b, "b"), p.c)


def _build_beta(p: SijParams) -> Sijection:
    p.need("beta", "a", "b", "x")
    return beta(p.a, p.b, p.x)


def _build_rho(p: SijParams) -> Sijection:
    p.need("rho", "a", "b", "x")
    return rho(p.a, p.b, p.x)


def _build_pi(p: SijParams) -> Sijection:
    p.need("pi", "k", "i")
    return pi(p.k, p.i)


def _build_sigma(p: SijParams) -> Sijection:
    p.need("sigma", "a", "b", "i")
    return sigma(p.a, p.b, p.i)


def _build_gamma_row(p: SijParams) -> Sijection:
    p.need("gamma_row", "k", "x")
    return gamma_row(p.k, p.x)


def _build_tau(p: SijParams) -> Sijection:
    p.need("tau", "k", "x")
    return tau(p.k, p.x)


def _build_iota_mt(p: SijParams) -> Sijection:
    p.need("iota_mt", "k")
    return iota_mt(p.k)


def _build_phi1(p: SijParams) -> Sijection:
    p.need("phi1", "k", "x")
    return phi1(p.k, p.x, SignMode.parse(p.mode))


def _build_phi3p(p: SijParams) -> Sijection:
    p.need("phi3p", "k", "x")
    return phi3p(p.k, p.x, SignMode.parse(p.mode))


def _build_phi4p(p: SijParams) -> Sijection:
    p.need("phi4p", "k", "x")
    return phi4p(p.k, p.x)


def _build_phi4pp(p: SijParams) -> Sijection:
    p.need("phi4pp", "k", "x")
    return phi4pp(p.k, p.x)


def _build_gamma(p: SijParams) -> Sijection:
    p.need("gamma", "k")
    return gamma_sij(p.k, p.x)


def _build_gmt_ar_sgt(p: SijParams) -> Sijection:
    p.need("gmt_ar_sgt", "k")
    return gmt_ar_sgt_sij(p.k, p.x)


# Statistics

def _beta_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return [(normal_statistic(phi.domain), Statistic("normal", lambda e: e[0]))]


def _rho_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    def rows(element) -> tuple:
        child, l = element
        return _sorted_rows(gt_rows(l, child))

    top = eta_top_statistic()
    return [
        (top, top),
        (Statistic("eta_row_1..n", rows), Statistic("eta_row_1..n", lambda e: rows(e[0]))),
    ]


def _pi_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return [(eta_row_statistic(p.k), eta_row_statistic(swap(p.k, p.i)))]


def _sigma_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    statistic = Statistic("eta_row", lambda e: eta_row(e[1], e[0]))
    return [(statistic, statistic)]


def _tau_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    k, x = tuple(p.k), p.x
    return [(
        Statistic("eta_row_1..n-1", lambda e: eta_row(k, e)[:-1]),
        Statistic("eta_row_1..n-1", lambda e: eta_row(replace(k, e.index + 1, x), e.child)[:-1]),
    )]


def _iota_mt_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    k = tuple(p.k)
    pairs = [(eta_mt_statistic(k), eta_mt_gmt_statistic(k))]
    if all(b - a >= 2 for a, b in zip(k, k[1:])):
        pairs.append((eta_inv_mt_statistic(k), eta_inv_gmt_statistic(k)))
    return pairs


def _phi1_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    top = stage_top_statistic()
    return [(top, top), phi1_inv_statistics()]


def _phi3p_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    top = stage_top_statistic()
    return [(top, top)]


def _phi4p_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return [phi4_inv_statistics(keep_arrow=False)]


def _phi4pp_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return [phi4_inv_statistics(keep_arrow=True)]


def _gamma_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    k = tuple(p.k)
    return [
        (eta_top_gmt_statistic(k), eta_top_sgt_statistic()),
        (eta_inv_gmt_statistic(k), eta_inv_sgt_statistic()),
    ]


def _weighted_statistics(p: SijParams, phi: Sijection) -> List[StatisticPair]:
    return list(zip(weight_statistics(p.k, "gmt"), weight_statistics(p.k, "arsgt")))


CATALOG: Dict[str, CatalogEntry] = {
    "interval_split": CatalogEntry(_build_interval_split, _normal_pair),
    "beta": CatalogEntry(_build_beta, _beta_statistics),
    "rho": CatalogEntry(_build_rho, _rho_statistics),
    "pi": CatalogEntry(_build_pi, _pi_statistics),
    "sigma": CatalogEntry(_build_sigma, _sigma_statistics),
    "gamma_row": CatalogEntry(_build_gamma_row, _normal_pair),
    "tau": CatalogEntry(_build_tau, _tau_statistics),
    "iota_mt": CatalogEntry(_build_iota_mt, _iota_mt_statistics),
    "phi1": CatalogEntry(_build_phi1, _phi1_statistics),
    "phi3p": CatalogEntry(_build_phi3p, _phi3p_statistics),
    "phi4p": CatalogEntry(_build_phi4p, _phi4p_statistics),
    "phi4pp": CatalogEntry(_build_phi4pp, _phi4pp_statistics),
    "gamma": CatalogEntry(_build_gamma, _gamma_statistics),
    "gmt_ar_sgt": CatalogEntry(_build_gmt_ar_sgt, _weighted_statistics),
}


def lookup(name: str) -> CatalogEntry:
    if name not in CATALOG:
        raise InterfaceError(f"Unknown sijection {name!r}; choose from {', '.join(sorted(CATALOG))}")
    return CATALOG[name]


def build(name: str, params: SijParams) -> Sijection:
    return lookup(name).build(params)


def statistic_pairs(name: str, params: SijParams, phi: Sijection) -> List[StatisticPair]:
    """The (domain, codomain) statistics `name` is compatible with."""
    return lookup(name).statistics(params, phi)
