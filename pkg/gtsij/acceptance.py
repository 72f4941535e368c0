"""
Acceptance suites.

Each suite checks one family of identities over a parameter grid and
returns a SuiteResult row (cases, failures, seconds, first witness). The
`quick` level shrinks every grid so that the whole run takes seconds; the
`full` level uses the complete grids. Results are written with pandas to
`<report_dir>/acceptance_<level>.<csv|json>`.
"""
import itertools
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd

from gtsij.catalog import SijParams, build, statistic_pairs
from gtsij.config import RunConfig
from gtsij.core.builders import explicit_sij, shuffled_matching
from gtsij.core.elements import Arrow
from gtsij.core.signed_set import SignedSet, from_signed, set_element_budget
from gtsij.core.sijection import SidedElement, Sijection, cod, compose, dom, identity_sij, product_sij
from gtsij.core.statistics import Statistic, check_compatibility
from gtsij.core.verify import describe, verify_sijection
from gtsij.errors import GtsijError
from gtsij.gamma.pipeline import gamma_stability_check, gamma_translate_check, same_graph
from gtsij.gamma.weighted import ar_sgt_weighted_sum, gmt_weighted_sum, relation_violations
from gtsij.patterns.ggt import ggt, ggt_param_sign, ggt_size_formula, random_params
from gtsij.patterns.gt import gt, gt_size_formula, restricted_count, restricted_set, row_profiles
from gtsij.patterns.integrability import check_partial_integrability
from gtsij.triangles.asm import asm_enumerate, asm_to_mt, eta_inv_asm, eta_inv_mt, mt_to_asm
from gtsij.triangles.monotone import arrow_rows_through, eta_top_sgt, is_partially_successive, mt, sgt_element, sgt_sign
from gtsij.triangles.transfer import m_multiplicity

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

LEVELS = ("quick", "full")
SEED = 20240229
ASM_COUNTS = {1: 1, 2: 2, 3: 7, 4: 42}

# A worked SGT element on k = (3,1,4,1), published with sign +1; the definitions give -1
SGT_SAMPLE_K = (3, 1, 4, 1)
SGT_SAMPLE = (
    ((2,), (3, 1), (4, 2, 1), (5, 2, 3, 1)),
    (Arrow.SE, Arrow.SESW, Arrow.SW, Arrow.SESW, Arrow.SW, Arrow.SW),
)


@dataclass
class SuiteResult:
    """One row of the acceptance report"""
    suite: str
    cases: int = 0
    failures: int = 0
    seconds: float = 0.0
    witness: str = ""      # First failing case, empty when all passed

    def check(self, ok: bool, witness: str) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if not self.witness:
                self.witness = witness
                logging.error(f"{self.suite}: {witness}")
        return ok

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class AcceptanceResult:
    """All suite rows of one run"""
    level: str
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_records(self) -> List[dict]:
        return [asdict(s) for s in self.suites]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.to_records(), columns=["suite", "cases", "failures", "seconds", "witness"])

    def lines(self) -> List[str]:
        lines = [
            f"{'PASS' if s.passed else 'FAIL'} {s.suite}: {s.cases} cases, {s.failures} failures, {s.seconds:.2f}s"
            + (f" ({s.witness})" if s.witness else "")
            for s in self.suites
        ]
        lines.append(f"{self.level}: {'all suites passed' if self.passed else 'FAILED'}")
        return lines


# Grids

def _values(level: str, full: Iterable[int], quick: Iterable[int]) -> List[int]:
    return list(full if level == "full" else quick)


def _rows(lengths: Iterable[int], values: Sequence[int]) -> List[Tuple[int, ...]]:
    return [k for n in lengths for k in itertools.product(values, repeat=n)]


def _pick(items: Sequence, limit: int, rng: random.Random) -> list:
    """All items when there are at most `limit`, else a reproducible sample."""
    items = list(items)
    if len(items) <= limit:
        return items
    return rng.sample(items, limit)


def _n_cap(level: str, config: RunConfig, full: int, quick: int) -> int:
    return min(full if level == "full" else quick, config.n_max)


# Suites

def suite_enumeration(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("enumeration")
    values = _values(level, range(0, 6), range(0, 4))
    for k in _rows(range(1, _n_cap(level, config, 4, 3) + 1), values):
        size, expected = gt(k).size, gt_size_formula(k)
        result.check(size == expected, f"#GT{k} = {size}, closed form {expected}")
    return result


def suite_restricted(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("restricted")
    values = _values(level, range(0, 5), range(0, 3))
    for k in _rows(range(1, _n_cap(level, config, 3, 3) + 1), values):
        for profile in row_profiles(k):
            size = restricted_set(k, profile).size
            expected = restricted_count(k, profile)
            result.check(
                size in (-1, 0, 1) and size == expected,
                f"GT{k} restricted to {profile}: {size}, expected {expected}",
            )
    return result


def suite_ggt(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("ggt")
    rng = random.Random(SEED)
    total, non_trees = (200, 30) if level == "full" else (40, 10)
    for case in range(total):
        n = rng.choice((2, 3))
        params = random_params(n, rng, tree=False) if case < non_trees else random_params(n, rng)
        k = tuple(rng.randint(0, 4) for _ in range(n))
        size, expected = ggt(k, params).size, ggt_size_formula(k, params)
        ok = size == expected and (ggt_param_sign(params) != 0 or size == 0)
        result.check(ok, f"#GGT{k} with {params.edges} = {size}, closed form {expected}")
    return result


def construction_cases(level: str, config: RunConfig) -> List[Tuple[str, SijParams]]:
    """(name, parameters) for every construction instance the validity suite runs."""
    rng = random.Random(SEED)
    full = level == "full"
    values = _values(level, range(0, 5), range(0, 3))
    xs = _values(level, range(-1, 7), (-1, 3))
    limit = 400 if full else 30
    n_max = _n_cap(level, config, 3, 3)
    cases: List[Tuple[str, SijParams]] = []

    for a, b, c in itertools.product(values, repeat=3):
        cases.append(("interval_split", SijParams(a=(a,), b=(b,), c=c)))
    for n in range(1, n_max + 1):
        pairs = [(row[:n], row[n:]) for row in itertools.product(values, repeat=2 * n)]
        for a, b in _pick(pairs, limit, rng):
            x = rng.choice(xs)
            cases.append(("beta", SijParams(a=a, b=b, x=x)))
            cases.append(("rho", SijParams(a=a, b=b, x=x)))
    for n in range(2, n_max + 1):
        for k in _pick(_rows([n], values), limit, rng):
            for i in range(1, n):
                cases.append(("pi", SijParams(k=k, i=i)))
            x = rng.choice(xs)
            cases.append(("gamma_row", SijParams(k=k, x=x)))
        for _ in range(limit // 4):
            a = [rng.choice(values) for _ in range(n)]
            b = [rng.choice(values) for _ in range(n)]
            i = rng.randint(1, n - 1)
            if rng.random() < 0.5:
                a[i], b[i] = a[i - 1], b[i - 1]
            else:
                a[i], b[i] = b[i - 1], a[i - 1]
            cases.append(("sigma", SijParams(a=tuple(a), b=tuple(b), i=i)))
    for k in _pick(_rows(range(1, n_max + 1), values), limit, rng):
        cases.append(("tau", SijParams(k=k, x=rng.choice(xs))))
    for k in _rows(range(1, n_max + 1), values):
        if all(p < q for p, q in zip(k, k[1:])):
            cases.append(("iota_mt", SijParams(k=k)))
    cases.append(("iota_mt", SijParams(k=(1, 3, 5))))

    gamma_values = _values(level, range(0, 4), range(0, 3))
    gamma_rows = _rows(range(1, n_max + 1), gamma_values) if full else _rows([1, 2], gamma_values)
    for k in gamma_rows:
        for direction in ("+", "-"):
            x = max(k) + len(k) if direction == "+" else min(k) - len(k)
            if len(k) >= 2:
                for mode in ("fk", "af"):
                    cases.append(("phi1", SijParams(k=k, x=x, mode=mode)))
                    cases.append(("phi3p", SijParams(k=k, x=x, mode=mode)))
                cases.append(("phi4p", SijParams(k=k, x=x)))
                cases.append(("phi4pp", SijParams(k=k, x=x)))
            cases.append(("gamma", SijParams(k=k, x=x)))
            cases.append(("gmt_ar_sgt", SijParams(k=k, x=x)))
    return cases


def _case_text(name: str, params: SijParams) -> str:
    return f"{name}({params.describe()})"


def suite_validity(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("validity")
    for name, params in construction_cases(level, config):
        try:
            report = verify_sijection(build(name, params))
        except GtsijError as exc:
            result.check(False, f"{_case_text(name, params)}: {exc}")
            continue
        result.check(report.valid, f"{_case_text(name, params)}: {report.summary()}")
    return result


class SwappedImagesSij(Sijection):
    """`inner` with the images of two same-class elements exchanged.

    Still a sijection, but it moves each of the two elements to where the
    other one should go.
    """

    name = "swapped_images"

    def __init__(self, inner: Sijection, first: SidedElement, second: SidedElement):
        super().__init__(inner.domain, inner.codomain)
        self.inner = inner
        self._swap = {first: second, second: first}
        self._back = {inner.apply(first): first, inner.apply(second): second}

    def _evaluate(self, item):
        if item in self._swap:
            return self.inner.apply(self._swap[item])
        if item in self._back:
            return self._swap[self._back[item]]
        return self.inner.apply(item)


def corrupt_images(phi: Sijection, statistic: Statistic) -> Sijection:
    """Swap the images of the first two plus domain elements with different statistic values."""
    plus = [e for e in phi.domain.elements() if e in phi.domain.plus]
    for first, second in itertools.combinations(plus, 2):
        if statistic(first) != statistic(second):
            return SwappedImagesSij(phi, dom(first), dom(second))
    return phi


def suite_compatibility(level: str, config: RunConfig, corrupt_pi: bool = False, **_) -> SuiteResult:
    result = SuiteResult("compatibility")
    for name, params in construction_cases(level, config):
        try:
            phi = build(name, params)
            pairs = statistic_pairs(name, params, phi)
            if corrupt_pi and name == "pi":
                phi = corrupt_images(phi, pairs[0][0])
            for on_domain, on_codomain in pairs:
                report = check_compatibility(phi, on_domain, on_codomain)
                result.check(report.compatible, f"{_case_text(name, params)}: {report.summary()}")
        except GtsijError as exc:
            result.check(False, f"{_case_text(name, params)}: {exc}")
    return result


def suite_asm(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("asm")
    for n in range(1, _n_cap(level, config, 4, 4) + 1):
        matrices = asm_enumerate(n)
        result.check(len(matrices) == ASM_COUNTS[n], f"#ASM_{n} = {len(matrices)}, expected {ASM_COUNTS[n]}")
        bottom = tuple(range(1, 2 * n, 2))
        triangles = mt(bottom)
        result.check(triangles.size == len(matrices), f"#MT{bottom} = {triangles.size}, #ASM_{n} = {len(matrices)}")
        for matrix in matrices:
            rows = asm_to_mt(matrix)
            result.check(mt_to_asm(rows) == matrix, f"roundtrip fails on {matrix}")
            result.check(eta_inv_asm(matrix) == eta_inv_mt(rows), f"eta_inv differs on {matrix}")
    element = sgt_element(*SGT_SAMPLE)
    result.check(sgt_sign(SGT_SAMPLE_K, element, stated=1) == -1, "sample SGT sign is not -1")
    result.check(eta_top_sgt(element) == 2, "sample SGT top is not 2")
    return result


@lru_cache(maxsize=None)
def _mt_empty(l: Tuple[int, ...]) -> bool:
    return mt(l).is_empty()


def suite_transfer(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("transfer")
    values = _values(level, range(0, 5), range(0, 4))
    ls = _values(level, range(-1, 6), range(-1, 5))
    for k in _rows(range(2, _n_cap(level, config, 4, 3) + 1), values):
        through = arrow_rows_through(k)
        for l in itertools.product(ls, repeat=len(k) - 1):
            value = m_multiplicity(k, l)
            brute = through[l].size if l in through else 0
            result.check(value == brute, f"#M_(k={k}, l={l}) = {value}, brute force {brute}")
            if is_partially_successive(l):
                result.check(_mt_empty(l), f"MT{l} is not empty for a partially successive row")
            else:
                result.check(value in (-1, 0, 1), f"#M_(k={k}, l={l}) = {value} outside {{0, 1, -1}}")
    return result


def suite_weighted(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("weighted")
    values = _values(level, range(0, 4), range(0, 3))
    for k in _rows(range(1, _n_cap(level, config, 3, 2) + 1), values):
        result.check(gmt_weighted_sum(k) == ar_sgt_weighted_sum(k), f"weighted sums differ for k={k}")
        for side in ("gmt", "arsgt"):
            broken = relation_violations(k, side)
            first = (broken["x_sum"] + broken["slots"])[:1]
            result.check(not first, f"{side} relation fails for k={k} at {first}")
    return result


def suite_stabilization(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("stabilization")
    values = _values(level, range(0, 4), range(0, 3))
    offsets = [d for d in config.x_offsets if d > 0] or [1, 3]
    shifts = range(-2, 3) if level == "full" else (-1, 2)
    for k in _rows([2], values):
        for direction in ("+", "-"):
            report = gamma_stability_check(k, direction, offsets)
            result.check(report.valid, f"Gamma{k} at {direction}: {report.summary()}")
            for t in shifts:
                report = gamma_translate_check(k, t, direction)
                result.check(report.valid, f"Gamma{k} shifted by {t} at {direction}: {report.summary()}")
    return result


def _random_signed(start: int, size: int, extra: int) -> SignedSet:
    """A signed set of the given size with `extra` cancelling pairs, on integers from `start`."""
    signs = [1] * (max(size, 0) + extra) + [-1] * (max(-size, 0) + extra)
    return from_signed((start + j, s) for j, s in enumerate(signs))


def engine_counterexample() -> Tuple[SidedElement, SidedElement]:
    """The two orders of (phi x id) and (id x phi) disagree on (B, B).

    S = ({A}, {}) and T = ({A, B}, {B'}) with A = 0, B = 1, B' = 2; phi
    sends A to A and pairs B with B'.
    """
    s = from_signed([(0, 1)])
    t = from_signed([(0, 1), (1, 1), (2, -1)])
    phi = explicit_sij(s, t, [(dom(0), cod(0)), (cod(1), cod(2))])
    left = compose(product_sij(phi, identity_sij(s)), product_sij(identity_sij(t), phi))
    right = compose(product_sij(identity_sij(s), phi), product_sij(phi, identity_sij(t)))
    return left.apply(cod((1, 1))), right.apply(cod((1, 1)))


def _flatten(item: SidedElement, left_nested: bool) -> SidedElement:
    element = item.element
    if left_nested:
        (a, b), c = element
    else:
        a, (b, c) = element
    return SidedElement(item.side, (a, b, c))


def suite_engine(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("engine")
    rng = random.Random(SEED)
    triples = 100 if level == "full" else 25
    for case in range(triples):
        size = rng.randint(-2, 2)
        sets = [_random_signed(10 * j, size, rng.randint(0, 2)) for j in range(4)]
        phi, psi, xi = (shuffled_matching(sets[j], sets[j + 1], rng) for j in range(3))
        report = same_graph(compose(compose(phi, psi), xi), compose(phi, compose(psi, xi)))
        result.check(report.valid, f"composition triple {case}: {report.summary()}")

        left = product_sij(product_sij(phi, psi), xi)
        right = product_sij(phi, product_sij(psi, xi))
        flat = product_sij(phi, psi, xi)
        for item in flat.items():
            a, b, c = item.element
            one = _flatten(left.apply(SidedElement(item.side, ((a, b), c))), True)
            two = _flatten(right.apply(SidedElement(item.side, (a, (b, c)))), False)
            if not result.check(one == two == flat.apply(item), f"product triple {case} at {describe(item)}"):
                break

    first, second = engine_counterexample()
    result.check(
        first == cod((1, 2)) and second == cod((2, 1)),
        f"counterexample gives {describe(first)} and {describe(second)}",
    )
    return result


def suite_integrability(level: str, config: RunConfig, **_) -> SuiteResult:
    result = SuiteResult("integrability")
    report = check_partial_integrability((0, 2, 4), 4 if level == "full" else 2)
    result.check(report.ok, report.summary())
    result.cases = max(result.cases, len(report.paths))
    return result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "enumeration": suite_enumeration,
    "restricted": suite_restricted,
    "ggt": suite_ggt,
    "validity": suite_validity,
    "compatibility": suite_compatibility,
    "asm": suite_asm,
    "transfer": suite_transfer,
    "weighted": suite_weighted,
    "stabilization": suite_stabilization,
    "engine": suite_engine,
    "integrability": suite_integrability,
}


def run_suite(name: str, level: str, config: RunConfig, corrupt_pi: bool = False) -> SuiteResult:
    """Run one suite and time it; worker processes enter here."""
    set_element_budget(config.element_budget)
    start = time.perf_counter()
    try:
        result = SUITES[name](level, config, corrupt_pi=corrupt_pi)
    except GtsijError as exc:
        result = SuiteResult(name)
        result.check(False, f"suite aborted: {exc}")
    result.seconds = round(time.perf_counter() - start, 3)
    logging.info(f"{name}: {result.cases} cases, {result.failures} failures in {result.seconds}s")
    return result


def save_report(result: AcceptanceResult, filepath: Union[str, Path], format: str = "csv") -> None:
    """Save the suite rows to file"""
    filepath = Path(filepath)
    filepath.parent.mkdir(parents=True, exist_ok=True)

    if format.lower() == "csv":
        result.to_frame().to_csv(filepath, index=False, encoding="utf-8")
    elif format.lower() == "json":
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(result.to_records(), f, indent=2, default=str)
    else:
        raise ValueError(f"Unsupported format: {format}")

    logging.info(f"Saved {len(result.suites)} suite results to {filepath}")


def run_acceptance(
    level: str = "quick",
    config: Optional[RunConfig] = None,
    suites: Optional[Sequence[str]] = None,
    corrupt_pi: bool = False,
) -> AcceptanceResult:
    """Run the acceptance suites.

    Args:
        level (str): 'quick' or 'full'.
        config (RunConfig, optional): Budget, grid caps, parallelism and report settings.
        suites (Sequence[str], optional): Subset of SUITES to run. Defaults to all of them.
        corrupt_pi (bool): Swap two images of every pi in the compatibility suite (a negative control).

    Returns:
        AcceptanceResult: One row per suite, in the order requested.
    """
    if level not in LEVELS:
        raise ValueError(f"Unknown acceptance level: {level}")
    config = config or RunConfig()
    names = list(suites or SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites: {unknown}")

    logging.info(f"Running {len(names)} {level} suites with parallelism {config.parallelism}")
    if config.parallelism > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            futures = [pool.submit(run_suite, name, level, config, corrupt_pi) for name in names]
            rows = [future.result() for future in futures]
    else:
        rows = [run_suite(name, level, config, corrupt_pi) for name in names]

    result = AcceptanceResult(level, rows)
    if config.report_dir:
        path = Path(config.report_dir) / f"acceptance_{level}.{config.report_format}"
        save_report(result, path, config.report_format)
    return result


def main():
    result = run_acceptance("quick")
    for line in result.lines():
        print(line)


if __name__ == '__main__':
    main()
