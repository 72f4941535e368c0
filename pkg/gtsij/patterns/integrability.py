"""
Path-independence spot check for the pi sijections.

A path is a sequence of adjacent swap positions whose product is the
identity permutation, so that the chained sijection runs from GT(k) back
to GT(k). On GT(k)+ every such chain must act as the identity.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gtsij.core.sijection import Side, dom
from gtsij.errors import InterfaceError
from gtsij.patterns.constructions import swap, swap_path_sij
from gtsij.patterns.gt import gt

Path = Tuple[int, ...]


@dataclass
class IntegrabilityReport:
    """Outcome of check_partial_integrability"""
    k: Tuple[int, ...]
    bound: int
    paths: List[Path] = field(default_factory=list)
    failure: Optional[Path] = None
    witness: Optional[object] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def summary(self) -> str:
        if self.ok:
            return f"{len(self.paths)} closed paths of length <= {self.bound} act as the identity on GT{self.k}+"
        return f"path {self.failure} moves {self.witness!r}"


def closed_paths(n: int, bound: int) -> List[Path]:
    """Swap sequences of length <= bound over positions 1..n-1 that return to the start."""
    start = tuple(range(n))
    paths = []
    for length in range(0, bound + 1, 2):
        for steps in itertools.product(range(1, n), repeat=length):
            current = start
            for i in steps:
                current = swap(current, i)
            if current == start:
                paths.append(steps)
    return paths


def check_partial_integrability(k: Sequence[int], bound: int) -> IntegrabilityReport:
    """Check that every closed pi-path of length <= bound fixes GT(k)+ pointwise.

    Args:
        k (Sequence[int]): A strictly increasing bottom row, at most three entries.
        bound (int): Longest path to try.

    Returns:
        IntegrabilityReport: The paths tried and the first one that fails.
    """
    k = tuple(k)
    if any(a >= b for a, b in zip(k, k[1:])):
        raise InterfaceError(f"Integrability check needs a strictly increasing k, got {k}")
    if not 1 <= len(k) <= 3:
        raise InterfaceError(f"Integrability check is limited to n <= 3, got n={len(k)}")
    report = IntegrabilityReport(k, bound)
    patterns = gt(k)
    plus = [e for e in patterns.elements() if e in patterns.plus]
    for path in closed_paths(len(k), bound):
        report.paths.append(path)
        chain = swap_path_sij(k, path)
        for element in plus:
            image = chain.apply(dom(element))
            if image.side is not Side.COD or image.element != element:
                report.failure = path
                report.witness = element
                logging.info(f"Integrability fails on {k} along {path}")
                return report
    logging.info(report.summary())
    return report
