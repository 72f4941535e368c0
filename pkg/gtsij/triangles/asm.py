"""
Alternating sign matrices and their monotone triangles.

An ASM is stored as a tuple of row tuples. The bijection with monotone
triangles takes column sums from the top, reads off the columns holding
a 1 in each partial sum, and adds j-1 to the j-th index so that rows fit
the half-open interlacing of GT(1,3,...,2n-1).
"""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from gtsij.core.signed_set import get_element_budget
from gtsij.errors import BudgetExceededError, InterfaceError, ParseError

Matrix = Tuple[Tuple[int, ...], ...]
Rows = Tuple[Tuple[int, ...], ...]


def _as_array(matrix) -> np.ndarray:
    array = np.asarray(matrix, dtype=int)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InterfaceError(f"Expected a square matrix, got shape {array.shape}")
    return array


def _to_tuple(array: np.ndarray) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in array)


def _alternates(line: np.ndarray) -> bool:
    """Partial sums stay in {0, 1} and the total is 1."""
    partial = np.cumsum(line)
    return bool(np.all((partial == 0) | (partial == 1)) and partial[-1] == 1)


def is_asm(matrix) -> bool:
    """True when every row and column alternates +1, -1, ..., +1 between zeros."""
    try:
        array = _as_array(matrix)
    except (InterfaceError, ValueError):
        return False
    if array.size == 0 or not np.all(np.isin(array, (-1, 0, 1))):
        return False
    return all(_alternates(row) for row in array) and all(_alternates(col) for col in array.T)


def _row_candidates(n: int) -> List[np.ndarray]:
    """Rows that alternate on their own: the nonzero entries read +1, -1, ..., +1."""
    candidates = []
    for code in np.ndindex(*([3] * n)):
        row = np.array(code, dtype=int) - 1
        if _alternates(row):
            candidates.append(row)
    return candidates


def asm_enumerate(n: int) -> List[Matrix]:
    """All n x n alternating sign matrices in lexicographic order of rows."""
    if n < 1:
        raise InterfaceError(f"ASM size must be >= 1, got {n}")
    budget = get_element_budget()
    candidates = _row_candidates(n)
    found: List[Matrix] = []

    def extend(rows: List[np.ndarray], column_sums: np.ndarray) -> None:
        if len(rows) == n:
            if np.all(column_sums == 1):
                found.append(_to_tuple(np.array(rows)))
                if len(found) > budget:
                    raise BudgetExceededError(len(found), budget, f"ASM_{n}")
            return
        for row in candidates:
            sums = column_sums + row
            if np.all((sums == 0) | (sums == 1)):
                rows.append(row)
                extend(rows, sums)
                rows.pop()

    extend([], np.zeros(n, dtype=int))
    found.sort()
    logging.debug(f"ASM_{n}: {len(found)} matrices")
    return found


def asm_to_mt(matrix) -> Rows:
    """Monotone triangle rows, top first, with bottom row (1, 3, ..., 2n-1)."""
    array = _as_array(matrix)
    if not is_asm(array):
        raise InterfaceError(f"Not an alternating sign matrix: {_to_tuple(array)}")
    partial = np.cumsum(array, axis=0)
    rows = []
    for line in partial:
        columns = np.flatnonzero(line == 1) + 1
        rows.append(tuple(int(d) + j for j, d in enumerate(columns)))
    return tuple(rows)


def mt_to_asm(rows: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of asm_to_mt."""
    rows = [tuple(row) for row in rows]
    n = len(rows)
    if n == 0 or any(len(row) != i + 1 for i, row in enumerate(rows)):
        raise InterfaceError(f"Monotone triangle rows must have lengths 1..n, got {rows}")
    partial = np.zeros((n + 1, n), dtype=int)
    for i, row in enumerate(rows, start=1):
        for j, b in enumerate(row):
            column = b - j - 1
            if not 0 <= column < n:
                raise InterfaceError(f"Entry {b} of row {i} is outside the {n}x{n} frame")
            partial[i, column] += 1
    array = np.diff(partial, axis=0)
    if not is_asm(array):
        raise InterfaceError(f"Rows {rows} do not form a monotone triangle over (1,3,...,{2 * n - 1})")
    return _to_tuple(array)


def eta_inv_asm(matrix) -> int:
    """sum over i < i', j' <= j of a_{ij} a_{i'j'}."""
    array = _as_array(matrix)
    above = np.cumsum(array, axis=0)
    prefix = np.cumsum(array, axis=1)
    return int(np.sum(above[:-1] * prefix[1:]))


def eta_inv_mt(rows: Sequence[Sequence[int]]) -> int:
    """#{(i, j): b_{i+1,j} <= b_{i,j} = b_{i+1,j+1} - 1}, rows read top first."""
    count = 0
    for upper, lower in zip(rows, rows[1:]):
        for j, b in enumerate(upper):
            if lower[j] <= b == lower[j + 1] - 1:
                count += 1
    return count


def asm_from_text(text: str) -> Matrix:
    """Whitespace separated integers, one row per line; blank lines and # comments skipped."""
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(v) for v in line.split()))
        except ValueError:
            raise ParseError(f"line {number}: non-integer entry in {raw!r}")
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ParseError(f"Expected a square matrix, got rows of lengths {[len(r) for r in rows]}")
    if not is_asm(rows):
        raise ParseError(f"Not an alternating sign matrix: {tuple(rows)}")
    return tuple(rows)


def asm_to_text(matrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in _to_tuple(_as_array(matrix))) + "\n"
