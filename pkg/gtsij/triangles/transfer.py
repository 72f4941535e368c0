"""
Transfer matrices for the multiplicity #M_{k,l}.

#M_{k,l} counts the arrow rows mu with l in mu(k), each weighted by
sign(mu) * sign(l in mu(k)). Reading mu one position at a time gives a
2-state transfer matrix per coordinate of l, chosen from the relative
position of k_i, k_{i+1} and l_i:

    #M_{k,l} = (1 0) T_{n-1} ... T_1 (1 1)^t
"""
from typing import Sequence

import numpy as np

from gtsij.errors import InterfaceError

A1 = np.array([[0, 1], [0, 1]], dtype=int)
A2 = np.array([[1, 0], [0, 0]], dtype=int)
A3 = np.array([[1, 0], [1, 0]], dtype=int)
A4 = np.array([[0, 1], [-1, 1]], dtype=int)
A5 = np.array([[1, -1], [1, -1]], dtype=int)
A6 = np.array([[0, 0], [1, 0]], dtype=int)
O = np.zeros((2, 2), dtype=int)


def transfer_matrix(a: int, b: int, x: int) -> np.ndarray:
    """T_i for k_i = a, k_{i+1} = b and l_i = x."""
    if b >= a + 2:
        if x == a:
            return A1
        if x == b - 1:
            return A2
        if a < x < b - 1:
            return A3
        return O
    if b == a + 1:
        return A4 if x == a else O
    if x == a:
        return -A5
    if x == b - 1:
        return -A6
    if b - 1 < x < a:
        return -A3
    return O


def m_multiplicity(k: Sequence[int], l: Sequence[int]) -> int:
    """#M_{k,l} in the signed (fk) convention, via the transfer matrices."""
    k, l = tuple(k), tuple(l)
    if len(l) != len(k) - 1:
        raise InterfaceError(f"l must have {len(k) - 1} entries for k={k}, got {l}")
    state = np.ones(2, dtype=int)
    for i, x in enumerate(l):
        state = transfer_matrix(k[i], k[i + 1], x) @ state
    return int(state[0])
