"""
Generalized Gelfand-Tsetlin patterns.

Row i (1 <= i <= n-1, counted from the top) is drawn from
[k_{p_{i,1}}, k_{q_{i,1}}) x ... x [k_{p_{i,i}}, k_{q_{i,i}}), where k is
the row below it. The edges p_{i,j} -> q_{i,j} form a graph G_i on the
vertices 1..i+1; the sign of the parameters vanishes unless every G_i is
a tree.
"""
import logging
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from gtsij.core.signed_set import SignedSet, box, indexed_union, singleton
from gtsij.errors import InterfaceError, ParseError
from gtsij.patterns.gt import gt_size_formula, sgn_seq

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GGTParams:
    """Parameters p_{i,j}, q_{i,j}; edges[i-1][j-1] is the pair (p_{i,j}, q_{i,j})"""
    edges: Tuple[Tuple[Edge, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.edges, start=1):
            if len(row) != i:
                raise InterfaceError(f"GGT parameters: row {i} needs {i} edges, got {len(row)}")
            for j, (p, q) in enumerate(row, start=1):
                if not (1 <= p <= i + 1 and 1 <= q <= i + 1):
                    raise InterfaceError(f"GGT parameters: p/q at ({i},{j}) must lie in 1..{i + 1}, got ({p},{q})")

    @property
    def n(self) -> int:
        """Length of the bottom row these parameters fit."""
        return len(self.edges) + 1

    def row(self, i: int) -> Tuple[Edge, ...]:
        return self.edges[i - 1]

    def truncated(self, n: int) -> "GGTParams":
        """The parameters of the top n-1 rows."""
        return GGTParams(self.edges[:n - 1])

    @classmethod
    def classical(cls, n: int) -> "GGTParams":
        """p_{i,j} = j, q_{i,j} = j+1: the ordinary GT patterns."""
        return cls(tuple(tuple((j, j + 1) for j in range(1, i + 1)) for i in range(1, n)))

    @classmethod
    def from_mapping(cls, n: int, values: Dict[Tuple[int, int], Edge]) -> "GGTParams":
        missing = [(i, j) for i in range(1, n) for j in range(1, i + 1) if (i, j) not in values]
        if missing:
            raise InterfaceError(f"GGT parameters missing for {missing}")
        return cls(tuple(tuple(tuple(values[(i, j)]) for j in range(1, i + 1)) for i in range(1, n)))


def parse_params(text: str, n: Optional[int] = None) -> GGTParams:
    """Read `i j p q` lines (blank lines and # comments are skipped)."""
    values: Dict[Tuple[int, int], Edge] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f"line {number}: expected 'i j p q', got {raw!r}")
        try:
            i, j, p, q = (int(f) for f in fields)
        except ValueError:
            raise ParseError(f"line {number}: non-integer field in {raw!r}")
        if (i, j) in values:
            raise ParseError(f"line {number}: duplicate entry for ({i},{j})")
        values[(i, j)] = (p, q)
    if n is None:
        n = max((i for i, _ in values), default=0) + 1
    return GGTParams.from_mapping(n, values)


def load_params(path: str, n: Optional[int] = None) -> GGTParams:
    with open(path, "r") as f:
        return parse_params(f.read(), n)


def params_to_text(params: GGTParams) -> str:
    lines = []
    for i, row in enumerate(params.edges, start=1):
        for j, (p, q) in enumerate(row, start=1):
            lines.append(f"{i} {j} {p} {q}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _ggt(k: Tuple[int, ...], edges: Tuple[Tuple[Edge, ...], ...]) -> SignedSet:
    if len(k) == 1:
        return singleton(k[0])
    bounds = [(k[p - 1], k[q - 1]) for p, q in edges[len(k) - 2]]
    below = edges[:len(k) - 2]
    return indexed_union(box(bounds), lambda l: _ggt(l, below))


def ggt(k: Sequence[int], params: GGTParams) -> SignedSet:
    """The signed set GGT(k; p, q); elements are encoded like those of GT(k)."""
    k = tuple(k)
    if params.n != len(k):
        raise InterfaceError(f"Parameters fit bottom rows of length {params.n}, got k={k}")
    return _ggt(k, params.edges)


def is_tree(vertices: int, edges: Sequence[Edge]) -> bool:
    """Undirected check on vertices 1..vertices: connected and acyclic."""
    parent = list(range(vertices + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for p, q in edges:
        rp, rq = find(p), find(q)
        if rp == rq:
            return False
        parent[rp] = rq
    return len(edges) == vertices - 1


def _distances(vertices: int, edges: Sequence[Edge], root: int) -> Dict[int, int]:
    neighbours: Dict[int, List[int]] = {v: [] for v in range(1, vertices + 1)}
    for p, q in edges:
        neighbours[p].append(q)
        neighbours[q].append(p)
    distance = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in neighbours[v]:
            if w not in distance:
                distance[w] = distance[v] + 1
                queue.append(w)
    return distance


def row_sign(i: int, edges: Sequence[Edge], root: int = 1) -> int:
    """Contribution of G_i: (-1)^{#{j: p_{i,j} = r_i(j)}} * sgn(r_i), with r_i(0) = root."""
    if not is_tree(i + 1, edges):
        return 0
    distance = _distances(i + 1, edges, root)
    r = [root]
    flips = 0
    for p, q in edges:
        if distance[p] > distance[q]:
            r.append(p)
            flips += 1
        else:
            r.append(q)
    return (-1) ** flips * Permutation([v - 1 for v in r]).signature()


def ggt_param_sign(params: GGTParams) -> int:
    """sgn({p_{i,j}},{q_{i,j}}) in {-1, 0, 1}."""
    sign = 1
    for i, row in enumerate(params.edges, start=1):
        sign *= row_sign(i, row)
        if sign == 0:
            break
    return sign


def ggt_size_formula(k: Sequence[int], params: GGTParams) -> int:
    """sgn(k) * sgn(params) * #GT(k sorted increasingly)."""
    k = tuple(k)
    sign = sgn_seq(k) * ggt_param_sign(params)
    if sign == 0:
        return 0
    return sign * abs(gt_size_formula(sorted(k)))


def random_params(n: int, rng: random.Random, tree: Optional[bool] = None) -> GGTParams:
    """Random parameters; `tree` forces (True) or forbids (False) all rows being trees."""
    for _ in range(1000):
        edges = tuple(
            tuple((rng.randint(1, i + 1), rng.randint(1, i + 1)) for _ in range(i)) for i in range(1, n)
        )
        params = GGTParams(edges)
        if tree is None or (ggt_param_sign(params) != 0) == tree:
            return params
    logging.warning(f"No random GGT parameters with tree={tree} found for n={n}; using the classical ones")
    return GGTParams.classical(n)
