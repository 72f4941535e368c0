"""
Sijections between unions of Gelfand-Tsetlin signed sets.

    beta       prod [a_i,b_i)  <=>  union over m of [m_1,m_2) x ... x [m_n,x)
    rho        union of GT(l) over prod [a_i,b_i)  <=>  union over m of GT(m, x)
    pi         GT(k)  <=>  -GT(k with k_i and k_{i+1} swapped)
    sigma      union of GT(l) over a box symmetric in coordinates i, i+1  <=>  empty
    gamma_row  prod [k_i,k_{i+1})  <=>  the boxes with one k_i replaced by x (and the doubled ones)
    tau        GT(k)  <=>  union over i of GT(k with k_i replaced by x)

Here m runs over S_1 x ... x S_n with S_i = ({a_i},{b_i}); its coordinates
are Tagged(0, a_i) or Tagged(1, b_i). Positions i are 1-based, as in the
formulas; everything else is 0-based.
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from gtsij.core.builders import (
    explicit_sij,
    interval_split,
    multi_split,
    pair_cancel,
    product_split,
    relabel_sij,
)
from gtsij.core.elements import Tagged
from gtsij.core.signed_set import (
    SignedSet,
    box,
    cartesian_product,
    disjoint_union,
    indexed_union,
    interval,
    opposite,
    signed_pair,
)
from gtsij.core.sijection import (
    Sijection,
    cod,
    compose,
    compose_all,
    dom,
    fiberwise_over,
    identity_fibers,
    identity_sij,
    indexed_union_sij,
    opposite_sij,
    product_sij,
    union_sij,
)
from gtsij.errors import InterfaceError
from gtsij.patterns.gt import _gt, chain

Bounds = List[Tuple[int, int]]


def m_values(m) -> Tuple[int, ...]:
    """The integers carried by an element of S_1 x ... x S_n."""
    return tuple(t.child for t in m)


def pair_index(a: Sequence[int], b: Sequence[int]) -> SignedSet:
    """S_1 x ... x S_n with S_i = ({a_i},{b_i})."""
    return cartesian_product([signed_pair(ai, bi) for ai, bi in zip(a, b)])


def swap(k: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    """k with entries i and i+1 (1-based) exchanged."""
    return k[:i - 1] + (k[i], k[i - 1]) + k[i + 1:]


def replace(k: Tuple[int, ...], i: int, x: int) -> Tuple[int, ...]:
    """k with entry i (1-based) replaced by x."""
    return k[:i - 1] + (x,) + k[i:]


def moved(k: Tuple[int, ...], src: int, dst: int) -> Tuple[int, ...]:
    """k with the entry at position src (1-based) moved to position dst."""
    rest = k[:src - 1] + k[src:]
    return rest[:dst - 1] + (k[src - 1],) + rest[dst - 1:]


def _gt_of_child(t) -> SignedSet:
    return _gt(t.child)


# beta and rho

@lru_cache(maxsize=None)
def _beta(a: Tuple[int, ...], b: Tuple[int, ...], x: int) -> Sijection:
    n = len(a)
    bounds = list(zip(a, b))
    codomain = indexed_union(pair_index(a, b), lambda m: box(chain(m_values(m) + (x,))))
    if n == 1:
        split = interval_split(a[0], b[0], x)
        ends = (a[0], b[0])
        return compose_all(
            relabel_sij(box(bounds), split.domain, lambda l: l[0]),
            split,
            relabel_sij(split.codomain, codomain, lambda t: ((t.child,), (Tagged(t.index, ends[t.index]),))),
        )

    rest = _beta(a[1:], b[1:], x)
    first = interval(a[0], b[0])

    def fiber(m_rest) -> Sijection:
        tail = box(chain(m_values(m_rest) + (x,)))
        return product_sij(interval_split(a[0], b[0], m_rest[0].child), identity_sij(tail))

    spread = fiberwise_over(pair_index(a[1:], b[1:]), fiber)
    ends = (a[0], b[0])
    return compose_all(
        relabel_sij(box(bounds), cartesian_product([first, rest.domain]), lambda l: (l[0], l[1:])),
        product_sij(identity_sij(first), rest),
        relabel_sij(
            cartesian_product([first, rest.codomain]),
            spread.domain,
            lambda e: ((e[0], e[1][0]), e[1][1]),
        ),
        spread,
        relabel_sij(
            spread.codomain,
            codomain,
            lambda e: ((e[0][0].child,) + e[0][1], (Tagged(e[0][0].index, ends[e[0][0].index]),) + e[1]),
        ),
    )


def beta(a: Sequence[int], b: Sequence[int], x: int) -> Sijection:
    """prod [a_i,b_i) <=> union over m in S_1 x ... x S_n of [m_1,m_2) x ... x [m_n,x).

    Codomain elements are (l, m); the sijection preserves l.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or not a:
        raise InterfaceError(f"beta needs equal non-empty lengths, got {a} and {b}")
    return _beta(a, b, x)


@lru_cache(maxsize=None)
def _rho(a: Tuple[int, ...], b: Tuple[int, ...], x: int) -> Sijection:
    along = _beta(a, b, x)

    def on_codomain(lm):
        return _gt(lm[0])

    lifted = indexed_union_sij(along, _gt, on_codomain, identity_fibers(_gt, on_codomain))
    target = indexed_union(pair_index(a, b), lambda m: _gt(m_values(m) + (x,)))
    return compose(
        lifted,
        relabel_sij(lifted.codomain, target, lambda e: ((e[0], e[1][0]), e[1][1])),
    )


def rho(a: Sequence[int], b: Sequence[int], x: int) -> Sijection:
    """Union of GT(l) over prod [a_i,b_i) <=> union of GT(m, x) over m.

    Domain elements are (A, l); codomain elements are ((A, l), m) with
    (A, l) in GT(m_1, ..., m_n, x). The pattern A is never changed.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or not a:
        raise InterfaceError(f"rho needs equal non-empty lengths, got {a} and {b}")
    return _rho(a, b, x)


# pi and sigma

def _pi_plan(k: Tuple[int, ...], i: int):
    """Coordinates to split and where each resulting term goes.

    A route is either None (the term is the target box) or the sigma
    position cancelling it.
    """
    n = len(k)
    if i == 1:
        return [(1, k[0])], [1, None]
    if i == n - 1:
        return [(n - 3, k[n - 1])], [None, n - 2]
    x2, x3 = k[i - 1], k[i]
    return [(i - 2, x3), (i, x2)], [i, None, i - 1, i - 1]


@lru_cache(maxsize=None)
def _pi(k: Tuple[int, ...], i: int) -> Sijection:
    n = len(k)
    target = opposite(_gt(swap(k, i)))
    if n == 2:
        return relabel_sij(_gt(k), target, lambda e: e)

    splits, routes = _pi_plan(k, i)
    spread, terms = multi_split(chain(k), splits)
    lifted = indexed_union_sij(spread, _gt, _gt_of_child, identity_fibers(_gt, _gt_of_child))
    grouped = disjoint_union([indexed_union(box(term), _gt) for term in terms])
    parts = []
    for term, route in zip(terms, routes):
        if route is None:
            parts.append(identity_sij(indexed_union(box(term), _gt)))
        else:
            lows, highs = zip(*term)
            parts.append(_sigma(lows, highs, route))
    cancelled = union_sij(parts)
    return compose_all(
        lifted,
        relabel_sij(lifted.codomain, grouped, lambda e: Tagged(e[1].index, (e[0], e[1].child))),
        cancelled,
        relabel_sij(cancelled.codomain, target, lambda e: e.child),
    )


def pi(k: Sequence[int], i: int) -> Sijection:
    """GT(k) <=> -GT(k with k_i and k_{i+1} swapped), compatible with eta_row."""
    k = tuple(k)
    if not 1 <= i <= len(k) - 1:
        raise InterfaceError(f"pi needs 1 <= i <= {len(k) - 1}, got i={i}")
    return _pi(k, i)


def _same_support(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
    if p[0] == p[1] or q[0] == q[1]:
        return True
    return {p[0], p[1]} == {q[0], q[1]}


@lru_cache(maxsize=None)
def _sigma(a: Tuple[int, ...], b: Tuple[int, ...], i: int) -> Sijection:
    def partner(l):
        return swap(l, i)

    def leads(l) -> bool:
        return l[i - 1] > l[i]

    return pair_cancel(box(list(zip(a, b))), _gt, partner, lambda l: _pi(l, i), leads)


def sigma(a: Sequence[int], b: Sequence[int], i: int) -> Sijection:
    """Union of GT(l) over prod [a_j,b_j) <=> (empty).

    Coordinates i and i+1 must range over the same values.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b) or not 1 <= i <= len(a) - 1:
        raise InterfaceError(f"sigma needs 1 <= i < n and equal lengths, got i={i}, a={a}, b={b}")
    if not _same_support((a[i - 1], b[i - 1]), (a[i], b[i])):
        raise InterfaceError(
            f"sigma: coordinates {i} and {i + 1} range over different values "
            f"([{a[i - 1]},{b[i - 1]}) vs [{a[i]},{b[i]}))"
        )
    return _sigma(a, b, i)


# gamma_row and tau

def gamma_row_parts(k: Sequence[int], x: int) -> List[Bounds]:
    """Box bounds of the gamma_row codomain, in tag order.

    Tags 0..n-1 replace k_i by x; tags n..2n-3 replace the factors i and
    i+1 by [k_{i+1}, x).
    """
    k = tuple(k)
    n = len(k)
    parts = [chain(replace(k, i, x)) for i in range(1, n + 1)]
    for i in range(1, n - 1):
        doubled = chain(k)
        doubled[i - 1] = (k[i], x)
        doubled[i] = (k[i], x)
        parts.append(doubled)
    return parts


def _gamma_merge(w: Bounds, k: Tuple[int, ...], x: int) -> Sijection:
    """[k_{n-2},x) x [k_{n-1},k_n) <=> A_{n-1} + A_n + B_{n-2} on the last two factors."""
    n = len(k)
    first = product_split(w, n - 2, x)
    low = list(w)
    low[n - 2] = (k[n - 2], x)
    high = list(w)
    high[n - 2] = (x, k[n - 1])
    second = union_sij([product_split(low, n - 3, k[n - 2]), identity_sij(box(high))])
    below = list(low)
    below[n - 3] = (k[n - 3], k[n - 2])
    doubled = list(low)
    doubled[n - 3] = (k[n - 2], x)
    target = disjoint_union([box(high), box(below), box(doubled)])

    def route(e):
        if e.index == 1:
            return Tagged(0, e.child)
        return Tagged(1 + e.child.index, e.child.child)

    return compose_all(first, second, relabel_sij(second.codomain, target, route))


@lru_cache(maxsize=None)
def _gamma_row(k: Tuple[int, ...], x: int) -> Sijection:
    n = len(k)
    codomain = disjoint_union([box(p) for p in gamma_row_parts(k, x)])
    if n == 2:
        split = product_split(chain(k), 0, x)
        return compose(split, relabel_sij(split.codomain, codomain, lambda t: Tagged(1 - t.index, t.child)))

    inner = _gamma_row(k[:-1], x)
    last = interval(k[-2], k[-1])
    grown = [p + [(k[-2], k[-1])] for p in gamma_row_parts(k[:-1], x)]
    w = n - 2
    merged = union_sij([
        _gamma_merge(p, k, x) if j == w else identity_sij(box(p)) for j, p in enumerate(grown)
    ])

    def final(e):
        if e.index < w:
            return e
        if e.index == w:
            return Tagged((n - 2, n - 1, 2 * n - 3)[e.child.index], e.child.child)
        return Tagged(e.index + 1, e.child)

    return compose_all(
        relabel_sij(box(chain(k)), cartesian_product([inner.domain, last]), lambda l: (l[:-1], l[-1])),
        product_sij(inner, identity_sij(last)),
        relabel_sij(
            cartesian_product([inner.codomain, last]),
            merged.domain,
            lambda e: Tagged(e[0].index, e[0].child + (e[1],)),
        ),
        merged,
        relabel_sij(merged.codomain, codomain, final),
    )


def gamma_row(k: Sequence[int], x: int) -> Sijection:
    """prod [k_i,k_{i+1}) <=> the disjoint union of boxes listed by gamma_row_parts."""
    k = tuple(k)
    if len(k) < 2:
        raise InterfaceError(f"gamma_row needs n >= 2, got k={k}")
    return _gamma_row(k, x)


@lru_cache(maxsize=None)
def _tau(k: Tuple[int, ...], x: int) -> Sijection:
    n = len(k)
    target = disjoint_union([_gt(replace(k, i, x)) for i in range(1, n + 1)])
    if n == 1:
        return explicit_sij(_gt(k), target, [(dom(k[0]), cod(Tagged(0, x)))])

    along = _gamma_row(k, x)
    lifted = indexed_union_sij(along, _gt, _gt_of_child, identity_fibers(_gt, _gt_of_child))
    parts = gamma_row_parts(k, x)
    grouped = disjoint_union([indexed_union(box(p), _gt) for p in parts])
    pieces = []
    for j, p in enumerate(parts):
        if j < n:
            pieces.append(identity_sij(indexed_union(box(p), _gt)))
        else:
            lows, highs = zip(*p)
            pieces.append(_sigma(lows, highs, j - n + 1))
    cancelled = union_sij(pieces)
    return compose_all(
        lifted,
        relabel_sij(lifted.codomain, grouped, lambda e: Tagged(e[1].index, (e[0], e[1].child))),
        cancelled,
        relabel_sij(cancelled.codomain, target, lambda e: e),
    )


def tau(k: Sequence[int], x: int) -> Sijection:
    """GT(k) <=> union over i of GT(k with k_i replaced by x); part i-1 holds position i."""
    k = tuple(k)
    if not k:
        raise InterfaceError("tau needs a non-empty bottom row")
    return _tau(k, x)


def swap_path_sij(k: Sequence[int], steps: Sequence[int]) -> Sijection:
    """The chain pi_{k,i_1}, -pi_{k',i_2}, pi_{k'',i_3}, ... for the swap positions `steps`.

    GT(k) <=> (-1)^r GT(k permuted by the swaps), r = len(steps).
    """
    k = tuple(k)
    if not k:
        raise InterfaceError("swap paths need a non-empty bottom row")
    result = identity_sij(_gt(k))
    current = k
    flipped = False
    for i in steps:
        if not 1 <= i <= len(k) - 1:
            raise InterfaceError(f"swap position {i} outside 1..{len(k) - 1}")
        step = _pi(current, i)
        if flipped:
            step = opposite_sij(step)
        result = compose(result, step)
        current = swap(current, i)
        flipped = not flipped
    return result


def move_sij(k: Sequence[int], src: int, dst: int) -> Sijection:
    """GT(k) <=> (-1)^{|src-dst|} GT(k with entry src moved to dst), by adjacent swaps."""
    k = tuple(k)
    n = len(k)
    if not (1 <= src <= n and 1 <= dst <= n):
        raise InterfaceError(f"move_sij positions must lie in 1..{n}, got {src} -> {dst}")
    if src == dst:
        return identity_sij(_gt(k))
    steps = range(src, dst) if src < dst else range(src - 1, dst - 1, -1)
    logging.debug(f"move {src}->{dst} on {k} uses {abs(src - dst)} swaps")
    return swap_path_sij(k, list(steps))
