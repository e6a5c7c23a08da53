"""Brute-force enumeration of d-dimensional partitions (finite order ideals of N^d).

Each ideal is generated exactly once, as the lexicographically sorted sequence
of its boxes: lex order extends the coordinatewise order, so every prefix of
that sequence is again an ideal.  A box is therefore only ever added at an
addable position lexicographically after the last added box.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .classes import WEIGHT, WeightPoly
from .series import TruncSeries

__all__ = [
    "OrderIdeal",
    "RefinedStats",
    "ResourceCeilingError",
    "CEILINGS",
    "count_dpartitions",
    "count_table",
    "iter_ideals",
    "stats",
    "refined_table",
    "refined_sum",
]

# largest n enumerated without an explicit override
CEILINGS = {1: 1000, 2: 40, 3: 14, 4: 10}
DEFAULT_CEILING = 8


class ResourceCeilingError(RuntimeError):
    pass


@dataclass(frozen=True)
class OrderIdeal:
    dim: int
    boxes: frozenset

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        boxes = frozenset(tuple(b) for b in self.boxes)
        for b in boxes:
            if len(b) != self.dim or any(x < 0 for x in b):
                raise ValueError(f"bad box {b} for dimension {self.dim}")
            for i, x in enumerate(b):
                if x and b[:i] + (x - 1,) + b[i + 1 :] not in boxes:
                    raise ValueError(f"not downward closed at {b}")
        object.__setattr__(self, "boxes", boxes)

    @property
    def size(self):
        return len(self.boxes)

    def transpose_xy(self):
        return OrderIdeal(self.dim, frozenset((b[1], b[0]) + b[2:] for b in self.boxes))


class RefinedStats(NamedTuple):
    w_minus: int
    w_zero: int
    w_plus: int


def stats(ideal):
    """Count boxes of a plane partition with x - y < 0, = 0, > 0."""
    if ideal.dim != 3:
        raise ValueError("refined statistics are defined for dim = 3 only")
    m = z = p = 0
    for x, y, _ in ideal.boxes:
        if x < y:
            m += 1
        elif x == y:
            z += 1
        else:
            p += 1
    return RefinedStats(m, z, p)


def check_ceiling(d, n, allow_large=False):
    limit = CEILINGS.get(d, DEFAULT_CEILING)
    if n > limit and not allow_large:
        raise ResourceCeilingError(
            f"enumerating {d}-dimensional partitions up to n = {n} exceeds the ceiling n = {limit}"
        )


def _addable(q, boxes):
    for i, x in enumerate(q):
        if x and q[:i] + (x - 1,) + q[i + 1 :] not in boxes:
            return False
    return True


def _children(p, cand_after, boxes, d):
    new = [q for q in (p[:i] + (p[i] + 1,) + p[i + 1 :] for i in range(d)) if _addable(q, boxes)]
    if not new:
        return cand_after
    return sorted(cand_after + new)


def _walk(boxes, cand, depth, n_max, d, visit):
    """Depth-first walk below a node; ``visit(depth, box)`` is called per added box."""
    for idx, p in enumerate(cand):
        boxes.add(p)
        visit(depth + 1, p, +1)
        if depth + 1 < n_max:
            _walk(boxes, _children(p, cand[idx + 1 :], boxes, d), depth + 1, n_max, d, visit)
        visit(depth + 1, p, -1)
        boxes.discard(p)


def _frontier_nodes(d, split_depth, n_max):
    """All nodes at ``split_depth``: (sorted boxes, candidates), plus counts above it."""
    origin = (0,) * d
    counts = [0] * (n_max + 1)
    counts[0] = 1
    level = [((), [origin])]
    for depth in range(split_depth):
        nxt = []
        for boxes_t, cand in level:
            boxes = set(boxes_t)
            for idx, p in enumerate(cand):
                boxes.add(p)
                nxt.append((boxes_t + (p,), _children(p, cand[idx + 1 :], boxes, d)))
                boxes.discard(p)
        level = nxt
        counts[depth + 1] = len(level)
    return counts, level


def _count_subtree(args):
    d, n_max, depth, boxes_t, cand = args
    counts = [0] * (n_max + 1)

    def visit(k, p, sign):
        if sign > 0:
            counts[k] += 1

    _walk(set(boxes_t), cand, depth, n_max, d, visit)
    return counts


def _default_threads():
    env = os.environ.get("MOTIVIC_HILB_THREADS")
    return int(env) if env else 1


def count_table(d, n_max, threads=None, allow_large=False):
    """``[#ideals of size n in N^d for n in 0..n_max]``."""
    if d < 1 or n_max < 0:
        raise ValueError("need d >= 1 and n >= 0")
    check_ceiling(d, n_max, allow_large)
    threads = threads or _default_threads()
    split = min(n_max, 3)
    counts, level = _frontier_nodes(d, split, n_max)
    jobs = [(d, n_max, split, b, c) for b, c in level] if split < n_max else []
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_count_subtree, jobs))
    else:
        results = [_count_subtree(j) for j in jobs]
    for r in results:
        for k in range(split + 1, n_max + 1):
            counts[k] += r[k]
    return counts


def count_dpartitions(d, n, threads=None, allow_large=False):
    """Number of order ideals of size ``n`` in ``N^d``."""
    return count_table(d, n, threads=threads, allow_large=allow_large)[n]


def iter_ideals(d, n_max):
    """Yield every ideal of size <= n_max (for small n only)."""
    check_ceiling(d, n_max)
    origin = (0,) * d
    yield OrderIdeal(d, frozenset())

    def rec(boxes, cand, depth):
        for idx, p in enumerate(cand):
            boxes.add(p)
            yield OrderIdeal(d, frozenset(boxes))
            if depth + 1 < n_max:
                yield from rec(boxes, _children(p, cand[idx + 1 :], boxes, d), depth + 1)
            boxes.discard(p)

    if n_max > 0:
        yield from rec(set(), [origin], 0)


def _refined_subtree(args):
    n_max, depth, boxes_t, cand, start = args
    table = [Counter() for _ in range(n_max + 1)]
    state = list(start)

    def visit(k, p, sign):
        x, y = p[0], p[1]
        i = 0 if x < y else (1 if x == y else 2)
        state[i] += sign
        if sign > 0:
            table[k][tuple(state)] += 1

    _walk(set(boxes_t), cand, depth, n_max, 3, visit)
    return table


def refined_table(n_max, threads=None, allow_large=False):
    """``table[n][(w_-, w_0, w_+)]`` = number of plane partitions of n with those statistics."""
    check_ceiling(3, n_max, allow_large)
    threads = threads or _default_threads()
    split = min(n_max, 3)
    _, level = _frontier_nodes(3, split, n_max)
    table = [Counter() for _ in range(n_max + 1)]
    table[0][(0, 0, 0)] = 1
    # nodes above the split depth
    for ideal in iter_ideals(3, split):
        if ideal.size:
            table[ideal.size][tuple(stats(ideal))] += 1
    jobs = []
    if split < n_max:
        for boxes_t, cand in level:
            start = stats(OrderIdeal(3, frozenset(boxes_t)))
            jobs.append((n_max, split, boxes_t, cand, tuple(start)))
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_refined_subtree, jobs))
    else:
        results = [_refined_subtree(j) for j in jobs]
    for r in results:
        for k in range(split + 1, n_max + 1):
            table[k].update(r[k])
    return table


def refined_sum(n_max, delta, threads=None, table=None):
    """``sum_alpha t^|alpha| q^((w_- - w_+ + 2 delta w_0)/2)`` over plane partitions."""
    two_delta = Fraction(delta) * 2
    if two_delta.denominator != 1:
        raise ValueError(f"delta = {delta} is not a half-integer")
    two_delta = int(two_delta)
    if table is None:
        table = refined_table(n_max, threads=threads)
    coeffs = []
    for n in range(n_max + 1):
        terms = Counter()
        for (wm, w0, wp), cnt in table[n].items():
            terms[wm - wp + two_delta * w0] += cnt
        coeffs.append(WeightPoly(dict(terms)))
    return TruncSeries(coeffs, WEIGHT)
