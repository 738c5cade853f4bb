"""Exact closed-form counts of lattice classes by (n, r, k, h).

Everything is a nested sum over the restricted partition numbers
``partition_count(n, k)``.  Empty sums are 0, and each count returns 0
outside the parameter range it is stated for.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Callable

Sequence = Callable[[int], int]


@lru_cache(maxsize=None)
def partition_count(n: int, k: int) -> int:
    """Partitions of n into exactly k positive parts."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return partition_count(n - 1, k - 1) + partition_count(n - k, k)


P = partition_count


def compose_direct_sum(seq1: Sequence, seq2: Sequence, n: int) -> int:
    """Count of ``L1 + L2`` stacked lattices on n elements."""
    return sum(seq1(p) * seq2(n - p) for p in range(1, n))


def compose_vertical(seq1: Sequence, seq2: Sequence, n: int) -> int:
    """Count of vertical sums on n elements (one element shared)."""
    return sum(seq1(p) * seq2(n - p + 1) for p in range(1, n + 1))


def _with_tails(block_count: Sequence, n: int, smallest: int) -> int:
    # L = C + B + C' with |C| + |C'| = i, i + 1 ways to split the tails
    return sum((i + 1) * block_count(n - i) for i in range(0, n - smallest + 1))


# -- two and three reducible elements -------------------------------------

def count_L_2red(n: int, k: int) -> int:
    if n < 4 or not 1 <= k <= n - 3:
        return 0
    return sum(j * P(n - j - 1, k + 1) for j in range(1, n - k - 1))


@lru_cache(maxsize=None)
def count_B_3red_F1(m: int, k: int) -> int:
    if m < 6 or not 2 <= k <= m - 4:
        return 0
    first = sum(P(m - l - i - 2, k)
                for l in range(1, m - 4)
                for i in range(1, m - l - 3))
    second = sum(P(r - i - 2, s + 1) * P(m - r, k - s)
                 for r in range(5, m - 1)
                 for s in range(1, k - 1)
                 for i in range(1, r - 3))
    return first + second


count_B_3red_F2 = count_B_3red_F1


@lru_cache(maxsize=None)
def count_B_3red_F3(m: int, k: int) -> int:
    if m < 7 or not 2 <= k <= m - 5:
        return 0
    return sum(P(l - 2, t + 1) * P(m - l - 1, k - t + 1)
               for l in range(4, m - 2)
               for t in range(1, k))


@lru_cache(maxsize=None)
def count_B_3red_F4(m: int, k: int) -> int:
    if m < 8 or not 3 <= k <= m - 5:
        return 0
    first = sum(P(l - 2, t + 1) * P(m - r - l - 1, k - t)
                for r in range(1, m - 6)
                for l in range(4, m - r - 2)
                for t in range(1, k - 1))
    second = sum(P(l - 2, t + 1) * P(m - r - l - 1, k - s - t + 1) * P(r, s)
                 for r in range(2, m - 6)
                 for s in range(2, k - 1)
                 for l in range(4, m - r - 2)
                 for t in range(1, k - s))
    return first + second


def count_B_3red(m: int, k: int) -> int:
    if m < 6:
        return 0
    return (count_B_3red_F1(m, k) + count_B_3red_F2(m, k)
            + count_B_3red_F3(m, k) + count_B_3red_F4(m, k))


def count_L_3red(n: int, k: int) -> int:
    if n < 6 or not 2 <= k <= n - 4:
        return 0
    return _with_tails(lambda m: count_B_3red(m, k), n, 6)


# -- four reducible elements, nullity two ---------------------------------

def count_B_42_3(j: int) -> int:
    return comb(j - 2, 4) if j >= 6 else 0


@lru_cache(maxsize=None)
def count_B_42_3_sum(j: int) -> int:
    """The same count as a triple sum."""
    if j < 6:
        return 0
    return sum(j - s - l - r - 2
               for l in range(1, j - 4)
               for s in range(1, j - l - 3)
               for r in range(1, j - s - l - 2))


@lru_cache(maxsize=None)
def count_B_42_4(j: int) -> int:
    if j < 7:
        return 0
    return sum((l - 1) * P(j - i - l - 2, 2)
               for i in range(1, j - 5)
               for l in range(2, j - i - 3))


@lru_cache(maxsize=None)
def count_B_42_5(j: int) -> int:
    if j < 8:
        return 0
    return sum((j - m - 7) * P(s - 2, 2) * P(j - m - s - 2, 2)
               for m in range(0, j - 7)
               for s in range(4, j - m - 3))


@lru_cache(maxsize=None)
def count_B_42_5_corrected(j: int) -> int:
    """Height-5 count without the (j - m - 7) weight.

    These blocks are B' + C + B'' with B', B'' diamonds padded by chains
    and C a chain of m elements; m is already summed over, so the extra
    weight over-counts from j = 9 on.  Agrees with both oracles.
    """
    if j < 8:
        return 0
    return sum(P(s - 2, 2) * P(j - m - s - 2, 2)
               for m in range(0, j - 7)
               for s in range(4, j - m - 3))


_B42_BY_HEIGHT = {3: count_B_42_3, 4: count_B_42_4, 5: count_B_42_5}


def _b42_parts(corrected: bool):
    if corrected:
        return {**_B42_BY_HEIGHT, 5: count_B_42_5_corrected}
    return _B42_BY_HEIGHT


def count_B_42_h(j: int, h: int, corrected: bool = False) -> int:
    try:
        return _b42_parts(corrected)[h](j)
    except KeyError:
        raise ValueError(f"height must be 3, 4 or 5, got {h}") from None


def count_B_42(j: int, corrected: bool = False) -> int:
    if j < 6:
        return 0
    return sum(f(j) for f in _b42_parts(corrected).values())


def count_L_42(n: int, corrected: bool = False) -> int:
    if n < 6:
        return 0
    return _with_tails(lambda j: count_B_42(j, corrected), n, 6)


# -- four comparable reducible elements, nullity three --------------------

def count_L_sandwiched_22(n: int) -> int:
    """Lattices C + B + C' with r = 2, k = 2 and both tails non-empty."""
    if n < 7:
        return 0
    return sum((i - 1) * P(n - i - 2, 3) for i in range(2, n - 4))


@lru_cache(maxsize=None)
def _bb1(j):
    return sum((j - s - r - l - 2) * P(l, 2)
               for s in range(1, j - 5)
               for r in range(1, j - s - 4)
               for l in range(2, j - s - r - 2))


@lru_cache(maxsize=None)
def _bb3(j):
    return sum(comb(j - p - 2, 4) for p in range(1, j - 5))


@lru_cache(maxsize=None)
def _bb4(j):
    return sum((i - 1) * P(j - t - i - 2, 3)
               for t in range(1, j - 6)
               for i in range(2, j - t - 4))


@lru_cache(maxsize=None)
def _bb5(j):
    return sum(t * P(j - p - t - 1, 2) * P(p - 2, 2)
               for p in range(4, j - 3)
               for t in range(1, j - p - 2))


@lru_cache(maxsize=None)
def _bb6(j):
    return sum(P(j - t - r - l - i - 2, 2)
               for t in range(1, j - 6)
               for r in range(1, j - t - 5)
               for l in range(1, j - t - r - 4)
               for i in range(1, j - t - r - l - 3))


@lru_cache(maxsize=None)
def _bb13(j):
    return sum(P(p - 2, 3) * P(j - p - r - 2, 2)
               for r in range(0, j - 8)
               for p in range(5, j - r - 3))


@lru_cache(maxsize=None)
def _bb15(j):
    return sum(P(p - 2, 2) * P(j - p - l - i - 1, 2)
               for p in range(4, j - 4)
               for l in range(1, j - p - 3)
               for i in range(1, j - p - l - 2))


@lru_cache(maxsize=None)
def _bb19(j):
    return sum(P(l - 2, 2) * P(j - q - r - l - 1, 2)
               for r in range(1, j - 7)
               for q in range(1, j - r - 6)
               for l in range(4, j - q - r - 2))


@lru_cache(maxsize=None)
def _bb21(j):
    return sum((j - t - m - 7) * P(s - 2, 2) * P(j - t - m - s - 2, 2)
               for t in range(1, j - 7)
               for m in range(0, j - t - 7)
               for s in range(4, j - t - m - 3))


@lru_cache(maxsize=None)
def _bb21_corrected(j):
    # same over-count as the height-5 (4,2) family
    return sum(P(s - 2, 2) * P(j - t - m - s - 2, 2)
               for t in range(1, j - 7)
               for m in range(0, j - t - 7)
               for s in range(4, j - t - m - 3))


@lru_cache(maxsize=None)
def _bb22(j):
    return sum(P(j - p - 1, 2) * P(l - 2, 2) * P(p - l - 1, 2)
               for p in range(7, j - 2)
               for l in range(4, p - 2))


@lru_cache(maxsize=None)
def _bb22_alt(j):
    # variant with P(p-l-1,2) in place of P(j-p-1,2), kept for comparison only
    return sum(P(p - l - 1, 2) * P(l - 2, 2) * P(p - l - 1, 2)
               for p in range(7, j - 2)
               for l in range(4, p - 2))


# block index -> (formula, smallest j, height of the basic block)
_BB43 = {
    1: (_bb1, 7, 3), 2: (_bb1, 7, 3), 3: (_bb3, 7, 3),
    4: (_bb4, 8, 4), 5: (_bb5, 8, 4),
    **{i: (_bb6, 8, 4) for i in range(6, 13)},
    13: (_bb13, 9, 5), 14: (_bb13, 9, 5),
    **{i: (_bb15, 9, 5) for i in range(15, 19)},
    19: (_bb19, 9, 5), 20: (_bb19, 9, 5), 21: (_bb21, 9, 5),
    22: (_bb22, 10, 6),
}

B43_HEIGHTS = {3: range(1, 4), 4: range(4, 13), 5: range(13, 22), 6: range(22, 23)}


def count_BB_43(j: int, i: int, corrected: bool = False) -> int:
    """Maximal blocks on j elements whose basic block is B_i."""
    try:
        f, lowest, _ = _BB43[i]
    except KeyError:
        raise ValueError(f"block index must be in 1..22, got {i}") from None
    if corrected and i == 21:
        f = _bb21_corrected
    return f(j) if j >= lowest else 0


def block_height(i: int) -> int:
    return _BB43[i][2]


def count_B_43_h(j: int, h: int, corrected: bool = False) -> int:
    if h not in B43_HEIGHTS:
        raise ValueError(f"height must be in 3..6, got {h}")
    return sum(count_BB_43(j, i, corrected) for i in B43_HEIGHTS[h])


def count_B_43(j: int, corrected: bool = False) -> int:
    if j < 7:
        return 0
    return sum(count_BB_43(j, i, corrected) for i in range(1, 23))


def count_L_43_h(n: int, h: int, corrected: bool = False) -> int:
    if n < 7:
        return 0
    return _with_tails(lambda j: count_B_43_h(j, h, corrected), n, 7)


def count_L_43(n: int, corrected: bool = False) -> int:
    if n < 7:
        return 0
    return _with_tails(lambda j: count_B_43(j, corrected), n, 7)


# Merged height totals as published (factors absorb dual pairs).

def count_B_43_3_merged(j: int) -> int:
    if j < 7:
        return 0
    return sum(2 * (j - s - r - l - 2) * P(l, 2)
               for s in range(1, j - 5)
               for r in range(1, j - s - 4)
               for l in range(2, j - s - r - 2)) + _bb3(j)


def count_B_43_4_merged(j: int) -> int:
    if j < 8:
        return 0
    return _bb4(j) + _bb5(j) + 7 * _bb6(j)


def count_B_43_5_merged(j: int) -> int:
    if j < 9:
        return 0
    return 2 * _bb13(j) + 4 * _bb15(j) + 2 * _bb19(j) + _bb21(j)


# -- registry used by the CLI and reports ---------------------------------

# id -> (function, parameter names).  A trailing "c" marks the variant with
# the over-counting weight removed from the height-5 double-diamond families.
FORMULAS: dict[str, tuple[Callable[..., int], tuple[str, ...]]] = {
    "P": (partition_count, ("n", "k")),
    "L2": (count_L_2red, ("n", "k")),
    "B3.F1": (count_B_3red_F1, ("m", "k")),
    "B3.F2": (count_B_3red_F2, ("m", "k")),
    "B3.F3": (count_B_3red_F3, ("m", "k")),
    "B3.F4": (count_B_3red_F4, ("m", "k")),
    "B3": (count_B_3red, ("m", "k")),
    "L3": (count_L_3red, ("n", "k")),
    "B42.3": (count_B_42_3, ("j",)),
    "B42.4": (count_B_42_4, ("j",)),
    "B42.5": (count_B_42_5, ("j",)),
    "B42": (count_B_42, ("j",)),
    "L42": (count_L_42, ("n",)),
    "L22s": (count_L_sandwiched_22, ("n",)),
    **{f"BB43.{i}": ((lambda j, i=i: count_BB_43(j, i)), ("j",)) for i in range(1, 23)},
    **{f"B43.{h}": ((lambda j, h=h: count_B_43_h(j, h)), ("j",)) for h in range(3, 7)},
    "B43": (count_B_43, ("j",)),
    **{f"L43.{h}": ((lambda n, h=h: count_L_43_h(n, h)), ("n",)) for h in range(3, 7)},
    "L43": (count_L_43, ("n",)),
    "B42.5c": (count_B_42_5_corrected, ("j",)),
    "B42c": ((lambda j: count_B_42(j, True)), ("j",)),
    "L42c": ((lambda n: count_L_42(n, True)), ("n",)),
    "BB43.21c": ((lambda j: count_BB_43(j, 21, True)), ("j",)),
    "B43.5c": ((lambda j: count_B_43_h(j, 5, True)), ("j",)),
    "B43c": ((lambda j: count_B_43(j, True)), ("j",)),
    "L43.5c": ((lambda n: count_L_43_h(n, 5, True)), ("n",)),
    "L43c": ((lambda n: count_L_43(n, True)), ("n",)),
}


def evaluate(formula_id: str, *params: int) -> int:
    try:
        f, names = FORMULAS[formula_id]
    except KeyError:
        raise KeyError(f"unknown formula id {formula_id!r}") from None
    if len(params) != len(names):
        raise TypeError(f"{formula_id} takes parameters {names}, got {len(params)} values")
    return f(*params)
