"""Independent brute-force counters used to cross-check the tableau code."""
from __future__ import annotations

from itertools import permutations
from math import comb
from typing import Iterable


def euler_zigzag(n: int) -> int:
    """Number of alternating permutations of ``n`` (boustrophedon triangle)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def permutation_descents(perm: Iterable[int]) -> frozenset[int]:
    p = list(perm)
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def count_permutations_with_descents(n: int, descents: Iterable[int]) -> int:
    """Count permutations of ``[n]`` with exactly the given descent set, by enumeration."""
    target = frozenset(descents)
    return sum(1 for p in permutations(range(n)) if permutation_descents(p) == target)


def count_alternating(n: int) -> int:
    return count_permutations_with_descents(n, range(1, n, 2))


def count_standard_tableaux(shape: tuple[int, ...]) -> int:
    """Number of standard tableaux by removing corners, with no hook-length formula."""
    memo: dict[tuple[int, ...], int] = {}

    def go(s: tuple[int, ...]) -> int:
        if sum(s) == 0:
            return 1
        if s in memo:
            return memo[s]
        total = 0
        for i, part in enumerate(s):
            if part and (i + 1 == len(s) or s[i + 1] < part):
                t = list(s)
                t[i] -= 1
                total += go(tuple(t))
        memo[s] = total
        return total

    return go(tuple(shape))


def typeA_betti(n: int, r: int) -> int:
    """``C(n+1, 2r)`` times the number of alternating permutations of ``2r``."""
    return comb(n + 1, 2 * r) * euler_zigzag(2 * r)
