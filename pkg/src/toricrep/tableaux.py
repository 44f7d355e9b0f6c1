"""Partitions, standard tableaux, descent sets and Specht module decompositions.

Partitions are weakly decreasing tuples of positive ints; ``()`` is the empty
partition. Rows are numbered from the top, so "lower row" means larger index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import NotASkewHook

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not a partition")
    return p


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for x in p if x > i) for i in range(p[0])) if p else ()


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def hook_dimension(p: Partition) -> int:
    """``f^λ`` by the hook length formula."""
    p = partition(p)
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(sum(p)) // hooks


def _addable_rows(shape: Partition) -> Iterator[int]:
    for i in range(len(shape) + 1):
        cur = shape[i] if i < len(shape) else 0
        if i == 0 or shape[i - 1] > cur:
            yield i


def _add_box(shape: Partition, row: int) -> Partition:
    if row == len(shape):
        return shape + (1,)
    return shape[:row] + (shape[row] + 1,) + shape[row + 1:]


def standard_tableaux(shape: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard tableaux of ``shape`` filled with ``1..|shape|``."""
    shape = partition(shape)
    n = sum(shape)

    def grow(cur: Partition, rows: list[list[int]], k: int):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i in _addable_rows(cur):
            if i < len(shape) and (cur[i] if i < len(cur) else 0) < shape[i]:
                if i == len(rows):
                    rows.append([])
                rows[i].append(k)
                yield from grow(_add_box(cur, i), rows, k + 1)
                rows[i].pop()
                if not rows[i]:
                    rows.pop()

    yield from grow((), [], 1)


def descent_set(tableau: Iterable[Iterable[int]]) -> frozenset[int]:
    """Entries ``i`` whose successor ``i + 1`` sits in a strictly lower row."""
    row_of = {x: i for i, r in enumerate(tableau) for x in r}
    return frozenset(i for i in row_of if i + 1 in row_of and row_of[i + 1] > row_of[i])


def count_descent_tableaux(shape: Partition, descents: Iterable[int]) -> int:
    """``c_{Q,ν}``: standard tableaux of shape ``ν`` with descent set exactly ``Q``."""
    shape = partition(shape)
    n = sum(shape)
    q = frozenset(descents)
    if any(not 1 <= x < n for x in q):
        return 0

    @lru_cache(maxsize=None)
    def count(cur: Partition, last_row: int) -> int:
        k = sum(cur)  # entries 1..k placed, entry k in last_row
        if k == n:
            return 1
        total = 0
        for i in _addable_rows(cur):
            if i < len(shape) and (cur[i] if i < len(cur) else 0) < shape[i]:
                if k and ((i > last_row) != (k in q)):
                    continue
                total += count(_add_box(cur, i), i)
        return total

    return count((), -1)


# --- skew shapes -----------------------------------------------------------


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def cells(self) -> list[tuple[int, int]]:
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [(i, j) for i, row in enumerate(self.outer) for j in range(inner[i], row)]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def is_skew_hook(shape: SkewShape) -> bool:
    """Edge-connected and free of 2x2 blocks."""
    cells = set(shape.cells())
    if not cells:
        return False
    for i, j in cells:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def skew_hook_from_descents(k: int, descents: Iterable[int]) -> SkewShape:
    """The skew hook with ``k`` cells whose descent set is ``Q``.

    Cells are filled 1..k from the bottom-left; ``i`` is a descent when
    ``i + 1`` sits directly above ``i``, otherwise ``i + 1`` is to its right.
    """
    q = set(descents)
    if k < 1 or any(not 1 <= x < k for x in q):
        raise ValueError(f"descent set {sorted(q)} is not inside 1..{k - 1}")
    cells = [(0, 0)]
    for i in range(1, k):
        r, c = cells[-1]
        cells.append((r - 1, c) if i in q else (r, c + 1))
    top = min(r for r, _ in cells)
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r - top, []).append(c)
    outer = tuple(max(rows[i]) + 1 for i in range(len(rows)))
    inner = partition(min(rows[i]) for i in range(len(rows)))
    return SkewShape(outer, inner)


def skew_standard_count(shape: SkewShape) -> int:
    """Standard fillings of a skew shape: saturated chains from inner to outer."""
    outer = partition(shape.outer)
    inner = partition(shape.inner)
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")

    @lru_cache(maxsize=None)
    def count(cur: Partition) -> int:
        if cur == outer:
            return 1
        return sum(
            count(_add_box(cur, i))
            for i in _addable_rows(cur)
            if i < len(outer) and (cur[i] if i < len(cur) else 0) < outer[i]
        )

    return count(inner)


def skew_hook_dimension(shape: SkewShape) -> int:
    if not is_skew_hook(shape):
        raise NotASkewHook(f"{shape} is not a skew hook")
    return skew_standard_count(shape)


# --- Pieri rule ------------------------------------------------------------


def pieri_add_horizontal_strip(shape: Partition, boxes: int) -> list[Partition]:
    """All ``η ⊇ ν`` with ``|η/ν| = boxes`` and at most one new box per column."""
    shape = partition(shape)
    if boxes < 0:
        raise ValueError("boxes must be nonnegative")
    out = []
    rows = len(shape) + 1
    base = shape + (0,)

    def place(i: int, left: int, cur: list[int]):
        if i == rows:
            if left == 0:
                out.append(partition(cur))
            return
        # Row i may grow up to the old length of row i-1 (horizontal strip).
        cap = left if i == 0 else min(left, base[i - 1] - base[i])
        for a in range(cap, -1, -1):
            cur.append(base[i] + a)
            place(i + 1, left - a, cur)
            cur.pop()

    place(0, boxes, [])
    return out


# --- decompositions --------------------------------------------------------


class DoublePartition(NamedTuple):
    first: Partition
    second: Partition

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


Label = Union[Partition, DoublePartition]


def dim_hyperoctahedral(dp: DoublePartition) -> int:
    """``C(n, |λ|) f^λ f^μ``."""
    lam, mu = partition(dp.first), partition(dp.second)
    return comb(sum(lam) + sum(mu), sum(lam)) * hook_dimension(lam) * hook_dimension(mu)


def irreducible_dimension(label: Label) -> int:
    if isinstance(label, DoublePartition):
        return dim_hyperoctahedral(label)
    return hook_dimension(label)


@dataclass(frozen=True)
class Decomposition:
    """A module written as ``⊕ multiplicity · S^label``."""

    terms: tuple[tuple[Label, int], ...]
    group: str = field(default="S")

    @classmethod
    def from_counts(cls, counts: dict, group: str) -> "Decomposition":
        items = [(lab, m) for lab, m in counts.items() if m]
        items.sort(key=lambda t: _label_key(t[0]), reverse=True)
        return cls(tuple(items), group)

    @property
    def total_dimension(self) -> int:
        return sum(m * irreducible_dimension(lab) for lab, m in self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def rows(self) -> list[dict]:
        out = []
        for lab, m in self.terms:
            shape = [list(lab.first), list(lab.second)] if isinstance(lab, DoublePartition) else list(lab)
            out.append({"shape": shape, "multiplicity": m, "dimension": irreducible_dimension(lab)})
        return out


def _label_key(label: Label):
    if isinstance(label, DoublePartition):
        return (sum(label.first), label.first, label.second)
    return label


def decompose_typeA(n: int, r: int) -> Decomposition:
    """Irreducible S_{n+1}-decomposition of ``H_r`` of the type A_n real toric variety."""
    if r < 0 or 2 * r > n + 1:
        raise ValueError(f"need 0 <= 2r <= n+1, got n={n}, r={r}")
    q = set(range(1, 2 * r, 2))
    counts: dict[Partition, int] = {}
    for nu in partitions(2 * r):
        c = count_descent_tableaux(nu, q)
        if not c:
            continue
        for eta in pieri_add_horizontal_strip(nu, n + 1 - 2 * r):
            counts[eta] = counts.get(eta, 0) + c
    return Decomposition.from_counts(counts, f"S{n + 1}")


# --- double tableaux (type B) ----------------------------------------------


def double_standard_tableaux(dp: DoublePartition) -> Iterator[tuple[tuple, tuple]]:
    """Pairs ``(T1, T2)`` of standard tableaux jointly filled with ``1..n``."""
    lam, mu = partition(dp.first), partition(dp.second)
    n = sum(lam) + sum(mu)

    def grow(a: Partition, b: Partition, ta: list, tb: list, k: int):
        if k > n:
            yield tuple(map(tuple, ta)), tuple(map(tuple, tb))
            return
        for shape, cur, t, which in ((lam, a, ta, 0), (mu, b, tb, 1)):
            for i in _addable_rows(cur):
                if i < len(shape) and (cur[i] if i < len(cur) else 0) < shape[i]:
                    if i == len(t):
                        t.append([])
                    t[i].append(k)
                    nxt = _add_box(cur, i)
                    yield from grow(nxt, b, ta, tb, k + 1) if which == 0 else grow(a, nxt, ta, tb, k + 1)
                    t[i].pop()
                    if not t[i]:
                        t.pop()

    yield from grow((), (), [], [], 1)


def double_descent_set(t1, t2, n: int) -> frozenset[int]:
    """Descents of a double standard tableau.

    ``i`` is a descent when ``i, i+1`` share a tableau and ``i+1`` is lower,
    when ``i`` is in ``T1`` and ``i+1`` in ``T2``, or when ``i = n`` is in ``T1``.
    """
    where = {}
    for which, t in ((0, t1), (1, t2)):
        for row, entries in enumerate(t):
            for x in entries:
                where[x] = (which, row)
    out = set()
    for i in range(1, n):
        (wa, ra), (wb, rb) = where[i], where[i + 1]
        if (wa == wb and rb > ra) or (wa == 0 and wb == 1):
            out.add(i)
    if n and where[n][0] == 0:
        out.add(n)
    return frozenset(out)


def double_tableaux_count(dp: DoublePartition, target: Iterable[int] | None = None) -> int:
    """Double standard tableaux of shape ``(λ, μ)`` with descent set ``target``.

    ``target`` defaults to the odd numbers up to ``n``, which gives ``b(λ, μ)``.
    """
    lam, mu = partition(dp.first), partition(dp.second)
    n = sum(lam) + sum(mu)
    q = frozenset(range(1, n + 1, 2) if target is None else target)
    shapes = (lam, mu)

    @lru_cache(maxsize=None)
    def count(a: Partition, b: Partition, where: tuple[int, int]) -> int:
        k = sum(a) + sum(b)
        if k == n:
            return 1 if (n == 0 or (where[0] == 0) == (n in q)) else 0
        total = 0
        for which in (0, 1):
            cur = (a, b)[which]
            shape = shapes[which]
            for i in _addable_rows(cur):
                if not (i < len(shape) and (cur[i] if i < len(cur) else 0) < shape[i]):
                    continue
                if k:
                    wa, ra = where
                    desc = (wa == which and i > ra) or (wa == 0 and which == 1)
                    if desc != (k in q):
                        continue
                nxt = _add_box(cur, i)
                total += count(nxt, b, (0, i)) if which == 0 else count(a, nxt, (1, i))
        return total

    return count((), (), (-1, -1))


def double_partitions(n: int) -> list[DoublePartition]:
    return [DoublePartition(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def decompose_typeB(n: int, k: int) -> Decomposition:
    """Irreducible W(B_n)-decomposition of ``H_k`` of the type B_n real toric variety."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    counts: dict[DoublePartition, int] = {}
    for r in (2 * k - 1, 2 * k):
        if r < 0 or r > n:
            continue
        for dp in double_partitions(r):
            b = double_tableaux_count(dp)
            if not b:
                continue
            for nu in pieri_add_horizontal_strip(dp.second, n - r):
                key = DoublePartition(dp.first, nu)
                counts[key] = counts.get(key, 0) + b
    return Decomposition.from_counts(counts, f"B{n}")
