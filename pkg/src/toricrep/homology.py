"""Reduced rational homology of simplicial complexes via boundary-matrix ranks."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .complex import Face, SimplicialComplex

log = logging.getLogger(__name__)

PRIME = 2**31 - 1

Column = list[tuple[int, int]]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse matrix stored column-major as ``(row, value)`` lists."""

    n_rows: int
    columns: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n_cols for _ in range(self.n_rows)]
        for j, col in enumerate(self.columns):
            for i, v in col:
                out[i][j] += v
        return out

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "BoundaryMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        cols = tuple(
            tuple((i, int(rows[i][j])) for i in range(n_rows) if rows[i][j])
            for j in range(n_cols)
        )
        return cls(n_rows, cols)


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers indexed by degree, starting at ``start`` (-1 when reduced)."""

    start: int
    values: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        i = degree - self.start
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __iter__(self):
        return iter(self.values)

    @property
    def degrees(self) -> range:
        return range(self.start, self.start + len(self.values))

    def items(self):
        return zip(self.degrees, self.values)

    def euler(self) -> int:
        return sum((-1) ** d * b for d, b in self.items())

    def trimmed(self) -> "BettiTable":
        vals = list(self.values)
        while len(vals) > 1 and vals[-1] == 0:
            vals.pop()
        return BettiTable(self.start, tuple(vals))

    def as_dict(self) -> dict[int, int]:
        return {d: b for d, b in self.items() if b}


def boundary_matrix_from_faces(lower: Sequence[Face], upper: Sequence[Face]) -> BoundaryMatrix:
    """Boundary map from ``upper`` (k-faces) to ``lower`` ((k-1)-faces)."""
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for face in upper:
        col = []
        for j in range(len(face)):
            col.append((index[face[:j] + face[j + 1:]], -1 if j % 2 else 1))
        cols.append(tuple(col))
    return BoundaryMatrix(len(lower), tuple(cols))


def boundary_matrix(k_complex: SimplicialComplex, k: int) -> BoundaryMatrix:
    """``∂_k`` from k-faces to (k-1)-faces; ``k = 0`` is the augmentation."""
    return boundary_matrix_from_faces(k_complex.faces(k - 1), k_complex.faces(k))


# --- rank computations -----------------------------------------------------


class _SparseEliminator:
    """Gaussian elimination on a sparse matrix with fill-free singleton pivots first.

    A row (or column) with a single nonzero entry can be pivoted on without
    touching any other entry, so those are exhausted before any arithmetic.
    """

    def __init__(self, matrix: BoundaryMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for j, col in enumerate(matrix.columns):
            entries = {}
            for i, v in col:
                entries[i] = entries.get(i, 0) + v
            for i, v in entries.items():
                v = self.normalize(v)
                if v:
                    self.rows.setdefault(i, {})[j] = v
                    self.cols.setdefault(j, set()).add(i)
        self.rank = 0

    def normalize(self, v: int) -> int:
        return v

    def combine(self, target: dict[int, int], pivot_row: dict[int, int], col: int) -> dict[int, int]:
        raise NotImplementedError

    def _drop_row(self, i: int, touched: set[int]):
        for j in self.rows.pop(i):
            s = self.cols[j]
            s.discard(i)
            if not s:
                del self.cols[j]
            else:
                touched.add(j)

    def _drop_col(self, j: int, touched_rows: set[int]):
        for i in self.cols.pop(j):
            r = self.rows[i]
            del r[j]
            if not r:
                del self.rows[i]
            else:
                touched_rows.add(i)

    def _singletons(self):
        row_queue = [i for i, r in self.rows.items() if len(r) == 1]
        col_queue = [j for j, c in self.cols.items() if len(c) == 1]
        while row_queue or col_queue:
            while row_queue:
                i = row_queue.pop()
                r = self.rows.get(i)
                if r is None or len(r) != 1:
                    continue
                (j,) = r
                self.rank += 1
                touched_rows: set[int] = set()
                touched_cols: set[int] = set()
                self._drop_col(j, touched_rows)
                if i in self.rows:
                    self._drop_row(i, touched_cols)
                row_queue.extend(x for x in touched_rows if len(self.rows.get(x, ())) == 1)
                col_queue.extend(x for x in touched_cols if len(self.cols.get(x, ())) == 1)
            while col_queue:
                j = col_queue.pop()
                c = self.cols.get(j)
                if c is None or len(c) != 1:
                    continue
                (i,) = c
                self.rank += 1
                touched_cols = set()
                touched_rows = set()
                self._drop_row(i, touched_cols)
                if j in self.cols:
                    self._drop_col(j, touched_rows)
                col_queue.extend(x for x in touched_cols if len(self.cols.get(x, ())) == 1)
                row_queue.extend(x for x in touched_rows if len(self.rows.get(x, ())) == 1)

    def run(self) -> int:
        while True:
            self._singletons()
            if not self.rows:
                return self.rank
            # Markowitz-style choice: shortest row, then its sparsest column.
            i = min(self.rows, key=lambda x: len(self.rows[x]))
            prow = self.rows[i]
            j = min(prow, key=lambda x: len(self.cols[x]))
            self.rank += 1
            others = [x for x in self.cols[j] if x != i]
            touched_cols: set[int] = set()
            self._drop_row(i, touched_cols)
            for x in others:
                old = self.rows[x]
                new = self.combine(old, prow, j)
                for c in old.keys() - new.keys():
                    s = self.cols[c]
                    s.discard(x)
                    if not s:
                        del self.cols[c]
                for c in new.keys() - old.keys():
                    self.cols.setdefault(c, set()).add(x)
                if new:
                    self.rows[x] = new
                else:
                    del self.rows[x]


class _ModPEliminator(_SparseEliminator):
    def __init__(self, matrix: BoundaryMatrix, p: int):
        self.p = p
        super().__init__(matrix)

    def normalize(self, v: int) -> int:
        return v % self.p

    def combine(self, target, pivot_row, col):
        p = self.p
        factor = target[col] * pow(pivot_row[col], -1, p) % p
        out = dict(target)
        for c, v in pivot_row.items():
            w = (out.get(c, 0) - factor * v) % p
            if w:
                out[c] = w
            else:
                out.pop(c, None)
        return out


class _IntegerEliminator(_SparseEliminator):
    """Fraction-free elimination over the integers; rows are kept primitive."""

    def combine(self, target, pivot_row, col):
        a, b = pivot_row[col], target[col]
        g = gcd(a, b)
        a, b = a // g, b // g
        out = {}
        for c in target.keys() | pivot_row.keys():
            w = a * target.get(c, 0) - b * pivot_row.get(c, 0)
            if w:
                out[c] = w
        content = 0
        for w in out.values():
            content = gcd(content, w)
            if content == 1:
                break
        if content > 1:
            out = {c: w // content for c, w in out.items()}
        return out


def rank_mod_p(matrix: BoundaryMatrix, p: int = PRIME) -> int:
    """Rank over the field with ``p`` elements; never exceeds the rational rank."""
    return _ModPEliminator(matrix, p).run()


def rank_exact(matrix: BoundaryMatrix) -> int:
    """Rank over the rationals by exact integer elimination."""
    return _IntegerEliminator(matrix).run()


def rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Dense fraction-free (Bareiss) elimination; exact rank over the rationals."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        for i in range(rank + 1, m):
            for j in range(col + 1, n):
                a[i][j] = (pv * a[i][j] - a[i][col] * a[rank][j]) // prev
            a[i][col] = 0
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def rank_fraction(rows: Sequence[Sequence[int]]) -> int:
    """Plain Gaussian elimination over ``Fraction``; slow reference only."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# --- Betti numbers ---------------------------------------------------------


def _betti_from_ranks(f: list[int], ranks: list[int]) -> list[int]:
    # f[k+1] is the number of k-faces; ranks[k+1] is rank of ∂_k (∂_{-1} = 0).
    top = len(f) - 2
    out = []
    for k in range(-1, top + 1):
        r_k = ranks[k + 1]
        r_next = ranks[k + 2] if k + 2 < len(ranks) else 0
        out.append(f[k + 1] - r_k - r_next)
    return out


def reduced_betti(k_complex: SimplicialComplex, method: str = "auto") -> BettiTable:
    """Reduced Betti numbers over the rationals, degrees -1..dim.

    ``method`` is ``"auto"`` (ranks mod a large prime, checked, exact
    fallback), ``"modular"`` (no fallback) or ``"exact"``.
    """
    faces = k_complex.all_faces()
    f = [len(x) for x in faces]
    mats = [boundary_matrix_from_faces(faces[d], faces[d + 1]) for d in range(len(faces) - 1)]
    if method == "exact":
        ranks = [0] + [rank_exact(m) for m in mats]
        return BettiTable(-1, tuple(_betti_from_ranks(f, ranks)))
    ranks = [0] + [rank_mod_p(m) for m in mats]
    betti = _betti_from_ranks(f, ranks)
    chi_f = sum((-1) ** (d - 1) * c for d, c in enumerate(f))
    chi_b = sum((-1) ** (d - 1) * b for d, b in enumerate(betti))
    if method == "auto" and (chi_f != chi_b or min(betti) < 0):
        log.warning("modular ranks failed the consistency check; recomputing exactly")
        ranks = [0] + [rank_exact(m) for m in mats]
        betti = _betti_from_ranks(f, ranks)
    return BettiTable(-1, tuple(betti))
