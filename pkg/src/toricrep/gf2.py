"""Linear algebra over the two-element field.

Vectors are Python ints used as bitsets: bit ``j`` holds coordinate ``j``.
A vector of length ``m`` is therefore also a subset of ``range(m)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, RankTooLarge

ENUMERATION_LIMIT = 30


def support(v: int) -> list[int]:
    """Indices of the set bits of ``v``, ascending."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def from_support(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1


def vector_to_str(v: int, length: int) -> str:
    return "".join("1" if v >> j & 1 else "0" for j in range(length))


def vector_from_str(text: str) -> int:
    text = text.strip()
    if any(c not in "01" for c in text):
        raise ValueError(f"not a 0/1 string: {text!r}")
    return from_support(j for j, c in enumerate(text) if c == "1")


def lex_key(v: int, length: int) -> int:
    """Sort key matching lexicographic order of the 0/1 string (column 0 first)."""
    return int(format(v, f"0{length}b")[::-1], 2) if length else 0


def permute_vector(v: int, perm: Sequence[int]) -> int:
    """Move coordinate ``j`` to ``perm[j]``."""
    out = 0
    while v:
        low = v & -v
        out |= 1 << perm[low.bit_length() - 1]
        v ^= low
    return out


@dataclass(frozen=True)
class Gf2Matrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:b} does not fit in {self.ncols} columns")

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "Gf2Matrix":
        lines = [ln.strip() for ln in lines if ln.strip()]
        if not lines:
            raise ValueError("matrix text has no rows")
        widths = {len(ln) for ln in lines}
        if len(widths) != 1:
            raise DimensionMismatch(f"rows have differing lengths {sorted(widths)}")
        return cls(tuple(vector_from_str(ln) for ln in lines), widths.pop())

    @classmethod
    def from_text(cls, text: str) -> "Gf2Matrix":
        return cls.from_strings(text.splitlines())

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "Gf2Matrix":
        """Build from columns given as bitsets over the row indices."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in support(col):
                rows[i] |= 1 << j
        return cls(tuple(rows), len(columns))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "Gf2Matrix":
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(tuple(from_support(j for j, x in enumerate(r) if x % 2) for r in rows), ncols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_strings(self) -> list[str]:
        return [vector_to_str(r, self.ncols) for r in self.rows]

    def to_text(self) -> str:
        return "\n".join(self.to_strings()) + "\n"

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> int:
        """Column ``j`` as a bitset over row indices."""
        return from_support(i for i, r in enumerate(self.rows) if r >> j & 1)

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.ncols)]

    def permute_columns(self, perm: Sequence[int]) -> "Gf2Matrix":
        """Column ``j`` of ``self`` becomes column ``perm[j]`` of the result.

        With ``perm`` the vertex permutation g this is ``Λ P_g^{-1}`` in the
        convention where ``(g·Λ)`` has the column of vertex v at g(v).
        """
        if len(perm) != self.ncols:
            raise DimensionMismatch(f"permutation of degree {len(perm)} on {self.ncols} columns")
        return Gf2Matrix(tuple(permute_vector(r, perm) for r in self.rows), self.ncols)

    def left_multiply(self, a: "Gf2Matrix") -> "Gf2Matrix":
        """Return ``a @ self``."""
        if a.ncols != self.nrows:
            raise DimensionMismatch(f"{a.nrows}x{a.ncols} times {self.nrows}x{self.ncols}")
        rows = []
        for arow in a.rows:
            acc = 0
            for i in support(arow):
                acc ^= self.rows[i]
            rows.append(acc)
        return Gf2Matrix(tuple(rows), self.ncols)

    def rank(self) -> int:
        return row_reduce(self)[1]


def _basis(rows: Iterable[int]) -> dict[int, int]:
    """Reduced basis keyed by pivot bit; each pivot appears in exactly one row."""
    basis: dict[int, int] = {}
    for r in rows:
        for p, b in basis.items():
            if r >> p & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for q in basis:
            if basis[q] >> p & 1:
                basis[q] ^= r
        basis[p] = r
    return basis


def row_reduce(m: Gf2Matrix) -> tuple[Gf2Matrix, int, list[int]]:
    """Reduced row-echelon form, rank and ascending pivot columns.

    The pivot of a row is its first nonzero column. Zero rows are dropped, so
    the returned matrix has exactly ``rank`` rows.
    """
    basis = _basis(m.rows)
    pivots = sorted(basis)
    return Gf2Matrix(tuple(basis[p] for p in pivots), m.ncols), len(pivots), pivots


def row_space(m: Gf2Matrix, limit: int = ENUMERATION_LIMIT) -> list[int]:
    """All vectors in the row span, zero first, in the order of the reduced basis."""
    reduced, rank, _ = row_reduce(m)
    if rank > limit:
        raise RankTooLarge(rank, limit)
    span = [0]
    for r in reduced.rows:
        span += [s ^ r for s in span]
    return span


def kernel(m: Gf2Matrix) -> Gf2Matrix:
    """Basis of ``{v : M v = 0}`` as the rows of a matrix with ``m.ncols`` columns."""
    reduced, _, pivots = row_reduce(m)
    pivot_set = set(pivots)
    rows = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, reduced.rows):
            if r >> f & 1:
                v |= 1 << p
        rows.append(v)
    return Gf2Matrix(tuple(rows), m.ncols)


def row_spaces_equal(a: Gf2Matrix, b: Gf2Matrix) -> bool:
    if a.ncols != b.ncols:
        raise DimensionMismatch(f"{a.ncols} columns vs {b.ncols} columns")
    return row_reduce(a)[0].rows == row_reduce(b)[0].rows


def in_row_space(v: int, m: Gf2Matrix) -> bool:
    basis = _basis(m.rows)
    for p, b in basis.items():
        if v >> p & 1:
            v ^= b
    return v == 0


def solve_left(target: Gf2Matrix, m: Gf2Matrix) -> Gf2Matrix | None:
    """Find ``A`` with ``A @ m == target`` or return None.

    Row ``i`` of ``A`` expresses row ``i`` of ``target`` in the rows of ``m``.
    """
    if target.ncols != m.ncols:
        raise DimensionMismatch(f"{target.ncols} columns vs {m.ncols} columns")
    # Track combinations: each basis vector remembers which rows of m built it.
    basis: dict[int, tuple[int, int]] = {}
    for i, r in enumerate(m.rows):
        comb = 1 << i
        for p, (b, c) in basis.items():
            if r >> p & 1:
                r ^= b
                comb ^= c
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for q, (b, c) in list(basis.items()):
            if b >> p & 1:
                basis[q] = (b ^ r, c ^ comb)
        basis[p] = (r, comb)
    out = []
    for t in target.rows:
        comb = 0
        for p, (b, c) in basis.items():
            if t >> p & 1:
                t ^= b
                comb ^= c
        if t:
            return None
        out.append(comb)
    return Gf2Matrix(tuple(out), m.nrows)
