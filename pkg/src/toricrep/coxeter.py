"""Root systems, Weyl group actions on co-weights and Coxeter complexes.

All coordinates are taken in the basis of fundamental co-weights. A simple
reflection acts by ``s_i(sum d_j w_j) = sum (d_j - d_i c_ij) w_j`` where
``c_ij = <alpha_i^vee, alpha_j>``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .action import VertexGroup
from .complex import SimplicialComplex, h_from_f
from .errors import GroupTooLarge, VertexNotFound
from .gf2 import Gf2Matrix

DEFAULT_GROUP_LIMIT = 3_000_000

_half = Fraction(1, 2)


def _unit(dim: int, *entries: tuple[int, Fraction | int]) -> tuple:
    v = [Fraction(0)] * dim
    for i, x in entries:
        v[i] = Fraction(x)
    return tuple(v)


def _simple_roots(family: str, n: int) -> list[tuple]:
    """Simple roots in Bourbaki's standard Euclidean realisation."""
    if family == "A":
        return [_unit(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if family in "BCD":
        roots = [_unit(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        last = {"B": _unit(n, (n - 1, 1)), "C": _unit(n, (n - 1, 2)),
                "D": _unit(n, (n - 2, 1), (n - 1, 1))}[family]
        return roots + [last]
    if family == "E":
        roots = [tuple([_half] + [-_half] * 6 + [_half]), _unit(8, (0, 1), (1, 1))]
        roots += [_unit(8, (i, 1), (i - 1, -1)) for i in range(1, 7)]
        return roots[:n]
    if family == "F":
        return [_unit(4, (1, 1), (2, -1)), _unit(4, (2, 1), (3, -1)), _unit(4, (3, 1)),
                (_half, -_half, -_half, -_half)]
    if family == "G":
        return [_unit(3, (0, 1), (1, -1)), _unit(3, (0, -2), (1, 1), (2, 1))]
    raise ValueError(f"unknown family {family}")


def _inner(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def cartan_matrix(family: str, n: int) -> tuple[tuple[int, ...], ...]:
    roots = _simple_roots(family, n)
    rows = []
    for a in roots:
        aa = _inner(a, a)
        row = []
        for b in roots:
            c = 2 * _inner(a, b) / aa
            assert c.denominator == 1
            row.append(int(c))
        rows.append(tuple(row))
    return tuple(rows)


def _valid_rank(family: str, n: int) -> bool:
    return {
        "A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4,
        "E": n in (6, 7, 8), "F": n == 4, "G": n == 2,
    }.get(family, False)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _valid_rank(self.family, self.rank):
            raise ValueError(f"no root system of type {self.family}{self.rank}")
        c = self.cartan
        if len(c) != self.rank or any(len(r) != self.rank for r in c):
            raise ValueError("Cartan matrix has the wrong shape")
        for i in range(self.rank):
            if c[i][i] != 2 or any(c[i][j] > 0 for j in range(self.rank) if j != i):
                raise ValueError("not a Cartan matrix")
        if c != cartan_matrix(self.family, self.rank):
            raise ValueError(f"Cartan matrix does not match type {self.label}")

    @classmethod
    def of(cls, label: str) -> "RootSystem":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", label)
        if not m:
            raise ValueError(f"cannot parse root system label {label!r}")
        family, n = m.group(1).upper(), int(m.group(2))
        if not _valid_rank(family, n):
            raise ValueError(f"no root system of type {family}{n}")
        return cls(family, n, cartan_matrix(family, n))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def weyl_order(self) -> int:
        return _component_order(self.cartan, list(range(self.rank)))

    def reflect(self, i: int, coords: tuple[int, ...]) -> tuple[int, ...]:
        """Apply the simple reflection ``s_i`` (0-indexed) to co-weight coordinates."""
        d = coords[i]
        if d == 0:
            return coords
        row = self.cartan[i]
        return tuple(x - d * c for x, c in zip(coords, row))


def _component_order(cartan, nodes: list[int]) -> int:
    """Order of the Weyl group of the Dynkin subdiagram on ``nodes``."""
    order = 1
    seen: set[int] = set()
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in nodes:
                if u not in seen and cartan[v][u] != 0:
                    seen.add(u)
                    stack.append(u)
        order *= _irreducible_order(cartan, comp)
    return order


def _irreducible_order(cartan, comp: list[int]) -> int:
    m = len(comp)
    if m == 1:
        return 2
    bonds = {}
    degree = {v: 0 for v in comp}
    for u, v in combinations(comp, 2):
        if cartan[u][v] != 0:
            bonds[min(u, v), max(u, v)] = cartan[u][v] * cartan[v][u]
            degree[u] += 1
            degree[v] += 1
    laces = set(bonds.values())
    if 3 in laces:
        return 12
    if 2 in laces:
        (u, v), = [e for e, b in bonds.items() if b == 2]
        if m == 4 and degree[u] == 2 and degree[v] == 2:
            return 1152
        return 2 ** m * factorial(m)
    branch = [v for v in comp if degree[v] == 3]
    if not branch:
        return factorial(m + 1)
    centre = branch[0]
    arms = []
    for nb in (v for v in comp if (min(v, centre), max(v, centre)) in bonds):
        length, prev, cur = 1, centre, nb
        while True:
            nxt = [w for w in comp if w not in (prev, cur) and
                   (min(w, cur), max(w, cur)) in bonds]
            if not nxt:
                break
            length, prev, cur = length + 1, cur, nxt[0]
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return 2 ** (m - 1) * factorial(m)
    return {(1, 2, 2): 51840, (1, 2, 3): 2903040, (1, 2, 4): 696729600}[tuple(arms)]


def parabolic_order(r: RootSystem, generators: list[int]) -> int:
    return _component_order(r.cartan, sorted(generators))


def f_vector_by_parabolic_indices(r: RootSystem) -> list[int]:
    """Face numbers of the Coxeter complex from parabolic subgroup indices only."""
    n = r.rank
    w = r.weyl_order()
    f = []
    for k in range(n + 1):
        total = 0
        for chosen in combinations(range(n), k):
            rest = [i for i in range(n) if i not in chosen]
            total += w // parabolic_order(r, rest)
        f.append(total)
    return f


def h_polynomial(r: RootSystem) -> list[int]:
    """Coefficients ``h_0..h_n`` (constant term first) via parabolic indices."""
    return h_from_f(f_vector_by_parabolic_indices(r))


def euler_characteristic_from_h(h: list[int]) -> int:
    return sum((-1) ** k * x for k, x in enumerate(h))


@dataclass(frozen=True)
class CoxeterComplex:
    root_system: RootSystem
    complex: SimplicialComplex
    ray_coords: tuple[tuple[int, ...], ...]
    generator_perms: tuple[tuple[int, ...], ...]

    @property
    def fundamental_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.root_system.rank))

    def vertex_orbit_labels(self) -> list[int]:
        """For each vertex, the index i of the co-weight orbit ``W w_i`` it lies in."""
        label = [-1] * len(self.ray_coords)
        for i in range(self.root_system.rank):
            label[i] = i
        # Vertices in one orbit are reachable from w_i by generator moves.
        for i in range(self.root_system.rank):
            stack = [i]
            while stack:
                v = stack.pop()
                for p in self.generator_perms:
                    u = p[v]
                    if label[u] == -1:
                        label[u] = i
                        stack.append(u)
        return label


def _vertex_orbit(r: RootSystem) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    n = r.rank
    coords = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    index = {c: i for i, c in enumerate(coords)}
    layer = list(coords)
    while layer:
        fresh = set()
        for c in layer:
            for i in range(n):
                img = r.reflect(i, c)
                if img not in index:
                    fresh.add(img)
        layer = sorted(fresh)
        for c in layer:
            index[c] = len(coords)
            coords.append(c)
    perms = []
    for i in range(n):
        perm = []
        for c in coords:
            img = r.reflect(i, c)
            if img not in index:
                raise VertexNotFound(f"{img} missing from the orbit of the co-weights")
            perm.append(index[img])
        perms.append(perm)
    return coords, perms


def build_coxeter_complex(r: RootSystem, limit: int = DEFAULT_GROUP_LIMIT) -> CoxeterComplex:
    """Coxeter complex with one facet ``{w w_1, ..., w w_n}`` per group element."""
    order = r.weyl_order()
    if order > limit:
        raise GroupTooLarge(f"|W({r.label})| = {order} exceeds the limit {limit}")
    coords, perms = _vertex_orbit(r)
    n = r.rank
    start = tuple(range(n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for ch in frontier:
            for p in perms:
                img = tuple(p[v] for v in ch)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    if len(seen) != order:
        raise VertexNotFound(f"found {len(seen)} chambers, expected {order}")
    cx = SimplicialComplex(len(coords), tuple(seen))
    return CoxeterComplex(r, cx, tuple(coords), tuple(tuple(p) for p in perms))


def lambda_matrix(c: CoxeterComplex) -> Gf2Matrix:
    """Mod 2 characteristic matrix; column j holds ray j's co-weight coordinates."""
    n = c.root_system.rank
    rows = [0] * n
    for j, coords in enumerate(c.ray_coords):
        for i, x in enumerate(coords):
            if x % 2:
                rows[i] |= 1 << j
    return Gf2Matrix(tuple(rows), len(c.ray_coords))


def simple_reflection_row_action(r: RootSystem, i: int) -> Gf2Matrix:
    """Matrix ``A`` with ``(s_i Λ) = A Λ``: row j goes to row j + c_ij row i (mod 2)."""
    if not 0 <= i < r.rank:
        raise IndexError(f"simple reflection index {i} out of range")
    rows = []
    for j in range(r.rank):
        v = 1 << j
        if r.cartan[i][j] % 2:
            v ^= 1 << i
        rows.append(v)
    # Row i itself: c_ii = 2 leaves it fixed.
    return Gf2Matrix(tuple(rows), r.rank)


def weyl_vertex_action(c: CoxeterComplex) -> VertexGroup:
    return VertexGroup(len(c.ray_coords), c.generator_perms)


def coefficient_orbits(r: RootSystem) -> list[tuple[tuple[int, ...], int]]:
    """Orbits of W on the nonzero row combinations of Λ_R, without building K_R.

    Combination ``x`` (a bitmask over rows) is sent by ``s_i`` to the
    combination with ``x_i`` replaced by ``x_i + sum_j c_ij x_j`` (mod 2).
    Each orbit is reported as (representative rows, size); the representative
    uses the fewest rows, ties broken by the sorted row indices.
    """
    n = r.rank
    odd = [sum(1 << j for j in range(n) if j != i and r.cartan[i][j] % 2) for i in range(n)]

    def act(i: int, x: int) -> int:
        return x ^ (((x & odd[i]).bit_count() & 1) << i)

    seen: set[int] = set()
    out = []
    for x0 in range(1, 1 << n):
        if x0 in seen:
            continue
        orbit = {x0}
        stack = [x0]
        while stack:
            x = stack.pop()
            for i in range(n):
                y = act(i, x)
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        rep = min(orbit, key=lambda x: (x.bit_count(), [j for j in range(n) if x >> j & 1]))
        out.append((tuple(j for j in range(n) if rep >> j & 1), len(orbit)))
    out.sort(key=lambda o: (len(o[0]), o[0]))
    return out
