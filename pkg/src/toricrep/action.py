"""Finite groups acting on (complex, characteristic matrix) pairs.

The homology of a real toric space splits over the row space of its
characteristic matrix: degree ``k`` receives the reduced homology in degree
``k - 1`` of every full subcomplex ``K_S`` with ``S`` in the row space. A
group of simplicial automorphisms preserving the row space permutes these
summands, so only one representative per orbit needs to be computed.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .complex import SimplicialComplex, h_vector
from .errors import DimensionMismatch, GroupTooLarge, NotAnAutomorphism
from .gf2 import (
    ENUMERATION_LIMIT,
    Gf2Matrix,
    lex_key,
    permute_vector,
    row_reduce,
    row_space,
    solve_left,
    support,
)
from .homology import BettiTable, reduced_betti

DEFAULT_ORDER_LIMIT = 1_000_000


@dataclass(frozen=True)
class VertexGroup:
    """Permutation group on ``range(degree)`` given by generators."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"{list(g)} is not a permutation of 0..{self.degree - 1}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def trivial(cls, degree: int) -> "VertexGroup":
        return cls(degree, ())

    @classmethod
    def from_json(cls, data: dict) -> "VertexGroup":
        return cls(int(data["degree"]), tuple(tuple(g) for g in data["generators"]))

    def to_json(self) -> dict:
        return {"degree": self.degree, "generators": [list(g) for g in self.generators]}

    def elements(self, limit: int = DEFAULT_ORDER_LIMIT) -> set[tuple[int, ...]]:
        """All group elements by closure under composition with the generators."""
        identity = tuple(range(self.degree))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    gh = tuple(g[x] for x in h)
                    if gh not in seen:
                        seen.add(gh)
                        if len(seen) > limit:
                            raise GroupTooLarge(f"group order exceeds {limit}")
                        nxt.append(gh)
            frontier = nxt
        return seen

    def order(self, limit: int = DEFAULT_ORDER_LIMIT) -> int:
        return len(self.elements(limit))

    def check_automorphisms(self, k: SimplicialComplex) -> None:
        if self.degree != k.n_vertices:
            raise DimensionMismatch(f"group of degree {self.degree} on {k.n_vertices} vertices")
        facets = set(k.facets)
        for idx, g in enumerate(self.generators):
            for f in k.facets:
                img = tuple(sorted(g[v] for v in f))
                if img not in facets:
                    raise NotAnAutomorphism(idx, f)


@dataclass(frozen=True)
class RealToricSpace:
    complex: SimplicialComplex
    lam: Gf2Matrix

    def __post_init__(self):
        if self.lam.ncols != self.complex.n_vertices:
            raise DimensionMismatch(
                f"characteristic matrix has {self.lam.ncols} columns for "
                f"{self.complex.n_vertices} vertices"
            )

    def is_nonsingular(self) -> bool:
        """Columns indexed by each facet are linearly independent."""
        cols = self.lam.columns()
        for f in self.complex.facets:
            if row_reduce(Gf2Matrix(tuple(cols[v] for v in f), self.lam.nrows))[1] != len(f):
                return False
        return True


@dataclass(frozen=True)
class EquivarianceResult:
    ok: bool
    matrices: tuple[Gf2Matrix, ...] = ()
    violating: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_equivariance(group: VertexGroup, space: RealToricSpace) -> EquivarianceResult:
    """Test whether every generator preserves the row space of Λ.

    On success ``matrices[i]`` is an ``A`` with ``g_i·Λ = A Λ``, where
    ``g·Λ`` moves the column of vertex ``v`` to position ``g(v)``.
    """
    group.check_automorphisms(space.complex)
    lam = space.lam
    mats = []
    for idx, g in enumerate(group.generators):
        a = solve_left(lam.permute_columns(g), lam)
        if a is None:
            return EquivarianceResult(False, violating=idx)
        mats.append(a)
    return EquivarianceResult(True, tuple(mats))


@dataclass(frozen=True)
class Orbit:
    representative: int
    size: int


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbits on ``Row(Λ)``; the zero vector is always the first, singleton orbit."""

    orbits: tuple[Orbit, ...]
    length: int

    @property
    def total(self) -> int:
        return sum(o.size for o in self.orbits)

    @property
    def nonzero(self) -> tuple[Orbit, ...]:
        return tuple(o for o in self.orbits if o.representative)


def orbit_decomposition(
    group: VertexGroup, lam: Gf2Matrix, limit: int = ENUMERATION_LIMIT
) -> OrbitDecomposition:
    """Orbits of the coordinate-permutation action on the row space of ``lam``."""
    if group.degree != lam.ncols:
        raise DimensionMismatch(f"group of degree {group.degree} on {lam.ncols} columns")
    space = set(row_space(lam, limit))
    m = lam.ncols
    seen: set[int] = set()
    orbits = []
    for v in sorted(space, key=lambda x: lex_key(x, m)):
        if v in seen:
            continue
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in group.generators:
                y = permute_vector(x, g)
                if y not in space:
                    raise ValueError("group does not preserve the row space")
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        seen |= orbit
        # v is the lexicographically smallest member: vectors are visited in lex order.
        orbits.append(Orbit(v, len(orbit)))
    return OrbitDecomposition(tuple(orbits), m)


@dataclass(frozen=True)
class HomologyTerm:
    """Contribution of one orbit (or one vector) of the row space."""

    representative: int
    multiplicity: int
    reduced: BettiTable


def _job(k: SimplicialComplex, method: str) -> BettiTable:
    return reduced_betti(k, method)


def homology_terms(
    space: RealToricSpace,
    group: VertexGroup | None = None,
    workers: int = 1,
    method: str = "auto",
    limit: int = ENUMERATION_LIMIT,
) -> list[HomologyTerm]:
    """Per-summand reduced Betti numbers of the full subcomplexes ``K_S``."""
    if group is None:
        reps = [(s, 1) for s in row_space(space.lam, limit)]
    else:
        reps = [(o.representative, o.size) for o in orbit_decomposition(group, space.lam, limit).orbits]
    subs = [space.complex.full_subcomplex(support(s)) for s, _ in reps]
    # Biggest complexes first so a pool is not left waiting on one straggler.
    order = sorted(range(len(reps)), key=lambda i: -len(subs[i].facets) * (subs[i].dim + 1))
    results: dict[int, BettiTable] = {}
    if workers > 1 and len(reps) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {i: pool.submit(_job, subs[i], method) for i in order}
            for i, fut in futures.items():
                results[i] = fut.result()
    else:
        for i in order:
            results[i] = _job(subs[i], method)
    return [HomologyTerm(reps[i][0], reps[i][1], results[i]) for i in range(len(reps))]


def assemble(terms: Sequence[HomologyTerm], top_degree: int) -> BettiTable:
    """Fold summands into Betti numbers of the toric space, degrees ``0..top_degree``."""
    betti = [0] * (top_degree + 1)
    for t in terms:
        for d, b in t.reduced.items():
            if b:
                betti[d + 1] += t.multiplicity * b
    return BettiTable(0, tuple(betti))


def toric_homology(
    space: RealToricSpace,
    group: VertexGroup | None = None,
    workers: int = 1,
    method: str = "auto",
    limit: int = ENUMERATION_LIMIT,
) -> BettiTable:
    """Rational Betti numbers of the real toric space, degrees ``0..dim K + 1``."""
    if group is not None and not check_equivariance(group, space):
        raise ValueError("group does not preserve the row space of the characteristic matrix")
    terms = homology_terms(space, group, workers, method, limit)
    return assemble(terms, space.complex.dim + 1)


def euler_characteristic(space: RealToricSpace) -> int:
    """Alternating sum of the h-vector of the underlying complex."""
    return sum((-1) ** k * h for k, h in enumerate(h_vector(space.complex)))


def load_group(path: str) -> VertexGroup:
    with open(path) as fh:
        return VertexGroup.from_json(json.load(fh))
