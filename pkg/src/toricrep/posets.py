"""Order complexes of rank-selected Boolean algebras and cross-polytope face posets.

Also builds the subset models of the type A and type B Coxeter complexes,
where vertices are (signed) subsets and simplices are nested chains.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable

from .complex import SimplicialComplex
from .homology import BettiTable, reduced_betti


def _chains(levels: list[list[int]], below) -> list[tuple[int, ...]]:
    """Maximal chains picking one vertex per level, each above the previous."""
    out = []

    def walk(i: int, chain: list[int]):
        if i == len(levels):
            out.append(tuple(chain))
            return
        for v in levels[i]:
            if not chain or below(chain[-1], v):
                chain.append(v)
                walk(i + 1, chain)
                chain.pop()

    walk(0, [])
    return out


@dataclass(frozen=True)
class RankSelectedBooleanComplex:
    ground: tuple[int, ...]
    ranks: tuple[int, ...]
    vertices: tuple[frozenset[int], ...]
    complex: SimplicialComplex


def boolean_rank_selected(ground: Iterable[int], ranks: Iterable[int]) -> RankSelectedBooleanComplex:
    """Order complex of the subsets of ``ground`` whose sizes lie in ``ranks``."""
    ground = tuple(sorted(set(ground)))
    ranks = tuple(sorted(set(ranks)))
    if not ranks or ranks[0] < 1 or ranks[-1] > len(ground):
        raise ValueError(f"ranks {ranks} must be a nonempty subset of 1..{len(ground)}")
    vertices = [frozenset(c) for q in ranks for c in combinations(ground, q)]
    levels, pos = [], 0
    for q in ranks:
        count = sum(1 for v in vertices if len(v) == q)
        levels.append(list(range(pos, pos + count)))
        pos += count
    facets = _chains(levels, lambda a, b: vertices[a] < vertices[b])
    return RankSelectedBooleanComplex(
        ground, ranks, tuple(vertices), SimplicialComplex(len(vertices), tuple(facets))
    )


def boolean_odd(ground: Iterable[int]) -> RankSelectedBooleanComplex:
    ground = tuple(sorted(set(ground)))
    return boolean_rank_selected(ground, range(1, len(ground) + 1, 2))


# Signed subsets are (positive part, negative part) bitmasks over the ground set.
SignedSet = tuple[int, int]


def _contains(small: SignedSet, big: SignedSet) -> bool:
    return small[0] & ~big[0] == 0 and small[1] & ~big[1] == 0


@dataclass(frozen=True)
class CrossPolytopeOddComplex:
    ground: tuple[int, ...]
    vertices: tuple[SignedSet, ...]
    complex: SimplicialComplex


def _signed_sets(ground: tuple[int, ...], size: int) -> list[SignedSet]:
    out = []
    for chosen in combinations(ground, size):
        for signs in product((0, 1), repeat=size):
            pos = sum(1 << e for e, s in zip(chosen, signs) if s == 0)
            neg = sum(1 << e for e, s in zip(chosen, signs) if s == 1)
            out.append((pos, neg))
    return sorted(out)


def cross_polytope_odd(ground: Iterable[int]) -> CrossPolytopeOddComplex:
    """Order complex of the odd-size faces ``J`` (``J ∩ -J = ∅``) of the cross-polytope."""
    ground = tuple(sorted(set(ground)))
    if not ground:
        raise ValueError("ground set must be nonempty")
    sizes = list(range(1, len(ground) + 1, 2))
    vertices: list[SignedSet] = []
    levels = []
    for s in sizes:
        layer = _signed_sets(ground, s)
        levels.append(list(range(len(vertices), len(vertices) + len(layer))))
        vertices += layer
    facets = _chains(levels, lambda a, b: _contains(vertices[a], vertices[b]))
    return CrossPolytopeOddComplex(ground, tuple(vertices), SimplicialComplex(len(vertices), tuple(facets)))


# --- subset models of Coxeter complexes -------------------------------------


@dataclass(frozen=True)
class SubsetModel:
    """Coxeter complex whose vertices are labelled by (signed) subsets."""

    vertices: tuple
    complex: SimplicialComplex

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}


def typeA_subset_complex(n: int) -> SubsetModel:
    """K_{A_n}: proper nonempty subsets of ``{0..n}`` as bitmasks; facets are full flags."""
    size = n + 1
    vertices = sorted((m for m in range(1, (1 << size) - 1)), key=lambda m: (m.bit_count(), m))
    index = {v: i for i, v in enumerate(vertices)}
    facets = set()
    for perm in permutations(range(size)):
        acc, chain = 0, []
        for x in perm[:-1]:
            acc |= 1 << x
            chain.append(index[acc])
        facets.add(tuple(sorted(chain)))
    return SubsetModel(tuple(vertices), SimplicialComplex(len(vertices), tuple(facets)))


def typeB_subset_complex(n: int) -> SubsetModel:
    """K_{B_n}: nonempty signed subsets of ``{0..n-1}``; facets are signed full flags."""
    vertices = [v for s in range(1, n + 1) for v in _signed_sets(tuple(range(n)), s)]
    index = {v: i for i, v in enumerate(vertices)}
    facets = set()
    for perm in permutations(range(n)):
        for signs in product((0, 1), repeat=n):
            pos = neg = 0
            chain = []
            for x, s in zip(perm, signs):
                if s:
                    neg |= 1 << x
                else:
                    pos |= 1 << x
                chain.append(index[(pos, neg)])
            facets.add(tuple(sorted(chain)))
    return SubsetModel(tuple(vertices), SimplicialComplex(len(vertices), tuple(facets)))


def _mask(elements: Iterable[int]) -> int:
    return sum(1 << e for e in set(elements))


def typeA_KS_model(n: int, subset: Iterable[int], model: SubsetModel | None = None) -> SimplicialComplex:
    """Full subcomplex of K_{A_n} on subsets ``J`` with ``|J ∩ I|`` odd (``I`` 0-indexed)."""
    i_mask = _mask(subset)
    if i_mask.bit_count() % 2 or i_mask.bit_count() < 2:
        raise ValueError("I must have even cardinality at least 2")
    if i_mask >> (n + 1):
        raise ValueError(f"I must lie inside 0..{n}")
    model = model or typeA_subset_complex(n)
    chosen = [i for i, v in enumerate(model.vertices) if (v & i_mask).bit_count() % 2]
    return model.complex.full_subcomplex(chosen)


def typeB_KS_model(n: int, subset: Iterable[int], model: SubsetModel | None = None) -> SimplicialComplex:
    """Full subcomplex of K_{B_n} on signed ``J`` with ``|J^± ∩ I|`` odd."""
    i_mask = _mask(subset)
    if not i_mask or i_mask >> n:
        raise ValueError(f"I must be a nonempty subset of 0..{n - 1}")
    model = model or typeB_subset_complex(n)
    chosen = [i for i, (p, q) in enumerate(model.vertices) if ((p | q) & i_mask).bit_count() % 2]
    return model.complex.full_subcomplex(chosen)


def typeA_model_agrees(n: int, subset: Iterable[int]) -> tuple[bool, BettiTable, BettiTable]:
    """Compare Betti numbers of ``K_S`` with those of the odd rank-selected Boolean algebra."""
    subset = sorted(set(subset))
    ks = reduced_betti(typeA_KS_model(n, subset)).trimmed()
    bo = reduced_betti(boolean_odd(subset).complex).trimmed()
    return ks.as_dict() == bo.as_dict(), ks, bo
