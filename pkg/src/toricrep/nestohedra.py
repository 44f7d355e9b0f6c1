"""Building sets, nested set complexes and their real toric varieties.

Ground sets are ``{0..n}`` (size ``n + 1``); members are stored as bitmasks.
Element ``n`` plays the role of the extra coordinate whose characteristic
vector is the sum of all the others.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .action import (
    RealToricSpace,
    VertexGroup,
    check_equivariance,
    homology_terms,
    assemble,
)
from .complex import SimplicialComplex
from .errors import MissingSingleton, NotConnected, NotUnionClosed
from .gf2 import Gf2Matrix
from .homology import BettiTable, reduced_betti
from .posets import boolean_rank_selected
from .tableaux import skew_hook_dimension, skew_hook_from_descents


def _elements(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class BuildingSet:
    ground: int
    members: frozenset[int]

    @property
    def full(self) -> int:
        return (1 << self.ground) - 1

    @property
    def connected(self) -> bool:
        return self.full in self.members

    def vertices(self) -> list[int]:
        """``B`` minus the full ground set, ordered by size then bitmask."""
        return sorted((m for m in self.members if m != self.full), key=lambda m: (m.bit_count(), m))

    def to_json(self) -> dict:
        return {"ground": self.ground, "members": [_elements(m) for m in self.vertices()] +
                ([_elements(self.full)] if self.connected else [])}

    @classmethod
    def from_json(cls, data: dict) -> "BuildingSet":
        return validate_building_set(data["members"], int(data["ground"]))


def validate_building_set(members: Iterable[Iterable[int]], ground: int | None = None) -> BuildingSet:
    """Check the singleton and union axioms; raise on the first violation."""
    masks = set()
    for m in members:
        elems = list(m)
        if not elems:
            raise ValueError("building set members must be nonempty")
        masks.add(sum(1 << int(e) for e in set(elems)))
    if ground is None:
        ground = max(m.bit_length() for m in masks) if masks else 0
    if any(m >> ground for m in masks):
        raise ValueError(f"member outside the ground set 0..{ground - 1}")
    for i in range(ground):
        if 1 << i not in masks:
            raise MissingSingleton(i)
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    for a_idx, a in enumerate(ordered):
        for b in ordered[a_idx + 1:]:
            if a & b and (a | b) not in masks:
                raise NotUnionClosed(frozenset(_elements(a)), frozenset(_elements(b)))
    return BuildingSet(ground, frozenset(masks))


def building_set_Bnk(n: int, k: int, validate: bool = True) -> BuildingSet:
    """Subsets of ``{0..n}`` of size 1 or of size in ``k+1..n+1``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    size = n + 1
    masks = [m for m in range(1, 1 << size) if m.bit_count() == 1 or m.bit_count() > k]
    if validate:
        return validate_building_set((_elements(m) for m in masks), size)
    return BuildingSet(size, frozenset(masks))


@dataclass(frozen=True)
class NestedSetComplex:
    building_set: BuildingSet
    vertices: tuple[int, ...]
    complex: SimplicialComplex

    def face_members(self, face: Sequence[int]) -> list[int]:
        return [self.vertices[v] for v in face]


def is_nested(b: BuildingSet, family: Sequence[int]) -> bool:
    """Direct test of both nested-set axioms on a family of members."""
    fam = list(family)
    if b.full in fam:
        return False
    for i, x in enumerate(fam):
        for y in fam[i + 1:]:
            if x & y and (x & y) != x and (x & y) != y:
                return False
    # Every pairwise-disjoint subfamily of size >= 2 must have union outside B.
    def walk(start: int, union: int, count: int) -> bool:
        if count >= 2 and union in b.members:
            return False
        for j in range(start, len(fam)):
            if fam[j] & union == 0:
                if not walk(j + 1, union | fam[j], count + 1):
                    return False
        return True

    return walk(0, 0, 0)


def _compatible(b: BuildingSet, face: list[int], new: int) -> bool:
    for x in face:
        meet = x & new
        if meet and meet != x and meet != new:
            return False
    disjoint = [x for x in face if x & new == 0]

    # Only collections containing ``new`` are unchecked so far.
    def walk(start: int, union: int) -> bool:
        for j in range(start, len(disjoint)):
            x = disjoint[j]
            if x & union == 0:
                u = union | x
                if u in b.members:
                    return False
                if not walk(j + 1, u):
                    return False
        return True

    return walk(0, new)


def nested_set_complex(b: BuildingSet) -> NestedSetComplex:
    if not b.connected:
        raise NotConnected("the building set does not contain the full ground set")
    verts = b.vertices()
    faces: list[tuple[int, ...]] = []

    def extend(face_idx: list[int], face: list[int], start: int):
        extended = False
        for v in range(start, len(verts)):
            if _compatible(b, face, verts[v]):
                extended = True
                face_idx.append(v)
                face.append(verts[v])
                extend(face_idx, face, v + 1)
                face.pop()
                face_idx.pop()
        if not extended and face_idx:
            faces.append(tuple(face_idx))

    extend([], [], 0)
    return NestedSetComplex(b, tuple(verts), SimplicialComplex(len(verts), tuple(faces)))


def lambda_of_building_set(b: BuildingSet, vertices: Sequence[int] | None = None) -> Gf2Matrix:
    """``n x |V_B|`` matrix whose column for ``I`` is ``sum_{k in I} e_k`` with ``e_n = sum e_i``."""
    n = b.ground - 1
    low = (1 << n) - 1
    verts = b.vertices() if vertices is None else vertices
    cols = [(m & low) ^ (low if m >> n & 1 else 0) for m in verts]
    return Gf2Matrix.from_columns(cols, n)


def adjacent_transpositions(size: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(size - 1):
        p = list(range(size))
        p[i], p[i + 1] = p[i + 1], p[i]
        out.append(tuple(p))
    return out


def vertex_action(nested: NestedSetComplex, ground_perms: Iterable[Sequence[int]]) -> VertexGroup:
    """Vertex permutations induced by permutations of the ground set."""
    index = {m: i for i, m in enumerate(nested.vertices)}
    gens = []
    for g in ground_perms:
        perm = []
        for m in nested.vertices:
            img = sum(1 << g[e] for e in _elements(m))
            if img not in index:
                raise ValueError(f"ground permutation {list(g)} does not preserve the building set")
            perm.append(index[img])
        gens.append(tuple(perm))
    return VertexGroup(len(nested.vertices), tuple(gens))


def toric_space(nested: NestedSetComplex) -> RealToricSpace:
    return RealToricSpace(nested.complex, lambda_of_building_set(nested.building_set, nested.vertices))


def symmetric_equivariance(b: BuildingSet, ground_perms: Iterable[Sequence[int]] | None = None) -> bool:
    """Whether the given ground-set symmetries preserve the row space of Λ_B."""
    nested = nested_set_complex(b)
    perms = adjacent_transpositions(b.ground) if ground_perms is None else list(ground_perms)
    group = vertex_action(nested, perms)
    return check_equivariance(group, toric_space(nested)).ok


def top_degree(n: int, k: int) -> int:
    return (n + 1) // 2 + k // 2


def top_descent_set(n: int, k: int) -> set[int]:
    return set(range(1, k + 1)) | set(range(1, n + 1, 2))


class TopHomology(NamedTuple):
    top_degree: int
    top_dim: int
    vanishing_above: bool
    expected_dim: int
    betti: BettiTable

    @property
    def ok(self) -> bool:
        return self.vanishing_above and self.top_dim == self.expected_dim


def toric_homology_Bnk(n: int, k: int, workers: int = 1) -> BettiTable:
    nested = nested_set_complex(building_set_Bnk(n, k))
    space = toric_space(nested)
    group = vertex_action(nested, adjacent_transpositions(n + 1))
    terms = homology_terms(space, group, workers)
    return assemble(terms, nested.complex.dim + 1)


def top_homology_check(n: int, k: int, workers: int = 1) -> TopHomology:
    """Compare the top homology of the ``B_{n,k}`` variety with the skew hook dimension."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}")
    betti = toric_homology_Bnk(n, k, workers)
    d = top_degree(n, k)
    expected = skew_hook_dimension(skew_hook_from_descents(n + 1, top_descent_set(n, k)))
    vanishing = all(b == 0 for deg, b in betti.items() if deg > d)
    return TopHomology(d, betti[d], vanishing, expected, betti)


def full_support_subcomplex(n: int, k: int) -> SimplicialComplex:
    """``K_S`` for ``I_S = {0..n}``: nested sets made of odd-size members."""
    nested = nested_set_complex(building_set_Bnk(n, k))
    chosen = [i for i, m in enumerate(nested.vertices) if m.bit_count() % 2]
    return nested.complex.full_subcomplex(chosen)


def barycentric_agrees(n: int, k: int) -> tuple[bool, BettiTable, BettiTable]:
    """Betti numbers of ``K_S`` (``I_S`` everything) against the rank-selected Boolean algebra."""
    ks = reduced_betti(full_support_subcomplex(n, k)).trimmed()
    ranks = top_descent_set(n, k)
    bq = reduced_betti(boolean_rank_selected(range(n + 1), ranks).complex).trimmed()
    return ks.as_dict() == bq.as_dict(), ks, bq


def proper_subcomplex_dims(n: int, k: int) -> dict[int, int]:
    """Largest dimension of ``K_S`` over even ``I_S`` of each size below ``n + 1``.

    By symmetry one subset per size suffices.
    """
    nested = nested_set_complex(building_set_Bnk(n, k))
    out = {}
    for size in range(2, n + 1, 2):
        i_mask = (1 << size) - 1
        chosen = [i for i, m in enumerate(nested.vertices) if (m & i_mask).bit_count() % 2]
        out[size] = nested.complex.full_subcomplex(chosen).dim
    return out


def proper_subcomplex_top_homology(n: int, k: int) -> dict[int, int]:
    """Highest degree of nonzero reduced homology of ``K_S`` per even ``|I_S| < n + 1``.

    ``-2`` marks an acyclic ``K_S``.
    """
    nested = nested_set_complex(building_set_Bnk(n, k))
    out = {}
    for size in range(2, n + 1, 2):
        i_mask = (1 << size) - 1
        chosen = [i for i, m in enumerate(nested.vertices) if (m & i_mask).bit_count() % 2]
        betti = reduced_betti(nested.complex.full_subcomplex(chosen))
        out[size] = max((d for d, b in betti.items() if b), default=-2)
    return out


def load_building_set(path: str) -> BuildingSet:
    with open(path) as fh:
        return BuildingSet.from_json(json.load(fh))
