"""Finite simplicial complexes stored by their facets."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

Face = tuple[int, ...]


def _prune(facets: Iterable[Iterable[int]]) -> tuple[Face, ...]:
    """Drop duplicates and faces contained in a larger one."""
    unique = {tuple(sorted(set(f))) for f in facets}
    by_size = sorted(unique, key=lambda f: (-len(f), f))
    kept: list[Face] = []
    incident: dict[int, list[int]] = defaultdict(list)
    for f in by_size:
        if not f:
            continue
        fs = set(f)
        # Only larger facets can contain f; look them up through its rarest vertex.
        v = min(f, key=lambda x: len(incident[x]))
        if any(len(kept[i]) > len(f) and fs.issubset(kept[i]) for i in incident[v]):
            continue
        idx = len(kept)
        kept.append(f)
        for x in f:
            incident[x].append(idx)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices ``0..n_vertices-1`` given by its facets.

    ``labels`` optionally records, for each vertex, its index in a parent
    complex (set by :meth:`full_subcomplex`).
    """

    n_vertices: int
    facets: tuple[Face, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        facets = _prune(self.facets)
        for f in facets:
            if f[0] < 0 or f[-1] >= self.n_vertices:
                raise ValueError(f"facet {f} has a vertex outside 0..{self.n_vertices - 1}")
        object.__setattr__(self, "facets", facets)
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(0, ())

    @classmethod
    def simplex_boundary(cls, n_vertices: int) -> "SimplicialComplex":
        return cls(n_vertices, tuple(combinations(range(n_vertices), n_vertices - 1)))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def __contains__(self, face: Iterable[int]) -> bool:
        fs = set(face)
        if not fs:
            return True
        return any(fs.issubset(f) for f in self.facets)

    def face_set(self) -> set[Face]:
        out: set[Face] = {()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return out

    def faces(self, dim: int) -> list[Face]:
        """All faces of dimension ``dim`` sorted lexicographically."""
        if dim == -1:
            return [()]
        if dim < -1:
            return []
        k = dim + 1
        out: set[Face] = set()
        for f in self.facets:
            if len(f) >= k:
                out.update(combinations(f, k))
        return sorted(out)

    def all_faces(self) -> list[list[Face]]:
        """Faces grouped by dimension -1..dim, each group sorted."""
        return [self.faces(d) for d in range(-1, self.dim + 1)]

    def full_subcomplex(self, subset: Iterable[int]) -> "SimplicialComplex":
        """Induced subcomplex on ``subset``, re-indexed to ``0..len(subset)-1``.

        ``labels`` of the result maps new vertex indices back to this complex's
        labels (or indices, when this complex has none).
        """
        chosen = sorted(set(subset))
        index = {v: i for i, v in enumerate(chosen)}
        pieces = set()
        for f in self.facets:
            piece = tuple(index[v] for v in f if v in index)
            if piece:
                pieces.add(piece)
        parent = self.labels if self.labels is not None else range(self.n_vertices)
        return SimplicialComplex(len(chosen), tuple(pieces), tuple(parent[v] for v in chosen))

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Image under the vertex bijection ``v -> perm[v]``."""
        return SimplicialComplex(self.n_vertices, tuple(tuple(perm[v] for v in f) for f in self.facets))

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        return cls(int(data["n_vertices"]), tuple(tuple(int(v) for v in f) for f in data["facets"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def full_subcomplex(k: SimplicialComplex, subset: Iterable[int]) -> SimplicialComplex:
    return k.full_subcomplex(subset)


def enumerate_faces(k: SimplicialComplex, dim: int) -> list[Face]:
    return k.faces(dim)


def f_vector(k: SimplicialComplex) -> list[int]:
    """``[f_{-1}, f_0, ..., f_dim]`` with ``f_{-1} = 1``."""
    counts = defaultdict(int)
    for face in k.face_set():
        counts[len(face)] += 1
    return [counts[i] for i in range(k.dim + 2)]


def h_from_f(f: Sequence[int]) -> list[int]:
    """h-vector from an f-vector ``[f_{-1}, ..., f_{d-1}]``."""
    d = len(f) - 1
    return [
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    ]


def h_vector(k: SimplicialComplex) -> list[int]:
    return h_from_f(f_vector(k))


def euler_characteristic_reduced(k: SimplicialComplex) -> int:
    """``sum_i (-1)^i f_i`` over i >= -1, i.e. the usual alternating sum minus one."""
    return sum((-1) ** (i - 1) * c for i, c in enumerate(f_vector(k)))
