import json

from hypothesis import given, strategies as st

from toricrep.complex import (
    SimplicialComplex,
    euler_characteristic_reduced,
    f_vector,
    h_from_f,
    h_vector,
)
from toricrep.homology import reduced_betti


@st.composite
def complexes(draw, max_vertices=8):
    n = draw(st.integers(1, max_vertices))
    facets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4), max_size=10))
    return SimplicialComplex(n, tuple(tuple(f) for f in facets))


HEXAGON = SimplicialComplex(6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)))


def test_facets_are_pruned_and_sorted():
    k = SimplicialComplex(4, ((2, 1), (1,), (0, 1, 2), (3,)))
    assert k.facets == ((0, 1, 2), (3,))


def test_empty_complex():
    e = SimplicialComplex.empty()
    assert e.dim == -1 and e.is_empty
    assert f_vector(e) == [1]
    assert e.faces(-1) == [()]


def test_simplex_boundary_h_vector():
    for n in range(2, 7):
        assert h_vector(SimplicialComplex.simplex_boundary(n)) == [1] * (n)


def test_hexagon_vectors():
    assert f_vector(HEXAGON) == [1, 6, 6]
    assert h_vector(HEXAGON) == [1, 4, 1]
    assert h_from_f([1, 6, 6]) == [1, 4, 1]


def test_full_subcomplex_of_hexagon():
    sub = HEXAGON.full_subcomplex([0, 2, 4])
    assert sub.n_vertices == 3 and sub.facets == ((0,), (1,), (2,))
    assert sub.labels == (0, 2, 4)
    path = HEXAGON.full_subcomplex([0, 1, 2])
    assert path.facets == ((0, 1), (1, 2))


def test_isolated_vertices_count():
    k = SimplicialComplex(4, ((0, 1), (2,), (3,))).full_subcomplex([0, 2, 3])
    assert f_vector(k) == [1, 3]


def test_json_roundtrip():
    text = HEXAGON.dumps()
    assert SimplicialComplex.from_json(json.loads(text)) == HEXAGON
    assert json.loads(text) == {"n_vertices": 6, "facets": [list(f) for f in HEXAGON.facets]}


@given(complexes(), st.data())
def test_full_subcomplex_composes(k, data):
    s = sorted(data.draw(st.sets(st.integers(0, k.n_vertices - 1))))
    t_local = data.draw(st.sets(st.integers(0, max(len(s) - 1, 0)))) if s else set()
    nested = k.full_subcomplex(s).full_subcomplex(t_local)
    direct = k.full_subcomplex([s[i] for i in t_local])
    assert nested == direct
    assert nested.labels == direct.labels


@given(complexes())
def test_faces_closed_downward(k):
    faces = k.face_set()
    for f in faces:
        for i in range(len(f)):
            assert f[:i] + f[i + 1:] in faces


@given(complexes())
def test_h_sum_counts_facets_of_pure_complexes(k):
    if len({len(f) for f in k.facets}) == 1:
        assert sum(h_vector(k)) == len(k.facets)


@given(complexes())
def test_euler_matches_betti(k):
    assert euler_characteristic_reduced(k) == reduced_betti(k).euler()
