import pytest

from toricrep.action import (
    RealToricSpace,
    VertexGroup,
    check_equivariance,
    euler_characteristic,
    homology_terms,
    orbit_decomposition,
    toric_homology,
)
from toricrep.complex import SimplicialComplex
from toricrep.coxeter import RootSystem, build_coxeter_complex, lambda_matrix, weyl_vertex_action
from toricrep.errors import DimensionMismatch, GroupTooLarge, NotAnAutomorphism
from toricrep.gf2 import Gf2Matrix, vector_to_str

SQUARE = SimplicialComplex(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
ROTATE = VertexGroup(4, ((1, 2, 3, 0),))
LAM1 = Gf2Matrix.from_strings(["1011", "0101"])
LAM2 = Gf2Matrix.from_strings(["1010", "0101"])


def coxeter_space(label):
    c = build_coxeter_complex(RootSystem.of(label))
    return RealToricSpace(c.complex, lambda_matrix(c)), weyl_vertex_action(c)


def test_group_validation_and_order():
    with pytest.raises(ValueError):
        VertexGroup(3, ((0, 0, 1),))
    assert ROTATE.order() == 4
    assert VertexGroup.trivial(5).order() == 1
    assert VertexGroup.from_json(ROTATE.to_json()) == ROTATE


def test_group_order_guard():
    sym = VertexGroup(6, ((1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0)))
    assert sym.order() == 720
    with pytest.raises(GroupTooLarge):
        sym.order(limit=100)


def test_non_automorphism_is_reported():
    swap = VertexGroup(4, ((1, 0, 2, 3),))
    with pytest.raises(NotAnAutomorphism) as err:
        swap.check_automorphisms(SQUARE)
    assert err.value.generator == 0


def test_lambda_shape_must_match():
    with pytest.raises(DimensionMismatch):
        RealToricSpace(SQUARE, Gf2Matrix.from_strings(["101"]))


def test_square_equivariance():
    bad = check_equivariance(ROTATE, RealToricSpace(SQUARE, LAM1))
    assert not bad and bad.violating == 0
    good = check_equivariance(ROTATE, RealToricSpace(SQUARE, LAM2))
    assert good and [m.to_strings() for m in good.matrices] == [["01", "10"]]
    assert check_equivariance(VertexGroup.trivial(4), RealToricSpace(SQUARE, LAM1))


def test_square_orbits_and_torus_homology():
    dec = orbit_decomposition(ROTATE, LAM2)
    assert [(vector_to_str(o.representative, 4), o.size) for o in dec.orbits] == [
        ("0000", 1), ("0101", 2), ("1111", 1)
    ]
    x = RealToricSpace(SQUARE, LAM2)
    assert x.is_nonsingular()
    assert toric_homology(x, ROTATE).values == (1, 2, 1)
    assert toric_homology(x).values == (1, 2, 1)
    assert euler_characteristic(x) == 0


def test_rotation_rejected_by_toric_homology():
    with pytest.raises(ValueError):
        toric_homology(RealToricSpace(SQUARE, LAM1), ROTATE)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_projective_space(m):
    # Columns e_1..e_{m-1} and their sum: real projective (m-1)-space.
    rows = [(1 << i) | (1 << (m - 1)) for i in range(m - 1)]
    x = RealToricSpace(SimplicialComplex.simplex_boundary(m), Gf2Matrix(tuple(rows), m))
    want = [1] + [0] * (m - 1)
    if (m - 1) % 2:
        want[-1] = 1
    assert list(toric_homology(x).values) == want


@pytest.mark.parametrize("m", [3, 4, 5])
def test_identity_matrix_gives_sphere(m):
    # Trivial kernel, so the space is the real moment-angle complex, a sphere.
    x = RealToricSpace(SimplicialComplex.simplex_boundary(m), Gf2Matrix.identity(m))
    assert list(toric_homology(x).values) == [1] + [0] * (m - 2) + [1]


@pytest.mark.parametrize("label", ["G2", "A3", "B3", "C3", "F4"])
def test_orbit_shortcut_matches_full_enumeration(label):
    space, group = coxeter_space(label)
    assert toric_homology(space, group) == toric_homology(space)
    assert toric_homology(space, group).euler() == euler_characteristic(space)


def test_small_coxeter_homology():
    assert toric_homology(*coxeter_space("A3")).values == (1, 6, 5, 0)
    assert toric_homology(*coxeter_space("B3")).values == (1, 12, 11, 0)
    assert toric_homology(*coxeter_space("A5")).values == (1, 15, 75, 61, 0, 0)


def test_worker_count_does_not_change_terms():
    space, group = coxeter_space("F4")
    assert homology_terms(space, group, workers=1) == homology_terms(space, group, workers=2)
