import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nucleus_topology.complex import (
    FaceCapError,
    SimplicialComplex,
    alexander_dual,
    boundary_matrix,
    boundary_squares_to_zero,
    complex_from_faces,
    full_simplex,
    reduced_betti,
    reduced_euler_characteristic,
    void_complex,
)

HOLLOW = complex_from_faces(3, [0b011, 0b101, 0b110])
POINT_ONLY = SimplicialComplex(3, frozenset({0}))


def test_closure_examples():
    assert complex_from_faces(3, [0b110, 0b001]).faces == {0, 0b001, 0b010, 0b100, 0b110}
    assert complex_from_faces(3, []).is_void
    assert complex_from_faces(2, [0b11]) == full_simplex(2)
    assert len(full_simplex(2).faces) == 4


def test_rejects_non_closed_family():
    with pytest.raises(ValueError):
        SimplicialComplex(3, frozenset({0b011}))
    with pytest.raises(ValueError):
        complex_from_faces(2, [0b100])


def test_euler_examples():
    assert reduced_euler_characteristic(HOLLOW) == -1
    assert reduced_euler_characteristic(POINT_ONLY) == -1
    # on an empty ground set the full simplex is {∅}
    for m in range(1, 6):
        assert reduced_euler_characteristic(full_simplex(m)) == 0


def test_betti_examples():
    assert reduced_betti(HOLLOW).nonzero() == {1: 1}
    assert reduced_betti(full_simplex(4)).nonzero() == {}
    assert reduced_betti(POINT_ONLY).nonzero() == {-1: 1}
    assert reduced_betti(void_complex(3)).nonzero() == {}


def test_dual_examples():
    assert alexander_dual(void_complex(3)) == full_simplex(3)
    delta = complex_from_faces(3, [0b001, 0b110])
    assert alexander_dual(delta).faces == {0, 0b010, 0b100}
    assert alexander_dual(HOLLOW) == POINT_ONLY


def test_face_cap():
    with pytest.raises(FaceCapError):
        reduced_betti(full_simplex(5), max_faces=10)


def test_json_roundtrip():
    payload = HOLLOW.to_json()
    assert payload == {"ground": 3, "facets": [[0, 1], [0, 2], [1, 2]]}
    assert SimplicialComplex.from_json(payload) == HOLLOW


def test_boundary_augmentation_row():
    d0 = boundary_matrix(HOLLOW, 0)
    assert d0.rows == (0,) and d0.to_dense() == [[1, 1, 1]]


@st.composite
def complexes(draw):
    m = draw(st.integers(1, 6))
    gens = draw(st.lists(st.integers(0, (1 << m) - 1), max_size=6))
    return complex_from_faces(m, gens)


def _sympy_betti(cx):
    # independent oracle: dense ranks over Q with sympy
    out = {}
    for k in range(-1, max(cx.ground - 1, 0)):
        n_k = len(cx.faces_of_dim(k))
        rank_k = _rank(cx, k) if k >= 0 else 0
        rank_up = _rank(cx, k + 1)
        out[k] = n_k - rank_k - rank_up
    return out


def _rank(cx, k):
    mat = boundary_matrix(cx, k)
    if not mat.rows or not mat.cols:
        return 0
    return sympy.Matrix(mat.to_dense()).rank()


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_betti_against_sympy(cx):
    assert reduced_betti(cx).betti == _sympy_betti(cx)


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_dual_is_involution_and_reflects_betti(cx):
    dual = alexander_dual(cx)
    assert alexander_dual(dual) == cx
    b, bd = reduced_betti(cx), reduced_betti(dual)
    for i in range(-1, cx.ground - 1):
        assert b[i] == bd[cx.ground - i - 3]


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_chain_identities(cx):
    assert boundary_squares_to_zero(cx)
    assert reduced_betti(cx).euler() == reduced_euler_characteristic(cx)
