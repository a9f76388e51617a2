from __future__ import annotations


import pytest
from hypothesis import given, strategies as st

from kempf import rational as rq
from kempf.adjoint import (
    Verdict,
    adjoint_decompose,
    centralizer_lie_basis,
    grade,
    graded_centralizer_dims,
    matrices_span_dim,
    parabolic_membership,
)
from kempf.errors import NotInLieAlgebra, NotInvertible, ShapeMismatch, ValidationError
from kempf.groups import GroupDescriptor
from kempf.lattice import Weight
from kempf.nilpotent import jordan_matrix

E = rq.unit


def test_group_parse_round_trip():
    for text in ("GL:3", "SL:2", "GL:2xGL:2", "GL:1xSL:3xGL:2"):
        assert str(GroupDescriptor.parse(text)) == text
    assert GroupDescriptor.parse("GL(3)") == GroupDescriptor.general_linear(3)
    with pytest.raises(ValidationError):
        GroupDescriptor.parse("SO:3")


def test_group_blocks_and_constraints():
    g = GroupDescriptor.parse("GL:2xSL:2")
    assert g.rank == 4 and g.blocks == ((0, 1), (2, 3))
    assert g.lattice_constraints() == ((0, 0, 1, 1),)
    assert g.in_cocharacter_lattice((3, 0, 1, -1)) and not g.in_cocharacter_lattice((0, 0, 1, 0))


def test_adjoint_decompose_examples():
    assert adjoint_decompose(E(2, 0, 1)).components == {Weight((1, -1)): 1}
    assert adjoint_decompose(jordan_matrix((3,))).components == {Weight((1, -1, 0)): 1, Weight((0, 1, -1)): 1}
    x = adjoint_decompose(rq.diagonal([1, 2]))
    assert list(x.components) == [Weight((0, 0))]
    assert x.components[Weight((0, 0))] == (1, 2)


def test_lie_membership():
    with pytest.raises(NotInLieAlgebra):
        adjoint_decompose(rq.diagonal([1, 0]), GroupDescriptor.special_linear(2))
    with pytest.raises(NotInLieAlgebra):
        adjoint_decompose(E(4, 0, 3), GroupDescriptor.parse("GL:2xGL:2"))
    with pytest.raises(ShapeMismatch):
        adjoint_decompose(E(3, 0, 1), GroupDescriptor.general_linear(2))


def test_grade_examples():
    assert grade(E(3, 0, 2), (1, 0, -1)) == {2: E(3, 0, 2)}
    assert grade(rq.identity(3), (5, 1, -2)) == {0: rq.identity(3)}
    j3 = jordan_matrix((3,))
    assert grade(j3, (2, 0, -2)) == {2: j3}


def test_parabolic_membership_examples():
    assert parabolic_membership([[1, 2], [0, 3]], (1, -1)) is Verdict.IN_P
    assert parabolic_membership([[1, 0], [1, 1]], (1, -1)) is Verdict.NOT_IN_P
    assert parabolic_membership([[1, 1], [0, 1]], (1, -1)) is Verdict.IN_RU
    assert parabolic_membership([[2, 0], [0, 3]], (1, -1)) is Verdict.IN_LEVI
    assert parabolic_membership(rq.identity(2), (1, -1)) is Verdict.IN_LEVI
    with pytest.raises(NotInvertible):
        parabolic_membership([[1, 1], [0, 0]], (1, -1))


def test_centralizer_examples():
    j2 = jordan_matrix((2,))
    basis = centralizer_lie_basis(j2)
    assert len(basis) == 2 and matrices_span_dim(basis + [rq.identity(2), j2]) == 2
    assert len(centralizer_lie_basis(rq.zeros(2))) == 4
    j3 = jordan_matrix((3,))
    basis = centralizer_lie_basis(j3)
    assert len(basis) == 3 and matrices_span_dim(basis + [rq.identity(3), j3, rq.matmul(j3, j3)]) == 3


def test_centralizer_in_sl_drops_identity():
    sl2 = GroupDescriptor.special_linear(2)
    basis = centralizer_lie_basis(jordan_matrix((2,)), sl2)
    assert basis == [jordan_matrix((2,))]


def test_graded_dims_examples():
    assert graded_centralizer_dims(jordan_matrix((3,)), (2, 0, -2)) == {0: 1, 2: 1, 4: 1}
    assert graded_centralizer_dims(rq.zeros(2), (1, -1)) == {-2: 1, 0: 2, 2: 1}


# -- properties

small = st.integers(-3, 3)


@st.composite
def matrix_and_lambda(draw):
    n = draw(st.integers(1, 4))
    m = [[draw(small) for _ in range(n)] for _ in range(n)]
    lam = [draw(st.integers(-3, 3)) for _ in range(n)]
    return rq.square(m), lam


@given(matrix_and_lambda())
def test_grading_reconstructs(data):
    m, lam = data
    parts = grade(m, lam)
    total = rq.zeros(len(m))
    for d, piece in parts.items():
        assert not rq.is_zero(piece)
        # lambda(t) piece lambda(t)^-1 = t^d piece, checked entrywise
        for j in range(len(m)):
            for k in range(len(m)):
                if piece[j][k]:
                    assert lam[j] - lam[k] == d
        total = rq.add(total, piece)
    assert total == m


@given(matrix_and_lambda())
def test_membership_matches_limit(data):
    m, lam = data
    g = rq.add(m, rq.scale(10, rq.identity(len(m))))
    if rq.det(g) == 0:
        return
    v = parabolic_membership(g, lam)
    parts = grade(g, lam)
    assert v.in_parabolic == all(d >= 0 for d in parts)
    if v is Verdict.IN_LEVI:
        assert set(parts) <= {0}


@given(matrix_and_lambda())
def test_centralizer_basis_commutes(data):
    m, _ = data
    basis = centralizer_lie_basis(m)
    assert all(rq.is_zero(rq.commutator(b, m)) for b in basis)
    assert matrices_span_dim(basis) == len(basis)
    # the span contains the identity and m itself
    assert matrices_span_dim(basis + [rq.identity(len(m)), m]) == len(basis)
