from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kempf import rational as rq
from kempf.adjoint import adjoint_decompose
from kempf.errors import NotDiagonal, NotInSubalgebra, ValidationError
from kempf.groups import GroupDescriptor
from kempf.lattice import LengthForm, squared_length
from kempf.nilpotent import associate, jordan_matrix, optimal_ray_check, partitions, verify_associated
from kempf.solver import brute_force_oracle, torus_optimal
from kempf.transfer import (
    DIAGONAL,
    FULL,
    LEVI,
    PSEUDO_LEVI,
    SubgroupDescriptor,
    centralizer_subgroup,
    check_associated_transfer,
    check_optimal_transfer,
    diagonal_embed,
    double_centralizer_check,
    restrict_form,
    set_partitions,
    sign_subgroups,
)

GL4 = GroupDescriptor.general_linear(4)
E = rq.unit
E12_E34 = rq.add(E(4, 0, 1), E(4, 2, 3))


def test_centralizer_subgroup_examples():
    h = centralizer_subgroup(GL4, [[1, 1, -1, -1]])
    assert h.kind == PSEUDO_LEVI and h.blocks == ((0, 1), (2, 3))
    h = centralizer_subgroup(GL4, [[1, 1, 1, 0], [0, 0, 0, 1]], torus=True)
    assert h.kind == LEVI and h.blocks == ((0, 1, 2), (3,))
    assert centralizer_subgroup(GL4, [rq.identity(4)]).kind == FULL
    with pytest.raises(NotDiagonal):
        centralizer_subgroup(GL4, [[[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]])
    with pytest.raises(ValidationError):
        centralizer_subgroup(GroupDescriptor.special_linear(2), [[2, 1]])


def test_restrict_form_examples():
    i4 = LengthForm.identity(4)
    levi = centralizer_subgroup(GL4, [[1, 1, -1, -1]])
    assert restrict_form(i4, levi).constraints == ()
    diag = SubgroupDescriptor.diagonal(GroupDescriptor.parse("GL:2xGL:2"), 2)
    assert restrict_form(i4, diag).constraints == ((1, 0, -1, 0), (0, 1, 0, -1))
    sl3 = SubgroupDescriptor.special_linear(GroupDescriptor.general_linear(3))
    rf = restrict_form(LengthForm.identity(3), sl3)
    assert rf.constraints == ((1, 1, 1),)
    assert rf.squared_length((1, 0, -1)) == squared_length(LengthForm.identity(3), (1, 0, -1)) == 2
    with pytest.raises(ValidationError):
        rf.squared_length((1, 0, 0))


def test_optimal_transfer_examples():
    i4 = LengthForm.identity(4)
    h = centralizer_subgroup(GL4, [[1, 1, -1, -1]])
    r = check_optimal_transfer(E12_E34, h, i4)
    assert r.holds and r.lambda_G.weights == r.lambda_H.weights == (1, -1, 1, -1)
    assert r.value_G_sq == r.value_H_sq == 1
    r = check_optimal_transfer(E(4, 0, 1), h, i4)
    assert r.holds and r.lambda_G.weights == r.lambda_H.weights == (1, -1, 0, 0)
    r = check_optimal_transfer(jordan_matrix((3, 1)), SubgroupDescriptor.full(GL4), i4)
    assert r.holds
    with pytest.raises(NotInSubalgebra):
        check_optimal_transfer(E(4, 1, 2), h, i4)


def test_associated_transfer_examples():
    h = centralizer_subgroup(GL4, [[1, 1, -1, -1]])
    r = check_associated_transfer(E12_E34, h)
    assert r.holds_a and r.holds_opt
    r = check_associated_transfer(E(4, 0, 1), h)
    assert r.holds_a and r.holds_opt and r.lambda_H.weights == (1, -1, 0, 0)
    gl2 = GroupDescriptor.general_linear(2)
    r = check_associated_transfer(jordan_matrix((2,)), SubgroupDescriptor.full(gl2))
    assert r.holds_a and r.holds_opt


def test_diagonal_embed_examples():
    big, lam = diagonal_embed(jordan_matrix((2,)), (1, -1), 2)
    assert big == jordan_matrix((2, 2)) and lam.weights == (1, -1, 1, -1)
    e, l1 = diagonal_embed(jordan_matrix((3,)), (2, 0, -2), 1)
    assert e == jordan_matrix((3,)) and l1.weights == (2, 0, -2)
    big, lam = diagonal_embed(jordan_matrix((3,)), (2, 0, -2), 2)
    assert lam.weights == (2, 0, -2, 2, 0, -2)
    assert verify_associated(big, lam, lam.group).all
    assert verify_associated(big, lam).all


def test_diagonal_subgroup_transfer():
    g = GroupDescriptor.parse("GL:3xGL:3")
    big, _ = diagonal_embed(jordan_matrix((3,)), (2, 0, -2), 2)
    d = SubgroupDescriptor.diagonal(g, 2)
    assert d.kind == DIAGONAL and d.contains_lie(big)
    r = check_associated_transfer(big, d)
    assert r.holds_a and r.holds_opt and r.lambda_H.weights == (2, 0, -2, 2, 0, -2)


def test_double_centralizer_examples():
    assert double_centralizer_check(SubgroupDescriptor.levi(GL4, [(0, 1), (2, 3)]))
    assert double_centralizer_check(SubgroupDescriptor.full(GL4))
    assert double_centralizer_check(SubgroupDescriptor.levi(GL4, [(0,), (1,), (2,), (3,)]))


def test_set_partitions_count():
    bell = [1, 1, 2, 5, 15, 52]
    assert [len(list(set_partitions(range(n)))) for n in range(6)] == bell


def test_sign_subgroups_in_sl_need_determinant_one():
    sl2 = GroupDescriptor.special_linear(2)
    signs = [s for s, _ in sign_subgroups(sl2)]
    assert signs == [(1, 1), (-1, -1)]


# -- properties

@st.composite
def levi_nilpotents(draw):
    n = draw(st.integers(1, 5))
    blocks = draw(st.sampled_from(list(set_partitions(range(n)))))
    m = [[0] * n for _ in range(n)]
    for b in blocks:
        j = jordan_matrix(draw(st.sampled_from(list(partitions(len(b))))))
        for r, i in enumerate(b):
            for c, k in enumerate(b):
                m[i][k] = j[r][c]
    return SubgroupDescriptor.levi(GroupDescriptor.general_linear(n), blocks), rq.square(m)


@given(levi_nilpotents())
def test_levi_transfer_and_oracle(data):
    sub, e = data
    if rq.is_zero(e):
        return
    form = LengthForm.identity(sub.ambient.rank)
    r = check_optimal_transfer(e, sub, form)
    assert r.holds and r.value_H_sq <= r.value_G_sq
    # independent route: search Y(H) in a box directly
    oracle = brute_force_oracle(adjoint_decompose(e), form, 4, sub.extra_constraints())
    assert oracle.ratio_sq == r.value_H_sq and oracle.argmax == {r.lambda_H.weights}
    assert check_associated_transfer(e, sub).holds_a


@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(partitions(n)))), st.sampled_from([2, 3]))
def test_diagonal_embedding_property(p, r):
    e = jordan_matrix(p)
    big, lam = diagonal_embed(e, associate(e).lambda_a, r)
    assert verify_associated(big, lam, lam.group).all
    if not rq.is_zero(e):
        assert optimal_ray_check(big, LengthForm.identity(lam.group.rank, lam.group), lam.group).lambda_a == lam


def test_value_drops_on_an_arbitrary_sublattice():
    # w1 + 2 w2 = 0 does not come from a centralizer; the optimum strictly drops
    x = adjoint_decompose(jordan_matrix((2,)))
    form = LengthForm.identity(2)
    skew = torus_optimal(x, form, [(1, 2)])
    assert skew.primitive_optimal.weights == (2, -1)
    assert skew.optimal_ratio_sq == Fraction(9, 5) < torus_optimal(x, form).optimal_ratio_sq
