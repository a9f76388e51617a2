from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from kempf import rational as rq
from kempf.cli import random_conjugator, weighted_form
from kempf.errors import DimensionMismatch, NotInJordanForm, NotInLevi, NotNilpotent, ZeroPoint
from kempf.groups import GroupDescriptor
from kempf.lattice import LengthForm
from kempf.nilpotent import (
    associate,
    associated_cocharacter,
    centralizer_decomposition,
    centralizer_dimension,
    conjugate_partition,
    coordinate_chains,
    is_distinguished,
    jordan_matrix,
    jordan_partition,
    levi_of_torus,
    optimal_ray_check,
    partitions,
    verify_associated,
)

E = rq.unit


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(0, 8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert centralizer_dimension((2, 1)) == 5


def test_jordan_partition_examples():
    assert jordan_partition([[0, 1], [0, 0]]).partition.parts == (2,)
    assert jordan_partition(rq.zeros(2)).partition.parts == (1, 1)
    assert jordan_partition(E(3, 0, 1)).partition.parts == (2, 1)
    with pytest.raises(NotNilpotent):
        jordan_partition([[1, 0], [0, 0]])


def test_associated_cocharacter_examples():
    assert associated_cocharacter((2,)).lambda_a.weights == (1, -1)
    assert associated_cocharacter((3, 1)).lambda_a.weights == (2, 0, -2, 0)
    assert associated_cocharacter((2, 2)).lambda_a.weights == (1, -1, 1, -1)


def test_is_distinguished_examples():
    for n in range(1, 5):
        assert is_distinguished(jordan_matrix((n,)), [tuple(range(n))])
    assert not is_distinguished(E(3, 0, 1), [(0, 1, 2)])
    assert is_distinguished(rq.zeros(1), [(0,)])
    with pytest.raises(NotInLevi):
        is_distinguished(E(3, 0, 2), [(0, 1), (2,)])


def test_levi_of_torus_examples():
    assert levi_of_torus([rq.diagonal([5, 5, 5, 7])]) == ((0, 1, 2), (3,))
    assert levi_of_torus([], n=3) == ((0, 1, 2),)
    full = [rq.diagonal([int(i == k) for i in range(3)]) for k in range(3)]
    assert levi_of_torus(full) == ((0,), (1,), (2,))


def test_centralizer_decomposition_examples():
    d = centralizer_decomposition(jordan_matrix((2,)), (1, -1))
    assert (d.dims_by_grade, d.dim_Re, d.dim_C_e_lambda, d.negative_part_dim) == ({0: 1, 2: 1}, 1, 1, 0)
    d = centralizer_decomposition(jordan_matrix((3,)), (2, 0, -2))
    assert (d.dims_by_grade, d.dim_Re, d.dim_C_e_lambda, d.negative_part_dim) == ({0: 1, 2: 1, 4: 1}, 2, 1, 0)
    d = centralizer_decomposition(rq.zeros(2), (1, -1))
    assert d.dims_by_grade == {-2: 1, 0: 2, 2: 1} and d.negative_part_dim == 1


def test_verify_associated_examples():
    assert verify_associated(jordan_matrix((2,)), (1, -1)).all
    assert not verify_associated(jordan_matrix((2,)), (1, 0)).graded_two
    assert verify_associated(jordan_matrix((2, 2)), (1, -1, 1, -1)).all


def test_optimal_ray_examples():
    i2, i3, i4 = (LengthForm.identity(n) for n in (2, 3, 4))
    r = optimal_ray_check(jordan_matrix((2,)), i2)
    assert r.scaling == 1 and r.lambda_a.weights == r.primitive_optimal.weights == (1, -1)
    r = optimal_ray_check(jordan_matrix((3,)), i3)
    assert r.scaling == 2 and r.lambda_a.weights == (2, 0, -2) and r.primitive_optimal.weights == (1, 0, -1)
    assert optimal_ray_check(jordan_matrix((2, 2)), i4).scaling == 1
    with pytest.raises(ZeroPoint):
        optimal_ray_check(rq.zeros(2), i2)


def test_non_monomial_jordan_base():
    e = [[1, -1], [1, -1]]
    jf = jordan_partition(e)
    assert jf.partition.parts == (2,) and jf.chains is None
    assert associate(e).input_lambda is None
    with pytest.raises(NotInJordanForm):
        coordinate_chains(e)


def test_scaled_shift_keeps_chains():
    e = rq.scale(3, E(3, 1, 0))
    assert coordinate_chains(e) == ((1, 0), (2,))
    assert verify_associated(e, (-1, 1, 0)).all


def test_product_group_association():
    g = GroupDescriptor.parse("GL:2xGL:3")
    e = rq.block_diagonal([jordan_matrix((2,)), jordan_matrix((3,))])
    data = associate(e, g)
    assert data.lambda_a.weights == (1, -1, 2, 0, -2)
    r = optimal_ray_check(e, LengthForm.identity(5, g), g)
    assert r.primitive_optimal.weights == (1, -1, 2, 0, -2)


# -- properties

all_partitions = st.integers(1, 6).flatmap(lambda n: st.sampled_from(list(partitions(n))))


def _sympy_partition(m) -> tuple[int, ...]:
    """Independent oracle: block sizes of sympy's Jordan form."""
    _, j = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m]).jordan_form()
    n, sizes, k = j.shape[0], [], 0
    while k < n:
        size = 1
        while k + size < n and j[k + size - 1, k + size] == 1:
            size += 1
        sizes.append(size)
        k += size
    return tuple(sorted(sizes, reverse=True))


@st.composite
def conjugated_nilpotents(draw):
    p = draw(st.integers(1, 4).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
    g = random_conjugator(random.Random(draw(st.integers(0, 2**32))), sum(p), monomial=False)
    return p, rq.conjugate(g, jordan_matrix(p))


@given(conjugated_nilpotents())
def test_jordan_partition_is_conjugation_invariant(data):
    p, e = data
    jf = jordan_partition(e)
    assert jf.partition.parts == p == _sympy_partition(e)
    assert rq.matmul(rq.matmul(jf.base_change, e), rq.inverse(jf.base_change)) == jordan_matrix(p)


@given(all_partitions)
def test_centralizer_dimension_formula(p):
    e = jordan_matrix(p)
    d = centralizer_decomposition(e, associate(e).lambda_a)
    assert d.negative_part_dim == 0 and d.graded
    assert d.total_dim == centralizer_dimension(p)


@given(all_partitions)
def test_associated_is_verified(p):
    e = jordan_matrix(p)
    data = associate(e)
    assert data.checks.all and verify_associated(e, data.lambda_a).all
    assert sum(data.lambda_a.weights) == 0


@given(all_partitions, st.sampled_from(["identity", "weighted"]))
def test_optimal_ray(p, which):
    e = jordan_matrix(p)
    if rq.is_zero(e):
        return
    n = sum(p)
    if which == "identity":
        form = LengthForm.identity(n)
    else:
        form = weighted_form(GroupDescriptor.general_linear(n))
    r = optimal_ray_check(e, form)
    assert r.scaling == (2 if all(w % 2 == 0 for w in r.lambda_a.weights) else 1)
    assert [r.scaling * w for w in r.primitive_optimal.weights] == list(r.lambda_a.weights)


def test_optimal_ray_rejects_wrong_form_shape():
    with pytest.raises(DimensionMismatch):
        optimal_ray_check(jordan_matrix((2,)), LengthForm.identity(3))


def test_regular_ratio_closed_form():
    from kempf.adjoint import adjoint_decompose
    from kempf.solver import torus_optimal

    for n in range(2, 7):
        r = torus_optimal(adjoint_decompose(jordan_matrix((n,))), LengthForm.identity(n))
        assert r.optimal_ratio_sq == Fraction(12, n**3 - n)
