"""Adjoint action of the diagonal torus on matrices, and parabolic membership.

Entry (j, k) of a matrix has torus weight e_j - e_k, so under a diagonal
cocharacter with weights w it sits in degree w_j - w_k.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from . import rational as rq
from .errors import NotInLieAlgebra, NotInvertible, ShapeMismatch
from .groups import SL, GroupDescriptor
from .lattice import CocharLike, Weight, as_cocharacter
from .solver import WeightedPoint


def check_shape(m: rq.Matrix, n: int) -> None:
    if len(m) != n or any(len(r) != n for r in m):
        raise ShapeMismatch(f"expected a {n}x{n} matrix")


def check_lie(m: rq.Matrix, group: GroupDescriptor) -> None:
    """Raise unless m lies in Lie(group) (block-diagonal, traceless SL blocks)."""
    check_shape(m, group.rank)
    for i in range(group.rank):
        for j in range(group.rank):
            if m[i][j] != 0 and not group.lie_support(i, j):
                raise NotInLieAlgebra(f"entry ({i}, {j}) lies outside the block structure of {group}")
    for f, coords in zip(group.simple_factors, group.blocks):
        if f.kind == SL and sum(m[i][i] for i in coords) != 0:
            raise NotInLieAlgebra(f"block {coords} of an SL factor has nonzero trace")


def adjoint_decompose(e, group: GroupDescriptor | None = None) -> WeightedPoint:
    """Weight decomposition of e in Lie(G): {e_j - e_k -> e_jk} plus the diagonal."""
    e = rq.square(e)
    n = len(e)
    if group is None:
        group = GroupDescriptor.general_linear(n)
    check_lie(e, group)
    comps: dict[Weight, object] = {}
    for j in range(n):
        for k in range(n):
            if j != k and e[j][k] != 0:
                cov = [0] * n
                cov[j], cov[k] = 1, -1
                comps[Weight(tuple(cov))] = e[j][k]
    diag = tuple(e[i][i] for i in range(n))
    if any(diag):
        comps[Weight((0,) * n)] = diag
    return WeightedPoint(comps, group)


def grade(m, lam: CocharLike) -> dict[int, rq.Matrix]:
    """Split m into its nonzero homogeneous components by lambda-degree."""
    m = rq.square(m)
    lam = as_cocharacter(lam)
    n = len(m)
    if len(lam) != n:
        raise ShapeMismatch(f"{n}x{n} matrix graded by a cocharacter of length {len(lam)}")
    w = lam.weights
    parts: dict[int, list[list[Fraction]]] = {}
    for j in range(n):
        for k in range(n):
            if m[j][k] != 0:
                d = w[j] - w[k]
                if d not in parts:
                    parts[d] = [[Fraction(0)] * n for _ in range(n)]
                parts[d][j][k] = m[j][k]
    return {d: tuple(tuple(r) for r in parts[d]) for d in sorted(parts)}


class Verdict(Enum):
    IN_LEVI = "InLevi"
    IN_RU = "InRu"
    IN_P = "InP"
    NOT_IN_P = "NotInP"

    @property
    def in_parabolic(self) -> bool:
        return self is not Verdict.NOT_IN_P


def parabolic_membership(g, lam: CocharLike) -> Verdict:
    """Classify g against P_lambda, L_lambda and R_u(P_lambda).

    The identity lies in both L_lambda and R_u(P_lambda); it is reported as
    IN_LEVI.
    """
    g = rq.square(g)
    lam = as_cocharacter(lam)
    n = len(g)
    if len(lam) != n:
        raise ShapeMismatch(f"{n}x{n} matrix against a cocharacter of length {len(lam)}")
    if rq.det(g) == 0:
        raise NotInvertible("parabolic membership is defined for group elements")
    w = lam.weights
    pairs = [(j, k) for j in range(n) for k in range(n)]
    if any(g[j][k] != 0 for j, k in pairs if w[j] < w[k]):
        return Verdict.NOT_IN_P
    if all(g[j][k] == 0 for j, k in pairs if w[j] != w[k]):
        return Verdict.IN_LEVI
    if all(g[j][k] == int(j == k) for j, k in pairs if w[j] == w[k]):
        return Verdict.IN_RU
    return Verdict.IN_P


def lie_positions(group: GroupDescriptor) -> list[tuple[int, int]]:
    n = group.rank
    return [(i, j) for i in range(n) for j in range(n) if group.lie_support(i, j)]


def centralizer_in(e: rq.Matrix, group: GroupDescriptor, positions: Sequence[tuple[int, int]]) -> list[rq.Matrix]:
    """Basis of {m in Lie(G) supported on ``positions`` : [m, e] = 0}."""
    n = group.rank
    index = {p: t for t, p in enumerate(positions)}
    rows = []
    for r in range(n):
        for c in range(n):
            row = [Fraction(0)] * len(positions)
            # [m, e]_{rc} = sum_k m_rk e_kc - e_rk m_kc
            for k in range(n):
                if e[k][c] != 0 and (r, k) in index:
                    row[index[(r, k)]] += e[k][c]
                if e[r][k] != 0 and (k, c) in index:
                    row[index[(k, c)]] -= e[r][k]
            if any(row):
                rows.append(row)
    for f, coords in zip(group.simple_factors, group.blocks):
        if f.kind == SL:
            row = [Fraction(0)] * len(positions)
            for i in coords:
                if (i, i) in index:
                    row[index[(i, i)]] = Fraction(1)
            if any(row):
                rows.append(row)
    basis = rq.nullspace(rows, len(positions))
    out = []
    for v in basis:
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), x in zip(positions, v):
            m[i][j] = x
        out.append(tuple(tuple(r) for r in m))
    return out


def centralizer_lie_basis(e, group: GroupDescriptor | None = None) -> list[rq.Matrix]:
    """Exact basis of Lie C_G(e) = {m in Lie(G) : me = em}."""
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    check_lie(e, group)
    return centralizer_in(e, group, lie_positions(group))


def graded_centralizer_dims(e, lam: CocharLike, group: GroupDescriptor | None = None) -> dict[int, int]:
    """dim (Lie C_G(e) intersected with g(i, lambda)) for each degree i that occurs."""
    e = rq.square(e)
    lam = as_cocharacter(lam)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    check_lie(e, group)
    if len(lam) != group.rank:
        raise ShapeMismatch("cocharacter length differs from the group rank")
    w = lam.weights
    by_degree: dict[int, list[tuple[int, int]]] = {}
    for i, j in lie_positions(group):
        by_degree.setdefault(w[i] - w[j], []).append((i, j))
    dims = {}
    for d in sorted(by_degree):
        k = len(centralizer_in(e, group, by_degree[d]))
        if k:
            dims[d] = k
    return dims


def components_nonnegative(m: rq.Matrix, lam: CocharLike) -> bool:
    return all(d >= 0 for d in grade(m, lam))


def matrices_span_dim(ms: Iterable[rq.Matrix]) -> int:
    return rq.rank([[x for r in m for x in r] for m in ms])
