"""Nilpotent matrices: Jordan partitions, associated cocharacters, centralizers.

Jordan blocks are upper shifts (J e_{i+1} = e_i), listed in weakly decreasing
size with consecutive coordinates. A block of size d carries the weight string
(d-1, d-3, ..., 1-d), so the shift has degree exactly 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import rational as rq
from .adjoint import (
    adjoint_decompose,
    centralizer_lie_basis,
    check_lie,
    grade,
    graded_centralizer_dims,
)
from .errors import (
    MismatchError,
    NotDiagonal,
    NotInJordanForm,
    NotInLevi,
    NotNilpotent,
    ZeroPoint,
)
from .groups import GroupDescriptor
from .lattice import (
    CocharLike,
    LengthForm,
    Ordering,
    TorusCocharacter,
    as_cocharacter,
    compare_ratios,
    primitive_part,
    squared_length,
)
from .solver import Semistable, alpha, torus_optimal


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, largest first part first."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts, default=0)))


def centralizer_dimension(parts: Sequence[int]) -> int:
    """dim of the centralizer in gl_n of a nilpotent of the given type."""
    return sum(c * c for c in conjugate_partition(parts))


def jordan_matrix(parts: Sequence[int]) -> rq.Matrix:
    blocks = [
        tuple(tuple(Fraction(int(j == i + 1)) for j in range(d)) for i in range(d)) for d in parts
    ]
    return rq.block_diagonal(blocks)


def weight_string(d: int) -> tuple[int, ...]:
    return tuple(d - 1 - 2 * i for i in range(d))


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    block_coordinates: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        coords, off = [], 0
        for d in parts:
            coords.append(tuple(range(off, off + d)))
            off += d
        return cls(parts, tuple(coords))

    @property
    def size(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class JordanForm:
    """g with g e g^-1 = J; ``chains`` gives input coordinates per block when g is monomial."""

    partition: Partition
    base_change: rq.Matrix
    jordan: rq.Matrix
    chains: tuple[tuple[int, ...], ...] | None


def _is_nilpotent(e: rq.Matrix) -> bool:
    return rq.is_zero(rq.power(e, len(e))) if e else True


def rank_sequence_partition(e: rq.Matrix) -> tuple[int, ...]:
    """Multiplicity of part k is r(k-1) - 2 r(k) + r(k+1) with r(k) = rank e^k."""
    n = len(e)
    ranks = [n]
    p = rq.identity(n)
    for _ in range(n + 1):
        p = rq.matmul(p, e)
        ranks.append(rq.rank(p))
    parts = []
    for k in range(n, 0, -1):
        mult = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * mult)
    return tuple(parts)


def jordan_partition(e) -> JordanForm:
    e = rq.square(e)
    n = len(e)
    if not _is_nilpotent(e):
        raise NotNilpotent("matrix is not nilpotent")
    powers = [rq.identity(n)]
    while not rq.is_zero(powers[-1]):
        powers.append(rq.matmul(powers[-1], e))
    height = len(powers) - 1
    kernels = [rq.nullspace(p, n) for p in powers]

    tops: list[tuple[rq.Vector, int]] = []
    for k in range(height, 0, -1):
        span = list(kernels[k - 1])
        for v, length in tops:
            span.append(rq.matvec(powers[length - k], v))
        current = rq.rank(span) if span else 0
        for u in kernels[k]:
            if rq.rank(span + [u]) > current:
                span.append(u)
                tops.append((u, k))
                current += 1

    columns = []
    for v, length in tops:
        columns.extend(rq.matvec(powers[length - 1 - i], v) for i in range(length))
    q = rq.transpose(tuple(columns))
    g = rq.inverse(q)
    parts = tuple(length for _, length in tops)
    partition = Partition.of(parts)
    jordan = jordan_matrix(parts)
    if rq.matmul(rq.matmul(g, e), q) != jordan:
        raise MismatchError("Jordan basis does not conjugate e to Jordan form")
    if parts != rank_sequence_partition(e):
        raise MismatchError("chain construction disagrees with the rank sequence")

    chains = None
    support = [[i for i, x in enumerate(col) if x != 0] for col in columns]
    if all(len(s) == 1 for s in support):
        coords = [s[0] for s in support]
        chains = tuple(tuple(coords[i] for i in block) for block in partition.block_coordinates)
    return JordanForm(partition, g, jordan, chains)


@dataclass(frozen=True)
class AssociatedChecks:
    graded_two: bool
    distinguished: bool
    in_derived_levi: bool

    @property
    def all(self) -> bool:
        return self.graded_two and self.distinguished and self.in_derived_levi


@dataclass(frozen=True)
class AssociatedData:
    """An associated cocharacter of a nilpotent, in its Jordan frame.

    ``input_lambda`` is the same cocharacter in the input coordinates; it is
    diagonal (and set) only when the base change is monomial.
    """

    lambda_a: TorusCocharacter
    levi_blocks: tuple[tuple[int, ...], ...]
    base_change: rq.Matrix
    checks: AssociatedChecks
    partitions: tuple[Partition, ...]
    jordan: rq.Matrix
    input_lambda: TorusCocharacter | None = None

    @property
    def dominant(self) -> tuple[int, ...]:
        """Weights sorted decreasingly (weighted-Dynkin-diagram convention)."""
        return tuple(sorted(self.lambda_a.weights, reverse=True))


def associated_cocharacter(p: Partition | Sequence[int]) -> AssociatedData:
    """The associated cocharacter of the Jordan form of type p in GL(n)."""
    if not isinstance(p, Partition):
        p = Partition.of(p)
    group = GroupDescriptor.general_linear(p.size)
    weights = tuple(w for d in p.parts for w in weight_string(d))
    lam = TorusCocharacter(weights, group)
    jordan = jordan_matrix(p.parts)
    checks = verify_associated(jordan, lam, group)
    return AssociatedData(
        lambda_a=lam,
        levi_blocks=p.block_coordinates,
        base_change=rq.identity(p.size),
        checks=checks,
        partitions=(p,),
        jordan=jordan,
        input_lambda=lam,
    )


def associate(e, group: GroupDescriptor | None = None) -> AssociatedData:
    """Associated cocharacter for e in Lie(G), computed factor by factor."""
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    check_lie(e, group)
    weights = [0] * group.rank
    input_weights: list[int] | None = [0] * group.rank
    levi, parts, blocks_g, blocks_j = [], [], [], []
    for coords in group.blocks:
        jf = jordan_partition(rq.submatrix(e, coords))
        parts.append(jf.partition)
        blocks_g.append(jf.base_change)
        blocks_j.append(jf.jordan)
        off = coords[0]
        for d, block in zip(jf.partition.parts, jf.partition.block_coordinates):
            for c, w in zip(block, weight_string(d)):
                weights[off + c] = w
            levi.append(tuple(off + c for c in block))
        if jf.chains is None:
            input_weights = None
        elif input_weights is not None:
            for d, chain in zip(jf.partition.parts, jf.chains):
                for c, w in zip(chain, weight_string(d)):
                    input_weights[coords[c]] = w
    lam = TorusCocharacter(tuple(weights), group)
    jordan = rq.block_diagonal(blocks_j)
    return AssociatedData(
        lambda_a=lam,
        levi_blocks=tuple(levi),
        base_change=rq.block_diagonal(blocks_g),
        checks=verify_associated(jordan, lam, group),
        partitions=tuple(parts),
        jordan=jordan,
        input_lambda=TorusCocharacter(tuple(input_weights), group) if input_weights is not None else None,
    )


def levi_of_torus(generators: Sequence, n: int | None = None, group: GroupDescriptor | None = None) -> tuple[tuple[int, ...], ...]:
    """Blocks of C_G(S) for a diagonal torus S: coordinates with equal eigenvalue tuples."""
    mats = [rq.square(g) for g in generators]
    if n is None:
        n = group.rank if group is not None else (len(mats[0]) if mats else None)
    if n is None:
        raise ValueError("cannot infer the rank of an empty torus")
    for m in mats:
        if len(m) != n:
            raise NotDiagonal(f"generator of size {len(m)}, expected {n}")
        if not rq.is_diagonal(m):
            raise NotDiagonal("torus generators must be diagonal")
    classes: dict[tuple, list[int]] = {}
    for i in range(n):
        key = tuple(m[i][i] for m in mats)
        if group is not None:
            key = (group.block_of[i],) + key
        classes.setdefault(key, []).append(i)
    return tuple(sorted(tuple(v) for v in classes.values()))


def coordinate_chains(e) -> tuple[tuple[int, ...], ...]:
    """Chains of e if it is a coordinate direct sum of scaled shifts."""
    jf = jordan_partition(e)
    if jf.chains is None:
        raise NotInJordanForm("the Jordan base change of e is not monomial")
    return jf.chains


def centralizer_torus(e, group: GroupDescriptor | None = None) -> list[rq.Matrix]:
    """Generators of a maximal torus of C_G(e): constant on each Jordan chain."""
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    n = group.rank
    chains = []
    for coords in group.blocks:
        chains.extend(tuple(coords[c] for c in ch) for ch in coordinate_chains(rq.submatrix(e, coords)))
    # chain-constant vectors satisfying the lattice constraints of G
    constraints = group.lattice_constraints()
    rows = [[sum(row[c] for c in ch) for ch in chains] for row in constraints]
    basis = rq.nullspace(rows, len(chains))
    gens = []
    for v in basis:
        diag = [Fraction(0)] * n
        for ch, x in zip(chains, v):
            for c in ch:
                diag[c] = x
        gens.append(rq.diagonal(diag))
    return gens


def is_distinguished(e, levi_blocks: Sequence[Sequence[int]]) -> bool:
    """Whether e is distinguished in Lie(L) for the block Levi L."""
    e = rq.square(e)
    owner = {}
    for b, coords in enumerate(levi_blocks):
        for c in coords:
            owner[c] = b
    if sorted(owner) != list(range(len(e))):
        raise NotInLevi("levi blocks must partition the coordinates")
    for i in range(len(e)):
        for j in range(len(e)):
            if e[i][j] != 0 and owner[i] != owner[j]:
                raise NotInLevi(f"entry ({i}, {j}) crosses levi blocks")
    for coords in levi_blocks:
        sub = rq.submatrix(e, coords)
        if not _is_nilpotent(sub):
            raise NotNilpotent("e restricted to a levi block is not nilpotent")
        if rq.rank(sub) != len(coords) - 1:
            return False
    return True


def verify_associated(e, lam: CocharLike, group: GroupDescriptor | None = None) -> AssociatedChecks:
    """Check e in g(2, lam), e distinguished in Lie(L) and Im(lam) in DL, L = C_G(S)."""
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    lam = as_cocharacter(lam)
    check_lie(e, group)
    if not _is_nilpotent(e):
        raise NotNilpotent("verify_associated needs a nilpotent element")
    graded_two = set(grade(e, lam)) <= {2}
    levi = levi_of_torus(centralizer_torus(e, group), n=group.rank, group=group)
    distinguished = is_distinguished(e, levi)
    derived = all(sum(lam.weights[c] for c in block) == 0 for block in levi)
    return AssociatedChecks(graded_two, distinguished, derived)


@dataclass(frozen=True)
class CentralizerDecomposition:
    dims_by_grade: dict[int, int]
    dim_Re: int
    dim_C_e_lambda: int
    negative_part_dim: int
    total_dim: int

    @property
    def graded(self) -> bool:
        return sum(self.dims_by_grade.values()) == self.total_dim


def centralizer_decomposition(e, lam: CocharLike, group: GroupDescriptor | None = None) -> CentralizerDecomposition:
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    dims = graded_centralizer_dims(e, lam, group)
    return CentralizerDecomposition(
        dims_by_grade=dims,
        dim_Re=sum(v for d, v in dims.items() if d > 0),
        dim_C_e_lambda=dims.get(0, 0),
        negative_part_dim=sum(v for d, v in dims.items() if d < 0),
        total_dim=len(centralizer_lie_basis(e, group)),
    )


@dataclass(frozen=True)
class RayCheck:
    lambda_a: TorusCocharacter
    primitive_optimal: TorusCocharacter
    scaling: int
    optimal_ratio_sq: Fraction
    partitions: tuple[Partition, ...]


def optimal_ray_check(e, form: LengthForm, group: GroupDescriptor | None = None) -> RayCheck:
    """Confirm the associated cocharacter lies on the Kempf-optimal ray."""
    e = rq.square(e)
    if group is None:
        group = GroupDescriptor.general_linear(len(e))
    if rq.is_zero(e):
        raise ZeroPoint("optimal_ray_check needs a nonzero nilpotent")
    data = associate(e, group)
    x = adjoint_decompose(data.jordan, group)
    report = torus_optimal(x, form)
    if isinstance(report, Semistable):
        raise MismatchError("nonzero nilpotent reported semistable")
    mu, d = primitive_part(data.lambda_a)
    if mu.weights != report.primitive_optimal.weights:
        raise MismatchError(f"associated {data.lambda_a.weights} is off the optimal ray {report.primitive_optimal.weights}")
    if d not in (1, 2) or (d == 2) != all(w % 2 == 0 for w in data.lambda_a.weights):
        raise MismatchError(f"unexpected scaling {d}")
    same = compare_ratios(
        alpha(x, data.lambda_a),
        squared_length(form, data.lambda_a),
        report.alpha_at_primitive,
        squared_length(form, report.primitive_optimal),
    )
    if same is not Ordering.EQUAL:
        raise MismatchError("associated and primitive optimal ratios differ")
    return RayCheck(data.lambda_a, report.primitive_optimal, d, report.optimal_ratio_sq, data.partitions)
