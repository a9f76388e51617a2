"""Subgroups H = C_G(K)^0 and the transfer of optimal and associated cocharacters.

Subgroups are described constructively (block Levis, centralizers of diagonal
semisimple elements, SL inside GL, diagonal copies inside a product), so their
cocharacters in the diagonal torus form the sublattice cut out by integer
linear constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import rational as rq
from .adjoint import check_lie
from .errors import (
    MismatchError,
    NotDiagonal,
    NotInJordanForm,
    NotInSubalgebra,
    NotNilpotent,
    SemistableSignal,
    ValidationError,
    ZeroPoint,
)
from .groups import GL, SL, GroupDescriptor
from .lattice import CocharLike, LengthForm, TorusCocharacter, as_cocharacter, squared_length
from .nilpotent import associate, jordan_partition, levi_of_torus, verify_associated, weight_string
from .solver import OptimalClassReport, Semistable, torus_optimal

FULL = "full_group"
LEVI = "levi"
PSEUDO_LEVI = "centralizer_of_semisimple"
DIAGONAL = "diagonal_embedding"
SPECIAL = "special_linear"


@dataclass(frozen=True)
class SubgroupDescriptor:
    ambient: GroupDescriptor
    kind: str
    blocks: tuple[tuple[int, ...], ...] = ()
    copies: int = 1

    def __post_init__(self):
        if self.kind in (LEVI, PSEUDO_LEVI, FULL):
            blocks = self.blocks or self.ambient.blocks
            blocks = tuple(sorted(tuple(sorted(b)) for b in blocks))
            if sorted(c for b in blocks for c in b) != list(range(self.ambient.rank)):
                raise ValidationError("subgroup blocks must partition the coordinates")
            owner = self.ambient.block_of
            if any(len({owner[c] for c in b}) != 1 for b in blocks):
                raise ValidationError("subgroup blocks must refine the factors of the ambient group")
            object.__setattr__(self, "blocks", blocks)
        elif self.kind == DIAGONAL:
            factors = self.ambient.simple_factors
            if len(factors) != self.copies or len(set(factors)) != 1:
                raise ValidationError(f"diagonal embedding needs {self.copies} identical factors, got {self.ambient}")
        elif self.kind == SPECIAL:
            if any(f.kind != GL for f in self.ambient.simple_factors):
                raise ValidationError("special_linear subgroup needs a GL ambient")
        else:
            raise ValidationError(f"unknown subgroup kind {self.kind!r}")

    @classmethod
    def full(cls, ambient: GroupDescriptor) -> "SubgroupDescriptor":
        return cls(ambient, FULL)

    @classmethod
    def levi(cls, ambient: GroupDescriptor, blocks) -> "SubgroupDescriptor":
        return cls(ambient, LEVI, tuple(tuple(b) for b in blocks))

    @classmethod
    def diagonal(cls, ambient: GroupDescriptor, copies: int) -> "SubgroupDescriptor":
        return cls(ambient, DIAGONAL, copies=copies)

    @classmethod
    def special_linear(cls, ambient: GroupDescriptor) -> "SubgroupDescriptor":
        return cls(ambient, SPECIAL)

    def extra_constraints(self) -> tuple[tuple[int, ...], ...]:
        """Rows cutting Y(H) out of Y(T) (beyond the ambient constraints)."""
        n = self.ambient.rank
        if self.kind == DIAGONAL:
            m = n // self.copies
            rows = []
            for k in range(1, self.copies):
                for i in range(m):
                    row = [0] * n
                    row[i], row[k * m + i] = 1, -1
                    rows.append(tuple(row))
            return tuple(rows)
        if self.kind == SPECIAL:
            return tuple(tuple(int(i in b) for i in range(n)) for b in self.ambient.blocks)
        return ()

    def constraints(self) -> tuple[tuple[int, ...], ...]:
        return self.ambient.lattice_constraints() + self.extra_constraints()

    def contains_cocharacter(self, lam: CocharLike) -> bool:
        w = as_cocharacter(lam).weights
        return len(w) == self.ambient.rank and all(
            sum(c * x for c, x in zip(row, w)) == 0 for row in self.constraints()
        )

    def contains_lie(self, m) -> bool:
        m = rq.square(m)
        check_lie(m, self.ambient)
        n = self.ambient.rank
        if self.kind in (LEVI, PSEUDO_LEVI, FULL):
            owner = {c: k for k, b in enumerate(self.blocks) for c in b}
            return all(m[i][j] == 0 for i in range(n) for j in range(n) if owner[i] != owner[j])
        if self.kind == SPECIAL:
            return all(sum(m[i][i] for i in b) == 0 for b in self.ambient.blocks)
        first = self.ambient.blocks[0]
        ref = rq.submatrix(m, first)
        return all(rq.submatrix(m, b) == ref for b in self.ambient.blocks[1:])

    def describe(self) -> str:
        if self.kind == DIAGONAL:
            return f"diagonal {self.ambient.simple_factors[0]} in {self.ambient}"
        if self.kind == SPECIAL:
            return f"SL blocks of {self.ambient}"
        inner = "".join("{" + ",".join(str(c + 1) for c in b) + "}" for b in self.blocks)
        return f"{self.kind} {inner} in {self.ambient}"


def _diagonal_entries(gen, n: int) -> tuple[Fraction, ...]:
    if gen and isinstance(gen[0], (list, tuple)):
        m = rq.square(gen)
        if not rq.is_diagonal(m):
            raise NotDiagonal("centralizer_subgroup takes diagonal elements")
        if len(m) != n:
            raise NotDiagonal(f"element of size {len(m)}, ambient rank {n}")
        return tuple(m[i][i] for i in range(n))
    v = rq.vector(gen)
    if len(v) != n:
        raise NotDiagonal(f"diagonal of length {len(v)}, ambient rank {n}")
    return v


def centralizer_subgroup(ambient: GroupDescriptor, generators: Sequence, torus: bool = False) -> SubgroupDescriptor:
    """H = C_G(K)^0 for K generated by diagonal semisimple elements, or a torus.

    With ``torus=True`` the generators are cocharacters of K (integer vectors)
    and H is a Levi subgroup; otherwise they are diagonal group elements.
    """
    n = ambient.rank
    diags = [_diagonal_entries(g, n) for g in generators]
    if torus:
        for d in diags:
            if any(x.denominator != 1 for x in d) or not ambient.in_cocharacter_lattice(d):
                raise ValidationError(f"{d} is not a cocharacter of {ambient}")
    else:
        for d in diags:
            if any(x == 0 for x in d):
                raise ValidationError("semisimple element must be invertible")
            for f, coords in zip(ambient.simple_factors, ambient.blocks):
                if f.kind == SL and _prod(d[c] for c in coords) != 1:
                    raise ValidationError("element does not lie in the SL factor")
    blocks = levi_of_torus([rq.diagonal(d) for d in diags], n=n, group=ambient)
    if tuple(sorted(blocks)) == tuple(sorted(ambient.blocks)):
        return SubgroupDescriptor.full(ambient)
    return SubgroupDescriptor(ambient, LEVI if torus else PSEUDO_LEVI, blocks)


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


@dataclass(frozen=True)
class RestrictedForm:
    """The ambient form used on the sublattice Y(H) of Y(T)."""

    form: LengthForm
    constraints: tuple[tuple[int, ...], ...]

    def contains(self, lam: CocharLike) -> bool:
        w = as_cocharacter(lam).weights
        return all(sum(c * x for c, x in zip(row, w)) == 0 for row in self.constraints)

    def squared_length(self, lam: CocharLike) -> Fraction:
        if not self.contains(lam):
            raise ValidationError(f"{as_cocharacter(lam).weights} is not a cocharacter of the subgroup")
        return squared_length(self.form, lam)


def restrict_form(form: LengthForm, sub: SubgroupDescriptor) -> RestrictedForm:
    return RestrictedForm(form, sub.constraints())


@dataclass(frozen=True)
class TransferReport:
    holds: bool
    value_G_sq: Fraction
    value_H_sq: Fraction
    lambda_G: TorusCocharacter
    lambda_H: TorusCocharacter
    lambda_G_in_H: bool
    report_G: OptimalClassReport
    report_H: OptimalClassReport


def _nilpotent_in(e, sub: SubgroupDescriptor) -> rq.Matrix:
    e = rq.square(e)
    check_lie(e, sub.ambient)
    if not sub.contains_lie(e):
        raise NotInSubalgebra(f"element does not lie in Lie(H) for {sub.describe()}")
    if not rq.is_zero(rq.power(e, len(e))):
        raise NotNilpotent("transfer checks need a nilpotent element")
    if rq.is_zero(e):
        raise ZeroPoint("transfer checks need a nonzero nilpotent")
    return e


def check_optimal_transfer(e, sub: SubgroupDescriptor, form: LengthForm) -> TransferReport:
    """Compare the torus-optimal classes of e for G and for H."""
    from .adjoint import adjoint_decompose

    e = _nilpotent_in(e, sub)
    x = adjoint_decompose(e, sub.ambient)
    rep_g = torus_optimal(x, form)
    rep_h = torus_optimal(x, form, sub.extra_constraints())
    for label, rep in (("G", rep_g), ("H", rep_h)):
        if isinstance(rep, Semistable):
            raise SemistableSignal(f"no destabilizing cocharacter of the torus of {label}", rep)
    lam_g, lam_h = rep_g.primitive_optimal, rep_h.primitive_optimal
    g_in_h = sub.contains_cocharacter(lam_g)
    holds = (
        sub.contains_cocharacter(lam_h)
        and rep_h.optimal_ratio_sq == rep_g.optimal_ratio_sq
        and (lam_h.weights == lam_g.weights if g_in_h else True)
    )
    return TransferReport(
        holds=holds,
        value_G_sq=rep_g.optimal_ratio_sq,
        value_H_sq=rep_h.optimal_ratio_sq,
        lambda_G=lam_g,
        lambda_H=lam_h,
        lambda_G_in_H=g_in_h,
        report_G=rep_g,
        report_H=rep_h,
    )


def subgroup_associated(e, sub: SubgroupDescriptor) -> TorusCocharacter:
    """An associated cocharacter of e computed inside H, in input coordinates."""
    e = rq.square(e)
    g = sub.ambient
    n = g.rank
    if sub.kind in (FULL, SPECIAL):
        lam = associate(e, g).input_lambda
    elif sub.kind == DIAGONAL:
        first = g.blocks[0]
        factor = g.simple_factors[0]
        inner = associate(rq.submatrix(e, first), factor).input_lambda
        lam = None if inner is None else TorusCocharacter(inner.weights * sub.copies, g)
    else:
        weights = [0] * n
        for block in sub.blocks:
            jf = jordan_partition(rq.submatrix(e, block))
            if jf.chains is None:
                raise NotInJordanForm("Jordan base change inside H is not monomial")
            for d, chain in zip(jf.partition.parts, jf.chains):
                for c, w in zip(chain, weight_string(d)):
                    weights[block[c]] = w
        lam = TorusCocharacter(tuple(weights), g)
    if lam is None:
        raise NotInJordanForm("Jordan base change is not monomial")
    return lam


@dataclass(frozen=True)
class AssociatedTransferReport:
    holds_a: bool
    holds_opt: bool
    lambda_H: TorusCocharacter
    lambda_G: TorusCocharacter
    optimal: TransferReport


def check_associated_transfer(e, sub: SubgroupDescriptor, form: LengthForm | None = None) -> AssociatedTransferReport:
    """Associated-cocharacter transfer, cross-checked against optimal transfer.

    Raises MismatchError if the two verdicts disagree.
    """
    e = _nilpotent_in(e, sub)
    g = sub.ambient
    if form is None:
        form = LengthForm.identity(g.rank, g)
    lam_h = subgroup_associated(e, sub)
    lam_g = associate(e, g).input_lambda
    if lam_g is None:
        raise NotInJordanForm("Jordan base change is not monomial")
    checks = verify_associated(e, lam_h, g)
    holds_a = checks.all and sub.contains_cocharacter(lam_h) and lam_h.weights == lam_g.weights
    opt = check_optimal_transfer(e, sub, form)
    if holds_a != opt.holds:
        raise MismatchError(
            f"associated transfer {holds_a} but optimal transfer {opt.holds} for {sub.describe()}"
        )
    return AssociatedTransferReport(holds_a, opt.holds, lam_h, lam_g, opt)


def diagonal_embed(e, lam: CocharLike, copies: int) -> tuple[rq.Matrix, TorusCocharacter]:
    """(e, ..., e) block-diagonally and (lam, ..., lam) concatenated."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    e = rq.square(e)
    lam = as_cocharacter(lam)
    factor = lam.group or GroupDescriptor.general_linear(len(e))
    group = factor if copies == 1 else GroupDescriptor.product([factor] * copies)
    return rq.block_diagonal([e] * copies), TorusCocharacter(lam.weights * copies, group)


def centre_torus(sub: SubgroupDescriptor) -> list[rq.Matrix]:
    """Generators of C_G(H)^0 for a block subgroup H: block-constant cocharacters."""
    if sub.kind not in (LEVI, PSEUDO_LEVI, FULL):
        raise ValidationError("centre_torus needs a block subgroup")
    g = sub.ambient
    rows = [[sum(row[c] for c in b) for b in sub.blocks] for row in g.lattice_constraints()]
    gens = []
    for v in rq.nullspace(rows, len(sub.blocks)):
        diag = [Fraction(0)] * g.rank
        for b, x in zip(sub.blocks, v):
            for c in b:
                diag[c] = x
        gens.append(rq.diagonal(diag))
    return gens


def double_centralizer_check(sub: SubgroupDescriptor) -> bool:
    """Whether H = C_G(C_G(H)^0)^0."""
    blocks = levi_of_torus(centre_torus(sub), n=sub.ambient.rank, group=sub.ambient)
    return tuple(sorted(blocks)) == sub.blocks


def set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``items`` (blocks sorted, each block increasing)."""
    items = list(items)
    if not items:
        yield ()
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield tuple(sorted(((head,),) + part))
        for i in range(len(part)):
            merged = list(part)
            merged[i] = tuple(sorted((head,) + part[i]))
            yield tuple(sorted(merged))


def sign_subgroups(group: GroupDescriptor) -> Iterator[tuple[tuple[int, ...], SubgroupDescriptor]]:
    """(s, C_G(s)^0) for every diagonal +-1 element s of the group."""
    import itertools

    for signs in itertools.product((1, -1), repeat=group.rank):
        try:
            yield signs, centralizer_subgroup(group, [signs])
        except ValidationError:
            continue
