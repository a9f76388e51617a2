"""Cocharacter lattice of the diagonal torus and Weyl-invariant length forms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from math import factorial, gcd, prod
from typing import Sequence, Union

from . import rational as rq
from .errors import (
    DimensionMismatch,
    NotPositiveDefinite,
    NotSymmetric,
    NotWeylInvariant,
    ValidationError,
    ZeroCocharacter,
)
from .groups import GroupDescriptor


@dataclass(frozen=True)
class TorusCocharacter:
    """Integer weight vector in Y(T) = Z^rank; ``lambda(t) = diag(t^w_1, ...)``."""

    weights: tuple[int, ...]
    group: GroupDescriptor | None = None

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if any(int(x) != x for x in self.weights):
            raise ValidationError("cocharacter weights must be integers")
        object.__setattr__(self, "weights", w)
        if self.group is not None:
            if len(w) != self.group.rank:
                raise DimensionMismatch(
                    f"cocharacter has {len(w)} weights but {self.group} has rank {self.group.rank}"
                )
            if not self.group.in_cocharacter_lattice(w):
                raise ValidationError(f"{w} is not in the cocharacter lattice of {self.group}")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __mul__(self, n: int) -> "TorusCocharacter":
        return TorusCocharacter(tuple(n * w for w in self.weights), self.group)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.weights)


@dataclass(frozen=True, order=True)
class Weight:
    """Integer covector on Y(T); pairs with cocharacters by the dot product."""

    covector: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "covector", tuple(int(x) for x in self.covector))

    def __len__(self) -> int:
        return len(self.covector)

    def __iter__(self):
        return iter(self.covector)

    def is_zero(self) -> bool:
        return not any(self.covector)


CocharLike = Union[TorusCocharacter, Sequence[int]]
WeightLike = Union[Weight, Sequence[int]]


def as_cocharacter(lam: CocharLike, group: GroupDescriptor | None = None) -> TorusCocharacter:
    if isinstance(lam, TorusCocharacter):
        return lam
    return TorusCocharacter(tuple(lam), group)


def as_weight(chi: WeightLike) -> Weight:
    return chi if isinstance(chi, Weight) else Weight(tuple(chi))


@dataclass(frozen=True)
class LengthForm:
    """Positive definite symmetric integer matrix defining (,) on Y(T)."""

    matrix: tuple[tuple[int, ...], ...]
    group: GroupDescriptor | None = None

    def __post_init__(self):
        m = rq.square(self.matrix)
        if any(x.denominator != 1 for r in m for x in r):
            raise ValidationError("length form entries must be integers")
        n = len(m)
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
            raise NotSymmetric("length form must be symmetric")
        if not all(d > 0 for d in rq.leading_minors(m)):
            raise NotPositiveDefinite("length form must be positive definite")
        ints = tuple(tuple(int(x) for x in r) for r in m)
        object.__setattr__(self, "matrix", ints)
        if self.group is not None:
            if n != self.group.rank:
                raise DimensionMismatch(f"form has size {n}, group rank is {self.group.rank}")
            for perm in self.group.weyl_generators():
                if any(ints[perm[i]][perm[j]] != ints[i][j] for i in range(n) for j in range(n)):
                    raise NotWeylInvariant(f"form is not invariant under the Weyl group of {self.group}")

    @classmethod
    def identity(cls, n: int, group: GroupDescriptor | None = None) -> "LengthForm":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), group)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """(u, v) = u^T B v for rational vectors."""
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui:
                row = self.matrix[i]
                total += ui * sum((row[j] * vj for j, vj in enumerate(v) if vj), Fraction(0))
        return total

    @property
    def fractions(self) -> rq.Matrix:
        return rq.matrix(self.matrix)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def primitive_part(lam: CocharLike) -> tuple[TorusCocharacter, int]:
    """Split lam = d * mu with mu indivisible."""
    lam = as_cocharacter(lam)
    d = 0
    for w in lam.weights:
        d = gcd(d, w)
    if d == 0:
        raise ZeroCocharacter("the zero cocharacter has no primitive part")
    return TorusCocharacter(tuple(w // d for w in lam.weights), lam.group), d


def pairing(chi: WeightLike, lam: CocharLike) -> int:
    chi, lam = as_weight(chi), as_cocharacter(lam)
    if len(chi) != len(lam):
        raise DimensionMismatch(f"weight of length {len(chi)} paired with cocharacter of length {len(lam)}")
    return sum(a * b for a, b in zip(chi.covector, lam.weights))


def squared_length(form: LengthForm, lam: CocharLike) -> Fraction:
    lam = as_cocharacter(lam)
    if len(lam) != form.size:
        raise DimensionMismatch(f"cocharacter of length {len(lam)} against form of size {form.size}")
    if lam.is_zero():
        raise ZeroCocharacter("squared length is only used for nonzero cocharacters")
    w = lam.weights
    return Fraction(sum(w[i] * form.matrix[i][j] * w[j] for i in range(len(w)) for j in range(len(w))))


def _check_seed(seed) -> rq.Matrix:
    m = rq.square(seed)
    n = len(m)
    if any(x.denominator != 1 for r in m for x in r):
        raise ValidationError("seed entries must be integers")
    if any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise NotSymmetric("seed must be symmetric")
    if not all(d > 0 for d in rq.leading_minors(m)):
        raise NotPositiveDefinite("seed must be positive definite")
    return m


def weyl_invariant_form(seed, group: GroupDescriptor) -> LengthForm:
    """Sum of w^T seed w over the Weyl group (a product of symmetric groups).

    Entry (i, j) of the sum is |W| / |orbit| times the sum of seed over the
    W-orbit of the index pair (i, j); this avoids enumerating W.
    """
    m = _check_seed(seed)
    n = len(m)
    if n != group.rank:
        raise DimensionMismatch(f"seed has size {n}, group rank is {group.rank}")
    order = prod(factorial(len(b)) for b in group.blocks)
    owner = group.block_of
    blocks = group.blocks

    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            bi, bj = blocks[owner[i]], blocks[owner[j]]
            if i == j:
                orbit = [(k, k) for k in bi]
            elif owner[i] == owner[j]:
                orbit = [(k, l) for k in bi for l in bi if k != l]
            else:
                orbit = [(k, l) for k in bi for l in bj]
            total = sum(m[k][l] for k, l in orbit)
            out[i][j] = int(total * order / len(orbit))
    return LengthForm(tuple(tuple(r) for r in out), group)


def compare_ratios(alpha1: int, q1, alpha2: int, q2) -> Ordering:
    """Order alpha1/sqrt(q1) against alpha2/sqrt(q2) exactly (alphas >= 0)."""
    if alpha1 < 0 or alpha2 < 0 or q1 <= 0 or q2 <= 0:
        raise ValueError("compare_ratios needs alpha >= 0 and q > 0")
    lhs = Fraction(alpha1) ** 2 * Fraction(q2)
    rhs = Fraction(alpha2) ** 2 * Fraction(q1)
    return Ordering((lhs > rhs) - (lhs < rhs))
