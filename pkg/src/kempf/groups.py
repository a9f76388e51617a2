"""Group descriptors: GL(n), SL(n) and finite direct products of them.

Every group is realized block-diagonally inside one ambient matrix space of
size ``rank``. The fixed maximal torus is the diagonal one, so cocharacters and
weights are integer vectors of length ``rank``. SL factors impose a sum-zero
condition on the coordinates of their block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import ValidationError

GL = "general_linear"
SL = "special_linear"
PRODUCT = "product"


@dataclass(frozen=True)
class GroupDescriptor:
    kind: str
    n: int = 0
    factors: tuple["GroupDescriptor", ...] = ()

    def __post_init__(self):
        if self.kind in (GL, SL):
            if self.n < 1:
                raise ValidationError(f"{self.kind} needs n >= 1, got {self.n}")
            if self.factors:
                raise ValidationError("simple factors carry no sub-factors")
        elif self.kind == PRODUCT:
            if not self.factors:
                raise ValidationError("a product needs at least one factor")
            if any(f.kind == PRODUCT for f in self.factors):
                raise ValidationError("nested products must be flattened")
        else:
            raise ValidationError(f"unknown group kind {self.kind!r}")

    @classmethod
    def general_linear(cls, n: int) -> "GroupDescriptor":
        return cls(GL, n)

    @classmethod
    def special_linear(cls, n: int) -> "GroupDescriptor":
        return cls(SL, n)

    @classmethod
    def product(cls, factors) -> "GroupDescriptor":
        flat = []
        for f in factors:
            flat.extend(f.factors if f.kind == PRODUCT else (f,))
        return cls(PRODUCT, factors=tuple(flat))

    @classmethod
    def parse(cls, text: str) -> "GroupDescriptor":
        """Parse ``GL:3``, ``SL:2`` or ``GL:2xGL:2``."""
        parts = [p.strip() for p in re.split(r"\s*[xX\*]\s*", text.strip())]
        factors = []
        for p in parts:
            m = re.fullmatch(r"(GL|SL)\s*[:(]\s*(\d+)\s*\)?", p, flags=re.IGNORECASE)
            if m is None:
                raise ValidationError(f"cannot parse group {text!r}", "$.group")
            kind = GL if m.group(1).upper() == "GL" else SL
            factors.append(cls(kind, int(m.group(2))))
        return factors[0] if len(factors) == 1 else cls.product(factors)

    def __str__(self) -> str:
        if self.kind == PRODUCT:
            return "x".join(str(f) for f in self.factors)
        return f"{'GL' if self.kind == GL else 'SL'}:{self.n}"

    @property
    def simple_factors(self) -> tuple["GroupDescriptor", ...]:
        return self.factors if self.kind == PRODUCT else (self,)

    @cached_property
    def rank(self) -> int:
        return sum(f.n for f in self.simple_factors)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Coordinate blocks, one per simple factor, partitioning range(rank)."""
        out, off = [], 0
        for f in self.simple_factors:
            out.append(tuple(range(off, off + f.n)))
            off += f.n
        return tuple(out)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        owner = [0] * self.rank
        for b, coords in enumerate(self.blocks):
            for c in coords:
                owner[c] = b
        return tuple(owner)

    @property
    def is_special_linear(self) -> bool:
        return any(f.kind == SL for f in self.simple_factors)

    def lattice_constraints(self) -> tuple[tuple[int, ...], ...]:
        """Integer rows c with c . w = 0 cutting Y(T) out of Z^rank."""
        rows = []
        for f, coords in zip(self.simple_factors, self.blocks):
            if f.kind == SL:
                rows.append(tuple(int(i in coords) for i in range(self.rank)))
        return tuple(rows)

    def in_cocharacter_lattice(self, weights) -> bool:
        return len(weights) == self.rank and all(
            sum(c * w for c, w in zip(row, weights)) == 0
            for row in self.lattice_constraints()
        )

    def weyl_generators(self) -> list[tuple[int, ...]]:
        """Adjacent transpositions inside each block, as coordinate permutations."""
        gens = []
        for coords in self.blocks:
            for a, b in zip(coords, coords[1:]):
                perm = list(range(self.rank))
                perm[a], perm[b] = b, a
                gens.append(tuple(perm))
        return gens

    def lie_support(self, i: int, j: int) -> bool:
        """Whether entry (i, j) may be nonzero in Lie(G)."""
        return self.block_of[i] == self.block_of[j]
