"""Acceptance criteria 1-10, each an exact (tolerance zero) check.

Each ``criterion_k`` returns a :class:`CriterionResult`; ``run_all`` runs
them in order. All randomness is seeded.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import rational as rq
from .adjoint import adjoint_decompose, centralizer_lie_basis, components_nonnegative
from .cli import random_conjugator, torus_value, weighted_form
from .groups import GroupDescriptor
from .lattice import LengthForm
from .nilpotent import (
    associate,
    centralizer_decomposition,
    centralizer_dimension,
    jordan_matrix,
    optimal_ray_check,
    partitions,
    verify_associated,
)
from .solver import Semistable, WeightedPoint, brute_force_oracle, torus_optimal
from .transfer import (
    SubgroupDescriptor,
    check_associated_transfer,
    check_optimal_transfer,
    diagonal_embed,
    double_centralizer_check,
    set_partitions,
    sign_subgroups,
)

SEED = 20240601


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number:>2} {self.name}: {self.detail} ({self.elapsed:.1f}s)"


def _timed(number: int, name: str, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    passed, detail = body()
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def _nonzero_nilpotents(n_max: int):
    for n in range(1, n_max + 1):
        for p in partitions(n):
            e = jordan_matrix(p)
            if not rq.is_zero(e):
                yield p, e


def criterion_1(required: int = 200, bound: int = 7, widened_bound: int = 12, limit: float = 120.0) -> CriterionResult:
    """Solver against brute force on random weight sets."""

    def body():
        rng = random.Random(SEED)
        compared = outside = widened = semistable = 0
        start = time.perf_counter()
        while compared < required:
            n = rng.randint(1, 4)
            size = rng.randint(1, 6)
            ws = {tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(size)}
            ws.discard((0,) * n)
            if not ws:
                continue
            x = WeightedPoint.from_weights(sorted(ws))
            form = LengthForm.identity(n)
            rep = torus_optimal(x, form)
            oracle = brute_force_oracle(x, form, bound)
            if isinstance(rep, Semistable):
                if oracle.ratio_sq != 0:
                    return False, f"solver semistable but oracle found {oracle.ratio_sq} for {sorted(ws)}"
                semistable += 1
                continue
            reach = max(abs(w) for w in rep.primitive_optimal.weights)
            if reach > bound:
                if oracle.ratio_sq > rep.optimal_ratio_sq:
                    return False, f"oracle beats solver on {sorted(ws)}"
                outside += 1
                if reach <= widened_bound:
                    wide = brute_force_oracle(x, form, reach)
                    if wide.ratio_sq != rep.optimal_ratio_sq or wide.argmax != {rep.primitive_optimal.weights}:
                        return False, f"widened oracle disagrees on {sorted(ws)}"
                    widened += 1
                continue
            if oracle.ratio_sq != rep.optimal_ratio_sq or oracle.argmax != {rep.primitive_optimal.weights}:
                return False, (
                    f"mismatch on {sorted(ws)}: solver {rep.optimal_ratio_sq} {rep.primitive_optimal.weights}, "
                    f"oracle {oracle.ratio_sq} {sorted(oracle.argmax)}"
                )
            compared += 1
        elapsed = time.perf_counter() - start
        detail = (
            f"{compared} destabilized sets agree exactly, {semistable} semistable agree, "
            f"{outside} optima outside the box ({widened} confirmed in a widened box)"
        )
        return elapsed < limit, detail

    return _timed(1, "oracle equivalence", body)


def criterion_2() -> CriterionResult:
    def body():
        for n in range(2, 7):
            e = jordan_matrix((n,))
            form = LengthForm.identity(n)
            rep = torus_optimal(adjoint_decompose(e), form)
            expected = Fraction(12, n**3 - n)
            if rep.optimal_ratio_sq != expected:
                return False, f"J_{n}: {rep.optimal_ratio_sq} != {expected}"
            if n <= 4:
                oracle = brute_force_oracle(adjoint_decompose(e), form, 5)
                if oracle.ratio_sq != expected:
                    return False, f"J_{n}: oracle {oracle.ratio_sq} != {expected}"
        return True, "ratio^2 = 12/(n^3-n) for n=2..6, oracle agrees for n<=4"

    return _timed(2, "regular nilpotent closed form", body)


def criterion_3() -> CriterionResult:
    def body():
        count = 0
        for p, e in _nonzero_nilpotents(6):
            g = GroupDescriptor.general_linear(sum(p))
            for form in (LengthForm.identity(g.rank, g), weighted_form(g)):
                rc = optimal_ray_check(e, form, g)
                if rc.scaling not in (1, 2):
                    return False, f"partition {p}: scaling {rc.scaling}"
                count += 1
        return True, f"{count} (partition, form) pairs on the optimal ray with d in {{1,2}}"

    return _timed(3, "associated lies on the optimal ray", body)


def criterion_4() -> CriterionResult:
    def body():
        count = 0
        for n in range(1, 7):
            for p in partitions(n):
                e = jordan_matrix(p)
                dec = centralizer_decomposition(e, associate(e).lambda_a)
                want = centralizer_dimension(p)
                if dec.negative_part_dim != 0 or dec.dim_C_e_lambda + dec.dim_Re != want or dec.total_dim != want:
                    return False, f"partition {p}: {dec}"
                count += 1
        return True, f"{count} partitions: no negative grades, dimension = sum of squared conjugate parts"

    return _timed(4, "centralizer grading", body)


def criterion_5() -> CriterionResult:
    def body():
        count = 0
        for p, e in _nonzero_nilpotents(6):
            lam = torus_optimal(adjoint_decompose(e), LengthForm.identity(len(e))).primitive_optimal
            for m in centralizer_lie_basis(e):
                if not components_nonnegative(m, lam):
                    return False, f"partition {p}: centralizer element leaves P_lambda"
                count += 1
        return True, f"{count} centralizer basis elements have only nonnegative grades"

    return _timed(5, "stabilizer inside the optimal parabolic", body)


def criterion_6(bound: int = 5) -> CriterionResult:
    def body():
        count = 0
        for p, e in _nonzero_nilpotents(6):
            n = len(e)
            x = adjoint_decompose(e)
            form = LengthForm.identity(n)
            oracle = brute_force_oracle(x, form, bound)
            rep = torus_optimal(x, form)
            if len(oracle.argmax) != 1 or oracle.argmax != {rep.primitive_optimal.weights}:
                return False, f"partition {p}: oracle argmax {sorted(oracle.argmax)}"
            if oracle.ratio_sq != rep.optimal_ratio_sq:
                return False, f"partition {p}: oracle {oracle.ratio_sq} vs solver {rep.optimal_ratio_sq}"
            count += 1
        return True, f"{count} nilpotent cases with a single primitive maximizer in [-{bound},{bound}]^n"

    return _timed(6, "uniqueness in the torus", body)


def criterion_7(limit: float = 60.0) -> CriterionResult:
    def body():
        start = time.perf_counter()
        count = 0
        for p, e in _nonzero_nilpotents(5):
            g = GroupDescriptor.general_linear(len(e))
            for s, sub in sign_subgroups(g):
                if not sub.contains_lie(e):
                    continue
                opt = check_optimal_transfer(e, sub, LengthForm.identity(g.rank, g))
                assoc = check_associated_transfer(e, sub)
                if not (opt.holds and assoc.holds_a and assoc.holds_opt):
                    return False, f"partition {p}, s={s}: holds={opt.holds} holds_a={assoc.holds_a}"
                count += 1
        elapsed = time.perf_counter() - start
        return elapsed < limit, f"{count} (partition, s) instances, holds_a = holds_opt = true"

    return _timed(7, "transfer to pseudo-Levi subgroups", body)


def _block_nilpotents(blocks):
    """Nilpotents in Jordan form inside the block Levi, one per choice of block partitions."""
    n = sum(len(b) for b in blocks)
    for choice in itertools.product(*(list(partitions(len(b))) for b in blocks)):
        m = [[0] * n for _ in range(n)]
        for b, parts in zip(blocks, choice):
            j = jordan_matrix(parts)
            for r, i in enumerate(b):
                for c, k in enumerate(b):
                    m[i][k] = j[r][c]
        e = rq.square(m)
        if not rq.is_zero(e):
            yield e


def criterion_8() -> CriterionResult:
    def body():
        levis = checked = 0
        for n in range(1, 6):
            g = GroupDescriptor.general_linear(n)
            form = LengthForm.identity(n, g)
            for blocks in set_partitions(range(n)):
                sub = SubgroupDescriptor.levi(g, blocks)
                if not double_centralizer_check(sub):
                    return False, f"double centralizer fails for {blocks}"
                levis += 1
                for e in _block_nilpotents(sub.blocks):
                    if not check_optimal_transfer(e, sub, form).holds:
                        return False, f"optimal transfer fails in {blocks}"
                    if not check_associated_transfer(e, sub, form).holds_a:
                        return False, f"associated transfer fails in {blocks}"
                    checked += 1
        return True, f"{levis} block Levis recover themselves, {checked} nilpotents transfer"

    return _timed(8, "double centralizer instances", body)


def criterion_9() -> CriterionResult:
    def body():
        count = 0
        for n in range(1, 5):
            for p in partitions(n):
                e = jordan_matrix(p)
                lam = associate(e).lambda_a
                for r in (2, 3):
                    big, big_lam = diagonal_embed(e, lam, r)
                    prod = big_lam.group
                    if not verify_associated(big, big_lam, prod).all:
                        return False, f"partition {p}, r={r}: embedded pair is not associated"
                    if not rq.is_zero(e):
                        rc = optimal_ray_check(big, LengthForm.identity(prod.rank, prod), prod)
                        if rc.lambda_a.weights != big_lam.weights:
                            return False, f"partition {p}, r={r}: associated {rc.lambda_a.weights}"
                    count += 1
        return True, f"{count} embedded pairs associated and on the optimal ray"

    return _timed(9, "diagonal embedding", body)


def criterion_10(samples: int = 50) -> CriterionResult:
    def body():
        rng = random.Random(SEED + 10)
        equal = below = 0
        for n in range(2, 5):
            e = jordan_matrix((n,))
            form = LengthForm.identity(n)
            base = torus_value(e, form)
            for k in range(samples):
                monomial = k % 5 == 0
                g = random_conjugator(rng, n, monomial)
                conj = rq.conjugate(g, e)
                value = torus_value(conj, form)
                if value > base or (monomial and value != base):
                    return False, f"J_{n}, g={g}: {value} vs {base}"
                equal += value == base
                below += value < base
        return True, f"{3 * samples} conjugates: {equal} attain the Jordan value, {below} fall below it"

    return _timed(10, "conjugation sanity", body)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_all() -> list[CriterionResult]:
    return [c() for c in CRITERIA]
