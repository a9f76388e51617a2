"""Kempf optimization over the diagonal torus for linear actions with S = {0}.

For a point x with torus weights chi, a cocharacter lambda drives x to 0 at
rate alpha(lambda) = min_chi <chi, lambda>. Maximizing alpha / ||lambda||
over Y(T) is dual to finding the point of least B-norm in the convex hull of
the vectors B^-1 chi; the maximizing ray is the ray through that point.
The min-norm point is computed with Wolfe's algorithm in exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import rational as rq
from .errors import DimensionMismatch, MismatchError, NotInLimitSet, ValidationError, ZeroPoint
from .groups import GroupDescriptor
from .lattice import (
    CocharLike,
    LengthForm,
    TorusCocharacter,
    Weight,
    WeightLike,
    as_cocharacter,
    as_weight,
    pairing,
    squared_length,
)


@dataclass(frozen=True)
class WeightedPoint:
    """Torus-weight decomposition of a vector x = sum_chi x_chi.

    Values are nonzero rationals, or for a weight with multiplicity (the zero
    weight of the adjoint representation) a tuple of rationals that is not
    identically zero.
    """

    components: Mapping[Weight, object]
    group: GroupDescriptor | None = None

    def __post_init__(self):
        comps = {}
        dims = set()
        for chi, value in self.components.items():
            chi = as_weight(chi)
            if isinstance(value, (tuple, list)):
                value = rq.vector(value)
                if all(v == 0 for v in value):
                    raise ValidationError(f"zero component stored for weight {chi.covector}")
            else:
                value = rq.as_fraction(value)
                if value == 0:
                    raise ValidationError(f"zero coefficient stored for weight {chi.covector}")
            comps[chi] = value
            dims.add(len(chi))
        if len(dims) > 1:
            raise DimensionMismatch(f"weights of differing lengths {sorted(dims)}")
        if self.group is not None and dims and dims != {self.group.rank}:
            raise DimensionMismatch(f"weights have length {dims.pop()}, group rank is {self.group.rank}")
        object.__setattr__(self, "components", dict(sorted(comps.items())))

    @classmethod
    def from_weights(cls, weights: Iterable[Sequence[int]], group: GroupDescriptor | None = None) -> "WeightedPoint":
        """Point with coefficient 1 on each listed weight."""
        return cls({Weight(tuple(w)): 1 for w in weights}, group)

    @property
    def support(self) -> tuple[Weight, ...]:
        return tuple(self.components)

    @property
    def dimension(self) -> int | None:
        if self.group is not None:
            return self.group.rank
        return len(self.support[0]) if self.components else None

    def __hash__(self):
        return hash((tuple((k, v) for k, v in self.components.items()), self.group))

    def __eq__(self, other):
        return (
            isinstance(other, WeightedPoint)
            and self.components == other.components
            and self.group == other.group
        )


def _check_dims(x: WeightedPoint, lam: TorusCocharacter) -> None:
    if x.components and len(x.support[0]) != len(lam):
        raise DimensionMismatch(f"point of dimension {len(x.support[0])} with cocharacter of length {len(lam)}")


def limit_exists(x: WeightedPoint, lam: CocharLike) -> bool:
    lam = as_cocharacter(lam)
    _check_dims(x, lam)
    return all(pairing(chi, lam) >= 0 for chi in x.support)


def alpha(x: WeightedPoint, lam: CocharLike) -> int:
    """Order of vanishing at t = 0 of t -> lambda(t).x (0 if the limit is nonzero)."""
    lam = as_cocharacter(lam)
    if not x.components:
        raise ZeroPoint("alpha is undefined for the zero point")
    _check_dims(x, lam)
    m = min(pairing(chi, lam) for chi in x.support)
    if m < 0:
        raise NotInLimitSet(f"lim lambda(t).x does not exist for lambda = {lam.weights}")
    return m


@dataclass(frozen=True)
class MinNormPoint:
    point: rq.Vector
    norm_sq: Fraction
    certificate: tuple[tuple[Weight, Fraction], ...]
    images: Mapping[Weight, rq.Vector] = field(repr=False, compare=False, default_factory=dict)


@dataclass(frozen=True)
class Semistable:
    """0 lies in the hull: ``certificate`` gives convex weights summing the images to 0."""

    certificate: tuple[tuple[Weight, Fraction], ...]


def _independent_rows(rows: Sequence[Sequence[int]]) -> list[rq.Vector]:
    reduced, _ = rq.rref(rows) if rows else ([], [])
    return [tuple(r) for r in reduced]


def _projector(form: LengthForm, constraints: Sequence[Sequence[int]]):
    """B-orthogonal projection onto {v : c . v = 0 for every constraint row c}."""
    rows = _independent_rows(constraints)
    if not rows:
        return None
    binv = rq.inverse(form.fractions)
    c = tuple(rows)
    binv_ct = rq.matmul(binv, rq.transpose(c))
    gram_inv = rq.inverse(rq.matmul(c, binv_ct))
    correction = rq.matmul(binv_ct, gram_inv)

    def project(u: rq.Vector) -> rq.Vector:
        cu = rq.matvec(c, u)
        shift = rq.matvec(correction, cu)
        return tuple(a - b for a, b in zip(u, shift))

    return project


def weight_images(
    support: Iterable[WeightLike], form: LengthForm, constraints: Sequence[Sequence[int]] = ()
) -> dict[Weight, rq.Vector]:
    """chi -> B^-1 chi, projected B-orthogonally onto the constrained subspace."""
    binv = rq.inverse(form.fractions)
    project = _projector(form, constraints)
    out = {}
    for chi in sorted(as_weight(c) for c in support):
        if len(chi) != form.size:
            raise DimensionMismatch(f"weight of length {len(chi)} against form of size {form.size}")
        img = rq.matvec(binv, chi.covector)
        out[chi] = project(img) if project else img
    return out


def _affine_minimizer(points: list[rq.Vector], form: LengthForm) -> list[Fraction]:
    """Coefficients v (sum 1) of the least-norm point of the affine hull."""
    k = len(points)
    gram = [[form.inner(p, q) for q in points] for p in points]
    system = tuple(tuple(gram[i]) + (Fraction(1),) for i in range(k)) + (
        tuple(Fraction(1) for _ in range(k)) + (Fraction(0),),
    )
    rhs = (Fraction(0),) * k + (Fraction(1),)
    return list(rq.solve(system, rhs)[:k])


def _combine(coeffs: Sequence[Fraction], points: Sequence[rq.Vector], dim: int) -> rq.Vector:
    out = [Fraction(0)] * dim
    for c, p in zip(coeffs, points):
        if c:
            for i, x in enumerate(p):
                out[i] += c * x
    return tuple(out)


def wolfe(points: Sequence[rq.Vector], form: LengthForm) -> tuple[rq.Vector, list[tuple[int, Fraction]]]:
    """Exact Wolfe minimum-norm-point algorithm in the B inner product.

    Returns the min-norm point of conv(points) and an affinely independent
    subset (indices into ``points``) with positive convex coefficients
    reproducing it. Ties are broken by the order of ``points``.
    """
    if not points:
        raise ValueError("empty point set")
    dim = len(points[0])
    norms = [form.inner(p, p) for p in points]
    start = min(range(len(points)), key=lambda i: (norms[i], i))
    active = [start]
    coeffs = [Fraction(1)]
    x = points[start]

    while True:
        xx = form.inner(x, x)
        scores = [form.inner(x, p) for p in points]
        j = min(range(len(points)), key=lambda i: (scores[i], i))
        if scores[j] >= xx or j in active:
            break
        active.append(j)
        coeffs.append(Fraction(0))
        while True:
            v = _affine_minimizer([points[i] for i in active], form)
            if all(c > 0 for c in v):
                coeffs = v
                x = _combine(coeffs, [points[i] for i in active], dim)
                break
            theta = min(w / (w - c) for w, c in zip(coeffs, v) if c <= 0 and w > c)
            coeffs = [theta * c + (1 - theta) * w for w, c in zip(coeffs, v)]
            keep = [i for i, w in enumerate(coeffs) if w > 0]
            active = [active[i] for i in keep]
            coeffs = [coeffs[i] for i in keep]
            x = _combine(coeffs, [points[i] for i in active], dim)
    return x, list(zip(active, coeffs))


def min_norm_point(
    support: Iterable[WeightLike], form: LengthForm, constraints: Sequence[Sequence[int]] = ()
) -> MinNormPoint | Semistable:
    support = sorted({as_weight(c) for c in support})
    if not support:
        raise ZeroPoint("min_norm_point needs a nonempty support")
    images = weight_images(support, form, constraints)
    pts = [images[chi] for chi in support]
    p, combo = wolfe(pts, form)
    cert = tuple(sorted((support[i], c) for i, c in combo))
    if not any(p):
        return Semistable(cert)
    return MinNormPoint(p, form.inner(p, p), cert, images)


@dataclass(frozen=True)
class ParabolicDescriptor:
    """P_lambda for diagonal lambda: entries (j, k) allowed iff w_j >= w_k."""

    weights: tuple[int, ...]

    @property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Coordinates grouped by weight, in decreasing weight order."""
        vals = sorted(set(self.weights), reverse=True)
        return tuple(tuple(i for i, w in enumerate(self.weights) if w == v) for v in vals)

    def allowed(self) -> tuple[tuple[bool, ...], ...]:
        w = self.weights
        return tuple(tuple(w[j] >= w[k] for k in range(len(w))) for j in range(len(w)))


@dataclass(frozen=True)
class OptimalClassReport:
    optimal_ratio_sq: Fraction
    primitive_optimal: TorusCocharacter
    alpha_at_primitive: int
    min_norm_point: rq.Vector
    certificate: tuple[tuple[Weight, Fraction], ...]
    parabolic: ParabolicDescriptor
    constraints: tuple[tuple[int, ...], ...] = ()


def _constraints_for(x: WeightedPoint, extra: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    rows = list(x.group.lattice_constraints()) if x.group is not None else []
    rows.extend(tuple(int(c) for c in r) for r in extra)
    return tuple(rows)


def torus_optimal(
    x: WeightedPoint, form: LengthForm, constraints: Sequence[Sequence[int]] = ()
) -> OptimalClassReport | Semistable:
    """Maximize alpha(lambda)/||lambda|| over the cocharacters of the torus.

    The lattice is Y(T) of ``x.group`` further cut down by ``constraints``
    (integer rows c with c . lambda = 0), e.g. Y(H) for a subgroup H.
    """
    if not x.components:
        raise ZeroPoint("torus_optimal needs a nonzero point")
    rows = _constraints_for(x, constraints)
    mnp = min_norm_point(x.support, form, rows)
    if isinstance(mnp, Semistable):
        return mnp
    lam = TorusCocharacter(rq.primitive_integer_vector(mnp.point))
    a = alpha(x, lam)
    q = squared_length(form, lam)
    ratio_sq = Fraction(a * a) / q
    if a <= 0 or ratio_sq != mnp.norm_sq:
        raise MismatchError(f"duality check failed: alpha^2/q = {ratio_sq}, |p*|^2 = {mnp.norm_sq}")
    if x.group is not None:
        lam = TorusCocharacter(lam.weights, x.group)
    return OptimalClassReport(
        optimal_ratio_sq=ratio_sq,
        primitive_optimal=lam,
        alpha_at_primitive=a,
        min_norm_point=mnp.point,
        certificate=mnp.certificate,
        parabolic=ParabolicDescriptor(lam.weights),
        constraints=rows,
    )


def check_certificate(x: WeightedPoint, form: LengthForm, report: OptimalClassReport) -> bool:
    """Recheck convexity, reconstruction and the min-norm optimality condition."""
    images = weight_images(x.support, form, report.constraints)
    coeffs = [c for _, c in report.certificate]
    if any(c < 0 for c in coeffs) or sum(coeffs) != 1:
        return False
    combo = _combine(coeffs, [images[w] for w, _ in report.certificate], form.size)
    if combo != tuple(report.min_norm_point):
        return False
    pp = form.inner(report.min_norm_point, report.min_norm_point)
    return all(form.inner(img, report.min_norm_point) >= pp for img in images.values())


@dataclass(frozen=True)
class OracleResult:
    ratio_sq: Fraction
    argmax: frozenset[tuple[int, ...]]
    examined: int


def _box_chunks(n: int, bound: int, chunk_dims: int = 5):
    """Yield int64 arrays covering [-bound, bound]^n in slices."""
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    tail = min(n, chunk_dims)
    head = n - tail
    grid = np.stack(np.meshgrid(*([values] * tail), indexing="ij"), axis=-1).reshape(-1, tail)
    for prefix in itertools.product(values.tolist(), repeat=head):
        block = np.empty((grid.shape[0], n), dtype=np.int64)
        block[:, :head] = prefix
        block[:, head:] = grid
        yield block


def brute_force_oracle(x: WeightedPoint, form: LengthForm, bound: int, constraints: Sequence[Sequence[int]] = ()) -> OracleResult:
    """Exhaustive search of the box [-bound, bound]^rank for the best ratio.

    Independent of the min-norm route: it evaluates alpha and ||lambda||^2
    directly and compares alpha^2 * q' with alpha'^2 * q in integers.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if not x.components:
        raise ZeroPoint("oracle needs a nonzero point")
    n = form.size
    rows = _constraints_for(x, constraints)
    weights = np.array([chi.covector for chi in x.support], dtype=np.int64)
    if weights.shape[1] != n:
        raise DimensionMismatch("weights and form disagree in dimension")
    bmat = np.array(form.matrix, dtype=np.int64)
    cmat = np.array(rows, dtype=np.int64).reshape(-1, n)

    best_a2, best_q = 0, 1
    argmax: set[tuple[int, ...]] = set()
    examined = 0
    for block in _box_chunks(n, bound):
        if cmat.shape[0]:
            block = block[np.all(block @ cmat.T == 0, axis=1)]
        nz = np.any(block != 0, axis=1)
        block = block[nz]
        examined += block.shape[0]
        if not block.shape[0]:
            continue
        a = (block @ weights.T).min(axis=1)
        keep = a > 0
        if not keep.any():
            continue
        block, a = block[keep], a[keep]
        q = np.einsum("ij,jk,ik->i", block, bmat, block)
        a2 = a * a
        approx = a2 / q
        cand = approx >= approx.max() * (1 - 1e-9)
        for lam, ai, qi in zip(block[cand], a2[cand], q[cand]):
            ai, qi = int(ai), int(qi)
            lhs, rhs = ai * best_q, best_a2 * qi
            if lhs > rhs:
                best_a2, best_q = ai, qi
                argmax = set()
            if lhs >= rhs:
                argmax.add(tuple(int(v) for v in lam))
    if best_a2 == 0:
        return OracleResult(Fraction(0), frozenset(), examined)
    primitive = set()
    for lam in argmax:
        g = 0
        for v in lam:
            g = gcd(g, v)
        if g == 1:
            primitive.add(lam)
    return OracleResult(Fraction(best_a2, best_q), frozenset(primitive), examined)

