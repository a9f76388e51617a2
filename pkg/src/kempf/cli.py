"""Command line interface and JSON job runner.

Every report has the shape ``{"job": ..., "status": ..., "result": ...}``
where ``job`` is the normalized input; running it again gives the same
report. Rationals travel as strings such as ``"1/2"`` or ``"-3"``.

Exit codes: 0 success, 2 usage error, 3 semistable input, 4 parse or
validation error, 5 internal check failure (including a failed sweep).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import rational as rq
from .adjoint import adjoint_decompose, centralizer_lie_basis, components_nonnegative
from .errors import KempfError, LimitExceeded, MismatchError, ParseError, SemistableSignal, ValidationError
from .groups import GroupDescriptor
from .lattice import LengthForm, weyl_invariant_form
from .nilpotent import (
    associate,
    centralizer_decomposition,
    centralizer_dimension,
    jordan_matrix,
    optimal_ray_check,
    partitions,
)
from .solver import OptimalClassReport, Semistable, WeightedPoint, brute_force_oracle, torus_optimal
from .transfer import (
    DIAGONAL,
    FULL,
    LEVI,
    PSEUDO_LEVI,
    SubgroupDescriptor,
    centralizer_subgroup,
    check_associated_transfer,
    check_optimal_transfer,
    double_centralizer_check,
    sign_subgroups,
)

COMMANDS = ("optimize", "nilpotent", "transfer-check", "oracle", "sweep")
DEFAULT_BOUND = 5
DEFAULT_SEED = 42
MAX_NMAX = 6
MAX_DENOMINATOR = 10**12

EXIT_OK, EXIT_USAGE, EXIT_SEMISTABLE, EXIT_INVALID, EXIT_INTERNAL = 0, 2, 3, 4, 5

_RATIONAL = re.compile(r"\s*-?\d+(\s*/\s*\d+)?\s*")


# ---------------------------------------------------------------- values


def fmt(q) -> str:
    return str(Fraction(q))


def fmt_vec(v) -> list[str]:
    return [fmt(x) for x in v]


def fmt_mat(m) -> list[list[str]]:
    return [fmt_vec(r) for r in m]


def parse_rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"expected an integer or 'p/q' string, got {value!r}", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        num, _, den = value.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ValidationError("zero denominator", path)
        q = Fraction(int(num), int(den or 1))
        if q.denominator > MAX_DENOMINATOR:
            raise ValidationError("denominator too large", path)
        return q
    raise ValidationError(f"expected an integer or 'p/q' string, got {value!r}", path)


def parse_int(value: Any, path: str) -> int:
    q = parse_rational(value, path)
    if q.denominator != 1:
        raise ValidationError(f"expected an integer, got {value!r}", path)
    return int(q)


def parse_matrix(value: Any, path: str) -> rq.Matrix:
    if not isinstance(value, list) or not value:
        raise ValidationError("expected a non-empty array of rows", path)
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != len(value):
            raise ValidationError("expected a square matrix", f"{path}[{i}]")
        rows.append(tuple(parse_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(rows)


def parse_weights(value: Any, path: str) -> list[tuple[int, ...]]:
    if not isinstance(value, list) or not value:
        raise ValidationError("expected a non-empty array of weights", path)
    out = []
    for i, w in enumerate(value):
        if not isinstance(w, list) or not w:
            raise ValidationError("expected an integer vector", f"{path}[{i}]")
        out.append(tuple(parse_int(x, f"{path}[{i}][{j}]") for j, x in enumerate(w)))
    if len({len(w) for w in out}) != 1:
        raise ValidationError("weights have differing lengths", path)
    return out


def load_json_arg(text: str, path: str) -> Any:
    """Decode a JSON argument; ``@file`` reads the file."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {text[1:]}: {exc.strerror}", path) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc.msg} at line {exc.lineno} column {exc.colno}", path) from None


# ---------------------------------------------------------------- job spec


@dataclass(frozen=True)
class JobSpec:
    command: str
    group: GroupDescriptor | None = None
    matrix: rq.Matrix | None = None
    weights: tuple[tuple[int, ...], ...] | None = None
    form: Any = "identity"
    oracle_bound: int = DEFAULT_BOUND
    subgroup: str = "full"
    n_max: int = 0
    seed: int = DEFAULT_SEED

    @classmethod
    def from_json(cls, data: Any) -> "JobSpec":
        if not isinstance(data, dict):
            raise ValidationError("job must be a JSON object")
        known = {"command", "group", "input", "form", "oracle_bound", "subgroup", "n_max", "seed"}
        extra = sorted(set(data) - known)
        if extra:
            raise ValidationError(f"unknown field {extra[0]!r}", f"$.{extra[0]}")
        command = data.get("command")
        if command not in COMMANDS:
            raise ValidationError(f"command must be one of {', '.join(COMMANDS)}", "$.command")
        group = None
        if data.get("group") is not None:
            if not isinstance(data["group"], str):
                raise ValidationError("group must be a string like 'GL:3'", "$.group")
            group = GroupDescriptor.parse(data["group"])
        matrix = weights = None
        if command != "sweep":
            if "input" not in data:
                raise ValidationError(f"{command} needs an input", "$.input")
            raw = data["input"]
            if isinstance(raw, dict):
                keys = sorted(raw)
                if keys == ["matrix"]:
                    matrix = parse_matrix(raw["matrix"], "$.input.matrix")
                elif keys == ["weights"]:
                    weights = tuple(parse_weights(raw["weights"], "$.input.weights"))
                else:
                    raise ValidationError("input object needs exactly one of 'matrix', 'weights'", "$.input")
            elif command in ("optimize", "oracle"):
                weights = tuple(parse_weights(raw, "$.input"))
            else:
                matrix = parse_matrix(raw, "$.input")
            if command in ("nilpotent", "transfer-check") and matrix is None:
                raise ValidationError(f"{command} needs a matrix input", "$.input")
            size = len(matrix) if matrix is not None else len(weights[0])
            if group is None:
                group = GroupDescriptor.general_linear(size)
            elif group.rank != size:
                raise ValidationError(f"input has size {size} but {group} has rank {group.rank}", "$.input")
        form = data.get("form", "identity")
        _check_form_shape(form)
        bound = parse_int(data.get("oracle_bound", DEFAULT_BOUND), "$.oracle_bound")
        if bound < 1:
            raise ValidationError("oracle_bound must be positive", "$.oracle_bound")
        subgroup = data.get("subgroup", "full")
        if not isinstance(subgroup, str):
            raise ValidationError("subgroup must be a string", "$.subgroup")
        n_max = parse_int(data.get("n_max", 0), "$.n_max")
        if command == "sweep" and n_max > MAX_NMAX:
            raise LimitExceeded(f"$.n_max: n_max={n_max} exceeds the limit {MAX_NMAX}")
        if n_max < 0:
            raise ValidationError("n_max must be nonnegative", "$.n_max")
        seed = parse_int(data.get("seed", DEFAULT_SEED), "$.seed")
        job = cls(command, group, matrix, weights, form, bound, subgroup, n_max, seed)
        if command != "sweep":
            job.length_form()
        if command == "transfer-check":
            job.subgroup_descriptor()
        return job

    def to_json(self) -> dict:
        out: dict[str, Any] = {"command": self.command}
        if self.command == "sweep":
            out.update(n_max=self.n_max, seed=self.seed)
            return out
        out["group"] = str(self.group)
        if self.matrix is not None:
            out["input"] = {"matrix": fmt_mat(self.matrix)}
        else:
            out["input"] = {"weights": [list(w) for w in self.weights]}
        out["form"] = _normalize_form(self.form)
        if self.command == "oracle":
            out["oracle_bound"] = self.oracle_bound
        if self.command == "transfer-check":
            out["subgroup"] = self.subgroup
        return out

    def length_form(self) -> LengthForm:
        return build_form(self.form, self.group)

    def subgroup_descriptor(self) -> SubgroupDescriptor:
        return parse_subgroup(self.subgroup, self.group)


def _check_form_shape(form: Any) -> None:
    if form == "identity":
        return
    if isinstance(form, dict) and len(form) == 1 and next(iter(form)) in ("matrix", "seed"):
        return
    raise ValidationError("form must be 'identity', {'matrix': ...} or {'seed': ...}", "$.form")


def _normalize_form(form: Any) -> Any:
    if form == "identity":
        return form
    key, value = next(iter(form.items()))
    return {key: [[parse_int(x, f"$.form.{key}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(value)]}


def build_form(form: Any, group: GroupDescriptor) -> LengthForm:
    _check_form_shape(form)
    if form == "identity":
        return LengthForm.identity(group.rank, group)
    key, value = next(iter(form.items()))
    path = f"$.form.{key}"
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise ValidationError("expected a square integer matrix", path)
    m = [[parse_int(x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(value)]
    if len(m) != group.rank or any(len(r) != group.rank for r in m):
        raise ValidationError(f"expected a {group.rank}x{group.rank} matrix", path)
    try:
        if key == "seed":
            return weyl_invariant_form(m, group)
        return LengthForm(m, group)
    except KempfError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc), path) from None


def parse_subgroup(text: str, group: GroupDescriptor) -> SubgroupDescriptor:
    """full | sl | levi:1,2|3,4 | centralizer:diag(1,1,-1,-1) | torus:diag(..);diag(..) | diagonal:r"""
    path = "$.subgroup"
    kind, _, arg = text.strip().partition(":")
    kind = kind.lower()
    try:
        if kind == "full":
            return SubgroupDescriptor.full(group)
        if kind == "sl":
            return SubgroupDescriptor.special_linear(group)
        if kind == "levi":
            blocks = [tuple(int(c) - 1 for c in b.split(",")) for b in arg.split("|")]
            return SubgroupDescriptor.levi(group, blocks)
        if kind in ("centralizer", "torus"):
            gens = []
            for item in arg.split(";"):
                m = re.fullmatch(r"\s*diag\((.*)\)\s*", item)
                if m is None:
                    raise ValidationError(f"expected diag(...), got {item!r}", path)
                gens.append([parse_rational(x.strip(), path) for x in m.group(1).split(",")])
            return centralizer_subgroup(group, gens, torus=(kind == "torus"))
        if kind == "diagonal":
            return SubgroupDescriptor.diagonal(group, int(arg))
    except ValidationError as exc:
        raise ValidationError(str(exc).split(": ", 1)[-1], path) from None
    except (ValueError, KempfError) as exc:
        raise ValidationError(str(exc), path) from None
    raise ValidationError(f"unknown subgroup {text!r}", path)


# ---------------------------------------------------------------- reports


def optimal_json(rep: OptimalClassReport) -> dict:
    return {
        "ratio_sq": fmt(rep.optimal_ratio_sq),
        "primitive_optimal": list(rep.primitive_optimal.weights),
        "alpha": rep.alpha_at_primitive,
        "min_norm_point": fmt_vec(rep.min_norm_point),
        "certificate": [{"weight": list(w.covector), "coefficient": fmt(c)} for w, c in rep.certificate],
        "parabolic_levels": [list(b) for b in rep.parabolic.levels],
        "constraints": [list(r) for r in rep.constraints],
    }


def semistable_json(cert: Semistable) -> dict:
    return {"certificate": [{"weight": list(w.covector), "coefficient": fmt(c)} for w, c in cert.certificate]}


def _optimize(job: JobSpec) -> tuple[str, dict]:
    x = _point(job)
    rep = torus_optimal(x, job.length_form())
    if isinstance(rep, Semistable):
        return "semistable", semistable_json(rep)
    return "ok", optimal_json(rep)


def _point(job: JobSpec) -> WeightedPoint:
    if job.matrix is not None:
        return adjoint_decompose(job.matrix, job.group)
    return WeightedPoint.from_weights(job.weights, job.group)


def _oracle(job: JobSpec) -> tuple[str, dict]:
    res = brute_force_oracle(_point(job), job.length_form(), job.oracle_bound)
    status = "ok" if res.ratio_sq > 0 else "semistable"
    return status, {
        "bound": job.oracle_bound,
        "ratio_sq": fmt(res.ratio_sq),
        "argmax": sorted(list(a) for a in res.argmax),
        "examined": res.examined,
    }


def _nilpotent(job: JobSpec) -> tuple[str, dict]:
    e, g, form = job.matrix, job.group, job.length_form()
    data = associate(e, g)
    result: dict[str, Any] = {
        "partitions": [list(p.parts) for p in data.partitions],
        "lambda_a": list(data.lambda_a.weights),
        "lambda_a_input": list(data.input_lambda.weights) if data.input_lambda else None,
        "levi_blocks": [list(b) for b in data.levi_blocks],
        "base_change": fmt_mat(data.base_change),
        "checks": {
            "graded_two": data.checks.graded_two,
            "distinguished": data.checks.distinguished,
            "in_derived_levi": data.checks.in_derived_levi,
        },
    }
    dec = centralizer_decomposition(data.jordan, data.lambda_a, g)
    result["centralizer"] = {
        "dims_by_grade": {str(k): v for k, v in dec.dims_by_grade.items()},
        "dim_Re": dec.dim_Re,
        "dim_C_e_lambda": dec.dim_C_e_lambda,
        "negative_part_dim": dec.negative_part_dim,
        "total_dim": dec.total_dim,
    }
    if rq.is_zero(e):
        return "semistable", result
    ray = optimal_ray_check(e, form, g)
    rep = torus_optimal(adjoint_decompose(data.jordan, g), form)
    result["primitive_optimal"] = list(ray.primitive_optimal.weights)
    result["scaling"] = ray.scaling
    result["ratio_sq"] = fmt(ray.optimal_ratio_sq)
    result["optimal"] = optimal_json(rep)
    return "ok", result


def _transfer(job: JobSpec) -> tuple[str, dict]:
    sub = job.subgroup_descriptor()
    form = job.length_form()
    opt = check_optimal_transfer(job.matrix, sub, form)
    result: dict[str, Any] = {
        "subgroup": {"kind": sub.kind, "blocks": [list(b) for b in sub.blocks], "copies": sub.copies},
        "constraints": [list(r) for r in sub.constraints()],
        "holds": opt.holds,
        "value_G_sq": fmt(opt.value_G_sq),
        "value_H_sq": fmt(opt.value_H_sq),
        "lambda_G": list(opt.lambda_G.weights),
        "lambda_H": list(opt.lambda_H.weights),
        "lambda_G_in_H": opt.lambda_G_in_H,
    }
    try:
        assoc = check_associated_transfer(job.matrix, sub, form)
        result["holds_a"] = assoc.holds_a
        result["holds_opt"] = assoc.holds_opt
        result["lambda_H_associated"] = list(assoc.lambda_H.weights)
    except KempfError as exc:
        if isinstance(exc, MismatchError):
            raise
        result["holds_a"] = None
        result["associated_note"] = str(exc)
    if sub.kind in (LEVI, PSEUDO_LEVI, FULL):
        result["double_centralizer"] = double_centralizer_check(sub)
    return "ok", result


def weighted_form(group: GroupDescriptor) -> LengthForm:
    """A fixed non-identity Weyl-invariant form: average of 2 I + (super/sub diagonal)."""
    n = group.rank
    seed = [[2 if i == j else int(abs(i - j) == 1) for j in range(n)] for i in range(n)]
    return weyl_invariant_form(seed, group)


def random_conjugator(rng: random.Random, n: int, monomial: bool) -> rq.Matrix:
    """Invertible small-entry integer matrix; monomial means permutation times diagonal."""
    if monomial:
        perm = list(range(n))
        rng.shuffle(perm)
        g = [[0] * n for _ in range(n)]
        for i, j in enumerate(perm):
            g[i][j] = rng.choice((-2, -1, 1, 2))
        return rq.square(g)
    while True:
        g = rq.square([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if rq.det(g) != 0:
            return g


def torus_value(e: rq.Matrix, form: LengthForm) -> Fraction:
    """Optimal ratio^2 of e relative to the diagonal torus; 0 if semistable there."""
    rep = torus_optimal(adjoint_decompose(e), form)
    return Fraction(0) if isinstance(rep, Semistable) else rep.optimal_ratio_sq


def _sweep_case(parts: tuple[int, ...], rng: random.Random) -> dict:
    n = sum(parts)
    g = GroupDescriptor.general_linear(n)
    e = jordan_matrix(parts)
    props: dict[str, Any] = {}

    def record(name, fn):
        try:
            ok, info = fn()
            props[name] = {"pass": bool(ok), **info}
        except (KempfError, AssertionError) as exc:
            props[name] = {"pass": False, "error": type(exc).__name__, "message": str(exc)}

    zero = rq.is_zero(e)
    lam = associate(e, g).lambda_a

    def centralizer():
        dec = centralizer_decomposition(e, lam, g)
        ok = dec.negative_part_dim == 0 and dec.graded and dec.total_dim == centralizer_dimension(parts)
        return ok, {"dims_by_grade": {str(k): v for k, v in dec.dims_by_grade.items()}, "total_dim": dec.total_dim}

    record("centralizer_structure", centralizer)
    if zero:
        props["semistable"] = {"pass": True}
        return {"partition": list(parts), "properties": props}
    identity = LengthForm.identity(n, g)
    weighted = weighted_form(g)

    def ray(form):
        def run():
            rc = optimal_ray_check(e, form, g)
            return True, {"primitive_optimal": list(rc.primitive_optimal.weights), "scaling": rc.scaling,
                          "ratio_sq": fmt(rc.optimal_ratio_sq)}
        return run

    record("optimal_ray_identity", ray(identity))
    record("optimal_ray_weighted", ray(weighted))

    def stabilizer():
        rep = torus_optimal(adjoint_decompose(e, g), identity)
        bad = [fmt_mat(m) for m in centralizer_lie_basis(e, g) if not components_nonnegative(m, rep.primitive_optimal)]
        return not bad, ({"counterexample": bad[0]} if bad else {})

    record("stabilizer_in_parabolic", stabilizer)

    def transfer():
        checked, failures = 0, []
        for s, sub in sign_subgroups(g):
            if not sub.contains_lie(e):
                continue
            key = tuple(sub.blocks)
            if key in seen_blocks:
                continue
            seen_blocks.add(key)
            checked += 1
            try:
                a = check_associated_transfer(e, sub, identity)
                if not (a.holds_a and a.holds_opt):
                    failures.append({"s": list(s), "holds_a": a.holds_a, "holds_opt": a.holds_opt})
            except (KempfError, AssertionError) as exc:
                failures.append({"s": list(s), "error": type(exc).__name__, "message": str(exc)})
        info: dict[str, Any] = {"subgroups": checked}
        if failures:
            info["counterexample"] = failures[0]
        return not failures, info

    seen_blocks: set = set()
    record("transfer", transfer)

    def conjugation():
        base = torus_value(e, identity)
        for k in range(3):
            h = random_conjugator(rng, n, monomial=(k == 0))
            value = torus_value(rq.conjugate(h, e), identity)
            if value > base or (k == 0 and value != base):
                return False, {"counterexample": {"g": fmt_mat(h), "value": fmt(value), "jordan_value": fmt(base)}}
        return True, {}

    record("conjugation", conjugation)
    return {"partition": list(parts), "properties": props}


def sweep(n_max: int, seed: int = DEFAULT_SEED) -> dict:
    if n_max > MAX_NMAX:
        raise LimitExceeded(f"n_max={n_max} exceeds the limit {MAX_NMAX}")
    rng = random.Random(seed)
    cases = [_sweep_case(p, rng) for n in range(1, n_max + 1) for p in partitions(n)]
    failed = [c for c in cases if not all(v["pass"] for v in c["properties"].values())]
    return {"cases": cases, "total": len(cases), "failed": len(failed), "all_pass": not failed}


def _sweep(job: JobSpec) -> tuple[str, dict]:
    summary = sweep(job.n_max, job.seed)
    return ("ok" if summary["all_pass"] else "fail"), summary


_HANDLERS = {
    "optimize": _optimize,
    "oracle": _oracle,
    "nilpotent": _nilpotent,
    "transfer-check": _transfer,
    "sweep": _sweep,
}


def run(job: JobSpec | dict) -> dict:
    """Execute a job and return its JSON-ready report."""
    if not isinstance(job, JobSpec):
        job = JobSpec.from_json(job)
    try:
        status, result = _HANDLERS[job.command](job)
    except SemistableSignal as exc:
        status = "semistable"
        result = {"message": str(exc)}
        if isinstance(exc.certificate, Semistable):
            result.update(semistable_json(exc.certificate))
    return {"job": job.to_json(), "status": status, "result": result}


def exit_code(report: dict) -> int:
    return {"ok": EXIT_OK, "semistable": EXIT_SEMISTABLE, "fail": EXIT_INTERNAL}[report["status"]]


# ---------------------------------------------------------------- argparse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kempf", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs: str):
        sp.add_argument("--group", help="group such as GL:3, SL:2 or GL:2xGL:2 (default GL of the input size)")
        if needs == "weights":
            src = sp.add_mutually_exclusive_group(required=True)
            src.add_argument("--weights", help="JSON list of integer weights, or @file")
            src.add_argument("--matrix", help="JSON matrix (adjoint weights are used), or @file")
        else:
            sp.add_argument("--matrix", required=True, help="JSON matrix, or @file")
        sp.add_argument("--form", default="identity", help="identity, or JSON {\"matrix\": ...} / {\"seed\": ...}, or @file")

    common(sub.add_parser("optimize", help="Kempf-optimal torus cocharacter"), "weights")
    oracle = sub.add_parser("oracle", help="brute-force search over a box")
    common(oracle, "weights")
    oracle.add_argument("--bound", type=int, default=None, help="box half-width (default $KEMPF_ORACLE_BOUND or 5)")
    common(sub.add_parser("nilpotent", help="associated and optimal cocharacters of a nilpotent"), "matrix")
    tc = sub.add_parser("transfer-check", help="compare optimal classes in G and a subgroup H")
    common(tc, "matrix")
    tc.add_argument("--subgroup", default="full",
                    help="full | sl | levi:1,2|3,4 | centralizer:diag(1,1,-1,-1) | torus:diag(...) | diagonal:r")
    sw = sub.add_parser("sweep", help="run the invariant suite over all partitions")
    sw.add_argument("--nmax", type=int, required=True)
    sw.add_argument("--seed", type=int, default=DEFAULT_SEED)
    rn = sub.add_parser("run", help="run a JSON job file")
    rn.add_argument("job", help="path to a job JSON file, or - for stdin")
    sub.add_parser("acceptance", help="run the acceptance criteria")
    return p


def _job_from_args(args: argparse.Namespace) -> dict:
    if args.command == "sweep":
        return {"command": "sweep", "n_max": args.nmax, "seed": args.seed}
    job: dict[str, Any] = {"command": args.command}
    if args.group:
        job["group"] = args.group
    if getattr(args, "weights", None):
        job["input"] = {"weights": load_json_arg(args.weights, "$.input.weights")}
    else:
        job["input"] = {"matrix": load_json_arg(args.matrix, "$.input.matrix")}
    form = args.form
    job["form"] = form if form == "identity" else load_json_arg(form, "$.form")
    if args.command == "oracle":
        bound = args.bound
        if bound is None:
            env = os.environ.get("KEMPF_ORACLE_BOUND")
            bound = parse_int(env, "$.oracle_bound") if env else DEFAULT_BOUND
        job["oracle_bound"] = bound
    if args.command == "transfer-check":
        job["subgroup"] = args.subgroup
    return job


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "acceptance":
        from .acceptance import run_all

        results = run_all()
        for r in results:
            print(r.line())
        return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL
    try:
        if args.command == "run":
            text = sys.stdin.read() if args.job == "-" else None
            data = load_json_arg(text if text is not None else "@" + args.job, "$")
        else:
            data = _job_from_args(args)
        report = run(data)
    except (ParseError, ValidationError, LimitExceeded) as exc:
        print(f"kempf: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (MismatchError, AssertionError) as exc:
        print(f"kempf: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except KempfError as exc:
        print(f"kempf: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(report, indent=2))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
