"""Command-line front end: property sweeps and exact reports.

Subcommands:
    dunkl commute | gram | apply
    chevalley check
    takiff invariants | image | criterion

Reports render as text or JSON (--json).  Every rational is emitted as a
"p/q" string, never a float, and a fixed seed makes randomized cases
reproducible: identical configurations produce byte-identical JSON apart
from the wall-time field.

Exit codes: 0 all cases passed, 1 some property failed, 2 usage or parse
error, 3 a work bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import ParseError, Polynomial, monomials_of_degree, parse as parse_poly, render
from .dunkl import (commutator_check, dunkl_apply, gram_basis, gram_matrix,
                    make_context, positivity_certificate)
from .liealg import (WorkBoundExceeded, adjoint_derivation,
                     invariants_graded, make_sl, takiff_extend)
from .restriction import (CartanFrame, chevalley_graded_check, criterion_check,
                          criterion_subspace, image_basis)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


@dataclass
class RunConfig:
    command: str
    system: str | None = None
    algebra: str | None = None
    k: str | None = None
    m: int = 1
    degree: int | None = None
    max_degree: int | None = None
    invariants_only: bool = False
    xi: str | None = None
    poly: str | None = None
    random_cases: int = 0
    seed: int = 0
    work_bound: int = 20000
    json_output: bool = False


@dataclass
class Case:
    name: str
    status: str                     # "pass" | "fail" | "unknown"
    witness: str | None = None
    data: dict = field(default_factory=dict)


@dataclass
class Report:
    command: str
    parameters: dict
    cases: list[Case] = field(default_factory=list)

    def add(self, case: Case) -> None:
        self.cases.append(case)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.cases if c.status == "fail")

    def to_dict(self, wall_ms: int) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "cases": [{"name": c.name, "status": c.status,
                       "witness": c.witness, "data": c.data} for c in self.cases],
            "summary": {"total": len(self.cases),
                        "passed": sum(1 for c in self.cases if c.status == "pass"),
                        "failed": self.failed,
                        "unknown": sum(1 for c in self.cases if c.status == "unknown")},
            "wall_time_ms": wall_ms,
        }

    def to_text(self, wall_ms: int) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.parameters.items():
            lines.append(f"  {key}: {value}")
        for c in self.cases:
            line = f"[{c.status.upper():>4}] {c.name}"
            if c.witness:
                line += f"  witness: {c.witness}"
            lines.append(line)
            for key, value in c.data.items():
                if isinstance(value, list):
                    for item in value:
                        lines.append(f"         {key}: {item}")
                else:
                    lines.append(f"         {key}: {value}")
        s = self.to_dict(wall_ms)["summary"]
        lines.append(f"summary: {s['passed']}/{s['total']} passed, "
                     f"{s['failed']} failed, {s['unknown']} unknown ({wall_ms} ms)")
        return "\n".join(lines)


def _frac(x: Fraction) -> str:
    return str(x)


def _matrix_strings(matrix) -> list[list[str]]:
    return [[_frac(x) for x in row] for row in matrix]


def _random_polynomial(rng: random.Random, dim: int, max_degree: int) -> Polynomial:
    terms = {}
    for d in range(max_degree + 1):
        for mono in monomials_of_degree(dim, d):
            if rng.random() < 0.4:
                num = rng.randint(-4, 4)
                den = rng.randint(1, 3)
                if num:
                    terms[mono] = Fraction(num, den)
    return Polynomial(dim, terms)


# -- dunkl ----------------------------------------------------------------


def cmd_dunkl_commute(cfg: RunConfig) -> Report:
    ctx = make_context(cfg.system, cfg.k)
    max_degree = cfg.max_degree if cfg.max_degree is not None else 5
    report = Report("dunkl commute", {
        "type": cfg.system, "k": cfg.k, "max_degree": max_degree,
        "random": cfg.random_cases, "seed": cfg.seed})
    rank = ctx.rank
    directions = [[Fraction(i == j) for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            failures = []
            count = 0
            for d in range(max_degree + 1):
                for mono in monomials_of_degree(rank, d):
                    p = Polynomial(rank, {mono: Fraction(1)})
                    count += 1
                    if commutator_check(ctx, directions[i], directions[j], p):
                        failures.append(render(p))
            status = "pass" if not failures else "fail"
            report.add(Case(
                name=f"[T_e{i + 1}, T_e{j + 1}] on monomials of degree <= {max_degree}",
                status=status,
                witness=failures[0] if failures else None,
                data={"cases": count}))
    if cfg.random_cases:
        rng = random.Random(cfg.seed)
        failures = []
        for _ in range(cfg.random_cases):
            p = _random_polynomial(rng, rank, max_degree)
            for i in range(rank):
                for j in range(i + 1, rank):
                    if commutator_check(ctx, directions[i], directions[j], p):
                        failures.append(render(p))
        report.add(Case(name=f"random polynomials ({cfg.random_cases})",
                        status="pass" if not failures else "fail",
                        witness=failures[0] if failures else None))
    return report


def cmd_dunkl_gram(cfg: RunConfig) -> Report:
    ctx = make_context(cfg.system, cfg.k)
    degree = cfg.degree if cfg.degree is not None else 2
    report = Report("dunkl gram", {
        "type": cfg.system, "k": cfg.k, "degree": degree,
        "invariants_only": cfg.invariants_only})
    basis = gram_basis(ctx, degree, cfg.invariants_only)
    matrix = gram_matrix(ctx, degree, cfg.invariants_only)
    symmetric = all(matrix[i][j] == matrix[j][i]
                    for i in range(len(matrix)) for j in range(len(matrix)))
    report.add(Case(name=f"gram matrix ({len(basis)}x{len(basis)})",
                    status="pass" if symmetric else "fail",
                    witness=None if symmetric else "matrix is not symmetric",
                    data={"basis": [render(b) for b in basis],
                          "matrix": _matrix_strings(matrix)}))
    k_values = ctx.k.resolve(ctx.rs)
    if cfg.invariants_only and all(v > 0 for v in k_values.values()):
        definite, minors = positivity_certificate(matrix)
        report.add(Case(name="positive definiteness (leading principal minors)",
                        status="pass" if definite else "fail",
                        data={"minors": [_frac(m) for m in minors]}))
    return report


def cmd_dunkl_apply(cfg: RunConfig) -> Report:
    ctx = make_context(cfg.system, cfg.k)
    xi = [Fraction(part.strip()) for part in cfg.xi.split(",")]
    p = parse_poly(cfg.poly, ctx.rank)
    result = dunkl_apply(ctx, xi, p)
    report = Report("dunkl apply", {
        "type": cfg.system, "k": cfg.k, "xi": cfg.xi, "poly": cfg.poly})
    report.add(Case(name=f"T_xi({render(p)})", status="pass",
                    data={"result": render(result)}))
    return report


# -- chevalley -------------------------------------------------------------


class BoundExceededWithPartial(Exception):
    """Carries the rows finished before a work bound stopped the sweep."""

    def __init__(self, report: Report, cause: WorkBoundExceeded):
        super().__init__(str(cause))
        self.report = report


def cmd_chevalley_check(cfg: RunConfig) -> Report:
    g = _algebra(cfg.algebra)
    max_degree = cfg.max_degree if cfg.max_degree is not None else 6
    report = Report("chevalley check", {
        "algebra": cfg.algebra, "max_degree": max_degree, "work_bound": cfg.work_bound})
    for d in range(max_degree + 1):
        try:
            rep = chevalley_graded_check(g, d, cfg.work_bound)
        except WorkBoundExceeded as exc:
            raise BoundExceededWithPartial(report, exc) from exc
        report.add(Case(
            name=f"degree {d}",
            status="pass" if rep.isomorphic else "fail",
            data={"dim_invariants": rep.dim_invariants,
                  "dim_restricted": rep.dim_restricted,
                  "dim_target": rep.dim_target}))
    return report


# -- takiff ----------------------------------------------------------------


def _algebra(name: str):
    if name == "sl2":
        return make_sl(2)
    if name == "sl3":
        return make_sl(3)
    raise ValueError(f"unsupported algebra {name!r}; use sl2 or sl3")


def _degree_range(cfg: RunConfig, default_max: int) -> list[int]:
    if cfg.degree is not None:
        return [cfg.degree]
    top = cfg.max_degree if cfg.max_degree is not None else default_max
    return list(range(top + 1))


def cmd_takiff_invariants(cfg: RunConfig) -> Report:
    gm = takiff_extend(_algebra(cfg.algebra), cfg.m)
    names = list(gm.basis_names)
    report = Report("takiff invariants", {
        "algebra": cfg.algebra, "m": cfg.m, "work_bound": cfg.work_bound})
    for d in _degree_range(cfg, 4):
        basis = invariants_graded(gm, d, cfg.work_bound)
        annihilated = all(
            not adjoint_derivation(gm, x, b)
            for b in basis.basis for x in range(gm.dim))
        report.add(Case(name=f"degree {d} invariants",
                        status="pass" if annihilated else "fail",
                        data={"dim": basis.dim, "basis": basis.render(names)}))
    return report


def cmd_takiff_image(cfg: RunConfig) -> Report:
    if cfg.algebra == "sl2" and cfg.m > 2:
        raise ValueError("takiff image supports sl2 with m <= 2")
    if cfg.algebra == "sl3" and cfg.m != 1:
        raise ValueError("takiff image supports sl3 with m = 1 only")
    gm = takiff_extend(_algebra(cfg.algebra), cfg.m)
    frame = CartanFrame(gm)
    dims_only = cfg.algebra == "sl3"
    report = Report("takiff image", {
        "algebra": cfg.algebra, "m": cfg.m, "mode": "dims" if dims_only else "basis",
        "work_bound": cfg.work_bound})
    for d in _degree_range(cfg, 4):
        image = image_basis(frame, d, cfg.work_bound)
        criterion = criterion_subspace(frame, d)
        included = criterion.contains_subspace(image)
        if image.dim == criterion.dim and included:
            verdict = "equal"
        elif included:
            verdict = "strict inclusion"
        else:
            verdict = "criterion does not contain image"
        data = {"dim_image": image.dim, "dim_criterion": criterion.dim,
                "verdict": verdict}
        if not dims_only:
            data["image_basis"] = image.render(frame.names)
            data["criterion_basis"] = criterion.render(frame.names)
        report.add(Case(name=f"degree {d}",
                        status="pass" if included else "fail",
                        data=data))
    return report


def cmd_takiff_criterion(cfg: RunConfig) -> Report:
    gm = takiff_extend(_algebra(cfg.algebra), cfg.m)
    frame = CartanFrame(gm)
    p = frame.parse(cfg.poly)
    bound = cfg.max_degree if cfg.max_degree is not None else 8
    result = criterion_check(frame, p, image_degree_bound=bound, work_bound=cfg.work_bound)
    report = Report("takiff criterion", {
        "algebra": cfg.algebra, "m": cfg.m, "poly": cfg.poly,
        "variables": list(frame.names),
        "raw_variables": [[i, s] for (i, s) in frame.raw_pairs],
        "image_degree_bound": bound})
    report.add(Case(name="condition 1: diagonal reflection invariance",
                    status="pass" if result.condition1 else "fail",
                    witness=None if result.condition1
                    else f"not fixed by r_alpha, alpha = {result.condition1_witness}"))
    if result.condition2:
        report.add(Case(name="condition 2: coroot-power divisibility", status="pass"))
    else:
        root, n, remainder = result.condition2_witness
        report.add(Case(name="condition 2: coroot-power divisibility", status="fail",
                        witness=f"alpha = {root}, n = {n}, remainder = {remainder}"))
    report.add(Case(name="membership in the restriction image",
                    status=result.in_image,
                    data={"degree_bound": result.image_degree_bound}))
    return report


# -- driver ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunklinv",
        description="Exact Dunkl operators, Weyl invariants, and Takiff restriction images.")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized cases")
    parser.add_argument("--work-bound", type=int, default=20000,
                        help="monomial-space size limit for graded computations")
    # The same flags are accepted after the subcommand; SUPPRESS keeps a
    # subcommand-level absence from clobbering a top-level occurrence.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--work-bound", type=int, default=argparse.SUPPRESS)
    parents = {"parents": [common]}
    top = parser.add_subparsers(dest="group", required=True)

    dunkl = top.add_parser("dunkl", help="Dunkl operator properties").add_subparsers(
        dest="action", required=True)
    commute = dunkl.add_parser("commute", help="check pairwise commutativity", **parents)
    commute.add_argument("--type", required=True, help="root system, e.g. A2")
    commute.add_argument("--k", required=True, help='multiplicities, e.g. "all=1/2"')
    commute.add_argument("--max-degree", type=int, default=5)
    commute.add_argument("--random", type=int, default=0, dest="random_cases",
                         help="extra random polynomials")
    gram = dunkl.add_parser("gram", help="exact Gram matrix of the pairing", **parents)
    gram.add_argument("--type", required=True)
    gram.add_argument("--k", required=True)
    gram.add_argument("--degree", type=int, default=2)
    gram.add_argument("--invariants-only", action="store_true")
    apply_ = dunkl.add_parser("apply", help="apply T_xi to a polynomial", **parents)
    apply_.add_argument("--type", required=True)
    apply_.add_argument("--k", required=True)
    apply_.add_argument("--xi", required=True, help="comma-separated rationals")
    apply_.add_argument("--poly", required=True, help="polynomial in x1..xn")

    chev = top.add_parser("chevalley", help="graded restriction checks").add_subparsers(
        dest="action", required=True)
    check = chev.add_parser("check", help="invariant/restriction/target dimensions", **parents)
    check.add_argument("--algebra", required=True, choices=("sl2", "sl3"))
    check.add_argument("--max-degree", type=int, default=6)

    takiff = top.add_parser("takiff", help="Takiff algebra computations").add_subparsers(
        dest="action", required=True)
    inv = takiff.add_parser("invariants", help="graded invariant bases", **parents)
    inv.add_argument("--algebra", required=True, choices=("sl2", "sl3"))
    inv.add_argument("--m", type=int, default=1)
    inv.add_argument("--degree", type=int)
    inv.add_argument("--max-degree", type=int)
    image = takiff.add_parser("image", help="restriction image vs criterion space", **parents)
    image.add_argument("--algebra", required=True, choices=("sl2", "sl3"))
    image.add_argument("--m", type=int, default=1)
    image.add_argument("--degree", type=int)
    image.add_argument("--max-degree", type=int)
    crit = takiff.add_parser("criterion", help="run the membership criterion on a polynomial", **parents)
    crit.add_argument("--algebra", required=True, choices=("sl2", "sl3"))
    crit.add_argument("--m", type=int, default=1)
    crit.add_argument("--poly", required=True, help="polynomial in the h_m aliases (u, v, w)")
    crit.add_argument("--max-degree", type=int, help="membership degree bound")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=f"{args.group} {args.action}",
        system=getattr(args, "type", None),
        algebra=getattr(args, "algebra", None),
        k=getattr(args, "k", None),
        m=getattr(args, "m", 1),
        degree=getattr(args, "degree", None),
        max_degree=getattr(args, "max_degree", None),
        invariants_only=getattr(args, "invariants_only", False),
        xi=getattr(args, "xi", None),
        poly=getattr(args, "poly", None),
        random_cases=getattr(args, "random_cases", 0),
        seed=args.seed,
        work_bound=args.work_bound,
        json_output=args.json,
    )


_COMMANDS = {
    "dunkl commute": cmd_dunkl_commute,
    "dunkl gram": cmd_dunkl_gram,
    "dunkl apply": cmd_dunkl_apply,
    "chevalley check": cmd_chevalley_check,
    "takiff invariants": cmd_takiff_invariants,
    "takiff image": cmd_takiff_image,
    "takiff criterion": cmd_takiff_criterion,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    started = time.monotonic()

    def emit(report: Report) -> None:
        wall_ms = int((time.monotonic() - started) * 1000)
        if cfg.json_output:
            print(json.dumps(report.to_dict(wall_ms), indent=2))
        else:
            print(report.to_text(wall_ms))

    try:
        report = _COMMANDS[cfg.command](cfg)
    except BoundExceededWithPartial as exc:
        emit(exc.report)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except WorkBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(report)
    return EXIT_PASS if report.failed == 0 else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
