"""Command-line interface: ``arithgenus <command> ...``.

A JSON report document goes to stdout; ``--pretty`` adds a readable table on
stderr.  Exit status: 0 ok, 1 usage, 2 parse error, 3 precondition
violation, 4 verification mismatch, 5 projection exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from .constructions import make_hypersurface, project_to_hypersurface, segre_product_ideal
from .errors import (
    ArithGenusError,
    PolynomialSyntaxError,
    ProjectionExhausted,
)
from .families import (
    PipelineBudget,
    default_grid,
    genus_gap_family,
    maincorr_family_upto,
    verify_theorem_prod,
)
from .groebner import Ideal
from .invariants import analyze, hypersurface_genus, product_genus
from .parsing import format_polynomial, parse_generator_file, parse_polynomial
from .polyring import GREVLEX, LEX
from .report import ReportDocument

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_MISMATCH, EXIT_PROJECTION = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arithgenus", description=__doc__.splitlines()[0])
    p.add_argument("--pretty", action="store_true", help="also print a table to stderr")
    # leaf commands accept --pretty too; SUPPRESS keeps the top-level value otherwise
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="invariants of V(I)")
    a.add_argument("--ambient", type=int, help="projective index N (ring has N+1 variables)")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", type=Path, help="generator file")
    src.add_argument("--gen", action="append", help="generator expression (repeatable)")
    a.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")

    h = sub.add_parser("hypersurface", parents=[common], help="random hypersurface: pipeline vs closed form")
    h.add_argument("--d", type=int, required=True)
    h.add_argument("--ambient", type=int, required=True)
    h.add_argument("--seed", type=int, default=0)

    pr = sub.add_parser("product", parents=[common], help="genus of Y x Z")
    pr.add_argument("--left", type=Path, required=True)
    pr.add_argument("--right", type=Path, required=True)
    pr.add_argument("--pipeline", action="store_true", help="also run the Segre pipeline")
    pr.add_argument("--max-vars", type=int, default=PipelineBudget().max_vars)
    pr.add_argument("--max-degree", type=int, default=PipelineBudget().max_degree)

    fam = sub.add_parser("family", help="counterexample families")
    fsub = fam.add_subparsers(dest="family", required=True, parser_class=_Parser)
    mc = fsub.add_parser("maincorr", parents=[common], help="P^1 x H_l against hypersurface models")
    mc.add_argument("--n-min", type=int, default=4)
    mc.add_argument("--n-max", type=int, required=True)
    mc.add_argument("--l-max", type=int, required=True)
    mc.add_argument("--seeds", type=_int_list, default=[], help="re-analyze H_l for these seeds")
    gap = fsub.add_parser("gap", parents=[common], help="padded hypersurface models V(fg)")
    gap.add_argument("--base", type=Path, required=True)
    gap.add_argument("--degrees", type=_int_list, required=True)
    gap.add_argument("--model-degree", type=int, help="degree e of a hypersurface model (default: project)")
    gap.add_argument("--pipeline", action="store_true")
    gap.add_argument("--seed", type=int, default=0)
    gap.add_argument("--max-attempts", type=int, default=5)

    ver = sub.add_parser("verify", help="verification suites")
    vsub = ver.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    vp = vsub.add_parser("prod", parents=[common], help="p_a(H_d x H_l) closed form against Segre pipeline")
    grid = vp.add_mutually_exclusive_group(required=True)
    grid.add_argument("--grid", type=Path, help="file of 'd n l m' lines")
    grid.add_argument("--default-grid", action="store_true")
    vp.add_argument("--max-vars", type=int, default=PipelineBudget().max_vars)
    vp.add_argument("--max-degree", type=int, default=PipelineBudget().max_degree)
    vp.add_argument("--seed", type=int, default=0)

    pj = sub.add_parser("project", parents=[common], help="generic projection to a hypersurface")
    pj.add_argument("--gens", type=Path, required=True)
    pj.add_argument("--seed", type=int, default=0)
    pj.add_argument("--max-attempts", type=int, default=5)
    return p


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_ideal(path: Path):
    gf = parse_generator_file(_read(path))
    return Ideal(gf.generators, gf.nvars), gf


def read_grid(text: str):
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].replace(",", " ").split()
        if not line:
            continue
        if len(line) != 4:
            raise UsageError(f"grid line {lineno}: expected 'd n l m'")
        try:
            rows.append(tuple(int(x) for x in line))
        except ValueError:
            raise UsageError(f"grid line {lineno}: non-integer entry") from None
    return rows


# -- commands ---------------------------------------------------------------


def cmd_analyze(args) -> ReportDocument:
    if args.gens:
        I, gf = _load_ideal(args.gens)
        if args.ambient is not None and args.ambient + 1 != gf.nvars:
            raise UsageError(f"--ambient {args.ambient} contradicts the file header")
        source = [format_polynomial(g, gf.names) for g in gf.generators]
    else:
        if args.ambient is None:
            raise UsageError("--ambient is required with --gen")
        gens = [parse_polynomial(s, args.ambient + 1) for s in args.gen]
        I = Ideal(gens, args.ambient + 1)
        source = [format_polynomial(g) for g in gens]
    report = analyze(I, GREVLEX if args.order == "grevlex" else LEX)
    return ReportDocument(
        "analyze",
        {"command": "analyze", "ambient": I.ambient, "generators": source, "order": args.order},
        {"report": report},
    )


def cmd_hypersurface(args) -> ReportDocument:
    spec = make_hypersurface(args.d, args.ambient, args.seed)
    report = analyze(spec.ideal(), seed=args.seed)
    closed = hypersurface_genus(args.d, args.ambient)
    return ReportDocument(
        "hypersurface",
        {"command": "hypersurface", "d": args.d, "ambient": args.ambient, "seed": args.seed},
        {
            "form": format_polynomial(spec.form),
            "report": report,
            "closed_form_genus": closed,
            "closed_form_match": report.p_a == closed,
        },
    )


def cmd_product(args) -> ReportDocument:
    IY, gy = _load_ideal(args.left)
    IZ, gz = _load_ideal(args.right)
    ry, rz = analyze(IY), analyze(IZ)
    closed = product_genus(ry.p_a, ry.r, rz.p_a, rz.r)
    budget = PipelineBudget(args.max_vars, args.max_degree)
    result = {"left": ry, "right": rz, "closed_form_genus": closed, "dimension": ry.r + rz.r}
    result.update(pipeline=None, pipeline_match=None, pipeline_status="not requested")
    if args.pipeline:
        nv = IY.nvars * IZ.nvars
        maxdeg = max([g.total_degree() for g in IY.generators + IZ.generators] or [0])
        if nv > budget.max_vars or maxdeg > budget.max_degree:
            result["pipeline_status"] = f"skipped: {nv} Segre variables, degree {maxdeg} over budget"
        else:
            rp = analyze(segre_product_ideal(IY, IZ))
            result.update(pipeline=rp, pipeline_match=rp.p_a == closed, pipeline_status="computed")
    return ReportDocument(
        "product",
        {
            "command": "product",
            "left": [format_polynomial(g, gy.names) for g in gy.generators],
            "left_ambient": IY.ambient,
            "right": [format_polynomial(g, gz.names) for g in gz.generators],
            "right_ambient": IZ.ambient,
            "pipeline": args.pipeline,
            "max_vars": budget.max_vars,
            "max_degree": budget.max_degree,
        },
        result,
    )


def cmd_family(args) -> ReportDocument:
    if args.family == "maincorr":
        records = maincorr_family_upto(args.n_min, args.n_max, args.l_max, args.seeds)
        return ReportDocument(
            "family-maincorr",
            {
                "command": "family maincorr",
                "n_min": args.n_min,
                "n_max": args.n_max,
                "l_max": args.l_max,
                "seeds": args.seeds,
            },
            {"records": records, "all_gap_witnesses": all(r.gap_witness for r in records)},
        )
    I, gf = _load_ideal(args.base)
    records, projection = genus_gap_family(
        I,
        args.degrees,
        model_degree=args.model_degree,
        pipeline=args.pipeline,
        seed=args.seed,
        max_attempts=args.max_attempts,
    )
    return ReportDocument(
        "family-gap",
        {
            "command": "family gap",
            "base": [format_polynomial(g, gf.names) for g in gf.generators],
            "base_ambient": I.ambient,
            "degrees": args.degrees,
            "model_degree": args.model_degree,
            "pipeline": args.pipeline,
            "seed": args.seed,
        },
        {"records": records, "projection": projection},
    )


def cmd_verify(args) -> ReportDocument:
    grid = default_grid() if args.default_grid else read_grid(_read(args.grid))
    budget = PipelineBudget(args.max_vars, args.max_degree)
    report = verify_theorem_prod(grid, budget, seed=args.seed)
    return ReportDocument(
        "verify-prod",
        {
            "command": "verify prod",
            "grid": "default" if args.default_grid else str(args.grid),
            "max_vars": budget.max_vars,
            "max_degree": budget.max_degree,
            "seed": args.seed,
        },
        report,
    )


def cmd_project(args) -> ReportDocument:
    I, gf = _load_ideal(args.gens)
    source = analyze(I)
    projection = project_to_hypersurface(I, args.seed, args.max_attempts, report=source)
    image = analyze(projection.image_ideal)
    return ReportDocument(
        "project",
        {
            "command": "project",
            "generators": [format_polynomial(g, gf.names) for g in gf.generators],
            "ambient": I.ambient,
            "seed": args.seed,
            "max_attempts": args.max_attempts,
        },
        {
            "projection": projection,
            "source": source,
            "image": image,
            "genus_preserved": source.p_a == image.p_a,
        },
    )


COMMANDS = {
    "analyze": cmd_analyze,
    "hypersurface": cmd_hypersurface,
    "product": cmd_product,
    "family": cmd_family,
    "verify": cmd_verify,
    "project": cmd_project,
}


# -- pretty printing --------------------------------------------------------


def render_table(doc: ReportDocument) -> str:
    res = doc.result
    if doc.kind in ("analyze", "hypersurface"):
        r = res["report"]
        lines = [
            f"P^{r.ambient_n}: dim {r.r}, degree {r.degree}",
            f"Hilbert polynomial  {r.hilbert}",
            f"p_a = {r.p_a}, chi = {r.chi}",
        ]
        if doc.kind == "hypersurface":
            lines.append(f"closed form p_a = {res['closed_form_genus']} (match: {res['closed_form_match']})")
        return "\n".join(lines)
    if doc.kind == "family-maincorr":
        rows = [f"{'n':>3} {'l':>3} {'p_a(Y)':>10} {'chi(Y)':>10}  p_a(H_e)  chi(H_e)"]
        for rec in res["records"]:
            rows.append(f"{rec.n:>3} {rec.l:>3} {rec.paY:>10} {rec.chiY:>10}  >= 0      {rec.chiHe_bound}")
        return "\n".join(rows)
    if doc.kind == "family-gap":
        rows = [f"{'d':>3} {'e+d':>4} {'p_a(Y)':>8} {'p_a(H)':>8} {'gap':>8}"]
        for rec in res["records"]:
            rows.append(f"{rec.d:>3} {rec.e + rec.d:>4} {rec.paY:>8} {rec.paH:>8} {rec.gap:>8}")
        return "\n".join(rows)
    if doc.kind == "verify-prod":
        rows = [f"{'d':>2} {'n':>2} {'l':>2} {'m':>2} {'closed':>7} {'pipeline':>9}  status"]
        for c in res.checks:
            pipe = "-" if c.pipeline is None else str(c.pipeline)
            rows.append(f"{c.d:>2} {c.n:>2} {c.l:>2} {c.m:>2} {c.closed_form:>7} {pipe:>9}  {c.status}")
        rows.append(f"mismatches: {res.mismatches}")
        return "\n".join(rows)
    if doc.kind == "project":
        p = res["projection"]
        return (
            f"image: degree {p.image_degree} hypersurface in P^{p.image_ideal.ambient} "
            f"after {p.attempts} attempt(s)\n"
            f"p_a source = {res['source'].p_a}, p_a image = {res['image'].p_a}"
        )
    if doc.kind == "product":
        return (
            f"closed form p_a = {res['closed_form_genus']}; pipeline: {res['pipeline_status']}"
            + ("" if res["pipeline"] is None else f", p_a = {res['pipeline'].p_a}")
        )
    return ""


def _error_document(argv: Sequence[str], exc: BaseException, code: int) -> str:
    err = {"type": type(exc).__name__, "message": str(exc), "exit_code": code}
    if isinstance(exc, PolynomialSyntaxError):
        err.update(line=exc.line, column=exc.column)
    if isinstance(exc, ProjectionExhausted):
        err["attempts"] = exc.attempts
    return ReportDocument("error", {"argv": list(argv)}, err).to_json()


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        doc = COMMANDS[args.command](args)
        doc.timing = {"seconds": round(time.perf_counter() - start, 6)}
    except UsageError as exc:
        print(f"arithgenus: error: {exc}", file=sys.stderr)
        print(_error_document(argv, exc, EXIT_USAGE))
        return EXIT_USAGE
    except ArithGenusError as exc:
        print(f"arithgenus: {type(exc).__name__}: {exc}", file=sys.stderr)
        print(_error_document(argv, exc, exc.exit_code))
        return exc.exit_code
    print(doc.to_json())
    if args.pretty:
        print(render_table(doc), file=sys.stderr)
    if doc.kind == "verify-prod" and not doc.result.ok:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
