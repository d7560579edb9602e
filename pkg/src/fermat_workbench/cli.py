"""Command-line front end: one JSON report per invocation on stdout.

Exit status is 0 for holds / found / none-found / vacuous, 1 when a scan
turns up a counterexample to an asserted property, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import asdict
from typing import Any, Callable

from . import legendre, pythagoras, quadrings, transcendental, zmodule
from .errors import WorkbenchError
from .report import Report

JOBS_ENV = "FERMAT_WORKBENCH_JOBS"
DEFAULT_SEED = 20240601

Outcome = tuple[dict[str, Any], str]


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _form(args: argparse.Namespace) -> legendre.LegendreForm:
    return legendre.normalize(args.a, args.b, args.c)


def _form_info(form: legendre.LegendreForm) -> dict[str, Any]:
    return {"form": form.coefficients, "provenance": form.provenance}


# -- pythagoras ---------------------------------------------------------------


def cmd_py_triples(args) -> Outcome:
    triples = pythagoras.enumerate_primitive_triples(args.limit)
    return {"count": len(triples), "triples": [(t.x, t.y, t.z) for t in triples]}, (
        "found" if triples else "vacuous"
    )


def cmd_py_reducible(args) -> Outcome:
    r = pythagoras.is_reducible(args.a, args.b, args.n)
    return asdict(r), "found" if r.reducible else "none-found"


def cmd_py_search(args) -> Outcome:
    sols = pythagoras.search_family(args.n, args.bound, args.bound, jobs=args.jobs)
    res = {
        "count": len(sols),
        "solutions": [{"X": s.X, "Y": s.Y, "Z": s.Z, "triple": s.triple} for s in sols],
    }
    if not sols:
        return res, "none-found"
    return res, "violated" if args.n >= 3 else "found"


def cmd_py_variant(args) -> Outcome:
    sol = pythagoras.variant_solution(args.kind, args.u, args.v, args.m)
    res = {
        "identity_holds": pythagoras.variant_identity_holds(args.kind, args.u, args.v, args.m),
        "solution": sol,
    }
    if not res["identity_holds"]:
        return res, "violated"
    return res, "found" if sol else "none-found"


# -- legendre -----------------------------------------------------------------


def cmd_lg_check(args) -> Outcome:
    form = _form(args)
    s = legendre.is_solvable(form)
    return {**_form_info(form), "conditions": s.conditions, "solvable": s.solvable}, (
        "holds" if s.solvable else "none-found"
    )


def cmd_lg_solve(args) -> Outcome:
    form = _form(args)
    sol = legendre.find_solution(form)
    return {**_form_info(form), "solution": sol}, "found" if sol else "none-found"


def cmd_lg_enum(args) -> Outcome:
    form = _form(args)
    sols = legendre.enumerate_solutions(form, args.bound)
    return {**_form_info(form), "count": len(sols), "solutions": sols}, "found" if sols else "none-found"


def cmd_lg_reduce(args) -> Outcome:
    r = legendre.fermat_to_legendre(args.a, args.b, args.c, args.n)
    res = {
        "form": r.form.coefficients,
        "d": (r.d1, r.d2, r.d3),
        "k": r.k,
        "point": r.point,
        "on_form": r.on_form,
        "fermat_holds": r.fermat_holds,
    }
    return res, "violated" if r.on_form else "holds"


def cmd_lg_abel(args) -> Outcome:
    form = _form(args)
    flags = legendre.abel_scan(form, args.bound)
    return {**_form_info(form), "count": len(flags), "flagged": flags}, "found" if flags else "none-found"


def cmd_lg_frey(args) -> Outcome:
    f = legendre.frey_curve(args.a, args.b, args.c, args.n)
    res = {**asdict(f), "roots": f.roots}
    return res, "violated" if f.fermat_holds or f.discriminant == 0 else "holds"


# -- zmodule ------------------------------------------------------------------


def cmd_zm_thm22(args) -> Outcome:
    s = zmodule.SParams(*args.s)
    if (args.l0 is None) != (args.l1 is None):
        raise WorkbenchError("--l0 and --l1 must be given together")
    if args.l0 is None:
        l0, l1 = zmodule.basis_of_L(s)
    else:
        l0, l1 = args.l0, args.l1
    for v in (l0, l1):
        if len(v) != 3:
            raise WorkbenchError(f"vector {v} must have three entries")
    holds = zmodule.thm22_check(l0, l1, s, args.k)
    res = {"l0": l0, "l1": l1, "m_k": s.power(args.k), "wedge": zmodule.wedge3(l0, l1, s.power(args.k))}
    return res, "holds" if holds else "violated"


def cmd_zm_sweep(args) -> Outcome:
    r = zmodule.thm22_sweep(args.samples, args.seed)
    return asdict(r), "violated" if r.failures else "holds"


def cmd_zm_cor23(args) -> Outcome:
    s = zmodule.SParams(*args.s)
    v = zmodule.cor23_check(args.m0, args.m1, s, args.k)
    res = {"outcome": v, "wedge": zmodule.wedge3(args.m0, args.m1, s.power(args.k))}
    if v is zmodule.Cor23Verdict.CONTRADICTION:
        return res, "violated"
    return res, "vacuous" if v is zmodule.Cor23Verdict.VACUOUS else "holds"


def cmd_zm_euler(args) -> Outcome:
    hit = zmodule.euler_counterexample_scan(args.n, args.bound, jobs=args.jobs)
    return {"counterexample": hit}, "violated" if hit else "none-found"


# -- quad ---------------------------------------------------------------------


def cmd_q_conj(args) -> Outcome:
    r = quadrings.conj_identity_sweep(args.samples, args.seed)
    return {**asdict(r), "tolerance": args.tol}, "holds" if r.max_residual < args.tol else "violated"


def _scan_outcome(r: quadrings.ScanMinimum, tol: float) -> Outcome:
    res = {"minimum": r.minimum, "witness": r.witness, "evaluated": r.evaluated, "tolerance": tol}
    if r.vacuous:
        return res, "vacuous"
    return res, "holds" if r.minimum > tol else "violated"


def cmd_q_prop36(args) -> Outcome:
    return _scan_outcome(quadrings.prop36_scan(args.xmax, args.prange), args.tol)


def cmd_q_prop37(args) -> Outcome:
    r = quadrings.prop37_scan(tuple(args.coeffs), args.xmax, args.prange, args.qrange)
    return _scan_outcome(r, args.tol)


def cmd_q_flt(args) -> Outcome:
    sols = quadrings.fermat_sqrt2_search(args.n, args.cbound)
    res = {"count": len(sols), "solutions": sols}
    if not sols:
        return res, "none-found"
    return res, "violated" if args.n >= 4 else "found"


# -- exp ----------------------------------------------------------------------


def _root_info(r: transcendental.RootSolveResult) -> dict[str, Any]:
    d = asdict(r)
    d.pop("trace")
    return d


def cmd_exp_solve(args) -> Outcome:
    r = transcendental.solve_exponent(transcendental.FTriple(args.a, args.b, args.c), args.tol)
    return _root_info(r), "found"


def cmd_exp_classify(args) -> Outcome:
    r = transcendental.solvability(args.a, args.b, args.c)
    res: dict[str, Any] = {"classification": r.verdict}
    if r.root:
        res["root"] = _root_info(r.root)
    if r.certificate:
        res["g_at_two"] = r.certificate.g_at_two
    return res, "holds"


def cmd_exp_const(args) -> Outcome:
    r = transcendental.special_constant_scan(args.cmax)
    return asdict(r), "vacuous" if r.vacuous else "holds"


def cmd_exp_integer(args) -> Outcome:
    r = transcendental.integer_proximity_scan(args.cmax, args.threshold, jobs=args.jobs)
    res = asdict(r)
    if r.vacuous:
        return res, "vacuous"
    return res, "violated" if r.flagged else "holds"


def cmd_scan_flt(args) -> Outcome:
    hit = transcendental.flt_desk_check(args.nmax, args.zmax, jobs=args.jobs)
    return {"counterexample": hit}, "violated" if hit else "none-found"


# -- parser -------------------------------------------------------------------


def _jobs_default() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help=f"worker processes (fallback ${JOBS_ENV})")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized sweeps")

    parser = argparse.ArgumentParser(prog="fermat-workbench", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name: str, func: Callable, *arguments: tuple[tuple, dict]):
        p = group.add_parser(name, parents=[common])
        for flags, kw in arguments:
            p.add_argument(*flags, **kw)
        p.set_defaults(func=func, command_name=None)
        return p

    def pos(*names: str):
        return [((n,), {"type": int}) for n in names]

    def opt(flag: str, typ=int, **kw):
        kw.setdefault("required", "default" not in kw)
        return ((flag,), {"type": typ, **kw})

    py = groups.add_parser("pythagoras").add_subparsers(dest="sub", required=True)
    leaf(py, "triples", cmd_py_triples, opt("--limit"))
    leaf(py, "reducible", cmd_py_reducible, *pos("a", "b", "n"))
    leaf(py, "search", cmd_py_search, opt("--n"), opt("--bound"))
    leaf(
        py, "variant", cmd_py_variant,
        opt("--kind", str, choices=[*pythagoras.VARIANT_KINDS, "plus6"]),
        *pos("u", "v"),
        (("m",), {"type": int, "nargs": "?", "default": None}),
    )

    lg = groups.add_parser("legendre").add_subparsers(dest="sub", required=True)
    leaf(lg, "check", cmd_lg_check, *pos("a", "b", "c"))
    leaf(lg, "solve", cmd_lg_solve, *pos("a", "b", "c"))
    leaf(lg, "enum", cmd_lg_enum, *pos("a", "b", "c"), opt("--bound"))
    leaf(lg, "reduce", cmd_lg_reduce, *pos("a", "b", "c"), opt("--n"))
    leaf(lg, "abel", cmd_lg_abel, *pos("a", "b", "c"), opt("--bound"))
    leaf(lg, "frey", cmd_lg_frey, *pos("a", "b", "c"), opt("--n"))

    zm = groups.add_parser("zmodule").add_subparsers(dest="sub", required=True)
    leaf(
        zm, "thm22", cmd_zm_thm22,
        (("--s",), {"type": int, "nargs": 3, "required": True, "metavar": ("A", "B", "C")}),
        opt("--k"), opt("--l0", _vec, default=None), opt("--l1", _vec, default=None),
    )
    leaf(zm, "sweep", cmd_zm_sweep, opt("--samples", default=10_000))
    leaf(
        zm, "cor23", cmd_zm_cor23,
        (("--s",), {"type": int, "nargs": 3, "required": True, "metavar": ("A", "B", "C")}),
        opt("--k"), opt("--m0", _vec), opt("--m1", _vec),
    )
    leaf(zm, "euler-scan", cmd_zm_euler, opt("--n"), opt("--bound"))

    q = groups.add_parser("quad").add_subparsers(dest="sub", required=True)
    leaf(q, "conj-check", cmd_q_conj, opt("--samples", default=1000), opt("--tol", float, default=1e-10))
    leaf(q, "prop36", cmd_q_prop36, opt("--xmax"), opt("--prange"), opt("--tol", float, default=1e-9))
    leaf(
        q, "prop37", cmd_q_prop37,
        (("--coeffs",), {"type": int, "nargs": 3, "default": [1, 1, 1], "metavar": ("A", "B", "C")}),
        opt("--xmax", default=10), opt("--prange", default=2), opt("--qrange", default=2),
        opt("--tol", float, default=1e-9),
    )
    leaf(q, "flt-sqrt2", cmd_q_flt, opt("--n"), opt("--cbound"))

    ex = groups.add_parser("exp").add_subparsers(dest="sub", required=True)
    leaf(ex, "solve", cmd_exp_solve, *pos("a", "b", "c"), opt("--tol", float, default=transcendental.DEFAULT_TOL))
    leaf(ex, "classify", cmd_exp_classify, *pos("a", "b", "c"))
    leaf(ex, "const-scan", cmd_exp_const, opt("--cmax"))
    leaf(ex, "integer-scan", cmd_exp_integer, opt("--cmax"), opt("--threshold", float, default=1e-6))

    sc = groups.add_parser("scan").add_subparsers(dest="sub", required=True)
    leaf(sc, "flt", cmd_scan_flt, opt("--nmax"), opt("--zmax"))
    return parser


_NOT_PARAMS = {"func", "group", "sub", "command_name", "jobs"}


def run(argv: list[str] | None = None) -> tuple[int, Report | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None
    if args.jobs is None:
        args.jobs = _jobs_default()
    command = f"{args.group} {args.sub}"
    params = {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_PARAMS}
    start = time.perf_counter()
    try:
        results, verdict = args.func(args)
    except WorkbenchError as exc:
        print(f"fermat-workbench {command}: error: {exc}", file=sys.stderr)
        return 2, None
    elapsed = int((time.perf_counter() - start) * 1000)
    report = Report(command, params, results, verdict, elapsed)
    return (1 if verdict == "violated" else 0), report


def main(argv: list[str] | None = None) -> int:
    code, report = run(argv)
    if report is not None:
        print(report.to_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
