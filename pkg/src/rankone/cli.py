"""Command-line entry point: ``rankone {catalog,kostant,ce,verify,report}``."""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import build, l_lowest_weights_of_n_minus
from .roots import InvalidInput, delta

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def catalog_doc(alg: str) -> dict:
    d = build(alg)
    rs = d.root_system
    low = l_lowest_weights_of_n_minus(d)
    return {
        "algebra": d.ident,
        "family": d.family,
        "real_form": d.real_form,
        "ambient_dim": str(d.dim),
        "roots": [a.to_json() for a in rs.roots],
        "simple_roots": [a.to_json() for a in rs.simple_roots],
        "delta_n": [a.to_json() for a in d.delta_n],
        "delta_l": [a.to_json() for a in d.delta_l],
        "a_star": d.a_star.to_json(),
        "grades": [{"root": a.to_json(), "grade": str(d.grade[a])} for a in d.delta_n],
        "delta": delta(rs).to_json(),
        "adjoint_hw": [a.to_json() for a in d.adjoint_hw],
        "l_lowest_weights_of_n_minus": {k: [w.to_json() for w in v] for k, v in low.items()},
        "counts": {"roots": str(len(rs.roots)), "delta_n": str(len(d.delta_n)), "delta_l": str(len(d.delta_l))},
    }


def kostant_doc(alg: str, degree: int, a_invariant: bool) -> dict:
    from .kostant import kostant_cohomology

    d = build(alg)
    out = []
    for hw in d.adjoint_hw:
        res = kostant_cohomology(d, hw, degree)
        items = res.a_invariant_summands if a_invariant else res.summands
        out += [{"module_hw": str(hw), **s.to_json()} for s in items]
    out.sort(key=lambda s: (s["module_hw"], s["coords"], s["word"]))
    return {"algebra": d.ident, "degree": str(degree), "a_invariant": a_invariant, "summands": out}


def ce_doc(alg: str, module: str, degree: int, full: bool) -> dict:
    from .chevalley import ad_action_module, setup
    from .cohomology import ce_h

    d = build(alg)
    sc, gs = setup(d)
    if module == "jet3":
        from .fields import build_lambda, jet_module

        if d.family == "f4":
            from .fields import f4_lambda_enabled

            if not f4_lambda_enabled():
                raise InvalidInput("the f4 jet module needs RANKONE_ENABLE_F4_LAMBDA=1")
        _, action = jet_module(build_lambda(sc, gs), 3)
    else:
        action = ad_action_module(sc, gs, module)
    res = ce_h(action, degree, a_invariant=not full)
    return {"algebra": d.ident, "module": module, **{k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v)
                                                       for k, v in res.to_json().items()},
            "ranks": {k: str(v) for k, v in res.ranks.items()}}


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankone", description="Exact Lie-theory checks for rank-one groups.")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("catalog", help="root data of one algebra")
    c.add_argument("algebra")

    k = sub.add_parser("kostant", help="Kostant summands of H^r(n, g)")
    k.add_argument("algebra")
    k.add_argument("--degree", type=int, default=1)
    k.add_argument("--a-invariant", action="store_true")

    e = sub.add_parser("ce", help="Chevalley-Eilenberg cohomology of n")
    e.add_argument("algebra")
    e.add_argument("--module", choices=["adjoint", "p", "g/p", "jet3"], default="adjoint")
    e.add_argument("--degree", type=int, choices=[0, 1], default=1)
    e.add_argument("--full", action="store_true", help="whole complex instead of the a-invariant part")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=["kostant", "ce", "jets", "gamma", "lambda", "all"])
    v.add_argument("--algebras", default=None, help="comma-separated ids, e.g. so:5,sl:3,f4")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--k", type=int, default=2)
    v.add_argument("--enable-f4-lambda", action="store_true")
    v.add_argument("--format", choices=["json", "table", "both"], default="both")

    r = sub.add_parser("report", help="rigidity verdict table")
    r.add_argument("--algebras", default=None)
    r.add_argument("--format", choices=["json", "table", "both"], default="both")
    return p


def _emit(doc, fmt: str, rows=None, columns=None) -> None:
    from .suites import format_table

    if fmt in ("json", "both"):
        print(dumps(doc))
    if fmt in ("table", "both") and rows is not None:
        if fmt == "both":
            print()
        print(format_table(rows, columns))


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.cmd == "catalog":
            print(dumps(catalog_doc(args.algebra)))
            return EXIT_OK
        if args.cmd == "kostant":
            if args.degree < 0:
                raise InvalidInput("degree must be nonnegative")
            print(dumps(kostant_doc(args.algebra, args.degree, args.a_invariant)))
            return EXIT_OK
        if args.cmd == "ce":
            print(dumps(ce_doc(args.algebra, args.module, args.degree, args.full)))
            return EXIT_OK
        if args.cmd == "verify":
            from .suites import SUITES, run_suites

            if args.jobs < 1 or args.k < 2:
                raise InvalidInput("--jobs must be >= 1 and --k >= 2")
            suites = list(SUITES) if args.suite == "all" else [args.suite]
            algs = [a.strip() for a in args.algebras.split(",") if a.strip()] if args.algebras else None
            doc = run_suites(suites, algs, jobs=args.jobs,
                             opts={"k": args.k, "enable_f4_lambda": args.enable_f4_lambda})
            _emit(doc, args.format, doc["checks"], ["check", "algebra", "status", "expected", "computed"])
            return EXIT_FAIL if doc["verdict"] == "fail" else EXIT_OK
        if args.cmd == "report":
            from .suites import report

            algs = [a.strip() for a in args.algebras.split(",") if a.strip()] if args.algebras else None
            doc = report(algs)
            _emit(doc, args.format, doc["rows"], ["real_form", "algebra", "verdict", "h1_dim", "h1_weights"])
            return EXIT_OK if all(r["consistent"] == "True" for r in doc["rows"]) else EXIT_FAIL
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
