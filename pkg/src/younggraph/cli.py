"""Command-line entry point: enumeration, projection, dominance queries,
inequality sweeps, the growth sampler and the convergence experiment.

Exit codes: 0 = completed and every checked statement holds; 2 = at least one
counterexample was found (a finding, not a failure); 1 = usage or internal
error.  Reports are deterministic for fixed inputs and seeds, independent of
--threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from fractions import Fraction

from . import jordan, sweeps, thoma
from .measures import (
    MeasureOnLevel,
    dominates_flow,
    dominates_upperset,
    project_to,
)
from .dimensions import dim_hook
from .partitions import enumerate_partitions, format_partition, parse_partition
from .rationals import parse_rational_list
from .reports import FAILS, build_report, dump_json, write_json


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to 1 (2 means counterexample)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_report_flags(p):
    p.add_argument("--json", help="write the full JSON report to this path")
    p.add_argument("--out", help="alias for --json")
    p.add_argument("--threads", type=int, default=1, help="parallel sweep width (row order is unaffected)")


def build_parser() -> _Parser:
    parser = _Parser(prog="younggraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the partitions of n, one per line, decreasing lexicographic")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("dim", help="number of standard Young tableaux of the given shape")
    p.add_argument("--lambda", dest="lam", required=True, help='partition as "a,b,c"')

    p = sub.add_parser("project", help="project the unit atom on a diagram down to a level")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--json", help="write the measure JSON here instead of stdout")
    p.add_argument("--out", help="alias for --json")

    p = sub.add_parser("dominates", help="decide stochastic dominance between two measure files")
    p.add_argument("--rho", required=True, help="measure JSON file")
    p.add_argument("--rho-hat", required=True, help="measure JSON file")
    p.add_argument("--upperset", action="store_true", help="also run the upper-set criterion (small levels)")
    p.add_argument("--json", help="write the result JSON here instead of stdout")
    p.add_argument("--out", help="alias for --json")

    verify = sub.add_parser("verify", help="sweep a proved or conjectured inequality over all configurations")
    vsub = verify.add_subparsers(dest="verifier", required=True)

    p = vsub.add_parser(
        "prop22",
        help="product inequality for principal Schur evaluations on box-move quadruples, "
        "plus the cancelled x^2(y^2-1) vs (x^2-1)y^2 form",
    )
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--N", dest="n_vars", type=int, default=10, help="largest number of variables")
    _add_report_flags(p)

    p = vsub.add_parser("cor23", help="tableau-count ratio inequality dim(mu)/dim(lam) on box-move quadruples")
    p.add_argument("--n-max", type=int, default=8)
    _add_report_flags(p)

    p = vsub.add_parser("conj-monomial", help="monomial positivity of the difference of Schur products")
    p.add_argument("--n-max", type=int, default=6)
    _add_report_flags(p)

    p = vsub.add_parser("conj-hl", help="prefactored Hall-Littlewood ratio inequality on a grid of t values")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--N", dest="n_vars", type=int, default=4, help="largest number of variables")
    p.add_argument("--t", default="0,1/4,1/2,3/4,1", help="comma-separated rational t values")
    _add_report_flags(p)

    p = vsub.add_parser(
        "conj-jordan",
        help="unipotent Jordan-type count ratios over F_p by full enumeration",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--limit", type=int, help="raise the level cap (cost grows like p^(n(n-1)/2))")
    p.add_argument("--json", help="write the report JSON here")
    p.add_argument("--out", help="alias for --json")

    p = sub.add_parser("sample-lln", help="sample growth chains and tabulate scaled row/column lengths")
    p.add_argument("--alpha", required=True, help='rationals like "7/10,3/10"')
    p.add_argument("--beta", default="", help="rationals, may be empty")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--csv", help="write the table here instead of stdout")

    p = sub.add_parser("thoma-converge", help="total variation of projected staircase atoms against the extreme measure")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", default="")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", required=True, help='comma-separated levels like "50,100,200,400"')
    p.add_argument("--csv", help="write the table here instead of stdout")
    p.add_argument("--json", help="also write exact rationals as JSON")
    p.add_argument("--out", help="alias for --json")

    p = sub.add_parser("coherence", help="check that projecting the extreme measure one level down reproduces the previous one")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", default="")
    p.add_argument("--n", type=int, required=True)

    return parser


def _json_path(args) -> str | None:
    return getattr(args, "json", None) or getattr(args, "out", None)


def _emit_report(args, command: str, parameters: dict, rows: list[dict], started: float) -> int:
    report = build_report(command, parameters, rows)
    path = _json_path(args)
    if path:
        write_json(report, path)
    s = report["summary"]
    print(
        f"{command}: {s['total']} instances, {s['holds']} hold, {s['fails']} fail, "
        f"{s['not_applicable']} not applicable, {s['equalities']} equalities"
    )
    print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
    return 2 if s["fails"] else 0


def _write_csv(path: str | None, header: list[str], rows: list[list]):
    if path:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ValueError, OSError) as exc:
        print(f"younggraph: error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    started = time.monotonic()

    if args.command == "enumerate":
        for lam in enumerate_partitions(args.n):
            print(format_partition(lam))
        return 0

    if args.command == "dim":
        print(dim_hook(parse_partition(args.lam)))
        return 0

    if args.command == "project":
        atom = MeasureOnLevel.atom(parse_partition(args.lam))
        data = project_to(atom, args.to).to_json_dict()
        path = _json_path(args)
        if path:
            write_json(data, path)
        else:
            sys.stdout.write(dump_json(data))
        return 0

    if args.command == "dominates":
        rho = MeasureOnLevel.load(args.rho)
        rho_hat = MeasureOnLevel.load(getattr(args, "rho_hat"))
        ok, coupling = dominates_flow(rho, rho_hat)
        data = {"dominates": ok}
        if ok:
            data["coupling"] = [
                {"source": format_partition(a), "target": format_partition(b), "mass": str(m)}
                for a, b, m in coupling
            ]
        if args.upperset:
            data["upperset_verdict"] = dominates_upperset(rho, rho_hat)
        path = _json_path(args)
        if path:
            write_json(data, path)
        else:
            sys.stdout.write(dump_json(data))
        return 0

    if args.command == "verify":
        return _dispatch_verify(args, started)

    if args.command == "sample-lln":
        params = thoma.ThomaParams.parse(args.alpha, args.beta)
        rows = thoma.lln_experiment(params, args.n, args.trials, args.seed, mode=args.mode)
        _write_csv(
            args.csv,
            ["trial", "n", "kind", "index", "value"],
            [[r["trial"], r["n"], r["kind"], r["index"], str(r["value"])] for r in rows],
        )
        print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
        return 0

    if args.command == "thoma-converge":
        params = thoma.ThomaParams.parse(args.alpha, args.beta)
        k_list = [int(k) for k in args.k.split(",")]
        table = thoma.convergence_experiment(params, args.r, k_list)
        _write_csv(args.csv, ["k", "r", "tv"], [[k, args.r, float(tv)] for k, tv in table])
        path = _json_path(args)
        if path:
            write_json(
                {
                    "alpha": [str(a) for a in params.alpha],
                    "beta": [str(b) for b in params.beta],
                    "r": args.r,
                    "rows": [{"k": k, "tv": str(tv)} for k, tv in table],
                },
                path,
            )
        print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
        return 0

    if args.command == "coherence":
        params = thoma.ThomaParams.parse(args.alpha, args.beta)
        from .measures import project_one

        current = thoma.extreme_measure(args.n, params)
        failures = 0
        for level in range(args.n, 0, -1):
            expected = thoma.extreme_measure(level - 1, params)
            actual = project_one(current)
            ok = actual == expected
            print(f"level {level} -> {level - 1}: {'ok' if ok else 'MISMATCH'}")
            failures += 0 if ok else 1
            current = expected
        return 2 if failures else 0

    raise ValueError(f"unknown command {args.command!r}")


def _dispatch_verify(args, started: float) -> int:
    if args.verifier == "prop22":
        rows = sweeps.sweep_product_inequality(args.n_max, args.n_vars, threads=args.threads)
        disagreements = sum(1 for r in rows if not r["reduced_agrees"])
        for r in rows:
            if not r["reduced_agrees"]:
                r["verdict"] = FAILS
        code = _emit_report(
            args, "verify prop22", {"n_max": args.n_max, "N": args.n_vars}, rows, started
        )
        if disagreements:
            print(f"reduced-form disagreements: {disagreements}", file=sys.stderr)
            return 2
        return code

    if args.verifier == "cor23":
        rows = sweeps.sweep_dim_ratio_inequality(args.n_max, threads=args.threads)
        return _emit_report(args, "verify cor23", {"n_max": args.n_max}, rows, started)

    if args.verifier == "conj-monomial":
        rows = sweeps.sweep_monomial_positivity(args.n_max, threads=args.threads)
        return _emit_report(args, "verify conj-monomial", {"n_max": args.n_max}, rows, started)

    if args.verifier == "conj-hl":
        t_list = parse_rational_list(args.t)
        rows = sweeps.sweep_hl_ratio_inequality(args.n_max, args.n_vars, t_list, threads=args.threads)
        return _emit_report(
            args,
            "verify conj-hl",
            {"n_max": args.n_max, "N": args.n_vars, "t": [str(t) for t in t_list]},
            rows,
            started,
        )

    if args.verifier == "conj-jordan":
        rows = jordan.sweep_jordan_inequality(args.n, args.p, limit=args.limit)
        report = {"n": args.n, "p": args.p, "quadruples": rows}
        path = _json_path(args)
        if path:
            write_json(report, path)
        fails = sum(1 for r in rows if r["verdict"] == FAILS)
        holds = sum(1 for r in rows if r["verdict"] == "holds")
        print(f"verify conj-jordan: n={args.n} p={args.p}: {len(rows)} quadruples, {holds} hold, {fails} fail")
        print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
        return 2 if fails else 0

    raise ValueError(f"unknown verifier {args.verifier!r}")


if __name__ == "__main__":
    sys.exit(main())
