"""Command line front end: ``rmcenter {solve,exact,gen,verify,bench}``.

Exit codes: 0 success (feasible / verified), 1 bad input, 2 infeasible
instance or failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

from .exact import DEFAULT_MAX_ENUM, EnumerationLimitError, exact_solve
from .generate import GEOMETRIES, MATROID_KINDS, GenOptions, generate_instance
from .instances import InstanceFormatError, dumps, load_instance
from .matroid import CountingMatroid, rank
from .metric import validate_metric
from .solver import InfeasibleInstanceError, Solution, search_radius, solve_fixed_radius, verify_solution

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2

BENCH_COLUMNS = [
    "file", "n", "rank", "feasible", "opt", "r", "radius", "ratio",
    "greedy_iterations", "max_probes_per_iteration", "rado_probes", "base_oracle_calls", "ms",
]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _load(path: str, validate: bool = False):
    inst, base = load_instance(path)
    if validate:
        bad = validate_metric(inst)
        if bad:
            shown = ", ".join(str(v) for v in bad[:5])
            raise InstanceFormatError(f"field $.points: {len(bad)} metric violations, e.g. {shown}")
    return inst, base


def _run_report(inst, counted: CountingMatroid, sol: Solution, show_trace: bool) -> dict:
    probes = [rec.probes for rec in sol.trace]
    return {
        "n": inst.n,
        "rank": rank(counted.inner),
        "m": inst.coverage_target,
        "solution": sol.to_dict(include_trace=show_trace),
        "instrumentation": {
            "base_oracle_calls": counted.calls,
            "greedy_iterations": len(sol.trace),
            "rado_probes": sum(probes),
            "rado_probes_per_iteration": probes,
            "radius_probes": list(sol.probed_radii),
        },
    }


def cmd_solve(args) -> int:
    try:
        inst, base = _load(args.instance, args.validate_metric)
    except (OSError, InstanceFormatError) as exc:
        return _fail(f"{args.instance}: {exc}")
    counted = CountingMatroid(base)
    start = time.perf_counter()
    code = EXIT_OK
    if args.fixed_r is not None:
        if args.fixed_r < 0:
            return _fail("--fixed-r must be nonnegative")
        sol = solve_fixed_radius(inst, counted, args.fixed_r)
    else:
        try:
            sol = search_radius(inst, counted)
        except InfeasibleInstanceError as exc:
            print(f"infeasible: {exc}", file=sys.stderr)
            sol = exc.solution
    if not sol.feasible:
        code = EXIT_INFEASIBLE
    report = _run_report(inst, counted, sol, args.trace)
    if args.timing:
        report["instrumentation"]["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    _emit(dumps(report), args.out)
    return code


def cmd_exact(args) -> int:
    try:
        inst, base = _load(args.instance, args.validate_metric)
    except (OSError, InstanceFormatError) as exc:
        return _fail(f"{args.instance}: {exc}")
    try:
        result = exact_solve(inst, base, max_enum=args.max_enum)
    except EnumerationLimitError as exc:
        return _fail(f"refusing to enumerate: {exc}")
    _emit(dumps(result.to_dict()), args.out)
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def _gen_options(args) -> GenOptions:
    opts = GenOptions()
    for name in vars(opts):
        value = getattr(args, name, None)
        if value is not None:
            setattr(opts, name, value)
    if args.geometry == "graph" and (args.dim is not None or args.coord_max is not None):
        raise ValueError("--dim/--coord-max only apply to --geometry euclidean")
    if args.geometry == "euclidean" and (args.edge_prob is not None or args.max_edge_weight is not None):
        raise ValueError("--edge-prob/--max-edge-weight only apply to --geometry graph")
    if args.classes is not None and args.matroid != "partition":
        raise ValueError("--classes only applies to --matroid partition")
    opts.check()
    return opts


def cmd_gen(args) -> int:
    try:
        opts = _gen_options(args)
    except ValueError as exc:
        return _fail(str(exc))
    if args.count is None:
        _emit(dumps(generate_instance(args.seed, opts)), args.out)
        return EXIT_OK
    if not args.out:
        return _fail("--count needs --out DIR")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    width = len(str(max(args.count - 1, 0)))
    for i in range(args.count):
        text = dumps(generate_instance(args.seed + i, opts))
        (outdir / f"instance_{i:0{width}d}.json").write_text(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst, base = _load(args.instance)
        data = json.loads(Path(args.solution).read_text())
        if "solution" in data:  # accept a full solve report as well
            data = data["solution"]
        sol = Solution.from_dict(data)
    except (OSError, InstanceFormatError) as exc:
        return _fail(str(exc))
    except (ValueError, KeyError, TypeError) as exc:
        return _fail(f"{args.solution}: malformed solution ({exc!r})")
    report = verify_solution(inst, base, sol)
    _emit(dumps(report.to_dict()), args.out)
    return EXIT_OK if report.passed else EXIT_INFEASIBLE


def bench_row(path: Path, max_enum: int, run_exact: bool, timing: bool) -> dict:
    """Solve one instance and collect a bench row; raises on any failure."""
    inst, base = load_instance(path)
    counted = CountingMatroid(base)
    rho = rank(base)
    start = time.perf_counter()
    try:
        sol = search_radius(inst, counted)
        feasible = True
    except InfeasibleInstanceError as exc:
        sol, feasible = exc.solution, False
    ms = (time.perf_counter() - start) * 1000
    probes = [rec.probes for rec in sol.trace]
    if len(probes) != rho or any(p > inst.n for p in probes):
        raise AssertionError(f"probe accounting violated: {len(probes)} iterations for rank {rho}, probes {probes}")
    row = {
        "file": path.name, "n": inst.n, "rank": rho, "feasible": feasible,
        "opt": "", "r": sol.r if feasible else "", "radius": sol.radius if feasible else "", "ratio": "",
        "greedy_iterations": len(probes), "max_probes_per_iteration": max(probes, default=0),
        "rado_probes": sum(probes), "base_oracle_calls": counted.calls,
        "ms": round(ms, 3) if timing else "",
    }
    if run_exact:
        result = exact_solve(inst, base, max_enum=max_enum)
        if result.feasible:
            row["opt"] = result.opt_radius
            if feasible:
                if result.opt_radius > 0:
                    row["ratio"] = sol.radius / result.opt_radius
                else:
                    row["ratio"] = 0.0 if sol.radius == 0 else math.inf
    return row


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        return _fail(f"{corpus} is not a directory")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    errors = 0
    for path in sorted(corpus.glob("*.json")):
        try:
            row = bench_row(path, args.max_enum, not args.no_exact, not args.no_timing)
        except Exception as exc:  # one bad file must not stop the run
            errors += 1
            print(f"error,{path.name},{type(exc).__name__}: {exc}", file=sys.stderr)
            continue
        writer.writerow(row)
    _emit(buf.getvalue(), args.out)
    return EXIT_INPUT if errors else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmcenter", description="Greedy 5-approximation for Robust Matroid Center.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search the candidate radii and print a run report")
    p.add_argument("instance")
    p.add_argument("--out")
    p.add_argument("--validate-metric", action="store_true", help="reject instances violating the triangle inequality")
    p.add_argument("--fixed-r", type=float, help="run the greedy at this radius guess only")
    p.add_argument("--trace", action="store_true", help="include the per-iteration trace")
    p.add_argument("--timing", action="store_true", help="add wall-clock time (makes output non-reproducible)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="brute-force optimum (small instances only)")
    p.add_argument("instance")
    p.add_argument("--out")
    p.add_argument("--validate-metric", action="store_true")
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM, help="independent-set enumeration cap (default 2^20)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("gen", help="generate a seeded random instance (or a corpus with --count)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--count", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--geometry", choices=GEOMETRIES, default="graph")
    p.add_argument("--dim", type=int)
    p.add_argument("--coord-max", type=int)
    p.add_argument("--edge-prob", type=float)
    p.add_argument("--max-edge-weight", type=int)
    p.add_argument("--weight-min", type=int)
    p.add_argument("--weight-max", type=int)
    p.add_argument("--matroid", choices=MATROID_KINDS, default="uniform")
    p.add_argument("--rank", type=int)
    p.add_argument("--classes", type=int)
    p.add_argument("--m-fraction", type=float)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="recheck a solution against its instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="solve every *.json in a directory and print CSV")
    p.add_argument("corpus")
    p.add_argument("--out")
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM)
    p.add_argument("--no-exact", action="store_true", help="skip the brute-force optimum and ratio columns")
    p.add_argument("--no-timing", action="store_true", help="leave the ms column empty for reproducible output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
