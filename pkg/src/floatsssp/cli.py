"""Command-line front end: ``run``, ``verify``, ``counterexample``, ``gen``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .dijkstra import (
    QueueKind,
    SsspResult,
    adversarial_zero_delta_run,
    bellman_ford_oracle,
    dijkstra_float_via_int,
    dijkstra_standard,
    max_relative_error,
    REL_TOL,
)
from .errors import DemonstrationFailed, GraphError, SsspError, ZeroDeltaRefused
from .graph import (
    Figure1Params,
    Graph,
    build_figure1,
    classify,
    format_dimacs,
    generate_random,
    load_dimacs,
)
from .ordering import check_condition_a, check_delta_po, check_fo, violations_to_json

REPORT_VERSION = 1
WORKERS_ENV = "FLOATSSSP_WORKERS"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_ZERO_DELTA = 4
EXIT_VERIFY = 5
EXIT_ERROR = 6

DEFAULT_QUEUES = "binary,dial,radix,twolevel:B=16"
STATS_FIELDS = ("inserts", "decrease_keys", "extract_mins", "bucket_scans",
                "relocations", "max_scans_per_extract")


class UsageError(Exception):
    pass


# graph sources

def _parse_kv(text: str) -> dict[str, str]:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, eq, value = part.partition("=")
        if not eq:
            raise UsageError(f"expected key=value, got {part!r}")
        out[key.strip()] = value.strip()
    return out


def graph_from_spec(spec: str) -> Graph:
    """``n=..,m=..,delta=..,cmax=..,seed=..`` or ``figure1:n=..,epsilon=..,base=..``."""
    try:
        if spec.startswith("figure1:"):
            kv = _parse_kv(spec[len("figure1:"):])
            return build_figure1(Figure1Params(
                int(kv.pop("n")), float(kv.pop("epsilon", "0.1")), float(kv.pop("base", "1.0"))))
        kv = _parse_kv(spec)
        g = generate_random(
            int(kv.pop("n")), int(kv.pop("m", "0")), float(kv.pop("delta", "1")),
            float(kv.pop("cmax", "1")), int(kv.pop("seed", "0")))
    except KeyError as e:
        raise UsageError(f"generator spec is missing {e}") from None
    except ValueError as e:
        if isinstance(e, GraphError):
            raise
        raise UsageError(f"bad generator spec {spec!r}: {e}") from None
    if kv:
        raise UsageError(f"unknown generator keys: {', '.join(sorted(kv))}")
    return g


def _graph_summary(g: Graph) -> dict:
    if g.m:
        lo, hi = g.min_weight, g.max_weight
        ratio = hi / lo if lo > 0 else None
    else:
        lo = hi = ratio = None
    return {"n": g.n, "m": g.m, "delta": lo, "cmax": hi, "c_over_delta": ratio,
            "variant": classify(g).value}


# run

def _solve(g: Graph, s: int, kind: QueueKind, oracle: SsspResult) -> dict:
    t0 = time.monotonic_ns()
    if kind.uses_adapter:
        res = dijkstra_float_via_int(g, s, kind)
    else:
        res = dijkstra_standard(g, s)
    wall = time.monotonic_ns() - t0
    err = max_relative_error(res.dist, oracle.dist)
    checks = {"fo": check_fo(res.trace)}
    ok = err <= REL_TOL
    if kind.uses_adapter:
        checks["delta_po"] = check_delta_po(res.trace, res.delta) if res.delta else True
        ok = ok and checks["delta_po"]
    else:
        ok = ok and checks["fo"]
        checks["condition_a_violations"] = len(check_condition_a(res.trace, g, oracle.dist))
        ok = ok and checks["condition_a_violations"] == 0
    return {
        "queue": str(kind),
        "status": "PASS" if ok else "FAIL",
        "wall_ns": wall,
        "max_rel_error": err,
        "checks": checks,
        "stats": res.stats.to_dict(),
        "dist": [d if math.isfinite(d) else "inf" for d in res.dist],
    }


def _parse_kinds(text: str) -> list[QueueKind]:
    try:
        kinds = [QueueKind.parse(k) for k in text.split(",") if k.strip()]
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not kinds:
        raise UsageError("no queue kinds given")
    return kinds


def cmd_run(args) -> int:
    if bool(args.file) == bool(args.gen):
        raise UsageError("give exactly one of --file or --gen")
    g = load_dimacs(args.file) if args.file else graph_from_spec(args.gen)
    if not 0 <= args.source < g.n:
        raise UsageError(f"--source must lie in 0..{g.n - 1}")
    kinds = _parse_kinds(args.queues)
    oracle = bellman_ford_oracle(g, args.source)
    solvers = [_solve(g, args.source, k, oracle) for k in kinds]
    report = {
        "format_version": REPORT_VERSION,
        "graph": _graph_summary(g),
        "source": args.source,
        "solvers": solvers,
        "status": "PASS" if all(s["status"] == "PASS" for s in solvers) else "FAIL",
    }
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("queue", "status", *STATS_FIELDS, "max_rel_error"))
        for s in solvers:
            w.writerow((s["queue"], s["status"], *(s["stats"][f] for f in STATS_FIELDS),
                        repr(s["max_rel_error"])))
        text = buf.getvalue()
    else:
        text = json.dumps(report, indent=2) + "\n"
    _emit(text, args.output)
    return EXIT_OK if report["status"] == "PASS" else EXIT_VERIFY


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# verify

def run_trial(seed: int, ratio: float, max_n: int, max_m: int, cmax: float,
              kinds: tuple[str, ...]) -> dict:
    """One randomized instance: oracle equivalence and ordering invariants."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    g = generate_random(n, m, ratio * cmax, cmax, seed)
    s = rng.randrange(n)
    oracle = bellman_ford_oracle(g, s)
    failures: list[str] = []
    out = {"seed": seed, "ratio": ratio, "n": n, "m": m, "queues": {}}

    std = dijkstra_standard(g, s)
    if max_relative_error(std.dist, oracle.dist) > REL_TOL:
        failures.append("binary: oracle mismatch")
    if not check_fo(std.trace):
        failures.append("binary: FO violated")

    finite = [d for d in oracle.dist if math.isfinite(d)]
    d_max = max(finite)
    for text in kinds:
        kind = QueueKind.parse(text)
        try:
            res = dijkstra_float_via_int(g, s, kind)
        except SsspError as e:
            failures.append(f"{kind}: {type(e).__name__}: {e}")
            continue
        delta = res.delta if res.delta is not None else 1.0
        if max_relative_error(res.dist, oracle.dist) > REL_TOL:
            failures.append(f"{kind}: oracle mismatch")
        if not check_delta_po(res.trace, delta):
            failures.append(f"{kind}: delta-PO violated")
        if any(res.dist[v] != d for v, d in res.trace) or len({v for v, _ in res.trace}) != len(res.trace):
            failures.append(f"{kind}: settled-once violated")
        st = res.stats
        entry = {"bucket_scans": st.bucket_scans, "relocations": st.relocations,
                 "extract_mins": st.extract_mins}
        if kind.name == "dial":
            bound = int(d_max / delta) + st.extract_mins + 1
            entry["bound"] = bound
            if st.bucket_scans > bound:
                failures.append(f"{kind}: bucket_scans {st.bucket_scans} > bound {bound}")
        out["queues"][str(kind)] = entry
    out["failures"] = failures
    return out


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def verify(trials: int, max_n: int = 256, max_m: int = 2048,
           ratios: tuple[float, ...] = (1.0, 0.1, 0.001), cmax: float = 10.0, seed: int = 0,
           kinds: tuple[str, ...] = ("dial", "radix", "twolevel:B=16"),
           workers: int = 1) -> dict:
    jobs = [(seed + i, ratios[i % len(ratios)], max_n, max_m, cmax, kinds) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(run_trial, *zip(*jobs), chunksize=16))
    else:
        results = [run_trial(*j) for j in jobs]
    results.sort(key=lambda r: r["seed"])

    per_ratio = {}
    for ratio in ratios:
        rows = [r for r in results if r["ratio"] == ratio]
        agg = {"trials": len(rows)}
        for kind in kinds:
            name = str(QueueKind.parse(kind))
            vals = [r["queues"][name] for r in rows if name in r["queues"]]
            if vals:
                agg[name] = {
                    "mean_bucket_scans": sum(v["bucket_scans"] for v in vals) / len(vals),
                    "mean_relocations": sum(v["relocations"] for v in vals) / len(vals),
                }
        per_ratio[repr(ratio)] = agg
    failed = [r for r in results if r["failures"]]
    return {
        "format_version": REPORT_VERSION,
        "trials": trials,
        "passed": trials - len(failed),
        "failed": len(failed),
        "failures": [{"seed": r["seed"], "failures": r["failures"]} for r in failed],
        "per_ratio": per_ratio,
    }


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    try:
        ratios = tuple(float(x) for x in args.ratios.split(","))
    except ValueError:
        raise UsageError(f"bad --ratios {args.ratios!r}") from None
    if not ratios or any(not 0 < r <= 1 for r in ratios):
        raise UsageError("--ratios must lie in (0, 1]")
    parsed = _parse_kinds(args.queues)
    if not all(k.uses_adapter for k in parsed):
        raise UsageError("verify exercises integer-queue kinds only")
    kinds = tuple(str(k) for k in parsed)
    summary = verify(args.trials, args.max_n, args.max_m, ratios, args.cmax, args.seed,
                     kinds, _workers())
    if args.output:
        _emit(json.dumps(summary, indent=2) + "\n", args.output)
    if args.format == "json":
        sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    else:
        print(f"trials: {summary['trials']}  passed: {summary['passed']}  failed: {summary['failed']}")
        for ratio, agg in summary["per_ratio"].items():
            parts = [f"{k}: scans={v['mean_bucket_scans']:.1f} moves={v['mean_relocations']:.1f}"
                     for k, v in agg.items() if isinstance(v, dict)]
            print(f"  delta/C={ratio} ({agg['trials']} trials)  " + "  ".join(parts))
        for f in summary["failures"][:10]:
            print(f"  FAIL seed={f['seed']}: {'; '.join(f['failures'])}")
    return EXIT_OK if summary["failed"] == 0 else EXIT_VERIFY


# counterexample

def counterexample(n: int, epsilon: float, surrogate: float, base: float = 1.0,
                   queue: str = "dial") -> dict:
    params = Figure1Params(n, epsilon, base)
    g = build_figure1(params)
    oracle = bellman_ford_oracle(g, 0)
    adv, mismatch = adversarial_zero_delta_run(g, 0, surrogate, QueueKind.parse(queue))
    std = dijkstra_standard(g, 0)
    std_exact = std.dist == oracle.dist
    solid = [None] + params.solid_weights()
    report = {
        "format_version": REPORT_VERSION,
        "params": {"n": n, "epsilon": epsilon, "base": base, "surrogate_delta": surrogate},
        "nodes": [
            {"node": v, "solid_weight": solid[v], "oracle": oracle.dist[v],
             "standard": std.dist[v], "adversarial": adv.dist[v], "mismatch": v in mismatch}
            for v in range(n)
        ],
        "adversarial_trace": [v for v, _ in adv.trace],
        "mismatch": mismatch,
        "condition_a_violations": violations_to_json(check_condition_a(adv.trace, g, oracle.dist)),
        "standard_exact": std_exact,
    }
    if not mismatch:
        raise DemonstrationFailed("adversarial schedule matched the oracle")
    if not std_exact:
        raise DemonstrationFailed("standard Dijkstra disagrees with the oracle")
    return report


def cmd_counterexample(args) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    report = counterexample(args.n, args.epsilon, args.surrogate, args.base, args.queue)
    if args.format == "json":
        _emit(json.dumps(report, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = [f"{'node':>4} {'w(0,v)':>12} {'oracle':>12} {'standard':>12} {'adversarial':>12}"]
    for row in report["nodes"]:
        w = "" if row["solid_weight"] is None else f"{row['solid_weight']:.6f}"
        mark = "  <-- wrong" if row["mismatch"] else ""
        lines.append(f"{row['node']:>4} {w:>12} {row['oracle']:>12.6f} {row['standard']:>12.6f}"
                     f" {row['adversarial']:>12.6f}{mark}")
    lines.append(f"adversarial order: {report['adversarial_trace']}")
    lines.append(f"mismatch: {report['mismatch']}  condition A violated at: "
                 f"{[v['node'] for v in report['condition_a_violations']]}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# gen

def cmd_gen(args) -> int:
    g = graph_from_spec(args.spec)
    _emit(format_dimacs(g, [f"generated by floatsssp gen {args.spec}"]), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="floatsssp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="solve one graph with several queues and check the results")
    r.add_argument("--file", help="DIMACS .gr file")
    r.add_argument("--gen", help="generator spec, e.g. n=100,m=500,delta=0.01,cmax=10,seed=1")
    r.add_argument("--source", type=int, default=0)
    r.add_argument("--queues", default=DEFAULT_QUEUES)
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="randomized oracle-equivalence and ordering suite")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--max-n", type=int, default=256)
    v.add_argument("--max-m", type=int, default=2048)
    v.add_argument("--ratios", default="1,0.1,0.001", help="delta/C grid")
    v.add_argument("--cmax", type=float, default=10.0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--queues", default="dial,radix,twolevel:B=16")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-o", "--output", help="also write the JSON summary here")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("counterexample", help="zero-edge counterexample demonstration")
    c.add_argument("--n", type=int, default=6)
    c.add_argument("--epsilon", type=float, default=0.1)
    c.add_argument("--surrogate", type=float, default=0.2)
    c.add_argument("--base", type=float, default=1.0)
    c.add_argument("--queue", default="dial")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_counterexample)

    gn = sub.add_parser("gen", help="write a generated graph in DIMACS format")
    gn.add_argument("spec")
    gn.add_argument("-o", "--output")
    gn.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # --help exits 0, bad arguments exit 2
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ZeroDeltaRefused as e:
        print(f"error: ZeroDeltaRefused: {e}", file=sys.stderr)
        return EXIT_ZERO_DELTA
    except (GraphError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_IO
    except DemonstrationFailed as e:
        print(f"error: DemonstrationFailed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except SsspError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
