"""Sweep delta/C and tabulate queue work (bucket scans, relocations) per queue.

    python scripts/scan_trend.py --n 500 --m 4000 --seeds 5 --csv trend.csv
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass, field

from floatsssp.dijkstra import QueueKind, bellman_ford_oracle, dijkstra_float_via_int
from floatsssp.graph import generate_random


@dataclass
class TrendConfig:
    n: int = 300
    m: int = 2400
    cmax: float = 10.0
    seeds: int = 5
    ratios: tuple[float, ...] = (1.0, 0.1, 0.01, 1e-3, 1e-4)
    queues: tuple[str, ...] = ("dial", "radix", "twolevel:B=4", "twolevel:B=16", "twolevel:B=64")


@dataclass
class TrendRow:
    ratio: float
    queue: str
    bucket_scans: float
    relocations: float
    dial_bound: float
    m_plus_n_log: float
    extras: dict = field(default_factory=dict)


def sweep(cfg: TrendConfig) -> list[TrendRow]:
    rows = []
    for ratio in cfg.ratios:
        graphs = [generate_random(cfg.n, cfg.m, ratio * cfg.cmax, cfg.cmax, s) for s in range(cfg.seeds)]
        bounds = []
        for g in graphs:
            d_max = max(d for d in bellman_ford_oracle(g, 0).dist if math.isfinite(d))
            bounds.append(int(d_max / g.min_weight))
        for text in cfg.queues:
            kind = QueueKind.parse(text)
            scans = moves = extracts = 0
            for g in graphs:
                st = dijkstra_float_via_int(g, 0, kind).stats
                scans += st.bucket_scans
                moves += st.relocations
                extracts += st.extract_mins
            k = len(graphs)
            rows.append(TrendRow(
                ratio, str(kind), scans / k, moves / k,
                dial_bound=(sum(bounds) + extracts) / k + 1,
                m_plus_n_log=cfg.m + cfg.n * math.log2(1 / ratio + 1),
            ))
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=TrendConfig.n)
    p.add_argument("--m", type=int, default=TrendConfig.m)
    p.add_argument("--seeds", type=int, default=TrendConfig.seeds)
    p.add_argument("--csv", help="write rows here as CSV")
    args = p.parse_args(argv)
    rows = sweep(TrendConfig(n=args.n, m=args.m, seeds=args.seeds))

    print(f"{'delta/C':>8} {'queue':>14} {'scans':>10} {'moves':>8} {'dial bound':>11} {'m+n*log':>8}")
    for r in rows:
        print(f"{r.ratio:>8g} {r.queue:>14} {r.bucket_scans:>10.1f} {r.relocations:>8.1f}"
              f" {r.dial_bound:>11.1f} {r.m_plus_n_log:>8.0f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["ratio", "queue", "bucket_scans", "relocations", "dial_bound", "m_plus_n_log"])
            for r in rows:
                w.writerow([r.ratio, r.queue, r.bucket_scans, r.relocations, r.dial_bound, r.m_plus_n_log])
    return 0


if __name__ == "__main__":
    sys.exit(main())
