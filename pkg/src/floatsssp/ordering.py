"""Validators for processing orders recorded in solver traces.

All comparisons are exact on the recorded float values; no tolerance.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .dijkstra import bellman_ford_oracle
from .graph import Graph

Trace = Sequence[tuple[int, float]]


def check_fo(trace: Trace) -> bool:
    """Full ordering: distances along the trace never decrease."""
    prev = -math.inf
    for _, d in trace:
        if d < prev:
            return False
        prev = d
    return True


def check_delta_po(trace: Trace, delta: float) -> bool:
    """Partial ordering: ``i < j`` implies ``d_i < d_j + delta``.

    Tracks the running maximum of earlier distances; the comparison
    ``running_max - d_j - delta < 0`` is evaluated with ``math.fsum`` so its
    sign is exact.
    """
    if not delta > 0:
        raise ValueError(f"delta must be positive, got {delta}")
    running = -math.inf
    for _, d in trace:
        if running > -math.inf and not math.fsum((running, -d, -delta)) < 0:
            return False
        if d > running:
            running = d
    return True


def first_delta_po_violation(trace: Trace, delta: float) -> tuple[int, int] | None:
    """Index pair ``(i, j)`` of the first broken pair, or None."""
    best_i = None
    for j, (_, d) in enumerate(trace):
        if best_i is not None and not math.fsum((trace[best_i][1], -d, -delta)) < 0:
            return best_i, j
        if best_i is None or d > trace[best_i][1]:
            best_i = j
    return None


@dataclass(frozen=True)
class ConditionAViolation:
    node: int
    index: int
    late_predecessors: tuple[int, ...]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["late_predecessors"] = list(self.late_predecessors)
        return d


def check_condition_a(
    trace: Trace, g: Graph, true_dist: Sequence[float] | None = None
) -> list[ConditionAViolation]:
    """Nodes whose zero-length final approach was processed too late.

    A node ``c`` is constrained when every tight in-edge (one lying on some
    shortest path) has weight zero and some reachable in-neighbour ``b`` gives
    a strictly longer route ``d(b) + w(b, c) > d(c)``. The requirement is met
    if at least one tight zero-weight predecessor was processed before ``c``;
    otherwise ``c`` is reported together with those predecessors.
    """
    if not trace:
        return []
    source = trace[0][0]
    dist = list(true_dist) if true_dist is not None else bellman_ford_oracle(g, source).dist
    pos = {v: i for i, (v, _) in enumerate(trace)}
    incoming: list[list[tuple[int, float]]] = [[] for _ in range(g.n)]
    for u, v, w in g.edges():
        incoming[v].append((u, w))

    out = []
    for c in range(g.n):
        dc = dist[c]
        if c == source or not math.isfinite(dc):
            continue
        tight = [(u, w) for u, w in incoming[c] if math.isfinite(dist[u]) and dist[u] + w == dc]
        if not tight or any(w != 0.0 for _, w in tight):
            continue
        if not any(math.isfinite(dist[b]) and dist[b] + w > dc for b, w in incoming[c]):
            continue
        pc = pos.get(c, math.inf)
        preds = sorted({u for u, _ in tight if u != c})
        if any(pos.get(u, math.inf) < pc for u in preds):
            continue
        idx = pos.get(c, -1)
        out.append(ConditionAViolation(c, idx, tuple(preds)))
    return out


def violations_to_json(violations: Iterable[ConditionAViolation]) -> list[dict]:
    return [v.to_dict() for v in violations]
