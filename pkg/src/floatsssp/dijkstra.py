"""Dijkstra over a float heap, Dijkstra over an integer queue via the delta
adapter, and a vectorised Bellman-Ford oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .adapter import DeltaAdapter
from .errors import (
    InvalidBounds,
    InvalidSource,
    KeyRangeOverflow,
    NoZeroEdge,
    SettledNodeRelaxed,
    ZeroDeltaRefused,
)
from .graph import Graph
from .intpq import (
    KEY_LIMIT,
    BinaryHeapQueue,
    DialBucketQueue,
    MonotoneIntQueue,
    QueueStats,
    RadixHeap,
    TieBreak,
    TwoLevelBucketQueue,
)

REL_TOL = 1e-9
ABS_TOL = 1e-12

ADAPTER_KINDS = ("dial", "radix", "twolevel")


@dataclass(frozen=True)
class QueueKind:
    name: str
    width: int = 16  # only meaningful for twolevel

    def __post_init__(self):
        if self.name not in ("binary",) + ADAPTER_KINDS:
            raise ValueError(f"unknown queue kind {self.name!r}")
        if self.width < 1:
            raise ValueError(f"bucket width must be >= 1, got {self.width}")

    @property
    def uses_adapter(self) -> bool:
        return self.name != "binary"

    @classmethod
    def parse(cls, text: str) -> QueueKind:
        """``binary``, ``dial``, ``radix``, ``twolevel`` or ``twolevel:B=<int>``."""
        name, _, opts = text.strip().partition(":")
        if not opts:
            return cls(name)
        if name != "twolevel":
            raise ValueError(f"queue kind {name!r} takes no options")
        key, _, value = opts.partition("=")
        if key.strip() != "B":
            raise ValueError(f"unknown twolevel option {key!r}")
        return cls(name, int(value))

    def __str__(self) -> str:
        return f"twolevel:B={self.width}" if self.name == "twolevel" else self.name


BINARY = QueueKind("binary")
DIAL = QueueKind("dial")
RADIX = QueueKind("radix")
TWOLEVEL = QueueKind("twolevel", 16)


@dataclass
class SsspResult:
    source: int
    dist: list[float]
    parent: list[int | None]
    trace: list[tuple[int, float]]
    kind: str = "oracle"
    delta: float | None = None
    stats: QueueStats | None = None
    late_relaxations: list[tuple[int, int]] = field(default_factory=list)
    key_gap_checks: int = 0

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "kind": self.kind,
            "delta": self.delta,
            "dist": [d if math.isfinite(d) else "inf" for d in self.dist],
            "parent": self.parent,
            "trace": [[v, d] for v, d in self.trace],
            "stats": self.stats.to_dict() if self.stats else None,
        }

    @property
    def reachable(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if math.isfinite(d)]


def dist_close(a: float, b: float) -> bool:
    if a == b:
        return True
    if not (math.isfinite(a) and math.isfinite(b)):
        return False
    return abs(a - b) <= max(REL_TOL * max(abs(a), abs(b)), ABS_TOL)


def max_relative_error(dist: list[float], ref: list[float]) -> float:
    worst = 0.0
    for a, b in zip(dist, ref):
        if a == b:
            continue
        if not (math.isfinite(a) and math.isfinite(b)):
            return math.inf
        worst = max(worst, abs(a - b) / max(abs(a), abs(b), ABS_TOL / REL_TOL))
    return worst


def mismatches(dist: list[float], ref: list[float]) -> list[int]:
    return [v for v, (a, b) in enumerate(zip(dist, ref)) if not dist_close(a, b)]


class _FloatHeap:
    """Float-keyed facade over BinaryHeapQueue with the adapter's interface."""

    def __init__(self, tie_break: TieBreak = TieBreak.FIFO):
        self.inner = BinaryHeapQueue(tie_break)
        self.stats = self.inner.stats

    def update(self, item, d: float) -> None:
        if item in self.inner:
            self.inner.decrease_key(item, d)
        else:
            self.inner.insert(item, d)

    def extract(self):
        return self.inner.extract_min()


def _check_source(g: Graph, s: int) -> None:
    if not (isinstance(s, (int, np.integer)) and 0 <= s < g.n):
        raise InvalidSource(f"source {s} outside 0..{g.n - 1}")


def _run(g: Graph, s: int, queue, strict: bool) -> tuple[list, list, list, list]:
    adj = g.adjacency
    inf = math.inf
    D = [inf] * g.n
    parent: list[int | None] = [None] * g.n
    done = [False] * g.n
    trace: list[tuple[int, float]] = []
    late: list[tuple[int, int]] = []
    D[s] = 0.0
    v, dv = s, 0.0
    while True:
        done[v] = True
        trace.append((v, dv))
        for u, w in adj[v]:
            nd = dv + w
            if nd < D[u]:
                if done[u]:
                    if strict:
                        raise SettledNodeRelaxed(f"{v} -> {u} improves settled node {u}")
                    late.append((v, u))
                    continue
                D[u] = nd
                parent[u] = v
                queue.update(u, nd)
        got = queue.extract()
        if got is None:
            break
        v, dv = got
        if done[v]:
            raise SettledNodeRelaxed(f"node {v} extracted twice")
    return D, parent, trace, late


def dijkstra_standard(g: Graph, s: int) -> SsspResult:
    """Textbook Dijkstra with a float-keyed binary heap (full ordering)."""
    _check_source(g, s)
    q = _FloatHeap()
    D, parent, trace, _ = _run(g, s, q, strict=True)
    return SsspResult(s, D, parent, trace, kind="binary", stats=q.stats)


def make_int_queue(kind: QueueKind, span: int, tie_break: TieBreak = TieBreak.FIFO) -> MonotoneIntQueue:
    if kind.name == "dial":
        return DialBucketQueue(span, tie_break)
    if kind.name == "radix":
        return RadixHeap(span, tie_break)
    if kind.name == "twolevel":
        return TwoLevelBucketQueue(span, kind.width, tie_break)
    if kind.name == "binary":
        return BinaryHeapQueue(tie_break)
    raise ValueError(f"unknown queue kind {kind}")


def key_span(delta: float, cmax: float) -> int:
    """Width of the live integer key window: floor(C/delta) + 1."""
    q = cmax / delta
    if not q < KEY_LIMIT - 1:
        raise KeyRangeOverflow(f"C/delta = {q} does not fit a 63-bit key range")
    return int(q) + 1


def dijkstra_float_via_int(
    g: Graph,
    s: int,
    kind: QueueKind = DIAL,
    delta: float | None = None,
    tie_break: TieBreak = TieBreak.FIFO,
    check_invariants: bool = True,
) -> SsspResult:
    """Dijkstra for strictly positive float weights over a monotone integer queue.

    ``delta`` defaults to the minimum edge weight. A caller-supplied value must
    be positive and no larger than that minimum.
    """
    _check_source(g, s)
    if not kind.uses_adapter:
        raise ValueError("binary kind has no integer adapter; use dijkstra_standard")
    if g.m == 0:
        q = DeltaAdapter(make_int_queue(kind, 1, tie_break), 1.0, check_invariants)
        D, parent, trace, _ = _run(g, s, q, strict=True)
        return SsspResult(s, D, parent, trace, kind=str(kind), stats=q.stats)
    dmin, cmax = g.min_weight, g.max_weight
    if dmin == 0.0:
        raise ZeroDeltaRefused("graph has a zero-weight edge; min edge weight delta = 0")
    if delta is None:
        delta = dmin
    elif not 0 < delta <= dmin:
        raise InvalidBounds(f"supplied delta {delta} must lie in (0, {dmin}]")
    if not (g.n * cmax) / delta < KEY_LIMIT:
        raise KeyRangeOverflow(f"n*C/delta = {g.n * cmax / delta:.3g} exceeds 2**63")
    inner = make_int_queue(kind, key_span(delta, cmax), tie_break)
    q = DeltaAdapter(inner, delta, check_invariants)
    D, parent, trace, _ = _run(g, s, q, strict=True)
    return SsspResult(s, D, parent, trace, kind=str(kind), delta=delta, stats=q.stats,
                      key_gap_checks=q.key_gap_checks)


def bellman_ford_oracle(g: Graph, s: int) -> SsspResult:
    """Synchronous Bellman-Ford rounds over the whole edge array.

    Stops at the first round with no improvement (at most n - 1 rounds). Shares
    no code with the queue-based solvers.
    """
    _check_source(g, s)
    n = g.n
    dist = np.full(n, np.inf)
    parent = np.full(n, -1, dtype=np.int64)
    dist[s] = 0.0
    src, dst, w = g.sources, g.targets, g.weights
    for _ in range(max(n - 1, 0)):
        cand = dist[src] + w
        better = np.nonzero(cand < dist[dst])[0]
        if better.size == 0:
            break
        order = np.lexsort((cand[better], dst[better]))
        idx = better[order]
        tgt = dst[idx]
        first = np.ones(idx.size, dtype=bool)
        first[1:] = tgt[1:] != tgt[:-1]
        sel = idx[first]
        dist[dst[sel]] = cand[sel]
        parent[dst[sel]] = src[sel]
    par = [None if p < 0 else int(p) for p in parent.tolist()]
    return SsspResult(s, dist.tolist(), par, [], kind="oracle")


def adversarial_zero_delta_run(
    g: Graph,
    s: int,
    surrogate_delta: float,
    kind: QueueKind = DIAL,
    tie_break: TieBreak = TieBreak.MAX_FLOAT,
) -> tuple[SsspResult, list[int]]:
    """Run the integer-queue solver on a graph with zero-weight edges anyway.

    ``surrogate_delta`` stands in for the (zero) minimum edge weight and ties
    inside an integer key go to the largest float key first. Relaxations that
    would improve an already extracted node are dropped and recorded in
    ``late_relaxations``. Returns the result and the nodes whose distance
    disagrees with the Bellman-Ford oracle.
    """
    _check_source(g, s)
    if not g.has_zero_edge():
        raise NoZeroEdge("graph has no zero-weight edge")
    if not surrogate_delta > 0:
        raise InvalidBounds(f"surrogate delta must be positive, got {surrogate_delta}")
    inner = make_int_queue(kind, key_span(surrogate_delta, g.max_weight), tie_break)
    q = DeltaAdapter(inner, surrogate_delta)
    D, parent, trace, late = _run(g, s, q, strict=False)
    result = SsspResult(
        s, D, parent, trace, kind=f"{kind}/adversarial", delta=surrogate_delta,
        stats=q.stats, late_relaxations=late, key_gap_checks=q.key_gap_checks,
    )
    oracle = bellman_ford_oracle(g, s)
    return result, mismatches(D, oracle.dist)
