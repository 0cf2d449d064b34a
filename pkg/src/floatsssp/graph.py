"""Directed weighted graphs in compressed out-adjacency form, DIMACS I/O and
instance generators."""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CountMismatch,
    EmptyEdgeSet,
    InvalidBounds,
    InvalidParams,
    InvalidWeight,
    MalformedLine,
    NegativeWeight,
)


class ProblemVariant(enum.Enum):
    POSITIVE = "PositiveWeights"
    NON_NEGATIVE = "NonNegativeWeights"


class Graph:
    """Immutable directed graph with float edge weights.

    Edges are stored sorted by source (stable, so the input order of each
    node's out-edges is kept). Node ids are 0-based.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]] = ()):
        if n < 1:
            raise InvalidParams(f"node count must be positive, got {n}")
        edges = list(edges)
        src = np.fromiter((e[0] for e in edges), dtype=np.int64, count=len(edges))
        dst = np.fromiter((e[1] for e in edges), dtype=np.int64, count=len(edges))
        w = np.fromiter((e[2] for e in edges), dtype=np.float64, count=len(edges))
        self._init_arrays(n, src, dst, w)

    @classmethod
    def from_arrays(cls, n: int, sources, targets, weights) -> Graph:
        g = cls.__new__(cls)
        if n < 1:
            raise InvalidParams(f"node count must be positive, got {n}")
        g._init_arrays(
            n,
            np.asarray(sources, dtype=np.int64),
            np.asarray(targets, dtype=np.int64),
            np.asarray(weights, dtype=np.float64),
        )
        return g

    def _init_arrays(self, n: int, src: np.ndarray, dst: np.ndarray, w: np.ndarray) -> None:
        if not (src.shape == dst.shape == w.shape):
            raise InvalidParams("edge arrays differ in length")
        if src.size:
            if src.min() < 0 or dst.min() < 0 or src.max() >= n or dst.max() >= n:
                raise InvalidParams(f"edge endpoint outside 0..{n - 1}")
            if not np.all(np.isfinite(w)):
                raise InvalidWeight("edge weights must be finite")
            if np.any(w < 0):
                raise NegativeWeight("edge weights must be non-negative")
        w = w + 0.0  # folds -0.0 into +0.0
        order = np.argsort(src, kind="stable")
        self.n = int(n)
        self.offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=self.offsets[1:])
        self.targets = dst[order]
        self.weights = w[order]
        self._sources = src[order]
        for arr in (self.offsets, self.targets, self.weights, self._sources):
            arr.setflags(write=False)

    @property
    def m(self) -> int:
        return int(self.targets.size)

    @property
    def sources(self) -> np.ndarray:
        return self._sources

    def edges(self) -> list[tuple[int, int, float]]:
        return list(zip(self._sources.tolist(), self.targets.tolist(), self.weights.tolist()))

    @cached_property
    def adjacency(self) -> list[list[tuple[int, float]]]:
        """Per-node lists of (target, weight); plain Python objects for fast loops."""
        tg = self.targets.tolist()
        wt = self.weights.tolist()
        off = self.offsets.tolist()
        return [list(zip(tg[off[v]:off[v + 1]], wt[off[v]:off[v + 1]])) for v in range(self.n)]

    @cached_property
    def _bounds(self) -> tuple[float, float] | None:
        if self.m == 0:
            return None
        return min_max_edge_weight(self)

    @property
    def min_weight(self) -> float:
        if self._bounds is None:
            raise EmptyEdgeSet("graph has no edges")
        return self._bounds[0]

    @property
    def max_weight(self) -> float:
        if self._bounds is None:
            raise EmptyEdgeSet("graph has no edges")
        return self._bounds[1]

    def has_zero_edge(self) -> bool:
        return bool(self.m) and self.min_weight == 0.0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.weights, other.weights)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def min_max_edge_weight(g: Graph) -> tuple[float, float]:
    """Single pass over all edges returning (min weight, max weight)."""
    if g.m == 0:
        raise EmptyEdgeSet("graph has no edges")
    lo = math.inf
    hi = -math.inf
    for w in g.weights.tolist():
        if w < lo:
            lo = w
        if w > hi:
            hi = w
    return lo, hi


def classify(g: Graph) -> ProblemVariant:
    if g.m == 0 or g.min_weight > 0.0:
        return ProblemVariant.POSITIVE
    return ProblemVariant.NON_NEGATIVE


def generate_random(n: int, m: int, delta: float, cmax: float, seed: int) -> Graph:
    """Uniform random directed graph with weights in [delta, cmax].

    One edge is overwritten with weight exactly ``delta`` so that the minimum
    edge weight of the result is ``delta``.
    """
    if n < 1 or m < 0:
        raise InvalidParams(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if not (delta > 0 and math.isfinite(cmax) and delta <= cmax):
        raise InvalidBounds(f"need 0 < delta <= C < inf, got delta={delta}, C={cmax}")
    rng = np.random.default_rng(seed)
    src = rng.integers(0, n, size=m)
    dst = rng.integers(0, n, size=m)
    w = rng.uniform(delta, cmax, size=m)
    if m:
        w[rng.integers(0, m)] = delta
    return Graph.from_arrays(n, src, dst, w)


@dataclass(frozen=True)
class Figure1Params:
    n: int
    epsilon: float
    base: float = 1.0

    def validate(self) -> None:
        if self.n < 3:
            raise InvalidParams(f"figure-1 graph needs n >= 3, got {self.n}")
        if not (self.epsilon > 0 and math.isfinite(self.epsilon)):
            raise InvalidParams(f"epsilon must be positive, got {self.epsilon}")
        if not (self.base > 0 and math.isfinite(self.base)):
            raise InvalidParams(f"base must be positive, got {self.base}")

    def solid_weights(self) -> list[float]:
        """Weights of v_1 -> v_i for i = 2..n (index 0 is v_2)."""
        step = self.epsilon / (self.n - 1)
        return [self.base + k * step for k in range(self.n - 1)]


def build_figure1(p: Figure1Params) -> Graph:
    """Zero-edge counterexample family.

    Node 0 is the source. Solid edges 0 -> i (1 <= i < n) have strictly
    increasing weights spanning less than epsilon; zero-weight edges i -> j
    join every pair 1 <= i < j < n. Every non-source node ends up at distance
    ``base``.
    """
    p.validate()
    solid = p.solid_weights()
    if any(b <= a for a, b in zip(solid, solid[1:])):
        raise InvalidParams("epsilon too small to separate solid weights in float64")
    edges = [(0, i + 1, w) for i, w in enumerate(solid)]
    edges += [(i, j, 0.0) for i in range(1, p.n) for j in range(i + 1, p.n)]
    return Graph(p.n, edges)


# DIMACS .gr with decimal weights

def load_dimacs(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_dimacs(fh)


def parse_dimacs(lines: Iterable[str]) -> Graph:
    n = declared = None
    src: list[int] = []
    dst: list[int] = []
    wts: list[float] = []
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise MalformedLine("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "sp":
                raise MalformedLine("expected 'p sp <n> <m>'", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedLine("non-integer counts in problem line", lineno) from None
            if n < 1 or declared < 0:
                raise MalformedLine("counts out of range in problem line", lineno)
        elif tag == "a":
            if n is None:
                raise MalformedLine("arc before problem line", lineno)
            if len(parts) != 4:
                raise MalformedLine("expected 'a <src> <dst> <weight>'", lineno)
            try:
                u, v, w = int(parts[1]), int(parts[2]), float(parts[3])
            except ValueError:
                raise MalformedLine("unparsable arc fields", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedLine(f"node id outside 1..{n}", lineno)
            if math.isnan(w) or math.isinf(w):
                raise InvalidWeight(f"line {lineno}: weight must be finite")
            if w < 0:
                raise NegativeWeight(f"line {lineno}: negative weight {parts[3]}")
            src.append(u - 1)
            dst.append(v - 1)
            wts.append(w)
        else:
            raise MalformedLine(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise MalformedLine("missing problem line", lineno + 1)
    if len(wts) != declared:
        raise CountMismatch(declared, len(wts))
    return Graph.from_arrays(n, src, dst, wts)


def format_dimacs(g: Graph, comments: Sequence[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p sp {g.n} {g.m}")
    out += [f"a {u + 1} {v + 1} {w:.17g}" for u, v, w in g.edges()]
    return "\n".join(out) + "\n"


def write_dimacs(g: Graph, path: str | os.PathLike, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_dimacs(g, comments))
