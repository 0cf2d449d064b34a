"""Floating-point single-source shortest paths on monotone integer priority queues."""

from .adapter import DeltaAdapter, int_key
from .dijkstra import (
    BINARY,
    DIAL,
    RADIX,
    TWOLEVEL,
    QueueKind,
    SsspResult,
    adversarial_zero_delta_run,
    bellman_ford_oracle,
    dijkstra_float_via_int,
    dijkstra_standard,
)
from .graph import (
    Figure1Params,
    Graph,
    ProblemVariant,
    build_figure1,
    classify,
    generate_random,
    load_dimacs,
    min_max_edge_weight,
    write_dimacs,
)
from .intpq import (
    BinaryHeapQueue,
    DialBucketQueue,
    QueueStats,
    RadixHeap,
    TieBreak,
    TwoLevelBucketQueue,
)
from .ordering import check_condition_a, check_delta_po, check_fo

__all__ = [
    "BINARY", "DIAL", "RADIX", "TWOLEVEL", "BinaryHeapQueue", "DeltaAdapter",
    "DialBucketQueue", "Figure1Params", "Graph", "ProblemVariant", "QueueKind",
    "QueueStats", "RadixHeap", "SsspResult", "TieBreak", "TwoLevelBucketQueue",
    "adversarial_zero_delta_run", "bellman_ford_oracle", "build_figure1",
    "check_condition_a", "check_delta_po", "check_fo", "classify",
    "dijkstra_float_via_int", "dijkstra_standard", "generate_random", "int_key",
    "load_dimacs", "min_max_edge_weight", "write_dimacs",
]
