"""Random operation sequences that respect the monotone usage contract."""

import random

from floatsssp.intpq import (
    BinaryHeapQueue,
    DialBucketQueue,
    RadixHeap,
    TwoLevelBucketQueue,
)

INSERT, DECREASE, EXTRACT = "i", "d", "x"


def random_ops(rng: random.Random, length: int, span: int, id_pool: int = 64):
    """Ops as tuples: (INSERT, id, key), (DECREASE, id, key), (EXTRACT,).

    Keys handed out always lie in [last extracted, last extracted + span].
    On ties a queue may extract a different id than the model, so only ids
    whose key is strictly above the last extracted key are ever decreased:
    those cannot have been extracted by any implementation.
    """
    live: dict[int, int] = {}
    last = 0
    next_id = 0
    ops = []
    for _ in range(length):
        r = rng.random()
        if r < 0.45 or not live:
            if len(live) >= id_pool:
                continue
            key = last + int(rng.random() * (span + 1))
            ops.append((INSERT, next_id, key))
            live[next_id] = key
            next_id += 1
        elif r < 0.7:
            movable = [i for i, k in live.items() if k > last]
            if not movable:
                continue
            item = rng.choice(movable)
            key = last + int(rng.random() * (live[item] - last + 1))
            ops.append((DECREASE, item, key))
            live[item] = key
        else:
            ops.append((EXTRACT,))
            item = min(live, key=live.__getitem__)
            last = live.pop(item)
    return ops


def make_queues(span: int, width: int = 4):
    return {
        "binary": BinaryHeapQueue(),
        "dial": DialBucketQueue(span),
        "radix": RadixHeap(span),
        "twolevel": TwoLevelBucketQueue(span, width),
    }


def replay(q, ops, drain: bool = True) -> list[int]:
    """Apply ops; return the extracted keys, draining the queue at the end."""
    insert, decrease, extract = q.insert, q.decrease_key, q.extract_min
    keys = []
    for op in ops:
        tag = op[0]
        if tag == INSERT:
            insert(op[1], op[2])
        elif tag == DECREASE:
            decrease(op[1], op[2])
        else:
            keys.append(extract()[1])
    if drain:
        while len(q):
            keys.append(extract()[1])
    return keys


def replay_all(queues, ops) -> list[list[int]]:
    """``replay`` for several queues in lockstep over one pass of ``ops``."""
    out = [[] for _ in queues]
    pairs = list(zip(queues, out))
    for op in ops:
        tag = op[0]
        if tag == INSERT:
            for q, _ in pairs:
                q.insert(op[1], op[2])
        elif tag == DECREASE:
            for q, _ in pairs:
                q.decrease_key(op[1], op[2])
        else:
            for q, keys in pairs:
                keys.append(q.extract_min()[1])
    for q, keys in pairs:
        while (got := q.extract_min()) is not None:
            keys.append(got[1])
    return out
