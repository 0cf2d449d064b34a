"""Monotone integer priority queues.

Every queue here follows the same usage contract: a key handed to
``insert`` or ``decrease_key`` is never below the last extracted key. The
contract is checked on every call, not assumed.
"""

from __future__ import annotations

import abc
import enum
from dataclasses import asdict, dataclass
from typing import Callable, Hashable

from .errors import (
    DuplicateId,
    KeyIncrease,
    KeyRangeOverflow,
    MonotonicityViolation,
    UnknownId,
)

KEY_LIMIT = 1 << 63
RADIX_BUCKETS = 64  # keys < 2**63, so key ^ last has at most 63 bits


class TieBreak(enum.Enum):
    FIFO = "fifo"
    LIFO = "lifo"
    MAX_FLOAT = "max-float"  # largest companion float key first


@dataclass
class QueueStats:
    inserts: int = 0
    decrease_keys: int = 0
    extract_mins: int = 0
    bucket_scans: int = 0
    relocations: int = 0
    max_scans_per_extract: int = 0

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    def _record_scans(self, scans: int) -> None:
        self.bucket_scans += scans
        if scans > self.max_scans_per_extract:
            self.max_scans_per_extract = scans


class MonotoneIntQueue(abc.ABC):
    """Common bookkeeping: id -> key map, last extracted key, stats.

    Subclasses implement ``insert``, ``decrease_key`` and ``extract_min``
    directly with an inline fast-path contract check; when that check fails
    they call ``_reject`` which works out the precise error.
    """

    def __init__(
        self,
        tie_break: TieBreak = TieBreak.FIFO,
        float_key: Callable[[Hashable], float] | None = None,
    ):
        self.tie_break = tie_break
        self._fifo = tie_break is TieBreak.FIFO
        self.float_key = float_key
        self.stats = QueueStats()
        self._keys: dict = {}
        self._last = 0

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, item) -> bool:
        return item in self._keys

    @property
    def last_extracted(self):
        return self._last

    def key(self, item):
        try:
            return self._keys[item]
        except KeyError:
            raise UnknownId(item) from None

    def _check_key(self, key) -> None:
        if key < self._last:
            raise MonotonicityViolation(f"key {key} below last extracted key {self._last}")

    def _reject(self, item, key, decrease: bool = False):
        if decrease:
            old = self._keys.get(item)
            if old is None:
                raise UnknownId(item)
            if key > old:
                raise KeyIncrease(f"{item}: {key} > current key {old}")
        elif item in self._keys:
            raise DuplicateId(item)
        self._check_key(key)
        raise AssertionError(f"fast-path check rejected valid key {key} for {item!r}")

    def _pick(self, bucket: dict):
        if self._fifo:
            return next(iter(bucket))
        if self.tie_break is TieBreak.LIFO:
            return next(reversed(bucket))
        if self.float_key is None:
            raise ValueError("MAX_FLOAT tie-break needs a float_key callback")
        return max(bucket, key=self.float_key)

    @abc.abstractmethod
    def insert(self, item, key) -> None: ...

    @abc.abstractmethod
    def decrease_key(self, item, new_key) -> None: ...

    @abc.abstractmethod
    def extract_min(self):
        """Remove and return ``(id, key)`` with minimal key, or None if empty."""


def _check_span(span: int) -> int:
    span = int(span)
    if span < 0:
        raise ValueError(f"span must be non-negative, got {span}")
    if span >= KEY_LIMIT:
        raise KeyRangeOverflow(f"span {span} does not fit a 63-bit key range")
    return span


class _IntKeyed(MonotoneIntQueue):
    span: int | None = None  # bucket queues cap key - last at span

    def __init__(self, tie_break=TieBreak.FIFO, float_key=None, span=None):
        super().__init__(tie_break, float_key)
        self.span = span
        self._reach = KEY_LIMIT if span is None else span

    def _check_key(self, key) -> None:
        if type(key) is not int:
            raise TypeError(f"integer key required, got {type(key).__name__}")
        if not 0 <= key < KEY_LIMIT:
            raise KeyRangeOverflow(f"key {key} outside [0, 2**63)")
        super()._check_key(key)
        if key - self._last > self._reach:
            raise KeyRangeOverflow(
                f"key {key} exceeds last extracted {self._last} by more than span {self.span}"
            )


class DialBucketQueue(_IntKeyed):
    """Circular array of unit-width buckets.

    Live keys must lie in ``[last, last + span]``; key ``k`` sits in bucket
    ``k mod (span + 1)``. The cursor is the last extracted key and only moves
    forward.
    """

    def __init__(self, span: int, tie_break: TieBreak = TieBreak.FIFO, float_key=None):
        super().__init__(tie_break, float_key, _check_span(span))
        self._size = self.span + 1
        self._buckets: list[dict] = [{} for _ in range(self._size)]

    def insert(self, item, key) -> None:
        keys, last = self._keys, self._last
        if item in keys or type(key) is not int or not last <= key <= last + self._reach \
                or key >= KEY_LIMIT:
            self._reject(item, key)
        self._buckets[key % self._size][item] = None
        keys[item] = key
        self.stats.inserts += 1

    def decrease_key(self, item, new_key) -> None:
        keys = self._keys
        old = keys.get(item)
        if old is None or type(new_key) is not int or not self._last <= new_key <= old:
            self._reject(item, new_key, decrease=True)
        buckets, size = self._buckets, self._size
        del buckets[old % size][item]
        buckets[new_key % size][item] = None
        keys[item] = new_key
        self.stats.decrease_keys += 1

    def extract_min(self):
        keys = self._keys
        if not keys:
            return None
        buckets, size = self._buckets, self._size
        cursor = self._last
        scans = 0
        while not buckets[cursor % size]:
            cursor += 1
            scans += 1
        stats = self.stats
        if scans:
            stats._record_scans(scans)
        bucket = buckets[cursor % size]
        item = next(iter(bucket)) if self._fifo else self._pick(bucket)
        del bucket[item]
        del keys[item]
        self._last = cursor
        stats.extract_mins += 1
        return item, cursor


class RadixHeap(_IntKeyed):
    """Radix heap with buckets indexed by the highest bit in which a key
    differs from the last extracted key.

    Bucket 0 holds keys equal to the last extracted key; bucket ``b > 0``
    holds keys with ``(key ^ last).bit_length() == b``.
    """

    def __init__(self, span: int | None = None, tie_break: TieBreak = TieBreak.FIFO,
                 float_key=None):
        super().__init__(tie_break, float_key)
        if span is not None:
            _check_span(span)
        self._buckets: list[dict] = [{} for _ in range(RADIX_BUCKETS)]
        self._where: dict = {}

    def bucket_of(self, key: int) -> int:
        return (key ^ self._last).bit_length()

    def insert(self, item, key) -> None:
        keys, last = self._keys, self._last
        if item in keys or type(key) is not int or not last <= key < KEY_LIMIT:
            self._reject(item, key)
        b = (key ^ last).bit_length()
        self._buckets[b][item] = None
        self._where[item] = b
        keys[item] = key
        self.stats.inserts += 1

    def decrease_key(self, item, new_key) -> None:
        keys = self._keys
        old = keys.get(item)
        if old is None or type(new_key) is not int or not self._last <= new_key <= old:
            self._reject(item, new_key, decrease=True)
        b = (new_key ^ self._last).bit_length()
        cur = self._where[item]
        if b != cur:
            del self._buckets[cur][item]
            self._buckets[b][item] = None
            self._where[item] = b
        keys[item] = new_key
        self.stats.decrease_keys += 1

    def extract_min(self):
        keys = self._keys
        if not keys:
            return None
        buckets, where, stats = self._buckets, self._where, self.stats
        if not buckets[0]:
            b = 1
            while not buckets[b]:
                b += 1
            stats._record_scans(b - 1)
            src = buckets[b]
            anchor = min(keys[i] for i in src)
            # anchor is the new minimum; everything in src lands in a lower bucket
            for i in src:
                nb = (keys[i] ^ anchor).bit_length()
                buckets[nb][i] = None
                where[i] = nb
            stats.relocations += len(src)
            src.clear()
            self._last = anchor
        bucket = buckets[0]
        item = next(iter(bucket)) if self._fifo else self._pick(bucket)
        del bucket[item]
        del where[item]
        del keys[item]
        stats.extract_mins += 1
        return item, self._last


class TwoLevelBucketQueue(_IntKeyed):
    """Two-level bucket queue: top buckets of width ``width`` and one active
    top bucket expanded into ``width`` unit buckets.

    Key ``k`` lives in the unit bucket ``k - active*width`` when
    ``k // width == active``, otherwise in top bucket ``k // width`` (stored
    circularly; live keys span at most ``span // width + 2`` top buckets).
    """

    def __init__(self, span: int, width: int = 16, tie_break: TieBreak = TieBreak.FIFO,
                 float_key=None):
        super().__init__(tie_break, float_key, _check_span(span))
        if width < 1:
            raise ValueError(f"bucket width must be >= 1, got {width}")
        self.width = int(width)
        self._ntop = self.span // self.width + 2
        self._top: list[dict] = [{} for _ in range(self._ntop)]
        self._bottom: list[dict] = [{} for _ in range(self.width)]
        self._active = 0

    def _bucket(self, key: int) -> dict:
        t = key // self.width
        if t == self._active:
            return self._bottom[key - t * self.width]
        return self._top[t % self._ntop]

    def insert(self, item, key) -> None:
        keys, last = self._keys, self._last
        if item in keys or type(key) is not int or not last <= key <= last + self._reach \
                or key >= KEY_LIMIT:
            self._reject(item, key)
        self._bucket(key)[item] = None
        keys[item] = key
        self.stats.inserts += 1

    def decrease_key(self, item, new_key) -> None:
        keys = self._keys
        old = keys.get(item)
        if old is None or type(new_key) is not int or not self._last <= new_key <= old:
            self._reject(item, new_key, decrease=True)
        del self._bucket(old)[item]
        self._bucket(new_key)[item] = None
        keys[item] = new_key
        self.stats.decrease_keys += 1

    def extract_min(self):
        keys = self._keys
        if not keys:
            return None
        width, bottom, stats = self.width, self._bottom, self.stats
        pos = self._last - self._active * width
        scans = 0
        while pos < width and not bottom[pos]:
            pos += 1
            scans += 1
        if pos == width:
            top, ntop = self._top, self._ntop
            t = self._active + 1
            while not top[t % ntop]:
                t += 1
                scans += 1
            self._active = t
            base = t * width
            src = top[t % ntop]
            pos = width
            for i in src:
                off = keys[i] - base
                bottom[off][i] = None
                if off < pos:
                    pos = off
            stats.relocations += len(src)
            src.clear()
        if scans:
            stats._record_scans(scans)
        bucket = bottom[pos]
        item = next(iter(bucket)) if self._fifo else self._pick(bucket)
        del bucket[item]
        del keys[item]
        key = self._active * width + pos
        self._last = key
        stats.extract_mins += 1
        return item, key


class BinaryHeapQueue(MonotoneIntQueue):
    """Indexed binary min-heap over ``(key, seq, id)``.

    Extracts a global minimum, so it also works as a plain float-keyed queue.
    ``seq`` orders ties (FIFO or LIFO); MAX_FLOAT is not supported.
    """

    def __init__(self, tie_break: TieBreak = TieBreak.FIFO):
        if tie_break is TieBreak.MAX_FLOAT:
            raise ValueError("BinaryHeapQueue supports FIFO and LIFO tie-breaks only")
        super().__init__(tie_break)
        self._heap: list[list] = []
        self._pos: dict = {}
        self._seq = 0
        self._step = 1 if tie_break is TieBreak.FIFO else -1

    def insert(self, item, key) -> None:
        keys = self._keys
        if item in keys or key < self._last:
            self._reject(item, key)
        self._seq += self._step
        heap = self._heap
        heap.append([key, self._seq, item])
        self._sift_up(len(heap) - 1)
        keys[item] = key
        self.stats.inserts += 1

    def decrease_key(self, item, new_key) -> None:
        keys = self._keys
        old = keys.get(item)
        if old is None or not self._last <= new_key <= old:
            self._reject(item, new_key, decrease=True)
        i = self._pos[item]
        entry = self._heap[i]
        self._seq += self._step
        entry[0] = new_key
        entry[1] = self._seq
        self._sift_up(i)
        keys[item] = new_key
        self.stats.decrease_keys += 1

    def extract_min(self):
        heap, pos = self._heap, self._pos
        if not heap:
            return None
        top = heap[0]
        last = heap.pop()
        item, key = top[2], top[0]
        del pos[item]
        if heap:
            heap[0] = last
            pos[last[2]] = 0
            self._sift_down(0)
        del self._keys[item]
        self._last = key
        self.stats.extract_mins += 1
        return item, key

    def _sift_up(self, i: int) -> None:
        heap, pos = self._heap, self._pos
        entry = heap[i]
        key, seq = entry[0], entry[1]
        while i > 0:
            parent = (i - 1) >> 1
            p = heap[parent]
            if p[0] < key or (p[0] == key and p[1] < seq):
                break
            heap[i] = p
            pos[p[2]] = i
            i = parent
        heap[i] = entry
        pos[entry[2]] = i

    def _sift_down(self, i: int) -> None:
        heap, pos = self._heap, self._pos
        n = len(heap)
        entry = heap[i]
        while True:
            child = 2 * i + 1
            if child >= n:
                break
            c = heap[child]
            if child + 1 < n:
                r = heap[child + 1]
                if r[0] < c[0] or (r[0] == c[0] and r[1] < c[1]):
                    child += 1
                    c = r
            if entry[0] < c[0] or (entry[0] == c[0] and entry[1] < c[1]):
                break
            heap[i] = c
            pos[c[2]] = i
            i = child
        heap[i] = entry
        pos[entry[2]] = i
