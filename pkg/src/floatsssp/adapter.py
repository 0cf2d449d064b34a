"""Float-keyed queue facade over a monotone integer queue.

Each stored node carries its float key ``D`` and an integer companion key
``floor(D / delta)``; only the integer key is visible to the inner queue. The
result extracts, at every step, a node whose float key is within ``delta`` of
the stored minimum.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import FloatKeyIncrease, KeyGapViolation, KeyRangeOverflow, NonPositiveDelta
from .intpq import KEY_LIMIT, MonotoneIntQueue, TieBreak

_ULP = 2.0 ** -52


def int_key(d: float, delta: float) -> int:
    """``floor(d / delta)`` by float division and truncation toward zero.

    The rounded quotient can land on an integer the exact quotient falls just
    short of; the key is then one too large by at most one ulp of the quotient.
    """
    if not delta > 0 or math.isinf(delta):
        raise NonPositiveDelta(f"delta must be positive and finite, got {delta}")
    if not (d >= 0 and math.isfinite(d)):
        raise ValueError(f"key must be finite and non-negative, got {d}")
    q = d / delta
    if not q < KEY_LIMIT:
        raise KeyRangeOverflow(f"{d} / {delta} does not fit a 63-bit key")
    return int(q)


def key_gap_ok(d: float, delta: float, k: int) -> bool:
    """``d - delta*k < delta`` exactly, and ``delta*k <= d`` up to one ulp of
    the quotient."""
    lo = delta * k
    hi = lo + delta
    if lo < d * (1 - 1e-12) and d * (1 + 1e-12) < hi:
        return True
    fd, fdelta = Fraction(d), Fraction(delta)
    gap = fd - fdelta * k
    return gap < fdelta and fdelta * k <= fd * (1 + Fraction(_ULP))


class DeltaAdapter:
    """δ-nonmonotonic float priority queue built on an integer queue.

    ``check_invariants`` re-verifies the key gap for every update.
    """

    def __init__(self, inner: MonotoneIntQueue, delta: float, check_invariants: bool = True):
        if not delta > 0 or math.isinf(delta):
            raise NonPositiveDelta(f"delta must be positive and finite, got {delta}")
        self.inner = inner
        self.delta = float(delta)
        self.check_invariants = check_invariants
        self.float_keys: dict = {}
        self.int_keys: dict = {}
        if inner.tie_break is TieBreak.MAX_FLOAT and inner.float_key is None:
            inner.float_key = self.float_keys.__getitem__
        self.skipped_updates = 0
        self.key_gap_checks = 0

    def __len__(self) -> int:
        return len(self.float_keys)

    def __contains__(self, item) -> bool:
        return item in self.float_keys

    @property
    def stats(self):
        return self.inner.stats

    def update(self, item, d: float) -> None:
        """Insert ``item`` at float key ``d`` or lower its key to ``d``."""
        k = int_key(d, self.delta)
        if self.check_invariants:
            self.key_gap_checks += 1
            if not key_gap_ok(d, self.delta, k):
                raise KeyGapViolation(f"{item}: D={d!r}, delta={self.delta!r}, key={k}")
        old = self.float_keys.get(item)
        if old is None:
            self.inner.insert(item, k)
        else:
            if d > old:
                raise FloatKeyIncrease(f"{item}: {d} > current float key {old}")
            if k != self.int_keys[item]:
                self.inner.decrease_key(item, k)
            else:
                self.skipped_updates += 1
        self.float_keys[item] = d
        self.int_keys[item] = k

    def extract(self):
        """Remove and return ``(id, D)``, or None when empty."""
        got = self.inner.extract_min()
        if got is None:
            return None
        item, k = got
        d = self.float_keys.pop(item)
        stored = self.int_keys.pop(item)
        if self.check_invariants and stored != k:
            raise KeyGapViolation(f"{item}: inner key {k} != companion key {stored}")
        return item, d
