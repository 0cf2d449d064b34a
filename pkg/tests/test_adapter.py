import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from floatsssp.adapter import DeltaAdapter, int_key, key_gap_ok
from floatsssp.errors import FloatKeyIncrease, KeyRangeOverflow, NonPositiveDelta
from floatsssp.intpq import (
    BinaryHeapQueue,
    DialBucketQueue,
    RadixHeap,
    TieBreak,
    TwoLevelBucketQueue,
)


@pytest.mark.parametrize("d, delta, k", [(3.7, 0.5, 7), (0.0, 0.5, 0), (0.0, 1e-9, 0),
                                         (1.0, 0.3, 3)])
def test_int_key_examples(d, delta, k):
    assert int_key(d, delta) == k


def test_int_key_errors():
    with pytest.raises(NonPositiveDelta):
        int_key(1.0, 0.0)
    with pytest.raises(NonPositiveDelta):
        int_key(1.0, -1.0)
    with pytest.raises(KeyRangeOverflow):
        int_key(1e300, 1e-300)
    with pytest.raises(ValueError):
        int_key(-1.0, 1.0)


@given(d=st.floats(0, 1e6), delta=st.floats(1e-6, 1e3))
def test_int_key_matches_exact_floor_within_one(d, delta):
    k = int_key(d, delta)
    exact = Fraction(d) // Fraction(delta)
    # the rounded quotient can only reach the next integer, never drop below
    assert k in (exact, exact + 1)
    assert key_gap_ok(d, delta, k)


def test_key_gap_ok_rejects_wrong_keys():
    assert key_gap_ok(3.7, 0.5, 7)
    assert not key_gap_ok(3.7, 0.5, 6)
    assert not key_gap_ok(3.7, 0.5, 8)
    # float 1.0 / float 0.2 rounds up to 5.0; tolerated as a one-ulp overshoot
    assert int_key(1.0, 0.2) == 5
    assert key_gap_ok(1.0, 0.2, 5)


def make_adapter(delta=0.5, span=40):
    return DeltaAdapter(DialBucketQueue(span), delta)


def test_update_inserts_at_integer_key():
    a = make_adapter()
    a.update("v", 3.7)
    assert a.inner.key("v") == 7
    assert a.stats.inserts == 1


def test_update_same_integer_key_skips_inner():
    a = make_adapter()
    a.update("v", 3.7)
    a.update("v", 3.6)
    assert a.inner.key("v") == 7
    assert a.stats.decrease_keys == 0
    assert a.float_keys["v"] == 3.6
    assert a.skipped_updates == 1


def test_update_lower_integer_key_decreases():
    a = make_adapter()
    a.update("v", 3.7)
    a.update("v", 3.4)
    assert a.inner.key("v") == 6
    assert a.stats.decrease_keys == 1


def test_update_rejects_increase():
    a = make_adapter()
    a.update("v", 3.4)
    with pytest.raises(FloatKeyIncrease):
        a.update("v", 3.5)


def test_zero_delta_refused():
    with pytest.raises(NonPositiveDelta):
        DeltaAdapter(DialBucketQueue(4), 0.0)


def test_same_bucket_extraction_within_window():
    a = make_adapter()
    for item, d in [("a", 1.02), ("b", 1.21), ("c", 1.49)]:
        a.update(item, d)
    assert {a.int_keys[i] for i in "abc"} == {2}
    item, d = a.extract()
    assert d < 1.02 + 0.5


def test_lower_bucket_extracted_first():
    a = make_adapter()
    a.update("hi", 1.7)
    a.update("lo", 0.4)
    assert a.extract() == ("lo", 0.4)
    assert a.extract() == ("hi", 1.7)
    assert a.extract() is None


def test_max_float_tie_break_wired_by_adapter():
    a = DeltaAdapter(DialBucketQueue(8, TieBreak.MAX_FLOAT), 0.5)
    for item, d in [("a", 1.02), ("b", 1.49), ("c", 1.21)]:
        a.update(item, d)
    assert [a.extract()[0] for _ in range(3)] == ["b", "c", "a"]


INNER = {
    "dial": lambda span: DialBucketQueue(span),
    "radix": lambda span: RadixHeap(span),
    "twolevel": lambda span: TwoLevelBucketQueue(span, 8),
    "binary": lambda span: BinaryHeapQueue(),
}


@pytest.mark.parametrize("name", sorted(INNER))
@pytest.mark.parametrize("seed", range(5))
def test_delta_window_stress(name, seed):
    """Shadow multiset of live float keys checks every extraction."""
    rng = random.Random(seed)
    delta = rng.choice([1.0, 0.1, 0.013])
    cmax = 10.0
    span = int(cmax / delta) + 1
    a = DeltaAdapter(INNER[name](span), delta)
    shadow: dict[int, float] = {}
    floor = 0.0  # float key of the last extraction, drives the monotone contract
    extracted = []
    next_id = 0
    for _ in range(3000):
        r = rng.random()
        if r < 0.4 or not shadow:
            d = floor + rng.uniform(delta, cmax)
            a.update(next_id, d)
            shadow[next_id] = d
            next_id += 1
        elif r < 0.7:
            item = rng.choice(list(shadow))
            d = max(floor + delta, shadow[item] - rng.uniform(0, cmax))
            if d < shadow[item]:
                a.update(item, d)
                shadow[item] = d
        else:
            true_min = min(shadow.values())
            item, d = a.extract()
            assert d == shadow.pop(item)
            assert d < true_min + delta
            extracted.append(d)
            floor = d
        for item, d in shadow.items():
            k = a.int_keys[item]
            assert k == int_key(d, delta)
            assert key_gap_ok(d, delta, k)
    running = extracted[0]
    for d in extracted:
        assert math.fsum((running, -d, -delta)) < 0
        running = max(running, d)
