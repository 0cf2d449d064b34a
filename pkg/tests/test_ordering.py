import pytest
from hypothesis import given, strategies as st

from floatsssp.graph import Figure1Params, Graph, build_figure1, generate_random
from floatsssp.ordering import (
    ConditionAViolation,
    check_condition_a,
    check_delta_po,
    check_fo,
    first_delta_po_violation,
    violations_to_json,
)


def tr(*ds):
    return [(i, d) for i, d in enumerate(ds)]


def test_fo_examples():
    assert check_fo(tr(0.0, 1.0, 1.0, 2.5))
    assert not check_fo(tr(0.0, 1.0, 0.9))
    assert check_fo([])


def test_delta_po_examples():
    assert check_delta_po(tr(0.0, 1.0, 0.9), 0.5)
    assert not check_delta_po(tr(0.0, 1.0, 0.5), 0.5)  # strict: 1.0 < 0.5 + 0.5 fails
    assert not check_delta_po(tr(0.0, 2.0, 1.9, 1.4), 0.5)
    assert check_delta_po([], 1.0)


def test_delta_po_sign_is_exact():
    # the stored doubles satisfy 0.61 < 0.21 + 0.4 exactly; the rounded sum hides it
    assert not 0.61 < 0.21 + 0.4
    assert check_delta_po(tr(0.61, 0.21), 0.4)
    assert not check_delta_po(tr(0.61, 0.21), 0.39)


def test_delta_po_rejects_bad_delta():
    with pytest.raises(ValueError):
        check_delta_po(tr(0.0), 0.0)


def test_first_violation():
    assert first_delta_po_violation(tr(0.0, 2.0, 1.9, 1.4), 0.5) == (1, 3)
    assert first_delta_po_violation(tr(0.0, 1.0), 0.5) is None


@given(st.lists(st.floats(0, 1e6), max_size=50), st.floats(1e-9, 10))
def test_fo_implies_delta_po(ds, delta):
    trace = tr(*sorted(ds))
    assert check_fo(trace)
    assert check_delta_po(trace, delta)


@given(st.lists(st.floats(0, 100), max_size=40), st.floats(1e-3, 10))
def test_first_violation_agrees_with_check(ds, delta):
    trace = tr(*ds)
    assert (first_delta_po_violation(trace, delta) is None) == check_delta_po(trace, delta)


def test_condition_a_on_full_order():
    g = build_figure1(Figure1Params(5, 0.1))
    order = [(v, 0.0 if v == 0 else 1.0) for v in range(5)]
    assert check_condition_a(order, g) == []


def test_condition_a_when_last_node_goes_first():
    g = build_figure1(Figure1Params(5, 0.1))
    order = [(0, 0.0), (4, 1.3), (1, 1.0), (2, 1.0), (3, 1.0)]
    viol = check_condition_a(order, g)
    assert viol == [ConditionAViolation(4, 1, (1, 2, 3))]
    assert violations_to_json(viol) == [{"node": 4, "index": 1, "late_predecessors": [1, 2, 3]}]


def test_condition_a_one_early_predecessor_suffices():
    g = build_figure1(Figure1Params(5, 0.1))
    order = [(0, 0.0), (1, 1.0), (4, 1.0), (2, 1.0), (3, 1.0)]
    assert check_condition_a(order, g) == []


@given(n=st.integers(1, 30), m=st.integers(0, 100), seed=st.integers(0, 2**32))
def test_condition_a_vacuous_on_positive_graphs(n, m, seed):
    g = generate_random(n, m, 0.5, 3.0, seed)
    order = [(v, 0.0) for v in reversed(range(n))]
    assert check_condition_a(order, g) == []


def test_condition_a_empty_trace():
    assert check_condition_a([], Graph(2, [(0, 1, 0.0)])) == []
