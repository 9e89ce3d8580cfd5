import json

import pytest

from weaklam import (Barrier, FUEL_EXHAUSTED, NORMAL, NotAWeakRedexError,
                     free_vars, parse, print_term, weak_contract,
                     weak_normalize, weak_redexes)

I_TERM = r"(\z. z)"


def test_redexes_blocked_by_binders():
    assert weak_redexes(parse(r"\x. (\y. y) x")) == set()
    assert weak_redexes(parse(r"(\x. x) y")) == {()}
    assert weak_redexes(parse(r"\x. (\y. y) z")) == {(1,)}


def test_redexes_blocked_by_barrier():
    t = parse(r"(\x. x) y")
    assert weak_redexes(t, Barrier(("y",))) == set()
    assert weak_redexes(t, Barrier(("q",))) == {()}


def test_contract_examples():
    assert weak_contract(parse(r"(\x. x) y"), ()) == parse("y")
    t = parse(rf"(\x. {I_TERM} x) y")
    assert weak_contract(t, ()) == parse(rf"{I_TERM} y")


def test_contract_rejects_blocked_redex():
    t = parse(r"(\x. (\y. y) x) w")
    with pytest.raises(NotAWeakRedexError):
        weak_contract(t, (0, 1))
    with pytest.raises(NotAWeakRedexError):
        weak_contract(parse("x y"), ())
    with pytest.raises(NotAWeakRedexError):
        weak_contract(parse(r"(\x. x) y"), (), Barrier(("y",)))


def test_normalize_paper_example():
    t = parse(rf"{I_TERM} (\x. {I_TERM} x) y")
    trace = weak_normalize(t, (), 10)
    assert trace.status == NORMAL
    assert len(trace.steps) == 3
    assert trace.final == parse("y")


def test_normalize_normal_form():
    trace = weak_normalize(parse("x y"), (), 10)
    assert trace.status == NORMAL and len(trace.steps) == 0
    assert trace.final == parse("x y")


def test_normalize_fuel_exhausted_on_omega():
    omega = parse(r"(\x. x x) (\x. x x)")
    trace = weak_normalize(omega, (), 5)
    assert trace.status == FUEL_EXHAUSTED
    assert len(trace.steps) == 5
    assert trace.final == omega


def test_normalize_is_leftmost_outermost():
    t = parse(rf"({I_TERM} a) ({I_TERM} b)")
    trace = weak_normalize(t, (), 10)
    assert [s.redex_position for s in trace.steps] == [(0,), (1,)]


def test_contraction_does_not_create_free_vars():
    t = parse(r"(\x. x x) (y z)")
    r = weak_contract(t, ())
    assert free_vars(r) <= free_vars(t)


def test_trace_json_shape():
    t = parse(rf"{I_TERM} y")
    doc = weak_normalize(t, Barrier(("w",)), 10).to_json()
    assert doc[-1]["status"] == "normal"
    assert doc[0]["redex"] == [] and doc[0]["barrier"] == ["w"]
    assert isinstance(doc[0]["term"], str)
    json.dumps(doc)  # serializable
    omega = parse(r"(\x. x x) (\x. x x)")
    doc = weak_normalize(omega, (), 2).to_json()
    assert doc[-1]["status"] == "fuel-exhausted"


def test_barrier_monotone_on_redexes():
    t = parse(r"(\x. x) ((\y. y) u)")
    big = Barrier(("u", "q"))
    assert weak_redexes(t, big) <= weak_redexes(t, Barrier(("q",)))
    assert weak_redexes(t, big) <= weak_redexes(t, ())
