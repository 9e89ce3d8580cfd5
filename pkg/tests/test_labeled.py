import json

import pytest

from weaklam import (Barrier, LAbs, LApp, NORMAL, NotALabeledRedexError,
                     ReductionStep, ReductionTrace, SideConditionError, Var,
                     check_chain, erase_labels, free_labels, head_abstraction,
                     is_initially_labeled, label_initial, labeled_contract,
                     labeled_normalize, labeled_redexes, lift_chain_abs,
                     lift_chain_app1, lift_chain_app2, parse, plain_chain,
                     print_term)

I_LX_IX_Y = r"(\z. z) (\x. (\z. z) x) y"


def L(s):
    return parse(s, "labeled")


def test_erase_labels():
    assert erase_labels(L(r"\x^a. x @b y")) == parse(r"\x. x y")
    assert erase_labels(L("x")) == parse("x")
    assert erase_labels(L(r"(\x^a. x) @a (\y^b. y)")) == parse(r"(\x. x) (\y. y)")


def test_label_initial_abstractions_distinct():
    a = label_initial(parse(r"\x. \y. x"))
    assert type(a) is LAbs and type(a.body) is LAbs
    assert a.label != a.body.label
    assert is_initially_labeled(a)


def test_label_initial_fresh_application_label():
    a = label_initial(parse("x y"))
    assert type(a) is LApp
    assert erase_labels(a) == parse("x y")
    assert labeled_redexes(a) == set()


def test_label_initial_matches_syntactic_redexes():
    a = label_initial(parse(r"(\x. x) (\y. y)"))
    assert labeled_redexes(a) == {()}
    assert a.label == a.fun.label


def test_label_initial_preserves_weak_redex_set():
    # labeled redexes of an initial labeling are exactly the weak redexes
    from weaklam import weak_redexes
    for s in (r"(\x. x) ((\y. y) z)", r"\x. (\y. y) x", I_LX_IX_Y,
              r"(\x. x y) (\z. z)"):
        t = parse(s)
        assert labeled_redexes(label_initial(t)) == weak_redexes(t)


def test_label_initial_anticipates_arriving_abstractions():
    # the root application must carry the label of the abstraction its
    # function side develops to, so created redexes can fire
    a = label_initial(parse(I_LX_IX_Y))
    arriving = head_abstraction(a.fun)
    assert arriving is not None and a.label == arriving.label


def test_labeled_redex_needs_matching_labels():
    assert labeled_redexes(L(r"(\x^a. x) @a y")) == {()}
    assert labeled_redexes(L(r"(\z^a. z) @c y")) == set()
    assert labeled_redexes(L(r"(\x^a. x) @a y"), Barrier(("y",))) == set()


def test_labeled_contract_stars_the_fired_label():
    assert labeled_contract(L(r"(\x^a. \y^b. y) @a w"), ()) == L(r"\y^b. y")
    # a duplicate of the fired label in the body is a free occurrence: starred
    assert labeled_contract(L(r"(\x^a. \y^a. y) @a w"), ()) == L(r"\y^*. y")


def test_labeled_contract_renames_captured_application_binder():
    t = L(r"(\x^b. x @a y) @b (\z^a. z)")
    r = labeled_contract(t, ())
    assert type(r) is LApp and r.label != "a"
    assert r == L(r"(\z^a. z) @c y")
    assert labeled_redexes(r) == set()  # mismatched: a normal form
    assert erase_labels(r) == parse(r"(\z. z) y")


def test_labeled_contract_duplicates_with_renaming():
    t = L(r"(\x^a. x @b x) @a ((\w^c. w) @c q)")
    r = labeled_contract(t, ())
    assert r == L(r"((\w^c. w) @c q) @b ((\w^c. w) @c q)")


def test_labeled_contract_errors():
    with pytest.raises(NotALabeledRedexError):
        labeled_contract(L(r"(\z^a. z) @c y"), ())
    with pytest.raises(NotALabeledRedexError):
        labeled_contract(L(r"\x^a. (\y^b. y) @b x"), (1,))


def test_labeled_normalize_paper_example():
    a = label_initial(parse(I_LX_IX_Y))
    nf, trace = labeled_normalize(a)
    assert erase_labels(nf) == parse("y")
    assert len(trace.steps) == 3
    assert trace.status == NORMAL


def test_labeled_normalize_normal_form():
    a = L(r"x @a y")
    nf, trace = labeled_normalize(a)
    assert nf == a and len(trace.steps) == 0


def test_labeled_normalize_counterexample_is_one_step():
    nf, trace = labeled_normalize(L(r"(\x^b. x @a y) @b (\z^a. z)"))
    assert len(trace.steps) == 1
    assert erase_labels(nf) == parse(r"(\z. z) y")


# -- chains --------------------------------------------------------------------


def _trace(terms_positions, barrier=Barrier()):
    terms = [terms_positions[0]]
    steps = []
    for before, p in zip(terms_positions[:-1], _positions(terms_positions)):
        after = labeled_contract(before, p, barrier)
        steps.append(ReductionStep(before, p, after, barrier))
        terms.append(after)
    return ReductionTrace(tuple(steps), terms_positions[0], barrier, NORMAL)


def _positions(tp):
    return tp[1:]


def test_check_chain_reflexive_zero():
    a = L(r"x @a y")
    w = plain_chain(ReductionTrace((), a, Barrier(), NORMAL))
    assert check_chain(a, a, (), 0, w)
    assert not check_chain(a, a, (), 1, w)


def test_check_chain_one_peel_example():
    a = L(r"\x^a. (\y^b. y) @b x")
    b = L(r"\x^a. x")
    body = a.body
    seg_trace = _trace([body, ()])
    from weaklam import ChainDerivation, ChainSegment
    w = ChainDerivation((
        ChainSegment(ReductionTrace((), a, Barrier(), NORMAL), ("a", "x")),
        ChainSegment(seg_trace, None),
    ))
    assert check_chain(a, b, (), 1, w)
    assert not check_chain(a, b, (), 0, w)


def test_plain_trace_is_not_a_chain_with_peels():
    # the k = 1 relation genuinely differs from plain reduction: no plain
    # trace reaches  \x^a. x  from the example source
    a = L(r"\x^a. (\y^b. y) @b x")
    assert labeled_redexes(a) == set()  # blocked under the binder


def test_lift_chain_abs_items():
    body = L(r"(\y^b. y) @b x")
    inner = plain_chain(_trace([body, ()], Barrier(("x",))))
    w0 = lift_chain_abs(inner, "a", "x", Barrier(), 1)
    src = LAbs("a", "x", body)
    assert check_chain(src, L(r"\x^a. x"), (), 0, w0)

    base = plain_chain(_trace([body, ()]))
    w1 = lift_chain_abs(base, "a", "x", Barrier(), 2)
    assert check_chain(src, L(r"\x^a. x"), (), 1, w1)


def test_lift_chain_app1_sequences_sides():
    fun = L(r"(\x^a. x) @a (\w^d. w)")
    arg = L(r"(\y^b. y) @b z")
    wf = plain_chain(_trace([fun, ()]))
    wa = plain_chain(_trace([arg, ()]))
    w = lift_chain_app1(wf, wa, "c", Barrier())
    src = LApp("c", fun, arg)
    assert check_chain(src, L(r"(\w^d. w) @c z"), (), 0, w)


def test_lift_chain_app1_on_empty_traces():
    a = L("x")
    w = lift_chain_app1(plain_chain(ReductionTrace((), a, Barrier(), NORMAL)),
                        plain_chain(ReductionTrace((), a, Barrier(), NORMAL)),
                        "c", Barrier())
    src = LApp("c", a, a)
    assert check_chain(src, src, (), 0, w)


def test_lift_chain_app2_head_consumption():
    # the full worked instance: (\x^a. (\y^b. y) @b x) @a w  chains at k = 0
    # to w by a two-step plain trace
    from weaklam import ChainDerivation, ChainSegment
    a = L(r"\x^a. (\y^b. y) @b x")
    w_fun = ChainDerivation((
        ChainSegment(ReductionTrace((), a, Barrier(), NORMAL), ("a", "x")),
        ChainSegment(_trace([a.body, ()]), None),
    ))
    arg = L("w")
    w_arg = plain_chain(ReductionTrace((), arg, Barrier(), NORMAL))
    w = lift_chain_app2(w_fun, w_arg, Barrier())
    src = LApp("a", a, arg)
    assert check_chain(src, arg, (), 0, w)
    assert len(w.segments) == 1 and len(w.segments[0].trace.steps) == 2


def test_lift_chain_app2_rejects_zero_index_function_chain():
    a = L(r"\x^a. x")
    w_fun = plain_chain(ReductionTrace((), a, Barrier(), NORMAL))
    w_arg = plain_chain(ReductionTrace((), L("w"), Barrier(), NORMAL))
    with pytest.raises(SideConditionError):
        lift_chain_app2(w_fun, w_arg, Barrier())


def test_chain_json_shape():
    a = L(r"x @a y")
    w = plain_chain(ReductionTrace((), a, Barrier(), NORMAL))
    doc = w.to_json()
    assert doc["k"] == 0
    assert doc["segments"][0]["peel"] is None
    json.dumps(doc)
