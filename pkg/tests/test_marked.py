import pytest

from weaklam import (BarrierViolatedError, GenConfig, NotAMarkedRedexError,
                     NotInitiallyMarkedError, detect_creations, erase_stars,
                     gen_term, is_initially_marked, mark_initial,
                     marked_contract, marked_redexes, match_creation_cases,
                     parse)


def M(s):
    return parse(s, "marked")


def test_mark_initial_examples():
    assert mark_initial(parse(r"(\x. x) y")) == M(r"(\*x. x) y")
    t = parse(r"\x. (\y. y) x")
    assert mark_initial(t) == M(r"\x. (\y. y) x")  # blocked redex stays bare
    assert mark_initial(parse(r"(\x. x) ((\y. y) z)")) == \
        M(r"(\*x. x) ((\*y. y) z)")


def test_mark_initial_roundtrip_and_validity():
    for i, t in enumerate(gen_term(GenConfig(count=150, seed=3))):
        a = mark_initial(t)
        assert erase_stars(a) == t
        assert is_initially_marked(a)


def test_is_initially_marked_examples():
    assert is_initially_marked(M(r"(\*x. x) y"))
    assert not is_initially_marked(M(r"\x. (\*y. y) x"))  # condition 1
    assert not is_initially_marked(M(r"(\x. x) y"))       # condition 2


def test_marked_contract_examples():
    assert marked_contract(M(r"(\*x. x) (\y. w) q"), (0,)) == M(r"(\y. w) q")
    assert marked_contract(M(r"(\*x. \y. x) r q"), (0,)) == M(r"(\y. r) q")
    with pytest.raises(BarrierViolatedError):
        marked_contract(M(r"\x. (\*y. y) x"), (1,))
    with pytest.raises(NotAMarkedRedexError):
        marked_contract(M(r"(\x. x) y"), ())


def test_marked_redexes_respect_binding_path():
    assert marked_redexes(M(r"(\*x. x) y")) == {()}
    assert marked_redexes(M(r"\x. (\*y. y) x")) == set()


def test_creation_case_i():
    cases = detect_creations(M(r"(\*x. x) (\y. y) z"), (0,))
    assert [(c.tag, c.created_position) for c in cases] == [("I", ())]


def test_creation_case_ii():
    cases = detect_creations(M(r"(\*x. \y. x) r q"), (0,))
    assert [(c.tag, c.created_position) for c in cases] == [("II", ())]


def test_creation_case_iii():
    cases = detect_creations(M(r"(\*x. x w) (\y. y)"), ())
    assert [(c.tag, c.created_position) for c in cases] == [("III", ())]


def test_creation_case_iv():
    cases = detect_creations(M(r"(\*x. (\z. z) x) y"), ())
    assert [(c.tag, c.created_position) for c in cases] == [("IV", ())]


def test_one_contraction_may_create_two_redexes():
    cases = detect_creations(M(r"(\*x. \y. (\w. w) x) q r"), (0,))
    assert sorted(c.tag for c in cases) == ["II", "IV"]


def test_no_creation_without_fresh_redexes():
    assert detect_creations(M(r"(\*x. x) y"), ()) == []


def test_requires_initially_marked():
    with pytest.raises(NotInitiallyMarkedError):
        detect_creations(M(r"(\x. x) ((\*y. y) z)"), (1,))


def test_iv_variable_condition_screens_preexisting_redexes():
    # the inner redex does not mention x, so it was a weak redex already and
    # the term is not initially marked; only the stripped matcher calls it IV
    canary = M(r"(\*x. (\y. u) v) q")
    assert not is_initially_marked(canary)
    assert match_creation_cases(canary, (), (), iv_requires_var=True) == set()
    assert match_creation_cases(canary, (), (), iv_requires_var=False) == {"IV"}


def test_case_matchers_are_anchored_and_exclusive():
    samples = [
        (M(r"(\*x. x) (\y. y) z"), (0,)),
        (M(r"(\*x. \y. x) r q"), (0,)),
        (M(r"(\*x. x w) (\y. y)"), ()),
        (M(r"(\*x. (\z. z) x) y"), ()),
    ]
    for a, p in samples:
        for c in detect_creations(a, p):
            tags = match_creation_cases(a, p, c.created_position)
            assert tags == {c.tag}
