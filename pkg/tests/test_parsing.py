import pytest

from weaklam import (Abs, App, LAbs, LApp, MarkedRedex, ParseError, Var,
                     parse, print_term)


def test_plain_examples():
    assert parse(r"\x. x x") == Abs("x", App(Var("x"), Var("x")))
    assert parse(r"(\x. x) y") == App(Abs("x", Var("x")), Var("y"))
    assert parse("a b c") == App(App(Var("a"), Var("b")), Var("c"))
    assert parse("a (b c)") == App(Var("a"), App(Var("b"), Var("c")))


def test_lambda_body_extends_right():
    assert parse(r"\x. x y") == Abs("x", App(Var("x"), Var("y")))


def test_labeled_syntax():
    t = parse(r"\x^a. x @b y", "labeled")
    assert t == LAbs("a", "x", LApp("b", Var("x"), Var("y")))
    assert parse(r"x @a y @b z", "labeled") == \
        LApp("b", LApp("a", Var("x"), Var("y")), Var("z"))
    assert parse(r"\x^*. x", "labeled") == LAbs("*", "x", Var("x"))


def test_star_cannot_label_an_application():
    with pytest.raises(ParseError):
        parse(r"x @* y", "labeled")


def test_marked_syntax():
    t = parse(r"(\*x. x) y", "marked")
    assert t == MarkedRedex("x", Var("x"), Var("y"))
    t = parse(r"(\*x. x) y z", "marked")
    assert t == App(MarkedRedex("x", Var("x"), Var("y")), Var("z"))
    t = parse(r"w ((\*x. x) y)", "marked")
    assert t == App(Var("w"), MarkedRedex("x", Var("x"), Var("y")))
    # plain parens still work in the marked grammar
    assert parse(r"(\x. x) y", "marked") == parse(r"(\x. x) y")


def test_marked_redex_requires_argument():
    with pytest.raises(ParseError):
        parse(r"(\*x. x)", "marked")


def test_syntax_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse("(x y")
    assert e.value.line == 1 and e.value.col == 5
    with pytest.raises(ParseError) as e:
        parse("x\n y )")
    assert e.value.line == 2
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse(r"\x x")
    with pytest.raises(ParseError):
        parse("x ?")
    with pytest.raises(ParseError):
        parse(r"\x^a. x")  # labels are not part of the plain grammar


def test_unknown_grammar_rejected():
    with pytest.raises(ValueError):
        parse("x", "fancy")


def test_printing_minimal_parens():
    assert print_term(parse(r"(\x. x) y")) == r"(\x. x) y"
    assert print_term(parse("a b c")) == "a b c"
    assert print_term(parse("a (b c)")) == "a (b c)"
    assert print_term(parse(r"\x. x y")) == r"\x. x y"
    assert print_term(parse(r"x (\y. y)")) == r"x (\y. y)"
    t = parse(r"(\x^a. x) @a (\y^b. y)", "labeled")
    assert parse(print_term(t), "labeled") == t
    m = parse(r"w ((\*x. x) y)", "marked")
    assert parse(print_term(m), "marked") == m
