import pytest
from hypothesis import given, strategies as st

from weaklam import (Abs, App, Barrier, InvalidPositionError, LAbs, LApp,
                     MarkedRedex, Var, away_from, binding_path, free_labels,
                     free_vars, freshen, label_subst_star, parse, positions,
                     print_term, replace_at, subst, subterm_at, term_size)

x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")


def P(s):
    return parse(s)


# -- alpha equality and hashing ---------------------------------------------

def test_alpha_equality_plain():
    assert P(r"\x. x") == P(r"\y. y")
    assert P(r"\x. x z") != P(r"\y. y w")
    assert hash(P(r"\x. x")) == hash(P(r"\y. y"))
    assert P(r"\x. \y. x") != P(r"\x. \y. y")


def test_alpha_equality_labeled():
    # application labels bind in their function part and rename freely
    assert parse(r"(\z^a. z) @a y", "labeled") == parse(r"(\z^c. z) @c y", "labeled")
    # abstraction labels are free occurrences and do not rename
    assert parse(r"\x^a. x", "labeled") != parse(r"\x^b. x", "labeled")
    # nesting shadows
    assert parse(r"(x @a y) @a z", "labeled") == parse(r"(x @b y) @a z", "labeled")


def test_terms_usable_in_sets():
    s = {P(r"\x. x"), P(r"\y. y"), P(r"\x. x x")}
    assert len(s) == 2


# -- free variables ----------------------------------------------------------

def test_free_vars_examples():
    assert free_vars(P(r"\x. x y")) == {"y"}
    assert free_vars(x) == {"x"}
    assert free_vars(P(r"(\x. x) (\y. y)")) == set()


def test_free_labels_equations():
    assert free_labels(parse(r"\x^a. x", "labeled")) == {"a"}
    assert free_labels(parse(r"(\z^a. z) @a y", "labeled")) == set()
    assert free_labels(parse(r"(\z^b. z) @a y", "labeled")) == {"b"}


# -- substitution ------------------------------------------------------------

def test_subst_examples():
    assert subst(P("x y"), "x", P(r"\z. z")) == P(r"(\z. z) y")
    r = subst(P(r"\y. x y"), "x", y)
    assert r == Abs("q", App(y, Var("q")))  # capture avoided
    assert subst(P(r"\y. y"), "x", P("w w")) == P(r"\y. y")


def test_subst_star_example():
    t = parse(r"x @a (\y^a. y)", "labeled")
    assert label_subst_star(t, "a") == parse(r"x @a (\y^*. y)", "labeled")
    t2 = parse(r"(\z^a. z) @a y", "labeled")
    assert label_subst_star(t2, "a") == t2  # the label is bound


def test_subst_renames_binding_application_label():
    # substituting x into the function part of  x @a x  must not capture
    # the free label of the replacement
    t = parse(r"x @a x", "labeled")
    b = parse(r"\y^a. y", "labeled")
    r = subst(t, "x", b)
    assert type(r) is LApp and r.label != "a"
    assert r == parse(r"(\y^a. y) @b (\y^a. y)", "labeled")


# -- positions ----------------------------------------------------------------

def test_positions_and_subterms():
    t = P(r"(\x. x) y")
    assert set(positions(t)) == {(), (0,), (0, 1), (1,)}
    assert subterm_at(t, (0,)) == P(r"\x. x")
    assert subterm_at(P(r"\x. x y"), (1, 1)) == y
    assert subterm_at(x, ()) == x
    with pytest.raises(InvalidPositionError):
        subterm_at(t, (1, 0))


def test_marked_positions_exclude_bare_star_abstraction():
    t = parse(r"(\*x. x) y", "marked")
    assert set(positions(t)) == {(), (0, 1), (1,)}
    with pytest.raises(InvalidPositionError):
        subterm_at(t, (0,))


def test_replace_at_examples():
    t = P(r"(\x. x) y")
    assert replace_at(t, (1,), z) == P(r"(\x. x) z")
    assert replace_at(P(r"\x. w"), (1,), x) == P(r"\x. x")  # capture intended
    assert replace_at(t, (), z) == z


def test_binding_path_examples():
    assert binding_path(P(r"\x. \y. x y"), (1, 1)).vars == ("x", "y")
    assert binding_path(P("w z"), (1,)).vars == ()
    t = P(r"(\x. (\y. y) x) z")
    assert binding_path(t, (0, 1, 0)).vars == ("x",)


def test_away_from():
    assert away_from(P(r"\z. z"), Barrier(("x",)))
    assert not away_from(P("x y"), Barrier(("x",)))
    assert away_from(P("x y"), Barrier())


def test_barrier_semantics():
    s = Barrier(("x", "y", "x"))
    assert s.extend("z").vars == ("x", "y", "x", "z")
    assert s == Barrier(("y", "x"))  # set-based equality
    assert Barrier(("x",)).subset_of(s)
    assert "x" in s and "q" not in s


# -- the Barendregt convention -----------------------------------------------

def _binders(t):
    out = []
    stack = [t]
    while stack:
        n = stack.pop()
        if type(n) in (Abs, LAbs, MarkedRedex):
            out.append(n.var)
            stack.append(n.body)
            if type(n) is MarkedRedex:
                stack.append(n.arg)
        elif type(n) in (App, LApp):
            stack.extend((n.fun, n.arg))
    return out


def assert_barendregt(t):
    bs = _binders(t)
    assert len(bs) == len(set(bs)), f"duplicate binders in {t}"
    assert not set(bs) & free_vars(t), f"binder shadows a free variable in {t}"


def test_parser_freshens():
    t = P(r"\x. \x. x")
    assert_barendregt(t)
    assert t == Abs("a", Abs("b", Var("b")))
    assert_barendregt(P(r"(\x. x x) (\x. x x)"))


def test_subst_refreshens():
    t = subst(P(r"\y. x x"), "x", P(r"\z. z"))
    assert_barendregt(t)
    assert t == P(r"\y. (\z. z) (\z. z)")


# -- property tests -----------------------------------------------------------

_names = st.sampled_from(("x", "y", "z", "u", "v"))
_terms = st.recursive(
    st.builds(Var, _names),
    lambda sub: st.one_of(st.builds(App, sub, sub), st.builds(Abs, _names, sub)),
    max_leaves=12,
)


@given(_terms)
def test_print_parse_roundtrip(t):
    t = freshen(t)
    assert parse(print_term(t)) == t


@given(_terms)
def test_replace_with_self_is_identity(t):
    t = freshen(t)
    for p in positions(t):
        assert replace_at(t, p, subterm_at(t, p)) == t


@given(_terms, _names, _terms)
def test_subst_free_var_law(t, name, r):
    t, r = freshen(t), freshen(r)
    out = subst(t, name, r)
    upper = (free_vars(t) - {name}) | free_vars(r)
    if name in free_vars(t):
        assert free_vars(out) == upper
    else:
        assert out == t


@given(_terms, _names, _terms)
def test_subst_keeps_barendregt(t, name, r):
    out = subst(freshen(t), name, freshen(r))
    assert_barendregt(out)


def test_term_size():
    assert term_size(x) == 1
    assert term_size(P(r"(\x. x) y")) == 4
    assert term_size(parse(r"(\*x. x) y", "marked")) == 3
