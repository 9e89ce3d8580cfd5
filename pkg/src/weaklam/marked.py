"""The star-marked calculus: only marked redexes contract, and contraction
of an initially marked term classifies every freshly appearing weak redex
into one of the four creation cases I-IV.

Classification is a shape analysis anchored on the contracted position p
and the created position q:

* p = q.0 - the contracted redex was the function part of the new redex;
  case I when the marked body is the bound variable itself (the argument
  abstraction surfaces), case II when the body is an abstraction.
* p a prefix of q - the new redex appears inside the contractum; resolving
  q through the body skeleton gives case III when its function part is the
  substituted variable, case IV when it is an abstraction that was blocked
  by that variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BarrierViolatedError, NotAMarkedRedexError,
                     NotInitiallyMarkedError)
from .terms import (Abs, App, Barrier, MarkedRedex, Term, Var, away_from,
                    binding_path, children, free_vars, freshen, positions,
                    replace_at, subst, subterm_at)

CASE_I = "I"
CASE_II = "II"
CASE_III = "III"
CASE_IV = "IV"


@dataclass(frozen=True)
class CreationCase:
    tag: str
    created_position: tuple
    contracted_position: tuple


def erase_stars(a):
    """Forget the marks: a marked redex becomes a plain application of an
    abstraction."""
    ty = type(a)
    if ty is Var:
        return a
    if ty is App:
        return App(erase_stars(a.fun), erase_stars(a.arg))
    if ty is Abs:
        return Abs(a.var, erase_stars(a.body))
    if ty is MarkedRedex:
        return App(Abs(a.var, erase_stars(a.body)), erase_stars(a.arg))
    raise TypeError(f"not a marked term: {a!r}")


def mark_initial(m):
    """Star every weak redex of a plain term (those away from their binding
    path); erasing the stars gives back the input."""

    def go(t, blocked):
        ty = type(t)
        if ty is Var:
            return t
        if ty is Abs:
            return Abs(t.var, go(t.body, blocked | {t.var}))
        if ty is App:
            if type(t.fun) is Abs and not (free_vars(t) & blocked):
                return MarkedRedex(t.fun.var,
                                   go(t.fun.body, blocked | {t.fun.var}),
                                   go(t.arg, blocked))
            return App(go(t.fun, blocked), go(t.arg, blocked))
        raise TypeError(f"not a plain term: {t!r}")

    return go(m, frozenset())


def is_initially_marked(a):
    """True iff every marked redex is away from its binding path and every
    unmarked application of an abstraction is not."""

    def go(t, blocked):
        ty = type(t)
        if ty is MarkedRedex:
            if free_vars(t) & blocked:
                return False
        elif ty is App and type(t.fun) is Abs:
            if not (free_vars(t) & blocked):
                return False
        for _, child, var in children(t):
            sub = blocked | {var} if var is not None else blocked
            if not go(child, sub):
                return False
        return True

    return go(a, frozenset())


def marked_redexes(a, barrier=()):
    """Positions of the contractible marked redexes."""
    barrier = Barrier.of(barrier)

    def scan(t, blocked):
        acc = []
        if type(t) is MarkedRedex and not (free_vars(t) & blocked):
            acc.append(())
        for frag, child, var in children(t):
            sub = blocked | {var} if var is not None else blocked
            acc.extend(frag + p for p in scan(child, sub))
        return acc

    return frozenset(scan(a, barrier.as_set))


def marked_contract(a, p):
    """Contract the marked redex at ``p``."""
    p = tuple(p)
    redex = subterm_at(a, p)
    if type(redex) is not MarkedRedex:
        raise NotAMarkedRedexError(f"no marked redex at {list(p)} in {a}")
    blocked = free_vars(redex) & binding_path(a, p).as_set
    if blocked:
        raise BarrierViolatedError(
            f"marked redex at {list(p)} mentions bound variables {sorted(blocked)}")
    contractum = subst(redex.body, redex.var, redex.arg)
    return freshen(replace_at(a, p, contractum))


def weak_redex_positions(a):
    """Positions of the unmarked weak redexes of a marked term: applications
    of plain abstractions away from their binding path."""

    def scan(t, blocked):
        acc = []
        if type(t) is App and type(t.fun) is Abs and not (free_vars(t) & blocked):
            acc.append(())
        for frag, child, var in children(t):
            sub = blocked | {var} if var is not None else blocked
            acc.extend(frag + p for p in scan(child, sub))
        return acc

    return frozenset(scan(a, frozenset()))


def detect_creations(a, p, require_initially_marked=True):
    """Contract the marked redex at ``p`` and classify every weak redex of
    the contractum into its creation case.

    On an initially marked term every such redex is new and matches exactly
    one of the four cases; a redex matching none (or several) raises
    NotInitiallyMarkedError since that can only happen when the marking was
    not initial.
    """
    p = tuple(p)
    if require_initially_marked and not is_initially_marked(a):
        raise NotInitiallyMarkedError(f"{a} is not initially marked")
    b = marked_contract(a, p)
    out = []
    for q in sorted(weak_redex_positions(b)):
        tags = match_creation_cases(a, p, q)
        if len(tags) != 1:
            raise NotInitiallyMarkedError(
                f"redex at {list(q)} after contracting {list(p)} matches "
                f"cases {sorted(tags) or 'none'}; the input cannot have been "
                f"initially marked")
        out.append(CreationCase(tags.pop(), q, p))
    return out


def match_creation_cases(a, p, q, iv_requires_var=True):
    """The set of creation-case tags whose source shape matches the term
    ``a`` around contracted position ``p`` and created position ``q``.

    ``iv_requires_var=False`` drops the requirement that the inner redex
    pattern of case IV mention the substituted variable; the full condition
    is what separates a redex *created* by the contraction from one that
    was already present (and hence betrays a non-initial marking).
    """
    p, q = tuple(p), tuple(q)
    redex = subterm_at(a, p)
    if type(redex) is not MarkedRedex:
        raise NotAMarkedRedexError(f"no marked redex at {list(p)} in {a}")
    tags = set()
    if q + (0,) == p:
        # the contracted redex was the function part of the created one
        if type(redex.body) is Var and redex.body.name == redex.var \
                and type(redex.arg) is Abs:
            tags.add(CASE_I)
        if type(redex.body) is Abs:
            tags.add(CASE_II)
    if q[:len(p)] == p:
        inner = _resolve_in_body(redex.body, q[len(p):], redex.var)
        if inner is not None and type(inner) is App:
            if type(inner.fun) is Var and inner.fun.name == redex.var \
                    and type(redex.arg) is Abs:
                tags.add(CASE_III)
            if type(inner.fun) is Abs:
                if not iv_requires_var or redex.var in free_vars(inner):
                    tags.add(CASE_IV)
    return tags


def _resolve_in_body(body, q2, var):
    """Walk ``q2`` through the body skeleton; positions of the contractum
    align with positions of the body until they enter a substituted copy of
    the argument, in which case the redex is not a creation of this shape."""
    t = body
    i = 0
    while i < len(q2):
        if type(t) is Var:
            return None  # descended into a copy of the argument
        stepped = False
        for frag, child, _ in children(t):
            if q2[i:i + len(frag)] == frag:
                t = child
                i += len(frag)
                stepped = True
                break
        if not stepped:
            return None
    if type(t) is Var and t.name == var:
        return None  # the created position is itself a copy of the argument
    return t
