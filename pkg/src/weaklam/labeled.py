"""The labeled weak lambda calculus.

A redex is an application whose label matches the label of its function
abstraction; contraction replaces the fired label with the star so that
label occurrences freed by the step cannot be rebound later. Since an
application's label binds inside its function part, substitution renames
application binders rather than capture labels of the substituted term;
this is what keeps downward-created redexes out of a superdevelopment.

``label_initial`` labels every abstraction distinctly and labels each
application to match the abstraction that can arrive at the head of its
function part (the abstraction itself when the function is one, the
anticipated head otherwise, a fresh label when no abstraction can arrive).
Matching at syntactic redexes makes the labeled redexes of the result
exactly the weak redexes of the input; matching at anticipated heads lets
upward-created redexes fire, which is what normalizing a labeling is for.

Chain reduction is the k-indexed relaxation of many-step labeled
reduction: a chain alternates plain reduction segments with the peeling of
a leading abstraction, under whose binder reduction then continues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotALabeledRedexError, SideConditionError
from .reduction import NORMAL, ReductionStep, ReductionTrace
from .terms import (Abs, App, Barrier, LAbs, LApp, STAR, Term, Var,
                    away_from, binding_path, children, free_labels,
                    free_vars, freshen, label_subst_star, positions,
                    replace_at, subst, subterm_at, to_text)

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _label_name(i):
    if i < 26:
        return _LETTERS[i]
    return f"{_LETTERS[i % 26]}{i // 26}"


def erase_labels(a):
    """Forget all labels, yielding a plain term."""
    ty = type(a)
    if ty is Var:
        return a
    if ty is LAbs:
        return Abs(a.var, erase_labels(a.body))
    if ty is LApp:
        return App(erase_labels(a.fun), erase_labels(a.arg))
    raise TypeError(f"not a labeled term: {a!r}")


def head_abstraction(a):
    """The abstraction node that can arrive at the head of ``a`` when its
    applications fire, or the variable name the head gets stuck on, or None.

    An application passes its argument's head through exactly when the head
    abstraction's body is its own bound variable.
    """
    kind, val = _head(a, {})
    if kind == "abs":
        return val
    return None


def _head(a, memo):
    key = id(a)
    if key in memo:
        return memo[key]
    ty = type(a)
    if ty is Var:
        res = ("var", a.name)
    elif ty is LAbs:
        res = ("abs", a)
    else:
        hf = _head(a.fun, memo)
        if hf[0] != "abs":
            res = ("stuck", None)
        else:
            ab = hf[1]
            hb = _head(ab.body, memo)
            if hb == ("var", ab.var):
                res = _head(a.arg, memo)
            else:
                res = hb
    memo[key] = res
    return res


def label_initial(m):
    """An initial labeling of a plain term: distinct labels on abstractions,
    head-matching labels on applications."""
    m = freshen(m)
    counter = iter(range(10 ** 9))
    memo = {}

    def build(t):
        ty = type(t)
        if ty is Var:
            return t
        if ty is Abs:
            return LAbs(_label_name(next(counter)), t.var, build(t.body))
        if ty is App:
            fun = build(t.fun)
            arg = build(t.arg)
            kind, node = _head(fun, memo)
            label = node.label if kind == "abs" else _label_name(next(counter))
            return LApp(label, fun, arg)
        raise TypeError(f"not a plain term: {t!r}")

    return build(m)


def is_initially_labeled(a):
    """True iff all abstractions carry pairwise distinct labels."""
    seen = set()

    def go(t):
        if type(t) is LAbs:
            if t.label in seen:
                return False
            seen.add(t.label)
            return go(t.body)
        if type(t) is LApp:
            return go(t.fun) and go(t.arg)
        return True

    return go(a)


def is_labeled_redex(t):
    return (type(t) is LApp and type(t.fun) is LAbs
            and t.fun.label == t.label)


def labeled_redexes(a, barrier=()):
    """Positions of the contractible labeled redexes: matching labels and
    away from the binding path extended by the barrier."""
    barrier = Barrier.of(barrier)

    def scan(t, blocked):
        acc = []
        if is_labeled_redex(t) and not (free_vars(t) & blocked):
            acc.append(())
        for frag, child, var in children(t):
            sub = blocked | {var} if var is not None else blocked
            acc.extend(frag + p for p in scan(child, sub))
        return acc

    return frozenset(scan(a, barrier.as_set))


def labeled_contract(a, p, barrier=()):
    """Fire the labeled redex at ``p``: star the fired label in the body,
    then substitute the argument."""
    p = tuple(p)
    barrier = Barrier.of(barrier)
    redex = subterm_at(a, p)
    if not is_labeled_redex(redex):
        raise NotALabeledRedexError(f"no labeled redex at {list(p)} in {a}")
    blocked = free_vars(redex) & (binding_path(a, p).as_set | barrier.as_set)
    if blocked:
        raise NotALabeledRedexError(
            f"redex at {list(p)} mentions blocked variables {sorted(blocked)}")
    body = label_subst_star(redex.fun.body, redex.label)
    contractum = subst(body, redex.fun.var, redex.arg)
    return freshen(replace_at(a, p, contractum))


def labeled_normalize(a, barrier=(), max_steps=100000):
    """Reduce to the labeled normal form, leftmost-innermost; terminates on
    every term because superdevelopments are finite. ``max_steps`` is a
    safety ceiling, not fuel."""
    barrier = Barrier.of(barrier)
    steps = []
    cur = a
    for _ in range(max_steps):
        redexes = labeled_redexes(cur, barrier)
        if not redexes:
            return cur, ReductionTrace(tuple(steps), a, barrier, NORMAL)
        innermost = [p for p in redexes
                     if not any(q != p and q[:len(p)] == p for q in redexes)]
        p = min(innermost)
        nxt = labeled_contract(cur, p, barrier)
        steps.append(ReductionStep(cur, p, nxt, barrier))
        cur = nxt
    raise RuntimeError(
        f"labeled reduction exceeded {max_steps} steps; this contradicts "
        f"finiteness of superdevelopments and is a bug")


# ---------------------------------------------------------------------------
# chain reduction


@dataclass(frozen=True)
class ChainSegment:
    trace: ReductionTrace
    peel: Optional[tuple] = None  # (label, var) of the abstraction peeled off


@dataclass(frozen=True)
class ChainDerivation:
    """Witness for the k-indexed chain relation: plain reduction segments
    interleaved with peels; exactly the last segment has no peel."""

    segments: tuple

    @property
    def k(self):
        return sum(1 for s in self.segments if s.peel is not None)

    @property
    def source(self):
        return self.segments[0].trace.start

    @property
    def target(self):
        cur = self.segments[-1].trace.final
        for seg in reversed(self.segments[:-1]):
            label, var = seg.peel
            cur = LAbs(label, var, cur)
        return cur

    def to_json(self):
        return {"k": self.k,
                "segments": [{"trace": s.trace.to_json(),
                              "peel": None if s.peel is None else
                              {"label": s.peel[0], "var": s.peel[1]}}
                             for s in self.segments]}


def plain_chain(trace):
    """The k = 0 chain holding a single reduction trace."""
    return ChainDerivation((ChainSegment(trace, None),))


def check_chain(a, b, barrier, k, w):
    """Verify that ``w`` derives  a  chain{S,k}  b: every segment must be a
    valid labeled reduction trace under the barrier, every peel must strip
    the recorded leading abstraction, and rebuilding the peels around the
    last segment's result must give ``b``."""
    barrier = Barrier.of(barrier)
    segs = w.segments
    if not segs or segs[-1].peel is not None:
        return False
    if any(s.peel is None for s in segs[:-1]):
        return False
    if len(segs) - 1 != k:
        return False
    cur = a
    for seg in segs:
        if seg.trace.start != cur:
            return False
        t = seg.trace.start
        for step in seg.trace.steps:
            if step.before != t:
                return False
            p = tuple(step.redex_position)
            try:
                after = labeled_contract(step.before, p, barrier)
            except NotALabeledRedexError:
                return False
            if after != step.after:
                return False
            t = step.after
        cur = t
        if seg.peel is not None:
            label, var = seg.peel
            if type(cur) is not LAbs or cur.label != label or cur.var != var:
                return False
            cur = cur.body
    rebuilt = cur
    for seg in reversed(segs[:-1]):
        label, var = seg.peel
        rebuilt = LAbs(label, var, rebuilt)
    return rebuilt == b


# -- helpers for the congruence constructors --------------------------------


def _steps_in_context(steps, wrap, prefix, barrier):
    return tuple(ReductionStep(wrap(s.before), prefix + tuple(s.redex_position),
                               wrap(s.after), barrier) for s in steps)


def _retrace(start, rel_steps, barrier, hypothesis):
    """Re-contract ``rel_steps`` (term-mapped steps) from ``start``; raises
    SideConditionError naming ``hypothesis`` when a mapped step is invalid."""
    out = []
    cur = start
    for before, p in rel_steps:
        if before != cur:
            raise SideConditionError(f"{hypothesis}: mapped trace does not chain")
        try:
            after = labeled_contract(before, p, barrier)
        except NotALabeledRedexError as e:
            raise SideConditionError(f"{hypothesis}: {e}") from e
        out.append(ReductionStep(before, p, after, barrier))
        cur = after
    return tuple(out), cur


def _map_chain(w, f, barrier, hypothesis):
    """Map every term of the chain through ``f`` (shape-preserving),
    re-contracting each step and re-deriving the peels from the mapped
    terms."""
    segments = []
    for seg in w.segments:
        start = f(seg.trace.start)
        rel = [(f(s.before), tuple(s.redex_position)) for s in seg.trace.steps]
        steps, cur = _retrace(start, rel, barrier, hypothesis)
        if seg.peel is None:
            segments.append(ChainSegment(
                ReductionTrace(steps, start, barrier, NORMAL), None))
        else:
            if type(cur) is not LAbs:
                raise SideConditionError(
                    f"{hypothesis}: mapped segment does not end in an abstraction")
            segments.append(ChainSegment(
                ReductionTrace(steps, start, barrier, NORMAL),
                (cur.label, cur.var)))
    return ChainDerivation(tuple(segments))


def _single_segment(w, what):
    if w.k != 0 or len(w.segments) != 1:
        raise SideConditionError(f"{what} must be a chain of index 0")
    return w.segments[0].trace


# -- the congruence constructors ---------------------------------------------


def lift_chain_abs(w, label, var, barrier, item):
    """Wrap a chain under a labeled abstraction.

    item 1: from  B chain{var.S, 0} B'  build  \\var^label. B chain{S,0} ...
    item 2: from  B chain{S, k} B'      build the k+1 chain that peels the
            new abstraction first (a zero-step first segment).
    """
    barrier = Barrier.of(barrier)
    if item == 1:
        tr = _single_segment(w, "the premise of the abstraction lemma, item 1")
        wrap = lambda t: LAbs(label, var, t)
        steps = _steps_in_context(tr.steps, wrap, (1,), barrier)
        trace = ReductionTrace(steps, wrap(tr.start), barrier, NORMAL)
        return ChainDerivation((ChainSegment(trace, None),))
    if item == 2:
        start = LAbs(label, var, w.source)
        first = ChainSegment(ReductionTrace((), start, barrier, NORMAL),
                             (label, var))
        return ChainDerivation((first,) + w.segments)
    raise ValueError(f"item must be 1 or 2, not {item!r}")


def lift_chain_app1(w_fun, w_arg, label, barrier):
    """Sequence two index-0 chains into one for the application: first the
    function side in context, then the argument side."""
    barrier = Barrier.of(barrier)
    tf = _single_segment(w_fun, "the function premise of the application lemma")
    ta = _single_segment(w_arg, "the argument premise of the application lemma")
    fun_steps = _steps_in_context(
        tf.steps, lambda t: LApp(label, t, ta.start), (0,), barrier)
    arg_steps = _steps_in_context(
        ta.steps, lambda t: LApp(label, tf.final, t), (1,), barrier)
    start = LApp(label, tf.start, ta.start)
    trace = ReductionTrace(fun_steps + arg_steps, start, barrier, NORMAL)
    return ChainDerivation((ChainSegment(trace, None),))


def lift_chain_app2(w_fun, w_arg, barrier):
    """Build the chain for an application whose function side chains to an
    abstraction that is then consumed by a head contraction.

    With w_fun of index n+1 ending in \\x^a. A' and w_arg of index m:

    * m = 0 (item 2): reduce the function side, reduce the argument, fire
      the head, then push the substitution through the remaining n-peel
      chain; index n.
    * m > 0 (item 1): requires the function chain to end in the bound
      variable under its peels; the argument is passed through and its own
      chain is appended after the function peels; index n + m.
    """
    barrier = Barrier.of(barrier)
    if w_fun.k == 0:
        raise SideConditionError(
            "the function premise must have chain index at least 1")
    seg0 = w_fun.segments[0]
    label, var = seg0.peel
    fun_abs = seg0.trace.final
    if type(fun_abs) is not LAbs:
        raise SideConditionError(
            "the function chain's first segment must end in an abstraction")
    rest = ChainDerivation(w_fun.segments[1:])
    m = w_arg.k
    if not away_from(fun_abs, barrier):
        raise SideConditionError(
            "hypothesis \\x^a. A' away from S fails for the head contraction")

    if m == 0:
        arg_tr = _single_segment(w_arg, "the argument premise")
        arg_final = arg_tr.final
        if not away_from(arg_final, barrier):
            raise SideConditionError("hypothesis B' away from S fails")
        start = LApp(label, seg0.trace.start, arg_tr.start)
        fun_steps = _steps_in_context(
            seg0.trace.steps, lambda t: LApp(label, t, arg_tr.start), (0,),
            barrier)
        arg_steps = _steps_in_context(
            arg_tr.steps, lambda t: LApp(label, fun_abs, t), (1,), barrier)
        head_before = LApp(label, fun_abs, arg_final)
        rel = [(s.before, tuple(s.redex_position)) for s in fun_steps + arg_steps]
        rel.append((head_before, ()))
        mapping = lambda t: subst(label_subst_star(t, label), var, arg_final)
        pushed = _map_chain(rest, mapping, barrier,
                            "pushing the argument through the remaining chain")
    else:
        # the argument must be passed through: the function chain must end
        # in its own bound variable under the remaining peels
        tail_body = rest.segments[-1].trace.final
        if tail_body != Var(var):
            raise SideConditionError(
                "hypothesis A' = \\x1..xn. x fails: the function chain does "
                "not end in the consumed variable")
        arg_start = w_arg.source
        if not away_from(_chain_core(w_arg), barrier):
            raise SideConditionError("hypothesis B' away from S fails")
        start = LApp(label, seg0.trace.start, arg_start)
        fun_steps = _steps_in_context(
            seg0.trace.steps, lambda t: LApp(label, t, arg_start), (0,),
            barrier)
        head_before = LApp(label, fun_abs, arg_start)
        rel = [(s.before, tuple(s.redex_position)) for s in fun_steps]
        rel.append((head_before, ()))
        mapping = lambda t: subst(label_subst_star(t, label), var, arg_start)
        pushed = _map_chain(rest, mapping, barrier,
                            "pushing the argument through the remaining chain")
        pushed = _append_chain(pushed, w_arg)

    steps, cur = _retrace(start, rel, barrier,
                          "the head contraction of the application lemma")
    first_seg = pushed.segments[0]
    if first_seg.trace.start != cur:
        raise SideConditionError(
            "the head contractum does not match the pushed chain")
    merged = ReductionTrace(steps + first_seg.trace.steps, start, barrier,
                            NORMAL)
    return ChainDerivation((ChainSegment(merged, first_seg.peel),)
                           + pushed.segments[1:])


def _chain_core(w):
    """The final term of a chain with its leading peeled abstractions
    stripped (the B'' of the application lemma)."""
    return w.segments[-1].trace.final


def _append_chain(w1, w2):
    """Concatenate two chains, merging w1's last segment with w2's first;
    w1's last trace must end where w2 starts."""
    last = w1.segments[-1]
    first = w2.segments[0]
    if last.peel is not None:
        raise SideConditionError("cannot append to a chain ending in a peel")
    if last.trace.final != first.trace.start:
        raise SideConditionError("appended chain does not start at the join")
    barrier = first.trace.barrier
    merged = ReductionTrace(last.trace.steps + first.trace.steps,
                            last.trace.start, barrier, NORMAL)
    return ChainDerivation(w1.segments[:-1]
                           + (ChainSegment(merged, first.peel),)
                           + w2.segments[1:])
