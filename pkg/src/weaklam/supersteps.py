"""Simultaneous weak superdevelopments.

The judgement ``M superstep{S,k} N`` contracts, in one go, any choice of
the redexes of M together with the upward-created ones; the index k counts
leading abstractions destined to feed head redexes later in the
derivation, under which reduction is exceptionally permitted. The same
rules over labeled terms additionally require the application label to
match the abstraction arriving at its head.

Both judgements are realized as exact set-valued enumeration (the terms
are small) plus a memoized decision procedure that reconstructs a
derivation. ``full_superdev`` computes the complete weak superdevelopment
of a labeled term by the inside-out equations; at k = 0 it is total.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import PremisesNotDerivableError, SizeCapError, WeaklamError
from .labeled import (erase_labels, label_initial, lift_chain_abs,
                      lift_chain_app1, lift_chain_app2, plain_chain)
from .reduction import NORMAL, ReductionTrace
from .terms import (Abs, App, Barrier, LAbs, LApp, STAR, Term, Var, canonical,
                    free_vars, fresh_name, label_subst_star, labels_in,
                    rename_free_label, subst)

DEFAULT_CAP = 10000


@dataclass(frozen=True)
class SuperstepDerivation:
    rule: str  # Var | Abs1 | Abs2 | App1 | App2, L-prefixed over labeled terms
    barrier: Barrier
    k: int
    source: Term
    target: Term
    premises: tuple = ()
    split: Optional[tuple] = None  # (n, m) for App2

    def labeled(self):
        return self.rule.startswith("L")


class SuperstepEngine:
    """Enumeration and decision for the superstep judgement, plain and
    labeled alike (the node types of the source select the rules). Memo
    tables live in the engine; make one per batch of related queries."""

    def __init__(self, cap=DEFAULT_CAP):
        self.cap = cap
        self._enum = {}
        self._derive = {}

    # -- enumeration --------------------------------------------------------

    def enumerate(self, t, barrier=(), k=0):
        return self._enumerate(t, Barrier.of(barrier).as_set, k)

    def _enumerate(self, t, bset, k):
        key = (canonical(t), bset, k)
        hit = self._enum.get(key)
        if hit is not None:
            return hit
        ty = type(t)
        out = {}
        if ty is Var:
            if k == 0:
                out[canonical(t)] = t
        elif ty in (Abs, LAbs):
            sub = bset | {t.var} if k == 0 else bset
            for body in self._enumerate(t.body, sub, k if k == 0 else k - 1):
                res = Abs(t.var, body) if ty is Abs else LAbs(t.label, t.var, body)
                out[canonical(res)] = res
        elif ty in (App, LApp):
            if k == 0:
                for fun in self._enumerate(t.fun, bset, 0):
                    for arg in self._enumerate(t.arg, bset, 0):
                        res = (App(fun, arg) if ty is App
                               else LApp(t.label, fun, arg))
                        out[canonical(res)] = res
            for n in range(k + 1):
                m = k - n
                for fd in self._enumerate(t.fun, bset, n + 1):
                    if type(fd) not in (Abs, LAbs):
                        continue
                    if ty is LApp and fd.label != t.label:
                        continue
                    if m > 0 and not _passes_through(fd, n):
                        continue
                    for ad in self._enumerate(t.arg, bset, m):
                        if (free_vars(fd) | free_vars(ad)) & bset:
                            continue
                        res = _fire(t, fd, ad)
                        out[canonical(res)] = res
                        if len(out) > self.cap:
                            raise SizeCapError(self.cap)
        else:
            raise TypeError(f"not a term: {t!r}")
        if len(out) > self.cap:
            raise SizeCapError(self.cap)
        result = tuple(out.values())
        self._enum[key] = result
        return result

    # -- decision with witness ----------------------------------------------

    def derive(self, source, target, barrier=(), k=0):
        barrier = Barrier.of(barrier)
        labeled = _is_labeled_term(source) or _is_labeled_term(target)
        return self._derive_rec(source, target, barrier, k, labeled)

    def _derive_rec(self, t, target, barrier, k, labeled):
        key = (canonical(t), canonical(target), barrier.as_set, k)
        if key in self._derive:
            return self._derive[key]
        self._derive[key] = None  # cycle guard; the recursion is structural
        res = self._derive_node(t, target, barrier, k, labeled)
        self._derive[key] = res
        return res

    def _derive_node(self, t, target, barrier, k, labeled):
        ty = type(t)
        if ty is Var:
            if k == 0 and target == t:
                return SuperstepDerivation("LVar" if labeled else "Var",
                                           barrier, 0, t, t)
            return None
        if ty in (Abs, LAbs):
            if type(target) is not ty:
                return None
            if ty is LAbs and target.label != t.label:
                return None
            # put both bodies under a common binder; the conclusion is
            # rebuilt around it so premises and conclusion stay consistent
            if t.var == target.var:
                z, sbody, tbody = t.var, t.body, target.body
                src, tgt = t, target
            else:
                z = fresh_name(t.var, free_vars(t.body) | free_vars(target.body)
                               | barrier.as_set | {t.var, target.var})
                sbody = subst(t.body, t.var, Var(z))
                tbody = subst(target.body, target.var, Var(z))
                if ty is LAbs:
                    src, tgt = LAbs(t.label, z, sbody), LAbs(t.label, z, tbody)
                else:
                    src, tgt = Abs(z, sbody), Abs(z, tbody)
            if k == 0:
                prem = self._derive_rec(sbody, tbody, barrier.extend(z), 0, labeled)
                rule = "LAbs1" if ty is LAbs else "Abs1"
            else:
                prem = self._derive_rec(sbody, tbody, barrier, k - 1, labeled)
                rule = "LAbs2" if ty is LAbs else "Abs2"
            if prem is None:
                return None
            return SuperstepDerivation(rule, barrier, k, src, tgt, (prem,))
        if ty in (App, LApp):
            bset = barrier.as_set
            if k == 0 and type(target) is ty:
                # an application's label binds in its function part, so the
                # two sides are matched under a common binder label
                if ty is App:
                    src, tgt = t, target
                elif t.label == target.label:
                    src, tgt = t, target
                else:
                    lab = fresh_name(t.label, labels_in(t.fun)
                                     | labels_in(target.fun)
                                     | {t.label, target.label, STAR})
                    src = LApp(lab, rename_free_label(t.fun, t.label, lab),
                               t.arg)
                    tgt = LApp(lab, rename_free_label(target.fun,
                                                      target.label, lab),
                               target.arg)
                df = self._derive_rec(src.fun, tgt.fun, barrier, 0, labeled)
                if df is not None:
                    da = self._derive_rec(src.arg, tgt.arg, barrier, 0, labeled)
                    if da is not None:
                        rule = "LApp1" if ty is LApp else "App1"
                        return SuperstepDerivation(rule, barrier, 0, src, tgt,
                                                   (df, da))
            for n in range(k + 1):
                m = k - n
                for fd in self._enumerate(t.fun, bset, n + 1):
                    if type(fd) not in (Abs, LAbs):
                        continue
                    if ty is LApp and fd.label != t.label:
                        continue
                    if m > 0 and not _passes_through(fd, n):
                        continue
                    for ad in self._enumerate(t.arg, bset, m):
                        if (free_vars(fd) | free_vars(ad)) & bset:
                            continue
                        if _fire(t, fd, ad) != target:
                            continue
                        df = self._derive_rec(t.fun, fd, barrier, n + 1, labeled)
                        da = self._derive_rec(t.arg, ad, barrier, m, labeled)
                        if df is not None and da is not None:
                            rule = "LApp2" if ty is LApp else "App2"
                            return SuperstepDerivation(rule, barrier, k, t,
                                                       target, (df, da), (n, m))
            return None
        raise TypeError(f"not a term: {t!r}")


def _fire(t, fd, ad):
    """The contractum of rule App2: substitute the developed argument into
    the developed body, starring the fired label first over labeled terms."""
    if type(t) is LApp:
        return subst(label_subst_star(fd.body, t.label), fd.var, ad)
    return subst(fd.body, fd.var, ad)


def _passes_through(fd, n):
    """True iff the developed function is  \\x. \\x1..xn. x  - the shape under
    which an argument developed at positive index may arrive at the head."""
    x = fd.var
    t = fd.body
    for _ in range(n):
        if type(t) not in (Abs, LAbs) or t.var == x:
            return False
        t = t.body
    return type(t) is Var and t.name == x


def _is_labeled_term(t):
    while type(t) in (Abs, LAbs, App, LApp):
        if type(t) in (LAbs, LApp):
            return True
        if type(t) is Abs:
            return False
        t = t.fun
    return False


# ---------------------------------------------------------------------------
# module-level one-shot wrappers


def enumerate_supersteps(m, barrier=(), k=0, cap=DEFAULT_CAP):
    """Exactly the terms reachable from ``m`` by one superstep under S, k."""
    return SuperstepEngine(cap).enumerate(m, barrier, k)


def derive_superstep(m, n, barrier=(), k=0, cap=DEFAULT_CAP):
    """A derivation of ``m superstep{S,k} n``, or None."""
    return SuperstepEngine(cap).derive(m, n, barrier, k)


def enumerate_labeled_supersteps(a, barrier=(), k=0, cap=DEFAULT_CAP):
    return SuperstepEngine(cap).enumerate(a, barrier, k)


def derive_labeled_superstep(a, b, barrier=(), k=0, cap=DEFAULT_CAP):
    return SuperstepEngine(cap).derive(a, b, barrier, k)


# ---------------------------------------------------------------------------
# full weak superdevelopments


def full_superdev(a, barrier=(), k=0):
    """The full weak superdevelopment of a labeled term, or None when it is
    undefined (possible only for k > 0; at k = 0 it always exists).

    An application fires when, for some split n + m = k, its function side
    fully superdevelops at index n + 1 to an abstraction carrying the
    application's label, the argument superdevelops at index m (m > 0 only
    when the function side's inner body is the consumed variable itself),
    and the assembled redex is away from the barrier. All defined splits
    must agree; this is asserted.
    """
    barrier = Barrier.of(barrier)
    memo = {}

    def go(t, bset, k):
        key = (id(t), bset, k)
        if key in memo:
            return memo[key]
        res = compute(t, bset, k)
        memo[key] = res
        return res

    def compute(t, bset, k):
        ty = type(t)
        if ty is Var:
            return t if k == 0 else None
        if ty is LAbs:
            if k == 0:
                return LAbs(t.label, t.var, go(t.body, bset | {t.var}, 0))
            body = go(t.body, bset, k - 1)
            return None if body is None else LAbs(t.label, t.var, body)
        if ty is LApp:
            results = []
            for m in range(k + 1):
                n = k - m
                fa = go(t.fun, bset, n + 1)
                if fa is None:
                    continue
                if type(fa) is not LAbs or fa.label != t.label:
                    continue
                inner = fa.body
                shadowed = False
                for _ in range(n):
                    if type(inner) is not LAbs:
                        raise WeaklamError(
                            f"full superdevelopment at index {n + 1} lacks "
                            f"leading abstractions; this is a bug")
                    shadowed = shadowed or inner.var == fa.var
                    inner = inner.body
                if m > 0 and (shadowed or inner != Var(fa.var)):
                    continue
                fb = go(t.arg, bset, m)
                if fb is None:
                    continue
                if (free_vars(fa) | free_vars(fb)) & bset:
                    continue
                results.append(
                    subst(label_subst_star(fa.body, t.label), fa.var, fb))
            if results:
                first = results[0]
                if any(r != first for r in results[1:]):
                    raise WeaklamError(
                        "distinct splits gave distinct full "
                        "superdevelopments; this contradicts uniqueness")
                return first
            if k == 0:
                return LApp(t.label, go(t.fun, bset, 0), go(t.arg, bset, 0))
            return None
        raise TypeError(f"not a labeled term: {t!r}")

    return go(a, barrier.as_set, k)


def complete_superstep(m, barrier=()):
    """The complete superstep of a plain term: label it initially, fully
    superdevelop at index 0, erase."""
    return erase_labels(full_superdev(label_initial(m), barrier, 0))


def diamond_join(a, b1, b2, barrier=(), cap=DEFAULT_CAP):
    """Join a one-superstep peak  b1 <= a => b2  at the full
    superdevelopment of ``a``, verifying both legs close the diamond."""
    barrier = Barrier.of(barrier)
    eng = SuperstepEngine(cap)
    if eng.derive(a, b1, barrier, 0) is None:
        raise PremisesNotDerivableError(f"{b1} is not a superstep reduct of {a}")
    if eng.derive(a, b2, barrier, 0) is None:
        raise PremisesNotDerivableError(f"{b2} is not a superstep reduct of {a}")
    join = full_superdev(a, barrier, 0)
    if eng.derive(b1, join, barrier, 0) is None \
            or eng.derive(b2, join, barrier, 0) is None:
        raise WeaklamError("the diamond does not close; this is a bug")
    return join


# ---------------------------------------------------------------------------
# from plain derivations to labeled ones, and from those to chains


def lift_derivation(d, _counter=None):
    """Lift a plain superstep derivation to labeled terms: abstractions get
    distinct fresh labels and every App2 application gets the label of the
    abstraction its function side develops to, so the same rules apply."""
    counter = _counter if _counter is not None else itertools.count()
    from .labeled import _label_name

    def lift(d):
        rule = d.rule
        if rule == "Var":
            return SuperstepDerivation("LVar", d.barrier, 0, d.source, d.target)
        if rule in ("Abs1", "Abs2"):
            prem = lift(d.premises[0])
            label = _label_name(next(counter))
            src = LAbs(label, d.source.var, prem.source)
            tgt = LAbs(label, d.target.var, prem.target)
            return SuperstepDerivation("L" + rule, d.barrier, d.k, src, tgt,
                                       (prem,))
        if rule == "App1":
            pf, pa = (lift(p) for p in d.premises)
            label = _label_name(next(counter))
            src = LApp(label, pf.source, pa.source)
            tgt = LApp(label, pf.target, pa.target)
            return SuperstepDerivation("LApp1", d.barrier, 0, src, tgt, (pf, pa))
        if rule == "App2":
            pf, pa = (lift(p) for p in d.premises)
            fd = pf.target
            if type(fd) is not LAbs:
                raise WeaklamError("lifted App2 function premise is not an "
                                   "abstraction; this is a bug")
            src = LApp(fd.label, pf.source, pa.source)
            tgt = subst(label_subst_star(fd.body, fd.label), fd.var, pa.target)
            return SuperstepDerivation("LApp2", d.barrier, d.k, src, tgt,
                                       (pf, pa), d.split)
        raise ValueError(f"not a plain derivation rule: {rule!r}")

    lifted = lift(d)
    if erase_labels(lifted.source) != d.source \
            or erase_labels(lifted.target) != d.target:
        raise WeaklamError("lifting did not preserve erasures; this is a bug")
    return lifted


def chain_from_superstep(d):
    """Extract a chain-reduction witness from a labeled superstep
    derivation; the result is accepted by check_chain with the same
    endpoints, barrier and index."""
    rule = d.rule
    if rule in ("LVar", "Var"):
        # a variable's chain is the empty trace in either language
        trace = ReductionTrace((), d.source, d.barrier, NORMAL)
        return plain_chain(trace)
    if rule == "LAbs1":
        w = chain_from_superstep(d.premises[0])
        return lift_chain_abs(w, d.source.label, d.source.var, d.barrier, 1)
    if rule == "LAbs2":
        w = chain_from_superstep(d.premises[0])
        return lift_chain_abs(w, d.source.label, d.source.var, d.barrier, 2)
    if rule == "LApp1":
        wf = chain_from_superstep(d.premises[0])
        wa = chain_from_superstep(d.premises[1])
        return lift_chain_app1(wf, wa, d.source.label, d.barrier)
    if rule == "LApp2":
        wf = chain_from_superstep(d.premises[0])
        wa = chain_from_superstep(d.premises[1])
        return lift_chain_app2(wf, wa, d.barrier)
    raise ValueError(f"not a labeled derivation rule: {rule!r}")
