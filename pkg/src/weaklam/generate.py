"""Seeded random generation of terms, barriers and traces, plus a greedy
shrinker. Identical configurations yield identical case streams."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .labeled import label_initial, labeled_contract, labeled_redexes
from .reduction import weak_contract, weak_redexes
from .terms import (Abs, App, LAbs, LApp, Barrier, Term, Var, canonical,
                    free_vars, freshen, positions, replace_at, subterm_at,
                    term_size)

_FREE_POOL = ("u", "v", "w", "f", "g", "h")
_BINDER_POOL = ("x", "y", "z", "p", "q", "r", "s", "t")


@dataclass(frozen=True)
class GenConfig:
    max_size: int = 12
    max_free_vars: int = 3
    max_barrier: int = 3
    max_k: int = 3
    seed: int = 0
    count: int = 1000


def case_rng(cfg, index):
    """The per-case random stream; stable across runs and platforms."""
    return random.Random(f"{cfg.seed}:{index}")


def gen_term(cfg):
    """A deterministic stream of ``cfg.count`` plain terms."""
    for i in range(cfg.count):
        yield gen_term_once(case_rng(cfg, i), cfg)


def gen_term_once(rng, cfg):
    pool = _FREE_POOL[:cfg.max_free_vars]
    for _ in range(8):
        size = rng.randint(1, max(1, cfg.max_size))
        term, _ = _gen(rng, size, (), pool, [0])
        if term_size(term) <= cfg.max_size:
            return freshen(term)
    return freshen(Var(pool[0]) if pool else Abs("x", Var("x")))


def _gen(rng, budget, scope, pool, counter):
    names = scope + pool
    if budget <= 1:
        if names:
            return Var(rng.choice(names)), 1
        budget = 2  # no variable in scope: a closed term needs a binder
    r = rng.random()
    if r < 0.2 and names:
        return Var(rng.choice(names)), 1
    if r < 0.5 or budget < 3:
        binder = _BINDER_POOL[counter[0] % len(_BINDER_POOL)]
        if counter[0] >= len(_BINDER_POOL):
            binder += str(counter[0] // len(_BINDER_POOL))
        counter[0] += 1
        body, used = _gen(rng, budget - 1, scope + (binder,), pool, counter)
        return Abs(binder, body), used + 1
    fun_budget = rng.randint(1, budget - 2)
    if rng.random() < 0.45:
        # bias toward applied abstractions so reduction has work to do
        fun_budget = max(2, fun_budget)
        binder = _BINDER_POOL[counter[0] % len(_BINDER_POOL)]
        if counter[0] >= len(_BINDER_POOL):
            binder += str(counter[0] // len(_BINDER_POOL))
        counter[0] += 1
        fbody, fused = _gen(rng, fun_budget - 1, scope + (binder,), pool, counter)
        fun, fused = Abs(binder, fbody), fused + 1
    else:
        fun, fused = _gen(rng, fun_budget, scope, pool, counter)
    arg, aused = _gen(rng, budget - 1 - fused, scope, pool, counter)
    return App(fun, arg), fused + aused + 1


def gen_barrier(rng, cfg, term=None):
    """A barrier of at most max_barrier names, mixing free variables of the
    term with names foreign to it."""
    pool = list(_FREE_POOL[:max(1, cfg.max_free_vars)]) + ["m1", "m2"]
    if term is not None:
        pool += sorted(free_vars(term))
    n = rng.randint(0, cfg.max_barrier)
    return Barrier(tuple(rng.choice(pool) for _ in range(n)))


def gen_k(rng, cfg):
    return rng.randint(0, cfg.max_k)


def gen_labeled_term(rng, cfg, perturb=0.25):
    """An initially labeled term; with the given probability one application
    label is rewired to another label occurring in the term, exercising
    mismatches and duplicate labels."""
    a = label_initial(gen_term_once(rng, cfg))
    if rng.random() >= perturb:
        return a
    apps = [p for p in positions(a) if type(subterm_at(a, p)) is LApp]
    if not apps:
        return a
    p = rng.choice(apps)
    labels = sorted(_all_labels(a)) + ["e1"]
    node = subterm_at(a, p)
    return replace_at(a, p, LApp(rng.choice(labels), node.fun, node.arg))


def _all_labels(t):
    if type(t) is Var:
        return set()
    if type(t) is LAbs:
        return {t.label} | _all_labels(t.body)
    return {t.label} | _all_labels(t.fun) | _all_labels(t.arg)


def random_weak_trace(rng, m, barrier, max_steps):
    """Contract randomly chosen weak redexes, at most ``max_steps`` times;
    returns the visited terms and the positions contracted."""
    terms, poss = [m], []
    cur = m
    for _ in range(max_steps):
        redexes = sorted(weak_redexes(cur, barrier))
        if not redexes:
            break
        p = rng.choice(redexes)
        cur = weak_contract(cur, p, barrier)
        terms.append(cur)
        poss.append(p)
    return terms, poss


def random_labeled_trace(rng, a, barrier, max_steps):
    """A random labeled reduction sequence with the contracted positions."""
    terms, poss = [a], []
    cur = a
    for _ in range(max_steps):
        redexes = sorted(labeled_redexes(cur, barrier))
        if not redexes:
            break
        p = rng.choice(redexes)
        cur = labeled_contract(cur, p, barrier)
        terms.append(cur)
        poss.append(p)
    return terms, poss


def shrink_term(term, still_fails, max_rounds=40):
    """Greedy shrinking by subterm replacement: try the term's subterms, and
    the term with one subtree replaced by one of that subtree's subterms.
    ``still_fails`` must return True only when the candidate both satisfies
    the property's preconditions and still violates it."""
    cur = term
    for _ in range(max_rounds):
        candidates = {}
        poss = positions(cur)
        for p in poss[1:]:
            c = subterm_at(cur, p)
            candidates.setdefault(canonical(c), c)
        for p in poss:
            sub = subterm_at(cur, p)
            for q in positions(sub)[1:]:
                c = replace_at(cur, p, subterm_at(sub, q))
                candidates.setdefault(canonical(c), c)
        smaller = sorted((c for c in candidates.values()
                          if term_size(c) < term_size(cur)), key=term_size)
        for c in smaller:
            try:
                if still_fails(c):
                    cur = c
                    break
            except Exception:
                continue
        else:
            return cur
    return cur
