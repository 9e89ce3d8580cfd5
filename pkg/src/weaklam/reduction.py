"""Weak reduction: contraction of redexes whose free variables avoid the
binding path and the ambient barrier."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAWeakRedexError
from .terms import (Abs, App, Barrier, MarkedRedex, Term, Var, away_from,
                    binding_path, children, free_vars, freshen, positions,
                    replace_at, subst, subterm_at, to_text)

NORMAL = "normal"
FUEL_EXHAUSTED = "fuel-exhausted"


@dataclass(frozen=True)
class ReductionStep:
    before: Term
    redex_position: tuple
    after: Term
    barrier: Barrier


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple
    start: Term
    barrier: Barrier
    status: str = NORMAL

    @property
    def final(self):
        return self.steps[-1].after if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def to_json(self):
        barrier = list(self.barrier.vars)
        out = [{"term": to_text(s.before), "redex": list(s.redex_position),
                "barrier": barrier} for s in self.steps]
        out.append({"term": to_text(self.final), "status": self.status})
        return out


def weak_redexes(m, barrier=()):
    """Positions of the weak redexes of ``m`` under the barrier: applications
    of abstractions away from their binding path extended by the barrier."""
    barrier = Barrier.of(barrier)

    def scan(t, blocked):
        acc = []
        if type(t) is App and type(t.fun) is Abs and not (free_vars(t) & blocked):
            acc.append(())
        for frag, child, var in children(t):
            sub = blocked | {var} if var is not None else blocked
            acc.extend(frag + p for p in scan(child, sub))
        return acc

    return frozenset(scan(m, barrier.as_set))


def weak_contract(m, p, barrier=()):
    """Contract the weak redex at ``p``; raises NotAWeakRedexError when the
    position is not an application of an abstraction or the away condition
    fails."""
    p = tuple(p)
    barrier = Barrier.of(barrier)
    redex = subterm_at(m, p)
    if not (type(redex) is App and type(redex.fun) is Abs):
        raise NotAWeakRedexError(f"no redex at {list(p)} in {m}")
    blocked = free_vars(redex) & (binding_path(m, p).as_set | barrier.as_set)
    if blocked:
        raise NotAWeakRedexError(
            f"redex at {list(p)} mentions blocked variables {sorted(blocked)}")
    contractum = subst(redex.fun.body, redex.fun.var, redex.arg)
    return freshen(replace_at(m, p, contractum))


def weak_normalize(m, barrier=(), fuel=1000):
    """Contract the leftmost-outermost weak redex until none remains or the
    fuel runs out; the trace records every step."""
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    barrier = Barrier.of(barrier)
    steps = []
    cur = m
    for _ in range(fuel):
        redexes = weak_redexes(cur, barrier)
        if not redexes:
            return ReductionTrace(tuple(steps), m, barrier, NORMAL)
        p = min(redexes)
        nxt = weak_contract(cur, p, barrier)
        steps.append(ReductionStep(cur, p, nxt, barrier))
        cur = nxt
    if weak_redexes(cur, barrier):
        return ReductionTrace(tuple(steps), m, barrier, FUEL_EXHAUSTED)
    return ReductionTrace(tuple(steps), m, barrier, NORMAL)
