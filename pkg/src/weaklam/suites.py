"""Randomized executable property suites.

Each suite draws seeded cases from the generator, checks one property of
the calculus, and reports failures with shrunk counterexamples. Reports
are deterministic for a fixed configuration (wall time aside).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import SizeCapError, UnknownSuiteError, WeaklamError
from .generate import (GenConfig, case_rng, gen_barrier, gen_k,
                       gen_labeled_term, gen_term_once, random_labeled_trace,
                       random_weak_trace, shrink_term)
from .labeled import (check_chain, erase_labels, is_labeled_redex,
                      label_initial, labeled_contract, labeled_normalize,
                      labeled_redexes, plain_chain)
from .marked import (detect_creations, erase_stars, is_initially_marked,
                     mark_initial, marked_redexes, match_creation_cases,
                     weak_redex_positions)
from .parsing import parse, print_term
from .reduction import NORMAL, ReductionStep, ReductionTrace, weak_contract, weak_redexes
from .supersteps import (SuperstepEngine, chain_from_superstep,
                         complete_superstep, diamond_join, full_superdev,
                         lift_derivation)
from .terms import (Abs, App, Barrier, LAbs, LApp, Var, away_from,
                    binding_path, free_labels, free_vars, label_subst_star,
                    positions, replace_at, subst, subterm_at, term_size)


@dataclass
class SuiteFailure:
    case: int
    clause: str
    inputs: dict
    shrunk: str = None

    def to_json(self):
        return {"case": self.case, "clause": self.clause,
                "inputs": self.inputs, "shrunk": self.shrunk}


@dataclass
class SuiteReport:
    suite: str
    description: str
    cases: int
    failures: list
    wall_time: float

    @property
    def ok(self):
        return not self.failures

    def to_json(self, include_wall_time=True):
        out = {"suite": self.suite, "description": self.description,
               "cases": self.cases,
               "failures": [f.to_json() for f in self.failures]}
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out

    def line(self):
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        return f"{status:>4} {self.suite} ({self.cases} cases, {self.wall_time:.2f}s)"


def _fail(clause, shrinkable=None, **inputs):
    return clause, {k: str(v) for k, v in inputs.items()}, shrinkable


def run_suite(name, cfg=None):
    """Run a registered suite; failures are shrunk by recursive subterm
    replacement before reporting."""
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; see suite_names()")
    cfg = cfg or GenConfig()
    description, fn = SUITES[name]
    failures = []
    start = time.perf_counter()
    for i in range(cfg.count):
        result = fn(case_rng(cfg, i), cfg)
        if result is None:
            continue
        clause, inputs, shrinkable = result
        shrunk = None
        if shrinkable is not None:
            term, retest = shrinkable
            shrunk = print_term(shrink_term(term, retest))
        failures.append(SuiteFailure(i, clause, inputs, shrunk))
    wall = time.perf_counter() - start
    return SuiteReport(name, description, cfg.count, failures, wall)


def suite_names():
    return sorted(SUITES)


def run_all(cfg=None, names=None):
    return [run_suite(n, cfg) for n in (names or suite_names())]


# ---------------------------------------------------------------------------
# term-core properties


def _suite_replace_roundtrip(rng, cfg):
    m = gen_term_once(rng, cfg)

    def violated(t):
        return any(replace_at(t, p, subterm_at(t, p)) != t for p in positions(t))

    for p in positions(m):
        if replace_at(m, p, subterm_at(m, p)) != m:
            return _fail("replace_at(M, p, subterm_at(M, p)) != M",
                         (m, violated), term=m, position=list(p))
    return None


def _suite_subst_fresh(rng, cfg):
    m = gen_term_once(rng, cfg)
    n = gen_term_once(rng, cfg)
    x = "fresh0"
    if subst(m, x, n) != m:
        return _fail("subst(M, x, N) != M for x not free in M",
                     (m, lambda t: subst(t, x, n) != t), term=m, repl=n)
    return None


def _suite_subst_free_vars(rng, cfg):
    m = gen_term_once(rng, cfg)
    n = gen_term_once(rng, cfg)
    fvm = sorted(free_vars(m))
    x = rng.choice(fvm) if fvm and rng.random() < 0.8 else "fresh0"
    r = subst(m, x, n)
    upper = (free_vars(m) - {x}) | free_vars(n)
    if not free_vars(r) <= upper:
        return _fail("fv(M[x:=N]) exceeds (fv(M)-x) | fv(N)", None,
                     term=m, var=x, repl=n, result=r)
    if x in free_vars(m) and free_vars(r) != upper:
        return _fail("fv(M[x:=N]) != (fv(M)-x) | fv(N) with x free", None,
                     term=m, var=x, repl=n, result=r)
    return None


def _suite_parse_print(rng, cfg):
    m = gen_term_once(rng, cfg)
    if parse(print_term(m)) != m:
        return _fail("parse(print(M)) != M", None, term=m)
    a = label_initial(m)
    if parse(print_term(a), "labeled") != a:
        return _fail("labeled round-trip failed", None, term=a)
    s = mark_initial(m)
    if parse(print_term(s), "marked") != s:
        return _fail("marked round-trip failed", None, term=s)
    return None


# ---------------------------------------------------------------------------
# weak reduction properties


def _suite_weak_fv_shrink(rng, cfg):
    m = gen_term_once(rng, cfg)
    barrier = gen_barrier(rng, cfg, m)
    for p in sorted(weak_redexes(m, barrier)):
        r = weak_contract(m, p, barrier)
        if not free_vars(r) <= free_vars(m):
            return _fail("contraction created free variables", None,
                         term=m, position=list(p), result=r)
    return None


def _suite_weak_fv_barrier(rng, cfg):
    m = gen_term_once(rng, cfg)
    barrier = gen_barrier(rng, cfg, m)
    terms, _ = random_weak_trace(rng, m, barrier, 3)
    bset = barrier.as_set
    for a, b in zip(terms, terms[1:]):
        if free_vars(a) & bset != free_vars(b) & bset:
            return _fail("fv(A) & S != fv(B) & S along weak reduction", None,
                         before=a, after=b, barrier=barrier)
    return None


def _suite_weak_barrier_monotone(rng, cfg):
    m = gen_term_once(rng, cfg)
    s = gen_barrier(rng, cfg, m)
    t = Barrier(tuple(v for v in s.vars if rng.random() < 0.5))
    if not weak_redexes(m, s) <= weak_redexes(m, t):
        return _fail("T <= S but weak_redexes(M, S) not in weak_redexes(M, T)",
                     None, term=m, S=s, T=t)
    return None


# ---------------------------------------------------------------------------
# marked calculus properties


def _suite_mark_roundtrip(rng, cfg):
    m = gen_term_once(rng, cfg)
    a = mark_initial(m)
    if erase_stars(a) != m:
        return _fail("erase_stars(mark_initial(M)) != M", None, term=m)
    if not is_initially_marked(a):
        return _fail("mark_initial(M) is not initially marked", None, term=m)
    return None


def _suite_creation_taxonomy(rng, cfg):
    m = gen_term_once(rng, cfg)
    a = mark_initial(m)

    def violated(t):
        try:
            s = mark_initial(t)
            for p in sorted(marked_redexes(s)):
                detect_creations(s, p)
            return False
        except WeaklamError:
            return True

    for p in sorted(marked_redexes(a)):
        try:
            detect_creations(a, p)
        except WeaklamError as e:
            return _fail(f"taxonomy not total/unambiguous: {e}", (m, violated),
                         term=m, marked=a, position=list(p))
    return None


def _suite_creation_iv_condition(rng, cfg):
    # On initially marked terms the variable condition of case IV holds of
    # every detected creation (strict and stripped matchers agree); on the
    # fixed non-initially-marked shape below only the stripped matcher fires,
    # which is exactly the pre-existing redex the condition screens out.
    m = gen_term_once(rng, cfg)
    a = mark_initial(m)
    for p in sorted(marked_redexes(a)):
        for c in detect_creations(a, p):
            strict = match_creation_cases(a, p, c.created_position, True)
            loose = match_creation_cases(a, p, c.created_position, False)
            if strict != loose:
                return _fail("matchers disagree on an initially marked term",
                             None, term=a, contracted=list(p),
                             created=list(c.created_position))
    canary = parse(r"(\*x. (\y. u) v) q", "marked")
    if match_creation_cases(canary, (), (), True) != set() \
            or match_creation_cases(canary, (), (), False) != {"IV"}:
        return _fail("the variable condition of case IV is not screening "
                     "pre-existing redexes", None, term=canary)
    return None


# ---------------------------------------------------------------------------
# labeled calculus properties


def _suite_labeled_barrier_monotone(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    t = Barrier(tuple(v for v in s.vars if rng.random() < 0.5))
    big, small = labeled_redexes(a, s), labeled_redexes(a, t)
    if not big <= small:
        return _fail("labeled redexes not monotone in the barrier", None,
                     term=a, S=s, T=t)
    for p in sorted(big):
        if labeled_contract(a, p, s) != labeled_contract(a, p, t):
            return _fail("contraction differs across comparable barriers",
                         None, term=a, position=list(p))
    return None


def _suite_labeled_weakening(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    redexes = sorted(labeled_redexes(a, s))
    if not redexes:
        return None
    p = rng.choice(redexes)
    extended = s.extend("fresh0")  # never free in generated terms
    if p not in labeled_redexes(a, extended):
        return _fail("A ->S B with x not free in A but not A ->(S+x) B", None,
                     term=a, position=list(p), barrier=s)
    if labeled_contract(a, p, s) != labeled_contract(a, p, extended):
        return _fail("weakened step gives a different contractum", None,
                     term=a, position=list(p))
    return None


def _suite_labeled_context_equiv(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    sites = [p for p in positions(a) if is_labeled_redex(subterm_at(a, p))]
    if not sites:
        return None
    p = rng.choice(sites)
    cut = rng.randint(0, len(p))
    p1, p2 = p[:cut], p[cut:]
    inner = subterm_at(a, p1)
    s_inner = Barrier(s.vars + binding_path(a, p1).vars)
    outer_fires = p in labeled_redexes(a, s)
    inner_fires = p2 in labeled_redexes(inner, s_inner)
    if outer_fires != inner_fires:
        return _fail("contraction in context disagrees with contraction "
                     "under the extended barrier", None, term=a,
                     position=list(p), cut=cut, S=s)
    if outer_fires:
        glued = replace_at(a, p1, labeled_contract(inner, p2, s_inner))
        if glued != labeled_contract(a, p, s):
            return _fail("context-equivalent contractions differ", None,
                         term=a, position=list(p), cut=cut)
    return None


def _suite_star_subst_commutes(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    b = gen_labeled_term(rng, cfg)
    labels = sorted(free_labels(a) | {"d1"})
    lab = rng.choice(labels)
    if lab in free_labels(b):
        return None
    fva = sorted(free_vars(a))
    x = rng.choice(fva) if fva and rng.random() < 0.8 else "fresh0"
    lhs = subst(label_subst_star(a, lab), x, b)
    rhs = label_subst_star(subst(a, x, b), lab)
    if lhs != rhs:
        return _fail("A[a:=*][x:=B] != A[x:=B][a:=*] with a not free in B",
                     None, term=a, repl=b, label=lab, var=x)
    return None


def _suite_subst_preserves_reduction(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    b = gen_labeled_term(rng, cfg)
    if not away_from(b, s):
        return None
    fva = sorted(free_vars(a))
    x = rng.choice(fva) if fva else "fresh0"
    terms, poss = random_labeled_trace(rng, a, s, 3)
    for before, after, p in zip(terms, terms[1:], poss):
        mb = subst(before, x, b)
        if p not in labeled_redexes(mb, s):
            return _fail("substitution destroyed a reduction step", None,
                         term=before, repl=b, var=x, position=list(p), S=s)
        if labeled_contract(mb, p, s) != subst(after, x, b):
            return _fail("substituted step has the wrong contractum", None,
                         term=before, repl=b, var=x, position=list(p), S=s)
    return None


def _suite_labeled_fv_barrier(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    terms, _ = random_labeled_trace(rng, a, s, 3)
    bset = s.as_set
    for x, y in zip(terms, terms[1:]):
        if free_vars(x) & bset != free_vars(y) & bset:
            return _fail("fv & S not preserved by labeled reduction", None,
                         before=x, after=y, barrier=s)
    return None


def _suite_labeled_termination(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    try:
        nf, _ = labeled_normalize(a, s, max_steps=10000)
    except RuntimeError:
        return _fail("labeled normalization exceeded the step ceiling",
                     (erase_labels(a),
                      lambda t: not _normalize_ok(label_initial(t), s)),
                     term=a, barrier=s)
    if labeled_redexes(nf, s):
        return _fail("normal form still has redexes", None, term=a, result=nf)
    return None


def _normalize_ok(a, s):
    try:
        labeled_normalize(a, s, max_steps=10000)
        return True
    except RuntimeError:
        return False


def _suite_chain_zero(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    terms, poss = random_labeled_trace(rng, a, s, 3)
    steps = tuple(ReductionStep(x, p, y, s)
                  for x, y, p in zip(terms, terms[1:], poss))
    w = plain_chain(ReductionTrace(steps, a, s, NORMAL))
    if not check_chain(a, terms[-1], s, 0, w):
        return _fail("a plain trace is not a valid index-0 chain", None,
                     term=a, barrier=s)
    if check_chain(a, terms[-1], s, 1, w):
        return _fail("an index-0 witness was accepted at index 1", None,
                     term=a, barrier=s)
    wrong = LAbs("d1", "fresh0", terms[-1])
    if check_chain(a, wrong, s, 0, w):
        return _fail("chain checker accepted the wrong endpoint", None,
                     term=a, barrier=s)
    return None


def _suite_well_labeled_remark(rng, cfg):
    # a duplicating step copies an argument whose labels then coexist; the
    # application binding keeps the two copies independent (the scheme's own
    # labels are chosen apart from the generated ones, so no renaming fires)
    inner_cfg = GenConfig(max_size=5, max_free_vars=cfg.max_free_vars,
                          seed=cfg.seed, count=1)
    z = label_initial(gen_term_once(rng, inner_cfg))
    argument = LApp("s1", LAbs("s1", "y0", Var("y0")), z)
    term = LApp("s3", LAbs("s3", "x0", LApp("s2", Var("x0"), Var("x0"))),
                argument)
    reduct = labeled_contract(term, (), ())
    if reduct != LApp("s2", argument, argument):
        return _fail("duplicating step did not produce two argument copies",
                     None, term=term, result=reduct)
    left = labeled_contract(reduct, (0,), ())
    right = labeled_contract(reduct, (1,), ())
    if subterm_at(left, (1,)) != argument or subterm_at(right, (0,)) != argument:
        return _fail("contracting one copy disturbed the other", None,
                     term=reduct)
    if subterm_at(left, (0,)) != z or subterm_at(right, (1,)) != z:
        return _fail("contracting a copy did not consume its own binder",
                     None, term=reduct, left=left, right=right)
    return None


# ---------------------------------------------------------------------------
# superstep properties


def _leading_labeled_abs(t):
    n = 0
    while type(t) is LAbs:
        n += 1
        t = t.body
    return n


def _suite_superstep_shape(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    try:
        members = SuperstepEngine().enumerate(a, s, k)
    except SizeCapError:
        return _fail("enumeration exceeded the cap", None, term=a, k=k)
    for b in members:
        if _leading_labeled_abs(b) < k:
            return _fail("a superstep target at index k lacks k leading "
                         "abstractions", None, term=a, target=b, k=k)
    return None


def _suite_superstep_fv_shrink(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    for b in SuperstepEngine().enumerate(a, s, k):
        if not free_vars(b) <= free_vars(a):
            return _fail("superstep created free variables", None,
                         term=a, target=b, k=k)
    return None


def _suite_superstep_projection(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    m = erase_labels(a)
    s = gen_barrier(rng, cfg, m)
    k = gen_k(rng, cfg)
    eng = SuperstepEngine()
    labeled_targets = eng.enumerate(a, s, k)
    plain_targets = set(eng.enumerate(m, s, k))
    for b in labeled_targets:
        if erase_labels(b) not in plain_targets:
            return _fail("erasure of a labeled superstep is not a plain one",
                         None, term=a, target=b, k=k)
    return None


def _suite_superstep_lifting(rng, cfg):
    m = gen_term_once(rng, cfg)
    s = gen_barrier(rng, cfg, m)
    k = gen_k(rng, cfg)
    eng = SuperstepEngine()
    members = list(eng.enumerate(m, s, k))
    rng.shuffle(members)
    for n in members[:5]:
        d = eng.derive(m, n, s, k)
        if d is None:
            return _fail("enumerated superstep target is not derivable", None,
                         term=m, target=n, k=k)
        lifted = lift_derivation(d)
        if erase_labels(lifted.source) != m or erase_labels(lifted.target) != n:
            return _fail("lifting does not erase back to the plain step",
                         None, term=m, target=n, k=k)
        if eng.derive(lifted.source, lifted.target, s, k) is None:
            return _fail("lifted endpoints are not superstep-related", None,
                         term=lifted.source, target=lifted.target, k=k)
    return None


def _suite_sandwich(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    eng = SuperstepEngine()
    members = set(eng.enumerate(a, s, 0))
    for p in sorted(labeled_redexes(a, s)):
        if labeled_contract(a, p, s) not in members:
            return _fail("a single labeled step is missing from the "
                         "superstep set", None, term=a, position=list(p))
    for b in members:
        d = eng.derive(a, b, s, 0)
        if d is None:
            return _fail("superstep target not derivable", None, term=a,
                         target=b)
        w = chain_from_superstep(d)
        if len(w.segments) != 1 or not check_chain(a, b, s, 0, w):
            return _fail("superstep target not reachable by a plain trace",
                         None, term=a, target=b)
    return None


def _suite_head_implies_chain(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    eng = SuperstepEngine()
    members = list(eng.enumerate(a, s, k))
    rng.shuffle(members)
    for b in members[:4]:
        d = eng.derive(a, b, s, k)
        if d is None:
            return _fail("superstep target not derivable", None, term=a,
                         target=b, k=k)
        w = chain_from_superstep(d)
        if not check_chain(a, b, s, k, w):
            return _fail("extracted chain witness rejected", None, term=a,
                         target=b, k=k)
    return None


def _suite_superstep_reflexive(rng, cfg):
    m = gen_term_once(rng, cfg)
    s = gen_barrier(rng, cfg, m)
    d = SuperstepEngine().derive(m, m, s, 0)
    if d is None:
        return _fail("the superstep relation is not reflexive at k = 0",
                     (m, lambda t: SuperstepEngine().derive(t, t, s, 0) is None),
                     term=m)
    stack = [d]
    while stack:
        node = stack.pop()
        if node.rule not in ("Var", "Abs1", "App1"):
            return _fail("reflexive derivation uses a contracting rule", None,
                         term=m, rule=node.rule)
        stack.extend(node.premises)
    return None


def _suite_full_superdev_correct(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    r = full_superdev(a, s, k)
    if k == 0 and r is None:
        return _fail("full superdevelopment undefined at index 0", None,
                     term=a)
    if r is None:
        return None
    eng = SuperstepEngine()
    d = eng.derive(a, r, s, k)
    if d is None:
        return _fail("A does not superstep to its full superdevelopment",
                     None, term=a, result=r, k=k)
    if k == 0:
        w = chain_from_superstep(d)
        if not check_chain(a, r, s, 0, w):
            return _fail("no plain trace reaches the full superdevelopment",
                         None, term=a, result=r)
    return None


def _suite_full_superdev_unique(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    try:
        r = full_superdev(a, s, k)  # asserts agreement of all defined splits
    except WeaklamError as e:
        return _fail(f"uniqueness violated: {e}", None, term=a, k=k)
    if type(a) is Var and k > 0 and r is not None:
        return _fail("a variable has a positive-index superdevelopment",
                     None, term=a, k=k)
    return None


def _leading_then_var(t, n, x):
    seen = set()
    for _ in range(n):
        if type(t) is not LAbs:
            return False
        seen.add(t.var)
        t = t.body
    return type(t) is Var and t.name == x and x not in seen


def _suite_full_superdev_subst(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    b = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    k = gen_k(rng, cfg)
    fva = sorted(free_vars(a))
    x = rng.choice(fva) if fva else "fresh0"
    if x in s or x in free_vars(b) or not away_from(b, s):
        return None
    lhs = full_superdev(subst(a, x, b), s, k)
    witnesses = []
    for m in range(k + 1):
        n = k - m
        fa = full_superdev(a, s, n)
        fb = full_superdev(b, s, m)
        if fa is None or fb is None:
            continue
        if m > 0 and not _leading_then_var(fa, n, x):
            continue
        witnesses.append(subst(fa, x, fb))
    if (lhs is None) == bool(witnesses):
        return _fail("substitution law: existence mismatch", None,
                     term=a, repl=b, var=x, k=k, S=s)
    for w in witnesses:
        if w != lhs:
            return _fail("substitution law: value mismatch", None,
                         term=a, repl=b, var=x, k=k, S=s,
                         expected=lhs, got=w)
    return None


def _suite_full_superdev_invariance(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s2 = gen_barrier(rng, cfg, erase_labels(a))
    s1 = s2.extend(*(["m3"] if rng.random() < 0.5 else []))
    k1 = rng.randint(0, cfg.max_k)
    k2 = rng.randint(k1, cfg.max_k)
    try:
        members = list(SuperstepEngine().enumerate(a, s1, k1))
    except SizeCapError:
        return None
    if not members:
        return None
    b = rng.choice(sorted(members, key=print_term))
    ea = full_superdev(a, s2, k2)
    eb = full_superdev(b, s2, k2)
    if (ea is None) != (eb is None):
        return _fail("invariance: existence differs across a superstep", None,
                     term=a, target=b, k1=k1, k2=k2, S1=s1, S2=s2)
    if ea is not None and ea != eb:
        return _fail("invariance: full superdevelopments differ", None,
                     term=a, target=b, k1=k1, k2=k2, got=eb, expected=ea)
    return None


def _suite_cofinality(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    terms, _ = random_labeled_trace(rng, a, s, 3)
    b = terms[-1]
    ja = full_superdev(a, s, 0)
    jb = full_superdev(b, s, 0)
    if ja != jb:
        return _fail("reduct's full superdevelopment differs from the "
                     "source's", None, term=a, reduct=b, S=s)
    eng = SuperstepEngine()
    d = eng.derive(b, jb, s, 0)
    if d is None or not check_chain(b, ja, s, 0, chain_from_superstep(d)):
        return _fail("no trace from the reduct to the source's full "
                     "superdevelopment", None, term=a, reduct=b, S=s)
    return None


def _suite_equivalence_thm_1(rng, cfg):
    m = gen_term_once(rng, cfg)
    s = gen_barrier(rng, cfg, m)
    eng = SuperstepEngine()
    try:
        targets = eng.enumerate(m, s, 0)
    except SizeCapError as e:
        return _fail(f"enumeration exceeded the cap: {e}", None, term=m)
    for n in targets:
        d = eng.derive(m, n, s, 0)
        if d is None:
            return _fail("superstep target not derivable", None, term=m,
                         target=n)
        lifted = lift_derivation(d)
        w = chain_from_superstep(lifted)
        if len(w.segments) != 1:
            return _fail("index-0 chain has peels", None, term=m, target=n)
        if not check_chain(lifted.source, lifted.target, s, 0, w):
            return _fail("labeled trace witness rejected", None, term=m,
                         target=n)
        if erase_labels(lifted.source) != m or erase_labels(lifted.target) != n:
            return _fail("labeling does not erase to the endpoints", None,
                         term=m, target=n)
    return None


def _suite_equivalence_thm_2(rng, cfg):
    m = gen_term_once(rng, cfg)
    s = gen_barrier(rng, cfg, m)
    nf, _ = labeled_normalize(label_initial(m), s)
    n = erase_labels(nf)

    def violated(t):
        nf2, _ = labeled_normalize(label_initial(t), s)
        return SuperstepEngine().derive(t, erase_labels(nf2), s, 0) is None

    if SuperstepEngine().derive(m, n, s, 0) is None:
        return _fail("normal form of an initial labeling is not a superstep "
                     "target", (m, violated), term=m, normal_form=n, S=s)
    return None


def _suite_diamond(rng, cfg):
    a = gen_labeled_term(rng, cfg)
    s = gen_barrier(rng, cfg, erase_labels(a))
    try:
        members = sorted(SuperstepEngine().enumerate(a, s, 0), key=print_term)
    except SizeCapError:
        return None
    b1 = rng.choice(members)
    b2 = rng.choice(members)
    try:
        diamond_join(a, b1, b2, s)
    except WeaklamError as e:
        return _fail(f"diamond join failed: {e}", None, term=a, left=b1,
                     right=b2, S=s)
    return None


def _suite_plain_confluence(rng, cfg):
    m = gen_term_once(rng, cfg)
    terms1, _ = random_weak_trace(rng, m, (), rng.randint(0, 4))
    terms2, _ = random_weak_trace(rng, m, (), rng.randint(0, 4))
    seq1 = _complete_iterates(terms1[-1], 4)
    seq2 = _complete_iterates(terms2[-1], 4)
    if not (set(seq1) & set(seq2)):
        return _fail("peak not joined within 4 rounds of complete "
                     "supersteps", None, term=m, left=terms1[-1],
                     right=terms2[-1])
    return None


def _complete_iterates(m, rounds):
    out = [m]
    for _ in range(rounds):
        m = complete_superstep(m, ())
        out.append(m)
    return out


SUITES = {
    "replace-subterm-roundtrip":
        ("replacing a subterm by itself is the identity",
         _suite_replace_roundtrip),
    "subst-fresh-noop":
        ("substituting for a variable not free leaves the term unchanged",
         _suite_subst_fresh),
    "subst-free-vars":
        ("free variables of a substitution instance", _suite_subst_free_vars),
    "parse-print-roundtrip":
        ("parse after print is the identity up to alpha", _suite_parse_print),
    "weak-fv-shrink":
        ("weak contraction does not create free variables",
         _suite_weak_fv_shrink),
    "weak-fv-barrier-preserved":
        ("weak reduction preserves the free variables meeting the barrier",
         _suite_weak_fv_barrier),
    "weak-barrier-monotone":
        ("smaller barriers admit more weak redexes",
         _suite_weak_barrier_monotone),
    "mark-erase-roundtrip":
        ("initial marking stars exactly the weak redexes and erases back",
         _suite_mark_roundtrip),
    "creation-taxonomy-total":
        ("every created redex falls in exactly one of cases I-IV",
         _suite_creation_taxonomy),
    "creation-iv-condition":
        ("the variable condition of case IV screens pre-existing redexes",
         _suite_creation_iv_condition),
    "labeled-barrier-monotone":
        ("smaller barriers admit more labeled redexes",
         _suite_labeled_barrier_monotone),
    "labeled-weakening":
        ("a variable not free in the term may extend the barrier",
         _suite_labeled_weakening),
    "labeled-context-equivalence":
        ("contraction in context equals contraction under the extended "
         "barrier", _suite_labeled_context_equiv),
    "label-star-subst-commutes":
        ("starring a label commutes with substitution when the label is "
         "not free in the replacement", _suite_star_subst_commutes),
    "subst-preserves-reduction":
        ("substituting a barrier-avoiding term preserves every reduction "
         "step", _suite_subst_preserves_reduction),
    "labeled-fv-barrier-preserved":
        ("labeled reduction preserves the free variables meeting the "
         "barrier", _suite_labeled_fv_barrier),
    "labeled-normalize-terminates":
        ("labeled normalization terminates well under a generous ceiling",
         _suite_labeled_termination),
    "chain-zero-iff-trace":
        ("index-0 chains are exactly plain traces", _suite_chain_zero),
    "well-labeled-remark":
        ("duplicated argument copies keep independently bound labels",
         _suite_well_labeled_remark),
    "superstep-shape":
        ("an index-k superstep target has k leading abstractions",
         _suite_superstep_shape),
    "superstep-fv-shrink":
        ("supersteps do not create free variables", _suite_superstep_fv_shrink),
    "superstep-projection":
        ("erasing a labeled superstep gives a plain superstep",
         _suite_superstep_projection),
    "superstep-lifting":
        ("every plain superstep lifts to labeled terms",
         _suite_superstep_lifting),
    "sandwich":
        ("single steps are supersteps and supersteps are within many-step "
         "reduction", _suite_sandwich),
    "head-implies-chain":
        ("every labeled superstep derivation yields a valid chain witness",
         _suite_head_implies_chain),
    "superstep-reflexive-k0":
        ("the index-0 superstep relation is reflexive via non-contracting "
         "rules", _suite_superstep_reflexive),
    "full-superdev-correct":
        ("a term supersteps to its full superdevelopment, reachably at "
         "index 0", _suite_full_superdev_correct),
    "full-superdev-unique":
        ("all defined splits of a full superdevelopment agree",
         _suite_full_superdev_unique),
    "full-superdev-subst":
        ("the substitution law for full superdevelopments",
         _suite_full_superdev_subst),
    "full-superdev-invariance":
        ("full superdevelopments are invariant across supersteps at weaker "
         "indices", _suite_full_superdev_invariance),
    "cofinality":
        ("every reduct reaches the source's full superdevelopment",
         _suite_cofinality),
    "equivalence-thm-1":
        ("every superstep is witnessed by a labeled reduction trace",
         _suite_equivalence_thm_1),
    "equivalence-thm-2":
        ("the normal form of an initial labeling erases to a superstep "
         "target", _suite_equivalence_thm_2),
    "diamond":
        ("superstep peaks close at the full superdevelopment",
         _suite_diamond),
    "plain-confluence":
        ("weak reduction peaks join via iterated complete supersteps",
         _suite_plain_confluence),
}
