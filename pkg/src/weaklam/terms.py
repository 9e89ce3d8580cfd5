"""Syntax trees for the weak lambda calculus and its labeled and marked variants.

Terms are immutable. Equality and hashing are alpha-equivalence: bound
variables rename freely, and in labeled terms so do labels bound by an
application (an application's label binds all its free occurrences inside
the function part; abstraction labels are free occurrences). The
distinguished label ``*`` is never bound.

Every public operation that builds a term re-establishes the convention
that binder names are pairwise distinct and distinct from the free names
(``freshen``). ``replace_at`` is the one deliberate exception: plugging a
term into a context may capture its free variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPositionError

Position = tuple  # tuple of ints drawn from {0, 1}; () is the root

STAR = "*"  # the distinguished label


@dataclass(frozen=True, eq=False)
class Term:
    """Base class for all term nodes, plain, labeled or marked."""

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return canonical(self) == canonical(other)

    def __hash__(self):
        return hash(canonical(self))

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True, eq=False)
class Var(Term):
    name: str


@dataclass(frozen=True, eq=False)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True, eq=False)
class Abs(Term):
    var: str
    body: Term


@dataclass(frozen=True, eq=False)
class MarkedRedex(Term):
    """A star-marked redex ``(\\*x. body) arg``, a single indivisible node."""

    var: str
    body: Term
    arg: Term


@dataclass(frozen=True, eq=False)
class LAbs(Term):
    """Labeled abstraction ``\\x^a. body``; the label is a free occurrence."""

    label: str
    var: str
    body: Term


@dataclass(frozen=True, eq=False)
class LApp(Term):
    """Labeled application ``fun @a arg``; the label binds inside ``fun``."""

    label: str
    fun: Term
    arg: Term


# ---------------------------------------------------------------------------
# canonical forms, free variables, free labels (cached per node)


def canonical(t):
    """Alpha-canonical form: a hashable tree with binder levels for bound
    variables and for application-bound labels."""
    c = t.__dict__.get("_canon")
    if c is None:
        c = _canon(t, {}, {}, 0, 0)
        object.__setattr__(t, "_canon", c)
    return c


def _canon(t, venv, lenv, vdepth, ldepth):
    if type(t) is Var:
        lvl = venv.get(t.name)
        return ("vb", lvl) if lvl is not None else ("vf", t.name)
    if type(t) is App:
        return ("ap", _canon(t.fun, venv, lenv, vdepth, ldepth),
                _canon(t.arg, venv, lenv, vdepth, ldepth))
    if type(t) is Abs:
        venv2 = dict(venv)
        venv2[t.var] = vdepth
        return ("ab", _canon(t.body, venv2, lenv, vdepth + 1, ldepth))
    if type(t) is MarkedRedex:
        venv2 = dict(venv)
        venv2[t.var] = vdepth
        return ("mk", _canon(t.body, venv2, lenv, vdepth + 1, ldepth),
                _canon(t.arg, venv, lenv, vdepth, ldepth))
    if type(t) is LAbs:
        lvl = lenv.get(t.label)
        lab = ("lb", lvl) if lvl is not None else ("lf", t.label)
        venv2 = dict(venv)
        venv2[t.var] = vdepth
        return ("lab", lab, _canon(t.body, venv2, lenv, vdepth + 1, ldepth))
    if type(t) is LApp:
        lenv2 = dict(lenv)
        lenv2[t.label] = ldepth
        return ("lap", _canon(t.fun, venv, lenv2, vdepth, ldepth + 1),
                _canon(t.arg, venv, lenv, vdepth, ldepth))
    raise TypeError(f"not a term: {t!r}")


def free_vars(t):
    """The set of free variable names of a term of any of the three grammars."""
    fv = t.__dict__.get("_fv")
    if fv is None:
        if type(t) is Var:
            fv = frozenset((t.name,))
        elif type(t) is App:
            fv = free_vars(t.fun) | free_vars(t.arg)
        elif type(t) is Abs:
            fv = free_vars(t.body) - {t.var}
        elif type(t) is MarkedRedex:
            fv = (free_vars(t.body) - {t.var}) | free_vars(t.arg)
        elif type(t) is LAbs:
            fv = free_vars(t.body) - {t.var}
        elif type(t) is LApp:
            fv = free_vars(t.fun) | free_vars(t.arg)
        else:
            raise TypeError(f"not a term: {t!r}")
        object.__setattr__(t, "_fv", fv)
    return fv


def free_labels(t):
    """Free labels of a labeled term; an application removes its own label
    from its function side's contribution."""
    fl = t.__dict__.get("_fl")
    if fl is None:
        if type(t) is Var:
            fl = frozenset()
        elif type(t) is LAbs:
            fl = free_labels(t.body) | {t.label}
        elif type(t) is LApp:
            fl = (free_labels(t.fun) - {t.label}) | free_labels(t.arg)
        else:
            raise TypeError(f"not a labeled term: {t!r}")
        object.__setattr__(t, "_fl", fl)
    return fl


def term_size(t):
    """Number of nodes."""
    n = t.__dict__.get("_size")
    if n is None:
        if type(t) is Var:
            n = 1
        elif type(t) in (App, LApp):
            n = 1 + term_size(t.fun) + term_size(t.arg)
        elif type(t) in (Abs, LAbs):
            n = 1 + term_size(t.body)
        else:
            n = 1 + term_size(t.body) + term_size(t.arg)
        object.__setattr__(t, "_size", n)
    return n


# ---------------------------------------------------------------------------
# barriers


@dataclass(frozen=True, eq=False)
class Barrier:
    """An ordered sequence of variables blocking reduction; all semantic
    tests are on the underlying set."""

    vars: tuple = ()

    @staticmethod
    def of(names):
        if isinstance(names, Barrier):
            return names
        return Barrier(tuple(names))

    @property
    def as_set(self):
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.vars)
            object.__setattr__(self, "_set", s)
        return s

    def extend(self, *names):
        """Concatenation ``S (+) T``, preserving order."""
        return Barrier(self.vars + tuple(names))

    def prepend(self, name):
        return Barrier((name,) + self.vars)

    def subset_of(self, other):
        return self.as_set <= Barrier.of(other).as_set

    def __contains__(self, name):
        return name in self.as_set

    def __iter__(self):
        return iter(self.vars)

    def __len__(self):
        return len(self.vars)

    def __eq__(self, other):
        if isinstance(other, Barrier):
            return self.as_set == other.as_set
        return NotImplemented

    def __hash__(self):
        return hash(self.as_set)

    def __str__(self):
        return "<" + ", ".join(self.vars) + ">"


EMPTY_BARRIER = Barrier()


def away_from(t, barrier):
    """True iff the term's free variables avoid the barrier's underlying set."""
    return not (free_vars(t) & Barrier.of(barrier).as_set)


# ---------------------------------------------------------------------------
# positions

# Each entry maps a node type to (fragment, child attr, binder attr or None).
_CHILD_SPECS = {
    App: (((0,), "fun", None), ((1,), "arg", None)),
    LApp: (((0,), "fun", None), ((1,), "arg", None)),
    Abs: (((1,), "body", "var"),),
    LAbs: (((1,), "body", "var"),),
    MarkedRedex: (((0, 1), "body", "var"), ((1,), "arg", None)),
}


def children(t):
    """Children of a node as (position fragment, child, bound variable)."""
    spec = _CHILD_SPECS.get(type(t))
    if spec is None:
        return ()
    return tuple((frag, getattr(t, attr),
                  getattr(t, var_attr) if var_attr else None)
                 for frag, attr, var_attr in spec)


def positions(t):
    """All positions of a term, root included."""
    out = [()]
    for frag, child, _ in children(t):
        out.extend(frag + p for p in positions(child))
    return out


def subterm_at(t, p):
    """The subterm at position ``p``; raises InvalidPositionError otherwise."""
    p = tuple(p)
    i = 0
    while i < len(p):
        for frag, child, _ in children(t):
            if p[i:i + len(frag)] == frag:
                t = child
                i += len(frag)
                break
        else:
            raise InvalidPositionError(f"no subterm at {list(p)} in {t}")
    return t


def binding_path(t, p):
    """The variables bound above position ``p``, outermost first."""
    p = tuple(p)
    i = 0
    path = []
    while i < len(p):
        for frag, child, var in children(t):
            if p[i:i + len(frag)] == frag:
                if var is not None:
                    path.append(var)
                t = child
                i += len(frag)
                break
        else:
            raise InvalidPositionError(f"no subterm at {list(p)} in {t}")
    return Barrier(tuple(path))


def replace_at(t, p, new):
    """Replace the subterm at ``p`` with ``new``.

    Free variables of ``new`` that fall under binders of the surrounding
    context become bound; no renaming happens here.
    """
    p = tuple(p)
    if not p:
        return new

    def go(t, i):
        if i == len(p):
            return new
        for frag, child, _ in children(t):
            if p[i:i + len(frag)] == frag:
                rebuilt = go(child, i + len(frag))
                return _with_child(t, frag, rebuilt)
        raise InvalidPositionError(f"no subterm at {list(p)} in {t}")

    return go(t, 0)


def _with_child(t, frag, child):
    ty = type(t)
    if ty is App:
        return App(child, t.arg) if frag == (0,) else App(t.fun, child)
    if ty is LApp:
        if frag == (0,):
            return LApp(t.label, child, t.arg)
        return LApp(t.label, t.fun, child)
    if ty is Abs:
        return Abs(t.var, child)
    if ty is LAbs:
        return LAbs(t.label, t.var, child)
    if ty is MarkedRedex:
        if frag == (0, 1):
            return MarkedRedex(t.var, child, t.arg)
        return MarkedRedex(t.var, t.body, child)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# fresh names and the Barendregt convention


def fresh_name(base, avoid):
    """Deterministically pick a name not in ``avoid``, derived from ``base``."""
    if base not in avoid:
        return base
    i = 1
    while f"{base}{i}" in avoid:
        i += 1
    return f"{base}{i}"


def freshen(t, avoid=()):
    """Rename binders apart from each other, from all free variables, and
    from ``avoid``; the result is alpha-equal to the input."""
    used = set(free_vars(t)) | set(avoid)

    def go(t, env):
        ty = type(t)
        if ty is Var:
            return Var(env.get(t.name, t.name))
        if ty is App:
            return App(go(t.fun, env), go(t.arg, env))
        if ty is LApp:
            return LApp(t.label, go(t.fun, env), go(t.arg, env))
        if ty in (Abs, LAbs, MarkedRedex):
            new = fresh_name(t.var, used)
            used.add(new)
            env2 = dict(env)
            env2[t.var] = new
            if ty is Abs:
                return Abs(new, go(t.body, env2))
            if ty is LAbs:
                return LAbs(t.label, new, go(t.body, env2))
            return MarkedRedex(new, go(t.body, env2), go(t.arg, env))
        raise TypeError(f"not a term: {t!r}")

    return go(t, {})


# ---------------------------------------------------------------------------
# substitution


def subst(t, x, n):
    """Capture-avoiding substitution of ``n`` for the free occurrences of
    ``x``; the result is re-freshened."""
    if x not in free_vars(t):
        return t
    return freshen(_subst(t, x, n))


def _subst(t, x, n):
    if x not in free_vars(t):
        return t
    ty = type(t)
    if ty is Var:
        return n
    if ty is App:
        return App(_subst(t.fun, x, n), _subst(t.arg, x, n))
    if ty is LApp:
        fun = t.fun
        label = t.label
        if x in free_vars(fun) and label != STAR and label in free_labels(n):
            # substituting under this binder would capture a free label of n
            label = fresh_name(label, free_labels(n) | labels_in(t))
            fun = rename_free_label(fun, t.label, label)
        return LApp(label, _subst(fun, x, n), _subst(t.arg, x, n))
    if ty in (Abs, LAbs, MarkedRedex):
        var, body = t.var, t.body
        if var in free_vars(n):
            new = fresh_name(var, free_vars(n) | free_vars(body) | {x})
            body = _subst(body, var, Var(new))
            var = new
        if ty is Abs:
            return Abs(var, _subst(body, x, n))
        if ty is LAbs:
            return LAbs(t.label, var, _subst(body, x, n))
        return MarkedRedex(var, _subst(body, x, n), _subst(t.arg, x, n))
    raise TypeError(f"not a term: {t!r}")


def labels_in(t):
    """Every label occurring anywhere in a labeled term, bound or free."""
    if type(t) is Var:
        return frozenset()
    if type(t) is LAbs:
        return labels_in(t.body) | {t.label}
    return labels_in(t.fun) | labels_in(t.arg) | {t.label}


def rename_free_label(t, old, new):
    """Rename the free occurrences of label ``old`` to ``new`` (used when an
    application binder must move out of the way of a substitution)."""
    if type(t) is Var:
        return t
    if type(t) is LAbs:
        label = new if t.label == old else t.label
        return LAbs(label, t.var, rename_free_label(t.body, old, new))
    fun = t.fun if t.label == old else rename_free_label(t.fun, old, new)
    return LApp(t.label, fun, rename_free_label(t.arg, old, new))


def label_subst_star(t, a):
    """Replace every free occurrence of label ``a`` with the star label;
    occurrences bound by an application are untouched."""
    if a == STAR:
        raise ValueError("the star label has no free occurrences to replace")
    if type(t) is Var:
        return t
    if type(t) is LAbs:
        label = STAR if t.label == a else t.label
        return LAbs(label, t.var, label_subst_star(t.body, a))
    if type(t) is LApp:
        fun = t.fun if t.label == a else label_subst_star(t.fun, a)
        return LApp(t.label, fun, label_subst_star(t.arg, a))
    raise TypeError(f"not a labeled term: {t!r}")


# ---------------------------------------------------------------------------
# printing (minimal parentheses; applications are left-associative)


def to_text(t):
    ty = type(t)
    if ty is Var:
        return t.name
    if ty is Abs:
        return f"\\{t.var}. {to_text(t.body)}"
    if ty is LAbs:
        return f"\\{t.var}^{t.label}. {to_text(t.body)}"
    if ty is App:
        return f"{_fun_text(t.fun)} {_arg_text(t.arg)}"
    if ty is LApp:
        return f"{_fun_text(t.fun)} @{t.label} {_arg_text(t.arg)}"
    if ty is MarkedRedex:
        return f"(\\*{t.var}. {to_text(t.body)}) {_arg_text(t.arg)}"
    raise TypeError(f"not a term: {t!r}")


def _fun_text(t):
    if type(t) in (Abs, LAbs):
        return f"({to_text(t)})"
    return to_text(t)


def _arg_text(t):
    if type(t) is Var:
        return to_text(t)
    return f"({to_text(t)})"
