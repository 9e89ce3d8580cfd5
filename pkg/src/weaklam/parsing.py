"""Parsers for the plain, labeled and marked term grammars.

Concrete syntax::

    plain    term := lam | app      lam := '\\' IDENT '.' term
             app  := atom+          atom := IDENT | '(' term ')'
    labeled  lam  := '\\' IDENT '^' LABEL '.' term
             app  := atom ('@' LABEL atom)*
    marked   adds  (\\* IDENT '.' term) atom   for a marked redex

Applications associate to the left. IDENT and LABEL are alphanumeric words
starting with a letter; the star label is spelled ``*``.
"""

from __future__ import annotations

from .errors import ParseError
from .terms import (Abs, App, LAbs, LApp, MarkedRedex, STAR, Var, freshen,
                    to_text)

_SYMBOLS = "\\.()^@*"


class _Tokens:
    def __init__(self, text):
        self.toks = []
        line, col = 1, 1
        i = 0
        while i < len(text):
            c = text[i]
            if c == "\n":
                line += 1
                col = 1
                i += 1
            elif c in " \t\r":
                col += 1
                i += 1
            elif c in _SYMBOLS:
                self.toks.append((c, c, line, col))
                col += 1
                i += 1
            elif c.isalpha():
                j = i
                while j < len(text) and text[j].isalnum():
                    j += 1
                self.toks.append(("word", text[i:j], line, col))
                col += j - i
                i = j
            else:
                raise ParseError(f"unexpected character {c!r}", line, col)
        self.toks.append(("eof", "", line, col))
        self.pos = 0

    def peek(self, ahead=0):
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self):
        tok = self.toks[self.pos]
        if tok[0] != "eof":
            self.pos += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {what or kind}, found {tok[1] or 'end of input'!r}",
                             tok[2], tok[3])
        return tok

    def error(self, message):
        tok = self.peek()
        raise ParseError(message, tok[2], tok[3])


def parse(text, grammar="plain"):
    """Parse ``text`` per the requested grammar and freshen its binders."""
    if grammar not in ("plain", "labeled", "marked"):
        raise ValueError(f"unknown grammar {grammar!r}")
    toks = _Tokens(text)
    term = _term(toks, grammar)
    tok = toks.peek()
    if tok[0] != "eof":
        raise ParseError(f"unexpected {tok[1]!r} after term", tok[2], tok[3])
    return freshen(term)


def _term(toks, grammar):
    if toks.peek()[0] == "\\":
        return _lam(toks, grammar)
    return _app(toks, grammar)


def _lam(toks, grammar):
    toks.expect("\\")
    name = toks.expect("word", "a variable name")[1]
    if grammar == "labeled":
        toks.expect("^", "'^' and a label")
        label = _label(toks)
        toks.expect(".", "'.'")
        return LAbs(label, name, _term(toks, grammar))
    toks.expect(".", "'.'")
    return Abs(name, _term(toks, grammar))


def _label(toks):
    tok = toks.peek()
    if tok[0] == "*":
        toks.next()
        return STAR
    return toks.expect("word", "a label")[1]


def _app(toks, grammar):
    term = _atom(toks, grammar)
    if term is None:
        toks.error("expected a term")
    while True:
        if grammar == "labeled":
            if toks.peek()[0] != "@":
                return term
            toks.next()
            label = _label(toks)
            if label == STAR:
                tok = toks.peek()
                raise ParseError("the star label cannot decorate an application",
                                 tok[2], tok[3])
            arg = _atom(toks, grammar)
            if arg is None:
                toks.error("expected an argument after the label")
            term = LApp(label, term, arg)
        else:
            arg = _atom(toks, grammar)
            if arg is None:
                return term
            term = App(term, arg)


def _atom(toks, grammar):
    tok = toks.peek()
    if tok[0] == "word":
        toks.next()
        return Var(tok[1])
    if tok[0] == "(":
        if grammar == "marked" and toks.peek(1)[0] == "\\" and toks.peek(2)[0] == "*":
            return _marked_redex(toks)
        toks.next()
        term = _term(toks, grammar)
        toks.expect(")", "')'")
        return term
    return None


def _marked_redex(toks):
    toks.expect("(")
    toks.expect("\\")
    toks.expect("*")
    name = toks.expect("word", "a variable name")[1]
    toks.expect(".", "'.'")
    body = _term(toks, "marked")
    toks.expect(")", "')'")
    arg = _atom(toks, "marked")
    if arg is None:
        toks.error("a marked redex needs an argument")
    return MarkedRedex(name, body, arg)


def print_term(t):
    """Render a term in the concrete syntax; inverse of parse up to alpha."""
    return to_text(t)
