"""Text syntax for annotation formulae.

Operators by loosening precedence: `* / %`, `+ -`, comparisons, `!`,
`&&`, `||`, `->` (right-associative). `true`/`false`, integer literals,
variables, parentheses. Variables take their sorts from the supplied
typing environment (normally the program fragment's declarations).
"""

from __future__ import annotations

from typing import Mapping

from ..errors import LangError, LogicError
from ..lang.lexer import TokenStream, tokenize
from .convert import formula_to_term, term_to_formula
from .syntax import (
    BOOLEAN, Cmp, Formula, Imp, TBin, TBool, TInt, TUn, TVar, Term, Truth,
)

_CMP_OPS = ("==", "!=", "<=", ">=", "<", ">")


class _FormulaParser:
    def __init__(self, ts: TokenStream, types: Mapping[str, str]):
        self.ts = ts
        self.types = types

    # Each level returns either a Formula or a Term and callers coerce.

    def _as_formula(self, x) -> Formula:
        if isinstance(x, Formula):
            return x
        if x.sort != BOOLEAN:
            raise LogicError("expected a boolean formula, got an int term")
        return term_to_formula(x)

    def _as_term(self, x) -> Term:
        if isinstance(x, Term):
            return x
        return formula_to_term(x)

    def imp(self):
        left = self.disj()
        if self.ts.accept_symbol("->"):
            return Imp(self._as_formula(left), self._as_formula(self.imp()))
        return left

    def disj(self):
        x = self.conj()
        while self.ts.at_symbol("||"):
            self.ts.next()
            from .syntax import Or
            x = Or(self._as_formula(x), self._as_formula(self.conj()))
        return x

    def conj(self):
        x = self.negation()
        while self.ts.at_symbol("&&"):
            self.ts.next()
            from .syntax import And
            x = And(self._as_formula(x), self._as_formula(self.negation()))
        return x

    def negation(self):
        if self.ts.accept_symbol("!"):
            from .syntax import Not
            return Not(self._as_formula(self.negation()))
        return self.comparison()

    def comparison(self):
        left = self.additive()
        for op in _CMP_OPS:
            if self.ts.at_symbol(op):
                self.ts.next()
                right = self.additive()
                return Cmp(op, self._as_term(left), self._as_term(right))
        return left

    def additive(self):
        t = self._as_term_level(self.multiplicative())
        while self.ts.at_symbol("+") or self.ts.at_symbol("-"):
            op = self.ts.next().text
            t = TBin(op, self._as_term(t), self._as_term(self.multiplicative()))
        return t

    def multiplicative(self):
        t = self.unary()
        while self.ts.at_symbol("*") or self.ts.at_symbol("/") or self.ts.at_symbol("%"):
            op = self.ts.next().text
            t = TBin(op, self._as_term(t), self._as_term(self.unary()))
        return t

    def _as_term_level(self, x):
        # Deferred: keep formulas intact unless an arithmetic op follows.
        return x

    def unary(self):
        if self.ts.accept_symbol("-"):
            return TUn("-", self._as_term(self.unary()))
        return self.primary()

    def primary(self):
        tok = self.ts.peek()
        if tok.kind == "int":
            self.ts.next()
            return TInt(int(tok.text))
        if tok.kind == "keyword" and tok.text in ("true", "false"):
            self.ts.next()
            return TBool(tok.text == "true")
        if tok.kind == "ident":
            self.ts.next()
            sort = self.types.get(tok.text)
            if sort is None:
                raise LangError(f"unknown variable {tok.text!r} in formula", tok.line, tok.col)
            return TVar(tok.text, sort)
        if self.ts.accept_symbol("("):
            inner = self.imp()
            self.ts.expect_symbol(")")
            return inner
        raise LangError(f"expected formula, found {tok.text or 'end of input'!r}",
                        tok.line, tok.col)


def parse_formula(text: str, types: Mapping[str, str]) -> Formula:
    ts = TokenStream(tokenize(text))
    parser = _FormulaParser(ts, types)
    result = parser.imp()
    ts.expect_eof()
    return parser._as_formula(result)


def parse_term(text: str, types: Mapping[str, str]) -> Term:
    ts = TokenStream(tokenize(text))
    parser = _FormulaParser(ts, types)
    result = parser.imp()
    ts.expect_eof()
    return parser._as_term(result)
