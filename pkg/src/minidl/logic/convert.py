"""Bridges between program expressions and logic terms/formulae."""

from __future__ import annotations

from typing import Mapping

from ..errors import LogicError
from ..lang.nodes import (
    BOOLEAN, Binary, BoolLit, Expr, IntLit, Unary, Var,
)
from .syntax import (
    And, Atom, Cmp, Formula, Imp, Not, Or, TBin, TBool, TInt, TUn, TVar,
    Term, Truth,
)

_CMP = ("==", "!=", "<", "<=", ">", ">=")


def expr_to_term(e: Expr, types: Mapping[str, str]) -> Term:
    """Translate a (pure) program expression into a term."""
    if isinstance(e, IntLit):
        return TInt(e.value)
    if isinstance(e, BoolLit):
        return TBool(e.value)
    if isinstance(e, Var):
        sort = types.get(e.name)
        if sort is None:
            raise LogicError(f"no declared type for variable {e.name!r}")
        return TVar(e.name, sort)
    if isinstance(e, Unary):
        return TUn(e.op, expr_to_term(e.operand, types))
    if isinstance(e, Binary):
        return TBin(e.op, expr_to_term(e.left, types), expr_to_term(e.right, types))
    raise LogicError(f"not an expression: {e!r}")


def expr_to_formula(e: Expr, types: Mapping[str, str]) -> Formula:
    """Translate a boolean program expression into a structured formula
    (comparisons become atoms, boolean connectives become connectives)."""
    if isinstance(e, BoolLit):
        return Truth(e.value)
    if isinstance(e, Unary) and e.op == "!":
        return Not(expr_to_formula(e.operand, types))
    if isinstance(e, Binary):
        if e.op == "&&":
            return And(expr_to_formula(e.left, types), expr_to_formula(e.right, types))
        if e.op == "||":
            return Or(expr_to_formula(e.left, types), expr_to_formula(e.right, types))
        if e.op in _CMP:
            return Cmp(e.op, expr_to_term(e.left, types), expr_to_term(e.right, types))
    term = expr_to_term(e, types)
    if term.sort != BOOLEAN:
        raise LogicError(f"expected a boolean expression, got {e!r}")
    return Atom(term)


def term_to_formula(t: Term) -> Formula:
    """View a boolean term as a formula, structurally."""
    if isinstance(t, TBool):
        return Truth(t.value)
    if isinstance(t, TUn) and t.op == "!":
        return Not(term_to_formula(t.operand))
    if isinstance(t, TBin):
        if t.op == "&&":
            return And(term_to_formula(t.left), term_to_formula(t.right))
        if t.op == "||":
            return Or(term_to_formula(t.left), term_to_formula(t.right))
        if t.op in _CMP:
            return Cmp(t.op, t.left, t.right)
    if t.sort != BOOLEAN:
        raise LogicError(f"term {t!r} is not boolean")
    return Atom(t)


def formula_to_term(f: Formula) -> Term:
    """View a quantifier-free formula as a boolean term, structurally."""
    if isinstance(f, Truth):
        return TBool(f.value)
    if isinstance(f, Atom):
        return f.term
    if isinstance(f, Cmp):
        return TBin(f.op, f.left, f.right)
    if isinstance(f, Not):
        return TUn("!", formula_to_term(f.inner))
    if isinstance(f, And):
        return TBin("&&", formula_to_term(f.left), formula_to_term(f.right))
    if isinstance(f, Or):
        return TBin("||", formula_to_term(f.left), formula_to_term(f.right))
    if isinstance(f, Imp):
        return TBin("||", TUn("!", formula_to_term(f.left)), formula_to_term(f.right))
    raise LogicError(f"formula {f!r} has no term form")
