"""Evaluation and constant folding for modality-free terms and formulae."""

from __future__ import annotations

from typing import Mapping

from ..errors import LogicError
from .syntax import (
    And, Atom, Box, Cmp, FALSE, Formula, Imp, Not, Or, TBin, TBool, TIte,
    TInt, TRUE, TUn, TVar, Term, Truth, UpdApp,
)


def trunc_div(a: int, b: int) -> int:
    """Truncating integer division (toward zero); total: n/0 = 0."""
    if b == 0:
        return 0
    q = a // b
    if q < 0 and q * b != a:
        q += 1
    return q


def trunc_mod(a: int, b: int) -> int:
    """Remainder with the dividend's sign; total: n%0 = 0."""
    if b == 0:
        return 0
    return a - trunc_div(a, b) * b


def _bin(op: str, a, b):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return trunc_div(a, b)
    if op == "%":
        return trunc_mod(a, b)
    if op == "<":
        return a < b
    if op == "<=":
        return a <= b
    if op == ">":
        return a > b
    if op == ">=":
        return a >= b
    if op == "==":
        return a == b
    if op == "!=":
        return a != b
    if op == "&&":
        return a and b
    if op == "||":
        return a or b
    raise LogicError(f"unknown operator {op!r}")


def eval_term(t: Term, state: Mapping[str, object]):
    if isinstance(t, TInt):
        return t.value
    if isinstance(t, TBool):
        return t.value
    if isinstance(t, TVar):
        if t.name not in state:
            raise LogicError(f"unbound variable {t.name!r} in term evaluation")
        return state[t.name]
    if isinstance(t, TUn):
        v = eval_term(t.operand, state)
        return -v if t.op == "-" else (not v)
    if isinstance(t, TBin):
        if t.op == "&&":
            return eval_term(t.left, state) and eval_term(t.right, state)
        if t.op == "||":
            return eval_term(t.left, state) or eval_term(t.right, state)
        return _bin(t.op, eval_term(t.left, state), eval_term(t.right, state))
    if isinstance(t, TIte):
        return eval_term(t.then if eval_term(t.cond, state) else t.els, state)
    raise LogicError(f"not a term: {t!r}")


def eval_formula(f: Formula, state: Mapping[str, object]) -> bool:
    """Classical evaluation of a modality-free, update-free formula."""
    if isinstance(f, Truth):
        return f.value
    if isinstance(f, Atom):
        return bool(eval_term(f.term, state))
    if isinstance(f, Cmp):
        return _bin(f.op, eval_term(f.left, state), eval_term(f.right, state))
    if isinstance(f, Not):
        return not eval_formula(f.inner, state)
    if isinstance(f, And):
        return eval_formula(f.left, state) and eval_formula(f.right, state)
    if isinstance(f, Or):
        return eval_formula(f.left, state) or eval_formula(f.right, state)
    if isinstance(f, Imp):
        return (not eval_formula(f.left, state)) or eval_formula(f.right, state)
    if isinstance(f, (Box, UpdApp)):
        raise LogicError("eval_formula reached a modality/update application")
    raise LogicError(f"not a formula: {f!r}")


def _literal(t: Term):
    if isinstance(t, (TInt, TBool)):
        return t.value
    return None


def fold_term(t: Term) -> Term:
    """Bottom-up constant folding with total division."""
    if isinstance(t, (TInt, TBool, TVar)):
        return t
    if isinstance(t, TUn):
        a = fold_term(t.operand)
        v = _literal(a)
        if v is not None:
            return TInt(-v) if t.op == "-" else TBool(not v)
        return TUn(t.op, a)
    if isinstance(t, TBin):
        a, b = fold_term(t.left), fold_term(t.right)
        va, vb = _literal(a), _literal(b)
        if va is not None and vb is not None:
            r = _bin(t.op, va, vb)
            return TInt(r) if isinstance(r, int) and not isinstance(r, bool) else TBool(bool(r))
        if t.op == "&&":
            if va is False or vb is False:
                return TBool(False)
            if va is True:
                return b
            if vb is True:
                return a
        if t.op == "||":
            if va is True or vb is True:
                return TBool(True)
            if va is False:
                return b
            if vb is False:
                return a
        return TBin(t.op, a, b)
    if isinstance(t, TIte):
        c = fold_term(t.cond)
        vc = _literal(c)
        if vc is not None:
            return fold_term(t.then if vc else t.els)
        return TIte(c, fold_term(t.then), fold_term(t.els))
    raise LogicError(f"not a term: {t!r}")


def fold_formula(f: Formula) -> Formula:
    if isinstance(f, Truth):
        return f
    if isinstance(f, Atom):
        t = fold_term(f.term)
        v = _literal(t)
        return Truth(bool(v)) if v is not None else Atom(t)
    if isinstance(f, Cmp):
        a, b = fold_term(f.left), fold_term(f.right)
        va, vb = _literal(a), _literal(b)
        if va is not None and vb is not None:
            return Truth(bool(_bin(f.op, va, vb)))
        return Cmp(f.op, a, b)
    if isinstance(f, Not):
        inner = fold_formula(f.inner)
        if isinstance(inner, Truth):
            return Truth(not inner.value)
        return Not(inner)
    if isinstance(f, (And, Or, Imp)):
        left, right = fold_formula(f.left), fold_formula(f.right)
        if isinstance(f, And):
            if isinstance(left, Truth):
                return FALSE if not left.value else right
            if isinstance(right, Truth):
                return FALSE if not right.value else left
            return And(left, right)
        if isinstance(f, Or):
            if isinstance(left, Truth):
                return TRUE if left.value else right
            if isinstance(right, Truth):
                return TRUE if right.value else left
            return Or(left, right)
        if isinstance(left, Truth):
            return right if left.value else TRUE
        if isinstance(right, Truth) and right.value:
            return TRUE
        return Imp(left, right)
    # Modalities and pending update applications are left alone.
    return f


def term_vars(t: Term, out: dict[str, str] | None = None) -> dict[str, str]:
    """Free variables with their sorts."""
    if out is None:
        out = {}
    if isinstance(t, TVar):
        out[t.name] = t.var_sort
    elif isinstance(t, TUn):
        term_vars(t.operand, out)
    elif isinstance(t, TBin):
        term_vars(t.left, out)
        term_vars(t.right, out)
    elif isinstance(t, TIte):
        term_vars(t.cond, out)
        term_vars(t.then, out)
        term_vars(t.els, out)
    return out


def formula_vars(f: Formula, out: dict[str, str] | None = None) -> dict[str, str]:
    """Free variables of a modality-free formula with their sorts."""
    if out is None:
        out = {}
    if isinstance(f, Atom):
        term_vars(f.term, out)
    elif isinstance(f, Cmp):
        term_vars(f.left, out)
        term_vars(f.right, out)
    elif isinstance(f, Not):
        formula_vars(f.inner, out)
    elif isinstance(f, (And, Or, Imp)):
        formula_vars(f.left, out)
        formula_vars(f.right, out)
    elif isinstance(f, (Box, UpdApp)):
        raise LogicError("formula_vars reached a modality/update application")
    return out
