"""Identifier inventory, fresh-name generation, and the statement/guard
equivalents used by the for-loop rules."""

from __future__ import annotations

import re
from typing import Iterable

from ..errors import LangError
from .nodes import (
    Assign, Attempt, Binary, Block, BoolLit, BoolLit as _B, Break,
    CatchClause, Continue, DoWhile, Expr, For, Fragment, Halt, If, INT,
    IntLit, Return, Skip, Statement, Throw, Try, Unary, Var, VarDecl, While,
)


def _walk_expr(e: Expr, out: set[str]) -> None:
    if isinstance(e, Var):
        out.add(e.name)
    elif isinstance(e, Unary):
        _walk_expr(e.operand, out)
    elif isinstance(e, Binary):
        _walk_expr(e.left, out)
        _walk_expr(e.right, out)


def _walk_stmt(st: Statement, out: set[str]) -> None:
    if isinstance(st, Assign):
        out.add(st.target)
        _walk_expr(st.value, out)
    elif isinstance(st, VarDecl):
        out.add(st.name)
        _walk_expr(st.init, out)
    elif isinstance(st, Block):
        if st.label:
            out.add(st.label)
        _walk_list(st.body, out)
    elif isinstance(st, If):
        _walk_expr(st.cond, out)
        _walk_list(st.then_body, out)
        _walk_list(st.else_body, out)
    elif isinstance(st, While):
        if st.label:
            out.add(st.label)
        _walk_expr(st.cond, out)
        _walk_list(st.body, out)
    elif isinstance(st, DoWhile):
        if st.label:
            out.add(st.label)
        _walk_expr(st.cond, out)
        _walk_list(st.body, out)
    elif isinstance(st, For):
        if st.label:
            out.add(st.label)
        _walk_list(st.init, out)
        if st.guard is not None:
            _walk_expr(st.guard, out)
        _walk_list(st.update, out)
        _walk_list(st.body, out)
    elif isinstance(st, (Break, Continue)):
        if st.label:
            out.add(st.label)
    elif isinstance(st, Return):
        if st.value is not None:
            _walk_expr(st.value, out)
    elif isinstance(st, Throw):
        _walk_expr(st.value, out)
    elif isinstance(st, Try):
        _walk_list(st.body, out)
        if st.catch is not None:
            out.add(st.catch.binder)
            _walk_list(st.catch.body, out)
        if st.finally_body is not None:
            _walk_list(st.finally_body, out)
    elif isinstance(st, Attempt):
        if st.label:
            out.add(st.label)
        _walk_list(st.body, out)
        _walk_list(st.continuation, out)


def _walk_list(stmts: Iterable[Statement], out: set[str]) -> None:
    for st in stmts:
        _walk_stmt(st, out)


def identifiers(fragment: Fragment) -> set[str]:
    """Every identifier occurring in the fragment: parameters, declared
    locals, variable references, labels, and catch binders."""
    out: set[str] = {p.name for p in fragment.params}
    _walk_list(fragment.body, out)
    return out


def statement_identifiers(stmts: Iterable[Statement]) -> set[str]:
    out: set[str] = set()
    _walk_list(stmts, out)
    return out


_HINT_RE = re.compile(r"^(.*?)(?:_(\d+))?$")


def fresh_name(used: set[str], hint: str) -> str:
    """Deterministic fresh identifier: hint, hint_1, hint_2, ..."""
    base = _HINT_RE.match(hint).group(1) or hint
    if hint not in used:
        return hint
    i = 1
    while f"{base}_{i}" in used:
        i += 1
    return f"{base}_{i}"


def fresh_flag(fragment: Fragment, hint: str) -> str:
    """Identifier not occurring anywhere in the fragment (as variable,
    label, or binder); deterministic in (fragment, hint)."""
    return fresh_name(identifiers(fragment), hint)


def collect_types(fragment: Fragment) -> dict[str, str]:
    """Flat name -> type map over parameters, declarations and catch
    binders. Disjoint-scope redeclarations must agree on the type."""
    types: dict[str, str] = {p.name: p.vtype for p in fragment.params}

    def note(name: str, vtype: str) -> None:
        if types.get(name, vtype) != vtype:
            raise LangError(f"variable {name!r} redeclared with a different type")
        types[name] = vtype

    def walk(stmts) -> None:
        for st in stmts:
            if isinstance(st, VarDecl):
                note(st.name, st.vtype)
            elif isinstance(st, Block):
                walk(st.body)
            elif isinstance(st, If):
                walk(st.then_body)
                walk(st.else_body)
            elif isinstance(st, (While, DoWhile)):
                walk(st.body)
            elif isinstance(st, For):
                walk(st.init)
                walk(st.body)
            elif isinstance(st, Try):
                walk(st.body)
                if st.catch is not None:
                    note(st.catch.binder, INT)
                    walk(st.catch.body)
                if st.finally_body is not None:
                    walk(st.finally_body)
            elif isinstance(st, Attempt):
                walk(st.body)
                walk(st.continuation)

    walk(fragment.body)
    return types


def statement_equivalents(entries: Iterable[Assign]) -> tuple[Statement, ...]:
    """The statement list equivalent of a for-init/for-update expression
    list: each entry becomes an assignment statement, order preserved."""
    out = []
    for entry in entries:
        if not isinstance(entry, (Assign, VarDecl)):
            raise LangError("for-clause equivalents take assignments/declarations only")
        out.append(entry)
    return tuple(out)


def guard_equivalent(guard: Expr | None) -> Expr:
    """The expression equivalent of a for-loop guard: `true` when empty."""
    return guard if guard is not None else BoolLit(True)
