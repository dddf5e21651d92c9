"""Lowering of fragments to compact code tuples.

Both execution backends interpret the same form: nested tuples headed by
small integer opcodes, variables resolved to state-vector slots, labels
interned to ints. Slot resolution is scope-accurate (a declaration
shadowing a parameter gets its own slot), so the flat calculus-level view
and the scoped runtime view agree on every observable variable.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import EngineError, LangError
from ..lang.nodes import (
    Assign, Attempt, Binary, Block, BoolLit, Break, Continue, DoWhile,
    Expr, For, Fragment, Halt, If, IntLit, Return, Skip, Statement, Throw,
    Try, Unary, Var, VarDecl, While, INT,
)

# Statement opcodes.
S_SKIP, S_ASSIGN, S_DECL, S_BLOCK, S_IF, S_WHILE, S_DO, S_FOR, S_BREAK, \
    S_CONT, S_RET, S_THROW, S_TRY, S_ATT, S_HALT = range(15)

# Expression opcodes. E_DIV/E_MOD throw on a zero divisor (program
# semantics); E_TDIV/E_TMOD are total (logic-term semantics).
E_INT, E_BOOL, E_VAR, E_NEG, E_NOT, E_ADD, E_SUB, E_MUL, E_DIV, E_MOD, \
    E_LT, E_LE, E_GT, E_GE, E_EQ, E_NE, E_AND, E_OR, E_ITE, E_TDIV, \
    E_TMOD = range(21)

# Completion kinds in backend completion tuples.
K_NORMAL, K_BREAK, K_CONT, K_RET, K_THROWN, K_HALT, K_BUDGET = range(7)

_BIN_OP = {
    "+": E_ADD, "-": E_SUB, "*": E_MUL, "/": E_DIV, "%": E_MOD,
    "<": E_LT, "<=": E_LE, ">": E_GT, ">=": E_GE,
    "==": E_EQ, "!=": E_NE, "&&": E_AND, "||": E_OR,
}


@dataclass(frozen=True)
class CompiledFragment:
    code: tuple
    n_slots: int
    param_slots: tuple  # (name, slot, type) per declared parameter
    slot_names: tuple  # reporting name per slot (later slots win a name)
    label_names: tuple


class _Lowering:
    def __init__(self, params):
        self.n_slots = 0
        self.slot_names: list[str] = []
        self.labels: dict[str, int] = {}
        self.scopes: list[dict[str, int]] = [{}]
        self.param_slots = tuple(
            (p.name, self._new_slot(p.name), p.vtype) for p in params
        )
        for name, slot, _ in self.param_slots:
            self.scopes[0][name] = slot

    def _new_slot(self, name: str) -> int:
        slot = self.n_slots
        self.n_slots += 1
        self.slot_names.append(name)
        return slot

    def label_id(self, label: str | None) -> int:
        if label is None:
            return -1
        if label not in self.labels:
            self.labels[label] = len(self.labels)
        return self.labels[label]

    def resolve(self, name: str) -> int:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        raise LangError(f"use of undeclared variable {name!r}")

    def declare(self, name: str) -> int:
        slot = self._new_slot(name)
        self.scopes[-1][name] = slot
        return slot

    # -- expressions ------------------------------------------------

    def expr(self, e: Expr) -> tuple:
        if isinstance(e, IntLit):
            return (E_INT, e.value)
        if isinstance(e, BoolLit):
            return (E_BOOL, e.value)
        if isinstance(e, Var):
            return (E_VAR, self.resolve(e.name))
        if isinstance(e, Unary):
            return (E_NEG if e.op == "-" else E_NOT, self.expr(e.operand))
        if isinstance(e, Binary):
            return (_BIN_OP[e.op], self.expr(e.left), self.expr(e.right))
        raise EngineError(f"cannot lower expression {e!r}")

    # -- statements -------------------------------------------------

    def stmt_list(self, stmts) -> tuple:
        return tuple(self.stmt(st) for st in stmts)

    def scoped_list(self, stmts) -> tuple:
        self.scopes.append({})
        code = self.stmt_list(stmts)
        self.scopes.pop()
        return code

    def stmt(self, st: Statement) -> tuple:
        if isinstance(st, Skip):
            return (S_SKIP,)
        if isinstance(st, Assign):
            return (S_ASSIGN, self.resolve(st.target), self.expr(st.value))
        if isinstance(st, VarDecl):
            code = self.expr(st.init)
            return (S_DECL, self.declare(st.name), code)
        if isinstance(st, Block):
            return (S_BLOCK, self.label_id(st.label), self.scoped_list(st.body))
        if isinstance(st, If):
            return (S_IF, self.expr(st.cond), self.scoped_list(st.then_body),
                    self.scoped_list(st.else_body))
        if isinstance(st, While):
            return (S_WHILE, self.label_id(st.label), self.expr(st.cond),
                    self.scoped_list(st.body))
        if isinstance(st, DoWhile):
            return (S_DO, self.label_id(st.label), self.scoped_list(st.body),
                    self.expr(st.cond))
        if isinstance(st, For):
            self.scopes.append({})
            init = self.stmt_list(st.init)
            guard = self.expr(st.guard) if st.guard is not None else None
            update = self.stmt_list(st.update)
            body = self.scoped_list(st.body)
            self.scopes.pop()
            return (S_FOR, self.label_id(st.label), init, guard, update, body)
        if isinstance(st, Break):
            return (S_BREAK, self.label_id(st.label))
        if isinstance(st, Continue):
            return (S_CONT, self.label_id(st.label))
        if isinstance(st, Return):
            return (S_RET, self.expr(st.value) if st.value is not None else None)
        if isinstance(st, Throw):
            return (S_THROW, self.expr(st.value))
        if isinstance(st, Try):
            body = self.scoped_list(st.body)
            catch_slot, handler = -1, ()
            if st.catch is not None:
                self.scopes.append({})
                catch_slot = self.declare(st.catch.binder)
                handler = self.stmt_list(st.catch.body)
                self.scopes.pop()
            fin = self.scoped_list(st.finally_body) if st.finally_body is not None else None
            return (S_TRY, body, catch_slot, handler, fin)
        if isinstance(st, Attempt):
            return (S_ATT, self.label_id(st.label), self.scoped_list(st.body),
                    self.scoped_list(st.continuation))
        if isinstance(st, Halt):
            return (S_HALT,)
        raise EngineError(f"cannot lower statement {st!r}")


def compile_fragment(fragment: Fragment) -> CompiledFragment:
    low = _Lowering(fragment.params)
    code = low.stmt_list(fragment.body)
    label_names = tuple(sorted(low.labels, key=low.labels.get))
    return CompiledFragment(code, low.n_slots, low.param_slots,
                            tuple(low.slot_names), label_names)


def compile_expression(e: Expr, slot_of: dict[str, int]) -> tuple:
    """Lower a bare expression against an explicit name -> slot map."""
    low = _Lowering(())
    low.scopes[0] = dict(slot_of)
    low.n_slots = max(slot_of.values(), default=-1) + 1
    return low.expr(e)


_TOTAL_BIN = dict(_BIN_OP, **{"/": E_TDIV, "%": E_TMOD})


def term_to_code(t, slot_of: dict[str, int]) -> tuple:
    """Lower a logic term with total division semantics."""
    from ..logic.syntax import TBin, TBool, TIte, TInt, TUn, TVar

    if isinstance(t, TInt):
        return (E_INT, t.value)
    if isinstance(t, TBool):
        return (E_BOOL, t.value)
    if isinstance(t, TVar):
        return (E_VAR, slot_of[t.name])
    if isinstance(t, TUn):
        return (E_NEG if t.op == "-" else E_NOT, term_to_code(t.operand, slot_of))
    if isinstance(t, TBin):
        return (_TOTAL_BIN[t.op], term_to_code(t.left, slot_of),
                term_to_code(t.right, slot_of))
    if isinstance(t, TIte):
        return (E_ITE, term_to_code(t.cond, slot_of),
                term_to_code(t.then, slot_of), term_to_code(t.els, slot_of))
    raise EngineError(f"cannot lower term {t!r}")
