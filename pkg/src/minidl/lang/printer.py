"""Canonical text rendering of fragments.

Loop bodies and branches always print braced, so printing then reparsing
reproduces the tree exactly (structural round-trip). `compact=True` yields
a single-line rendering for sequent display.
"""

from __future__ import annotations

from .nodes import (
    Assign, Attempt, Binary, Block, BoolLit, Break, Continue, DoWhile,
    Expr, For, Fragment, Halt, If, IntLit, Return, Skip, Statement, Throw,
    Try, Unary, Var, VarDecl, While,
)

_PRECEDENCE = {
    "||": 1, "&&": 2, "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5, "*": 6, "/": 6, "%": 6,
}
_UNARY_PRECEDENCE = 7


def expr_text(e: Expr) -> str:
    return _expr(e, 0)


def _expr(e: Expr, parent_prec: int) -> str:
    if isinstance(e, IntLit):
        return str(e.value)
    if isinstance(e, BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Unary):
        inner = _expr(e.operand, _UNARY_PRECEDENCE)
        sep = " " if e.op == "-" and inner.startswith("-") else ""
        text = f"{e.op}{sep}{inner}"
        return f"({text})" if parent_prec > _UNARY_PRECEDENCE else text
    if isinstance(e, Binary):
        prec = _PRECEDENCE[e.op]
        # Left-associative: right child needs parens at equal precedence.
        text = f"{_expr(e.left, prec)} {e.op} {_expr(e.right, prec + 1)}"
        return f"({text})" if parent_prec > prec else text
    raise TypeError(f"not an expression: {e!r}")


def fragment_text(fragment: Fragment, compact: bool = False) -> str:
    lines = []
    if fragment.params:
        decls = ", ".join(f"{p.vtype} {p.name}" for p in fragment.params)
        lines.append(f"params ({decls});")
    lines.extend(_stmt_lines(st, 0) for st in fragment.body)
    if compact:
        return " ".join(part for line in lines for part in line.split())
    return "\n".join(lines) + ("\n" if lines else "")


def statements_text(stmts: tuple[Statement, ...], compact: bool = False) -> str:
    lines = [_stmt_lines(st, 0) for st in stmts]
    if compact:
        return " ".join(part for line in lines for part in line.split())
    return "\n".join(lines)


def statement_text(st: Statement, compact: bool = False) -> str:
    return statements_text((st,), compact=compact)


def _indent(depth: int) -> str:
    return "  " * depth


def _braced(body, depth: int) -> str:
    if not body:
        return "{ }"
    inner = "\n".join(_stmt_lines(st, depth + 1) for st in body)
    return "{\n" + inner + "\n" + _indent(depth) + "}"


def _label_prefix(label: str | None) -> str:
    return f"{label}: " if label else ""


def _stmt_lines(st: Statement, depth: int) -> str:
    pad = _indent(depth)
    if isinstance(st, Skip):
        return pad + ";"
    if isinstance(st, Assign):
        return f"{pad}{st.target} = {expr_text(st.value)};"
    if isinstance(st, VarDecl):
        return f"{pad}{st.vtype} {st.name} = {expr_text(st.init)};"
    if isinstance(st, Block):
        return f"{pad}{_label_prefix(st.label)}{_braced(st.body, depth)}"
    if isinstance(st, If):
        text = f"{pad}if ({expr_text(st.cond)}) {_braced(st.then_body, depth)}"
        if st.else_body:
            text += f" else {_braced(st.else_body, depth)}"
        return text
    if isinstance(st, While):
        return (f"{pad}{_label_prefix(st.label)}while ({expr_text(st.cond)}) "
                f"{_braced(st.body, depth)}")
    if isinstance(st, DoWhile):
        return (f"{pad}{_label_prefix(st.label)}do {_braced(st.body, depth)} "
                f"while ({expr_text(st.cond)});")
    if isinstance(st, For):
        init = ", ".join(_for_item(i) for i in st.init)
        guard = expr_text(st.guard) if st.guard is not None else ""
        update = ", ".join(_for_item(u) for u in st.update)
        return (f"{pad}{_label_prefix(st.label)}for ({init}; {guard}; {update}) "
                f"{_braced(st.body, depth)}")
    if isinstance(st, Break):
        return f"{pad}break{' ' + st.label if st.label else ''};"
    if isinstance(st, Continue):
        return f"{pad}continue{' ' + st.label if st.label else ''};"
    if isinstance(st, Return):
        return f"{pad}return{' ' + expr_text(st.value) if st.value is not None else ''};"
    if isinstance(st, Throw):
        return f"{pad}throw {expr_text(st.value)};"
    if isinstance(st, Try):
        text = f"{pad}try {_braced(st.body, depth)}"
        if st.catch is not None:
            text += f" catch ({st.catch.binder}) {_braced(st.catch.body, depth)}"
        if st.finally_body is not None:
            text += f" finally {_braced(st.finally_body, depth)}"
        return text
    if isinstance(st, Attempt):
        label = f"{st.label}: " if st.label else ""
        return (f"{pad}attempt {label}{_braced(st.body, depth)} "
                f"continuation {_braced(st.continuation, depth)}")
    if isinstance(st, Halt):
        return pad + "halt;"
    raise TypeError(f"not a statement: {st!r}")


def _for_item(st: Statement) -> str:
    if isinstance(st, VarDecl):
        return f"{st.vtype} {st.name} = {expr_text(st.init)}"
    if isinstance(st, Assign):
        return f"{st.target} = {expr_text(st.value)}"
    raise TypeError(f"bad for-clause item: {st!r}")
