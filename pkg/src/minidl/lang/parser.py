"""Recursive-descent parser and static checker for program fragments.

Grammar (UTF-8, `//` and `/* */` comments):

    fragment   := [ "params" "(" param,* ")" ";" ] statement*
    statement  := ";" | assign ";" | decl ";" | [label ":"] block-like
                | "if" "(" expr ")" branch [ "else" branch ]
                | "break" [ident] ";" | "continue" [ident] ";"
                | "return" [expr] ";" | "throw" expr ";"
                | "try" "{" stmt* "}" ["catch" "(" ident ")" "{" stmt* "}"]
                                      ["finally" "{" stmt* "}"]
                | "attempt" [ident ":"] "{" stmt* "}" "continuation" "{" stmt* "}"
                | "halt" ";"
    block-like := "{" stmt* "}" | while | do-while | for

Static checks: declared-before-use, type agreement, label binding (blocks
catch labeled breaks only; loops and attempts catch breaks and continues),
no duplicate in-scope labels, locals never shadow live locals. Locals may
shadow parameters: symbolic execution promotes consumed declarations to
parameters, and an unwound loop-body copy may legitimately redeclare the
name.
"""

from __future__ import annotations

from .lexer import Token, TokenStream, tokenize
from ..errors import LangError
from .nodes import (
    ARITH_OPS, BOOL_OPS, BOOLEAN, CMP_OPS, EQ_OPS, INT,
    Assign, Attempt, Binary, Block, BoolLit, Break, CatchClause, Continue,
    DoWhile, Expr, For, Fragment, Halt, If, IntLit, Param, Pos, Return,
    Skip, Statement, Throw, Try, Unary, Var, VarDecl, While,
)

_TYPE_KEYWORDS = (INT, BOOLEAN)


def _pos(tok: Token) -> Pos:
    return Pos(tok.line, tok.col)


# ------------------------------------------------------------------
# Expressions
# ------------------------------------------------------------------


def parse_expression(ts: TokenStream) -> Expr:
    return _parse_or(ts)


def _parse_or(ts: TokenStream) -> Expr:
    e = _parse_and(ts)
    while ts.at_symbol("||"):
        ts.next()
        e = Binary("||", e, _parse_and(ts))
    return e


def _parse_and(ts: TokenStream) -> Expr:
    e = _parse_equality(ts)
    while ts.at_symbol("&&"):
        ts.next()
        e = Binary("&&", e, _parse_equality(ts))
    return e


def _parse_equality(ts: TokenStream) -> Expr:
    e = _parse_comparison(ts)
    while ts.at_symbol("==") or ts.at_symbol("!="):
        op = ts.next().text
        e = Binary(op, e, _parse_comparison(ts))
    return e


def _parse_comparison(ts: TokenStream) -> Expr:
    e = _parse_additive(ts)
    while any(ts.at_symbol(op) for op in CMP_OPS):
        op = ts.next().text
        e = Binary(op, e, _parse_additive(ts))
    return e


def _parse_additive(ts: TokenStream) -> Expr:
    e = _parse_multiplicative(ts)
    while ts.at_symbol("+") or ts.at_symbol("-"):
        op = ts.next().text
        e = Binary(op, e, _parse_multiplicative(ts))
    return e


def _parse_multiplicative(ts: TokenStream) -> Expr:
    e = _parse_unary(ts)
    while ts.at_symbol("*") or ts.at_symbol("/") or ts.at_symbol("%"):
        op = ts.next().text
        e = Binary(op, e, _parse_unary(ts))
    return e


def _parse_unary(ts: TokenStream) -> Expr:
    if ts.at_symbol("-"):
        ts.next()
        return Unary("-", _parse_unary(ts))
    if ts.at_symbol("!"):
        ts.next()
        return Unary("!", _parse_unary(ts))
    return _parse_primary(ts)


def _parse_primary(ts: TokenStream) -> Expr:
    tok = ts.peek()
    if tok.kind == "int":
        ts.next()
        return IntLit(int(tok.text))
    if tok.kind == "keyword" and tok.text in ("true", "false"):
        ts.next()
        return BoolLit(tok.text == "true")
    if tok.kind == "ident":
        ts.next()
        return Var(tok.text, pos=_pos(tok))
    if ts.accept_symbol("("):
        e = parse_expression(ts)
        ts.expect_symbol(")")
        return e
    raise LangError(f"expected expression, found {tok.text or 'end of input'!r}", tok.line, tok.col)


# ------------------------------------------------------------------
# Statements
# ------------------------------------------------------------------


def _parse_statement_list(ts: TokenStream) -> tuple[Statement, ...]:
    stmts = []
    while not ts.at_symbol("}") and ts.peek().kind != "eof":
        stmts.append(_parse_statement(ts))
    return tuple(stmts)


def _parse_braced(ts: TokenStream) -> tuple[Statement, ...]:
    ts.expect_symbol("{")
    body = _parse_statement_list(ts)
    ts.expect_symbol("}")
    return body


def _parse_branch(ts: TokenStream) -> tuple[Statement, ...]:
    # Brace groups owned by a composite statement splice into a bare tuple.
    if ts.at_symbol("{"):
        return _parse_braced(ts)
    return (_parse_statement(ts),)


def _parse_labeled(ts: TokenStream) -> Statement:
    label_tok = ts.expect_ident()
    ts.expect_symbol(":")
    label = label_tok.text
    tok = ts.peek()
    if ts.at_symbol("{"):
        return Block(label, _parse_braced(ts), pos=_pos(label_tok))
    if tok.kind == "keyword" and tok.text in ("while", "do", "for"):
        return _parse_loop(ts, label, label_tok)
    raise LangError("a label must precede a block or a loop", tok.line, tok.col)


def _parse_loop(ts: TokenStream, label: str | None, label_tok: Token | None) -> Statement:
    tok = ts.peek()
    pos = _pos(label_tok or tok)
    if ts.accept_keyword("while"):
        ts.expect_symbol("(")
        cond = parse_expression(ts)
        ts.expect_symbol(")")
        return While(label, cond, _parse_branch(ts), pos=pos)
    if ts.accept_keyword("do"):
        body = _parse_branch(ts)
        ts.expect_keyword("while")
        ts.expect_symbol("(")
        cond = parse_expression(ts)
        ts.expect_symbol(")")
        ts.expect_symbol(";")
        return DoWhile(label, body, cond, pos=pos)
    ts.expect_keyword("for")
    ts.expect_symbol("(")
    init: list[Statement] = []
    if not ts.at_symbol(";"):
        while True:
            init.append(_parse_for_init_item(ts))
            if not ts.accept_symbol(","):
                break
    ts.expect_symbol(";")
    guard = None if ts.at_symbol(";") else parse_expression(ts)
    ts.expect_symbol(";")
    update: list[Assign] = []
    if not ts.at_symbol(")"):
        while True:
            update.append(_parse_update_item(ts))
            if not ts.accept_symbol(","):
                break
    ts.expect_symbol(")")
    return For(label, tuple(init), guard, tuple(update), _parse_branch(ts), pos=pos)


def _parse_for_init_item(ts: TokenStream) -> Statement:
    tok = ts.peek()
    if tok.kind == "keyword" and tok.text in _TYPE_KEYWORDS:
        ts.next()
        name = ts.expect_ident()
        ts.expect_symbol("=")
        return VarDecl(tok.text, name.text, parse_expression(ts), pos=_pos(tok))
    name = ts.expect_ident()
    ts.expect_symbol("=")
    return Assign(name.text, parse_expression(ts), pos=_pos(name))


def _parse_update_item(ts: TokenStream) -> Assign:
    name = ts.expect_ident()
    ts.expect_symbol("=")
    return Assign(name.text, parse_expression(ts), pos=_pos(name))


def _parse_statement(ts: TokenStream) -> Statement:
    tok = ts.peek()
    if ts.accept_symbol(";"):
        return Skip(pos=_pos(tok))
    if ts.at_symbol("{"):
        return Block(None, _parse_braced(ts), pos=_pos(tok))
    if tok.kind == "ident" and ts.peek(1).kind == "symbol" and ts.peek(1).text == ":":
        return _parse_labeled(ts)
    if tok.kind == "ident":
        ts.next()
        ts.expect_symbol("=")
        value = parse_expression(ts)
        ts.expect_symbol(";")
        return Assign(tok.text, value, pos=_pos(tok))
    if tok.kind == "keyword":
        kw = tok.text
        if kw in _TYPE_KEYWORDS:
            ts.next()
            name = ts.expect_ident()
            ts.expect_symbol("=")
            init = parse_expression(ts)
            ts.expect_symbol(";")
            return VarDecl(kw, name.text, init, pos=_pos(tok))
        if kw in ("while", "do", "for"):
            return _parse_loop(ts, None, None)
        if ts.accept_keyword("if"):
            ts.expect_symbol("(")
            cond = parse_expression(ts)
            ts.expect_symbol(")")
            then_body = _parse_branch(ts)
            else_body: tuple[Statement, ...] = ()
            if ts.accept_keyword("else"):
                else_body = _parse_branch(ts)
            return If(cond, then_body, else_body, pos=_pos(tok))
        if ts.accept_keyword("break"):
            label = ts.next().text if ts.peek().kind == "ident" else None
            ts.expect_symbol(";")
            return Break(label, pos=_pos(tok))
        if ts.accept_keyword("continue"):
            label = ts.next().text if ts.peek().kind == "ident" else None
            ts.expect_symbol(";")
            return Continue(label, pos=_pos(tok))
        if ts.accept_keyword("return"):
            value = None if ts.at_symbol(";") else parse_expression(ts)
            ts.expect_symbol(";")
            return Return(value, pos=_pos(tok))
        if ts.accept_keyword("throw"):
            value = parse_expression(ts)
            ts.expect_symbol(";")
            return Throw(value, pos=_pos(tok))
        if ts.accept_keyword("try"):
            body = _parse_braced(ts)
            catch = None
            if ts.accept_keyword("catch"):
                ts.expect_symbol("(")
                binder = ts.expect_ident()
                ts.expect_symbol(")")
                catch = CatchClause(binder.text, _parse_braced(ts))
            finally_body = None
            if ts.accept_keyword("finally"):
                finally_body = _parse_braced(ts)
            if catch is None and finally_body is None:
                raise LangError("try requires a catch or finally clause", tok.line, tok.col)
            return Try(body, catch, finally_body, pos=_pos(tok))
        if ts.accept_keyword("attempt"):
            label = None
            if ts.peek().kind == "ident":
                label = ts.expect_ident().text
                ts.expect_symbol(":")
            body = _parse_braced(ts)
            ts.expect_keyword("continuation")
            continuation = _parse_braced(ts)
            return Attempt(label, body, continuation, pos=_pos(tok))
        if ts.accept_keyword("halt"):
            ts.expect_symbol(";")
            return Halt(pos=_pos(tok))
    raise LangError(f"expected statement, found {tok.text or 'end of input'!r}", tok.line, tok.col)


def _parse_params(ts: TokenStream) -> tuple[Param, ...]:
    if not ts.at_keyword("params"):
        return ()
    ts.next()
    ts.expect_symbol("(")
    params = []
    if not ts.at_symbol(")"):
        while True:
            t = ts.peek()
            if not (t.kind == "keyword" and t.text in _TYPE_KEYWORDS):
                raise LangError("expected parameter type", t.line, t.col)
            ts.next()
            name = ts.expect_ident()
            params.append(Param(name.text, t.text))
            if not ts.accept_symbol(","):
                break
    ts.expect_symbol(")")
    ts.expect_symbol(";")
    return tuple(params)


def parse_fragment(text: str, allow_extended: bool = True) -> Fragment:
    """Parse and statically check a program fragment."""
    ts = TokenStream(tokenize(text))
    params = _parse_params(ts)
    body = _parse_statement_list(ts)
    ts.expect_eof()
    fragment = Fragment(params, body)
    check_fragment(fragment, allow_extended=allow_extended)
    return fragment


# ------------------------------------------------------------------
# Static checker
# ------------------------------------------------------------------


class _CheckContext:
    def __init__(self, params: tuple[Param, ...]):
        seen = set()
        for p in params:
            if p.name in seen:
                raise LangError(f"duplicate parameter {p.name!r}")
            seen.add(p.name)
        self.param_env = {p.name: p.vtype for p in params}
        self.scopes: list[dict[str, str]] = [{}]
        self.labels: list[tuple[str, str]] = []  # (name, kind)
        self.catch_depth = 0  # enclosing loop/attempt bodies for bare break/continue

    def lookup(self, name: str) -> str | None:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return self.param_env.get(name)

    def declare(self, name: str, vtype: str, pos: Pos | None):
        for scope in self.scopes:
            if name in scope:
                raise LangError(f"variable {name!r} already declared in an enclosing scope",
                                pos.line if pos else None, pos.col if pos else None)
        self.scopes[-1][name] = vtype

    def label_kind(self, name: str) -> str | None:
        for lname, kind in reversed(self.labels):
            if lname == name:
                return kind
        return None


def _err(msg: str, pos: Pos | None) -> LangError:
    return LangError(msg, pos.line if pos else None, pos.col if pos else None)


def expr_type(expr: Expr, lookup) -> str:
    """Infer an expression's type; `lookup(name) -> type | None`."""
    if isinstance(expr, IntLit):
        return INT
    if isinstance(expr, BoolLit):
        return BOOLEAN
    if isinstance(expr, Var):
        t = lookup(expr.name)
        if t is None:
            raise _err(f"use of undeclared variable {expr.name!r}", expr.pos)
        return t
    if isinstance(expr, Unary):
        t = expr_type(expr.operand, lookup)
        want = INT if expr.op == "-" else BOOLEAN
        if t != want:
            raise LangError(f"operator {expr.op!r} needs a {want} operand, got {t}")
        return want
    if isinstance(expr, Binary):
        lt = expr_type(expr.left, lookup)
        rt = expr_type(expr.right, lookup)
        op = expr.op
        if op in ARITH_OPS:
            if lt != INT or rt != INT:
                raise LangError(f"operator {op!r} needs int operands, got {lt} and {rt}")
            return INT
        if op in CMP_OPS:
            if lt != INT or rt != INT:
                raise LangError(f"operator {op!r} needs int operands, got {lt} and {rt}")
            return BOOLEAN
        if op in EQ_OPS:
            if lt != rt:
                raise LangError(f"operator {op!r} needs operands of one type, got {lt} and {rt}")
            return BOOLEAN
        if op in BOOL_OPS:
            if lt != BOOLEAN or rt != BOOLEAN:
                raise LangError(f"operator {op!r} needs boolean operands, got {lt} and {rt}")
            return BOOLEAN
    raise LangError(f"malformed expression node {expr!r}")


def check_fragment(fragment: Fragment, allow_extended: bool = True) -> None:
    ctx = _CheckContext(fragment.params)
    _check_list(fragment.body, ctx, allow_extended)


def _check_expr(expr: Expr, ctx: _CheckContext, want: str | None, pos: Pos | None) -> str:
    t = expr_type(expr, ctx.lookup)
    if want is not None and t != want:
        raise _err(f"expected a {want} expression, got {t}", pos)
    return t


def _check_list(stmts, ctx: _CheckContext, ext: bool) -> None:
    for st in stmts:
        _check_stmt(st, ctx, ext)


def _in_new_scope(body, ctx: _CheckContext, ext: bool) -> None:
    ctx.scopes.append({})
    _check_list(body, ctx, ext)
    ctx.scopes.pop()


def _with_label(label, kind, ctx: _CheckContext, pos, fn) -> None:
    if label is not None:
        if ctx.label_kind(label) is not None:
            raise _err(f"label {label!r} already in scope", pos)
        ctx.labels.append((label, kind))
    fn()
    if label is not None:
        ctx.labels.pop()


def _check_stmt(st: Statement, ctx: _CheckContext, ext: bool) -> None:
    if isinstance(st, Skip):
        return
    if isinstance(st, Assign):
        t = ctx.lookup(st.target)
        if t is None:
            raise _err(f"assignment to undeclared variable {st.target!r}", st.pos)
        _check_expr(st.value, ctx, t, st.pos)
        return
    if isinstance(st, VarDecl):
        _check_expr(st.init, ctx, st.vtype, st.pos)
        ctx.declare(st.name, st.vtype, st.pos)
        return
    if isinstance(st, Block):
        _with_label(st.label, "block", ctx, st.pos,
                    lambda: _in_new_scope(st.body, ctx, ext))
        return
    if isinstance(st, If):
        _check_expr(st.cond, ctx, BOOLEAN, st.pos)
        _in_new_scope(st.then_body, ctx, ext)
        _in_new_scope(st.else_body, ctx, ext)
        return
    if isinstance(st, While):
        _check_expr(st.cond, ctx, BOOLEAN, st.pos)
        ctx.catch_depth += 1
        _with_label(st.label, "loop", ctx, st.pos,
                    lambda: _in_new_scope(st.body, ctx, ext))
        ctx.catch_depth -= 1
        return
    if isinstance(st, DoWhile):
        _check_expr(st.cond, ctx, BOOLEAN, st.pos)
        ctx.catch_depth += 1
        _with_label(st.label, "loop", ctx, st.pos,
                    lambda: _in_new_scope(st.body, ctx, ext))
        ctx.catch_depth -= 1
        return
    if isinstance(st, For):
        def check_for():
            ctx.scopes.append({})
            for item in st.init:
                if not isinstance(item, (VarDecl, Assign)):
                    raise _err("for initializer entries must be declarations or assignments", st.pos)
                _check_stmt(item, ctx, ext)
            if st.guard is not None:
                _check_expr(st.guard, ctx, BOOLEAN, st.pos)
            for item in st.update:
                if not isinstance(item, Assign):
                    raise _err("for update entries must be assignments", st.pos)
                _check_stmt(item, ctx, ext)
            _in_new_scope(st.body, ctx, ext)
            ctx.scopes.pop()

        ctx.catch_depth += 1
        _with_label(st.label, "loop", ctx, st.pos, check_for)
        ctx.catch_depth -= 1
        return
    if isinstance(st, Break):
        if st.label is None:
            if ctx.catch_depth == 0:
                raise _err("unlabeled break outside loop or attempt", st.pos)
        elif ctx.label_kind(st.label) is None:
            raise _err(f"break to unbound label {st.label!r}", st.pos)
        return
    if isinstance(st, Continue):
        if st.label is None:
            if ctx.catch_depth == 0:
                raise _err("unlabeled continue outside loop or attempt", st.pos)
        else:
            kind = ctx.label_kind(st.label)
            if kind is None:
                raise _err(f"continue to unbound label {st.label!r}", st.pos)
            if kind == "block":
                raise _err(f"continue label {st.label!r} must name a loop or attempt", st.pos)
        return
    if isinstance(st, Return):
        if st.value is not None:
            _check_expr(st.value, ctx, None, st.pos)
        return
    if isinstance(st, Throw):
        _check_expr(st.value, ctx, INT, st.pos)
        return
    if isinstance(st, Try):
        if st.catch is None and st.finally_body is None:
            raise _err("try requires a catch or finally clause", st.pos)
        _in_new_scope(st.body, ctx, ext)
        if st.catch is not None:
            ctx.scopes.append({})
            ctx.declare(st.catch.binder, INT, st.pos)
            _check_list(st.catch.body, ctx, ext)
            ctx.scopes.pop()
        if st.finally_body is not None:
            _in_new_scope(st.finally_body, ctx, ext)
        return
    if isinstance(st, Attempt):
        if not ext:
            raise _err("attempt-continuation is an extended statement (not plain source)", st.pos)
        ctx.catch_depth += 1
        _with_label(st.label, "attempt", ctx, st.pos,
                    lambda: _in_new_scope(st.body, ctx, ext))
        ctx.catch_depth -= 1
        # The label and the catch region do not extend over the continuation.
        _in_new_scope(st.continuation, ctx, ext)
        return
    if isinstance(st, Halt):
        if not ext:
            raise _err("halt is an extended statement (not plain source)", st.pos)
        return
    raise _err(f"malformed statement node {st!r}", None)
