"""AST for the mini-language: a Java-like statement subset plus the two
extended statements `attempt ... continuation ...` and `halt;`.

All nodes are frozen dataclasses; structural equality ignores source
positions. Statement bodies are tuples of statements: brace groups owned by
a composite statement (loop bodies, if branches, try/attempt blocks) are
stored as the bare tuple, so `while (e) x = 1;` and `while (e) { x = 1; }`
parse to the same tree. A standalone (possibly labeled) block is its own
Block node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

INT = "int"
BOOLEAN = "boolean"

# Unary operator symbols.
NEG = "-"
NOT = "!"

ARITH_OPS = ("+", "-", "*", "/", "%")
CMP_OPS = ("<", "<=", ">", ">=")
EQ_OPS = ("==", "!=")
BOOL_OPS = ("&&", "||")


@dataclass(frozen=True)
class Pos:
    line: int
    col: int


def _pos_field():
    return field(default=None, compare=False, repr=False)


# ------------------------------------------------------------------
# Expressions. Pure by construction: no assignment, call or increment
# forms exist, so evaluation never changes state. Division/modulus by
# zero is the only abrupt event an expression can cause.
# ------------------------------------------------------------------


class Expr:
    """Base class for expressions."""


@dataclass(frozen=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True)
class Var(Expr):
    name: str
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Unary(Expr):
    op: str  # "-" or "!"
    operand: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


# ------------------------------------------------------------------
# Statements.
# ------------------------------------------------------------------


class Statement:
    """Base class for statements."""


@dataclass(frozen=True)
class Skip(Statement):
    """The empty statement `;`."""

    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Assign(Statement):
    target: str
    value: Expr
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class VarDecl(Statement):
    """Local declaration with mandatory initializer (definite assignment)."""

    vtype: str  # INT or BOOLEAN
    name: str
    init: Expr
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Block(Statement):
    """A standalone `{ ... }`, optionally labeled.

    A labeled block catches exactly `break <label>`; unlabeled breaks and
    all continues pass through.
    """

    label: str | None
    body: tuple[Statement, ...]
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class If(Statement):
    cond: Expr
    then_body: tuple[Statement, ...]
    else_body: tuple[Statement, ...]
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class While(Statement):
    label: str | None
    cond: Expr
    body: tuple[Statement, ...]
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class DoWhile(Statement):
    label: str | None
    body: tuple[Statement, ...]
    cond: Expr
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class For(Statement):
    """`for (init; guard; update) body`.

    Invariants: init entries are VarDecl or Assign; update entries are
    Assign only; guard absent means `true`. The update runs after normal
    body completion and after a matching continue, not after a matching
    break.
    """

    label: str | None
    init: tuple[Statement, ...]
    guard: Expr | None
    update: tuple[Assign, ...]
    body: tuple[Statement, ...]
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Break(Statement):
    label: str | None
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Continue(Statement):
    label: str | None
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Return(Statement):
    value: Expr | None
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Throw(Statement):
    """`throw e;` with e an int expression (thrown values are plain ints,
    or the division fault token at runtime)."""

    value: Expr
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class CatchClause:
    binder: str
    body: tuple[Statement, ...]


@dataclass(frozen=True)
class Try(Statement):
    """`try { body } [catch (v) { ... }] [finally { ... }]`.

    At least one of catch/finally is present. The single catch clause is a
    catch-all binding the thrown value. A finally that completes abruptly
    supersedes the body's completion reason. halt bypasses finally.
    """

    body: tuple[Statement, ...]
    catch: CatchClause | None
    finally_body: tuple[Statement, ...] | None
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Attempt(Statement):
    """Extended statement `attempt [l:] { body } continuation { ... }`.

    The continuation runs exactly when the body completes normally or via
    a matching continue; a matching break exits the whole statement
    normally; every other completion propagates without running the
    continuation. The label scopes over the body only, not the
    continuation.
    """

    label: str | None
    body: tuple[Statement, ...]
    continuation: tuple[Statement, ...]
    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Halt(Statement):
    """Extended statement `halt;`: terminates the entire fragment at once,
    bypassing finally blocks."""

    pos: Pos | None = _pos_field()


@dataclass(frozen=True)
class Param:
    name: str
    vtype: str


@dataclass(frozen=True)
class Fragment:
    """A legal program fragment: declared parameters + statement list.

    Well-formedness (enforced by the checker): every variable read is a
    parameter or a previously declared local in scope, labels are bound by
    an enclosing labeled statement of the matching kind, and static types
    agree.
    """

    params: tuple[Param, ...]
    body: tuple[Statement, ...]

    def param_types(self) -> dict[str, str]:
        return {p.name: p.vtype for p in self.params}


LOOP_TYPES = (While, DoWhile, For)

EXTENDED_TYPES = (Attempt, Halt)
