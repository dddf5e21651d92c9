"""Mini-language: AST, concrete syntax, and fragment decomposition."""

from .analysis import (
    collect_types, fresh_flag, fresh_name, guard_equivalent, identifiers,
    statement_equivalents,
)
from .decompose import (
    ActiveDecomposition, AttemptOpen, BlockOpen, EmptyDecomposition, Frame,
    TryOpen, decompose, decompose_statements,
)
from .nodes import (
    BOOLEAN, INT, Assign, Attempt, Binary, Block, BoolLit, Break,
    CatchClause, Continue, DoWhile, Expr, For, Fragment, Halt, If, IntLit,
    Param, Pos, Return, Skip, Statement, Throw, Try, Unary, Var, VarDecl,
    While, LOOP_TYPES,
)
from .parser import check_fragment, expr_type, parse_expression, parse_fragment
from .printer import expr_text, fragment_text, statement_text, statements_text

__all__ = [
    "ActiveDecomposition", "Assign", "Attempt", "AttemptOpen", "BOOLEAN",
    "Binary", "Block", "BlockOpen", "BoolLit", "Break", "CatchClause",
    "Continue", "DoWhile", "EmptyDecomposition", "Expr", "For", "Fragment",
    "Frame", "Halt", "INT", "If", "IntLit", "LOOP_TYPES", "Param", "Pos",
    "Return", "Skip", "Statement", "Throw", "Try", "TryOpen", "Unary",
    "Var", "VarDecl", "While", "check_fragment", "collect_types",
    "decompose", "decompose_statements", "expr_text", "expr_type",
    "fragment_text", "fresh_flag", "fresh_name", "guard_equivalent",
    "identifiers", "parse_expression", "parse_fragment",
    "statement_equivalents", "statement_text", "statements_text",
]
