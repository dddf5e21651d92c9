"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MiniDlError(Exception):
    """Base class for all package errors."""


class LangError(MiniDlError):
    """Syntax or static-semantics error in a program fragment."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class LogicError(MiniDlError):
    """Misuse of terms/formulae/updates (e.g. evaluating a modality)."""


class EngineError(MiniDlError):
    """Interpreter-level hard error: a programming bug, never a thrown
    value of the interpreted program (unbound variable, operation on the
    arithmetic fault token)."""


class RuleNotApplicable(MiniDlError):
    """The requested calculus rule does not match the goal's focus."""


class ConfigError(MiniDlError):
    """Bad problem file, CLI usage, or verification configuration."""
