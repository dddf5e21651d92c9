"""Decomposition of a fragment into non-active prefix, active statement,
and the rest of the program.

The decomposition is a zipper: descending into the first statement of each
non-empty block/try/attempt records an opening frame (the composite's
metadata plus the statements following it in the enclosing list) until a
non-composite first statement is reached. A composite with an empty body is
itself the active statement. Reassembly is the exact inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MiniDlError
from .nodes import (
    Attempt, Block, CatchClause, Fragment, Statement, Try,
)
from .printer import statements_text


@dataclass(frozen=True)
class BlockOpen:
    label: str | None


@dataclass(frozen=True)
class TryOpen:
    catch: CatchClause | None
    finally_body: tuple[Statement, ...] | None


@dataclass(frozen=True)
class AttemptOpen:
    label: str | None
    continuation: tuple[Statement, ...]


PrefixElement = BlockOpen | TryOpen | AttemptOpen


@dataclass(frozen=True)
class Frame:
    opener: PrefixElement
    after: tuple[Statement, ...]  # statements following the composite in its enclosing list


@dataclass(frozen=True)
class EmptyDecomposition:
    """The fragment has no statements: a modality with an empty program."""


@dataclass(frozen=True)
class ActiveDecomposition:
    frames: tuple[Frame, ...]  # outermost first
    active: Statement
    tail: tuple[Statement, ...]  # statements after the active one, innermost body

    @property
    def prefix(self) -> tuple[PrefixElement, ...]:
        return tuple(f.opener for f in self.frames)

    def with_active_replaced(self, replacement: tuple[Statement, ...]) -> tuple[Statement, ...]:
        """Reassemble with the active statement replaced by a splice."""
        return _rebuild(self.frames, replacement + self.tail)

    def reassemble(self) -> tuple[Statement, ...]:
        return self.with_active_replaced((self.active,))

    def rest_text(self) -> str:
        """Human-readable rendering of the continuation context (omega)."""
        parts = [statements_text(self.tail, compact=True)] if self.tail else []
        for frame in reversed(self.frames):
            opener = frame.opener
            if isinstance(opener, AttemptOpen):
                cont = statements_text(opener.continuation, compact=True)
                parts.append("} continuation { " + cont + " }")
            elif isinstance(opener, TryOpen):
                closer = "}"
                if opener.catch is not None:
                    closer += (" catch (" + opener.catch.binder + ") { "
                               + statements_text(opener.catch.body, compact=True) + " }")
                if opener.finally_body is not None:
                    closer += (" finally { "
                               + statements_text(opener.finally_body, compact=True) + " }")
                parts.append(closer)
            else:
                parts.append("}")
            if frame.after:
                parts.append(statements_text(frame.after, compact=True))
        return " ".join(p for p in parts if p)


def _rebuild(frames: tuple[Frame, ...], current: tuple[Statement, ...]) -> tuple[Statement, ...]:
    for frame in reversed(frames):
        opener = frame.opener
        if isinstance(opener, BlockOpen):
            node: Statement = Block(opener.label, current)
        elif isinstance(opener, TryOpen):
            node = Try(current, opener.catch, opener.finally_body)
        else:
            node = Attempt(opener.label, current, opener.continuation)
        current = (node,) + frame.after
    return current


def decompose_statements(stmts: tuple[Statement, ...]) -> ActiveDecomposition | EmptyDecomposition:
    if not stmts:
        return EmptyDecomposition()
    frames: list[Frame] = []
    current = stmts
    while True:
        first = current[0]
        if isinstance(first, Block) and first.body:
            frames.append(Frame(BlockOpen(first.label), current[1:]))
            current = first.body
        elif isinstance(first, Try) and first.body:
            frames.append(Frame(TryOpen(first.catch, first.finally_body), current[1:]))
            current = first.body
        elif isinstance(first, Attempt) and first.body:
            frames.append(Frame(AttemptOpen(first.label, first.continuation), current[1:]))
            current = first.body
        else:
            return ActiveDecomposition(tuple(frames), first, current[1:])


def decompose(fragment: Fragment) -> ActiveDecomposition | EmptyDecomposition:
    """Split a fragment into prefix/active/rest. The active statement is
    never a block/try/attempt opening; an empty fragment yields the
    distinguished empty decomposition."""
    if not isinstance(fragment, Fragment):
        raise MiniDlError("decompose expects a Fragment")
    return decompose_statements(fragment.body)
