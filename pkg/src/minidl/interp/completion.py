"""Completion reasons, completion-type pattern sets, and outcomes.

A terminated execution has exactly one completion reason. The label-indexed
completion types map onto Completion as: an unlabeled break is
Completion("break", None), `break l` is Completion("break", "l"), and
likewise for continue. Pattern sets describe the type subscripts of typed
modalities; `Brk(l)` is {break, break_l} and `Cnt(l)` is
{normal, continue, continue_l}.
"""

from __future__ import annotations

from dataclasses import dataclass

NORMAL = "normal"
BREAK = "break"
CONTINUE = "continue"
RETURN = "return"
THROWN = "thrown"
HALT = "halt"


class _ArithFault:
    """The distinguished thrown value for division/modulus by zero.

    Supports identity equality only; arithmetic on it is an interpreter
    hard error (no well-typed program reads it into an operation other
    than ==/!=).
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "arith_fault"


ARITH_FAULT = _ArithFault()


class _AnyLabel:
    def __repr__(self):
        return "<any label>"


ANY_LABEL = _AnyLabel()


@dataclass(frozen=True)
class Completion:
    kind: str
    label: str | None = None  # break/continue only
    value: object = None  # return (None for bare) / thrown payload

    def describe(self) -> str:
        if self.kind in (BREAK, CONTINUE):
            return f"{self.kind} {self.label}" if self.label else self.kind
        if self.kind == RETURN:
            return f"return {self.value}" if self.value is not None else "return"
        if self.kind == THROWN:
            return f"thrown({self.value!r})"
        return self.kind


def normal() -> Completion:
    return Completion(NORMAL)


def brk(label: str | None = None) -> Completion:
    return Completion(BREAK, label)


def cont(label: str | None = None) -> Completion:
    return Completion(CONTINUE, label)


def ret(value=None) -> Completion:
    return Completion(RETURN, None, value)


def thrown(value) -> Completion:
    return Completion(THROWN, None, value)


def halted() -> Completion:
    return Completion(HALT)


@dataclass(frozen=True)
class TypePattern:
    """One completion type: an exact kind, with break/continue carrying a
    label (None = unlabeled, ANY_LABEL = any labeling)."""

    kind: str
    label: object = None

    def matches(self, c: Completion) -> bool:
        if c.kind != self.kind:
            return False
        if self.kind in (BREAK, CONTINUE):
            return self.label is ANY_LABEL or self.label == c.label
        return True


@dataclass(frozen=True)
class CompletionSet:
    """A set of completion types, as include-patterns minus exclusions
    (exclusions express e.g. 'every completion type except break')."""

    include: frozenset
    exclude: frozenset = frozenset()

    def contains(self, c: Completion) -> bool:
        if not any(p.matches(c) for p in self.include):
            return False
        return not any(p.matches(c) for p in self.exclude)

    def union(self, other: "CompletionSet") -> "CompletionSet":
        if self.exclude or other.exclude:
            raise ValueError("union of completion sets with exclusions")
        return CompletionSet(self.include | other.include)


def _cs(*patterns: TypePattern) -> CompletionSet:
    return CompletionSet(frozenset(patterns))


NORMAL_SET = _cs(TypePattern(NORMAL))
HALT_SET = _cs(TypePattern(HALT))
RETURN_SET = _cs(TypePattern(RETURN))
THROWN_SET = _cs(TypePattern(THROWN))

# The paper-style completion-type universe: normal plus all breaks and
# continues (return/thrown are handled separately, halt is its own
# modality).
CT_SET = _cs(TypePattern(NORMAL), TypePattern(BREAK, ANY_LABEL),
             TypePattern(CONTINUE, ANY_LABEL))
ABRUPT_SET = _cs(TypePattern(BREAK, ANY_LABEL), TypePattern(CONTINUE, ANY_LABEL))


def ct_without(*patterns: TypePattern) -> CompletionSet:
    return CompletionSet(CT_SET.include, frozenset(patterns))


def brk_family(label: str | None) -> CompletionSet:
    pats = {TypePattern(BREAK, None)}
    if label is not None:
        pats.add(TypePattern(BREAK, label))
    return CompletionSet(frozenset(pats))


def cnt_family(label: str | None) -> CompletionSet:
    pats = {TypePattern(NORMAL), TypePattern(CONTINUE, None)}
    if label is not None:
        pats.add(TypePattern(CONTINUE, label))
    return CompletionSet(frozenset(pats))


def same_loop_family(label: str | None) -> CompletionSet:
    """break/continue that a loop labeled `label` can never escape with."""
    pats = {TypePattern(BREAK, None), TypePattern(CONTINUE, None)}
    if label is not None:
        pats.add(TypePattern(BREAK, label))
        pats.add(TypePattern(CONTINUE, label))
    return CompletionSet(frozenset(pats))


def single(kind: str, label: object = None) -> CompletionSet:
    return _cs(TypePattern(kind, label))


@dataclass(frozen=True)
class Outcome:
    """Result of a concrete execution: terminated with a completion reason
    and final state, or the step budget ran out (possible divergence,
    never conflated with termination)."""

    completion: Completion | None
    state: dict | None

    @property
    def budget_exhausted(self) -> bool:
        return self.completion is None


BUDGET_EXHAUSTED = Outcome(None, None)
