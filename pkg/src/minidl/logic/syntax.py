"""Terms, first-order formulae, box modalities, and updates.

Terms are total: division and modulus by zero denote 0 at the logic level
(underspecification); the program-level exception path is the calculus's
business. Updates are kept in normal form: a flat list of elementary
bindings in first-occurrence order with the rightmost binding winning.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import LogicError
from ..lang.nodes import BOOLEAN, INT, Fragment
from ..lang.printer import fragment_text


# ------------------------------------------------------------------
# Terms
# ------------------------------------------------------------------


class Term:
    """Base class for terms."""

    @property
    def sort(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class TInt(Term):
    value: int

    @property
    def sort(self) -> str:
        return INT


@dataclass(frozen=True)
class TBool(Term):
    value: bool

    @property
    def sort(self) -> str:
        return BOOLEAN


@dataclass(frozen=True)
class TVar(Term):
    name: str
    var_sort: str

    @property
    def sort(self) -> str:
        return self.var_sort


_INT_OPS = ("+", "-", "*", "/", "%")
_BOOL_RESULT_OPS = ("<", "<=", ">", ">=", "==", "!=", "&&", "||")


@dataclass(frozen=True)
class TUn(Term):
    op: str  # "-" or "!"
    operand: Term

    @property
    def sort(self) -> str:
        return INT if self.op == "-" else BOOLEAN


@dataclass(frozen=True)
class TBin(Term):
    op: str
    left: Term
    right: Term

    @property
    def sort(self) -> str:
        return INT if self.op in _INT_OPS else BOOLEAN


@dataclass(frozen=True)
class TIte(Term):
    """Conditional term `ite(cond, then, els)`."""

    cond: Term
    then: Term
    els: Term

    @property
    def sort(self) -> str:
        return self.then.sort


# ------------------------------------------------------------------
# Updates
# ------------------------------------------------------------------


@dataclass(frozen=True)
class Update:
    """Normalized parallel update: at most one binding per target, targets
    in first-occurrence order, rightmost binding wins at construction."""

    bindings: tuple[tuple[str, Term], ...]

    @staticmethod
    def identity() -> "Update":
        return Update(())

    @staticmethod
    def elementary(target: str, value: Term) -> "Update":
        return Update(((target, value),))

    @staticmethod
    def of(*pairs: tuple[str, Term]) -> "Update":
        return normalize_update(pairs)

    @property
    def is_identity(self) -> bool:
        return not self.bindings

    def mapping(self) -> dict[str, Term]:
        return dict(self.bindings)


def normalize_update(pairs) -> Update:
    """Last-wins flattening preserving first-occurrence target order."""
    out: dict[str, Term] = {}
    for target, value in pairs:
        out[target] = value  # re-assignment keeps insertion order, value updated
    return Update(tuple(out.items()))


# ------------------------------------------------------------------
# Formulae
# ------------------------------------------------------------------


class Formula:
    """Base class for formulae."""


@dataclass(frozen=True)
class Truth(Formula):
    value: bool


@dataclass(frozen=True)
class Atom(Formula):
    """A boolean-sorted term used as an atomic formula."""

    term: Term

    def __post_init__(self):
        if self.term.sort != BOOLEAN:
            raise LogicError(f"atom requires a boolean term, got {self.term!r}")


@dataclass(frozen=True)
class Cmp(Formula):
    """Equality/inequality atom. `==`/`!=` accept either sort (both sides
    alike); `<`/`<=`/`>`/`>=` are over int terms."""

    op: str
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    inner: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    """JavaDL-style box modality: the postcondition holds in every
    normally-completing or halting final state of the fragment."""

    fragment: Fragment
    post: Formula


@dataclass(frozen=True)
class UpdApp(Formula):
    """An update application left unexpanded on a formula (always one
    containing a modality; elsewhere updates are substituted away)."""

    update: Update
    inner: Formula


TRUE = Truth(True)
FALSE = Truth(False)


# ------------------------------------------------------------------
# Printing
# ------------------------------------------------------------------

_TERM_PRECEDENCE = {
    "||": 1, "&&": 2, "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5, "*": 6, "/": 6, "%": 6,
}


def term_text(t: Term, parent_prec: int = 0) -> str:
    if isinstance(t, TInt):
        return str(t.value)
    if isinstance(t, TBool):
        return "true" if t.value else "false"
    if isinstance(t, TVar):
        return t.name
    if isinstance(t, TUn):
        inner = term_text(t.operand, 7)
        sep = " " if t.op == "-" and inner.startswith("-") else ""
        text = f"{t.op}{sep}{inner}"
        return f"({text})" if parent_prec > 7 else text
    if isinstance(t, TBin):
        prec = _TERM_PRECEDENCE[t.op]
        text = f"{term_text(t.left, prec)} {t.op} {term_text(t.right, prec + 1)}"
        return f"({text})" if parent_prec > prec else text
    if isinstance(t, TIte):
        return f"ite({term_text(t.cond)}, {term_text(t.then)}, {term_text(t.els)})"
    raise LogicError(f"not a term: {t!r}")


def update_text(u: Update) -> str:
    if u.is_identity:
        return "{}"
    inner = " || ".join(f"{x} := {term_text(t)}" for x, t in u.bindings)
    return "{" + inner + "}"


_FORMULA_PRECEDENCE = {"imp": 1, "or": 2, "and": 3, "not": 4}


def formula_text(f: Formula, parent_prec: int = 0) -> str:
    if isinstance(f, Truth):
        return "true" if f.value else "false"
    if isinstance(f, Atom):
        return term_text(f.term, 5)
    if isinstance(f, Cmp):
        return f"{term_text(f.left, 5)} {f.op} {term_text(f.right, 5)}"
    if isinstance(f, Not):
        text = f"!({formula_text(f.inner, 0)})" if isinstance(f.inner, Cmp) \
            else f"!{formula_text(f.inner, 4)}"
        return text
    if isinstance(f, And):
        text = f"{formula_text(f.left, 3)} && {formula_text(f.right, 4)}"
        return f"({text})" if parent_prec > 3 else text
    if isinstance(f, Or):
        text = f"{formula_text(f.left, 2)} || {formula_text(f.right, 3)}"
        return f"({text})" if parent_prec > 2 else text
    if isinstance(f, Imp):
        text = f"{formula_text(f.left, 2)} -> {formula_text(f.right, 1)}"
        return f"({text})" if parent_prec > 1 else text
    if isinstance(f, Box):
        prog = fragment_text(Fragment((), f.fragment.body), compact=True)
        return f"[ {prog} ]({formula_text(f.post)})"
    if isinstance(f, UpdApp):
        return f"{update_text(f.update)}({formula_text(f.inner)})"
    raise LogicError(f"not a formula: {f!r}")
