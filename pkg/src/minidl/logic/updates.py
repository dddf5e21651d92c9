"""Update application and parallel composition.

Parallel updates are simultaneous: `{x := 1 || y := x}` binds y to the old
x. Composition `compose(outer, inner)` denotes running outer first, then
inner; it is realized syntactically as `outer || <outer>(inner)` with
last-wins normalization, so composed updates stay in normal form.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .evaluate import eval_term, fold_term
from .syntax import (
    And, Atom, Box, Cmp, Formula, Imp, Not, Or, TBin, TIte, TUn, TVar,
    Term, Truth, UpdApp, Update, normalize_update,
)


def subst_term(t: Term, mapping: Mapping[str, Term]) -> Term:
    """Simultaneous substitution of variables by terms."""
    if isinstance(t, TVar):
        return mapping.get(t.name, t)
    if isinstance(t, TUn):
        return TUn(t.op, subst_term(t.operand, mapping))
    if isinstance(t, TBin):
        return TBin(t.op, subst_term(t.left, mapping), subst_term(t.right, mapping))
    if isinstance(t, TIte):
        return TIte(subst_term(t.cond, mapping), subst_term(t.then, mapping),
                    subst_term(t.els, mapping))
    return t


def apply_update_term(u: Update, t: Term) -> Term:
    """<U>t: substitute each updated variable by its bound term
    (simultaneously), then constant-fold."""
    if u.is_identity:
        return fold_term(t)
    return fold_term(subst_term(t, u.mapping()))


def compose_updates(outer: Update, inner: Update) -> Update:
    """<outer>inner, normalized: outer || (inner with values rewritten by
    outer), duplicates resolved rightmost."""
    if outer.is_identity:
        return inner
    if inner.is_identity:
        return outer
    rewritten = tuple((x, apply_update_term(outer, t)) for x, t in inner.bindings)
    return normalize_update(outer.bindings + rewritten)


def parallel_updates(left: Update, right: Update) -> Update:
    """left || right with last-wins conflict resolution."""
    return normalize_update(left.bindings + right.bindings)


def apply_update_formula(u: Update, f: Formula) -> Formula:
    """<U>f: syntactic application on non-modal subformulae; on a modality
    the application node is kept unexpanded for symbolic execution to
    consume; nested applications compose."""
    if u.is_identity and not isinstance(f, UpdApp):
        return f
    if isinstance(f, Truth):
        return f
    if isinstance(f, Atom):
        if u.is_identity:
            return f
        # Term-level folding only: `1 != 0` stays a visible atom, the
        # prover's closing step decides literal truth.
        return Atom(fold_term(subst_term(f.term, u.mapping())))
    if isinstance(f, Cmp):
        if u.is_identity:
            return f
        mapping = u.mapping()
        return Cmp(f.op, fold_term(subst_term(f.left, mapping)),
                   fold_term(subst_term(f.right, mapping)))
    if isinstance(f, Not):
        return Not(apply_update_formula(u, f.inner))
    if isinstance(f, And):
        return And(apply_update_formula(u, f.left), apply_update_formula(u, f.right))
    if isinstance(f, Or):
        return Or(apply_update_formula(u, f.left), apply_update_formula(u, f.right))
    if isinstance(f, Imp):
        return Imp(apply_update_formula(u, f.left), apply_update_formula(u, f.right))
    if isinstance(f, Box):
        return UpdApp(u, f) if not u.is_identity else f
    if isinstance(f, UpdApp):
        composed = compose_updates(u, f.update)
        if composed.is_identity:
            return f.inner
        return UpdApp(composed, f.inner)
    raise TypeError(f"not a formula: {f!r}")


def expand_updates(f: Formula) -> Formula:
    """Push every pending update application into its (modality-free)
    target; used before first-order goal closing."""
    if isinstance(f, UpdApp):
        return apply_update_formula(f.update, expand_updates(f.inner))
    if isinstance(f, Not):
        return Not(expand_updates(f.inner))
    if isinstance(f, And):
        return And(expand_updates(f.left), expand_updates(f.right))
    if isinstance(f, Or):
        return Or(expand_updates(f.left), expand_updates(f.right))
    if isinstance(f, Imp):
        return Imp(expand_updates(f.left), expand_updates(f.right))
    return f


def state_transform(u: Update, state: Mapping[str, object]) -> dict[str, object]:
    """The state after the update: all bindings evaluated in the old state
    simultaneously."""
    new = dict(state)
    for x, t in u.bindings:
        new[x] = eval_term(t, state)
    return new
