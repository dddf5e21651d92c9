"""Terms, formulae, box modalities, and parallel updates."""

from .convert import expr_to_formula, expr_to_term, formula_to_term, term_to_formula
from .evaluate import (
    eval_formula, eval_term, fold_formula, fold_term, formula_vars,
    term_vars, trunc_div, trunc_mod,
)
from .parser import parse_formula, parse_term
from .syntax import (
    And, Atom, Box, Cmp, FALSE, Formula, Imp, Not, Or, TBin, TBool, TIte,
    TInt, TRUE, TUn, TVar, Term, Truth, UpdApp, Update, formula_text,
    normalize_update, term_text, update_text,
)
from .updates import (
    apply_update_formula, apply_update_term, compose_updates,
    expand_updates, parallel_updates, state_transform, subst_term,
)

__all__ = [
    "And", "Atom", "Box", "Cmp", "FALSE", "Formula", "Imp", "Not", "Or",
    "TBin", "TBool", "TIte", "TInt", "TRUE", "TUn", "TVar", "Term",
    "Truth", "UpdApp", "Update", "apply_update_formula",
    "apply_update_term", "compose_updates", "eval_formula", "eval_term",
    "expand_updates", "expr_to_formula", "expr_to_term", "fold_formula",
    "fold_term", "formula_text", "formula_to_term", "formula_vars",
    "normalize_update", "parallel_updates", "parse_formula", "parse_term",
    "state_transform", "subst_term", "term_text", "term_to_formula",
    "term_vars", "trunc_div", "trunc_mod", "update_text",
]
