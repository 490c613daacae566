"""Formula sorts, parsing, printing and the syntactic operators."""

from .nodes import (
    Add,
    ArithFormula,
    ArithTerm,
    Atom,
    Bin,
    BINARY_CONNECTIVES,
    Connective,
    Const,
    Eq,
    Exists,
    FOFormula,
    FOTerm,
    Forall,
    Formula,
    Fun,
    Lt,
    Mul,
    Neg,
    One,
    Pred,
    PropFormula,
    PropVar,
    Quantifier,
    Succ,
    Term,
    Var,
    conj,
    disj,
    equiv,
    impl,
    sort_of,
    subformulas,
)
from .ops import (
    atoms,
    free_for,
    free_vars,
    predicate_letters,
    sorted_atoms,
    star,
    substitute_term,
    term_vars,
    universal_closure,
)
from .parser import parse, parse_arith, parse_fo, parse_prop
from .printer import render, render_term

__all__ = [
    "Add", "ArithFormula", "ArithTerm", "Atom", "Bin", "BINARY_CONNECTIVES",
    "Connective", "Const", "Eq", "Exists", "FOFormula", "FOTerm", "Forall",
    "Formula", "Fun", "Lt", "Mul", "Neg", "One", "Pred", "PropFormula",
    "PropVar", "Quantifier", "Succ", "Term", "Var",
    "conj", "disj", "equiv", "impl", "sort_of", "subformulas",
    "atoms", "free_for", "free_vars", "predicate_letters", "sorted_atoms",
    "star", "substitute_term", "term_vars", "universal_closure",
    "parse", "parse_arith", "parse_fo", "parse_prop", "render", "render_term",
]
