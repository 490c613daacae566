"""Logical matrices, validity decision and finite model evaluation."""

from .core import (
    DEFAULT_ATOM_CAP,
    M2,
    MD,
    MDP,
    LogicalMatrix,
    Valuation,
    Verdict,
    atom_cap,
    builtin,
    delta_expand,
    eval_formula,
    mp_preserving,
    table_dump,
    validity,
)
from .finite import FiniteStructure, fo_countermodel_search, fo_eval_finite, structures, symbols_of

__all__ = [
    "DEFAULT_ATOM_CAP", "M2", "MD", "MDP", "LogicalMatrix", "Valuation",
    "Verdict", "atom_cap", "builtin", "delta_expand", "eval_formula",
    "mp_preserving", "table_dump", "validity",
    "FiniteStructure", "fo_countermodel_search", "fo_eval_finite",
    "structures", "symbols_of",
]
