"""atomlog: three-valued matrix validity, atomic entailment, arithmetic
axiom classification and Hilbert-style proof checking.

The core library is pure and immutable throughout; `atomlog.service`
wraps it in a FastAPI app and `atomlog.cli` is a thin client of that
service.
"""

from . import arithmetic, entailment, errors, gen, matrix, proofcheck, report, syntax, translate

__version__ = "0.1.0"

__all__ = [
    "arithmetic",
    "entailment",
    "errors",
    "gen",
    "matrix",
    "proofcheck",
    "report",
    "syntax",
    "translate",
    "__version__",
]
