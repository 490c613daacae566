"""The specific arithmetic axioms psi1..psi12 and psi14, and the induction schema."""
from __future__ import annotations

from ..errors import PreconditionError
from ..syntax import (
    Add,
    ArithFormula,
    Eq,
    Exists,
    Forall,
    Lt,
    Mul,
    Neg,
    One,
    Succ,
    Var,
    conj,
    equiv,
    impl,
    substitute_term,
)

_x1, _x2, _x3, _x4 = Var(1), Var(2), Var(3), Var(4)


def _closed(*vars_then_body):
    *vs, body = vars_then_body
    for v in reversed(vs):
        body = Forall(v, body)
    return body


_AXIOMS: dict[int, ArithFormula] = {
    1: _closed(1, Eq(_x1, _x1)),
    2: _closed(1, 2, impl(Eq(_x1, _x2), Eq(_x2, _x1))),
    3: _closed(1, 2, 3, impl(Eq(_x1, _x2), impl(Eq(_x2, _x3), Eq(_x1, _x3)))),
    4: _closed(1, 2, 3, 4, impl(Eq(_x1, _x2), impl(Eq(_x3, _x4), Eq(Add(_x1, _x3), Add(_x2, _x4))))),
    5: _closed(1, 2, 3, 4, impl(Eq(_x1, _x2), impl(Eq(_x3, _x4), Eq(Mul(_x1, _x3), Mul(_x2, _x4))))),
    6: _closed(1, 2, 3, 4, impl(Eq(_x1, _x2), impl(Eq(_x3, _x4), impl(Lt(_x1, _x3), Lt(_x2, _x4))))),
    7: _closed(1, Neg(Eq(One(), Add(_x1, One())))),
    8: _closed(1, 2, impl(Eq(Add(_x1, One()), Add(_x2, One())), Eq(_x1, _x2))),
    9: _closed(1, 2, Eq(Add(_x1, Add(_x2, One())), Add(Add(_x1, _x2), One()))),
    10: _closed(1, Eq(Mul(_x1, One()), _x1)),
    11: _closed(1, 2, Eq(Mul(_x1, Add(_x2, One())), Add(Mul(_x1, _x2), _x1))),
    12: _closed(1, 2, equiv(Lt(_x1, _x2), Exists(3, Eq(Add(_x1, _x3), _x2)))),
    14: _closed(1, 2, equiv(Exists(3, Eq(Add(Succ(_x3), _x1), _x2)), Lt(_x1, _x2))),
}

SPECIFIC_AXIOM_KEYS = tuple(sorted(_AXIOMS))


def specific_axiom(k: int) -> ArithFormula:
    """The k-th specific axiom; 13 is the induction schema and has no single AST."""
    try:
        return _AXIOMS[k]
    except KeyError:
        if k == 13:
            raise PreconditionError("axiom 13 is the induction schema; use induction_instance") from None
        raise PreconditionError(f"no specific axiom {k}; valid keys are {SPECIFIC_AXIOM_KEYS}") from None


def specific_axioms() -> dict[int, ArithFormula]:
    return dict(_AXIOMS)


def induction_instance(body: ArithFormula, var: int) -> ArithFormula:
    """(A[x/1] & (all x (A -> A[x/x+1]))) -> (all x A), built by substitution.

    Both substitutions are always capture-free: the numeral has no variables
    and x+1 introduces only x itself. When x is not free in the body the
    substitutions are vacuous and the instance degenerates accordingly.
    """
    base = substitute_term(body, var, One())
    step = substitute_term(body, var, Add(Var(var), One()))
    return impl(conj(base, Forall(var, impl(body, step))), Forall(var, body))
