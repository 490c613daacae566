"""Deterministic rendering with minimal parentheses.

parse(sort, render(phi)) == phi for every well-formed tree. Quantifiers
always carry their own parentheses; a binary-connective body of a
quantifier is parenthesized, a comparison or negation body is not.
Negated comparisons render as "~(t1 = t2)" for readability; the extra
parentheses re-parse to the same tree.
"""
from __future__ import annotations

from . import nodes as n

# formula context levels
_EQUIV, _IMPL, _DISJ, _CONJ, _UNIT, _NEGARG = 1, 2, 3, 4, 5, 7

_PREC = {
    n.Connective.EQUIV: 1,
    n.Connective.IMPL: 2,
    n.Connective.DISJ: 3,
    n.Connective.CONJ: 4,
}

# term context levels
_SUM, _PROD, _FACTOR = 1, 2, 3


def _term(t: n.Term, level: int) -> str:
    if isinstance(t, n.Var):
        return f"x{t.index}"
    if isinstance(t, n.Const):
        return f"a{t.index}"
    if isinstance(t, n.Fun):
        return f"f{t.index}_{len(t.args)}(" + ", ".join(_term(a, _SUM) for a in t.args) + ")"
    if isinstance(t, n.One):
        return "1"
    if isinstance(t, n.Succ):
        return f"S({_term(t.arg, _SUM)})"
    if isinstance(t, n.Add):
        s = f"{_term(t.left, _SUM)} + {_term(t.right, _PROD)}"
        return f"({s})" if _SUM < level else s
    if isinstance(t, n.Mul):
        s = f"{_term(t.left, _PROD)} * {_term(t.right, _FACTOR)}"
        return f"({s})" if _PROD < level else s
    raise TypeError(f"not a term: {t!r}")


def _formula(phi: n.Formula, level: int) -> str:
    if isinstance(phi, n.Atom):
        return str(phi.var)
    if isinstance(phi, n.Pred):
        return f"P{phi.index}_{len(phi.args)}(" + ", ".join(_term(a, _SUM) for a in phi.args) + ")"
    if isinstance(phi, (n.Eq, n.Lt)):
        op = "=" if isinstance(phi, n.Eq) else "<"
        s = f"{_term(phi.left, _SUM)} {op} {_term(phi.right, _SUM)}"
        return f"({s})" if level == _NEGARG else s
    if isinstance(phi, n.Neg):
        return "~" + _formula(phi.body, _NEGARG)
    if isinstance(phi, n.Forall):
        return f"(all x{phi.var} {_formula(phi.body, _UNIT)})"
    if isinstance(phi, n.Exists):
        return f"(ex x{phi.var} {_formula(phi.body, _UNIT)})"
    if isinstance(phi, n.Bin):
        prec = _PREC[phi.op]
        if phi.op is n.Connective.IMPL:
            s = f"{_formula(phi.left, _DISJ)} -> {_formula(phi.right, _IMPL)}"
        elif phi.op is n.Connective.EQUIV:
            s = f"{_formula(phi.left, _EQUIV)} <-> {_formula(phi.right, _IMPL)}"
        elif phi.op is n.Connective.DISJ:
            s = f"{_formula(phi.left, _DISJ)} | {_formula(phi.right, _CONJ)}"
        else:
            s = f"{_formula(phi.left, _CONJ)} & {_formula(phi.right, _UNIT)}"
        return f"({s})" if prec < level else s
    raise TypeError(f"not a formula: {phi!r}")


def render(phi: n.Formula) -> str:
    """Render a formula of any sort as parseable ASCII text."""
    return _formula(phi, _EQUIV)


def render_term(t: n.Term) -> str:
    return _term(t, _SUM)
