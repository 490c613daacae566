"""Syntactic operators: variable collectors, substitution, closure, star."""
from __future__ import annotations

from ..errors import CaptureError
from . import nodes as n


def atoms(phi: n.PropFormula) -> set[n.PropVar]:
    """All propositional variables occurring in a propositional formula."""
    if isinstance(phi, n.Atom):
        return {phi.var}
    if isinstance(phi, n.Neg):
        return atoms(phi.body)
    if isinstance(phi, n.Bin):
        return atoms(phi.left) | atoms(phi.right)
    raise TypeError(f"not a propositional formula: {phi!r}")


def sorted_atoms(phi: n.PropFormula) -> list[n.PropVar]:
    return sorted(atoms(phi), key=n.PropVar.sort_key)


def predicate_letters(phi: n.Formula) -> set:
    """Predicate letters occurring in a formula.

    First-order: a set of (index, arity) pairs. Arithmetic: a subset of
    {"=", "<"}.
    """
    out: set = set()
    for sub in n.subformulas(phi):
        if isinstance(sub, n.Pred):
            out.add(sub.letter)
        elif isinstance(sub, n.Eq):
            out.add("=")
        elif isinstance(sub, n.Lt):
            out.add("<")
        elif isinstance(sub, n.Atom):
            raise TypeError("propositional formulas have no predicate letters")
    return out


def term_vars(t: n.Term) -> set[int]:
    if isinstance(t, n.Var):
        return {t.index}
    if isinstance(t, (n.Const, n.One)):
        return set()
    if isinstance(t, n.Fun):
        out: set[int] = set()
        for a in t.args:
            out |= term_vars(a)
        return out
    if isinstance(t, n.Succ):
        return term_vars(t.arg)
    if isinstance(t, (n.Add, n.Mul)):
        return term_vars(t.left) | term_vars(t.right)
    raise TypeError(f"not a term: {t!r}")


def free_vars(phi: n.Formula) -> set[int]:
    """Free individual variables of a first-order or arithmetic formula."""
    if isinstance(phi, n.Pred):
        out: set[int] = set()
        for a in phi.args:
            out |= term_vars(a)
        return out
    if isinstance(phi, (n.Eq, n.Lt)):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, n.Neg):
        return free_vars(phi.body)
    if isinstance(phi, n.Bin):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, n.Quantifier):
        return free_vars(phi.body) - {phi.var}
    if isinstance(phi, n.Atom):
        return set()
    raise TypeError(f"not a formula: {phi!r}")


def free_for(x: int, t: n.Term, phi: n.Formula) -> bool:
    """True iff no free occurrence of x in phi sits under a binder for a variable of t."""
    if isinstance(phi, (n.Pred, n.Eq, n.Lt, n.Atom)):
        return True
    if isinstance(phi, n.Neg):
        return free_for(x, t, phi.body)
    if isinstance(phi, n.Bin):
        return free_for(x, t, phi.left) and free_for(x, t, phi.right)
    if isinstance(phi, n.Quantifier):
        if x not in free_vars(phi):
            return True
        if phi.var in term_vars(t):
            return False
        return free_for(x, t, phi.body)
    raise TypeError(f"not a formula: {phi!r}")


def _subst_in_term(t: n.Term, x: int, repl: n.Term) -> n.Term:
    if isinstance(t, n.Var):
        return repl if t.index == x else t
    if isinstance(t, (n.Const, n.One)):
        return t
    if isinstance(t, n.Fun):
        return n.Fun(t.index, tuple(_subst_in_term(a, x, repl) for a in t.args))
    if isinstance(t, n.Succ):
        return n.Succ(_subst_in_term(t.arg, x, repl))
    if isinstance(t, n.Add):
        return n.Add(_subst_in_term(t.left, x, repl), _subst_in_term(t.right, x, repl))
    if isinstance(t, n.Mul):
        return n.Mul(_subst_in_term(t.left, x, repl), _subst_in_term(t.right, x, repl))
    raise TypeError(f"not a term: {t!r}")


def _subst(phi: n.Formula, x: int, t: n.Term) -> n.Formula:
    if isinstance(phi, n.Pred):
        return n.Pred(phi.index, tuple(_subst_in_term(a, x, t) for a in phi.args))
    if isinstance(phi, n.Eq):
        return n.Eq(_subst_in_term(phi.left, x, t), _subst_in_term(phi.right, x, t))
    if isinstance(phi, n.Lt):
        return n.Lt(_subst_in_term(phi.left, x, t), _subst_in_term(phi.right, x, t))
    if isinstance(phi, n.Neg):
        return n.Neg(_subst(phi.body, x, t))
    if isinstance(phi, n.Bin):
        return n.Bin(phi.op, _subst(phi.left, x, t), _subst(phi.right, x, t))
    if isinstance(phi, n.Forall):
        return phi if phi.var == x else n.Forall(phi.var, _subst(phi.body, x, t))
    if isinstance(phi, n.Exists):
        return phi if phi.var == x else n.Exists(phi.var, _subst(phi.body, x, t))
    raise TypeError(f"not a formula: {phi!r}")


def substitute_term(phi: n.Formula, x: int, t: n.Term) -> n.Formula:
    """Replace every free occurrence of x by t.

    Refuses (CaptureError) when t would be captured; this operation never
    renames bound variables.
    """
    if not free_for(x, t, phi):
        raise CaptureError(f"term is not free for x{x}")
    return _subst(phi, x, t)


def universal_closure(phi: n.Formula) -> n.Formula:
    """Prefix one universal quantifier per free variable, ascending index outermost first."""
    for v in sorted(free_vars(phi), reverse=True):
        phi = n.Forall(v, phi)
    return phi


def star(phi: n.Formula) -> n.Formula:
    """Negation wrapped in the existential closure of the free variables.

    Propositional and closed formulas: plain negation.
    """
    if n.sort_of(phi) == "prop":
        return n.Neg(phi)
    out: n.Formula = n.Neg(phi)
    for v in sorted(free_vars(phi), reverse=True):
        out = n.Exists(v, out)
    return out
