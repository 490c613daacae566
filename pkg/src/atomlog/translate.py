"""Quantifier-erasing translations into propositional skeletons, and the
substitution endomorphisms for propositional variables and predicate letters.

The first-order map sends every application of predicate letter k to the
propositional variable p<k>, regardless of arity and argument terms; the
arithmetic map sends every equality atom to p1 and every order atom to p2.
Both erase quantifiers.
"""
from __future__ import annotations

import warnings
from typing import Mapping

from .syntax import (
    ArithFormula,
    Atom,
    Bin,
    Eq,
    Exists,
    FOFormula,
    Forall,
    Lt,
    Neg,
    Pred,
    PropFormula,
    PropVar,
    atoms,
    subformulas,
)

EQ_TARGET = PropVar("p", 1)
LT_TARGET = PropVar("p", 2)

PropSubstitution = Mapping[PropVar, PropFormula]
PredSubstitution = Mapping[Pred, FOFormula]


class ArityCollisionWarning(UserWarning):
    """One predicate index used with several arities: the letters are distinct
    but share one image variable under the erasing translation."""


def _check_arity_collisions(phi: FOFormula) -> None:
    arities: dict[int, set[int]] = {}
    for sub in subformulas(phi):
        if isinstance(sub, Pred):
            arities.setdefault(sub.index, set()).add(sub.arity)
    mixed = sorted(i for i, ars in arities.items() if len(ars) > 1)
    if mixed:
        warnings.warn(
            f"predicate indexes {mixed} appear with several arities; "
            "all their letters collapse onto one propositional variable each",
            ArityCollisionWarning,
            stacklevel=3,
        )


def translate_j(phi: FOFormula) -> PropFormula:
    """Erase quantifiers and terms: predicate letter k becomes p<k>."""
    _check_arity_collisions(phi)

    def go(f):
        if isinstance(f, Pred):
            return Atom(PropVar("p", f.index))
        if isinstance(f, Neg):
            return Neg(go(f.body))
        if isinstance(f, Bin):
            return Bin(f.op, go(f.left), go(f.right))
        if isinstance(f, (Forall, Exists)):
            return go(f.body)
        raise TypeError(f"not a first-order formula: {f!r}")

    return go(phi)


def translate_i(phi: ArithFormula) -> PropFormula:
    """Erase quantifiers and terms: every '=' atom becomes p1, every '<' atom p2."""
    if isinstance(phi, Eq):
        return Atom(EQ_TARGET)
    if isinstance(phi, Lt):
        return Atom(LT_TARGET)
    if isinstance(phi, Neg):
        return Neg(translate_i(phi.body))
    if isinstance(phi, Bin):
        return Bin(phi.op, translate_i(phi.left), translate_i(phi.right))
    if isinstance(phi, (Forall, Exists)):
        return translate_i(phi.body)
    raise TypeError(f"not an arithmetic formula: {phi!r}")


def subst_prop(e: PropSubstitution, phi: PropFormula) -> PropFormula:
    """Simultaneous substitution: atoms outside the map are fixed."""
    if isinstance(phi, Atom):
        return e.get(phi.var, phi)
    if isinstance(phi, Neg):
        return Neg(subst_prop(e, phi.body))
    if isinstance(phi, Bin):
        return Bin(phi.op, subst_prop(e, phi.left), subst_prop(e, phi.right))
    raise TypeError(f"not a propositional formula: {phi!r}")


def compose_subst(e2: PropSubstitution, e1: PropSubstitution) -> dict[PropVar, PropFormula]:
    """The substitution p -> subst_prop(e2, e1(p)); so applying it once equals
    applying e1 then e2."""
    out = {v: subst_prop(e2, f) for v, f in e1.items()}
    for v, f in e2.items():
        out.setdefault(v, f)
    return out


def subst_pred(e: PredSubstitution, phi: FOFormula) -> FOFormula:
    """Leafwise replacement of simple formulas; quantifier structure untouched.

    Implemented literally from the homomorphism clauses: there is no capture
    or argument-coherence side condition, and keys match exactly (predicate
    letter together with its argument terms).
    """
    if isinstance(phi, Pred):
        return e.get(phi, phi)
    if isinstance(phi, Neg):
        return Neg(subst_pred(e, phi.body))
    if isinstance(phi, Bin):
        return Bin(phi.op, subst_pred(e, phi.left), subst_pred(e, phi.right))
    if isinstance(phi, Forall):
        return Forall(phi.var, subst_pred(e, phi.body))
    if isinstance(phi, Exists):
        return Exists(phi.var, subst_pred(e, phi.body))
    raise TypeError(f"not a first-order formula: {phi!r}")


def atoms_image_law(e: PropSubstitution, phi: PropFormula) -> bool:
    """Check atoms(subst(e, phi)) == union of atoms(e(p)) over p in atoms(phi)."""
    image_atoms = atoms(subst_prop(e, phi))
    expected: set[PropVar] = set()
    for v in atoms(phi):
        expected |= atoms(e.get(v, Atom(v)))
    return image_atoms == expected
