"""Independent reference semantics for cross-checking the matrix module.

The tables are transcribed here a second time on purpose and the
evaluator below shares no code with atomlog.matrix: tests that freeze
expected values compute them through this path.
"""
import itertools

from atomlog.syntax import Atom, Bin, Connective, Neg

IMPL3 = {
    (0, 0): 1, (0, 1): 1, (0, 2): 1,
    (1, 0): 0, (1, 1): 1, (1, 2): 0,
    (2, 0): 0, (2, 1): 1, (2, 2): 2,
}
EQUIV3 = {
    (0, 0): 1, (0, 1): 0, (0, 2): 0,
    (1, 0): 0, (1, 1): 1, (1, 2): 0,
    (2, 0): 0, (2, 1): 0, (2, 2): 2,
}
DISJ3 = {
    (0, 0): 0, (0, 1): 1, (0, 2): 0,
    (1, 0): 1, (1, 1): 1, (1, 2): 1,
    (2, 0): 0, (2, 1): 1, (2, 2): 2,
}
CONJ3 = {
    (0, 0): 0, (0, 1): 0, (0, 2): 0,
    (1, 0): 0, (1, 1): 1, (1, 2): 1,
    (2, 0): 0, (2, 1): 1, (2, 2): 2,
}
NEG3 = {0: 1, 1: 0, 2: 2}
DESIGNATED3 = {1, 2}

BIN3 = {
    Connective.IMPL: IMPL3,
    Connective.EQUIV: EQUIV3,
    Connective.DISJ: DISJ3,
    Connective.CONJ: CONJ3,
}


def eval3(phi, valuation):
    if isinstance(phi, Atom):
        return valuation[phi.var]
    if isinstance(phi, Neg):
        return NEG3[eval3(phi.body, valuation)]
    return BIN3[phi.op][(eval3(phi.left, valuation), eval3(phi.right, valuation))]


def eval2(phi, valuation):
    if isinstance(phi, Atom):
        return valuation[phi.var]
    if isinstance(phi, Neg):
        return 1 - eval2(phi.body, valuation)
    a, b = eval2(phi.left, valuation), eval2(phi.right, valuation)
    if phi.op is Connective.IMPL:
        return 1 if (not a) or b else 0
    if phi.op is Connective.DISJ:
        return 1 if a or b else 0
    if phi.op is Connective.CONJ:
        return 1 if a and b else 0
    return 1 if a == b else 0


def first_counterexample3(phi, atom_order):
    """Lexicographically first valuation giving a non-designated value, or None."""
    for combo in itertools.product((0, 1, 2), repeat=len(atom_order)):
        valuation = dict(zip(atom_order, combo))
        value = eval3(phi, valuation)
        if value not in DESIGNATED3:
            return valuation, value
    return None


def valid3(phi, atom_order):
    return first_counterexample3(phi, atom_order) is None


def valid2(phi, atom_order):
    return all(
        eval2(phi, dict(zip(atom_order, combo))) == 1
        for combo in itertools.product((0, 1), repeat=len(atom_order))
    )
