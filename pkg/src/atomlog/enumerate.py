"""Exhaustive enumeration of propositional formulas by connective count,
with value vectors over the full valuation grid.

Vectors index valuations lexicographically: atoms in their total order,
the first atom most significant, values ascending. That matches the
counterexample order of matrix.validity, so "first failing entry" agrees
between the two paths.
"""
from __future__ import annotations

from functools import lru_cache

from .matrix import MDP, LogicalMatrix
from .syntax import (
    BINARY_CONNECTIVES,
    Atom,
    Bin,
    Connective,
    Neg,
    PropFormula,
    PropVar,
)


def enumerate_levels(atom_vars: tuple[PropVar, ...], max_size: int) -> list[list[PropFormula]]:
    """All formulas over exactly this atom alphabet with at most max_size
    connectives, grouped by connective count."""
    levels: list[list[PropFormula]] = [[Atom(v) for v in atom_vars]]
    for size in range(1, max_size + 1):
        level: list[PropFormula] = [Neg(f) for f in levels[size - 1]]
        for left_size in range(size):
            for left in levels[left_size]:
                for right in levels[size - 1 - left_size]:
                    for op in BINARY_CONNECTIVES:
                        level.append(Bin(op, left, right))
        levels.append(level)
    return levels


def _atom_vectors(atom_vars: tuple[PropVar, ...], size: int) -> list[tuple[int, ...]]:
    n = len(atom_vars)
    total = size**n
    out = []
    for k in range(n):
        stride = size ** (n - 1 - k)
        out.append(tuple((i // stride) % size for i in range(total)))
    return out


def grid_vectors(levels: list[list[PropFormula]], atom_vars: tuple[PropVar, ...], matrix: LogicalMatrix) -> dict[PropFormula, tuple[int, ...]]:
    """Value vector of every enumerated formula under the matrix, computed
    bottom-up with subformula sharing."""
    neg = matrix.neg
    tabs = matrix.tables
    vec: dict[PropFormula, tuple[int, ...]] = {}
    for var, col in zip(atom_vars, _atom_vectors(atom_vars, matrix.size)):
        vec[Atom(var)] = col
    for level in levels[1:]:
        for f in level:
            if isinstance(f, Neg):
                vec[f] = tuple(neg[v] for v in vec[f.body])
            else:
                tab = tabs[f.op]
                vec[f] = tuple(tab[a][b] for a, b in zip(vec[f.left], vec[f.right]))
    return vec


def reduct_delta_vectors(levels: list[list[PropFormula]], atom_vars: tuple[PropVar, ...]) -> dict[PropFormula, tuple[int, ...]]:
    """Value vector of the implication-negation rewriting of every enumerated
    formula, evaluated in the reduct matrix only (its two tables)."""
    neg = MDP.neg
    imp = MDP.tables[Connective.IMPL]
    vec: dict[PropFormula, tuple[int, ...]] = {}
    for var, col in zip(atom_vars, _atom_vectors(atom_vars, MDP.size)):
        vec[Atom(var)] = col
    for level in levels[1:]:
        for f in level:
            if isinstance(f, Neg):
                vec[f] = tuple(neg[v] for v in vec[f.body])
                continue
            lv, rv = vec[f.left], vec[f.right]
            if f.op is Connective.IMPL:
                vec[f] = tuple(imp[a][b] for a, b in zip(lv, rv))
            elif f.op is Connective.DISJ:
                vec[f] = tuple(imp[neg[a]][b] for a, b in zip(lv, rv))
            elif f.op is Connective.CONJ:
                vec[f] = tuple(neg[imp[a][neg[b]]] for a, b in zip(lv, rv))
            else:
                vec[f] = tuple(neg[imp[imp[a][b]][neg[imp[b][a]]]] for a, b in zip(lv, rv))
    return vec


@lru_cache(maxsize=4)
def valid_skeletons(atom_names: tuple[str, ...], max_size: int, matrix_name: str = "m2") -> tuple[PropFormula, ...]:
    """Every formula over the atom alphabet with <= max_size connectives that
    is valid in the named matrix, in enumeration order."""
    from .matrix import builtin

    matrix = builtin(matrix_name)
    atom_vars = tuple(PropVar(name) for name in atom_names)
    levels = enumerate_levels(atom_vars, max_size)
    vec = grid_vectors(levels, atom_vars, matrix)
    designated = matrix.designated
    out = []
    for level in levels:
        for f in level:
            if all(v in designated for v in vec[f]):
                out.append(f)
    return tuple(out)
