"""Finite logical matrices, valuation enumeration and validity decision.

Three built-in matrices:

  m2  - the classical two-valued matrix, designated {1}
  md  - the three-valued matrix over {0,1,2} with designated {1,2} and
        tables for ->, <->, |, &, ~
  mdp - the implication-negation reduct of md

Validity scans all |U|^n valuations in lexicographic order (atoms in
their total order, values 0 < 1 < 2) and reports the first failing
valuation, so counterexamples are stable across runs and strategies.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from ..errors import CapExceeded, DomainError, SignatureError
from ..syntax import Atom, Bin, Connective, Neg, PropFormula, PropVar, sorted_atoms

DEFAULT_ATOM_CAP = 16
_CAP_ENV = "ATOMLOG_ATOM_CAP"

# switch to numpy grid evaluation above this many atoms
_VECTOR_THRESHOLD = 7

Valuation = Mapping[PropVar, int]


@dataclass(frozen=True)
class LogicalMatrix:
    name: str
    size: int
    designated: frozenset[int]
    neg: tuple[int, ...]
    tables: Mapping[Connective, tuple[tuple[int, ...], ...]]

    def __post_init__(self):
        assert self.designated and self.designated <= set(range(self.size))
        assert len(self.neg) == self.size and all(v < self.size for v in self.neg)
        for tab in self.tables.values():
            assert len(tab) == self.size
            assert all(len(row) == self.size and all(v < self.size for v in row) for row in tab)

    @property
    def signature(self) -> frozenset[Connective]:
        return frozenset(self.tables)

    def apply(self, op: Connective, a: int, b: int) -> int:
        try:
            return self.tables[op][a][b]
        except KeyError:
            raise SignatureError(f"matrix {self.name} has no table for {op.value!r}") from None

    def is_designated(self, value: int) -> bool:
        return value in self.designated


_MD_TABLES = {
    Connective.IMPL: ((1, 1, 1), (0, 1, 0), (0, 1, 2)),
    Connective.EQUIV: ((1, 0, 0), (0, 1, 0), (0, 0, 2)),
    Connective.DISJ: ((0, 1, 0), (1, 1, 1), (0, 1, 2)),
    Connective.CONJ: ((0, 0, 0), (0, 1, 1), (0, 1, 2)),
}
_MD_NEG = (1, 0, 2)

M2 = LogicalMatrix(
    name="m2",
    size=2,
    designated=frozenset({1}),
    neg=(1, 0),
    tables={
        Connective.IMPL: ((1, 1), (0, 1)),
        Connective.EQUIV: ((1, 0), (0, 1)),
        Connective.DISJ: ((0, 1), (1, 1)),
        Connective.CONJ: ((0, 0), (0, 1)),
    },
)

MD = LogicalMatrix(
    name="md",
    size=3,
    designated=frozenset({1, 2}),
    neg=_MD_NEG,
    tables=dict(_MD_TABLES),
)

MDP = LogicalMatrix(
    name="mdp",
    size=3,
    designated=frozenset({1, 2}),
    neg=_MD_NEG,
    tables={Connective.IMPL: _MD_TABLES[Connective.IMPL]},
)

_BUILTIN = {"m2": M2, "md": MD, "mdp": MDP}


def builtin(name: str) -> LogicalMatrix:
    """Look up a built-in matrix by name: m2, md or mdp."""
    try:
        return _BUILTIN[name.lower()]
    except KeyError:
        raise ValueError(f"unknown matrix {name!r}; expected one of {sorted(_BUILTIN)}") from None


@dataclass
class Verdict:
    """Valid, or the lexicographically first counterexample."""

    valid: bool
    witness: dict[PropVar, int] | None = None
    value: int | None = None

    def witness_str(self) -> str:
        assert self.witness is not None
        items = sorted(self.witness.items(), key=lambda kv: kv[0].sort_key())
        return ", ".join(f"{v}={t}" for v, t in items)


def eval_formula(matrix: LogicalMatrix, phi: PropFormula, valuation: Valuation) -> int:
    """Bottom-up table application under a total valuation."""
    if isinstance(phi, Atom):
        try:
            return valuation[phi.var]
        except KeyError:
            raise DomainError(f"valuation does not cover {phi.var}") from None
    if isinstance(phi, Neg):
        return matrix.neg[eval_formula(matrix, phi.body, valuation)]
    if isinstance(phi, Bin):
        return matrix.apply(
            phi.op,
            eval_formula(matrix, phi.left, valuation),
            eval_formula(matrix, phi.right, valuation),
        )
    raise TypeError(f"not a propositional formula: {phi!r}")


def atom_cap(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_ATOM_CAP


def _check_signature(matrix: LogicalMatrix, phi: PropFormula) -> None:
    if isinstance(phi, Neg):
        _check_signature(matrix, phi.body)
    elif isinstance(phi, Bin):
        matrix.apply(phi.op, 0, 0)
        _check_signature(matrix, phi.left)
        _check_signature(matrix, phi.right)


def _scan_python(matrix, phi, atom_list):
    size = matrix.size
    n = len(atom_list)
    total = size**n
    combo = [0] * n
    valuation = dict.fromkeys(atom_list, 0)
    for _ in range(total):
        value = eval_formula(matrix, phi, valuation)
        if value not in matrix.designated:
            return Verdict(False, dict(valuation), value)
        for k in range(n - 1, -1, -1):
            combo[k] += 1
            if combo[k] < size:
                valuation[atom_list[k]] = combo[k]
                break
            combo[k] = 0
            valuation[atom_list[k]] = 0
    return Verdict(True)


def _scan_vectorized(matrix, phi, atom_list):
    import numpy as np

    size = matrix.size
    n = len(atom_list)
    total = size**n
    index = {v: k for k, v in enumerate(atom_list)}
    strides = [size ** (n - 1 - k) for k in range(n)]
    neg_lut = np.array(matrix.neg, dtype=np.int8)
    tabs = {op: np.array(tab, dtype=np.int8) for op, tab in matrix.tables.items()}
    desig = np.zeros(size, dtype=bool)
    for d in matrix.designated:
        desig[d] = True

    def eval_chunk(f, idx):
        if isinstance(f, Atom):
            return ((idx // strides[index[f.var]]) % size).astype(np.int8)
        if isinstance(f, Neg):
            return neg_lut[eval_chunk(f.body, idx)]
        tab = tabs[f.op]
        return tab[eval_chunk(f.left, idx), eval_chunk(f.right, idx)]

    chunk = 1 << 20
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        ok = desig[eval_chunk(phi, idx)]
        if not ok.all():
            first = int(idx[int(np.argmin(ok))])
            witness = {v: (first // strides[k]) % size for k, v in enumerate(atom_list)}
            value = eval_formula(matrix, phi, witness)
            return Verdict(False, witness, value)
    return Verdict(True)


def validity(matrix: LogicalMatrix, phi: PropFormula, *, cap: int | None = None) -> Verdict:
    """Decide membership in the matrix validity set by exhaustive valuation scan."""
    _check_signature(matrix, phi)
    atom_list = sorted_atoms(phi)
    limit = atom_cap(cap)
    if len(atom_list) > limit:
        raise CapExceeded(len(atom_list), limit)
    if len(atom_list) >= _VECTOR_THRESHOLD:
        return _scan_vectorized(matrix, phi, atom_list)
    return _scan_python(matrix, phi, atom_list)


def mp_preserving(matrix: LogicalMatrix) -> bool:
    """Whether modus ponens preserves designation: u and u->w designated force w designated."""
    tab = matrix.tables[Connective.IMPL]
    return all(
        w in matrix.designated
        for u in matrix.designated
        for w in range(matrix.size)
        if tab[u][w] in matrix.designated
    )


def delta_expand(phi: PropFormula) -> PropFormula:
    """Rewrite |, & and <-> into the implication-negation reduct.

    a|b -> ~a->b;  a&b -> ~(a->~b);  a<->b -> ~((a->b)->~(b->a)).
    """
    if isinstance(phi, Atom):
        return phi
    if isinstance(phi, Neg):
        return Neg(delta_expand(phi.body))
    left, right = delta_expand(phi.left), delta_expand(phi.right)
    if phi.op is Connective.IMPL:
        return Bin(Connective.IMPL, left, right)
    if phi.op is Connective.DISJ:
        return Bin(Connective.IMPL, Neg(left), right)
    if phi.op is Connective.CONJ:
        return Neg(Bin(Connective.IMPL, left, Neg(right)))
    return Neg(Bin(Connective.IMPL, Bin(Connective.IMPL, left, right), Neg(Bin(Connective.IMPL, right, left))))


_DUMP_ORDER = (Connective.IMPL, Connective.EQUIV, Connective.DISJ, Connective.CONJ)


def table_dump(matrix: LogicalMatrix) -> str:
    """Render every table of the matrix, rows indexed by the first argument.

    The exact bytes are golden-test stable; see README for the format.
    """
    lines = [f"matrix {matrix.name}"]
    lines.append("universe: " + " ".join(str(v) for v in range(matrix.size)))
    lines.append("designated: " + " ".join(str(v) for v in sorted(matrix.designated)))
    for op in _DUMP_ORDER:
        if op not in matrix.tables:
            continue
        lines.append("")
        lines.append(f"f{op.value}")
        lines.append("  | " + " ".join(str(v) for v in range(matrix.size)))
        for a in range(matrix.size):
            lines.append(f"{a} | " + " ".join(str(v) for v in matrix.tables[op][a]))
    lines.append("")
    lines.append("f~")
    for a in range(matrix.size):
        lines.append(f"{a} | {matrix.neg[a]}")
    return "\n".join(lines) + "\n"
