"""Finite first-order structures: Tarskian evaluation and countermodel search.

Symbols are keyed by their surface spelling: "P<i>_<n>" for relations,
"f<i>_<n>" for functions, "a<k>" for constants; arithmetic formulas use
"<" (relation), "+", "*", "S" (functions) and "1" (constant). Equality is
always interpreted as identity on the domain.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..errors import InterpretationMissing
from ..syntax import (
    Add,
    Atom,
    Bin,
    Connective,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Fun,
    Lt,
    Mul,
    Neg,
    One,
    Pred,
    Succ,
    Term,
    Var,
    subformulas,
    universal_closure,
)


@dataclass
class FiniteStructure:
    """A finite model: domain {0..domain_size-1} plus symbol interpretations.

    Function tables are flat tuples indexed by the argument tuple's
    position in itertools.product(range(domain_size), repeat=arity).
    """

    domain_size: int
    relations: dict[str, frozenset[tuple[int, ...]]] = field(default_factory=dict)
    functions: dict[str, tuple[int, ...]] = field(default_factory=dict)
    constants: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "domain": self.domain_size,
            "relations": {k: sorted(list(t) for t in v) for k, v in sorted(self.relations.items())},
            "functions": {k: list(v) for k, v in sorted(self.functions.items())},
            "constants": dict(sorted(self.constants.items())),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteStructure":
        return cls(
            domain_size=data["domain"],
            relations={k: frozenset(tuple(t) for t in v) for k, v in data.get("relations", {}).items()},
            functions={k: tuple(v) for k, v in data.get("functions", {}).items()},
            constants=dict(data.get("constants", {})),
        )


def _tuple_index(args: tuple[int, ...], d: int) -> int:
    idx = 0
    for a in args:
        idx = idx * d + a
    return idx


def _relation(s: FiniteStructure, name: str) -> frozenset:
    try:
        return s.relations[name]
    except KeyError:
        raise InterpretationMissing(f"structure does not interpret relation {name}") from None


def _function(s: FiniteStructure, name: str) -> tuple[int, ...]:
    try:
        return s.functions[name]
    except KeyError:
        raise InterpretationMissing(f"structure does not interpret function {name}") from None


def _constant(s: FiniteStructure, name: str) -> int:
    try:
        return s.constants[name]
    except KeyError:
        raise InterpretationMissing(f"structure does not interpret constant {name}") from None


def _eval_term(t: Term, s: FiniteStructure, env: dict[int, int]) -> int:
    if isinstance(t, Var):
        try:
            return env[t.index]
        except KeyError:
            raise InterpretationMissing(f"assignment does not cover x{t.index}") from None
    if isinstance(t, Const):
        return _constant(s, f"a{t.index}")
    if isinstance(t, One):
        return _constant(s, "1")
    if isinstance(t, Fun):
        table = _function(s, f"f{t.index}_{len(t.args)}")
        args = tuple(_eval_term(a, s, env) for a in t.args)
        return table[_tuple_index(args, s.domain_size)]
    if isinstance(t, Succ):
        return _function(s, "S")[_eval_term(t.arg, s, env)]
    if isinstance(t, (Add, Mul)):
        name = "+" if isinstance(t, Add) else "*"
        table = _function(s, name)
        args = (_eval_term(t.left, s, env), _eval_term(t.right, s, env))
        return table[_tuple_index(args, s.domain_size)]
    raise TypeError(f"not a term: {t!r}")


def fo_eval_finite(phi: Formula, s: FiniteStructure, assignment: dict[int, int] | None = None) -> bool:
    """Classical two-valued satisfaction; quantifiers range over the finite domain."""
    env = dict(assignment or {})

    def go(f: Formula) -> bool:
        if isinstance(f, Pred):
            rel = _relation(s, f"P{f.index}_{len(f.args)}")
            return tuple(_eval_term(a, s, env) for a in f.args) in rel
        if isinstance(f, Eq):
            return _eval_term(f.left, s, env) == _eval_term(f.right, s, env)
        if isinstance(f, Lt):
            rel = _relation(s, "<")
            return (_eval_term(f.left, s, env), _eval_term(f.right, s, env)) in rel
        if isinstance(f, Neg):
            return not go(f.body)
        if isinstance(f, Bin):
            a, b = go(f.left), go(f.right)
            if f.op is Connective.IMPL:
                return (not a) or b
            if f.op is Connective.DISJ:
                return a or b
            if f.op is Connective.CONJ:
                return a and b
            return a == b
        if isinstance(f, (Forall, Exists)):
            saved = env.get(f.var)
            hits = []
            for d in range(s.domain_size):
                env[f.var] = d
                hits.append(go(f.body))
            if saved is None:
                env.pop(f.var, None)
            else:
                env[f.var] = saved
            return all(hits) if isinstance(f, Forall) else any(hits)
        if isinstance(f, Atom):
            raise TypeError("propositional formulas have no finite-structure semantics")
        raise TypeError(f"not a formula: {f!r}")

    return go(phi)


def symbols_of(phi: Formula) -> tuple[list[tuple[str, int]], list[tuple[str, int]], list[str]]:
    """Collect (relations, functions, constants) with arities, in canonical order."""
    rels: dict[str, int] = {}
    funs: dict[str, int] = {}
    consts: set[str] = set()

    def walk_term(t: Term):
        if isinstance(t, Const):
            consts.add(f"a{t.index}")
        elif isinstance(t, One):
            consts.add("1")
        elif isinstance(t, Fun):
            funs[f"f{t.index}_{len(t.args)}"] = len(t.args)
            for a in t.args:
                walk_term(a)
        elif isinstance(t, Succ):
            funs["S"] = 1
            walk_term(t.arg)
        elif isinstance(t, (Add, Mul)):
            funs["+" if isinstance(t, Add) else "*"] = 2
            walk_term(t.left)
            walk_term(t.right)

    for sub in subformulas(phi):
        if isinstance(sub, Pred):
            rels[f"P{sub.index}_{len(sub.args)}"] = len(sub.args)
            for a in sub.args:
                walk_term(a)
        elif isinstance(sub, (Eq, Lt)):
            if isinstance(sub, Lt):
                rels["<"] = 2
            walk_term(sub.left)
            walk_term(sub.right)
    return sorted(rels.items()), sorted(funs.items()), sorted(consts)


def _decode_relation(code: int, tuples: list[tuple[int, ...]]) -> frozenset:
    return frozenset(t for i, t in enumerate(tuples) if code >> i & 1)


def _decode_function(code: int, m: int, d: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        out.append(code % d)
        code //= d
    return tuple(out)


def structures(phi: Formula, domain_size: int):
    """Every interpretation of phi's symbols over the given domain, in encoding order.

    The encoding of a structure is the tuple of per-symbol integer codes
    (relations as membership bitmasks, functions as base-d value strings,
    both with the all-zero argument tuple least significant), compared
    lexicographically with symbols in canonical order.
    """
    rels, funs, consts = symbols_of(phi)
    rel_spaces = [2 ** (domain_size**ar) for _, ar in rels]
    fun_spaces = [domain_size ** (domain_size**ar) for _, ar in funs]
    const_spaces = [domain_size] * len(consts)
    tuple_lists = {ar: list(itertools.product(range(domain_size), repeat=ar)) for _, ar in rels}
    for codes in itertools.product(*(range(space) for space in rel_spaces + fun_spaces + const_spaces)):
        rel_codes = codes[: len(rels)]
        fun_codes = codes[len(rels) : len(rels) + len(funs)]
        const_codes = codes[len(rels) + len(funs) :]
        yield FiniteStructure(
            domain_size=domain_size,
            relations={name: _decode_relation(c, tuple_lists[ar]) for (name, ar), c in zip(rels, rel_codes)},
            functions={name: _decode_function(c, domain_size**ar, domain_size) for (name, ar), c in zip(funs, fun_codes)},
            constants={name: c for name, c in zip(consts, const_codes)},
        )


def fo_countermodel_search(phi: Formula, max_domain: int) -> FiniteStructure | None:
    """Smallest structure falsifying the universal closure of phi, if any exists
    up to the domain bound. A returned structure certifies classical invalidity;
    absence proves nothing."""
    closed = universal_closure(phi)
    for d in range(1, max_domain + 1):
        for s in structures(phi, d):
            if not fo_eval_finite(closed, s, {}):
                return s
    return None
