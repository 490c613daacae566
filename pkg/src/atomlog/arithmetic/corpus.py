"""Certified corpus of logical axioms over the arithmetic signature.

Every emitted formula is classically valid by construction and carries a
certificate saying why:

  prop-instance  closure of a two-valued-valid propositional skeleton whose
                 atoms are instantiated by arithmetic atomic formulas
  forall-inst    (all x phi) -> phi[x/t], capture-checked
  vacuous-gen    phi -> (all x phi) with x not free in phi
  exists-dual    phi[x/t] -> (ex x phi), or (ex x phi) -> phi with x not free
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from ..enumerate import valid_skeletons
from ..syntax import (
    Add,
    ArithFormula,
    Atom,
    Bin,
    Connective,
    Eq,
    Exists,
    Forall,
    Lt,
    Mul,
    Neg,
    One,
    PropFormula,
    Succ,
    Var,
    free_for,
    free_vars,
    impl,
    parse_arith,
    render,
    sorted_atoms,
    substitute_term,
)

KIND_PROP_INSTANCE = "prop-instance"
KIND_FORALL_INST = "forall-inst"
KIND_VACUOUS_GEN = "vacuous-gen"
KIND_EXISTS_DUAL = "exists-dual"
ALL_KINDS = (KIND_PROP_INSTANCE, KIND_FORALL_INST, KIND_VACUOUS_GEN, KIND_EXISTS_DUAL)
QUANTIFIER_KINDS = (KIND_FORALL_INST, KIND_VACUOUS_GEN, KIND_EXISTS_DUAL)

DEFAULT_ATOM_POOL = (
    "x1 = x2",
    "x1 = x1",
    "x2 = x3",
    "S(x1) = x2",
    "x1 + x3 = x2",
    "x1 < x2",
    "x2 < x1",
    "x1 < x1 + 1",
    "x1 * x2 < x3",
)


@dataclass(frozen=True)
class SchemaSpec:
    """Bounds and pools for the corpus generator; serializes to the corpus
    spec file format {kinds, maxSkeletonSize, maxTermDepth, atomPool, count, seed}."""

    kinds: tuple[str, ...] = ALL_KINDS
    max_skeleton_size: int = 4
    max_term_depth: int = 2
    atom_pool: tuple[str, ...] = DEFAULT_ATOM_POOL
    count: int = 500
    seed: int = 0

    def __post_init__(self):
        unknown = set(self.kinds) - set(ALL_KINDS)
        if unknown:
            raise ValueError(f"unknown corpus kinds {sorted(unknown)}; valid kinds are {ALL_KINDS}")
        if self.count < 1 or self.max_skeleton_size < 1 or self.max_term_depth < 0:
            raise ValueError("bounds must be positive")

    def to_json(self) -> dict:
        return {
            "kinds": list(self.kinds),
            "maxSkeletonSize": self.max_skeleton_size,
            "maxTermDepth": self.max_term_depth,
            "atomPool": list(self.atom_pool),
            "count": self.count,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchemaSpec":
        defaults = cls()
        return cls(
            kinds=tuple(data.get("kinds", defaults.kinds)),
            max_skeleton_size=data.get("maxSkeletonSize", defaults.max_skeleton_size),
            max_term_depth=data.get("maxTermDepth", defaults.max_term_depth),
            atom_pool=tuple(data.get("atomPool", defaults.atom_pool)),
            count=data.get("count", defaults.count),
            seed=data.get("seed", defaults.seed),
        )


@dataclass(frozen=True)
class CertifiedAxiom:
    formula: ArithFormula
    kind: str
    certificate: tuple[tuple[str, str], ...]

    @property
    def certificate_dict(self) -> dict[str, str]:
        return dict(self.certificate)


def _parse_atom_pool(pool: tuple[str, ...]) -> list[ArithFormula]:
    out = []
    for text in pool:
        phi = parse_arith(text)
        if not isinstance(phi, (Eq, Lt)):
            raise ValueError(f"atom pool entry {text!r} is not an atomic formula")
        out.append(phi)
    if not any(isinstance(a, Eq) for a in out) or not any(isinstance(a, Lt) for a in out):
        raise ValueError("atom pool must contain at least one '=' atom and one '<' atom")
    return out


def _instantiate_skeleton(skeleton: PropFormula, mapping) -> ArithFormula:
    if isinstance(skeleton, Atom):
        return mapping[skeleton.var]
    if isinstance(skeleton, Neg):
        return Neg(_instantiate_skeleton(skeleton.body, mapping))
    return Bin(skeleton.op, _instantiate_skeleton(skeleton.left, mapping), _instantiate_skeleton(skeleton.right, mapping))


def _random_term(rng: random.Random, depth: int):
    if depth <= 0:
        return rng.choice((Var(rng.randint(1, 4)), One()))
    kind = rng.randrange(4)
    if kind == 0:
        return Succ(_random_term(rng, depth - 1))
    if kind == 1:
        return Add(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    if kind == 2:
        return Mul(_random_term(rng, depth - 1), _random_term(rng, depth - 1))
    return rng.choice((Var(rng.randint(1, 4)), One()))


def _random_open_body(rng: random.Random, atoms_pool: list[ArithFormula]) -> ArithFormula:
    """A small quantifier-free formula built from pool atoms."""
    n_ops = rng.randrange(3)
    phi: ArithFormula = rng.choice(atoms_pool)
    for _ in range(n_ops):
        op = rng.choice((Connective.IMPL, Connective.CONJ, Connective.DISJ))
        other = rng.choice(atoms_pool)
        if rng.random() < 0.3:
            other = Neg(other)
        phi = Bin(op, phi, other) if rng.random() < 0.5 else Bin(op, other, phi)
    return phi


def universal_closure_ascending(phi: ArithFormula) -> ArithFormula:
    from ..syntax import universal_closure

    return universal_closure(phi)


def generate_logical_axioms(spec: SchemaSpec) -> Iterator[CertifiedAxiom]:
    """Deterministic certified stream; each member is classically valid by
    construction and the certificate records the construction."""
    rng = random.Random(spec.seed)
    atoms_pool = _parse_atom_pool(spec.atom_pool)
    skeletons = valid_skeletons(("p", "q"), spec.max_skeleton_size)
    kind_cycle = itertools.cycle(spec.kinds)

    for _ in range(spec.count):
        kind = next(kind_cycle)
        if kind == KIND_PROP_INSTANCE:
            skeleton = rng.choice(skeletons)
            mapping = {v: rng.choice(atoms_pool) for v in sorted_atoms(skeleton)}
            instance = _instantiate_skeleton(skeleton, mapping)
            formula = universal_closure_ascending(instance)
            cert = (
                ("skeleton", render(skeleton)),
                ("instantiation", "; ".join(f"{v} -> {render(f)}" for v, f in sorted(mapping.items(), key=lambda kv: kv[0].sort_key()))),
            )
            yield CertifiedAxiom(formula, kind, cert)
        elif kind == KIND_FORALL_INST:
            body = _random_open_body(rng, atoms_pool)
            candidates = sorted(free_vars(body)) or [1]
            var = rng.choice(candidates)
            term = _random_term(rng, rng.randint(0, spec.max_term_depth))
            if not free_for(var, term, body):  # bodies are quantifier-free, so never taken
                term = One()
            formula = impl(Forall(var, body), substitute_term(body, var, term))
            cert = (("variable", f"x{var}"), ("term", render_term_str(term)))
            yield CertifiedAxiom(formula, kind, cert)
        elif kind == KIND_VACUOUS_GEN:
            body = _random_open_body(rng, atoms_pool)
            var = max(free_vars(body), default=0) + 1
            formula = impl(body, Forall(var, body))
            cert = (("variable", f"x{var}"),)
            yield CertifiedAxiom(formula, kind, cert)
        else:
            body = _random_open_body(rng, atoms_pool)
            if rng.random() < 0.5:
                candidates = sorted(free_vars(body)) or [1]
                var = rng.choice(candidates)
                term = _random_term(rng, rng.randint(0, spec.max_term_depth))
                if not free_for(var, term, body):
                    term = One()
                formula = impl(substitute_term(body, var, term), Exists(var, body))
                cert = (("variant", "instantiation"), ("variable", f"x{var}"), ("term", render_term_str(term)))
            else:
                var = max(free_vars(body), default=0) + 1
                formula = impl(Exists(var, body), body)
                cert = (("variant", "vacuous"), ("variable", f"x{var}"))
            yield CertifiedAxiom(formula, kind, cert)


def render_term_str(term) -> str:
    from ..syntax import render_term

    return render_term(term)
