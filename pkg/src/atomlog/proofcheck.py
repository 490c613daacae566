"""Hilbert-style derivation checking against pluggable axiom oracles.

Two rule sets: "mp+gen" (modus ponens and generalization, for first-order
and arithmetic derivations) and "mp+subst" (modus ponens and simultaneous
substitution, for propositional derivations). Every axiom step names the
oracle that vouches for it; oracles are deterministic and emit checkable
evidence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .errors import BudgetExceeded, ParseError
from .matrix import M2, MD, LogicalMatrix, validity
from .syntax import (
    Add,
    Atom,
    Bin,
    Connective,
    Forall,
    Formula,
    One,
    PropFormula,
    PropVar,
    Var,
    parse,
    render,
    sort_of,
    substitute_term,
)
from .translate import subst_prop, translate_i, translate_j

RULESET_MP_GEN = "mp+gen"
RULESET_MP_SUBST = "mp+subst"
_RULES = {RULESET_MP_GEN: frozenset({"mp", "gen"}), RULESET_MP_SUBST: frozenset({"mp", "subst"})}

REASON_ORACLE = "oracle-reject"
REASON_MP = "mp-mismatch"
REASON_GEN = "gen-mismatch"
REASON_SUBST = "subst-mismatch"
REASON_FORWARD = "forward-reference"
REASON_RULE = "rule-not-in-set"


@dataclass(frozen=True)
class Axiom:
    oracle: str


@dataclass(frozen=True)
class MP:
    i: int  # the antecedent step
    j: int  # the implication step


@dataclass(frozen=True)
class Gen:
    i: int
    var: int


@dataclass(frozen=True)
class Subst:
    i: int
    mapping: tuple[tuple[PropVar, PropFormula], ...]

    @classmethod
    def of(cls, i: int, e: Mapping[PropVar, PropFormula]) -> "Subst":
        return cls(i, tuple(sorted(e.items(), key=lambda kv: kv[0].sort_key())))

    @property
    def mapping_dict(self) -> dict[PropVar, PropFormula]:
        return dict(self.mapping)


Justification = Union[Axiom, MP, Gen, Subst]


@dataclass(frozen=True)
class Step:
    index: int
    formula: Formula
    just: Justification


@dataclass
class Derivation:
    sort: str  # "prop" | "fo" | "arith"
    steps: list[Step]

    def conclusion(self) -> Formula:
        return self.steps[-1].formula


@dataclass
class StepError:
    index: int
    reason: str
    detail: str = ""


@dataclass
class CheckResult:
    ok: bool
    error: StepError | None = None
    evidence: list[dict] = field(default_factory=list)


# --- oracles -------------------------------------------------------------


class SetOracle:
    """Syntactic membership in a fixed finite set of formulas."""

    def __init__(self, name: str, formulas: Iterable[Formula]):
        self.name = name
        self.formulas = frozenset(formulas)

    def contains(self, phi: Formula) -> bool:
        return phi in self.formulas

    def evidence(self, phi: Formula) -> dict:
        return {"oracle": self.name, "matched": render(phi)}


class MatrixOracle:
    """Propositional formulas valid in a matrix, decided by valuation scan."""

    def __init__(self, name: str, matrix: LogicalMatrix = MD):
        self.name = name
        self.matrix = matrix

    def contains(self, phi: Formula) -> bool:
        if sort_of(phi) != "prop":
            return False
        return validity(self.matrix, phi).valid

    def evidence(self, phi: Formula) -> dict:
        return {"oracle": self.name, "matrix": self.matrix.name, "verdict": "valid"}


class InductionOracle:
    """Schema match for induction instances."""

    def __init__(self, name: str = "induction"):
        self.name = name

    @staticmethod
    def match(phi: Formula):
        if not (isinstance(phi, Bin) and phi.op is Connective.IMPL):
            return None
        left, right = phi.left, phi.right
        if not (isinstance(right, Forall) and isinstance(left, Bin) and left.op is Connective.CONJ):
            return None
        base, step_part = left.left, left.right
        var, body = right.var, right.body
        if not (isinstance(step_part, Forall) and step_part.var == var):
            return None
        inner = step_part.body
        if not (isinstance(inner, Bin) and inner.op is Connective.IMPL and inner.left == body):
            return None
        if base != substitute_term(body, var, One()):
            return None
        if inner.right != substitute_term(body, var, Add(Var(var), One())):
            return None
        return var, body

    def contains(self, phi: Formula) -> bool:
        return self.match(phi) is not None

    def evidence(self, phi: Formula) -> dict:
        var, body = self.match(phi)
        return {"oracle": self.name, "schema_variable": f"x{var}", "body": render(body)}


class CertifiedLogicalOracle:
    """Certified-classically-valid formulas whose erased image is valid in the
    three-valued matrix.

    The classical side is either a registry of generator-certified formulas
    (closed under weakening by a certified consequent) or, for standalone
    checking, the decidable necessary condition that the erased image is
    two-valued valid; the registry route is authoritative, the skeleton
    route is labelled as such in the evidence.
    """

    def __init__(self, name: str = "logical", registry: Iterable[Formula] = (), policy: str = "registry"):
        if policy not in ("registry", "skeleton"):
            raise ValueError(f"unknown policy {policy!r}")
        self.name = name
        self.registry = frozenset(registry)
        self.policy = policy

    def _image(self, phi: Formula) -> PropFormula:
        return translate_i(phi) if sort_of(phi) == "arith" else translate_j(phi)

    def _l2_side(self, phi: Formula) -> str | None:
        if self.policy == "registry":
            if phi in self.registry:
                return "registry"
            if isinstance(phi, Bin) and phi.op is Connective.IMPL and phi.right in self.registry:
                return "registry-weakening"
            return None
        return "skeleton" if validity(M2, self._image(phi)).valid else None

    def contains(self, phi: Formula) -> bool:
        if sort_of(phi) == "prop":
            return False
        if self._l2_side(phi) is None:
            return False
        return validity(MD, self._image(phi)).valid

    def evidence(self, phi: Formula) -> dict:
        return {
            "oracle": self.name,
            "l2": self._l2_side(phi),
            "image": render(self._image(phi)),
            "image_verdict": "valid",
        }


def default_oracles(registry: Iterable[Formula] = (), policy: str = "skeleton") -> dict:
    """Oracle set used by the file-level proof checker and the service."""
    from .arithmetic.axioms import specific_axiom, specific_axioms

    oracles = {
        "specific": SetOracle("specific", [f for k, f in specific_axioms().items() if k != 14]),
        "induction": InductionOracle(),
        "md": MatrixOracle("md", MD),
        "logical": CertifiedLogicalOracle("logical", registry, policy),
        "premise": SetOracle("premise", [specific_axiom(14)]),
    }
    return oracles


# --- checking -------------------------------------------------------------


def check(derivation: Derivation, oracles: Mapping[str, object] | Iterable, rule_set: str = RULESET_MP_GEN) -> CheckResult:
    """Validate every step; Ok only if all steps pass."""
    if rule_set not in _RULES:
        raise ValueError(f"unknown rule set {rule_set!r}")
    allowed = _RULES[rule_set]
    if not isinstance(oracles, Mapping):
        oracles = {o.name: o for o in oracles}

    result = CheckResult(ok=True)
    formulas: list[Formula] = []
    for pos, step in enumerate(derivation.steps, start=1):
        if step.index != pos:
            return CheckResult(False, StepError(step.index, REASON_FORWARD, f"expected index {pos}"))
        just = step.just
        if isinstance(just, Axiom):
            oracle = oracles.get(just.oracle)
            if oracle is None:
                return CheckResult(False, StepError(pos, REASON_ORACLE, f"unknown oracle {just.oracle!r}"))
            if not oracle.contains(step.formula):
                return CheckResult(False, StepError(pos, REASON_ORACLE, f"oracle {just.oracle!r} rejects the formula"))
            result.evidence.append(oracle.evidence(step.formula))
        elif isinstance(just, MP):
            if "mp" not in allowed:
                return CheckResult(False, StepError(pos, REASON_RULE, "mp"))
            if not (1 <= just.i < pos and 1 <= just.j < pos):
                return CheckResult(False, StepError(pos, REASON_FORWARD, f"mp:{just.i},{just.j}"))
            expected = Bin(Connective.IMPL, formulas[just.i - 1], step.formula)
            if formulas[just.j - 1] != expected:
                return CheckResult(False, StepError(pos, REASON_MP, f"step {just.j} is not step {just.i} -> step {pos}"))
            result.evidence.append({"rule": "mp", "from": [just.i, just.j]})
        elif isinstance(just, Gen):
            if "gen" not in allowed:
                return CheckResult(False, StepError(pos, REASON_RULE, "gen"))
            if not 1 <= just.i < pos:
                return CheckResult(False, StepError(pos, REASON_FORWARD, f"gen:{just.i}"))
            if step.formula != Forall(just.var, formulas[just.i - 1]):
                return CheckResult(False, StepError(pos, REASON_GEN, f"not the x{just.var}-generalization of step {just.i}"))
            result.evidence.append({"rule": "gen", "from": [just.i], "variable": f"x{just.var}"})
        elif isinstance(just, Subst):
            if "subst" not in allowed:
                return CheckResult(False, StepError(pos, REASON_RULE, "subst"))
            if not 1 <= just.i < pos:
                return CheckResult(False, StepError(pos, REASON_FORWARD, f"subst:{just.i}"))
            if step.formula != subst_prop(just.mapping_dict, formulas[just.i - 1]):
                return CheckResult(False, StepError(pos, REASON_SUBST, f"not the given substitution instance of step {just.i}"))
            result.evidence.append({"rule": "subst", "from": [just.i]})
        else:
            raise TypeError(f"unknown justification {just!r}")
        formulas.append(step.formula)
    return result


# --- bounded forward closure ----------------------------------------------


def closure_probe(
    seeds: Iterable[Formula],
    rule_set: str,
    depth: int,
    *,
    gen_vars: Iterable[int] = (),
    substitutions: Iterable[Mapping[PropVar, PropFormula]] = (),
    budget: int = 5000,
) -> set[Formula]:
    """All formulas derivable from the seeds in at most `depth` rule
    applications. Generalization and substitution are enumerated over the
    given finite pools."""
    known, _ = _closure_with_provenance(seeds, rule_set, depth, tuple(gen_vars), tuple(substitutions), budget)
    return set(known)


def closure_probe_derivations(
    seeds: Iterable[Formula],
    rule_set: str,
    depth: int,
    *,
    gen_vars: Iterable[int] = (),
    substitutions: Iterable[Mapping[PropVar, PropFormula]] = (),
    budget: int = 5000,
    seed_oracle: str = "seed",
) -> dict[Formula, Derivation]:
    """A checkable derivation (seed steps justified by `seed_oracle`) for every
    formula the probe reaches."""
    known, sort = _closure_with_provenance(seeds, rule_set, depth, tuple(gen_vars), tuple(substitutions), budget)
    out = {}
    for phi in known:
        steps: list[Step] = []
        index_of: dict[Formula, int] = {}

        def emit(f: Formula) -> int:
            if f in index_of:
                return index_of[f]
            prov = known[f]
            if prov[0] == "seed":
                just: Justification = Axiom(seed_oracle)
            elif prov[0] == "mp":
                just = MP(emit(prov[1]), emit(prov[2]))
            elif prov[0] == "gen":
                just = Gen(emit(prov[1]), prov[2])
            else:
                just = Subst.of(emit(prov[1]), dict(prov[2]))
            index = len(steps) + 1
            steps.append(Step(index, f, just))
            index_of[f] = index
            return index

        emit(phi)
        out[phi] = Derivation(sort, steps)
    return out


def _closure_with_provenance(seeds, rule_set, depth, gen_vars, substitutions, budget):
    if rule_set not in _RULES:
        raise ValueError(f"unknown rule set {rule_set!r}")
    allowed = _RULES[rule_set]
    known: dict[Formula, tuple] = {}
    sort = None
    for phi in seeds:
        sort = sort or sort_of(phi)
        known.setdefault(phi, ("seed",))
    if sort is None:
        raise ValueError("no seed formulas")

    subst_pool = tuple(tuple(sorted(e.items(), key=lambda kv: kv[0].sort_key())) for e in substitutions)
    for _ in range(depth):
        new: dict[Formula, tuple] = {}

        def note(f, prov):
            if f not in known and f not in new:
                new[f] = prov
                if len(known) + len(new) > budget:
                    raise BudgetExceeded(f"closure probe exceeded its budget of {budget} formulas")

        if "mp" in allowed:
            for imp in list(known):
                if isinstance(imp, Bin) and imp.op is Connective.IMPL and imp.left in known:
                    note(imp.right, ("mp", imp.left, imp))
        if "gen" in allowed:
            for phi in list(known):
                for v in gen_vars:
                    note(Forall(v, phi), ("gen", phi, v))
        if "subst" in allowed:
            for phi in list(known):
                for e in subst_pool:
                    note(subst_prop(dict(e), phi), ("subst", phi, e))
        known.update(new)
    return known, sort


# --- serialization ----------------------------------------------------------


def _encode_just(just: Justification) -> str:
    if isinstance(just, Axiom):
        return f"axiom:{just.oracle}"
    if isinstance(just, MP):
        return f"mp:{just.i},{just.j}"
    if isinstance(just, Gen):
        return f"gen:{just.i},x{just.var}"
    mapping = {str(v): render(f) for v, f in just.mapping}
    return f"subst:{just.i}," + json.dumps(mapping, sort_keys=True)


def _decode_just(text: str, lineno: int) -> Justification:
    kind, _, rest = text.partition(":")
    try:
        if kind == "axiom":
            if not rest:
                raise ValueError("empty oracle name")
            return Axiom(rest)
        if kind == "mp":
            i, j = rest.split(",")
            return MP(int(i), int(j))
        if kind == "gen":
            i, var = rest.split(",")
            if not var.startswith("x"):
                raise ValueError("generalization variable must look like x<k>")
            return Gen(int(i), int(var[1:]))
        if kind == "subst":
            i, _, mapping_json = rest.partition(",")
            mapping = json.loads(mapping_json)
            from .syntax import parse_prop

            e = {}
            for var_text, formula_text in mapping.items():
                atom = parse_prop(var_text)
                if not isinstance(atom, Atom):
                    raise ValueError(f"substitution key {var_text!r} is not an atom")
                e[atom.var] = parse_prop(formula_text)
            return Subst.of(int(i), e)
    except (ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"line {lineno}: bad justification {text!r}: {exc}", 0) from None
    raise ParseError(f"line {lineno}: unknown justification kind {kind!r}", 0)


def derivation_to_jsonl(derivation: Derivation) -> str:
    lines = [json.dumps({"sort": derivation.sort})]
    for step in derivation.steps:
        lines.append(
            json.dumps(
                {"i": step.index, "formula": render(step.formula), "just": _encode_just(step.just)},
                sort_keys=True,
            )
        )
    return "\n".join(lines) + "\n"


def derivation_from_jsonl(text: str) -> Derivation:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty derivation file", 0)
    header = json.loads(lines[0])
    sort = header.get("sort")
    if sort not in ("prop", "fo", "arith"):
        raise ParseError(f"header must declare sort prop|fo|arith, got {sort!r}", 0)
    steps = []
    for lineno, line in enumerate(lines[1:], start=2):
        record = json.loads(line)
        steps.append(Step(int(record["i"]), parse(sort, record["formula"]), _decode_just(record["just"], lineno)))
    return Derivation(sort, steps)
