"""Atomic and classical entailment decisions, and membership in the
atomic predicate logic (classically valid formulas whose erased image is
valid in the three-valued matrix).

The propositional atomic-entailment decision reduces to one matrix
validity check of the implication premise -> conclusion: the validity set
is closed under modus ponens, so the consequence operation fixes it, and
the defining substitution conditions are equivalent to membership of the
implication. The direct definition quantifies over all substitutions and
is exercised here only as a sampled consistency harness.

Classical first-order validity is undecidable, so verdicts that depend on
it carry an explicit evidence level: 'assumed' (caller certifies),
'skeleton' (two-valued validity of the erased image, a sound refuter),
'refuted' (finite countermodel found) or 'unknown'.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .matrix import M2, MD, FiniteStructure, Verdict, fo_countermodel_search, validity
from .syntax import (
    Bin,
    Connective,
    FOFormula,
    Neg,
    PropFormula,
    atoms,
    render,
    universal_closure,
)
from .translate import PropSubstitution, subst_prop, translate_j

REASON_NOT_VALID = "not-valid-in-matrix"
REASON_ATOM_INCLUSION = "atom-inclusion"
REASON_L2_REFUTED = "l2-refuted"
REASON_L2_UNKNOWN = "l2-unknown"


@dataclass(frozen=True)
class Assume:
    """Caller certifies classical validity (schema-generated corpora)."""


@dataclass(frozen=True)
class SkeletonNecessary:
    """Require two-valued validity of the erased image; refutes soundly,
    never confirms."""


@dataclass(frozen=True)
class BoundedRefute:
    max_domain: int

    def __post_init__(self):
        if self.max_domain < 1:
            raise ValueError("max_domain must be >= 1")


L2Mode = Union[Assume, SkeletonNecessary, BoundedRefute]


@dataclass
class EntailVerdict:
    holds: bool
    reason: str | None = None
    witness: dict | None = None
    value: int | None = None
    countermodel: FiniteStructure | None = None
    evidence: str = ""
    authoritative: bool = True

    def to_json(self) -> dict:
        out: dict = {"holds": self.holds, "evidence": self.evidence, "authoritative": self.authoritative}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = {str(v): t for v, t in sorted(self.witness.items(), key=lambda kv: kv[0].sort_key())}
        if self.value is not None:
            out["value"] = self.value
        if self.countermodel is not None:
            out["countermodel"] = self.countermodel.to_json()
        return out


def _from_matrix(verdict: Verdict, evidence: str) -> EntailVerdict:
    if verdict.valid:
        return EntailVerdict(True, evidence=evidence)
    return EntailVerdict(
        False,
        reason=REASON_NOT_VALID,
        witness=verdict.witness,
        value=verdict.value,
        evidence=evidence,
    )


def atomic_entails_prop(phi: PropFormula, psi: PropFormula, *, cap: int | None = None) -> EntailVerdict:
    """Does psi result atomically from phi over the modus-ponens system on the
    three-valued validity set? Decided as validity of phi -> psi in that matrix."""
    return _from_matrix(validity(MD, Bin(Connective.IMPL, phi, psi), cap=cap), "matrix:md")


def classical_entails_prop(phi: PropFormula, psi: PropFormula, *, cap: int | None = None) -> EntailVerdict:
    return _from_matrix(validity(M2, Bin(Connective.IMPL, phi, psi), cap=cap), "matrix:m2")


@dataclass
class SampleRecord:
    substitution: dict[str, str]
    cond1: bool
    cond2: bool
    agree: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "substitution": self.substitution,
            "cond1": self.cond1,
            "cond2": self.cond2,
            "agree": self.agree,
            "detail": self.detail,
        }


@dataclass
class Def41Report:
    verdict: EntailVerdict
    samples: list[SampleRecord] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(s.agree for s in self.samples)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.to_json(),
            "consistent": self.consistent,
            "samples": [s.to_json() for s in self.samples],
        }


def def41_direct_check(
    phi: PropFormula,
    psi: PropFormula,
    substitution_samples: list[PropSubstitution],
    *,
    cap: int | None = None,
) -> Def41Report:
    """Exercise the defining conditions of atomic entailment on sampled
    substitutions and compare with the matrix-decided verdict.

    Condition 1: image of phi valid implies image of psi valid and atom
    inclusion. Condition 2: the same pattern on the starred forms
    (~psi -> ~phi) -> ~phi. A passing sample set is evidence, not proof;
    a violated condition under a Holds verdict is a genuine contradiction
    and flips `agree` to False.
    """
    verdict = atomic_entails_prop(phi, psi, cap=cap)
    report = Def41Report(verdict)
    for e in substitution_samples:
        h_phi = subst_prop(e, phi)
        h_psi = subst_prop(e, psi)
        detail = []

        cond1 = True
        if validity(MD, h_phi, cap=cap).valid:
            if not validity(MD, h_psi, cap=cap).valid:
                cond1 = False
                detail.append("cond1:" + REASON_NOT_VALID)
            if not atoms(h_phi) <= atoms(h_psi):
                cond1 = False
                detail.append("cond1:" + REASON_ATOM_INCLUSION)

        star_phi, star_psi = Neg(h_phi), Neg(h_psi)
        cond2 = True
        if validity(MD, Bin(Connective.IMPL, Bin(Connective.IMPL, star_psi, star_phi), star_phi), cap=cap).valid:
            if not validity(MD, star_phi, cap=cap).valid:
                cond2 = False
                detail.append("cond2:" + REASON_NOT_VALID)
            if not atoms(star_psi) <= atoms(star_phi):
                cond2 = False
                detail.append("cond2:" + REASON_ATOM_INCLUSION)

        agree = not (verdict.holds and not (cond1 and cond2))
        report.samples.append(
            SampleRecord(
                substitution={str(v): render(f) for v, f in sorted(e.items(), key=lambda kv: kv[0].sort_key())},
                cond1=cond1,
                cond2=cond2,
                agree=agree,
                detail="; ".join(detail),
            )
        )
    return report


def in_ld(phi: FOFormula, mode: L2Mode, *, cap: int | None = None) -> EntailVerdict:
    """Membership in the atomic predicate logic: classically valid and the
    erased image valid in the three-valued matrix.

    The image conjunct is decided exactly; the classical conjunct is handled
    per mode. A failing image settles the verdict authoritatively whatever
    the mode."""
    image = translate_j(phi)
    image_verdict = validity(MD, image, cap=cap)

    if isinstance(mode, Assume):
        out = _from_matrix(image_verdict, "j-image:md; l2:assumed")
        return out

    if isinstance(mode, SkeletonNecessary):
        skeleton = validity(M2, image, cap=cap)
        if not skeleton.valid:
            # a two-valued counter-valuation induces a constant-predicate
            # countermodel, so this refutation is sound
            return EntailVerdict(
                False,
                reason=REASON_L2_REFUTED,
                witness=skeleton.witness,
                value=skeleton.value,
                evidence="l2:skeleton-refuted",
            )
        if not image_verdict.valid:
            return _from_matrix(image_verdict, "j-image:md; l2:skeleton-passed")
        return EntailVerdict(
            True,
            reason=None,
            evidence="j-image:md; l2:skeleton-necessary-only",
            authoritative=False,
        )

    if isinstance(mode, BoundedRefute):
        if not image_verdict.valid:
            return _from_matrix(image_verdict, "j-image:md; l2:not-checked")
        counter = fo_countermodel_search(phi, mode.max_domain)
        if counter is not None:
            return EntailVerdict(
                False,
                reason=REASON_L2_REFUTED,
                countermodel=counter,
                evidence=f"l2:refuted(domain={counter.domain_size})",
            )
        return EntailVerdict(
            True,
            reason=REASON_L2_UNKNOWN,
            evidence=f"j-image:md; l2:unknown(max_domain={mode.max_domain})",
            authoritative=False,
        )

    raise TypeError(f"unknown mode {mode!r}")


def atomic_entails_fo(phi: FOFormula, psi: FOFormula, mode: L2Mode, *, cap: int | None = None) -> EntailVerdict:
    """First-order atomic entailment: membership of (closure of premise) -> conclusion
    in the atomic predicate logic, which the generalization-and-modus-ponens
    consequence operation fixes."""
    return in_ld(Bin(Connective.IMPL, universal_closure(phi), psi), mode, cap=cap)
