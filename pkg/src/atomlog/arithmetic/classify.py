"""Classification of certified logical axioms and the bridge derivations
that recover every excluded axiom by one modus ponens step.

An axiom is admitted when its erased image is valid in the three-valued
matrix; otherwise it is excluded, with the first counter-valuation as
witness. An excluded axiom necessarily mixes both predicates (a one-atom
image of a classically valid formula is automatically matrix-valid), so
the order-defining axiom, whose image is the equivalence of the two image
atoms, bridges it: the implication "order-axiom -> excluded-axiom" has a
matrix-valid image and a classically valid consequent, hence is itself an
admissible axiom, and modus ponens recovers the excluded one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from ..errors import EvidenceError, PreconditionError
from ..matrix import M2, MD, validity
from ..proofcheck import Axiom, Derivation, MP, Step
from ..syntax import ArithFormula, PropFormula, impl, predicate_letters, render
from ..translate import translate_i
from .axioms import specific_axiom
from .corpus import CertifiedAxiom

BRIDGE_SOURCES = ("psi12", "psi14")


@dataclass
class AxiomClass:
    admitted: bool
    image: PropFormula
    witness: dict | None = None
    value: int | None = None

    @property
    def label(self) -> str:
        return "admitted" if self.admitted else "excluded"


def classify_axiom(axiom: Union[CertifiedAxiom, ArithFormula]) -> AxiomClass:
    """Admitted iff the erased image is matrix-valid; the caller (or the
    corpus certificate) vouches for classical validity."""
    formula = axiom.formula if isinstance(axiom, CertifiedAxiom) else axiom
    image = translate_i(formula)
    verdict = validity(MD, image)
    if verdict.valid:
        return AxiomClass(True, image)
    return AxiomClass(False, image, verdict.witness, verdict.value)


def classification_record(axiom: Union[CertifiedAxiom, ArithFormula], cls: AxiomClass | None = None) -> dict:
    """One JSON-lines record: {formula, class, witness?, image}."""
    cls = cls or classify_axiom(axiom)
    formula = axiom.formula if isinstance(axiom, CertifiedAxiom) else axiom
    record: dict = {"formula": render(formula), "class": cls.label, "image": render(cls.image)}
    if isinstance(axiom, CertifiedAxiom):
        record["kind"] = axiom.kind
    if cls.witness is not None:
        record["witness"] = {str(v): t for v, t in sorted(cls.witness.items(), key=lambda kv: kv[0].sort_key())}
        record["value"] = cls.value
    return record


def bridge_derivation(alpha: ArithFormula, via: str = "psi12") -> Derivation:
    """Three-step recovery of an excluded axiom alpha:

      1  the order-defining axiom (or its successor variant as a derived premise)
      2  order-axiom -> alpha      admissible: image checked matrix-valid here
      3  alpha                      by modus ponens

    Refuses when alpha is admitted (no bridge needed) or when the step-2
    image check fails, which cannot happen for corpus members.
    """
    if via not in BRIDGE_SOURCES:
        raise ValueError(f"via must be one of {BRIDGE_SOURCES}")
    cls = classify_axiom(alpha)
    if cls.admitted:
        raise PreconditionError("axiom is admitted; nothing to bridge")
    source = specific_axiom(12 if via == "psi12" else 14)
    step2_formula = impl(source, alpha)
    evidence = validity(MD, translate_i(step2_formula))
    if not evidence.valid:
        raise EvidenceError(
            f"image of the bridge implication is not matrix-valid (witness {evidence.witness})"
        )
    step1_oracle = "specific" if via == "psi12" else "premise"
    steps = [
        Step(1, source, Axiom(step1_oracle)),
        Step(2, step2_formula, Axiom("logical")),
        Step(3, alpha, MP(1, 2)),
    ]
    return Derivation("arith", steps)


@dataclass
class LemmaViolation:
    formula: str
    detail: str


@dataclass
class LemmaReport:
    checked: int = 0
    single_predicate: int = 0
    violations: list[LemmaViolation] | None = None

    def __post_init__(self):
        if self.violations is None:
            self.violations = []

    @property
    def ok(self) -> bool:
        return not self.violations


def one_atom_lemma_check(corpus: Iterable[Union[CertifiedAxiom, ArithFormula]]) -> LemmaReport:
    """On single-predicate members, matrix validity of the image must coincide
    with two-valued validity, so every such member classifies admitted."""
    report = LemmaReport()
    for axiom in corpus:
        report.checked += 1
        formula = axiom.formula if isinstance(axiom, CertifiedAxiom) else axiom
        letters = predicate_letters(formula)
        if len(letters) != 1:
            continue
        report.single_predicate += 1
        image = translate_i(formula)
        in_td = validity(MD, image).valid
        in_z2 = validity(M2, image).valid
        if in_td != in_z2:
            report.violations.append(
                LemmaViolation(render(formula), f"image {render(image)}: md-valid={in_td}, m2-valid={in_z2}")
            )
        elif not in_td:
            report.violations.append(
                LemmaViolation(render(formula), "certified member with single predicate classifies excluded")
            )
    return report
