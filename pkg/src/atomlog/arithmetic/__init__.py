"""Arithmetic axiom system: specific axioms, induction schema, certified
logical-axiom corpus, classification and bridge derivations."""

from .axioms import SPECIFIC_AXIOM_KEYS, induction_instance, specific_axiom, specific_axioms
from .classify import (
    AxiomClass,
    BRIDGE_SOURCES,
    LemmaReport,
    bridge_derivation,
    classification_record,
    classify_axiom,
    one_atom_lemma_check,
)
from .corpus import (
    ALL_KINDS,
    CertifiedAxiom,
    DEFAULT_ATOM_POOL,
    KIND_EXISTS_DUAL,
    KIND_FORALL_INST,
    KIND_PROP_INSTANCE,
    KIND_VACUOUS_GEN,
    QUANTIFIER_KINDS,
    SchemaSpec,
    generate_logical_axioms,
)

__all__ = [
    "SPECIFIC_AXIOM_KEYS", "induction_instance", "specific_axiom", "specific_axioms",
    "AxiomClass", "BRIDGE_SOURCES", "LemmaReport", "bridge_derivation",
    "classification_record", "classify_axiom", "one_atom_lemma_check",
    "ALL_KINDS", "CertifiedAxiom", "DEFAULT_ATOM_POOL", "KIND_EXISTS_DUAL",
    "KIND_FORALL_INST", "KIND_PROP_INSTANCE", "KIND_VACUOUS_GEN",
    "QUANTIFIER_KINDS", "SchemaSpec", "generate_logical_axioms",
]
