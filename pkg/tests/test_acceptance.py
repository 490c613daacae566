"""Acceptance suite: one test per criterion, each printing a pass/fail line
and enforcing its runtime budget. The claim engine in atomlog.report does
the work; this module pins the budgets, the seed and a handful of frozen
values re-checked through the independent oracle."""
import time
from pathlib import Path

import pytest

from atomlog import report
from atomlog.matrix import MD, table_dump, validity
from atomlog.syntax import parse_prop, sorted_atoms

import oracle_tables as oracle

SEED = 7
GOLDEN = Path(__file__).parent / "golden"


def run_claim(fn, budget_seconds):
    start = time.perf_counter()
    result = fn(SEED)
    elapsed = time.perf_counter() - start
    status = "PASS" if result.passed and elapsed < budget_seconds else "FAIL"
    print(f"{status} criterion {result.number:2d} {result.claim:<24} {result.summary} [{elapsed:.2f}s / {budget_seconds:.0f}s]")
    assert result.passed, result.details
    assert elapsed < budget_seconds, f"{result.claim} took {elapsed:.2f}s, budget {budget_seconds}s"
    return result


def test_criterion_01_table_fidelity():
    result = run_claim(report.claim_table_fidelity, 1.0)
    assert result.details["entries"] == 39
    # golden-file comparison, zero tolerance
    assert table_dump(MD) == (GOLDEN / "table_md.txt").read_text()


def test_criterion_02_reduct_coherence():
    result = run_claim(report.claim_reduct_coherence, 10.0)
    assert result.details["formulas"] == 161354
    assert result.details["violations"] == 0


def test_criterion_03_subset_and_mp_closure():
    result = run_claim(report.claim_subset_and_mp, 30.0)
    assert result.details["subset_violations"] == 0
    assert result.details["mp_violations"] == 0
    assert result.details["mp_pairs"] > 0


def test_criterion_04_one_atom_lemma():
    result = run_claim(report.claim_one_atom_lemma, 10.0)
    assert result.details["formulas"] == 92306
    assert result.details["violations"] == 0


def test_criterion_05_named_verdicts():
    run_claim(report.claim_named_verdicts, 5.0)
    # frozen witnesses re-derived through the independent oracle
    for text, expected in ((("(p & q) -> p"), ({"p": 2, "q": 1}, 0)), (("p -> (p | q)"), ({"p": 2, "q": 0}, 0))):
        phi = parse_prop(text)
        witness, value = oracle.first_counterexample3(phi, sorted_atoms(phi))
        assert ({str(v): t for v, t in witness.items()}, value) == expected
        verdict = validity(MD, phi)
        assert (verdict.witness, verdict.value) == (witness, value)


def test_criterion_06_translation_laws():
    result = run_claim(report.claim_translation_laws, 30.0)
    assert result.details["formulas"] == 10000
    assert not result.details["violations"]


def test_criterion_07_classify_and_bridge():
    result = run_claim(report.claim_classify_and_bridge, 60.0)
    assert result.details["members"] >= 500
    assert result.details["excluded"] > 0
    assert not result.details["failures"]


def test_criterion_08_quantifier_absorption():
    result = run_claim(report.claim_quantifier_absorption, 30.0)
    assert not result.details["not_admitted"]


def test_criterion_09_entailment_harness():
    result = run_claim(report.claim_entailment_harness, 60.0)
    assert result.details["pairs"] == 1000
    assert result.details["contradictions"] == 0


def test_criterion_10_axiom_fidelity():
    result = run_claim(report.claim_axiom_fidelity, 5.0)
    assert not result.details["failures"]


def test_criterion_11_performance_guard():
    result = run_claim(report.claim_performance_guard, 5.0)
    assert result.details["valid"]


def test_criterion_12_countermodel_soundness():
    result = run_claim(report.claim_countermodel_soundness, 30.0)
    assert result.details["corpus"] == 200
    assert not result.details["unsound"]


@pytest.fixture(scope="session", autouse=True)
def summary(request):
    yield
    print("\nacceptance criteria complete")
