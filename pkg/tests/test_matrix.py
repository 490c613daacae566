import itertools
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from atomlog.errors import CapExceeded, DomainError, SignatureError
from atomlog.matrix import (
    M2,
    MD,
    MDP,
    builtin,
    delta_expand,
    eval_formula,
    mp_preserving,
    table_dump,
    validity,
)
from atomlog.syntax import Atom, Connective, PropVar, parse_prop, sorted_atoms

import oracle_tables as oracle
from test_render_roundtrip import prop_formulas

GOLDEN = Path(__file__).parent / "golden"

p, q = PropVar("p"), PropVar("q")


def test_builtin_lookup():
    assert builtin("md") is MD and builtin("M2") is M2 and builtin("mdp") is MDP
    with pytest.raises(ValueError):
        builtin("m4")


def test_md_tables_match_independent_transcription():
    for op, table in oracle.BIN3.items():
        for (a, b), value in table.items():
            assert MD.tables[op][a][b] == value
    for a, value in oracle.NEG3.items():
        assert MD.neg[a] == value
    assert set(MD.designated) == oracle.DESIGNATED3


def test_named_table_entries():
    assert MD.tables[Connective.IMPL][1][2] == 0
    assert MD.neg[2] == 2
    assert M2.tables[Connective.IMPL][0][0] == 1


def test_mdp_is_reduct():
    assert set(MDP.tables) == {Connective.IMPL}
    assert MDP.tables[Connective.IMPL] == MD.tables[Connective.IMPL]
    assert MDP.neg == MD.neg and MDP.designated == MD.designated


def test_eval_examples():
    assert eval_formula(MD, parse_prop("p -> q"), {p: 0, q: 2}) == 1
    assert eval_formula(MD, parse_prop("p | q"), {p: 2, q: 0}) == 0
    # f&(2,1)=1 then f->(1,2)=0
    assert eval_formula(MD, parse_prop("(p & q) -> p"), {p: 2, q: 1}) == 0


def test_eval_domain_error():
    with pytest.raises(DomainError):
        eval_formula(MD, parse_prop("p & q"), {p: 1})


def test_mdp_signature_error():
    with pytest.raises(SignatureError):
        eval_formula(MDP, parse_prop("p | q"), {p: 1, q: 1})
    with pytest.raises(SignatureError):
        validity(MDP, parse_prop("p & q"))


@pytest.mark.parametrize(
    "text,expect_valid,expect_witness,expect_value",
    [
        ("p -> p", True, None, None),
        ("p | ~p", True, None, None),
        ("(p & q) -> p", False, {"p": 2, "q": 1}, 0),
        ("p -> (p | q)", False, {"p": 2, "q": 0}, 0),
        ("(p & q) -> (p | q)", True, None, None),
    ],
)
def test_named_verdicts_against_oracle(text, expect_valid, expect_witness, expect_value):
    phi = parse_prop(text)
    order = sorted_atoms(phi)
    expected = oracle.first_counterexample3(phi, order)
    verdict = validity(MD, phi)
    assert verdict.valid == expect_valid == (expected is None)
    if not expect_valid:
        assert {str(v): t for v, t in verdict.witness.items()} == expect_witness
        assert verdict.value == expect_value
        oracle_witness, oracle_value = expected
        assert verdict.witness == oracle_witness and verdict.value == oracle_value


def test_classical_validity():
    assert validity(M2, parse_prop("(p & q) -> p")).valid
    assert not validity(M2, parse_prop("p -> q")).valid
    assert validity(M2, parse_prop("p -> q")).witness == {p: 1, q: 0}


@settings(max_examples=200)
@given(prop_formulas)
def test_validity_agrees_with_bruteforce(phi):
    order = sorted_atoms(phi)
    expected = oracle.first_counterexample3(phi, order)
    verdict = validity(MD, phi)
    if expected is None:
        assert verdict.valid
    else:
        assert not verdict.valid
        assert (verdict.witness, verdict.value) == expected


@settings(max_examples=150)
@given(prop_formulas, st.data())
def test_eval_matches_oracle_pointwise(phi, data):
    valuation = {v: data.draw(st.integers(0, 2)) for v in sorted_atoms(phi)}
    assert eval_formula(MD, phi, valuation) == oracle.eval3(phi, valuation)


@settings(max_examples=150)
@given(prop_formulas)
def test_homogeneity_of_two(phi):
    valuation = {v: 2 for v in sorted_atoms(phi)}
    assert eval_formula(MD, phi, valuation) == 2


@settings(max_examples=150)
@given(prop_formulas, st.data())
def test_classical_restriction(phi, data):
    valuation = {v: data.draw(st.integers(0, 1)) for v in sorted_atoms(phi)}
    assert eval_formula(MD, phi, valuation) == eval_formula(M2, phi, valuation)


@settings(max_examples=150)
@given(prop_formulas, st.data())
def test_delta_expansion_coherence(phi, data):
    valuation = {v: data.draw(st.integers(0, 2)) for v in sorted_atoms(phi)}
    assert eval_formula(MDP, delta_expand(phi), valuation) == eval_formula(MD, phi, valuation)


def test_mp_preservation_by_table_scan():
    assert mp_preserving(MD)
    assert mp_preserving(M2)
    # independent 9-entry scan
    for u, w in itertools.product(range(3), repeat=2):
        if u in oracle.DESIGNATED3 and oracle.IMPL3[(u, w)] in oracle.DESIGNATED3:
            assert w in oracle.DESIGNATED3


def test_atom_cap():
    phi = parse_prop(" & ".join(f"p{i}" for i in range(1, 6)))
    with pytest.raises(CapExceeded):
        validity(MD, phi, cap=4)
    assert validity(MD, phi, cap=5).valid is False


def test_atom_cap_env(monkeypatch):
    phi = parse_prop("p1 & p2 & p3")
    monkeypatch.setenv("ATOMLOG_ATOM_CAP", "2")
    with pytest.raises(CapExceeded):
        validity(MD, phi)
    monkeypatch.delenv("ATOMLOG_ATOM_CAP")
    validity(MD, phi)


def test_vectorized_path_matches_python_path():
    # 7 atoms crosses the numpy threshold; force both paths on the same formulas
    texts = [
        " -> ".join(f"p{i}" for i in range(1, 8)),
        "(" + " & ".join(f"p{i}" for i in range(1, 8)) + ") -> p1",
        " | ".join(f"p{i}" for i in range(1, 8)),
        "(" + " & ".join(f"p{i}" for i in range(1, 8)) + ") -> (p1 & p9)",
    ]
    from atomlog.matrix.core import _scan_python, _scan_vectorized

    for text in texts:
        phi = parse_prop(text)
        order = sorted_atoms(phi)
        a = _scan_python(MD, phi, order)
        b = _scan_vectorized(MD, phi, order)
        assert a.valid == b.valid and a.witness == b.witness and a.value == b.value


def test_validity_deterministic_under_threads():
    phi = parse_prop("(p & q) -> (q & p & s3)")
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: validity(MD, phi), range(16)))
    first = results[0]
    for r in results[1:]:
        assert r.valid == first.valid and r.witness == first.witness and r.value == first.value


def test_table_dump_golden_files():
    for matrix, name in ((MD, "table_md.txt"), (M2, "table_m2.txt"), (MDP, "table_mdp.txt")):
        assert table_dump(matrix) == (GOLDEN / name).read_text()


def test_table_dump_rows():
    dump = table_dump(MD)
    # conjunction rows 0 0 0 / 0 1 1 / 0 1 2 and equivalence rows 1 0 0 / 0 1 0 / 0 0 2
    assert "f&\n  | 0 1 2\n0 | 0 0 0\n1 | 0 1 1\n2 | 0 1 2" in dump
    assert "f<->\n  | 0 1 2\n0 | 1 0 0\n1 | 0 1 0\n2 | 0 0 2" in dump
    assert "f~\n0 | 1\n1 | 0\n2 | 2" in dump
