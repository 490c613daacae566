import pytest

from atomlog.errors import CaptureError
from atomlog.syntax import (
    Add,
    Atom,
    Eq,
    Exists,
    Forall,
    Neg,
    One,
    Pred,
    PropVar,
    Succ,
    Var,
    atoms,
    free_for,
    free_vars,
    parse_arith,
    parse_fo,
    parse_prop,
    predicate_letters,
    star,
    subformulas,
    substitute_term,
    universal_closure,
)
from atomlog.arithmetic import specific_axiom


def test_atoms():
    assert atoms(parse_prop("p & q")) == {PropVar("p"), PropVar("q")}
    assert atoms(parse_prop("p -> (p -> p)")) == {PropVar("p")}
    assert atoms(parse_prop("~q1 <-> (s | q1)")) == {PropVar("q", 1), PropVar("s")}


def test_atoms_subformula_inclusion():
    phi = parse_prop("(p & q2) -> ~(s | p)")
    for sub in subformulas(phi):
        assert atoms(sub) <= atoms(phi)


def test_predicate_letters_fo():
    assert predicate_letters(parse_fo("P1_1(x1) & P2_2(x1, x2)")) == {(1, 1), (2, 2)}


def test_predicate_letters_arith():
    assert predicate_letters(specific_axiom(12)) == {"=", "<"}
    assert predicate_letters(specific_axiom(7)) == {"="}


def test_free_vars():
    assert free_vars(parse_fo("(all x1 P1_2(x1, x2))")) == {2}
    assert free_vars(parse_arith("x1 = x2")) == {1, 2}
    assert free_vars(specific_axiom(12)) == set()
    assert free_vars(parse_fo("P1_1(f1_1(x3)) | (ex x3 P1_1(x3))")) == {3}


def test_free_for():
    # substituting x2 for x1 under a binder of x2 would capture
    assert not free_for(1, Var(2), parse_fo("(all x2 P1_2(x1, x2))"))
    assert free_for(1, Var(2), parse_fo("P1_2(x1, x2)"))
    # term variables of x1+1 are just x1, which no free occurrence sits under
    assert free_for(1, Add(Var(1), One()), parse_arith("(all x2 x1 = x2)"))
    assert free_for(1, Succ(Var(1)), specific_axiom(9))
    # vacuous: x1 not free
    assert free_for(1, Var(2), parse_fo("(all x1 (all x2 P1_2(x1, x2)))"))


def test_substitute_term():
    assert substitute_term(parse_arith("x1 = x1"), 1, One()) == parse_arith("1 = 1")
    assert substitute_term(parse_arith("(all x1 x1 = x2)"), 2, Succ(Var(3))) == parse_arith("(all x1 x1 = S(x3))")
    with pytest.raises(CaptureError):
        substitute_term(parse_arith("(all x2 x1 = x2)"), 1, Var(2))


def test_substitute_identity_when_not_free():
    phi = parse_fo("(all x1 P1_1(x1))")
    assert substitute_term(phi, 1, Var(5)) == phi
    psi = parse_arith("x2 = x2")
    assert substitute_term(psi, 7, One()) == psi


def test_substitute_inside_function_args():
    phi = parse_fo("P1_1(f1_1(x1))")
    assert substitute_term(phi, 1, Var(4)) == parse_fo("P1_1(f1_1(x4))")


def test_universal_closure_ascending():
    assert universal_closure(parse_arith("x1 = x2")) == parse_arith("(all x1 (all x2 x1 = x2))")
    assert universal_closure(specific_axiom(1)) == specific_axiom(1)
    assert universal_closure(parse_fo("P1_1(x3)")) == parse_fo("(all x3 P1_1(x3))")
    assert universal_closure(parse_arith("x2 = x1")) == parse_arith("(all x1 (all x2 x2 = x1))")


def test_universal_closure_closes():
    for text in ("x1 = x2", "x4 < x2 + x9", "x1 = x1"):
        assert free_vars(universal_closure(parse_arith(text))) == set()


def test_star_propositional():
    phi = parse_prop("p & q")
    assert star(phi) == Neg(phi)


def test_star_open_formula_existential_closure():
    assert star(parse_fo("P1_1(x1)")) == Exists(1, Neg(Pred(1, (Var(1),))))
    assert star(parse_arith("x2 = x1")) == Exists(1, Exists(2, Neg(Eq(Var(2), Var(1)))))


def test_star_closed_formula_is_negation():
    psi1 = specific_axiom(1)
    assert star(psi1) == Neg(psi1)
    assert star(star(psi1)) == Neg(Neg(psi1))
    # double star is syntactic double negation, not the original formula
    assert star(star(psi1)) != psi1


def test_prop_var_validation():
    with pytest.raises(ValueError):
        PropVar("r")
    with pytest.raises(ValueError):
        PropVar("p", -1)
