import pytest

from atomlog.errors import ParseError
from atomlog.syntax import (
    Add,
    Atom,
    Bin,
    Connective,
    Eq,
    Exists,
    Forall,
    Fun,
    Lt,
    Mul,
    Neg,
    One,
    Pred,
    PropVar,
    Var,
    parse_arith,
    parse_fo,
    parse_prop,
)

p, q, s = Atom(PropVar("p")), Atom(PropVar("q")), Atom(PropVar("s"))
p2 = Atom(PropVar("p", 2))


def test_parse_identity():
    assert parse_prop("p -> p") == Bin(Connective.IMPL, p, p)


def test_parse_conjunction_premise():
    assert parse_prop("(p & q) -> p") == Bin(Connective.IMPL, Bin(Connective.CONJ, p, q), p)


def test_precedence_chain():
    # ~ binds tightest, then &, |, ->, <->
    assert parse_prop("~p2 | q <-> s") == Bin(Connective.EQUIV, Bin(Connective.DISJ, Neg(p2), q), s)


def test_impl_right_associative():
    assert parse_prop("p -> q -> s") == Bin(Connective.IMPL, p, Bin(Connective.IMPL, q, Bin(Connective.IMPL, q, s).right))
    assert parse_prop("p -> q -> s") == Bin(Connective.IMPL, p, Bin(Connective.IMPL, q, s))


def test_equiv_left_associative():
    assert parse_prop("p <-> q <-> s") == Bin(Connective.EQUIV, Bin(Connective.EQUIV, p, q), s)


def test_indexed_atoms_distinct_from_plain():
    assert parse_prop("p") != parse_prop("p0")
    assert PropVar("p").sort_key() < PropVar("p", 0).sort_key() < PropVar("p", 1).sort_key()
    assert PropVar("q").sort_key() > PropVar("p", 99).sort_key()


def test_syntax_error_reports_offset_and_expected():
    with pytest.raises(ParseError) as exc:
        parse_prop("p -> ")
    assert exc.value.position == 5
    assert any("atom" in e for e in exc.value.expected)


def test_unknown_character_rejected():
    with pytest.raises(ParseError):
        parse_prop("p -> r")  # r is not a propositional letter
    with pytest.raises(ParseError) as exc:
        parse_prop("p ? q")
    assert exc.value.position == 2


def test_non_ascii_rejected():
    with pytest.raises(ParseError):
        parse_prop("p → q")


def test_parse_fo_quantifier():
    phi = parse_fo("(all x1 (P1_1(x1) -> P1_1(x1)))")
    atom = Pred(1, (Var(1),))
    assert phi == Forall(1, Bin(Connective.IMPL, atom, atom))


def test_parse_fo_nested_terms():
    phi = parse_fo("(ex x3 P2_2(x1, f1_1(x3)))")
    assert phi == Exists(3, Pred(2, (Var(1), Fun(1, (Var(3),)))))


def test_same_index_different_arity_is_two_letters():
    phi = parse_fo("P1_1(x1) & P1_2(x1, x2)")
    left, right = phi.left, phi.right
    assert left.letter == (1, 1) and right.letter == (1, 2)


def test_fo_arity_mismatch_rejected():
    with pytest.raises(ParseError):
        parse_fo("P1_2(x1)")
    with pytest.raises(ParseError):
        parse_fo("(all x1 P1_1(x1, x2))")
    with pytest.raises(ParseError):
        parse_fo("f1_2(x1)")  # term position
    with pytest.raises(ParseError):
        parse_fo("P1_1(f1_2(x1))")


def test_parse_arith_atom():
    assert parse_arith("x1 = x1") == Eq(Var(1), Var(1))


def test_arith_term_precedence():
    assert parse_arith("x1 + x2 * x3 = x1") == Eq(Add(Var(1), Mul(Var(2), Var(3))), Var(1))


def test_arith_left_associativity():
    assert parse_arith("x1 + x2 + x3 = x1") == Eq(Add(Add(Var(1), Var(2)), Var(3)), Var(1))
    assert parse_arith("x1 * x2 * x3 = x1") == Eq(Mul(Mul(Var(1), Var(2)), Var(3)), Var(1))


def test_parse_arith_psi7_shape():
    phi = parse_arith("(all x1 ~(1 = x1 + 1))")
    assert phi == Forall(1, Neg(Eq(One(), Add(Var(1), One()))))


def test_parenthesized_term_vs_formula():
    assert parse_arith("(x1 + x2) + 1 = x3") == Eq(Add(Add(Var(1), Var(2)), One()), Var(3))
    assert parse_arith("((x1 = x2))") == Eq(Var(1), Var(2))
    assert parse_arith("((x1 + x2)) * x1 = x3") == Eq(Mul(Add(Var(1), Var(2)), Var(1)), Var(3))


def test_quantifier_scope_extends_to_closing_paren():
    phi = parse_arith("(all x2 x1 < x2 <-> x2 = x2)")
    assert isinstance(phi, Forall)
    assert phi.body == Bin(Connective.EQUIV, Lt(Var(1), Var(2)), Eq(Var(2), Var(2)))


def test_only_numeral_one():
    with pytest.raises(ParseError):
        parse_arith("x1 = 2")


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_prop("p p")
    with pytest.raises(ParseError):
        parse_arith("x1 = x2)")
