import hypothesis.strategies as st
from hypothesis import given, settings

from atomlog.syntax import (
    Add,
    Atom,
    Bin,
    BINARY_CONNECTIVES,
    Connective,
    Const,
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
    Succ,
    Var,
    parse_arith,
    parse_fo,
    parse_prop,
    render,
)

prop_vars = st.builds(PropVar, st.sampled_from("pqst"), st.one_of(st.none(), st.integers(0, 30)))
prop_atoms = st.builds(Atom, prop_vars)
connectives = st.sampled_from(BINARY_CONNECTIVES)

prop_formulas = st.recursive(
    prop_atoms,
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(Bin, connectives, children, children),
    ),
    max_leaves=25,
)

fo_vars = st.integers(1, 9)
fo_terms = st.recursive(
    st.one_of(st.builds(Var, fo_vars), st.builds(Const, st.integers(1, 5))),
    lambda children: st.builds(
        Fun, st.integers(1, 4), st.lists(children, min_size=1, max_size=3).map(tuple)
    ),
    max_leaves=5,
)
fo_atoms = st.builds(Pred, st.integers(1, 5), st.lists(fo_terms, min_size=1, max_size=3).map(tuple))

fo_formulas = st.recursive(
    fo_atoms,
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(Bin, connectives, children, children),
        st.builds(Forall, fo_vars, children),
        st.builds(Exists, fo_vars, children),
    ),
    max_leaves=15,
)

arith_terms = st.recursive(
    st.one_of(st.builds(Var, fo_vars), st.just(One())),
    lambda children: st.one_of(
        st.builds(Succ, children),
        st.builds(Add, children, children),
        st.builds(Mul, children, children),
    ),
    max_leaves=8,
)
arith_atoms = st.one_of(st.builds(Eq, arith_terms, arith_terms), st.builds(Lt, arith_terms, arith_terms))

arith_formulas = st.recursive(
    arith_atoms,
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(Bin, connectives, children, children),
        st.builds(Forall, fo_vars, children),
        st.builds(Exists, fo_vars, children),
    ),
    max_leaves=12,
)


@settings(max_examples=300)
@given(prop_formulas)
def test_prop_roundtrip(phi):
    assert parse_prop(render(phi)) == phi


@settings(max_examples=300)
@given(fo_formulas)
def test_fo_roundtrip(phi):
    assert parse_fo(render(phi)) == phi


@settings(max_examples=300)
@given(arith_formulas)
def test_arith_roundtrip(phi):
    assert parse_arith(render(phi)) == phi


def test_render_examples():
    assert render(parse_prop("p->p")) == "p -> p"
    assert render(parse_prop("~(p&q)")) == "~(p & q)"
    assert render(parse_prop("~~p")) == "~~p"
    assert render(parse_prop("(p -> q) -> s")) == "(p -> q) -> s"
    assert render(parse_prop("p -> (q -> s)")) == "p -> q -> s"
    assert render(parse_prop("(p | q) & s")) == "(p | q) & s"
    assert render(parse_arith("x1 + (x2 + 1) = (x1 + x2) + 1")) == "x1 + (x2 + 1) = x1 + x2 + 1"
    assert render(parse_arith("~(1 = x1)")) == "~(1 = x1)"
    assert render(parse_fo("(all x1 P1_1(x1))")) == "(all x1 P1_1(x1))"
    assert render(parse_fo("~(all x1 P1_1(x1))")) == "~(all x1 P1_1(x1))"


def test_idempotent_render():
    for text in ("p -> q -> s", "(all x1 (x1 = x2 -> x2 = x1))", "(ex x3 P2_2(x1, f1_1(x3)))"):
        for parser in (parse_prop, parse_arith, parse_fo):
            try:
                phi = parser(text)
            except Exception:
                continue
            assert render(parser(render(phi))) == render(phi)
