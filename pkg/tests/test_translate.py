import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from atomlog.arithmetic import specific_axiom
from atomlog.syntax import (
    Atom,
    Neg,
    PropVar,
    atoms,
    parse_arith,
    parse_fo,
    parse_prop,
    star,
    universal_closure,
)
from atomlog.translate import (
    ArityCollisionWarning,
    atoms_image_law,
    compose_subst,
    subst_pred,
    subst_prop,
    translate_i,
    translate_j,
)

from test_render_roundtrip import arith_formulas, prop_formulas

p, q, s = PropVar("p"), PropVar("q"), PropVar("s")


def test_j_erases_quantifiers_and_terms():
    assert translate_j(parse_fo("(all x1 (P1_1(x1) -> P1_1(x1)))")) == parse_prop("p1 -> p1")
    assert translate_j(parse_fo("P2_1(x1) | P1_2(x1, x2)")) == parse_prop("p2 | p1")
    assert translate_j(parse_fo("(ex x3 ~P5_1(f1_1(x3)))")) == parse_prop("~p5")


def test_j_keys_on_index_only_with_warning():
    phi = parse_fo("P1_1(x1) & P1_2(x1, x2)")
    with pytest.warns(ArityCollisionWarning):
        assert translate_j(phi) == parse_prop("p1 & p1")


def test_i_examples():
    assert translate_i(specific_axiom(1)) == parse_prop("p1")
    assert translate_i(specific_axiom(7)) == parse_prop("~p1")
    assert translate_i(specific_axiom(12)) == parse_prop("p2 <-> p1")
    assert translate_i(specific_axiom(14)) == parse_prop("p1 <-> p2")


def test_i_targets_are_distinct():
    assert translate_i(parse_arith("x1 = x2")) == Atom(PropVar("p", 1))
    assert translate_i(parse_arith("x1 < x2")) == Atom(PropVar("p", 2))


def test_subst_prop_examples():
    e = {p: parse_prop("q -> q")}
    assert subst_prop(e, parse_prop("p & p")) == parse_prop("(q -> q) & (q -> q)")
    phi = parse_prop("p -> q | s")
    assert subst_prop({}, phi) == phi


def test_subst_prop_simultaneous():
    # two-phase marker oracle: swap via a fresh marker gives the same result
    e = {p: Atom(q), q: Atom(p)}
    phi = parse_prop("p -> q")
    direct = subst_prop(e, phi)
    marker = PropVar("t", 99)
    staged = subst_prop({marker: Atom(q)}, subst_prop({q: Atom(p)}, subst_prop({p: Atom(marker)}, phi)))
    assert direct == staged == parse_prop("q -> p")


def test_subst_pred():
    e = {parse_fo("P1_1(x1)"): parse_fo("P2_1(x1) & P2_1(x1)")}
    assert subst_pred(e, parse_fo("(all x1 P1_1(x1))")) == parse_fo("(all x1 (P2_1(x1) & P2_1(x1)))")
    phi = parse_fo("(ex x2 P1_2(x1, x2))")
    assert subst_pred({}, phi) == phi


def test_subst_pred_exact_key_match():
    e = {parse_fo("P1_1(x1)"): parse_fo("P3_1(x1)")}
    # P1_1(x2) is a different simple formula and stays fixed
    assert subst_pred(e, parse_fo("P1_1(x1) & P1_1(x2)")) == parse_fo("P3_1(x1) & P1_1(x2)")


def test_subst_pred_no_capture_check():
    # literal clause application: the image's free x2 lands under the binder
    e = {parse_fo("P1_1(x1)"): parse_fo("P2_1(x2)")}
    assert subst_pred(e, parse_fo("(all x2 P1_1(x1))")) == parse_fo("(all x2 P2_1(x2))")


def test_atoms_image_law_examples():
    assert atoms_image_law({p: parse_prop("q & s")}, parse_prop("p | p"))
    assert atoms(subst_prop({p: parse_prop("q & s")}, parse_prop("p | p"))) == {q, s}
    assert atoms_image_law({}, parse_prop("p -> q"))
    assert atoms_image_law({p: Atom(q), q: Atom(q)}, parse_prop("p & q"))
    assert atoms(subst_prop({p: Atom(q), q: Atom(q)}, parse_prop("p & q"))) == {q}


simple_substs = st.dictionaries(
    st.sampled_from((p, q, s)),
    prop_formulas,
    max_size=3,
)


@settings(max_examples=150)
@given(simple_substs, prop_formulas)
def test_atoms_image_law_property(e, phi):
    assert atoms_image_law(e, phi)


@settings(max_examples=100)
@given(simple_substs, simple_substs, prop_formulas)
def test_subst_composition(e2, e1, phi):
    assert subst_prop(e2, subst_prop(e1, phi)) == subst_prop(compose_subst(e2, e1), phi)


@settings(max_examples=150)
@given(arith_formulas, st.integers(1, 9))
def test_i_quantifier_erasure_property(phi, var):
    from atomlog.syntax import Exists, Forall

    image = translate_i(phi)
    assert translate_i(Forall(var, phi)) == image
    assert translate_i(Exists(var, phi)) == image
    assert translate_i(universal_closure(phi)) == image


@settings(max_examples=150)
@given(arith_formulas)
def test_i_star_law_and_atom_bound(phi):
    assert translate_i(star(phi)) == Neg(translate_i(phi))
    assert len(atoms(translate_i(phi))) <= 2
