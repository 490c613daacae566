"""Seeded random formula generators for property suites and corpora.

Everything takes an explicit random.Random so runs are reproducible; the
generators are used by the consistency harness, the translation-law
property suite and the refutation corpus.
"""
from __future__ import annotations

import random

from .syntax import (
    Add,
    ArithFormula,
    ArithTerm,
    Atom,
    BINARY_CONNECTIVES,
    Bin,
    Const,
    Eq,
    Exists,
    FOFormula,
    FOTerm,
    Forall,
    Fun,
    Lt,
    Mul,
    Neg,
    One,
    Pred,
    PropFormula,
    PropVar,
    Succ,
    Var,
)

DEFAULT_PROP_POOL = (PropVar("p"), PropVar("q"), PropVar("s"))


def random_prop(rng: random.Random, size: int, atom_pool: tuple[PropVar, ...] = DEFAULT_PROP_POOL) -> PropFormula:
    if size <= 0:
        return Atom(rng.choice(atom_pool))
    if rng.random() < 0.25:
        return Neg(random_prop(rng, size - 1, atom_pool))
    left_size = rng.randint(0, size - 1)
    op = rng.choice(BINARY_CONNECTIVES)
    return Bin(op, random_prop(rng, left_size, atom_pool), random_prop(rng, size - 1 - left_size, atom_pool))


def random_substitution(
    rng: random.Random,
    domain: tuple[PropVar, ...],
    *,
    image_size: int = 2,
    atom_pool: tuple[PropVar, ...] = DEFAULT_PROP_POOL,
) -> dict[PropVar, PropFormula]:
    return {v: random_prop(rng, rng.randint(0, image_size), atom_pool) for v in domain}


def random_fo_term(rng: random.Random, depth: int, *, var_pool=(1, 2, 3), allow_functions: bool = True) -> FOTerm:
    if depth > 0 and allow_functions and rng.random() < 0.4:
        return Fun(1, (random_fo_term(rng, depth - 1, var_pool=var_pool),))
    if rng.random() < 0.2:
        return Const(rng.choice((1, 2)))
    return Var(rng.choice(var_pool))


def random_fo(
    rng: random.Random,
    size: int,
    *,
    predicate_pool=((1, 1), (2, 1), (1, 2)),
    var_pool=(1, 2, 3),
    allow_functions: bool = True,
    quantifier_bias: float = 0.3,
) -> FOFormula:
    if size <= 0:
        index, arity = rng.choice(predicate_pool)
        args = tuple(random_fo_term(rng, 1, var_pool=var_pool, allow_functions=allow_functions) for _ in range(arity))
        return Pred(index, args)
    roll = rng.random()
    if roll < quantifier_bias:
        quant = Forall if rng.random() < 0.5 else Exists
        return quant(
            rng.choice(var_pool),
            random_fo(
                rng, size - 1,
                predicate_pool=predicate_pool, var_pool=var_pool,
                allow_functions=allow_functions, quantifier_bias=quantifier_bias,
            ),
        )
    if roll < quantifier_bias + 0.2:
        return Neg(
            random_fo(
                rng, size - 1,
                predicate_pool=predicate_pool, var_pool=var_pool,
                allow_functions=allow_functions, quantifier_bias=quantifier_bias,
            )
        )
    left_size = rng.randint(0, size - 1)
    op = rng.choice(BINARY_CONNECTIVES)
    kwargs = dict(
        predicate_pool=predicate_pool, var_pool=var_pool,
        allow_functions=allow_functions, quantifier_bias=quantifier_bias,
    )
    return Bin(op, random_fo(rng, left_size, **kwargs), random_fo(rng, size - 1 - left_size, **kwargs))


def random_arith_term(rng: random.Random, depth: int, *, var_pool=(1, 2, 3)) -> ArithTerm:
    if depth <= 0:
        return One() if rng.random() < 0.3 else Var(rng.choice(var_pool))
    roll = rng.random()
    if roll < 0.3:
        return Succ(random_arith_term(rng, depth - 1, var_pool=var_pool))
    if roll < 0.6:
        return Add(random_arith_term(rng, depth - 1, var_pool=var_pool), random_arith_term(rng, depth - 1, var_pool=var_pool))
    if roll < 0.8:
        return Mul(random_arith_term(rng, depth - 1, var_pool=var_pool), random_arith_term(rng, depth - 1, var_pool=var_pool))
    return One() if rng.random() < 0.3 else Var(rng.choice(var_pool))


def random_arith(
    rng: random.Random,
    size: int,
    *,
    var_pool=(1, 2, 3),
    term_depth: int = 2,
    quantifier_bias: float = 0.3,
) -> ArithFormula:
    if size <= 0:
        left = random_arith_term(rng, rng.randint(0, term_depth), var_pool=var_pool)
        right = random_arith_term(rng, rng.randint(0, term_depth), var_pool=var_pool)
        return Eq(left, right) if rng.random() < 0.5 else Lt(left, right)
    roll = rng.random()
    kwargs = dict(var_pool=var_pool, term_depth=term_depth, quantifier_bias=quantifier_bias)
    if roll < quantifier_bias:
        quant = Forall if rng.random() < 0.5 else Exists
        return quant(rng.choice(var_pool), random_arith(rng, size - 1, **kwargs))
    if roll < quantifier_bias + 0.2:
        return Neg(random_arith(rng, size - 1, **kwargs))
    left_size = rng.randint(0, size - 1)
    op = rng.choice(BINARY_CONNECTIVES)
    return Bin(op, random_arith(rng, left_size, **kwargs), random_arith(rng, size - 1 - left_size, **kwargs))
