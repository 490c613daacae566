"""AST node types for the three formula sorts and their term languages.

All nodes are frozen dataclasses: structural equality is syntactic identity,
everything is hashable and safe to share. Negation, the binary connectives
and the quantifiers are shared node types across sorts; the leaf type of a
tree (propositional atom, predicate application, or term comparison)
determines which sort a formula belongs to.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union


class Connective(str, Enum):
    IMPL = "->"
    DISJ = "|"
    CONJ = "&"
    EQUIV = "<->"

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Connective.{self.name}"


BINARY_CONNECTIVES = (Connective.IMPL, Connective.DISJ, Connective.CONJ, Connective.EQUIV)

PROP_LETTERS = ("p", "q", "s", "t")


@dataclass(frozen=True)
class PropVar:
    """Propositional variable: a base letter plus an optional index.

    Total order: letter order p < q < s < t, then by index with the
    index-free variable before index 0.
    """

    name: str
    index: int | None = None

    def __post_init__(self):
        if self.name not in PROP_LETTERS:
            raise ValueError(f"propositional letter must be one of {PROP_LETTERS}, got {self.name!r}")
        if self.index is not None and self.index < 0:
            raise ValueError(f"negative index {self.index}")

    def sort_key(self) -> tuple[int, int, int]:
        return (PROP_LETTERS.index(self.name), 0 if self.index is None else 1, self.index or 0)

    def __lt__(self, other: "PropVar") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.name if self.index is None else f"{self.name}{self.index}"


# --- terms ------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    """Individual variable x<index>; used by both first-order and arithmetic terms."""

    index: int


@dataclass(frozen=True)
class Const:
    """Individual constant a<index> (first-order terms only)."""

    index: int


@dataclass(frozen=True)
class Fun:
    """Function letter application f<index>_<arity>(args)."""

    index: int
    args: tuple["FOTerm", ...]

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True)
class One:
    """The numeral 1."""


@dataclass(frozen=True)
class Succ:
    arg: "ArithTerm"


@dataclass(frozen=True)
class Add:
    left: "ArithTerm"
    right: "ArithTerm"


@dataclass(frozen=True)
class Mul:
    left: "ArithTerm"
    right: "ArithTerm"


FOTerm = Union[Var, Const, Fun]
ArithTerm = Union[Var, One, Succ, Add, Mul]
Term = Union[FOTerm, ArithTerm]


# --- formulas ---------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """Propositional atom."""

    var: PropVar


@dataclass(frozen=True)
class Pred:
    """Predicate letter application P<index>_<arity>(args); a simple formula.

    A predicate letter is identified by the pair (index, arity): P1_1 and
    P1_2 are distinct letters.
    """

    index: int
    args: tuple[FOTerm, ...]

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def letter(self) -> tuple[int, int]:
        return (self.index, len(self.args))


@dataclass(frozen=True)
class Eq:
    left: ArithTerm
    right: ArithTerm


@dataclass(frozen=True)
class Lt:
    left: ArithTerm
    right: ArithTerm


@dataclass(frozen=True)
class Neg:
    body: "Formula"


@dataclass(frozen=True)
class Bin:
    op: Connective
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: int
    body: "Formula"


PropFormula = Union[Atom, Neg, Bin]
FOFormula = Union[Pred, Neg, Bin, Forall, Exists]
ArithFormula = Union[Eq, Lt, Neg, Bin, Forall, Exists]
Formula = Union[Atom, Pred, Eq, Lt, Neg, Bin, Forall, Exists]

Quantifier = (Forall, Exists)


def impl(left: Formula, right: Formula) -> Bin:
    return Bin(Connective.IMPL, left, right)


def conj(left: Formula, right: Formula) -> Bin:
    return Bin(Connective.CONJ, left, right)


def disj(left: Formula, right: Formula) -> Bin:
    return Bin(Connective.DISJ, left, right)


def equiv(left: Formula, right: Formula) -> Bin:
    return Bin(Connective.EQUIV, left, right)


def subformulas(phi: Formula) -> Iterator[Formula]:
    """Yield phi and every proper subformula, preorder."""
    yield phi
    if isinstance(phi, Neg):
        yield from subformulas(phi.body)
    elif isinstance(phi, Bin):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, Quantifier):
        yield from subformulas(phi.body)


def sort_of(phi: Formula) -> str:
    """Which sort a formula belongs to: 'prop', 'fo' or 'arith'."""
    for sub in subformulas(phi):
        if isinstance(sub, Atom):
            return "prop"
        if isinstance(sub, Pred):
            return "fo"
        if isinstance(sub, (Eq, Lt)):
            return "arith"
    raise ValueError("formula has no leaves")
