"""Recursive-descent parsers for the three ASCII formula grammars.

Connective precedence, tightest first: ~, &, |, -> (right-associative),
<-> (left-associative). Quantifiers are written "(all xk body)" and
"(ex xk body)". Arithmetic terms: * binds tighter than +, both
left-associative; S(t) is the successor and 1 the only numeral.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError
from . import nodes as n

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<darrow><->)
    | (?P<arrow>->)
    | (?P<lt><)
    | (?P<eq>=)
    | (?P<plus>\+)
    | (?P<star>\*)
    | (?P<amp>&)
    | (?P<pipe>\|)
    | (?P<tilde>~)
    | (?P<lpar>\()
    | (?P<rpar>\))
    | (?P<comma>,)
    | (?P<num>[0-9]+)
    | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_PROP_ATOM_RE = re.compile(r"[pqst][0-9]*\Z")
_VAR_RE = re.compile(r"x([0-9]+)\Z")
_CONST_RE = re.compile(r"a([0-9]+)\Z")
_PRED_RE = re.compile(r"P([0-9]+)_([0-9]+)\Z")
_FUN_RE = re.compile(r"f([0-9]+)_([0-9]+)\Z")

# token kinds that can only occur inside a formula, never inside a term
_FORMULA_ONLY = frozenset({"eq", "lt", "arrow", "darrow", "amp", "pipe", "tilde"})


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    if not text.isascii():
        bad = next(i for i, c in enumerate(text) if not c.isascii())
        raise ParseError("non-ASCII character", bad)
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


class _Cursor:
    def __init__(self, tokens: list[_Tok]):
        self.tokens = tokens
        self.i = 0

    def peek(self, ahead: int = 0) -> _Tok:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Tok:
        tok = self.tokens[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"found {tok.text!r}" if tok.text else "found end of input", tok.pos, (what,))
        return self.advance()

    def fail(self, expected: tuple[str, ...]) -> ParseError:
        tok = self.peek()
        found = f"found {tok.text!r}" if tok.text else "found end of input"
        return ParseError(found, tok.pos, expected)


# --- shared connective levels ------------------------------------------


def _parse_formula(cur: _Cursor, unit) -> n.Formula:
    return _parse_equiv(cur, unit)


def _parse_equiv(cur: _Cursor, unit) -> n.Formula:
    left = _parse_impl(cur, unit)
    while cur.peek().kind == "darrow":
        cur.advance()
        left = n.Bin(n.Connective.EQUIV, left, _parse_impl(cur, unit))
    return left


def _parse_impl(cur: _Cursor, unit) -> n.Formula:
    left = _parse_disj(cur, unit)
    if cur.peek().kind == "arrow":
        cur.advance()
        return n.Bin(n.Connective.IMPL, left, _parse_impl(cur, unit))
    return left


def _parse_disj(cur: _Cursor, unit) -> n.Formula:
    left = _parse_conj(cur, unit)
    while cur.peek().kind == "pipe":
        cur.advance()
        left = n.Bin(n.Connective.DISJ, left, _parse_conj(cur, unit))
    return left


def _parse_conj(cur: _Cursor, unit) -> n.Formula:
    left = unit(cur)
    while cur.peek().kind == "amp":
        cur.advance()
        left = n.Bin(n.Connective.CONJ, left, unit(cur))
    return left


def _quantifier_var(cur: _Cursor) -> int:
    tok = cur.peek()
    m = _VAR_RE.match(tok.text) if tok.kind == "ident" else None
    if m is None:
        raise cur.fail(("individual variable x<k>",))
    cur.advance()
    return int(m.group(1))


# --- propositional ------------------------------------------------------


def _prop_unit(cur: _Cursor) -> n.Formula:
    tok = cur.peek()
    if tok.kind == "tilde":
        cur.advance()
        return n.Neg(_prop_unit(cur))
    if tok.kind == "lpar":
        cur.advance()
        body = _parse_formula(cur, _prop_unit)
        cur.expect("rpar", "')'")
        return body
    if tok.kind == "ident" and _PROP_ATOM_RE.match(tok.text):
        cur.advance()
        letter = tok.text[0]
        index = int(tok.text[1:]) if len(tok.text) > 1 else None
        return n.Atom(n.PropVar(letter, index))
    raise cur.fail(("propositional atom", "'~'", "'('"))


def parse_prop(text: str) -> n.PropFormula:
    """Parse a propositional formula."""
    cur = _Cursor(_tokenize(text))
    phi = _parse_formula(cur, _prop_unit)
    cur.expect("eof", "end of input")
    return phi


# --- first-order --------------------------------------------------------


def _fo_term(cur: _Cursor) -> n.FOTerm:
    tok = cur.peek()
    if tok.kind == "ident":
        m = _VAR_RE.match(tok.text)
        if m:
            cur.advance()
            return n.Var(int(m.group(1)))
        m = _CONST_RE.match(tok.text)
        if m:
            cur.advance()
            return n.Const(int(m.group(1)))
        m = _FUN_RE.match(tok.text)
        if m:
            cur.advance()
            args = _fo_args(cur)
            if len(args) != int(m.group(2)):
                raise ParseError(
                    f"function {tok.text} declares arity {m.group(2)} but is applied to {len(args)} arguments",
                    tok.pos,
                )
            return n.Fun(int(m.group(1)), args)
    raise cur.fail(("variable x<k>", "constant a<k>", "function f<i>_<n>(...)"))


def _fo_args(cur: _Cursor) -> tuple[n.FOTerm, ...]:
    cur.expect("lpar", "'('")
    args = [_fo_term(cur)]
    while cur.peek().kind == "comma":
        cur.advance()
        args.append(_fo_term(cur))
    cur.expect("rpar", "')'")
    return tuple(args)


def _fo_unit(cur: _Cursor) -> n.Formula:
    tok = cur.peek()
    if tok.kind == "tilde":
        cur.advance()
        return n.Neg(_fo_unit(cur))
    if tok.kind == "lpar":
        nxt = cur.peek(1)
        if nxt.kind == "ident" and nxt.text in ("all", "ex"):
            cur.advance()
            cur.advance()
            var = _quantifier_var(cur)
            body = _parse_formula(cur, _fo_unit)
            cur.expect("rpar", "')'")
            return n.Forall(var, body) if nxt.text == "all" else n.Exists(var, body)
        cur.advance()
        body = _parse_formula(cur, _fo_unit)
        cur.expect("rpar", "')'")
        return body
    if tok.kind == "ident":
        m = _PRED_RE.match(tok.text)
        if m:
            cur.advance()
            args = _fo_args(cur)
            if len(args) != int(m.group(2)):
                raise ParseError(
                    f"predicate {tok.text} declares arity {m.group(2)} but is applied to {len(args)} arguments",
                    tok.pos,
                )
            return n.Pred(int(m.group(1)), args)
    raise cur.fail(("predicate P<i>_<n>(...)", "'~'", "'('", "'(all x<k> ...)'", "'(ex x<k> ...)'"))


def parse_fo(text: str) -> n.FOFormula:
    """Parse a first-order formula."""
    cur = _Cursor(_tokenize(text))
    phi = _parse_formula(cur, _fo_unit)
    cur.expect("eof", "end of input")
    return phi


# --- arithmetic -----------------------------------------------------------


def _arith_atom_term(cur: _Cursor) -> n.ArithTerm:
    tok = cur.peek()
    if tok.kind == "num":
        if tok.text != "1":
            raise ParseError(f"the only numeral is 1, got {tok.text}", tok.pos)
        cur.advance()
        return n.One()
    if tok.kind == "ident":
        m = _VAR_RE.match(tok.text)
        if m:
            cur.advance()
            return n.Var(int(m.group(1)))
        if tok.text == "S":
            cur.advance()
            cur.expect("lpar", "'('")
            inner = _arith_term(cur)
            cur.expect("rpar", "')'")
            return n.Succ(inner)
    if tok.kind == "lpar":
        cur.advance()
        inner = _arith_term(cur)
        cur.expect("rpar", "')'")
        return inner
    raise cur.fail(("'1'", "variable x<k>", "'S(...)'", "'('"))


def _arith_prod(cur: _Cursor) -> n.ArithTerm:
    left = _arith_atom_term(cur)
    while cur.peek().kind == "star":
        cur.advance()
        left = n.Mul(left, _arith_atom_term(cur))
    return left


def _arith_term(cur: _Cursor) -> n.ArithTerm:
    left = _arith_prod(cur)
    while cur.peek().kind == "plus":
        cur.advance()
        left = n.Add(left, _arith_prod(cur))
    return left


def _paren_opens_formula(cur: _Cursor) -> bool:
    """Decide whether the '(' at the cursor opens a formula or a term.

    Terms never contain comparison or connective tokens, so scanning to
    the matching ')' settles it without backtracking.
    """
    depth = 0
    for k in range(cur.i, len(cur.tokens)):
        tok = cur.tokens[k]
        if tok.kind == "lpar":
            depth += 1
        elif tok.kind == "rpar":
            depth -= 1
            if depth == 0:
                return False
        elif tok.kind in _FORMULA_ONLY:
            return True
        elif tok.kind == "ident" and tok.text in ("all", "ex"):
            return True
        elif tok.kind == "eof":
            break
    return False


def _arith_unit(cur: _Cursor) -> n.Formula:
    tok = cur.peek()
    if tok.kind == "tilde":
        cur.advance()
        return n.Neg(_arith_unit(cur))
    if tok.kind == "lpar":
        nxt = cur.peek(1)
        if nxt.kind == "ident" and nxt.text in ("all", "ex"):
            cur.advance()
            cur.advance()
            var = _quantifier_var(cur)
            body = _parse_formula(cur, _arith_unit)
            cur.expect("rpar", "')'")
            return n.Forall(var, body) if nxt.text == "all" else n.Exists(var, body)
        if _paren_opens_formula(cur):
            cur.advance()
            body = _parse_formula(cur, _arith_unit)
            cur.expect("rpar", "')'")
            return body
        # falls through: '(' starts a parenthesized term of a comparison
    left = _arith_term(cur)
    op = cur.peek()
    if op.kind == "eq":
        cur.advance()
        return n.Eq(left, _arith_term(cur))
    if op.kind == "lt":
        cur.advance()
        return n.Lt(left, _arith_term(cur))
    raise cur.fail(("'='", "'<'"))


def parse_arith(text: str) -> n.ArithFormula:
    """Parse an arithmetic formula."""
    cur = _Cursor(_tokenize(text))
    phi = _parse_formula(cur, _arith_unit)
    cur.expect("eof", "end of input")
    return phi


_PARSERS = {"prop": parse_prop, "fo": parse_fo, "arith": parse_arith}


def parse(sort: str, text: str) -> n.Formula:
    """Parse text as the given sort ('prop', 'fo' or 'arith')."""
    try:
        parser = _PARSERS[sort]
    except KeyError:
        raise ValueError(f"unknown sort {sort!r}") from None
    return parser(text)
