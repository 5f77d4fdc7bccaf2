"""Concrete syntax: parsing and rendering of formula strings.

Two surface styles share one grammar:

  symbolic   forall=∀  exists=∃  not=¬  and=∧  or=∨  xor=⊕  implies=→
  ascii      forall    exists    ~      &      |     xor    ->

Precedence, loosest to tightest: implies, xor, or, and, not. `and` and `or`
chains are left-associative; `xor` and `implies` chains need explicit
parentheses. A quantifier binds one variable and its body is always
parenthesized: ∀x(...). Whitespace between tokens is insignificant.

Atom arguments are terms (identifiers) or sub-formulas; an identifier counts
as a bound variable when an enclosing quantifier introduces it, and as a free
constant otherwise.
"""
from __future__ import annotations

import re
from typing import Optional

from .errors import ArityError, FormulaSyntaxError
from .formulas import (
    Atom,
    Binary,
    Connective,
    Constant,
    Formula,
    Not,
    Quantified,
    Quantifier,
    Variable,
    is_term,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<arrow>->|→)
  | (?P<op>[()¬∧∨⊕∀∃~&|,])
    """,
    re.VERBOSE,
)

_UNICODE_ONLY = {"¬": "not", "∧": "and", "∨": "or", "⊕": "xor", "∀": "forall",
                 "∃": "exists", "→": "implies"}
_ASCII_ONLY = {"~": "not", "&": "and", "|": "or", "->": "implies"}
_ASCII_WORDS = {"forall": "forall", "exists": "exists", "xor": "xor"}

_SYMBOLIC_TOKENS = {
    "not": "¬", "and": "∧", "or": "∨", "xor": "⊕", "implies": "→",
    "forall": "∀", "exists": "∃",
}
_ASCII_TOKENS = {
    "not": "~", "and": "&", "or": "|", "xor": "xor", "implies": "->",
    "forall": "forall", "exists": "exists",
}


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind  # 'lparen', 'rparen', 'comma', 'ident', 'not', ...
        self.text = text
        self.pos = pos  # character offset


def _byte_offset(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


def _tokenize(text: str, syntax: str):
    allow_uni = syntax in ("unicode", "either")
    allow_ascii = syntax in ("ascii", "either")
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(
                f"unexpected character {text[pos]!r}",
                _byte_offset(text, pos),
                expected=("token",),
            )
        if m.lastgroup == "ws":
            pos = m.end()
            continue
        lexeme = m.group()
        if m.lastgroup == "ident":
            kind = "ident"
            if allow_ascii and lexeme in _ASCII_WORDS:
                kind = _ASCII_WORDS[lexeme]
            tokens.append(_Token(kind, lexeme, pos))
        elif lexeme in ("(", ")", ","):
            kind = {"(": "lparen", ")": "rparen", ",": "comma"}[lexeme]
            tokens.append(_Token(kind, lexeme, pos))
        elif lexeme in _UNICODE_ONLY:
            if not allow_uni:
                raise FormulaSyntaxError(
                    f"symbolic operator {lexeme!r} not allowed in ascii syntax",
                    _byte_offset(text, pos),
                    expected=("ascii operator",),
                )
            tokens.append(_Token(_UNICODE_ONLY[lexeme], lexeme, pos))
        elif lexeme in _ASCII_ONLY:
            if not allow_ascii:
                raise FormulaSyntaxError(
                    f"ascii operator {lexeme!r} not allowed in unicode syntax",
                    _byte_offset(text, pos),
                    expected=("symbolic operator",),
                )
            tokens.append(_Token(_ASCII_ONLY[lexeme], lexeme, pos))
        else:  # pragma: no cover - the regex admits nothing else
            raise FormulaSyntaxError(
                f"unexpected token {lexeme!r}", _byte_offset(text, pos))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, syntax: str, vocab):
        self.text = text
        self.tokens = _tokenize(text, syntax)
        self.i = 0
        self.vocab = vocab
        self.scope: list[str] = []

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        shown = tok.text if tok.kind != "eof" else "end of input"
        raise FormulaSyntaxError(
            f"expected {' or '.join(sorted(expected))}, found {shown!r}",
            _byte_offset(self.text, tok.pos),
            expected=expected,
        )

    def expect(self, kind, expected_name) -> _Token:
        if self.peek().kind != kind:
            self.fail({expected_name})
        return self.advance()

    # precedence ladder, loosest first
    def parse_formula(self) -> Formula:
        return self.parse_implies()

    def parse_implies(self) -> Formula:
        left = self.parse_xor()
        if self.peek().kind == "implies":
            self.advance()
            right = self.parse_xor()
            if self.peek().kind == "implies":
                self.fail({"')'", "end of chain (implication is non-associative, parenthesize)"})
            return Binary(Connective.IMPLIES, left, right)
        return left

    def parse_xor(self) -> Formula:
        left = self.parse_or()
        if self.peek().kind == "xor":
            self.advance()
            right = self.parse_or()
            if self.peek().kind == "xor":
                self.fail({"')'", "end of chain (xor is non-associative, parenthesize)"})
            return Binary(Connective.XOR, left, right)
        return left

    def parse_or(self) -> Formula:
        left = self.parse_and()
        while self.peek().kind == "or":
            self.advance()
            left = Binary(Connective.OR, left, self.parse_and())
        return left

    def parse_and(self) -> Formula:
        left = self.parse_not()
        while self.peek().kind == "and":
            self.advance()
            left = Binary(Connective.AND, left, self.parse_not())
        return left

    def parse_not(self) -> Formula:
        if self.peek().kind == "not":
            self.advance()
            return Not(self.parse_not())
        return self.parse_primary()

    def parse_primary(self) -> Formula:
        tok = self.peek()
        if tok.kind in ("forall", "exists"):
            return self.parse_quantified()
        if tok.kind == "lparen":
            self.advance()
            inner = self.parse_formula()
            self.expect("rparen", "')'")
            return inner
        if tok.kind == "ident":
            return self.parse_atom()
        self.fail({"formula"})

    def parse_quantified(self) -> Formula:
        q = Quantifier.FORALL if self.advance().kind == "forall" else Quantifier.EXISTS
        var_tok = self.expect("ident", "variable")
        self.expect("lparen", "'('")
        self.scope.append(var_tok.text)
        try:
            body = self.parse_formula()
        finally:
            self.scope.pop()
        self.expect("rparen", "')'")
        return Quantified(q, Variable(var_tok.text), body)

    def parse_atom(self) -> Formula:
        name_tok = self.expect("ident", "predicate")
        self.expect("lparen", "'('")
        args = [self.parse_argument()]
        while self.peek().kind == "comma":
            self.advance()
            args.append(self.parse_argument())
        self.expect("rparen", "')' or ','")
        self._check_arity(name_tok, args)
        return Atom(name_tok.text, tuple(args))

    def parse_argument(self):
        tok = self.peek()
        if tok.kind == "ident" and self.tokens[self.i + 1].kind != "lparen":
            self.advance()
            if tok.text in self.scope:
                return Variable(tok.text)
            return Constant(tok.text)
        if tok.kind in ("ident", "not", "forall", "exists", "lparen"):
            return self.parse_formula()
        self.fail({"term", "formula"})

    def _check_arity(self, name_tok, args):
        if self.vocab is None:
            return
        declared = self.vocab.arity_of(name_tok.text)
        if declared is None:
            raise ArityError(
                f"predicate {name_tok.text!r} is not in the vocabulary")
        if declared != len(args):
            raise ArityError(
                f"predicate {name_tok.text!r} takes {declared} argument(s), got {len(args)}")


def parse(text: str, syntax: str = "either", vocab=None) -> Formula:
    """Parse a formula string into its unique tree.

    `syntax` selects the accepted token set: "unicode", "ascii", or "either".
    When `vocab` is given, every atom must use a declared predicate at its
    declared arity (ArityError otherwise).
    """
    if not text:
        raise FormulaSyntaxError("empty input", 0, expected=("formula",))
    if syntax not in ("unicode", "ascii", "either"):
        raise ValueError(f"unknown syntax: {syntax!r}")
    parser = _Parser(text, syntax, vocab)
    formula = parser.parse_formula()
    if parser.peek().kind != "eof":
        parser.fail({"end of input"})
    return formula


# Rendering. Levels: implies=1, xor=2, or=3, and=4, not=5, primary=6.
_LEVEL = {
    Connective.IMPLIES: 1,
    Connective.XOR: 2,
    Connective.OR: 3,
    Connective.AND: 4,
}
_NOT_LEVEL = 5
_PRIMARY_LEVEL = 6


def _level(f: Formula) -> int:
    if isinstance(f, Binary):
        return _LEVEL[f.op]
    if isinstance(f, Not):
        return _NOT_LEVEL
    return _PRIMARY_LEVEL


def render(f: Formula, style: str = "symbolic") -> str:
    """Render `f` with minimal parentheses; quantifier bodies always get them.

    parse(render(f, style)) is structurally equal to f for well-scoped
    formulas (every Variable bound by an enclosing quantifier).
    """
    if style == "symbolic":
        toks = _SYMBOLIC_TOKENS
    elif style == "ascii":
        toks = _ASCII_TOKENS
    else:
        raise ValueError(f"unknown style: {style!r}")
    return _render(f, 1, toks, style)


def _render(f: Formula, min_level: int, toks, style: str) -> str:
    text = _render_node(f, toks, style)
    if _level(f) < min_level:
        return f"({text})"
    return text


def _render_node(f: Formula, toks, style: str) -> str:
    if isinstance(f, Atom):
        args = ", ".join(
            a.name if is_term(a) else _render(a, 1, toks, style) for a in f.args)
        return f"{f.predicate}({args})"
    if isinstance(f, Not):
        return toks["not"] + _render(f.inner, _NOT_LEVEL, toks, style)
    if isinstance(f, Quantified):
        word = toks["forall"] if f.quantifier is Quantifier.FORALL else toks["exists"]
        body = _render(f.body, 1, toks, style)
        if style == "ascii":
            return f"{word} {f.var.name} ({body})"
        return f"{word}{f.var.name}({body})"
    if isinstance(f, Binary):
        level = _LEVEL[f.op]
        if f.op in (Connective.AND, Connective.OR):
            left_min, right_min = level, level + 1  # left-associative
        else:
            left_min, right_min = level + 1, level + 1  # non-associative
        left = _render(f.left, left_min, toks, style)
        right = _render(f.right, right_min, toks, style)
        return f"{left} {toks[f.op.value]} {right}"
    raise TypeError(f"not a formula: {f!r}")
