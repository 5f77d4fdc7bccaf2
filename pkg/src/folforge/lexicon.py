"""Filling abstract formulas with real predicates and entities.

`lexicalize` maps abstract predicate symbols to vocabulary predicates of the
same arity (one draw per distinct symbol) and term occurrences to entity
lexemes drawn from the class the term's first argument position requires.
One term is exempt: the root quantifier's variable, or for quantifier-free
formulas the first free constant, stays verbatim so the output keeps an
abstract subject. A bound variable that is lexicalized also renames its
binder, so for example a body occurrence chosen as "chef" turns the binder
into "forall chef".

`rewrite_symbols` flattens the logical symbols of a formula string into
lexical items (the model-input form); `inverse_rewrite_symbols` restores the
symbolic string.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import ConfigError, NoMatchingPredicate, UnknownSymbol
from .formulas import (
    Atom,
    Binary,
    Constant,
    Formula,
    Lexeme,
    Not,
    Quantified,
    Variable,
    is_term,
)

ENTITY_CLASSES = (
    "Person", "Organization", "Location", "Field", "Object", "Animal", "Drink",
)

_NAME_RE = re.compile(r"[A-Z][A-Za-z0-9]*\Z")
_LEXEME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class Predicate:
    name: str
    arity: int
    signature: tuple[str, ...]  # entity class per argument position

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ConfigError(f"predicate name must be CamelCase: {self.name!r}")
        if self.arity not in (1, 2):
            raise ConfigError(f"predicate arity must be 1 or 2: {self.name}")
        if len(self.signature) != self.arity:
            raise ConfigError(
                f"signature length {len(self.signature)} does not match "
                f"arity {self.arity} for {self.name}")
        for cls in self.signature:
            if cls not in ENTITY_CLASSES:
                raise ConfigError(f"unknown entity class {cls!r} for {self.name}")


@dataclass(frozen=True)
class Vocabulary:
    predicates: tuple[Predicate, ...]
    entities: dict[str, tuple[str, ...]]

    def __post_init__(self):
        names = [p.name for p in self.predicates]
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ConfigError(f"duplicate predicate names: {dupes}")
        for cls in self.entities:
            if cls not in ENTITY_CLASSES:
                raise ConfigError(f"unknown entity class {cls!r}")
        for cls, lexemes in self.entities.items():
            for lex in lexemes:
                if not _LEXEME_RE.match(lex):
                    raise ConfigError(f"entity lexeme must be lowercase: {lex!r}")
        for p in self.predicates:
            for cls in p.signature:
                if not self.entities.get(cls):
                    raise ConfigError(
                        f"predicate {p.name} needs entities of class {cls}, "
                        "but the vocabulary has none")

    def arity_of(self, name: str) -> Optional[int]:
        for p in self.predicates:
            if p.name == name:
                return p.arity
        return None

    def by_arity(self, arity: int) -> list[Predicate]:
        return [p for p in self.predicates if p.arity == arity]


def load_vocabulary(path: Optional[str] = None) -> Vocabulary:
    """Load a vocabulary file; with no path, the one shipped in the package."""
    if path is None:
        raw = resources.files(__package__).joinpath("data/vocabulary.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as handle:
            raw = handle.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"vocabulary file is not valid JSON: {exc}") from exc
    try:
        predicates = tuple(
            Predicate(entry["name"], entry["arity"], tuple(entry["signature"]))
            for entry in doc["predicates"])
        entities = {cls: tuple(lexes) for cls, lexes in doc["entities"].items()}
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"vocabulary file is missing fields: {exc}") from exc
    return Vocabulary(predicates, entities)


@dataclass(frozen=True)
class SymbolMap:
    """Ordered, bijective mapping from logical symbols to lexical items."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        symbols = [s for s, _ in self.pairs]
        items = [i for _, i in self.pairs]
        if len(set(symbols)) != len(symbols) or len(set(items)) != len(items):
            raise ConfigError("symbol map must be bijective")
        if any(not item for item in items):
            raise ConfigError("symbol map items must be nonempty")


DEFAULT_SYMBOL_MAP = SymbolMap((
    ("¬", "No"),
    ("∀", "For All"),
    ("∃", "There Exists"),
    ("⊕", "XOR"),
    ("→", "implies"),
    ("∧", "and"),
    ("∨", "or"),
))

_PREFIX_SYMBOLS = "¬∀∃"
_BINARY_SYMBOLS = "∧∨⊕→"
# ascii-style operators are logical symbols with no entry in the map
_FOREIGN_OPERATORS = frozenset("&|~")


def _terms_in_reading_order(f: Formula):
    if isinstance(f, Atom):
        for arg in f.args:
            if is_term(arg):
                yield arg
            else:
                yield from _terms_in_reading_order(arg)
    elif isinstance(f, Not):
        yield from _terms_in_reading_order(f.inner)
    elif isinstance(f, Binary):
        yield from _terms_in_reading_order(f.left)
        yield from _terms_in_reading_order(f.right)
    elif isinstance(f, Quantified):
        yield from _terms_in_reading_order(f.body)


def _preserved_term(f: Formula):
    """The term kept verbatim: the root binder, else the first free constant."""
    if isinstance(f, Quantified):
        return f.var
    for term in _terms_in_reading_order(f):
        if isinstance(term, Constant):
            return term
    return None


def lexicalize(f: Formula, vocab: Vocabulary, rng: random.Random) -> Formula:
    """Replace abstract predicates and terms with vocabulary entries.

    Draws happen in reading order: one predicate draw per distinct abstract
    symbol (uniform over the vocabulary entries of that arity), one entity
    draw per distinct non-preserved term (uniform over the class its first
    typed position requires). Repeat occurrences reuse the recorded draw, so
    the same symbol or term always lexicalizes the same way within a formula.
    """
    preserved = _preserved_term(f)
    predicate_for: dict[tuple[str, int], Predicate] = {}
    lexeme_for: dict = {}

    def walk(node: Formula) -> Formula:
        if isinstance(node, Atom):
            return walk_atom(node)
        if isinstance(node, Not):
            return Not(walk(node.inner))
        if isinstance(node, Binary):
            return Binary(node.op, walk(node.left), walk(node.right))
        if isinstance(node, Quantified):
            body = walk(node.body)
            if node.var in lexeme_for:
                return Quantified(
                    node.quantifier, Variable(lexeme_for[node.var].text), body)
            return Quantified(node.quantifier, node.var, body)
        raise TypeError(f"not a formula: {node!r}")

    def walk_atom(node: Atom) -> Atom:
        key = (node.predicate, len(node.args))
        if key not in predicate_for:
            options = vocab.by_arity(len(node.args))
            if not options:
                raise NoMatchingPredicate(
                    f"vocabulary has no predicate of arity {len(node.args)}")
            predicate_for[key] = rng.choice(options)
        chosen = predicate_for[key]
        args = []
        for position, arg in enumerate(node.args):
            if not is_term(arg):
                args.append(walk(arg))
                continue
            if isinstance(arg, Lexeme):
                raise ValueError("input is already lexicalized")
            if arg == preserved:
                args.append(arg)
            elif arg in lexeme_for:
                args.append(lexeme_for[arg])
            else:
                cls = chosen.signature[position]
                lexeme = Lexeme(rng.choice(vocab.entities[cls]), cls)
                lexeme_for[arg] = lexeme
                args.append(lexeme)
        return Atom(chosen.name, tuple(args))

    return walk(f)


def rewrite_symbols(text: str, symbol_map: SymbolMap = DEFAULT_SYMBOL_MAP) -> str:
    """Replace each logical symbol with its lexical item, single-space padded."""
    mapped = dict(symbol_map.pairs)
    for ch in text:
        if ch in mapped:
            continue
        if ch in _FOREIGN_OPERATORS or not 32 <= ord(ch) < 127:
            raise UnknownSymbol(f"no lexical item for {ch!r}")
    pattern = "|".join(re.escape(s) for s in mapped)
    out = re.sub(pattern, lambda m: f" {mapped[m.group()]} ", text)
    return re.sub(r" {2,}", " ", out).strip()


def inverse_rewrite_symbols(text: str, symbol_map: SymbolMap = DEFAULT_SYMBOL_MAP) -> str:
    """Restore logical symbols from their lexical items.

    Inverts rewrite_symbols on any canonically rendered formula: items are
    matched as whole words (longest first), then spacing is renormalized to
    the symbolic layout, with prefix symbols tight against what follows and
    binary symbols padded.
    """
    out = text
    for symbol, item in sorted(symbol_map.pairs, key=lambda p: -len(p[1])):
        out = re.sub(rf"\b{re.escape(item)}\b", symbol, out)
    out = re.sub(rf"([{_PREFIX_SYMBOLS}])\s+", r"\1", out)
    out = re.sub(rf"\s*([{_BINARY_SYMBOLS}])\s*", r" \1 ", out)
    out = re.sub(r"\(\s+", "(", out)
    out = re.sub(r"\s+\)", ")", out)
    return re.sub(r" {2,}", " ", out).strip()
