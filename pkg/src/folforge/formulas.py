"""Abstract syntax for first-order-logic formulas.

Formula trees are immutable. Node kinds: Atom, Not, Binary, Quantified.
Atom arguments are terms (Variable, Constant, Lexeme) or, in the nested
grammar, whole sub-formulas.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Union

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Connective(Enum):
    AND = "and"
    OR = "or"
    IMPLIES = "implies"
    XOR = "xor"


class Quantifier(Enum):
    FORALL = "forall"
    EXISTS = "exists"


def _check_ident(name: str) -> str:
    if not _IDENT_RE.match(name):
        raise ValueError(f"invalid identifier: {name!r}")
    return name


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self):
        _check_ident(self.name)


@dataclass(frozen=True)
class Constant:
    name: str

    def __post_init__(self):
        _check_ident(self.name)


@dataclass(frozen=True)
class Lexeme:
    """A concrete word installed by lexicalization, tagged with its entity class."""

    text: str
    entity_class: str

    def __post_init__(self):
        _check_ident(self.text)

    @property
    def name(self) -> str:
        return self.text


Term = Union[Variable, Constant, Lexeme]


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: tuple  # of Term or Formula

    def __post_init__(self):
        _check_ident(self.predicate)
        if not self.args:
            raise ValueError(f"atom {self.predicate} has no arguments")
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Not:
    inner: "Formula"


@dataclass(frozen=True)
class Binary:
    op: Connective
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Quantified:
    quantifier: Quantifier
    var: Variable
    body: "Formula"


Formula = Union[Atom, Not, Binary, Quantified]

_TERM_TYPES = (Variable, Constant, Lexeme)


def is_term(value) -> bool:
    return isinstance(value, _TERM_TYPES)


def formula_args(atom: Atom):
    """The formula-valued arguments of an atom (empty for flat atoms)."""
    return [a for a in atom.args if not is_term(a)]


def quantifier_depth(f: Formula) -> int:
    """Maximum quantifier nesting of `f`.

    Atoms sit at depth 0 (an atom with formula-valued arguments inherits the
    maximum over those arguments), negation is transparent, a binary
    connective takes the deeper side, and each quantifier adds one.
    """
    if isinstance(f, Atom):
        inner = formula_args(f)
        return max((quantifier_depth(g) for g in inner), default=0)
    if isinstance(f, Not):
        return quantifier_depth(f.inner)
    if isinstance(f, Binary):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    if isinstance(f, Quantified):
        return quantifier_depth(f.body) + 1
    raise TypeError(f"not a formula: {f!r}")


def structural_depth(f: Formula) -> int:
    """Height of the formula tree, counting every node kind once.

    Terms are leaves and do not count; a flat atom has depth 1. Formula-valued
    atom arguments count through, so the nested grammar's depth budget covers
    argument nesting as well.
    """
    if isinstance(f, Atom):
        inner = formula_args(f)
        return 1 + max((structural_depth(g) for g in inner), default=0)
    if isinstance(f, Not):
        return 1 + structural_depth(f.inner)
    if isinstance(f, Binary):
        return 1 + max(structural_depth(f.left), structural_depth(f.right))
    if isinstance(f, Quantified):
        return 1 + structural_depth(f.body)
    raise TypeError(f"not a formula: {f!r}")
