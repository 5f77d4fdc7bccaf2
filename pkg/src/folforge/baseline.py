"""Rule-based translation of lexicalized formulas into plain English.

A floor system: one fixed template per node kind, composed recursively, so
the full pipeline and the metrics run without any learned model. Output is
deterministic and keeps every logical distinction (negation cues, the
exclusive reading of xor) even where fluency suffers.
"""
from __future__ import annotations

import re

from .errors import UnlexicalizedInput
from .formulas import (
    Atom,
    Binary,
    Connective,
    Formula,
    Not,
    Quantified,
    Quantifier,
    is_term,
)

_ABSTRACT_PREDICATE_RE = re.compile(r"[A-Z][0-9]*\Z")
_CAMEL_RE = re.compile(r"[A-Z][a-z0-9]*|[a-z0-9]+")

_BINARY_TEMPLATES = {
    Connective.IMPLIES: "if {left}, then {right}",
    Connective.XOR: "either {left} or {right}, but not both",
    Connective.AND: "{left} and {right}",
    Connective.OR: "{left} or {right}",
}


def _predicate_phrase(name: str) -> str:
    words = [w.lower() for w in _CAMEL_RE.findall(name)]
    return " ".join(words)


def translate(f: Formula) -> str:
    """Render a lexicalized formula as one English sentence."""
    clause = _clause(f)
    return clause[0].upper() + clause[1:] + "."


def _clause(f: Formula) -> str:
    if isinstance(f, Atom):
        return _atom_clause(f)
    if isinstance(f, Not):
        return f"it is not the case that {_clause(f.inner)}"
    if isinstance(f, Binary):
        return _BINARY_TEMPLATES[f.op].format(
            left=_clause(f.left), right=_clause(f.right))
    if isinstance(f, Quantified):
        if f.quantifier is Quantifier.FORALL:
            return f"for every {f.var.name}, {_clause(f.body)}"
        return f"there exists some {f.var.name} such that {_clause(f.body)}"
    raise TypeError(f"not a formula: {f!r}")


def _atom_clause(atom: Atom) -> str:
    if _ABSTRACT_PREDICATE_RE.match(atom.predicate):
        raise UnlexicalizedInput(
            f"abstract predicate {atom.predicate!r}; lexicalize first")
    phrase = _predicate_phrase(atom.predicate)
    terms = [arg.name for arg in atom.args if is_term(arg)]
    nested = [arg for arg in atom.args if not is_term(arg)]
    if not nested:
        subject, objects = terms[0], terms[1:]
        return " ".join([subject, phrase] + objects)
    # formula-valued arguments have no natural subject slot; scaffold them
    held = " and of ".join(_clause(sub) for sub in nested)
    tail = " ".join([phrase] + terms)
    return f"it holds of {held} that {tail}"
