"""Random formula sampling from two context-free grammars.

The standard grammar expands F -> Atom | not F | F op F | Qx(F) with uniform
choice among the productions that can still satisfy the remaining depth
budget; atoms take one or two term arguments. The nested grammar additionally
lets an atom take a formula argument: Atom -> Pred(F) | Pred(F, t).

Sampling is exact on structural depth: every returned formula lands inside
[min_depth, max_depth]. Names follow reading order; predicates cycle
A..Z, A1.., while quantified variables and free constants share one lowercase
cycle a..z, a1.. so a binder never collides with a constant.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import ConfigError, DepthUnreachable, ExhaustedSampling
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
    quantifier_depth,
    structural_depth,
)
from .syntax import render

GRAMMARS = ("standard", "nested", "both")

_CONNECTIVES = (Connective.AND, Connective.OR, Connective.XOR, Connective.IMPLIES)
_QUANTIFIERS = (Quantifier.FORALL, Quantifier.EXISTS)


@dataclass(frozen=True)
class GenerationConfig:
    """Sampling parameters; immutable so a run is a pure function of these."""

    grammar: str = "standard"
    min_depth: int = 4
    max_depth: int = 10
    count: int = 1
    seed: int = 0
    max_qd: Optional[int] = None  # reject samples whose quantifier depth exceeds this

    def __post_init__(self):
        if self.grammar not in GRAMMARS:
            raise ConfigError(
                f"grammar must be one of {GRAMMARS}, got {self.grammar!r}")
        if self.count < 1:
            raise ConfigError(f"count must be >= 1, got {self.count}")
        if self.min_depth < 1:
            raise ConfigError(f"min_depth must be >= 1, got {self.min_depth}")
        if self.min_depth > self.max_depth:
            raise ConfigError(
                f"min_depth {self.min_depth} exceeds max_depth {self.max_depth}")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must fit in 64 unsigned bits")
        if self.max_qd is not None and self.max_qd < 0:
            raise ConfigError(f"max_qd must be >= 0, got {self.max_qd}")


def _letter(index: int, alphabet: str) -> str:
    round_, pos = divmod(index, len(alphabet))
    if round_ == 0:
        return alphabet[pos]
    return f"{alphabet[pos]}{round_}"


class _Namer:
    """Allocates predicate and term names in reading order for one formula."""

    def __init__(self):
        self.predicates = 0
        self.terms = 0
        self.constants: list[Constant] = []

    def next_predicate(self) -> str:
        name = _letter(self.predicates, "ABCDEFGHIJKLMNOPQRSTUVWXYZ")
        self.predicates += 1
        return name

    def next_term_name(self) -> str:
        name = _letter(self.terms, "abcdefghijklmnopqrstuvwxyz")
        self.terms += 1
        return name

    def pick_term(self, rng: random.Random, scope: list[Variable]):
        # uniform over in-scope variables, constants used so far, or a fresh constant
        k = rng.randrange(len(scope) + len(self.constants) + 1)
        if k < len(scope):
            return scope[k]
        if k < len(scope) + len(self.constants):
            return self.constants[k - len(scope)]
        fresh = Constant(self.next_term_name())
        self.constants.append(fresh)
        return fresh


def _productions(lo: int, hi: int, nested: bool) -> list[str]:
    out = []
    if lo <= 1:
        out.append("atom")
    if hi >= 2:
        if nested:
            out.append("nested_atom")
        out.extend(["not", "binary", "quant"])
    if not out:
        raise DepthUnreachable(
            f"no formula has structural depth in [{lo}, {hi}]")
    return out


def _sample(rng: random.Random, lo: int, hi: int, nested: bool,
            namer: _Namer, scope: list[Variable]) -> Formula:
    production = rng.choice(_productions(lo, hi, nested))
    child_lo = max(lo - 1, 1)

    if production == "atom":
        predicate = namer.next_predicate()
        arity = rng.randrange(2) + 1
        args = tuple(namer.pick_term(rng, scope) for _ in range(arity))
        return Atom(predicate, args)

    if production == "nested_atom":
        predicate = namer.next_predicate()
        with_term = rng.randrange(2) == 1
        inner = _sample(rng, child_lo, hi - 1, nested, namer, scope)
        if with_term:
            return Atom(predicate, (inner, namer.pick_term(rng, scope)))
        return Atom(predicate, (inner,))

    if production == "not":
        return Not(_sample(rng, child_lo, hi - 1, nested, namer, scope))

    if production == "binary":
        op = rng.choice(_CONNECTIVES)
        left = _sample(rng, 1, hi - 1, nested, namer, scope)
        # the right child must reach the floor if the left one did not
        right_lo = 1 if structural_depth(left) >= lo - 1 else lo - 1
        right = _sample(rng, right_lo, hi - 1, nested, namer, scope)
        return Binary(op, left, right)

    quantifier = rng.choice(_QUANTIFIERS)
    var = Variable(namer.next_term_name())
    body = _sample(rng, child_lo, hi - 1, nested, namer, scope + [var])
    return Quantified(quantifier, var, body)


def sample_standard(cfg: GenerationConfig, rng: random.Random) -> Formula:
    """Draw one formula from the flat grammar; depth lands in the config window."""
    return _sample(rng, cfg.min_depth, cfg.max_depth, False, _Namer(), [])


def sample_nested(cfg: GenerationConfig, rng: random.Random) -> Formula:
    """Like sample_standard, but atoms may take formula arguments."""
    return _sample(rng, cfg.min_depth, cfg.max_depth, True, _Namer(), [])


def generate_tagged_corpus(cfg: GenerationConfig) -> list[tuple[Formula, str]]:
    """Sample cfg.count distinct formulas, each tagged with its source grammar.

    Distinctness is canonical-render string identity. The "both" grammar
    alternates fairly, one grammar per accepted sample. Duplicate draws (and
    draws over cfg.max_qd, when set) are rejected and resampled; the run
    fails with ExhaustedSampling after 1000 x count consecutive rejections.
    """
    rng = random.Random(cfg.seed)
    accepted: list[tuple[Formula, str]] = []
    seen: set[str] = set()
    budget = 1000 * cfg.count
    rejections = 0
    while len(accepted) < cfg.count:
        if cfg.grammar == "both":
            tag = "standard" if len(accepted) % 2 == 0 else "nested"
        else:
            tag = cfg.grammar
        sampler = sample_standard if tag == "standard" else sample_nested
        formula = sampler(cfg, rng)
        key = render(formula)
        too_deep = cfg.max_qd is not None and quantifier_depth(formula) > cfg.max_qd
        if key in seen or too_deep:
            rejections += 1
            if rejections >= budget:
                raise ExhaustedSampling(
                    f"{rejections} consecutive rejections at count={cfg.count}; "
                    "the depth window or uniqueness constraint is too tight")
            continue
        rejections = 0
        seen.add(key)
        accepted.append((formula, tag))
    return accepted


def generate_corpus(cfg: GenerationConfig) -> list[Formula]:
    """Sample cfg.count pairwise-distinct formulas, in draw order."""
    return [formula for formula, _ in generate_tagged_corpus(cfg)]
