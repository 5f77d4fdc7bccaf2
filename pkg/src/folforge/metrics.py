"""Translation quality metrics: edit distance, normalized score, BLEU.

The edit distance is character-level; the normalized score divides it by the
larger whitespace-token count of the pair, so values above 1 are legal
(many character edits across few tokens). BLEU uses epsilon-adjusted n-gram
precisions with a single reference: epsilon pads every precision denominator
and floors zero-overlap precisions so the geometric mean stays defined, which
also lets scores land marginally above 1 on exact matches.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateInput, EmptyInput


def levenshtein(candidate: str, reference: str) -> int:
    """Minimum single-character insertions, deletions, and substitutions."""
    if candidate == reference:
        return 0
    longer, shorter = candidate, reference
    if len(longer) < len(shorter):
        longer, shorter = shorter, longer
    previous = list(range(len(shorter) + 1))
    for i, char_a in enumerate(longer, start=1):
        current = [i]
        for j, char_b in enumerate(shorter, start=1):
            cost = 0 if char_a == char_b else 1
            current.append(min(
                previous[j] + 1,        # delete from longer
                current[j - 1] + 1,     # insert into longer
                previous[j - 1] + cost, # substitute
            ))
        previous = current
    return previous[-1]


def normalized_score(candidate: str, reference: str) -> float:
    """Character edits divided by the pair's maximum whitespace-token count."""
    denominator = max(len(candidate.split()), len(reference.split()))
    if denominator == 0:
        raise DegenerateInput("both sides tokenize to nothing")
    return levenshtein(candidate, reference) / denominator


def _ngram_counts(tokens: list[str], order: int) -> Counter:
    return Counter(
        tuple(tokens[i:i + order]) for i in range(len(tokens) - order + 1))


def bleu(candidate: str, reference: str, max_order: int = 4,
         epsilon: float = 1e-3) -> float:
    """Single-reference BLEU with epsilon-padded precision denominators.

    p_n = clipped / (count + epsilon), floored at epsilon when no n-gram
    overlaps; brevity penalty is 1 when the candidate is longer, else
    exp(1 - r / (c + epsilon)).
    """
    candidate_tokens = candidate.split()
    reference_tokens = reference.split()
    log_precisions = []
    for order in range(1, max_order + 1):
        candidate_ngrams = _ngram_counts(candidate_tokens, order)
        reference_ngrams = _ngram_counts(reference_tokens, order)
        count = sum(candidate_ngrams.values())
        clipped = sum(
            min(n, reference_ngrams[gram]) for gram, n in candidate_ngrams.items())
        precision = max(clipped / (count + epsilon), epsilon)
        log_precisions.append(math.log(precision))
    geometric_mean = math.exp(math.fsum(log_precisions) / max_order)
    c, r = len(candidate_tokens), len(reference_tokens)
    brevity_penalty = 1.0 if c > r else math.exp(1.0 - r / (c + epsilon))
    return brevity_penalty * geometric_mean


@dataclass(frozen=True)
class PairScore:
    edit_distance: int
    normalized_score: float
    bleu: float


@dataclass(frozen=True)
class MetricsReport:
    per_pair: list[PairScore]
    avg_distance: float
    avg_score: float
    avg_bleu: float
    n_pairs: int


def evaluate(pairs: list[tuple[str, str]], max_order: int = 4,
             epsilon: float = 1e-3) -> MetricsReport:
    """Score (candidate, reference) pairs and average the three metrics.

    Pairs where both sides tokenize to nothing do not count toward N.
    """
    scores: list[PairScore] = []
    for candidate, reference in pairs:
        if not candidate.split() and not reference.split():
            continue
        scores.append(PairScore(
            levenshtein(candidate, reference),
            normalized_score(candidate, reference),
            bleu(candidate, reference, max_order, epsilon),
        ))
    if not scores:
        raise EmptyInput("no non-empty pairs to evaluate")
    n = len(scores)
    return MetricsReport(
        per_pair=scores,
        avg_distance=math.fsum(s.edit_distance for s in scores) / n,
        avg_score=math.fsum(s.normalized_score for s in scores) / n,
        avg_bleu=math.fsum(s.bleu for s in scores) / n,
        n_pairs=n,
    )
