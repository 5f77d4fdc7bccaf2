"""Independent reference implementations used to check the package.

Each oracle deliberately takes a different implementation route from the
production code (full-matrix DP instead of two rows, product-form geometric
mean instead of exp of mean logs, finditer tokenization instead of
pad-and-split) so agreement is evidence, not tautology.
"""
from __future__ import annotations

import math
import re

from folforge.formulas import Atom, Binary, Not, Quantified, is_term


def levenshtein_full_matrix(a: str, b: str) -> int:
    rows, cols = len(a) + 1, len(b) + 1
    matrix = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        matrix[i][0] = i
    for j in range(cols):
        matrix[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            matrix[i][j] = min(
                matrix[i - 1][j] + 1,
                matrix[i][j - 1] + 1,
                matrix[i - 1][j - 1] + cost,
            )
    return matrix[-1][-1]


def quantifier_depth_oracle(f) -> int:
    if isinstance(f, Atom):
        nested = [quantifier_depth_oracle(a) for a in f.args if not is_term(a)]
        return max(nested) if nested else 0
    if isinstance(f, Not):
        return quantifier_depth_oracle(f.inner)
    if isinstance(f, Binary):
        return max(quantifier_depth_oracle(f.left), quantifier_depth_oracle(f.right))
    if isinstance(f, Quantified):
        return quantifier_depth_oracle(f.body) + 1
    raise TypeError(f)


def structural_depth_oracle(f) -> int:
    if isinstance(f, Atom):
        nested = [structural_depth_oracle(a) for a in f.args if not is_term(a)]
        return 1 + (max(nested) if nested else 0)
    if isinstance(f, Not):
        return 1 + structural_depth_oracle(f.inner)
    if isinstance(f, Binary):
        return 1 + max(structural_depth_oracle(f.left), structural_depth_oracle(f.right))
    if isinstance(f, Quantified):
        return 1 + structural_depth_oracle(f.body)
    raise TypeError(f)


_TOKEN_SCAN = re.compile(r"\w+|[^\w\s]")


def stream_token_total(texts) -> int:
    """One-pass token count matching the corpus tokenizer's contract."""
    total = 0
    for text in texts:
        for _ in _TOKEN_SCAN.finditer(text):
            total += 1
    return total


def bleu_direct(candidate: str, reference: str, max_order: int = 4,
                epsilon: float = 1e-3) -> float:
    """Direct evaluation of the precision/geometric-mean/penalty formulas."""
    candidate_tokens = candidate.split()
    reference_tokens = reference.split()
    product = 1.0
    for order in range(1, max_order + 1):
        candidate_grams = {}
        i = 0
        while i + order <= len(candidate_tokens):
            gram = tuple(candidate_tokens[i:i + order])
            candidate_grams[gram] = candidate_grams.get(gram, 0) + 1
            i += 1
        reference_grams = {}
        i = 0
        while i + order <= len(reference_tokens):
            gram = tuple(reference_tokens[i:i + order])
            reference_grams[gram] = reference_grams.get(gram, 0) + 1
            i += 1
        total = 0
        clipped = 0
        for gram, count in candidate_grams.items():
            total += count
            clipped += min(count, reference_grams.get(gram, 0))
        precision = clipped / (total + epsilon)
        if precision < epsilon:
            precision = epsilon
        product *= precision
    geometric_mean = product ** (1.0 / max_order)
    c = len(candidate_tokens)
    r = len(reference_tokens)
    if c > r:
        penalty = 1.0
    else:
        penalty = math.exp(1.0 - r / (c + epsilon))
    return penalty * geometric_mean


def normalized_score_direct(candidate: str, reference: str) -> float:
    tokens = max(len(candidate.split()), len(reference.split()))
    return levenshtein_full_matrix(candidate, reference) / tokens
