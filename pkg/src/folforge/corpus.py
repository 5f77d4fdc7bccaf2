"""Parallel-corpus ingestion, pair extraction, splitting, and statistics.

Works on FOLIO-style record files where each row carries a list of premises,
their formulas, one conclusion, and its formula. Column names are remappable
through ColumnMap for other layouts. Downstream math (token frequencies, KL
divergence between splits) operates on the extracted (fol, ns) pairs.
"""
from __future__ import annotations

import csv
import json
import logging
import math
import random
import re
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .errors import ConfigError, EmptyInput, SchemaError

logger = logging.getLogger(__name__)

SPLITS = ("train", "validation", "test", "unassigned")

_PUNCT_RE = re.compile(r"([^\w\s])")


@dataclass(frozen=True)
class ColumnMap:
    """Source column names; defaults follow the FOLIO release layout."""

    premises: str = "premises"
    premises_fol: str = "premises-FOL"
    conclusion: str = "conclusion"
    conclusion_fol: str = "conclusion-FOL"

    def fields(self) -> tuple[str, ...]:
        return (self.premises, self.premises_fol, self.conclusion, self.conclusion_fol)


@dataclass(frozen=True)
class ParallelPair:
    fol: str
    ns: str
    split: str = "unassigned"

    def __post_init__(self):
        if not self.fol or self.fol != self.fol.strip():
            raise ConfigError(f"fol must be nonempty and trimmed: {self.fol!r}")
        if not self.ns or self.ns != self.ns.strip():
            raise ConfigError(f"ns must be nonempty and trimmed: {self.ns!r}")
        if self.split not in SPLITS:
            raise ConfigError(f"split must be one of {SPLITS}, got {self.split!r}")


@dataclass(frozen=True)
class RejectedRow:
    line_number: int
    reason: str
    raw: str


@dataclass(frozen=True)
class IngestResult:
    records: list[dict]
    rejects: list[RejectedRow]


def _parse_list_field(value) -> list[str]:
    """Premise columns hold JSON arrays in CSV exports but lists in JSONL."""
    if isinstance(value, list):
        return [str(v) for v in value]
    text = str(value).strip()
    if text.startswith("["):
        try:
            loaded = json.loads(text)
        except json.JSONDecodeError:
            loaded = None
        if isinstance(loaded, list):
            return [str(v) for v in loaded]
    return [text] if text else []


def _iter_raw_rows(path: str, columns: ColumnMap) -> Iterable[tuple[int, Optional[dict], str]]:
    if path.endswith((".csv", ".tsv")):
        delimiter = "\t" if path.endswith(".tsv") else ","
        with open(path, encoding="utf-8", newline="") as handle:
            reader = csv.DictReader(handle, delimiter=delimiter)
            if reader.fieldnames is not None:
                for column in columns.fields():
                    if column not in reader.fieldnames:
                        raise SchemaError(f"missing column: {column}")
            for index, row in enumerate(reader, start=2):  # header is line 1
                yield index, dict(row), json.dumps(row, ensure_ascii=False)
        return
    with open(path, encoding="utf-8") as handle:
        for index, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                doc = json.loads(stripped)
            except json.JSONDecodeError:
                yield index, None, stripped
                continue
            yield index, doc if isinstance(doc, dict) else None, stripped


def ingest(path: str, columns: ColumnMap = ColumnMap()) -> IngestResult:
    """Read a record file; malformed rows land in rejects, never dropped.

    A column absent from every row (or from a CSV header) is a SchemaError;
    a column absent from a single row only rejects that row.
    """
    records: list[dict] = []
    rejects: list[RejectedRow] = []
    seen_columns: Counter = Counter()
    object_rows = 0
    for line_number, doc, raw in _iter_raw_rows(path, columns):
        if doc is None:
            rejects.append(RejectedRow(line_number, "not a JSON object", raw))
            continue
        object_rows += 1
        seen_columns.update(c for c in columns.fields() if c in doc)
        missing = [c for c in columns.fields() if c not in doc]
        if missing:
            rejects.append(
                RejectedRow(line_number, f"missing column: {missing[0]}", raw))
            continue
        records.append({
            columns.premises: _parse_list_field(doc[columns.premises]),
            columns.premises_fol: _parse_list_field(doc[columns.premises_fol]),
            columns.conclusion: str(doc[columns.conclusion]),
            columns.conclusion_fol: str(doc[columns.conclusion_fol]),
        })
    if object_rows == 0 and not rejects:
        logger.warning("ingested empty file: %s", path)
        return IngestResult([], [])
    for column in columns.fields():
        if object_rows and seen_columns[column] == 0:
            raise SchemaError(f"missing column: {column}")
    return IngestResult(records, rejects)


def extract_pairs(records: list[dict], columns: ColumnMap = ColumnMap()) -> list[ParallelPair]:
    """Turn records into (fol, ns) pairs, one per premise plus the conclusion.

    Premise lists pair up positionally with their formula lists; a row whose
    lists disagree in length cannot be aligned clause-by-clause, so it
    contributes a single whole-row pair instead. Exact duplicate pairs keep
    their first occurrence.
    """
    pairs: list[ParallelPair] = []
    seen: set[tuple[str, str]] = set()

    def push(fol: str, ns: str):
        fol, ns = fol.strip(), ns.strip()
        if not fol or not ns:
            return
        key = (fol, ns)
        if key in seen:
            return
        seen.add(key)
        pairs.append(ParallelPair(fol, ns))

    for record in records:
        premises = record[columns.premises]
        premises_fol = record[columns.premises_fol]
        if len(premises) == len(premises_fol):
            for ns, fol in zip(premises, premises_fol):
                push(fol, ns)
        else:
            push(" ".join(premises_fol).strip(), " ".join(premises).strip())
        push(record[columns.conclusion_fol], record[columns.conclusion])
    return pairs


def split(pairs: list[ParallelPair], ratio: float = 0.8,
          seed: int = 0) -> tuple[list[ParallelPair], list[ParallelPair]]:
    """Shuffled partition with |train| = round(ratio * N)."""
    if not pairs:
        raise EmptyInput("no pairs to split")
    if not 0 < ratio < 1:
        raise ConfigError(f"ratio must be in (0, 1), got {ratio}")
    shuffled = list(pairs)
    random.Random(seed).shuffle(shuffled)
    n_train = round(ratio * len(shuffled))
    train = [replace(p, split="train") for p in shuffled[:n_train]]
    validation = [replace(p, split="validation") for p in shuffled[n_train:]]
    return train, validation


@dataclass(frozen=True)
class TokenDistribution:
    counts: dict[str, int]
    total: int
    smoothing_epsilon: float = 1e-9

    def __post_init__(self):
        if self.total != sum(self.counts.values()):
            raise ConfigError("total must equal the sum of counts")
        if self.smoothing_epsilon <= 0:
            raise ConfigError("smoothing_epsilon must be positive")

    def probability(self, token: str) -> float:
        if self.total == 0:
            return 0.0
        return self.counts.get(token, 0) / self.total

    def top(self, k: int) -> list[tuple[str, int]]:
        return Counter(self.counts).most_common(k)


def tokenize(text: str) -> list[str]:
    """Case-preserving whitespace split after isolating punctuation/symbols."""
    return _PUNCT_RE.sub(r" \1 ", text).split()


def token_frequency(pairs: list[ParallelPair], side: str) -> TokenDistribution:
    """Count tokens over one side of the pairs."""
    if side not in ("fol", "ns"):
        raise ConfigError(f"side must be 'fol' or 'ns', got {side!r}")
    if not pairs:
        raise EmptyInput("no pairs to count")
    counts: Counter = Counter()
    for pair in pairs:
        counts.update(tokenize(pair.fol if side == "fol" else pair.ns))
    return TokenDistribution(dict(counts), sum(counts.values()))


def kl_divergence(p: TokenDistribution, q: TokenDistribution) -> float:
    """D(P || Q) in nats over the union vocabulary, epsilon-smoothed.

    Each raw probability gets p.smoothing_epsilon added and the mass is
    renormalized, so unseen tokens stay finite and the result is >= 0.
    """
    if p.total == 0 or q.total == 0:
        raise EmptyInput("distributions must be nonempty")
    vocabulary = set(p.counts) | set(q.counts)
    epsilon = p.smoothing_epsilon
    scale = 1.0 + epsilon * len(vocabulary)
    divergence = 0.0
    for token in vocabulary:
        p_smooth = (p.probability(token) + epsilon) / scale
        q_smooth = (q.probability(token) + epsilon) / scale
        divergence += p_smooth * math.log(p_smooth / q_smooth)
    return divergence
