"""JSONL pair loading and tensor batching.

The harness exchanges data with the corpus tooling purely through its JSONL
schemas: training/validation files carry {"fol", "ns"} records, prediction
outputs carry {"id", "candidate", "reference"?}.
"""
from __future__ import annotations

import json
import os
import tempfile

import torch

from .config import LABEL_MASK
from .errors import HarnessError
from .tokenizer import PAD, WhitespaceTokenizer


def read_pairs(path: str) -> list[dict]:
    pairs = []
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise HarnessError(f"{path}:{line_number}: not JSON: {exc}") from exc
            if not isinstance(doc, dict) or "fol" not in doc:
                raise HarnessError(f"{path}:{line_number}: expected a 'fol' field")
            pairs.append(doc)
    return pairs


def write_records_atomic(path: str, records: list[dict]) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    handle, temp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as out:
            for record in records:
                out.write(json.dumps(record, ensure_ascii=False) + "\n")
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def _pad(rows: list[list[int]], fill: int) -> torch.Tensor:
    width = max(len(row) for row in rows)
    return torch.tensor(
        [row + [fill] * (width - len(row)) for row in rows], dtype=torch.long)


def make_batches(pairs: list[dict], tokenizer: WhitespaceTokenizer,
                 batch_size: int, prefix: str = "") -> list[dict]:
    """Encode (fol -> ns) pairs into padded batches with masked labels."""
    batches = []
    for start in range(0, len(pairs), batch_size):
        chunk = pairs[start:start + batch_size]
        sources = [
            tokenizer.encode(f"{prefix} {p['fol']}" if prefix else p["fol"])
            for p in chunk]
        targets = [tokenizer.encode(p["ns"]) for p in chunk]
        input_ids = _pad(sources, PAD)
        labels = _pad(targets, PAD)
        batches.append({
            "input_ids": input_ids,
            "attention_mask": (input_ids != PAD).long(),
            # padding positions carry no training signal
            "labels": labels.masked_fill(labels == PAD, LABEL_MASK),
        })
    return batches
