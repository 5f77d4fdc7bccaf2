"""Generate predictions from a saved checkpoint.

Reads {"fol", "ns"?} pairs, decodes each formula text under the requested
strategy, and writes {"id", "candidate", "reference"?} records that the
corpus tooling's evaluate subcommand scores directly.
"""
from __future__ import annotations

import json
import os

import torch
from transformers import T5ForConditionalGeneration

from .config import TrainingConfig, decoding_config
from .data import read_pairs, write_records_atomic
from .tokenizer import WhitespaceTokenizer
from .train import RUN_CONFIG_FILE, TOKENIZER_FILE


def load_checkpoint(checkpoint_dir: str):
    model = T5ForConditionalGeneration.from_pretrained(checkpoint_dir)
    model.eval()
    tokenizer = WhitespaceTokenizer.load(
        os.path.join(checkpoint_dir, TOKENIZER_FILE))
    return model, tokenizer


def checkpoint_strategy(checkpoint_dir: str) -> str:
    with open(os.path.join(checkpoint_dir, RUN_CONFIG_FILE),
              encoding="utf-8") as handle:
        return json.load(handle)["strategy"]


def predict(checkpoint_dir: str, inputs_path: str, output_path: str,
            strategy: str = None) -> int:
    """Write one prediction per input pair; returns the record count."""
    if strategy is None:
        strategy = checkpoint_strategy(checkpoint_dir)
    decoding = decoding_config(strategy)
    prefix = decoding.pop("prefix", "")
    model, tokenizer = load_checkpoint(checkpoint_dir)

    records = []
    with torch.no_grad():
        for index, pair in enumerate(read_pairs(inputs_path)):
            text = f"{prefix} {pair['fol']}" if prefix else pair["fol"]
            ids = torch.tensor([tokenizer.encode(text, strict=True)])
            output = model.generate(ids, **decoding)
            record = {"id": index,
                      "candidate": tokenizer.decode(output[0].tolist())}
            if "ns" in pair:
                record["reference"] = str(pair["ns"])
            records.append(record)
    write_records_atomic(output_path, records)
    return len(records)


def predict_with_config(checkpoint_dir: str, inputs_path: str,
                        output_path: str, cfg: TrainingConfig) -> int:
    return predict(checkpoint_dir, inputs_path, output_path, cfg.strategy)
