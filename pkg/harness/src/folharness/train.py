"""Fine-tuning loop over formula/sentence pairs.

tiny-smoke builds a small randomly initialized encoder-decoder so the loop
runs in seconds on a CPU; base and large load the corresponding pretrained
checkpoints and are only practical with a GPU.
"""
from __future__ import annotations

import json
import os
import random

import torch
from transformers import T5Config, T5ForConditionalGeneration

from .config import TrainingConfig
from .data import make_batches, read_pairs
from .errors import HarnessError
from .tokenizer import EOS, PAD, WhitespaceTokenizer

_PRETRAINED = {"base": "t5-base", "large": "t5-large"}

TOKENIZER_FILE = "tokenizer.json"
RUN_CONFIG_FILE = "run_config.json"
LOSS_LOG_FILE = "loss_log.json"


def _build_model(cfg: TrainingConfig, vocab_size: int):
    if cfg.model_size == "tiny-smoke":
        model_config = T5Config(
            vocab_size=vocab_size,
            d_model=64,
            d_ff=256,
            d_kv=16,
            num_layers=2,
            num_heads=4,
            dropout_rate=0.0,
            pad_token_id=PAD,
            eos_token_id=EOS,
            decoder_start_token_id=PAD,
        )
        return T5ForConditionalGeneration(model_config)
    return T5ForConditionalGeneration.from_pretrained(_PRETRAINED[cfg.model_size])


def _epoch_loss(model, batches, optimizer=None) -> float:
    total = 0.0
    for batch in batches:
        loss = model(**batch).loss
        if optimizer is not None:
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
        total += loss.item()
    return total / len(batches)


def finetune(train_path: str, validation_path: str, cfg: TrainingConfig,
             output_dir: str) -> list[dict]:
    """Train, save a checkpoint into output_dir, and return the loss log."""
    train_pairs = read_pairs(train_path)
    validation_pairs = read_pairs(validation_path)
    if not train_pairs:
        raise HarnessError(f"no training pairs in {train_path}")

    torch.manual_seed(cfg.seed)
    rng = random.Random(cfg.seed)

    prefix = cfg.prefix()
    texts = [p["fol"] for p in train_pairs + validation_pairs]
    texts += [p["ns"] for p in train_pairs + validation_pairs]
    if prefix:
        texts.append(prefix)
    tokenizer = WhitespaceTokenizer.from_texts(texts)

    model = _build_model(cfg, tokenizer.vocab_size)
    model.train()
    optimizer = torch.optim.AdamW(model.parameters(), lr=cfg.learning_rate)

    validation_batches = make_batches(
        validation_pairs, tokenizer, cfg.batch_size, prefix)
    loss_log = []
    shuffled = list(train_pairs)
    for epoch in range(1, cfg.epochs + 1):
        rng.shuffle(shuffled)
        batches = make_batches(shuffled, tokenizer, cfg.batch_size, prefix)
        try:
            train_loss = _epoch_loss(model, batches, optimizer)
        except RuntimeError as exc:
            if "out of memory" in str(exc).lower():
                raise HarnessError(
                    f"out of memory at batch_size={cfg.batch_size}; "
                    "lower it and retry") from exc
            raise
        model.eval()
        with torch.no_grad():
            validation_loss = (
                _epoch_loss(model, validation_batches)
                if validation_batches else float("nan"))
        model.train()
        loss_log.append({
            "epoch": epoch,
            "train_loss": train_loss,
            "validation_loss": validation_loss,
        })

    os.makedirs(output_dir, exist_ok=True)
    model.save_pretrained(output_dir)
    tokenizer.save(os.path.join(output_dir, TOKENIZER_FILE))
    with open(os.path.join(output_dir, RUN_CONFIG_FILE), "w",
              encoding="utf-8") as handle:
        json.dump(cfg.to_dict(), handle, indent=2)
    with open(os.path.join(output_dir, LOSS_LOG_FILE), "w",
              encoding="utf-8") as handle:
        json.dump(loss_log, handle, indent=2)
    return loss_log
