"""Run configuration and the four cumulative decoding strategies.

Each strategy extends the previous one's settings: Standard trains with
padding labels masked and decodes with framework defaults; Adjusted switches
to beam search with repetition constraints; Prefixed additionally prepends a
task prefix to every input; AdjustedWithLength additionally raises the
generation length cap so long outputs are not truncated.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import HarnessError

STRATEGIES = ("Standard", "Adjusted", "Prefixed", "AdjustedWithLength")
MODEL_SIZES = ("tiny-smoke", "base", "large")

TASK_PREFIX = "Translate FOL formula to English:"
LABEL_MASK = -100

# hyperparameter grids searched in full-size runs; tiny-smoke is free
# to use anything
LEARNING_RATE_GRID = (1e-4, 1e-5)
EPOCH_GRID = (20, 25, 30)


def _rank(strategy: str) -> int:
    try:
        return STRATEGIES.index(strategy)
    except ValueError:
        raise HarnessError(
            f"strategy must be one of {STRATEGIES}, got {strategy!r}") from None


def decoding_config(strategy: str) -> dict:
    """Generation settings for one strategy; cumulative across the order."""
    rank = _rank(strategy)
    config: dict = {}
    if rank >= 1:  # Adjusted
        config.update({
            "early_stopping": True,
            "num_beams": 5,
            "repetition_penalty": 1.0,
            "no_repeat_ngram_size": 2,
        })
    if rank >= 2:  # Prefixed
        config["prefix"] = TASK_PREFIX
    if rank >= 3:  # AdjustedWithLength
        config["max_length"] = 64
    return config


@dataclass(frozen=True)
class TrainingConfig:
    learning_rate: float = 1e-4
    epochs: int = 2
    batch_size: int = 8
    model_size: str = "tiny-smoke"
    strategy: str = "Standard"
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise HarnessError(
                f"learning_rate must be positive, got {self.learning_rate}")
        if self.epochs < 1:
            raise HarnessError(f"epochs must be >= 1, got {self.epochs}")
        if self.batch_size < 1:
            raise HarnessError(f"batch_size must be >= 1, got {self.batch_size}")
        if self.model_size not in MODEL_SIZES:
            raise HarnessError(
                f"model_size must be one of {MODEL_SIZES}, got {self.model_size!r}")
        _rank(self.strategy)

    def decoding(self) -> dict:
        return decoding_config(self.strategy)

    def prefix(self) -> str:
        return self.decoding().get("prefix", "")

    def to_dict(self) -> dict:
        """Full declarative record of one run, including fixed defaults."""
        return {
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "batch_size": self.batch_size,
            "model_size": self.model_size,
            "strategy": self.strategy,
            "seed": self.seed,
            "decoding": self.decoding(),
            "optimizer": "adamw",  # unpublished; fixed here
            "label_mask": LABEL_MASK,
        }
