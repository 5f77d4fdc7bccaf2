"""Training and decoding harness for formula-to-text models."""
from .config import (
    EPOCH_GRID,
    LABEL_MASK,
    LEARNING_RATE_GRID,
    MODEL_SIZES,
    STRATEGIES,
    TASK_PREFIX,
    TrainingConfig,
    decoding_config,
)
from .errors import HarnessError, VocabularyMismatch
from .predict import checkpoint_strategy, load_checkpoint, predict
from .tokenizer import WhitespaceTokenizer
from .train import finetune

__version__ = "0.1.0"

__all__ = [
    "EPOCH_GRID",
    "LABEL_MASK",
    "LEARNING_RATE_GRID",
    "MODEL_SIZES",
    "STRATEGIES",
    "TASK_PREFIX",
    "TrainingConfig",
    "HarnessError",
    "VocabularyMismatch",
    "WhitespaceTokenizer",
    "checkpoint_strategy",
    "decoding_config",
    "finetune",
    "load_checkpoint",
    "predict",
]
