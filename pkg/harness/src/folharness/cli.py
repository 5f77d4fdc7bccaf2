"""Command line entry points: finetune and predict.

Exit codes follow the corpus tooling's convention: 0 success, 1 usage
error, 2 data or runtime failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .config import MODEL_SIZES, STRATEGIES, TrainingConfig
from .errors import HarnessError
from .predict import predict
from .train import finetune

USAGE_EXIT = 1
DATA_EXIT = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="folharness", description=__doc__)
    commands = parser.add_subparsers(dest="subcommand", required=True)

    finetune_cmd = commands.add_parser("finetune", help="train a checkpoint")
    finetune_cmd.add_argument("--train", required=True)
    finetune_cmd.add_argument("--validation", required=True)
    finetune_cmd.add_argument("--output", required=True)
    finetune_cmd.add_argument("--model-size", choices=MODEL_SIZES,
                              default="tiny-smoke")
    finetune_cmd.add_argument("--strategy", choices=STRATEGIES,
                              default="Standard")
    finetune_cmd.add_argument("--epochs", type=int, default=2)
    finetune_cmd.add_argument("--batch-size", type=int, default=8)
    finetune_cmd.add_argument("--learning-rate", type=float, default=1e-4)
    finetune_cmd.add_argument("--seed", type=int, default=0)

    predict_cmd = commands.add_parser("predict", help="decode predictions")
    predict_cmd.add_argument("--checkpoint", required=True)
    predict_cmd.add_argument("--input", required=True)
    predict_cmd.add_argument("--output", required=True)
    predict_cmd.add_argument(
        "--strategy", choices=STRATEGIES, default=None,
        help="defaults to the strategy recorded in the checkpoint")
    return parser


def _cmd_finetune(args) -> int:
    try:
        cfg = TrainingConfig(
            learning_rate=args.learning_rate, epochs=args.epochs,
            batch_size=args.batch_size, model_size=args.model_size,
            strategy=args.strategy, seed=args.seed)
    except HarnessError as exc:
        raise _UsageError(str(exc)) from exc
    loss_log = finetune(args.train, args.validation, cfg, args.output)
    for entry in loss_log:
        print(f"epoch {entry['epoch']}: train_loss={entry['train_loss']:.4f} "
              f"validation_loss={entry['validation_loss']:.4f}")
    print(f"checkpoint saved to {args.output}")
    return 0


def _cmd_predict(args) -> int:
    count = predict(args.checkpoint, args.input, args.output, args.strategy)
    print(f"wrote {count} predictions to {args.output}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand == "finetune":
            return _cmd_finetune(args)
        return _cmd_predict(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except HarnessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except (OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc!r}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
