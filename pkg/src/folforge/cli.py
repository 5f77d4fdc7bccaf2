"""Command-line pipeline: generate, lexicalize, preprocess, translate, evaluate, stats.

Every subcommand that writes an artifact also writes a JSON run manifest next
to it recording the resolved configuration, so a run can be reproduced
exactly. Exit codes: 0 success, 1 usage error, 2 data error. The default seed
is the fixed constant 0; the FOLFORGE_SEED environment variable overrides it,
and an explicit --seed flag overrides both.
"""
from __future__ import annotations

import argparse
import datetime
import os
import random
import sys

from . import __version__
from .baseline import translate
from .corpus import (
    ColumnMap,
    ParallelPair,
    extract_pairs,
    ingest,
    kl_divergence,
    split,
    token_frequency,
)
from .errors import ConfigError, FolforgeError
from .formulas import quantifier_depth, structural_depth
from .generate import GenerationConfig, generate_tagged_corpus
from .jsonl import read_records, write_json_atomic, write_records_atomic
from .lexicon import lexicalize, load_vocabulary, rewrite_symbols
from .metrics import evaluate
from .syntax import parse, render

DEFAULT_SEED = 0

USAGE_EXIT = 1
DATA_EXIT = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract wants 1
    def error(self, message):
        raise _UsageError(message)


def _resolve_seed(value):
    if value is not None:
        return value
    env = os.environ.get("FOLFORGE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise _UsageError(f"FOLFORGE_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def _manifest_path(output: str) -> str:
    if os.path.isdir(output) or output.endswith(os.sep):
        return os.path.join(output, "manifest.json")
    return output + ".manifest.json"


def _write_manifest(subcommand: str, config: dict, inputs: list, outputs: list) -> None:
    manifest = {
        "subcommand": subcommand,
        "config": config,
        "seed": config.get("seed"),
        "inputs": inputs,
        "outputs": outputs,
        "version": __version__,
        "started_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    write_json_atomic(_manifest_path(outputs[0]), manifest)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="folforge", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="subcommand", required=True)

    generate = commands.add_parser("generate", help="sample a formula corpus")
    generate.add_argument("--grammar", choices=["standard", "nested", "both"],
                          default="standard")
    generate.add_argument("--min-depth", type=int, default=4)
    generate.add_argument("--max-depth", type=int, default=10)
    generate.add_argument("--count", type=int, required=True)
    generate.add_argument("--seed", type=int, default=None)
    generate.add_argument("--max-qd", type=int, default=None)
    generate.add_argument("--output", required=True)

    lexicalize_cmd = commands.add_parser(
        "lexicalize", help="fill abstract formulas with vocabulary words")
    lexicalize_cmd.add_argument("--input", required=True)
    lexicalize_cmd.add_argument("--vocab", default=None)
    lexicalize_cmd.add_argument("--seed", type=int, default=None)
    lexicalize_cmd.add_argument("--output", required=True)

    preprocess = commands.add_parser(
        "preprocess", help="ingest a parallel dataset, extract pairs, split")
    preprocess.add_argument("--input", required=True)
    preprocess.add_argument("--ratio", type=float, default=0.8)
    preprocess.add_argument("--seed", type=int, default=None)
    preprocess.add_argument("--col-premises", default="premises")
    preprocess.add_argument("--col-premises-fol", default="premises-FOL")
    preprocess.add_argument("--col-conclusion", default="conclusion")
    preprocess.add_argument("--col-conclusion-fol", default="conclusion-FOL")
    preprocess.add_argument("--output", required=True,
                            help="directory for train/validation/rejects files")

    translate_cmd = commands.add_parser(
        "translate", help="rule-based translation of lexicalized formulas")
    translate_cmd.add_argument("--input", required=True)
    translate_cmd.add_argument(
        "--reference-field", default=None,
        help="copy this input field into each record's reference")
    translate_cmd.add_argument("--output", required=True)

    evaluate_cmd = commands.add_parser(
        "evaluate", help="score candidate/reference pairs")
    evaluate_cmd.add_argument("--input", required=True)
    evaluate_cmd.add_argument(
        "--references", default=None,
        help="optional JSONL with {'id', 'reference'} to join on id")
    evaluate_cmd.add_argument("--max-order", type=int, default=4)
    evaluate_cmd.add_argument("--epsilon", type=float, default=1e-3)
    evaluate_cmd.add_argument("--output", required=True)

    stats = commands.add_parser(
        "stats", help="token frequencies and split KL divergence")
    stats.add_argument("--train", required=True)
    stats.add_argument("--validation", required=True)
    stats.add_argument("--side", choices=["fol", "ns", "both"], default="both")
    stats.add_argument("--top-k", type=int, default=20)
    stats.add_argument("--output", required=True)
    return parser


def _cmd_generate(args) -> int:
    seed = _resolve_seed(args.seed)
    try:
        cfg = GenerationConfig(
            grammar=args.grammar, min_depth=args.min_depth,
            max_depth=args.max_depth, count=args.count, seed=seed,
            max_qd=args.max_qd)
    except ConfigError as exc:
        # bad flag values are usage errors, not data errors
        raise _UsageError(str(exc)) from exc
    records = []
    for index, (formula, grammar) in enumerate(generate_tagged_corpus(cfg)):
        records.append({
            "id": index,
            "fol": render(formula),
            "qd": quantifier_depth(formula),
            "depth": structural_depth(formula),
            "grammar": grammar,
        })
    write_records_atomic(args.output, records)
    _write_manifest("generate", {
        "grammar": args.grammar, "min_depth": args.min_depth,
        "max_depth": args.max_depth, "count": args.count, "seed": seed,
        "max_qd": args.max_qd,
    }, [], [args.output])
    print(f"wrote {len(records)} formulas to {args.output}")
    return 0


def _cmd_lexicalize(args) -> int:
    seed = _resolve_seed(args.seed)
    vocab = load_vocabulary(args.vocab)
    rng = random.Random(seed)
    records = []
    for record in read_records(args.input):
        formula = parse(record["fol"])
        lexical = render(lexicalize(formula, vocab, rng))
        records.append({
            "id": record["id"],
            "fol": record["fol"],
            "fol_lexical": lexical,
            "model_input": rewrite_symbols(lexical),
        })
    write_records_atomic(args.output, records)
    _write_manifest("lexicalize", {
        "vocab": args.vocab, "seed": seed,
    }, [args.input], [args.output])
    print(f"wrote {len(records)} lexicalized formulas to {args.output}")
    return 0


def _cmd_preprocess(args) -> int:
    seed = _resolve_seed(args.seed)
    if not 0 < args.ratio < 1:
        raise _UsageError(f"--ratio must be in (0, 1), got {args.ratio}")
    columns = ColumnMap(args.col_premises, args.col_premises_fol,
                        args.col_conclusion, args.col_conclusion_fol)
    result = ingest(args.input, columns)
    pairs = extract_pairs(result.records, columns)
    train, validation = split(pairs, args.ratio, seed)
    os.makedirs(args.output, exist_ok=True)
    train_path = os.path.join(args.output, "train.jsonl")
    validation_path = os.path.join(args.output, "validation.jsonl")
    rejects_path = os.path.join(args.output, "rejects.jsonl")
    write_records_atomic(train_path, [{"fol": p.fol, "ns": p.ns} for p in train])
    write_records_atomic(
        validation_path, [{"fol": p.fol, "ns": p.ns} for p in validation])
    write_records_atomic(rejects_path, [
        {"line_number": r.line_number, "reason": r.reason, "raw": r.raw}
        for r in result.rejects])
    _write_manifest("preprocess", {
        "ratio": args.ratio, "seed": seed, "columns": list(columns.fields()),
    }, [args.input], [args.output + os.sep, train_path, validation_path, rejects_path])
    print(f"{len(result.records)} records, {len(result.rejects)} rejects, "
          f"{len(pairs)} pairs -> {len(train)} train / {len(validation)} validation")
    return 0


def _cmd_translate(args) -> int:
    records = []
    for record in read_records(args.input):
        formula = parse(record["fol_lexical"])
        out = {"id": record["id"], "candidate": translate(formula)}
        if args.reference_field is not None:
            out["reference"] = str(record[args.reference_field])
        records.append(out)
    write_records_atomic(args.output, records)
    _write_manifest("translate", {
        "reference_field": args.reference_field,
    }, [args.input], [args.output])
    print(f"wrote {len(records)} sentences to {args.output}")
    return 0


def _cmd_evaluate(args) -> int:
    if args.max_order < 1:
        raise _UsageError(f"--max-order must be >= 1, got {args.max_order}")
    if args.epsilon <= 0:
        raise _UsageError(f"--epsilon must be positive, got {args.epsilon}")
    references = {}
    if args.references is not None:
        for record in read_records(args.references):
            references[record["id"]] = str(record["reference"])
    kept_ids = []
    pairs = []
    for record in read_records(args.input):
        candidate = str(record["candidate"])
        reference = references.get(record["id"])
        if reference is None:
            reference = str(record["reference"])
        if not candidate.split() and not reference.split():
            continue
        kept_ids.append(record["id"])
        pairs.append((candidate, reference))
    result = evaluate(pairs, args.max_order, args.epsilon)
    report = {
        "n_pairs": result.n_pairs,
        "avg_distance": result.avg_distance,
        "avg_score": result.avg_score,
        "avg_bleu": result.avg_bleu,
        "per_pair": [
            {"id": pair_id, "edit_distance": score.edit_distance,
             "normalized_score": score.normalized_score, "bleu": score.bleu}
            for pair_id, score in zip(kept_ids, result.per_pair)
        ],
    }
    write_json_atomic(args.output, report)
    _write_manifest("evaluate", {
        "max_order": args.max_order, "epsilon": args.epsilon,
        "references": args.references,
    }, [args.input], [args.output])
    print(f"n={result.n_pairs} avg_distance={result.avg_distance:.2f} "
          f"avg_score={result.avg_score:.2f} avg_bleu={result.avg_bleu:.2f}")
    return 0


def _load_pairs(path: str, split_name: str) -> list[ParallelPair]:
    pairs = []
    for record in read_records(path):
        pairs.append(ParallelPair(
            str(record["fol"]).strip(), str(record["ns"]).strip(), split_name))
    return pairs


def _cmd_stats(args) -> int:
    if args.top_k < 1:
        raise _UsageError(f"--top-k must be >= 1, got {args.top_k}")
    train = _load_pairs(args.train, "train")
    validation = _load_pairs(args.validation, "validation")
    sides = ["fol", "ns"] if args.side == "both" else [args.side]
    report = []
    for side in sides:
        p = token_frequency(train, side)
        q = token_frequency(validation, side)
        kl_pq = kl_divergence(p, q)
        kl_qp = kl_divergence(q, p)
        for split_name, dist in (("train", p), ("validation", q)):
            report.append({
                "side": side,
                "split": split_name,
                "top_k": dist.top(args.top_k),
                "kl_pq": kl_pq,
                "kl_qp": kl_qp,
            })
        print(f"side={side} kl(train||validation)={kl_pq:.4f} "
              f"kl(validation||train)={kl_qp:.4f}")
    write_json_atomic(args.output, report)
    _write_manifest("stats", {
        "side": args.side, "top_k": args.top_k,
    }, [args.train, args.validation], [args.output])
    return 0


_HANDLERS = {
    "generate": _cmd_generate,
    "lexicalize": _cmd_lexicalize,
    "preprocess": _cmd_preprocess,
    "translate": _cmd_translate,
    "evaluate": _cmd_evaluate,
    "stats": _cmd_stats,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    try:
        return _HANDLERS[args.subcommand](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except FolforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except (OSError, KeyError) as exc:
        print(f"error: {exc!r}", file=sys.stderr)
        return DATA_EXIT


if __name__ == "__main__":
    sys.exit(main())
