#!/usr/bin/env python3
"""Run the full no-model pipeline into a work directory.

generate -> lexicalize -> translate -> evaluate, with every intermediate
file and manifest kept. The evaluation scores the rule-based translations
against the operator-rewritten formula strings, which gives a floor reading
of how far plain templates land from the model input text.
"""
import argparse
import json
import os
import sys

from folforge.cli import main as folforge


def run(argv: list[str]) -> None:
    print("$ folforge " + " ".join(argv))
    code = folforge(argv)
    if code != 0:
        sys.exit(code)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workdir", default="pipeline_out")
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--min-depth", type=int, default=4)
    parser.add_argument("--max-depth", type=int, default=10)
    parser.add_argument("--grammar", default="both",
                        choices=["standard", "nested", "both"])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    os.makedirs(args.workdir, exist_ok=True)
    formulas = os.path.join(args.workdir, "formulas.jsonl")
    lexical = os.path.join(args.workdir, "lexical.jsonl")
    sentences = os.path.join(args.workdir, "sentences.jsonl")
    report = os.path.join(args.workdir, "report.json")

    run(["generate", "--count", str(args.count),
         "--min-depth", str(args.min_depth),
         "--max-depth", str(args.max_depth),
         "--grammar", args.grammar, "--seed", str(args.seed),
         "--output", formulas])
    run(["lexicalize", "--input", formulas, "--seed", str(args.seed),
         "--output", lexical])
    run(["translate", "--input", lexical, "--reference-field", "model_input",
         "--output", sentences])
    run(["evaluate", "--input", sentences, "--output", report])

    with open(report, encoding="utf-8") as handle:
        doc = json.load(handle)
    print(f"report: {report}")
    print(f"  n_pairs      {doc['n_pairs']}")
    print(f"  avg_distance {doc['avg_distance']:.2f}")
    print(f"  avg_score    {doc['avg_score']:.2f}")
    print(f"  avg_bleu     {doc['avg_bleu']:.4f}")


if __name__ == "__main__":
    main()
