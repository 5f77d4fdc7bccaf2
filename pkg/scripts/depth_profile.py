#!/usr/bin/env python3
"""Print depth and quantifier-depth histograms for a sampled corpus.

Useful for eyeballing how the depth window and grammar choice shape the
distribution before committing to a large generation run.
"""
import argparse
from collections import Counter

from folforge.formulas import quantifier_depth, structural_depth
from folforge.generate import GenerationConfig, generate_tagged_corpus


def bar(count: int, total: int, width: int = 40) -> str:
    filled = round(width * count / total) if total else 0
    return "#" * filled


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--min-depth", type=int, default=4)
    parser.add_argument("--max-depth", type=int, default=10)
    parser.add_argument("--grammar", default="both",
                        choices=["standard", "nested", "both"])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    cfg = GenerationConfig(grammar=args.grammar, min_depth=args.min_depth,
                           max_depth=args.max_depth, count=args.count,
                           seed=args.seed)
    corpus = generate_tagged_corpus(cfg)

    depths = Counter(structural_depth(f) for f, _ in corpus)
    qds = Counter(quantifier_depth(f) for f, _ in corpus)
    grammars = Counter(tag for _, tag in corpus)

    print(f"{len(corpus)} formulas, grammar={args.grammar}, "
          f"window=[{args.min_depth}, {args.max_depth}], seed={args.seed}")
    print(f"grammar mix: {dict(grammars)}")
    print("\nstructural depth")
    for depth in sorted(depths):
        count = depths[depth]
        print(f"  {depth:3d}  {count:6d}  {bar(count, len(corpus))}")
    print("\nquantifier depth")
    for qd in sorted(qds):
        count = qds[qd]
        print(f"  {qd:3d}  {count:6d}  {bar(count, len(corpus))}")


if __name__ == "__main__":
    main()
