#!/usr/bin/env python3
"""Empirical Picard-rank distribution over random diagonal cubic surfaces.

Samples coefficient tuples with entries in [-20, 20] \\ {0}, runs both rank
engines on each surface, and prints the distribution plus any orbit/Segre
disagreements (there should never be any).

Example:
    python scripts/rank_survey.py --samples 500 --seed 11
"""

import argparse
import random
import sys
from collections import Counter

from cubicbundle.picard import DiagonalCubic, galois_group, picard_rank


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    values = [v for v in range(-20, 21) if v]
    ranks = Counter()
    orders = Counter()
    disagreements = 0
    for _ in range(args.samples):
        surface = DiagonalCubic(tuple(rng.choice(values) for _ in range(4)))
        report = picard_rank(surface)
        ranks[report.rank_over_Q] += 1
        orders[len(galois_group(surface))] += 1
        if not report.agreement:
            disagreements += 1
            print(f"DISAGREEMENT at {surface.coefficients}: {report}")

    print(f"samples: {args.samples}  seed: {args.seed}")
    print("rank distribution:")
    for rank in sorted(ranks):
        share = ranks[rank] / args.samples
        print(f"  rank {rank}: {ranks[rank]:6d}  ({share:.3f})")
    print("splitting-field Galois group orders:")
    for order in sorted(orders):
        print(f"  order {order}: {orders[order]:6d}")
    print(f"disagreements between the two engines: {disagreements}")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
