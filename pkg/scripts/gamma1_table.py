"""Coset counts, Schreier generator counts and rewrite cost for Gamma_1(k)."""
from __future__ import annotations

import argparse
import random
import statistics
from dataclasses import dataclass

from liftmod.congruence import coset_table, gamma1_contains, gamma1_rewrite
from liftmod.words import evaluate, random_word


@dataclass
class TableConfig:
    kmin: int = 2
    kmax: int = 16
    samples: int = 50
    seed: int = 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=16)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    cfg = TableConfig(**vars(p.parse_args()))
    rng = random.Random(cfg.seed)
    print(f"{'k':>3} {'cosets':>7} {'gens':>5} {'max witness':>12} {'mean rewrite':>13}")
    for k in range(cfg.kmin, cfg.kmax + 1):
        table = coset_table(k)
        lengths = []
        while len(lengths) < cfg.samples:
            m = evaluate(random_word(1, 20, rng))
            if gamma1_contains(m, k):
                lengths.append(len(gamma1_rewrite(m, k)))
        widest = max(len(g.word) for g in table.generators)
        print(f"{k:>3} {len(table):>7} {len(table.generators):>5} {widest:>12} "
              f"{statistics.mean(lengths):>13.2f}")


if __name__ == "__main__":
    main()
