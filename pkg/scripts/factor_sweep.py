"""Word-length statistics of the Mod(e1) factorization over a (g, k) grid.

    python scripts/factor_sweep.py --genera 2 3 --sheets 2 3 4 6 --samples 200
"""
from __future__ import annotations

import argparse
import json
import random
import statistics
import time
from dataclasses import asdict, dataclass, field

from liftmod.acceptance import stab_samples
from liftmod.criteria import CoverParams
from liftmod.factorization import alphabet_violations, factor_stab_e1


@dataclass
class SweepConfig:
    genera: list[int] = field(default_factory=lambda: [2, 3])
    sheets: list[int] = field(default_factory=lambda: [2, 3, 4, 6])
    samples: int = 100
    max_len: int = 20
    seed: int = 0


def run(cfg: SweepConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    for g in cfg.genera:
        for k in cfg.sheets:
            t0 = time.perf_counter()
            lengths, gamma_letters, bad = [], [], 0
            for m in stab_samples(g, k, cfg.samples, rng, cfg.max_len):
                res = factor_stab_e1(m, CoverParams(g, k))
                bad += (not res.verify()) or bool(alphabet_violations(res))
                lengths.append(len(res.word))
                gamma_letters.append(sum(1 for s, _ in res.word.letters if s.kind == "G"))
            rows.append({"g": g, "k": k, "samples": cfg.samples, "failures": bad,
                         "mean_len": round(statistics.mean(lengths), 2), "max_len": max(lengths),
                         "mean_gamma_letters": round(statistics.mean(gamma_letters), 2),
                         "seconds": round(time.perf_counter() - t0, 2)})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--genera", type=int, nargs="+", default=SweepConfig().genera)
    p.add_argument("--sheets", type=int, nargs="+", default=SweepConfig().sheets)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = SweepConfig(a.genera, a.sheets, a.samples, a.max_len, a.seed)
    rows = run(cfg)
    if a.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    print(f"{'g':>2} {'k':>3} {'fail':>5} {'mean':>7} {'max':>5} {'G/word':>7} {'sec':>6}")
    for r in rows:
        print(f"{r['g']:>2} {r['k']:>3} {r['failures']:>5} {r['mean_len']:>7} {r['max_len']:>5} "
              f"{r['mean_gamma_letters']:>7} {r['seconds']:>6}")


if __name__ == "__main__":
    main()
