"""Index table and self-normalization census over a small (g, k) grid.

For each pair: phi(k), the number of primitive vectors (the index of
Mod(e1)), the index of LMod, whether the orbit of e1 fills the primitive set,
and the outcome of the exhaustive witness search.
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from liftmod.census import FEASIBLE_STATES, index_table, orbit_e1, verify_self_normalizing


@dataclass
class CensusConfig:
    genera: list[int] = field(default_factory=lambda: [1, 2, 3])
    sheets: list[int] = field(default_factory=lambda: list(range(2, 8)))
    max_len: int = 4


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--genera", type=int, nargs="+", default=CensusConfig().genera)
    p.add_argument("--sheets", type=int, nargs="+", default=CensusConfig().sheets)
    p.add_argument("--max-len", type=int, default=4)
    a = p.parse_args()
    cfg = CensusConfig(a.genera, a.sheets, a.max_len)
    print(f"{'g':>2} {'k':>3} {'phi':>4} {'primitive':>10} {'[Mod:LMod]':>11} {'orbit':>6} {'selfnorm':>14} {'sec':>6}")
    for g in cfg.genera:
        for k in cfg.sheets:
            if k ** (2 * g) > FEASIBLE_STATES:
                continue
            t0 = time.perf_counter()
            t = index_table(g, k)
            orbit_ok = len(orbit_e1(g, k)) == t.primitive
            if g >= 2:
                s = verify_self_normalizing(g, k, cfg.max_len)
                sn = f"{s.witnessed}/{s.eligible} L{s.max_witness_length}"
            else:
                sn = "n/a"
            print(f"{g:>2} {k:>3} {t.phi:>4} {t.primitive:>10} {t.index_lmod:>11} {str(orbit_ok):>6} "
                  f"{sn:>14} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
