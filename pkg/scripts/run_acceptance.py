"""Run the acceptance suites and optionally save a JSON report."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from liftmod.acceptance import SUITES, run_suite


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--suite", default="all", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", type=Path, help="write a JSON report here")
    a = p.parse_args()
    results = run_suite(a.suite, a.seed)
    for r in results:
        print(r.line())
    if a.out:
        a.out.write_text(json.dumps([r.to_json() for r in results], indent=2))
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
