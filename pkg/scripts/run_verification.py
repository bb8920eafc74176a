"""Run every verification suite and write one report per suite.

    python3 scripts/run_verification.py --prec 60 --outdir reports
"""
from __future__ import annotations

import argparse
from pathlib import Path

from berndt.cli import main
from berndt.suites import SUITES


def run(prec: int, outdir: Path, workers: int) -> int:
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for suite in SUITES:
        out = outdir / f"{suite}.txt"
        code = main(["verify", "--suite", suite, "--prec", str(prec), "--workers", str(workers), "--out", str(out)])
        summary = out.read_text().strip().splitlines()[-1]
        print(f"{suite:<11} {summary.lstrip('# ')}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prec", type=int, default=60)
    ap.add_argument("--outdir", type=Path, default=Path("reports"))
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    raise SystemExit(run(a.prec, a.outdir, a.workers))
