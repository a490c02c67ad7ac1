#!/usr/bin/env python3
"""Run both verification suites and write the JSON report.

    python scripts/run_verify.py --max-n 30 --out results/verify.json
"""
import argparse
import dataclasses
import json
import pathlib
import sys
import time

from skeinquot.verify import VerifyConfig, run_structure_suite, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in dataclasses.fields(VerifyConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    ap.add_argument("--out", type=pathlib.Path, default=pathlib.Path("results/verify.json"))
    args = ap.parse_args()
    cfg = VerifyConfig(args.max_n, args.seed, args.cases, args.degree_bound)

    t0 = time.perf_counter()
    report = run_suite(cfg.max_n) + run_structure_suite(cfg.seed, cfg.cases, cfg.degree_bound)
    elapsed = time.perf_counter() - t0

    print(report.summary())
    print(f"{len(report.checks)} checks, {len(report.failures())} failing, {elapsed:.2f}s")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    obj = {"config": dataclasses.asdict(cfg), "seconds": round(elapsed, 3), **report.to_obj()}
    args.out.write_text(json.dumps(obj, indent=1) + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
