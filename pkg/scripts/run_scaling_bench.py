#!/usr/bin/env python3
"""Run the doubling-ladder benchmark for every solver kind.

Writes one JSON line per (kind, n) row and prints the human-readable
table; repetitions are interleaved across sizes so a burst of machine
load cannot skew a single rung of the ladder.

Usage: python3 scripts/run_scaling_bench.py [--runs 7] [--k 2]
           [--seed 20260826] [--out bench_results.jsonl]
"""

from __future__ import annotations

import argparse
import json
import statistics
import time

from khds.cli import _DEFAULT_LADDER, _bench_case

KINDS = ("tree", "pierce", "unicyclic", "cactus")


def run_ladder(kind: str, runs: int, k: int, seed: int) -> list[dict]:
    cases = [(n, _bench_case(kind, n, seed + i, k))
             for i, n in enumerate(_DEFAULT_LADDER)]
    times: dict[int, list[float]] = {n: [] for n, _ in cases}
    for _ in range(runs):
        for n, call in cases:
            t0 = time.perf_counter()
            call()
            times[n].append((time.perf_counter() - t0) * 1000.0)
    rows = []
    prev = None
    for n, _ in cases:
        med = statistics.median(times[n])
        ratio = None if prev is None else med / prev
        prev = med
        rows.append({"kind": kind, "n": n,
                     "median_ms": round(med, 3),
                     "ratio": None if ratio is None else round(ratio, 3),
                     "flagged": bool(ratio is not None and ratio > 2.5)})
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--runs", type=int, default=7)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=20260826)
    ap.add_argument("--out", default="bench_results.jsonl")
    args = ap.parse_args()

    all_rows = []
    for kind in KINDS:
        for row in run_ladder(kind, args.runs, args.k, args.seed):
            all_rows.append(row)
            ratio = "-" if row["ratio"] is None else f"{row['ratio']:.3f}"
            flag = " FLAG" if row["flagged"] else ""
            print(f"kind={row['kind']} n={row['n']} "
                  f"median_ms={row['median_ms']:.3f} ratio={ratio}{flag}")
    with open(args.out, "w", encoding="utf-8") as fh:
        for row in all_rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    print(f"wrote {len(all_rows)} rows to {args.out}")
    return 1 if any(r["flagged"] for r in all_rows) else 0


if __name__ == "__main__":
    raise SystemExit(main())
