#!/usr/bin/env python3
"""Cross-validate every solver against its brute-force oracle.

Runs a configurable number of random small instances per solver kind and
reports agreement counts; exits nonzero on the first mismatch, printing
the offending instance so it can be replayed.

Usage: python3 scripts/run_oracle_sweep.py [--trials 500] [--seed 1]
"""

from __future__ import annotations

import argparse
import random

from khds.cactus import solve_cactus
from khds.generators import GenSpec, gen_cactus, gen_raw_arcs, gen_tree, \
    gen_unicyclic
from khds.oracles import brute_force_khds, brute_force_piercing
from khds.piercing import normalize_arcs, pierce_arcs
from khds.tree import solve_tree
from khds.unicyclic import solve_unicyclic


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for _ in range(args.trials):
        seed = rng.randrange(2 ** 32)
        k = rng.randint(1, 3)

        g = gen_tree(GenSpec(rng.randint(1, 16), seed))
        got = len(solve_tree(g, 0, k).dom.members)
        want = len(brute_force_khds(g, k).members)
        if got != want:
            print(f"tree MISMATCH seed={seed} n={g.n} k={k}: "
                  f"{got} != {want}")
            return 1

        g = gen_unicyclic(GenSpec(rng.randint(3, 16), seed))
        got = len(solve_unicyclic(g, k).members)
        want = len(brute_force_khds(g, k).members)
        if got != want:
            print(f"unicyclic MISMATCH seed={seed} n={g.n} k={k}: "
                  f"{got} != {want}")
            return 1

        g = gen_cactus(GenSpec(rng.randint(6, 16), seed,
                               cycle_count=rng.randint(1, 2),
                               max_cycle_len=7))
        got = len(solve_cactus(g, k).members)
        want = len(brute_force_khds(g, k).members)
        if got != want:
            print(f"cactus MISMATCH seed={seed} n={g.n} k={k}: "
                  f"{got} != {want}")
            return 1

        big, pairs = gen_raw_arcs(GenSpec(rng.randint(1, 10), seed))
        inst = normalize_arcs(big, pairs)
        got = len(pierce_arcs(inst).points)
        want = len(brute_force_piercing(inst).points)
        if got != want:
            print(f"pierce MISMATCH seed={seed} n={len(pairs)}: "
                  f"{got} != {want}")
            return 1

    print(f"all {args.trials} trials agree with the oracles "
          "(tree, unicyclic, cactus, pierce)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
