"""Command-line front end: solve, pierce, verify, gen, bench.

Exit codes: 0 success, 1 input error, 2 unsupported graph class,
3 internal invariant violation (including oracle mismatches).
Reports are deterministic byte for byte unless --timing is given.
"""

from __future__ import annotations

import argparse
import ctypes
import json
import sys
import time
from statistics import median

from .cactus import solve_cactus
from .errors import (
    InternalInvariantError,
    KhdsError,
    NotCactus,
    ParseError,
    TooLargeError,
)
from .generators import (
    GenSpec,
    gen_arcs,
    gen_cactus,
    gen_raw_arcs,
    gen_tree,
    gen_unicyclic,
)
from .graph import GraphClass, classify, format_graph, parse_graph, verify_khds
from .oracles import brute_force_khds, brute_force_piercing, quadratic_piercing
from .piercing import format_arcs, normalize_arcs, parse_arcs, pierce_arcs
from .tree import solve_tree
from .unicyclic import solve_unicyclic

_DEFAULT_LADDER = [2 ** p for p in range(16, 23)]


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
        return
    for key, value in report.items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        print(f"{key}={value}")


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    cls = classify(g)
    t0 = time.perf_counter()
    if cls is GraphClass.TREE:
        dom = solve_tree(g, 0, args.k).dom
    elif cls is GraphClass.UNICYCLIC:
        dom = solve_unicyclic(g, args.k)
    elif cls is GraphClass.CACTUS:
        dom = solve_cactus(g, args.k)
    else:
        raise NotCactus("not a cactus")
    elapsed = time.perf_counter() - t0
    res = verify_khds(g, dom.members, args.k)
    if not res.covered:
        raise InternalInvariantError(
            f"solver output leaves vertex {res.witness} uncovered")
    if args.oracle:
        if g.n > 20:
            raise TooLargeError("--oracle supports n <= 20 only")
        want = brute_force_khds(g, args.k)
        if want.size != dom.size:
            raise InternalInvariantError(
                f"oracle disagrees: got {dom.size}, optimal {want.size}")
    report = {
        "n": g.n, "m": g.m, "class": cls.value, "k": args.k,
        "size": dom.size, "members": dom.sorted(), "covered": True,
    }
    if args.timing:
        report["time_ms"] = round(elapsed * 1000.0, 3)
    _emit(report, args.json)
    return 0


def cmd_pierce(args) -> int:
    big, pairs = parse_arcs(_read(args.arcs))
    inst = normalize_arcs(big, pairs)
    t0 = time.perf_counter()
    ps = pierce_arcs(inst)
    elapsed = time.perf_counter() - t0
    pts = ps.sorted()
    for s, e in pairs:
        if not any((p - s) % big <= (e - s) % big for p in pts):
            raise InternalInvariantError(f"arc ({s}, {e}) not pierced")
    if args.oracle:
        if inst.n <= 12:
            want = brute_force_piercing(inst).size
        elif inst.n <= 10 ** 4:
            want = quadratic_piercing(inst).size
        else:
            raise TooLargeError("--oracle supports n <= 10^4 only")
        if want != ps.size:
            raise InternalInvariantError(
                f"oracle disagrees: got {ps.size}, optimal {want}")
    report = {
        "positions": inst.n_positions, "arcs": len(pairs),
        "size": ps.size, "points": pts,
    }
    if args.timing:
        report["time_ms"] = round(elapsed * 1000.0, 3)
    _emit(report, args.json)
    return 0


def _parse_set(text: str) -> list[int]:
    members: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split():
            try:
                members.append(int(token))
            except ValueError:
                raise ParseError("expected a vertex id", lineno) from None
    return members


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    members = _parse_set(_read(args.set))
    res = verify_khds(g, members, args.k)
    if res.covered:
        print("covered")
        return 0
    print(f"uncovered witness={res.witness} dist={res.max_dist}")
    return 1


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.seed, cycle_len=args.cycle_len,
                   cycle_count=args.cycle_count,
                   max_cycle_len=args.max_cycle_len,
                   max_radius=args.max_radius)
    if args.kind == "arcs":
        text = format_arcs(gen_arcs(spec))
    else:
        gen = {"tree": gen_tree, "unicyclic": gen_unicyclic,
               "cactus": gen_cactus}[args.kind]
        text = format_graph(gen(spec))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _tune_allocator() -> None:
    """Keep large buffers on the heap so repeated runs reuse them.

    The default allocator mmaps and munmaps every multi-megabyte array,
    which re-faults ~100MB of zeroed pages per solver call and adds noisy
    kernel time to the timings."""
    try:
        libc = ctypes.CDLL("libc.so.6")
        libc.mallopt(-3, 1 << 30)        # M_MMAP_THRESHOLD
        libc.mallopt(-1, 2 ** 31 - 1)    # M_TRIM_THRESHOLD
    except OSError:  # pragma: no cover
        pass


def _bench_case(kind: str, n: int, seed: int, k: int):
    """Instance plus the zero-argument solver call being measured."""
    if kind == "tree":
        g = gen_tree(GenSpec(n, seed))
        return lambda: solve_tree(g, 0, k)
    if kind == "pierce":
        # normalization is the bulk of the piercing pipeline, so time both
        big, pairs = gen_raw_arcs(GenSpec(n, seed))
        return lambda: pierce_arcs(normalize_arcs(big, pairs))
    if kind == "unicyclic":
        g = gen_unicyclic(GenSpec(n, seed, cycle_len=max(3, n // 16)))
        return lambda: solve_unicyclic(g, k)
    # floor of 2 keeps every ladder size on the multi-cycle code path
    g = gen_cactus(GenSpec(n, seed, cycle_count=max(2, n // 32768),
                           max_cycle_len=9))
    return lambda: solve_cactus(g, k)


def cmd_bench(args) -> int:
    sizes = args.sizes or _DEFAULT_LADDER
    rows = []
    prev = None
    for i, n in enumerate(sizes):
        call = _bench_case(args.kind, n, args.seed + i, args.k)
        times = []
        for _ in range(args.runs):
            t0 = time.perf_counter()
            call()
            times.append((time.perf_counter() - t0) * 1000.0)
        med = median(times)
        ratio = None if prev is None else med / prev
        prev = med
        rows.append({"kind": args.kind, "n": n,
                     "median_ms": round(med, 3),
                     "ratio": None if ratio is None else round(ratio, 3),
                     "flagged": bool(ratio is not None and ratio > 2.5)})
    if args.json:
        print(json.dumps(rows, sort_keys=True))
    else:
        for row in rows:
            ratio = "-" if row["ratio"] is None else f"{row['ratio']:.3f}"
            flag = " FLAG" if row["flagged"] else ""
            print(f"kind={row['kind']} n={row['n']} "
                  f"median_ms={row['median_ms']:.3f} ratio={ratio}{flag}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="khds",
        description="minimum k-hop dominating sets on trees, unicyclic "
                    "graphs, and cacti")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a graph file")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pierce", help="pierce an arc file")
    p.add_argument("arcs")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_pierce)

    p = sub.add_parser("verify", help="verify a dominating set file")
    p.add_argument("graph")
    p.add_argument("set")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--kind", required=True,
                   choices=["tree", "unicyclic", "cactus", "arcs"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cycle-len", type=int, dest="cycle_len")
    p.add_argument("--cycle-count", type=int, dest="cycle_count")
    p.add_argument("--max-cycle-len", type=int, dest="max_cycle_len")
    p.add_argument("--max-radius", type=int, dest="max_radius")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a solver over a size ladder")
    p.add_argument("--kind", required=True,
                   choices=["tree", "pierce", "unicyclic", "cactus"])
    p.add_argument("--sizes", type=lambda s: [int(x) for x in s.split(",")])
    p.add_argument("--runs", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotCactus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except KhdsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
