"""Seeded, platform-independent random instance generators.

All randomness comes from a splitmix-style 64-bit stream so that the same
GenSpec reproduces the same instance bit for bit on any platform; the
language's default PRNG is never used.  The scalar and vectorized streams
are interchangeable: value i of a stream equals _mix(seed + (i+1)*GAMMA).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BadShape
from .graph import Graph, graph_from_edges
from .piercing import ArcInstance, normalize_arcs

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Scalar 64-bit splitmix stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def randrange(self, bound: int) -> int:
        """Uniform-ish value in [0, bound); the modulo bias is irrelevant
        at instance-generation scale and keeps the stream portable."""
        return self.next() % bound


def splitmix64_stream(seed: int, count: int, offset: int = 0) -> np.ndarray:
    """Vectorized stream: values offset..offset+count-1 of SplitMix64(seed).

    Bit-identical to calling SplitMix64(seed).next() that many times.
    """
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = np.uint64(seed) + idx * np.uint64(_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@dataclass(frozen=True)
class GenSpec:
    """Instance shape: size, seed, and the knobs used by each generator."""

    n: int
    seed: int
    cycle_len: Optional[int] = None
    cycle_count: Optional[int] = None
    max_cycle_len: Optional[int] = None
    max_radius: Optional[int] = None


def gen_tree(spec: GenSpec) -> Graph:
    """Uniform random attachment tree: vertex i attaches to a uniform
    vertex among 0..i-1."""
    n = spec.n
    if n < 1:
        raise BadShape("n must be >= 1")
    vals = splitmix64_stream(spec.seed, n - 1)
    parents = vals % np.arange(1, n, dtype=np.uint64)
    kids = np.arange(1, n, dtype=np.int64)
    return graph_from_edges(
        n, zip(parents.astype(np.int64).tolist(), kids.tolist()))


def gen_unicyclic(spec: GenSpec) -> Graph:
    """A cycle of cycle_len (default 3) with random trees attached."""
    n = spec.n
    c = spec.cycle_len if spec.cycle_len is not None else 3
    if not 3 <= c <= n:
        raise BadShape(f"need 3 <= cycle_len <= n, got {c} and n={n}")
    edges = [(i, (i + 1) % c) for i in range(c)]
    if n > c:
        vals = splitmix64_stream(spec.seed, n - c)
        parents = vals % np.arange(c, n, dtype=np.uint64)
        kids = np.arange(c, n, dtype=np.int64)
        edges.extend(zip(parents.astype(np.int64).tolist(), kids.tolist()))
    return graph_from_edges(n, edges)


def gen_cactus(spec: GenSpec) -> Graph:
    """Cactus grown by attaching cycle_count cycles and pendant edges at
    random existing vertices (cycles first, pendants vectorized after)."""
    n = spec.n
    cc = spec.cycle_count if spec.cycle_count is not None else 1
    mcl = spec.max_cycle_len if spec.max_cycle_len is not None else 7
    if cc < 0 or n < 1:
        raise BadShape("cycle_count and n must be nonnegative")
    if cc and mcl < 3:
        raise BadShape("max_cycle_len must be >= 3")
    if n < 1 + 2 * cc:
        raise BadShape(f"n={n} too small for {cc} cycles")
    rng = SplitMix64(spec.seed)
    edges: list[tuple[int, int]] = []
    nv = 1
    for i in range(cc):
        room = n - nv - 2 * (cc - 1 - i)  # keep space for remaining cycles
        clen = 3 + rng.randrange(min(mcl, room + 1) - 2)
        attach = rng.randrange(nv)
        ring = [attach] + list(range(nv, nv + clen - 1))
        edges.extend((ring[j], ring[(j + 1) % clen]) for j in range(clen))
        nv += clen - 1
    if nv < n:
        vals = splitmix64_stream(rng.state, n - nv)
        parents = vals % np.arange(nv, n, dtype=np.uint64)
        kids = np.arange(nv, n, dtype=np.int64)
        edges.extend(zip(parents.astype(np.int64).tolist(), kids.tolist()))
    return graph_from_edges(n, edges)


def gen_raw_arcs(spec: GenSpec) -> tuple[int, np.ndarray]:
    """The (domain size, (n, 2) arc array) behind gen_arcs, un-normalized."""
    n = spec.n
    if n < 1:
        raise BadShape("n must be >= 1")
    domain = 2 * n
    radius = spec.max_radius if spec.max_radius is not None else \
        max(1, domain // 4)
    radius = min(radius, domain - 1)
    vals = splitmix64_stream(spec.seed, 2 * n)
    starts = vals[0::2] % np.uint64(domain)
    spans = vals[1::2] % np.uint64(radius)
    ends = (starts + spans) % np.uint64(domain)
    return domain, np.column_stack([starts, ends]).astype(np.int64)


def gen_arcs(spec: GenSpec) -> ArcInstance:
    """Random arcs on a domain of 2n positions, normalized."""
    domain, arcs = gen_raw_arcs(spec)
    return normalize_arcs(domain, arcs)
