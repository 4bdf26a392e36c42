"""Ground-truth reference implementations used by the test suites.

Everything here trades speed for independence: exhaustive subset search for
small instances and a rotate-and-greedy quadratic piercing for mid-scale
cross-checks.  Subsets are enumerated in colexicographic order so witnesses
are reproducible; cross-checks assert sizes only.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from .errors import InvalidK, TooLargeError
from .graph import DominatingSet, Graph
from .piercing import ArcInstance, PiercingSet, _greedy_from
from .tree import _bfs_py


def _colex(n: int, r: int) -> Iterator[tuple[int, ...]]:
    for combo in sorted(combinations(range(n), r), key=lambda c: c[::-1]):
        yield combo


def _ball_masks(g: Graph, k: int) -> list[int]:
    balls = []
    for v in range(g.n):
        dist = _bfs_py(g, v)
        mask = 0
        for w in range(g.n):
            if 0 <= dist[w] <= k:
                mask |= 1 << w
        balls.append(mask)
    return balls


def brute_force_khds(g: Graph, k: int) -> DominatingSet:
    """Exhaustive minimum k-hop dominating set, n <= 20."""
    if g.n > 20:
        raise TooLargeError("exhaustive search limited to n <= 20")
    if k < 1:
        raise InvalidK("k must be >= 1")
    balls = _ball_masks(g, k)
    goal = (1 << g.n) - 1
    # greedy upper bound caps the subset sizes worth searching
    ub_set: list[int] = []
    acc = 0
    while acc != goal:
        best = max(range(g.n), key=lambda v: bin(balls[v] & ~acc).count("1"))
        ub_set.append(best)
        acc |= balls[best]
    for size in range(1, len(ub_set)):
        for combo in _colex(g.n, size):
            acc = 0
            for v in combo:
                acc |= balls[v]
            if acc == goal:
                return DominatingSet(frozenset(combo), k)
    return DominatingSet(frozenset(ub_set), k)


def all_minimum_khds(g: Graph, k: int) -> Iterator[frozenset[int]]:
    """Every minimum k-hop dominating set, for distance comparisons."""
    if g.n > 16:
        raise TooLargeError("enumeration limited to n <= 16")
    opt = brute_force_khds(g, k).size
    balls = _ball_masks(g, k)
    goal = (1 << g.n) - 1
    for combo in combinations(range(g.n), opt):
        acc = 0
        for v in combo:
            acc |= balls[v]
        if acc == goal:
            yield frozenset(combo)


def _survivor_masks(inst: ArcInstance):
    big = inst.n_positions
    ends = inst.ending_points()
    masks = []
    for a in inst.arcs:
        m = 0
        for j, p in enumerate(ends.tolist()):
            if (p - a.s) % big <= (a.e - a.s) % big:
                m |= 1 << j
        masks.append(m)
    return ends, masks


def brute_force_piercing(inst: ArcInstance) -> PiercingSet:
    """Exhaustive minimum piercing over ending points, n <= 12 arcs."""
    if inst.n > 12:
        raise TooLargeError("exhaustive piercing limited to 12 arcs")
    if inst.n == 0:
        return PiercingSet(frozenset({int(inst.ending_points()[0])}))
    ends, masks = _survivor_masks(inst)
    nf = ends.size
    for size in range(1, nf + 1):
        for combo in _colex(nf, size):
            chosen = 0
            for j in combo:
                chosen |= 1 << j
            if all(m & chosen for m in masks):
                return PiercingSet(frozenset(int(ends[j]) for j in combo))
    raise AssertionError("unreachable: all ending points pierce everything")


def all_minimum_piercings(inst: ArcInstance) -> Iterator[frozenset[int]]:
    """Every minimum piercing set drawn from ending points."""
    if inst.n == 0:
        for p in inst.ending_points().tolist():
            yield frozenset({int(p)})
        return
    opt = brute_force_piercing(inst).size
    ends, masks = _survivor_masks(inst)
    for combo in combinations(range(ends.size), opt):
        chosen = 0
        for j in combo:
            chosen |= 1 << j
        if all(m & chosen for m in masks):
            yield frozenset(int(ends[j]) for j in combo)


def quadratic_piercing(inst: ArcInstance) -> PiercingSet:
    """Rotate-and-greedy reference: fix each ending point inside the
    reference arc as the first pierce point, run the greedy, keep the best."""
    if inst.n > 10 ** 4:
        raise TooLargeError("quadratic reference limited to n <= 10^4")
    if inst.n == 0:
        return PiercingSet(frozenset({int(inst.ending_points()[0])}))
    big = inst.n_positions
    ref = inst.ref_arc
    cands = [int(p) for p in np.sort(inst._e).tolist()
             if (p - ref.s) % big <= (ref.e - ref.s) % big]
    best: Optional[list[int]] = None
    for q in cands:
        walk = _greedy_from(inst, q, inst.n + 1)
        if walk is not None and (best is None or len(walk) < len(best)):
            best = walk
    assert best is not None
    return PiercingSet(frozenset(best))
