"""Minimum piercing of segments on a line and of arcs on a circle.

Positions are integers 0..N-1 arranged clockwise.  An arc [s, e] covers the
positions reached walking clockwise from s to e inclusive, so it may wrap
past N-1; s == e is a single position.  After normalization no arc contains
another, which gives the two structural facts the linear algorithm rests on:
all start positions are distinct, all end positions are distinct, and the
clockwise order of starts matches the clockwise order of ends.

The solver fixes a reference arc a_1 (the first surviving input arc), cuts
the circle at mu = s_1, and for every candidate ending point q inside a_1
walks the successor chain q, next(q), next(next(q)), ... until it wraps.
Chains are memoized over the shared successor graph, so all candidates cost
O(n) together; a per-candidate fix-up point handles arcs that wrap past mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidK,
    InvalidM,
    NoArcsError,
    ParseError,
    RhoNotInDomain,
)

_VEC_MIN = 4096


@dataclass(frozen=True)
class CircularDomain:
    """Clockwise-indexed positions 0..n_positions-1 with reference mu."""

    n_positions: int
    mu: int


@dataclass(frozen=True)
class Arc:
    s: int
    e: int
    id: int

    def length(self, n_positions: int) -> int:
        return (self.e - self.s) % n_positions + 1

    def contains(self, p: int, n_positions: int) -> bool:
        return (p - self.s) % n_positions <= (self.e - self.s) % n_positions


@dataclass(frozen=True)
class PiercingSet:
    """Chosen positions; anchored_distance is set by the anchored variants."""

    points: frozenset[int]
    anchored_distance: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.points)

    def sorted(self) -> list[int]:
        return sorted(self.points)


def _as_pairs(arcs) -> list[tuple[int, int]]:
    out = []
    for a in arcs:
        if isinstance(a, Arc):
            out.append((a.s, a.e))
        else:
            s, e = a
            out.append((int(s), int(e)))
    return out


class ArcInstance:
    """Normalized arc set over a circular domain.

    arcs holds the surviving arcs sorted clockwise by ending point from mu
    (ids refer to the original input order).  represented_by maps every
    original arc id to the id of a surviving arc contained in it (itself for
    survivors, -1 for pruned full-circle arcs), so a piercing of the
    normalized instance pierces the raw input.
    """

    __slots__ = ("domain", "ref_arc", "full_circle_ids",
                 "represented_by", "_s", "_e", "_ids", "_arcs", "_idx_e",
                 "_sorted_starts", "_end_by_start", "_sorted_ends", "_f_set")

    def __init__(self, domain, s, e, ids, full_circle_ids, represented_by,
                 full_circle_ends=(), ref_arc=None):
        self.domain = domain
        self.ref_arc = ref_arc
        self.full_circle_ids = full_circle_ids
        self.represented_by = represented_by
        self._s = np.asarray(s, dtype=np.int64)
        self._e = np.asarray(e, dtype=np.int64)
        self._ids = np.asarray(ids, dtype=np.int64)
        self._arcs = None
        self._idx_e = (self._e - domain.mu) % domain.n_positions
        order = np.argsort(self._s)
        self._sorted_starts = self._s[order]
        self._end_by_start = self._e[order]
        self._sorted_ends = np.sort(
            np.concatenate([self._e, np.asarray(full_circle_ends, dtype=np.int64)]))
        self._f_set = None

    @property
    def arcs(self) -> tuple:
        if self._arcs is None:
            self._arcs = tuple(
                Arc(int(a), int(b), int(i))
                for a, b, i in zip(self._s.tolist(), self._e.tolist(),
                                   self._ids.tolist()))
        return self._arcs

    @property
    def n(self) -> int:
        return self._s.size

    @property
    def n_positions(self) -> int:
        return self.domain.n_positions

    def idx(self, p):
        """Clockwise offset of p from mu."""
        return (p - self.domain.mu) % self.domain.n_positions

    def in_F(self, p: int) -> bool:
        if self._f_set is None:
            self._f_set = set(self._sorted_ends.tolist())
        return p in self._f_set

    def ending_points(self) -> np.ndarray:
        return self._sorted_ends

    def next_arc_of(self, p):
        """Index (start-sorted order) of the first arc starting strictly
        after p clockwise; vectorized over arrays."""
        j = np.searchsorted(self._sorted_starts, np.asarray(p) + 1, side="left")
        return j % len(self._sorted_starts)

    def next_of(self, p):
        """Ending point of the first arc starting strictly after p."""
        return self._end_by_start[self.next_arc_of(p)]

    def arc_by_start_rank_contains(self, j, p):
        s = self._sorted_starts[j]
        e = self._end_by_start[j]
        big = self.domain.n_positions
        return (np.asarray(p) - s) % big <= (e - s) % big


def normalize_arcs(n_positions: int, arcs) -> ArcInstance:
    """Prune full-circle and contained arcs, fix mu, sort by ending point."""
    if n_positions < 1:
        raise ParseError("domain must have at least one position")
    if isinstance(arcs, np.ndarray):
        arr = arcs.astype(np.int64, copy=False).reshape(-1, 2)
        s, e = arr[:, 0].copy(), arr[:, 1].copy()
    else:
        pairs = _as_pairs(arcs)
        s = np.fromiter((p[0] for p in pairs), dtype=np.int64,
                        count=len(pairs))
        e = np.fromiter((p[1] for p in pairs), dtype=np.int64,
                        count=len(pairs))
    if s.size == 0:
        raise NoArcsError("at least one arc is required")
    big = n_positions
    if s.size and (s.min() < 0 or e.min() < 0 or max(s.max(), e.max()) >= big):
        raise ParseError("arc endpoint out of range")
    n_orig = s.size
    length = (e - s) % big + 1
    rep = np.arange(n_orig, dtype=np.int64)

    full = length == big
    full_ids = np.nonzero(full)[0]
    rep[full] = -1

    has_full = bool(full_ids.size)
    ids0 = np.nonzero(~full)[0] if has_full else None
    cnt = ids0.size if has_full else n_orig
    if cnt:
        # sort by start, grouping duplicates and same-start arcs; packing
        # the position into the key's low bits makes one value sort both
        # fast and effectively stable (lowest original ids come first)
        ks = s[ids0] if has_full else s
        if big <= 2 ** 31 - 1 and cnt < 2 ** 32:
            combo = np.sort((ks << np.int64(32))
                            | np.arange(cnt, dtype=np.int64))
            so = combo >> np.int64(32)
            order = combo & np.int64(0xFFFFFFFF)
        else:
            order = np.argsort(ks, kind="stable")
            so = ks[order]
        sid = ids0[order] if has_full else order
        lo = length[sid]
        head = np.ones(cnt, dtype=bool)
        head[1:] = so[1:] != so[:-1]
        starts = np.nonzero(head)[0]
        sizes = np.diff(np.append(starts, cnt))
        # per start the shortest arc (lowest id on ties) represents the rest
        mlen = np.minimum.reduceat(lo, starts)
        pos = np.arange(cnt, dtype=np.int64)
        cand = np.where(lo == np.repeat(mlen, sizes), pos, cnt)
        canon = sid[np.minimum.reduceat(cand, starts)]
        cper = np.repeat(canon, sizes)
        loser = sid != cper
        rep[sid[loser]] = cper[loser]
        so_h, lo_h, ids_h = so[starts], mlen, canon
        nk = ids_h.size
        # arc j is inside arc i iff (s_j - s_i) mod N + len_j <= len_i; with
        # starts sorted and unique that candidate window is "every j != i",
        # i.e. the cheapest of suffix min over A_j = s_j + len_j (j > i) and
        # prefix min over A_j + N (j < i, the wrapped copies)
        if nk >= 2:
            a = so_h + lo_h
            big_sentinel = np.iinfo(np.int64).max
            suf = np.minimum.accumulate(a[::-1])[::-1]
            suf_arg = (nk - 1) - _accum_argmin(
                a[None, ::-1], suf[None, ::-1])[0, ::-1]
            pre = np.minimum.accumulate(a)
            pre_arg = _accum_argmin(a[None, :], pre[None, :])[0]
            right = np.concatenate([suf[1:], [big_sentinel]])
            right_arg = np.concatenate([suf_arg[1:], [0]])
            left = np.concatenate([[big_sentinel - big], pre[:-1]]) + big
            left_arg = np.concatenate([[0], pre_arg[:-1]])
            take_right = right <= left
            cont_val = np.where(take_right, right, left) - so_h
            cont_arg = np.where(take_right, right_arg, left_arg)
            pruned = cont_val <= lo_h
            rep[ids_h[pruned]] = ids_h[cont_arg[pruned]]
            ids = np.sort(ids_h[~pruned])
        else:
            ids = ids_h
    else:
        ids = np.empty(0, dtype=np.int64)
    if ids.size == 0 and full_ids.size == 0:
        raise NoArcsError("no arcs survive normalization")

    # resolve pruning chains down to survivors by pointer jumping; each hop
    # moves to a strictly shorter arc, so log rounds over a shrinking set
    alive = np.zeros(n_orig, dtype=bool)
    alive[ids] = True
    pending = np.nonzero(rep >= 0)[0]
    pending = pending[~alive[rep[pending]]]
    while pending.size:
        rep[pending] = rep[rep[pending]]
        pending = pending[~alive[rep[pending]]]

    if ids.size == 0:
        domain = CircularDomain(n_positions, int(e[full_ids[0]]))
        empty = np.empty(0, dtype=np.int64)
        return ArcInstance(domain, empty, empty, empty,
                           tuple(full_ids.tolist()), rep,
                           full_circle_ends=e[full_ids])

    mu = int(s[ids[0]])
    ref = Arc(int(s[ids[0]]), int(e[ids[0]]), int(ids[0]))
    idx_e = (e[ids] - mu) % big
    order = np.argsort(idx_e)
    survivors = ids[order]
    domain = CircularDomain(n_positions, mu)
    return ArcInstance(domain, s[survivors], e[survivors], survivors,
                       tuple(full_ids.tolist()), rep,
                       full_circle_ends=e[full_ids], ref_arc=ref)


def _accum_argmin(vals: np.ndarray, accmin: np.ndarray) -> np.ndarray:
    """Per row: index of the running minimum at each prefix length."""
    fresh = vals <= np.concatenate(
        [np.full((vals.shape[0], 1), np.iinfo(np.int64).max), accmin[:, :-1]],
        axis=1)
    cols = np.arange(vals.shape[1])
    marked = np.where(fresh, cols, 0)
    return np.maximum.accumulate(marked, axis=1)


def compute_next(inst: ArcInstance) -> dict[int, int]:
    """next(p) for every endpoint position p: the ending point of the first
    arc whose start lies strictly after p clockwise."""
    xs = np.unique(np.concatenate([inst._s, inst._e]))
    nxt = inst.next_of(xs)
    return dict(zip(xs.tolist(), nxt.tolist()))


def pierce_segments(segments: Sequence[tuple[int, int]]) -> PiercingSet:
    """Classic line greedy: repeatedly take the smallest unpierced end."""
    segs = sorted(_as_pairs(segments), key=lambda t: t[1])
    points = []
    reach = None
    for s, e in segs:
        if s > e:
            raise ParseError("segment start exceeds its end")
        if reach is None or s > reach:
            points.append(e)
            reach = e
    return PiercingSet(frozenset(points))


def _full_circle_fallback(inst: ArcInstance) -> PiercingSet:
    # only full-circle arcs existed; any position works, use the first end
    return PiercingSet(frozenset({int(inst._sorted_ends[0])}))


def pierce_arcs(inst: ArcInstance) -> PiercingSet:
    """Minimum piercing set of a normalized instance in O(n) plus sorting."""
    if inst.n == 0:
        if inst.full_circle_ids:
            return _full_circle_fallback(inst)
        raise NoArcsError("instance has no arcs")
    q, total, walk = _best_candidate(inst)
    return PiercingSet(frozenset(walk))


def _chain_tables(inst: ArcInstance):
    """Per ending point (in clockwise rank order from mu): successor rank,
    stop flag, wrap fix-up point, chain length and terminal rank."""
    big = inst.n_positions
    idx_e_sorted = np.sort(inst._idx_e)
    ends = (idx_e_sorted + inst.domain.mu) % big
    j = inst.next_arc_of(ends)
    nx = inst._end_by_start[j]
    cont = inst.arc_by_start_rank_contains(j, ends)
    nidx = inst.idx(nx)
    wrap = (~cont) & (nidx < idx_e_sorted)
    stop = cont | wrap
    fix = np.where(wrap, nx, -1)
    succ = np.searchsorted(idx_e_sorted, nidx)
    n = ends.size
    ranks = np.arange(n)
    if n < _VEC_MIN:
        chainlen = np.ones(n, dtype=np.int64)
        last = ranks.copy()
        for r in range(n - 1, -1, -1):
            if not stop[r]:
                chainlen[r] = chainlen[succ[r]] + 1
                last[r] = last[succ[r]]
    else:
        jump = np.where(stop, ranks, succ)
        cnt = np.where(stop, 0, 1).astype(np.int64)
        steps = 1
        while steps < n:
            cnt = cnt + cnt[jump]
            jump = jump[jump]
            steps *= 2
        chainlen = cnt + 1
        last = jump
    return ends, idx_e_sorted, succ, stop, fix, chainlen, last


def _best_candidate(inst: ArcInstance):
    """Smallest candidate chain rooted inside the reference arc a_1."""
    ends, idx_e_sorted, succ, stop, fix, chainlen, last = _chain_tables(inst)
    hi = inst.idx(inst.ref_arc.e)
    ncand = int(np.searchsorted(idx_e_sorted, hi, side="right"))
    cand = np.arange(ncand)
    lr = last[cand]
    f = fix[lr]
    extra = (f >= 0) & (inst.idx(f) < idx_e_sorted[cand])
    total = chainlen[cand] + extra
    best = int(np.argmin(total))
    walk = []
    r = best
    while True:
        walk.append(int(ends[r]))
        if stop[r]:
            break
        r = int(succ[r])
    if extra[best]:
        walk.append(int(f[best]))
    return int(ends[best]), int(total[best]), walk


def _circ_dist(a: int, b: int, big: int) -> int:
    d = (a - b) % big
    return min(d, big - d)


def _greedy_from(inst: ArcInstance, z: int, cap: int) -> Optional[list[int]]:
    """Greedy chain anchored at z (z is selected); None once size exceeds cap."""
    big = inst.n_positions
    points = [z]
    cur = z
    while True:
        j = int(inst.next_arc_of(cur))
        if inst.arc_by_start_rank_contains(j, cur):
            return points
        nx = int(inst._end_by_start[j])
        if (nx - z) % big <= (cur - z) % big:
            return points  # the wrapping arc passes through z
        if len(points) >= cap:
            return None
        points.append(nx)
        cur = nx


def _anchored_scan(inst: ArcInstance, rho: int, m: int,
                   candidates: np.ndarray) -> PiercingSet:
    """Try anchors in increasing distance from rho; the first anchor whose
    greedy chain reaches the optimum size m yields the distance-minimal
    optimal set (clockwise wins ties)."""
    big = inst.n_positions
    cw = (candidates - rho) % big
    dist = np.minimum(cw, big - cw)
    order = np.lexsort((cw, dist))
    for z in candidates[order].tolist():
        walk = _greedy_from(inst, int(z), m)
        if walk is not None and len(walk) == m:
            return PiercingSet(frozenset(walk), _circ_dist(int(z), rho, big))
    raise AssertionError("unreachable: an optimal chain anchor always exists")


def pierce_arcs_anchored(inst: ArcInstance, rho: int) -> PiercingSet:
    """Minimum piercing set whose distance to rho is minimal among all
    minimum sets made of ending points."""
    big = inst.n_positions
    if not 0 <= rho < big:
        raise RhoNotInDomain(f"position {rho} outside domain of size {big}")
    if inst.n == 0:
        if inst.full_circle_ids:
            fe = inst._sorted_ends
            cw = (fe - rho) % big
            d = np.minimum(cw, big - cw)
            z = int(fe[np.lexsort((cw, d))[0]])
            return PiercingSet(frozenset({z}), _circ_dist(z, rho, big))
        raise NoArcsError("instance has no arcs")
    m = pierce_arcs(inst).size
    return _anchored_scan(inst, rho, m, np.unique(inst.ending_points()))


def _anchored_any_position(inst: ArcInstance, rho: int, m: int) -> PiercingSet:
    """Anchored variant allowing any position, not just ending points."""
    return _anchored_scan(inst, rho, m,
                          np.arange(inst.n_positions, dtype=np.int64))


def _excused(inst: ArcInstance, rho: int, i: int) -> np.ndarray:
    """Mask of surviving arcs forgiven at threshold i: arcs containing rho
    whose two endpoints both lie at least i positions away along the arc."""
    big = inst.n_positions
    s, e = inst._s, inst._e
    holds = (rho - s) % big <= (e - s) % big
    cw_margin = (e - rho) % big
    ccw_margin = (rho - s) % big
    return holds & (cw_margin >= i) & (ccw_margin >= i)


def pierce_arcs_reduced(inst: ArcInstance, rho: int, k: int, m: int):
    """Drop the arcs forgiven around rho and try to save one pierce point.

    Scans thresholds i = k-1 down to 1 and returns (i, witness of size m-1)
    for the largest feasible i, or None when even i = 1 cannot be pierced by
    m-1 points.
    """
    big = inst.n_positions
    if not 0 <= rho < big:
        raise RhoNotInDomain(f"position {rho} outside domain of size {big}")
    if k <= 1:
        raise InvalidK("the reduced variant needs k > 1")
    base = pierce_arcs(inst) if (inst.n or inst.full_circle_ids) else None
    if base is None or base.size != m:
        raise InvalidM("m does not match the unrestricted optimum")
    ends = inst.ending_points()
    for i in range(k - 1, 0, -1):
        keep = ~_excused(inst, rho, i)
        residue = [(int(inst._s[j]), int(inst._e[j]))
                   for j in np.nonzero(keep)[0]]
        if not residue:
            pts: list[int] = []
        else:
            sub = normalize_arcs(big, residue)
            ps = pierce_arcs(sub)
            if ps.size > m - 1:
                continue
            pts = ps.sorted()
        pts = _pad_points(pts, ends, rho, big, m - 1)
        return (i, PiercingSet(frozenset(pts)))
    return None


def _pad_points(pts: list[int], ends: np.ndarray, rho: int, big: int,
                want: int) -> list[int]:
    if len(pts) >= want:
        return pts
    have = set(pts)
    cw = (ends - rho) % big
    d = np.minimum(cw, big - cw)
    for z in ends[np.lexsort((cw, d))].tolist():
        if len(pts) >= want:
            break
        if z not in have:
            have.add(z)
            pts.append(int(z))
    return pts


def format_arcs(inst: ArcInstance) -> str:
    """Text form of a normalized instance: surviving arcs sorted by start."""
    pairs = sorted(zip(inst._s.tolist(), inst._e.tolist()))
    lines = [f"{inst.n_positions} {len(pairs)}"]
    lines.extend(f"{s} {e}" for s, e in pairs)
    return "\n".join(lines) + "\n"


def parse_arcs(text: str):
    """Arc file format: header "N n", then n lines "s e"."""
    header = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected two integers", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected two integers", lineno) from None
        if header is None:
            header = (a, b)
            continue
        pairs.append((a, b))
    if header is None:
        raise ParseError("missing 'N n' header")
    big, n = header
    if len(pairs) != n:
        raise ParseError(f"header announced {n} arcs, found {len(pairs)}")
    return big, pairs
