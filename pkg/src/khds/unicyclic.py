"""Minimum k-hop domination on unicyclic graphs via circular-arc piercing.

Three phases: solve every pendant tree rooted at its cycle vertex (late
roots are removed, leaving a residual uncovered height h and an infinite
distance), relax distances to the selected vertices around the ring with
min-plus prefix scans, and cover the still-unsatisfied trees by piercing one
arc of radius k - h per tree with cycle vertices.  The anchored and reduced
variants reuse the same ring state and delegate the freedom in the piercing
phase to the matching arc-piercing variants.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .errors import InvalidK, NotUnicyclic, RhoNotOnCycle, TooLargeError
from .graph import (
    CycleDecomposition,
    DominatingSet,
    Graph,
    bfs_forest,
    extract_cycle,
    graph_from_edges,
    multi_source_distances,
)
from .piercing import (
    ArcInstance,
    _anchored_any_position,
    normalize_arcs,
    pierce_arcs,
)
from .tree import INF, solve_forest, solve_tree


def _ring_state(g: Graph, k: int, cyc: CycleDecomposition, required=None,
                forced=None, tables=None):
    """Pendant-tree solves plus relaxed ring distances.

    Returns (selected vertices, h, delta) with h and delta indexed by cycle
    position: h is the height of the still-uncovered demand in the pendant
    tree (-1 when satisfied) and delta the hop distance to the nearest
    selected vertex.  ``tables`` caches bfs_forest(g, cyc.cycle).
    """
    roots = np.asarray(cyc.cycle, dtype=np.int64)
    if tables is None:
        tables = bfs_forest(g, cyc.cycle)
    order, parent, _, starts = tables
    selected, need, cover = solve_forest(order, parent, starts, g.n, k,
                                         required, forced)
    h = need[roots]
    d0 = np.where(h >= 0, INF, cover[roots])
    return selected, h, _min_plus_ring(d0)


def _min_plus_ring(d0: np.ndarray) -> np.ndarray:
    """delta[i] = min_j d0[j] + ring_distance(i, j), both directions."""
    size = d0.size
    t = np.arange(2 * size, dtype=np.int64)
    dd = np.concatenate([d0, d0])
    fwd = (np.minimum.accumulate(dd - t) + t)[size:]
    rr = dd[::-1]
    bwd = (np.minimum.accumulate(rr - t) + t)[size:][::-1]
    return np.minimum(fwd, bwd)


def _demands(h: np.ndarray, delta: np.ndarray, k: int):
    """Cycle positions whose pendant tree is still uncovered, with radii."""
    mask = (h >= 0) & (delta + h > k)
    pos = np.nonzero(mask)[0]
    radius = k - h[pos]
    return pos, radius


def _demand_arcs(pos: np.ndarray, radius: np.ndarray, ring: int):
    """One arc per demand: cycle positions within radius of the demand; a
    span reaching the whole ring is emitted as an explicit full circle."""
    s = (pos - radius) % ring
    full = 2 * radius + 1 >= ring
    e = np.where(full, (s - 1) % ring, (pos + radius) % ring)
    return list(zip(s.tolist(), e.tolist()))


def _check_unicyclic(g: Graph, k: int) -> CycleDecomposition:
    if g.m != g.n:
        raise NotUnicyclic("graph is not unicyclic")
    if k < 1:
        raise InvalidK("k must be >= 1")
    return extract_cycle(g, with_pendants=False)


def _core_solve(g: Graph, k: int, cyc: CycleDecomposition, forced=None,
                tables=None, fallback: Optional[int] = None) -> set:
    """One full solve given the cycle decomposition; returns the member set.

    ``fallback`` names the cycle vertex used when the piercing instance
    degenerates to full circles only (lowest cycle vertex by default)."""
    selected, h, delta = _ring_state(g, k, cyc, forced=forced, tables=tables)
    pos, radius = _demands(h, delta, k)
    members = set(selected)
    if pos.size:
        ring = len(cyc.cycle)
        inst = normalize_arcs(ring, _demand_arcs(pos, radius, ring))
        if inst.n == 0:
            members.add(min(cyc.cycle) if fallback is None else fallback)
        else:
            members.update(cyc.cycle[p] for p in pierce_arcs(inst).points)
    return members


def solve_unicyclic(g: Graph, k: int) -> DominatingSet:
    """Minimum k-hop dominating set of a unicyclic graph in linear time."""
    cyc = _check_unicyclic(g, k)
    return DominatingSet(frozenset(_core_solve(g, k, cyc)), k)


def solve_unicyclic_quadratic(g: Graph, k: int) -> DominatingSet:
    """Spanning-tree oracle: delete each cycle edge, solve the tree, keep
    the smallest answer."""
    if g.m != g.n:
        raise NotUnicyclic("graph is not unicyclic")
    if g.n > 10 ** 4:
        raise TooLargeError("quadratic oracle limited to n <= 10^4")
    cyc = _check_unicyclic(g, k)
    ring = len(cyc.cycle)
    edges = list(g.edges())
    cycle_edges = set()
    for i in range(ring):
        a, b = cyc.cycle[i], cyc.cycle[(i + 1) % ring]
        cycle_edges.add((min(a, b), max(a, b)))
    best = None
    for ce in sorted(cycle_edges):
        sub = [e for e in edges if (min(e), max(e)) != ce]
        tree = graph_from_edges(g.n, sub)
        res = solve_tree(tree, 0, k)
        if best is None or res.dom.size < best.size:
            best = res.dom
    return DominatingSet(best.members, k)


def _rho_position(cyc: CycleDecomposition, rho: int) -> int:
    if rho not in cyc.position:
        raise RhoNotOnCycle(f"vertex {rho} is not on the cycle")
    return cyc.position[rho]


def _core_anchored(g: Graph, k: int, cyc: CycleDecomposition, rho: int,
                   forced=None, tables=None) -> set:
    p_rho = _rho_position(cyc, rho)
    selected, h, delta = _ring_state(g, k, cyc, forced=forced, tables=tables)
    pos, radius = _demands(h, delta, k)
    members = set(selected)
    if pos.size:
        ring = len(cyc.cycle)
        inst = normalize_arcs(ring, _demand_arcs(pos, radius, ring))
        if inst.n == 0:
            members.add(rho)
        else:
            m_pierce = pierce_arcs(inst).size
            ps = _anchored_any_position(inst, p_rho, m_pierce)
            members.update(cyc.cycle[p] for p in ps.points)
    return members


def solve_unicyclic_anchored(g: Graph, k: int, rho: int) -> DominatingSet:
    """Minimum set additionally minimizing the hop distance from rho, over
    every placement of the piercing points (any cycle vertex allowed)."""
    cyc = _check_unicyclic(g, k)
    return DominatingSet(frozenset(_core_anchored(g, k, cyc, rho)), k)


def _core_reduced(g: Graph, k: int, cyc: CycleDecomposition, rho: int,
                  forced=None, tables=None, dist_rho=None):
    """Reduced solve given the cycle decomposition; returns (member set or
    None, farthest uncovered vertex or None)."""
    m = len(_core_solve(g, k, cyc, forced=forced, tables=tables))
    if dist_rho is None:
        dist_rho = multi_source_distances(g, [rho])
    ring = len(cyc.cycle)
    best = None
    for r in range(k, -1, -1):
        required = dist_rho > r
        selected, h, delta = _ring_state(g, k, cyc, required, forced, tables)
        pts: list[int] = []
        if (ph := _demands(h, delta, k))[0].size:
            pos, radius = ph
            inst = normalize_arcs(ring, _demand_arcs(pos, radius, ring))
            if inst.n == 0:
                pts = [rho]
            else:
                pts = [cyc.cycle[p] for p in pierce_arcs(inst).points]
        if len(selected) + len(pts) > m - 1:
            break
        best = set(selected) | set(pts)
    if best is None:
        return None, None
    return best, _farthest_uncovered(g, best, k, dist_rho)


def solve_unicyclic_reduced(g: Graph, k: int, rho: int):
    """Try to k-dominate everything outside N_k(rho) with one vertex fewer.

    Returns (dom, farthest) where dom has size optimum-1 and farthest is the
    vertex of G not k-dominated by dom that lies farthest from rho (None if
    dom covers everything); returns (None, None) when no such set exists.
    Among feasible sets the farthest-vertex distance is minimized: the scan
    tightens the demand radius r around rho while a size-(m-1) solution of
    "cover every vertex beyond r hops from rho" survives.
    """
    cyc = _check_unicyclic(g, k)
    _rho_position(cyc, rho)
    best, far = _core_reduced(g, k, cyc, rho)
    if best is None:
        return (None, None)
    return (DominatingSet(frozenset(best), k), far)


def _farthest_uncovered(g: Graph, members, k: int,
                        dist_rho: np.ndarray) -> Optional[int]:
    if members:
        dist = multi_source_distances(g, sorted(members))
        uncovered = np.nonzero(dist > k)[0]
    else:
        uncovered = np.arange(g.n)
    if uncovered.size == 0:
        return None
    return int(uncovered[np.argmax(dist_rho[uncovered])])
