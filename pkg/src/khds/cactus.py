"""Minimum k-hop domination on cactus graphs.

Cycles are consumed innermost-first.  Each step solves the unicyclic
component C+ hanging below a cycle's top vertex rho in two flavors (the
anchored solve D1 and the one-smaller reduced solve D2), keeps the better
partial answer, and rewrites C+ down to a short path from rho so that the
remaining demand and any forced re-selection survive into the rest of the
graph.  After all but one cycle are consumed, a single unicyclic solve on
the residue finishes the job.

Internally the rewrite never materializes the forced length-k tail: a
boolean flag makes downstream solves select the tail's attachment vertex
unconditionally, which has the same effect.  The public
``solve_special_unicycle`` returns an explicit plan with fresh synthetic ids
so that the rewrite can be inspected and replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InternalInvariantError,
    InvalidK,
    NoBackEdge,
    NotCactus,
)
from .graph import (
    CycleDecomposition,
    DominatingSet,
    Graph,
    _bfs_cycles,
    bfs_forest,
)
from .tree import solve_tree
from .unicyclic import _core_anchored, _core_reduced, _core_solve

WHITE, GRAY, BLACK = 0, 1, 2


@dataclass(frozen=True)
class DfsState:
    """Result of a full depth-first search from a root.

    ``finish_list`` holds the vertices with a back edge, ordered by
    finishing time; in a cactus these are exactly the cycle tops, innermost
    cycles first.
    """

    color: np.ndarray
    parent: np.ndarray
    back_edge: np.ndarray
    finish_list: tuple[int, ...]


@dataclass(frozen=True)
class RewritePlan:
    """How one unicyclic component was consumed.

    ``removed`` is the component minus the kept spine, ``spine`` the path
    rho -> u left in the graph, ``synthetic`` the fresh path vertices
    (ids >= original n) of the forcing tail, and ``provenance`` maps each
    synthetic id to the vertex u whose re-selection it forces.
    """

    removed: frozenset[int]
    spine: tuple[int, ...]
    synthetic: tuple[int, ...]
    provenance: dict[int, int] = field(default_factory=dict)


def dfs_based(g: Graph, r: int) -> DfsState:
    """Iterative DFS from r, flagging the top vertex of every cycle.

    A gray neighbor other than the tree parent closes a cycle; the flag is
    set on that neighbor, the cycle vertex nearest the root on the DFS path.
    """
    color = np.zeros(g.n, dtype=np.int8)
    parent = np.full(g.n, -1, dtype=np.int64)
    back = np.zeros(g.n, dtype=bool)
    ptr = g.offsets[:-1].astype(np.int64).copy()
    offsets, neighbors = g.offsets, g.neighbors
    finish: list[int] = []
    color[r] = GRAY
    stack = [r]
    while stack:
        v = stack[-1]
        if ptr[v] < offsets[v + 1]:
            w = int(neighbors[ptr[v]])
            ptr[v] += 1
            if color[w] == WHITE:
                color[w] = GRAY
                parent[w] = v
                stack.append(w)
            elif color[w] == GRAY and w != parent[v]:
                back[w] = True
        else:
            stack.pop()
            color[v] = BLACK
            if back[v]:
                finish.append(v)
    return DfsState(color, parent, back, tuple(finish))


# ---------------------------------------------------------------------------
# Working state for the rewriting pipeline


class _Workspace:
    """Mutable view of the input graph: an aliveness mask over vertices, a
    per-directed-edge block mask (cordons off not-yet-processed cycles), a
    forced-selection mask, and epoch-stamped scratch arrays so nothing of
    size n is reallocated per cycle."""

    def __init__(self, g: Graph):
        self.g = g
        self.alive = np.ones(g.n, dtype=bool)
        self.forced = np.zeros(g.n, dtype=bool)
        self.blocked = np.zeros(g.neighbors.size, dtype=bool)
        self.stamp = np.zeros(g.n, dtype=np.int64)
        self.local = np.zeros(g.n, dtype=np.int64)
        self.epoch = 0


def _entries(g: Graph, a: int, b: int) -> tuple[int, int]:
    """CSR positions of the two directed copies of edge (a, b)."""
    ia = g.offsets[a] + np.searchsorted(
        g.neighbors[g.offsets[a]: g.offsets[a + 1]], b)
    ib = g.offsets[b] + np.searchsorted(
        g.neighbors[g.offsets[b]: g.offsets[b + 1]], a)
    return int(ia), int(ib)


def _set_cycle_block(ws: _Workspace, cycle, value: bool) -> None:
    for i in range(len(cycle)):
        a, b = cycle[i], cycle[(i + 1) % len(cycle)]
        ia, ib = _entries(ws.g, a, b)
        ws.blocked[ia] = value
        ws.blocked[ib] = value


def _gather_idx(g: Graph, frontier: np.ndarray):
    """Neighbors of the frontier together with their CSR entry indices."""
    starts = g.offsets[frontier]
    counts = g.offsets[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    cum = np.cumsum(counts)
    base = np.repeat(starts - (cum - counts), counts)
    idx = np.arange(total, dtype=np.int64) + base
    return g.neighbors[idx], idx


def _reach(ws: _Workspace, rho: int) -> np.ndarray:
    """Alive vertices reachable from rho through unblocked edges, sorted;
    stamps them with a fresh epoch."""
    ws.epoch += 1
    ep = ws.epoch
    st = ws.stamp
    st[rho] = ep
    frontier = np.array([rho], dtype=np.int64)
    chunks = [frontier]
    while frontier.size:
        nb, idx = _gather_idx(ws.g, frontier)
        keep = ws.alive[nb] & ~ws.blocked[idx] & (st[nb] != ep)
        nb = nb[keep]
        # dedup without sorting: stamping is idempotent, so drop repeats by
        # letting the last write to the epoch-local scratch win
        pos = np.arange(nb.size, dtype=np.int64)
        ws.local[nb] = pos
        frontier = nb[ws.local[nb] == pos]
        st[frontier] = ep
        chunks.append(frontier)
    return np.sort(np.concatenate(chunks))


def _induced(ws: _Workspace, verts: np.ndarray) -> Graph:
    """Subgraph on the current-epoch vertices, relabeled 0..len(verts)-1 in
    ascending original order (ws.local holds the relabeling)."""
    ws.local[verts] = np.arange(verts.size, dtype=np.int64)
    nb, idx = _gather_idx(ws.g, verts)
    deg = ws.g.offsets[verts + 1] - ws.g.offsets[verts]
    src = np.repeat(np.arange(verts.size, dtype=np.int64), deg)
    keep = (ws.stamp[nb] == ws.epoch) & ~ws.blocked[idx]
    src = src[keep]
    dst = ws.local[nb[keep]]
    offsets = np.zeros(verts.size + 1, dtype=np.int64)
    np.add.at(offsets, src + 1, 1)
    np.cumsum(offsets, out=offsets)
    fwd = src < dst
    return Graph(verts.size, offsets, dst, src[fwd], dst[fwd])


def _sub_cycle(ws: _Workspace, cycle) -> CycleDecomposition:
    loc = [int(ws.local[v]) for v in cycle]
    return CycleDecomposition(tuple(loc), {v: i for i, v in enumerate(loc)},
                              {})


def _branch(sub: Graph, k: int, cyc: CycleDecomposition, rho: int,
            forced=None):
    """Solve one unicyclic component and pick the rewrite.

    Returns (partial set, u, spine rho->u, tail?) in the subgraph's ids:
    if a one-smaller set covering everything beyond N_k(rho) exists, keep
    it and aim the spine at the farthest uncovered vertex; otherwise keep
    the anchored minimum set minus its vertex u nearest rho, and request a
    forcing tail at u.
    """
    tables = bfs_forest(sub, cyc.cycle)
    if tables[0].size != sub.n:
        raise InternalInvariantError("component is not connected")
    _, dparent, dist_rho, _ = bfs_forest(sub, [rho])
    partial, far = _core_reduced(sub, k, cyc, rho, forced, tables, dist_rho)
    if partial is not None:
        u = rho if far is None else far
        tail = False
    else:
        dom = _core_anchored(sub, k, cyc, rho, forced, tables)
        cand = np.fromiter(sorted(dom), dtype=np.int64)
        u = int(cand[np.argmin(dist_rho[cand])])
        partial = dom - {u}
        tail = True
    spine = [u]
    while spine[-1] != rho:
        spine.append(int(dparent[spine[-1]]))
    spine.reverse()
    return partial, u, spine, tail


def solve_special_unicycle(g: Graph, rho: int, k: int, dfs: DfsState):
    """Consume the unicyclic component hanging below rho.

    Returns (partial, plan): the dominating vertices already decided, and
    the rewrite that replaces the component by the plan's spine (plus a
    forcing tail of k fresh vertices when the partial set is one short of
    the component's own optimum).
    """
    if k < 1:
        raise InvalidK("k must be >= 1")
    if not dfs.back_edge[rho]:
        raise NoBackEdge(f"vertex {rho} has no back edge")
    ws = _Workspace(g)
    p = int(dfs.parent[rho])
    if p >= 0:
        ia, ib = _entries(g, rho, p)
        ws.blocked[ia] = ws.blocked[ib] = True
    verts = _reach(ws, rho)
    sub = _induced(ws, verts)
    from .unicyclic import _check_unicyclic

    cyc_sub = _check_unicyclic(sub, k)
    partial, u, spine, tail = _branch(sub, k, cyc_sub, int(ws.local[rho]))
    partial_g = frozenset(int(verts[v]) for v in partial)
    spine_g = tuple(int(verts[v]) for v in spine)
    u_g = int(verts[u])
    removed = frozenset(verts.tolist()) - set(spine_g)
    if tail:
        synthetic = tuple(range(g.n, g.n + k))
        provenance = {s: u_g for s in synthetic}
    else:
        synthetic, provenance = (), {}
    return partial_g, RewritePlan(removed, spine_g, synthetic, provenance)


def solve_cactus(g: Graph, k: int) -> DominatingSet:
    """Minimum k-hop dominating set of a cactus in linear time."""
    if k < 1:
        raise InvalidK("k must be >= 1")
    if g.m == g.n - 1:
        return solve_tree(g, 0, k).dom
    if 2 * g.m > 3 * (g.n - 1):
        raise NotCactus("too many edges for a cactus")
    parent, depth, cycles = _bfs_cycles(g)
    if len(cycles) == 1:
        from .unicyclic import solve_unicyclic

        return solve_unicyclic(g, k)

    ws = _Workspace(g)
    for cycle in cycles:
        _set_cycle_block(ws, cycle, True)
    # deepest tops first; the shallowest cycle is left for the final solve
    order = sorted(range(len(cycles)),
                   key=lambda i: (-int(depth[cycles[i][0]]), cycles[i][0]))
    picked: list[np.ndarray] = []
    forced_us: set[int] = set()
    for ci in order[:-1]:
        cycle = cycles[ci]
        rho = cycle[0]
        _set_cycle_block(ws, cycle, False)
        p = int(parent[rho])
        pa = pb = -1
        if p >= 0:
            # the parent edge may already carry another cycle's cordon, so
            # remember its state rather than clearing it outright
            pa, pb = _entries(g, rho, p)
            was_a, was_b = bool(ws.blocked[pa]), bool(ws.blocked[pb])
            ws.blocked[pa] = ws.blocked[pb] = True
        verts = _reach(ws, rho)
        sub = _induced(ws, verts)
        if pa >= 0:
            ws.blocked[pa], ws.blocked[pb] = was_a, was_b
        cyc_sub = _sub_cycle(ws, cycle)
        partial, u, spine, tail = _branch(sub, k, cyc_sub,
                                          int(ws.local[rho]),
                                          ws.forced[verts])
        if partial:
            picked.append(verts[np.fromiter(partial, dtype=np.int64,
                                            count=len(partial))])
        ws.alive[verts] = False
        ws.forced[verts] = False
        spine_g = verts[np.asarray(spine, dtype=np.int64)]
        ws.alive[spine_g] = True
        if tail:
            u_g = int(verts[u])
            ws.forced[u_g] = True
            forced_us.add(u_g)

    last = cycles[order[-1]]
    _set_cycle_block(ws, last, False)
    verts = np.nonzero(ws.alive)[0]
    ws.epoch += 1
    ws.stamp[verts] = ws.epoch
    res = _induced(ws, verts)
    cyc_res = _sub_cycle(ws, last)
    tables = bfs_forest(res, cyc_res.cycle)
    if tables[0].size != res.n:
        raise InternalInvariantError("residue is not connected")
    final = _core_solve(res, k, cyc_res, forced=ws.forced[verts],
                        tables=tables)
    if final:
        picked.append(verts[np.fromiter(final, dtype=np.int64,
                                        count=len(final))])
    chosen = np.concatenate(picked) if picked else np.empty(0, dtype=np.int64)
    members = frozenset(chosen.tolist())
    if not forced_us <= members:
        raise InternalInvariantError("a forced vertex escaped the answer")
    if chosen.size and (chosen.min() < 0 or chosen.max() >= g.n):
        raise InternalInvariantError("synthetic vertex in the answer")
    return DominatingSet(members, k)
