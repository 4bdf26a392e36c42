"""Minimum k-hop domination on trees in linear time.

The solver works bottom-up over a BFS ordering of the rooted tree.  Each
vertex carries two numbers: the height of the still-uncovered part of its
subtree (``need``, -1 once the subtree is fully covered) and the distance to
the nearest selected vertex inside its subtree (``cover``, INF when none can
help).  A vertex whose uncovered height reaches k must be selected; a vertex
whose uncovered part is already within reach of a selected descendant is
marked covered.  Selections therefore happen as high (close to the root) as
possible, which makes the root's final distance to the set minimal among all
minimum sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InvalidK, NotATree, ParseError, TooLargeError
from .graph import DominatingSet, Graph, bfs_forest

INF = 1 << 40

_INF32 = 1 << 30

_VEC_MIN = 2048


@dataclass(frozen=True)
class TreeSolveResult:
    """Solver output plus the algorithm's terminal state at the root.

    root_delta is the root's distance to the returned set as tracked by the
    bottom-up pass (INF when the root itself had to be appended at the end);
    root_height is the uncovered height remaining at the root (-1 when the
    subtree was covered without the late append).
    """

    dom: DominatingSet
    root_delta: int
    root_height: int
    root_added_late: bool


def solve_forest(order: np.ndarray, parent: np.ndarray, level_starts, n: int,
                 k: int, required=None, forced=None):
    """Bottom-up pass over a BFS forest given by (order, parent, levels).

    Returns (selected vertex list, need array, cover array); need and cover
    are only meaningful at visited vertices, and the values at the forest
    roots describe the residual state the caller must resolve.  ``required``
    restricts which vertices demand coverage (all of them by default);
    vertices outside it never raise the uncovered height.  ``forced``
    vertices are always selected, exactly as if a fully demanding path of
    length k hung below them.
    """
    depth_count = len(level_starts) - 1
    if order.size >= _VEC_MIN and depth_count <= order.size // 8:
        return _solve_forest_ranked(order, parent, level_starts, k, n,
                                    required, forced)
    if required is None:
        need_acc = np.zeros(n, dtype=np.int64)
    else:
        need_acc = np.where(required, 0, -1).astype(np.int64)
    cover_acc = np.full(n, INF, dtype=np.int64)
    return _solve_forest_py(order, parent, k, need_acc, cover_acc, forced)


def _solve_forest_py(order, parent, k, need, cover, forced):
    selected = []
    par = parent
    for v in order[::-1].tolist():
        nr = need[v]
        cv = cover[v]
        if forced is not None and forced[v]:
            selected.append(v)
            h, cv = -1, 0
        elif nr + cv <= k:
            h = -1
        elif nr == k:
            selected.append(v)
            h, cv = -1, 0
        else:
            h, cv = nr, INF
        need[v] = h
        cover[v] = cv
        p = par[v]
        if p >= 0:
            if h >= 0 and h + 1 > need[p]:
                need[p] = h + 1
            if cv + 1 < cover[p]:
                cover[p] = cv + 1
    selected.sort()
    return selected, need, cover


def _solve_forest_ranked(order, parent, level_starts, k, n_total,
                         required, forced):
    """Vectorized pass in BFS-rank space so level slices are contiguous.

    Works in 32-bit internally (with a smaller infinity sentinel) to halve
    the memory traffic; results are widened on the way out."""
    n = order.size
    if n_total < 2 ** 29:
        dt, inf = np.int32, np.int32(_INF32)
    else:
        dt, inf = np.int64, np.int64(INF)
    rank = np.empty(n_total, dtype=dt)
    rank[order] = np.arange(n, dtype=dt)
    pv = parent[order]
    par_r = np.where(pv >= 0, rank[np.maximum(pv, 0)], dt(-1))
    if required is None:
        need_r = np.zeros(n, dtype=dt)
    else:
        need_r = np.where(required[order], 0, -1).astype(dt)
    cover_r = np.full(n, inf, dtype=dt)
    forced_r = forced[order] if forced is not None else None
    selected = []
    for d in range(len(level_starts) - 2, -1, -1):
        a, b = level_starts[d], level_starts[d + 1]
        nr = need_r[a:b]
        cv = cover_r[a:b]
        covered = nr + cv <= k
        pick = ~covered & (nr == k)
        if forced_r is not None:
            fmask = forced_r[a:b]
            pick = (pick & ~fmask) | fmask
            covered &= ~fmask
        reset = ~covered & ~pick
        h = np.where(covered | pick, -1, nr)
        cv = np.where(pick, 0, np.where(reset, inf, cv))
        need_r[a:b] = h
        cover_r[a:b] = cv
        if pick.any():
            selected.append(np.nonzero(pick)[0] + a)
        if d > 0:
            p = par_r[a:b]
            up_n = np.where(h >= 0, h + 1, -1)
            up_c = np.minimum(cv + 1, inf)
            if p.size and bool((p[1:] >= p[:-1]).all()):
                # children arrive grouped by parent, so a reduceat per run
                # replaces the scattered ufunc.at updates
                head = np.ones(p.size, dtype=bool)
                head[1:] = p[1:] != p[:-1]
                runs = np.nonzero(head)[0]
                tgt = p[runs]
                need_r[tgt] = np.maximum(need_r[tgt],
                                         np.maximum.reduceat(up_n, runs))
                cover_r[tgt] = np.minimum(cover_r[tgt],
                                          np.minimum.reduceat(up_c, runs))
            else:
                np.maximum.at(need_r, p, up_n)
                np.minimum.at(cover_r, p, up_c)
    # cover entries at uncovered roots are sentinels, never consumed as
    # distances, so the narrow sentinel can stay
    if required is None:
        need = np.zeros(n_total, dtype=dt)
    else:
        need = np.where(required, 0, -1).astype(dt)
    cover = np.full(n_total, inf, dtype=dt)
    need[order] = need_r
    cover[order] = cover_r
    if selected:
        out = np.sort(order[np.concatenate(selected)]).tolist()
    else:
        out = []
    return out, need, cover


def solve_tree(g: Graph, root: int, k: int) -> TreeSolveResult:
    """Minimum k-hop dominating set of a tree, selections nearest the root."""
    if g.m != g.n - 1:
        raise NotATree("graph is not a tree")
    if k < 1:
        raise InvalidK("k must be >= 1")
    if not 0 <= root < g.n:
        raise ParseError("root out of range")
    order, parent, _, starts = bfs_forest(g, [root])
    selected, need, cover = solve_forest(order, parent, starts, g.n, k)
    h = int(need[root])
    late = h >= 0
    if late:
        selected = selected + [root]
    # only the root can be picked while being a leaf; its neighbor covers a
    # superset of what it covers, so move the pick inward to stay leaf-free
    if g.n >= 2 and root in selected and g.degree(root) == 1:
        selected = [v for v in selected if v != root]
        selected.append(int(g.neighbors_of(root)[0]))
    dom = DominatingSet(frozenset(selected), k)
    if late:
        return TreeSolveResult(dom, INF, h, True)
    return TreeSolveResult(dom, int(cover[root]), -1, False)


def partial_domination_number(g: Graph, root: int, k: int, targets) -> int:
    """Smallest set of vertices putting every target within k hops.

    Exhaustive test-support oracle over subsets in increasing size.
    """
    if g.n > 20:
        raise TooLargeError("oracle limited to n <= 20")
    if k < 1:
        raise InvalidK("k must be >= 1")
    targets = set(int(v) for v in targets)
    if not targets:
        return 0
    if any(v < 0 or v >= g.n for v in targets):
        raise ParseError("target out of range")
    balls = []
    for v in range(g.n):
        dist = _bfs_py(g, v)
        mask = 0
        for w in range(g.n):
            if 0 <= dist[w] <= k:
                mask |= 1 << w
        balls.append(mask)
    goal = 0
    for v in targets:
        goal |= 1 << v
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            acc = 0
            for v in combo:
                acc |= balls[v]
            if acc & goal == goal:
                return size
    raise AssertionError("unreachable: full vertex set always covers")


def _bfs_py(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    for v in queue:
        for w in g.neighbors_of(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(int(w))
    return dist
