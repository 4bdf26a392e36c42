"""Graph container, parsing, classification, and k-hop coverage checking.

Graphs are simple, undirected, connected, with dense 0-based vertex ids.
Adjacency is stored in CSR form (two numpy arrays) so the solvers can run
level-synchronous passes over multi-million-vertex inputs; small graphs take
plain-Python fallback paths to avoid numpy call overhead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    DisconnectedGraph,
    EmptySetError,
    InvalidK,
    NotCactus,
    ParseError,
)

_SMALL_N = 4096


class GraphClass(Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    CACTUS = "cactus"
    OTHER = "other"


class Graph:
    """Immutable simple connected graph over vertices 0..n-1."""

    __slots__ = ("n", "m", "offsets", "neighbors", "edges_u", "edges_v")

    def __init__(self, n: int, offsets, neighbors, edges_u, edges_v):
        self.n = n
        self.m = len(edges_u)
        self.offsets = offsets
        self.neighbors = neighbors
        self.edges_u = edges_u
        self.edges_v = edges_v

    def neighbors_of(self, v: int) -> np.ndarray:
        """Neighbors of v in ascending id order."""
        return self.neighbors[self.offsets[v]: self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def edges(self) -> Iterable[tuple[int, int]]:
        return zip(self.edges_u.tolist(), self.edges_v.tolist())

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]] | np.ndarray,
                     check_connected: bool = True) -> Graph:
    """Build a Graph from an undirected edge list, validating simplicity."""
    if n <= 0:
        raise ParseError("graph must have at least one vertex")
    eu, ev = _edge_arrays(edges)
    if eu.size:
        if eu.min() < 0 or ev.min() < 0 or max(eu.max(), ev.max()) >= n:
            raise ParseError("edge endpoint out of range")
        if np.any(eu == ev):
            raise ParseError("self-loops are not allowed")
    lo = np.minimum(eu, ev)
    hi = np.maximum(eu, ev)
    key = lo.astype(np.int64) * n + hi
    if key.size != np.unique(key).size:
        raise ParseError("duplicate edge")
    g = _build_csr(n, lo, hi)
    if check_connected and not _is_connected(g):
        raise DisconnectedGraph("graph is not connected")
    return g


def _edge_arrays(edges) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False).reshape(-1, 2)
        return arr[:, 0].copy(), arr[:, 1].copy()
    pairs = list(edges)
    eu = np.fromiter((e[0] for e in pairs), dtype=np.int64, count=len(pairs))
    ev = np.fromiter((e[1] for e in pairs), dtype=np.int64, count=len(pairs))
    return eu, ev


def _build_csr(n: int, lo: np.ndarray, hi: np.ndarray) -> Graph:
    src = np.concatenate([lo, hi])
    dst = np.concatenate([hi, lo])
    order = np.lexsort((dst, src))
    src = src[order]
    dst = dst[order]
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.add.at(offsets, src + 1, 1)
    np.cumsum(offsets, out=offsets)
    if n < 2 ** 31 and dst.size < 2 ** 31:
        # 32-bit adjacency halves the memory traffic of the BFS gathers
        offsets = offsets.astype(np.int32)
        dst = dst.astype(np.int32)
    return Graph(n, offsets, dst, lo, hi)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v".

    Lines starting with '#' (and inline '#' comments) are ignored.  Errors
    carry the offending 1-based line number.
    """
    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int]] = []
    header_line = 0
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
            header_line = lineno
            continue
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n m' header")
    n, m = header
    if n <= 0 or m < 0:
        raise ParseError("header must satisfy n >= 1, m >= 0", header_line)
    if len(edges) != m:
        raise ParseError(f"header announced {m} edges, found {len(edges)}")
    try:
        return graph_from_edges(n, edges)
    except ParseError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# BFS machinery


def _gather_csr(offsets: np.ndarray, neighbors: np.ndarray, frontier: np.ndarray):
    """All neighbors of frontier vertices, with the source of each edge."""
    starts = offsets[frontier]
    counts = offsets[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    cum = np.cumsum(counts)
    base = np.repeat(starts - (cum - counts), counts)
    idx = np.arange(total, dtype=base.dtype) + base
    return neighbors[idx], np.repeat(frontier, counts)


def bfs_forest(g: Graph, roots: Sequence[int]):
    """BFS forest from the given roots.

    Returns (order, parent, depth, level_starts) where order lists visited
    vertices level by level, parent is -1 at roots and depth is -1 for
    unreachable vertices.  Edges between two roots are never tree edges, so
    running this with all cycle vertices as roots yields exactly the pendant
    trees of a unicyclic graph.
    """
    dt = np.int32 if g.n < 2 ** 31 else np.int64
    parent = np.full(g.n, -1, dtype=dt)
    depth = np.full(g.n, -1, dtype=dt)
    roots = np.asarray(sorted(roots), dtype=dt)
    depth[roots] = 0
    if g.n < _SMALL_N:
        order = list(roots)
        starts = [0, len(order)]
        head = 0
        off, nbr = g.offsets, g.neighbors
        level_end = len(order)
        while head < len(order):
            v = order[head]
            head += 1
            for w in nbr[off[v]: off[v + 1]]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    order.append(int(w))
            if head == level_end and len(order) > level_end:
                level_end = len(order)
                starts.append(level_end)
        return np.asarray(order, dtype=dt), parent, depth, starts

    parts = [roots]
    starts = [0, len(roots)]
    frontier = roots
    claim = np.empty(g.n, dtype=dt)
    d = 0
    while frontier.size:
        nbrs, src = _gather_csr(g.offsets, g.neighbors, frontier)
        mask = depth[nbrs] < 0
        nb, sr = nbrs[mask], src[mask]
        if nb.size == 0:
            break
        # dedup without sorting: the last write to claim wins the vertex
        idx = np.arange(nb.size, dtype=dt)
        claim[nb] = idx
        keep = claim[nb] == idx
        nb, sr = nb[keep], sr[keep]
        d += 1
        depth[nb] = d
        parent[nb] = sr
        parts.append(nb)
        starts.append(starts[-1] + nb.size)
        frontier = nb
    return np.concatenate(parts), parent, depth, starts


def multi_source_distances(g: Graph, sources: Sequence[int]) -> np.ndarray:
    """Hop distance from every vertex to the nearest source."""
    _, _, depth, _ = bfs_forest(g, sources)
    return depth


def _is_connected(g: Graph) -> bool:
    return int((multi_source_distances(g, [0]) >= 0).sum()) == g.n


# ---------------------------------------------------------------------------
# Classification


def _bfs_cycles(g: Graph):
    """BFS tree plus the vertex sequence of every cycle of a cactus.

    Returns (parent, depth, cycles) where each cycle is a list of vertices
    starting at its top (the minimum-depth cycle vertex) and walking once
    around.  Raises NotCactus when two cycles share an edge.
    """
    _, parent, depth, _ = bfs_forest(g, [0])
    lo, hi = g.edges_u, g.edges_v
    nontree = (parent[lo] != hi) & (parent[hi] != lo)
    marked = np.zeros(g.n, dtype=bool)  # vertex's parent edge lies on a cycle
    cycles = []
    for u, v in zip(lo[nontree].tolist(), hi[nontree].tolist()):
        left, right = [], []
        a, b = u, v
        while depth[a] > depth[b]:
            left.append(a)
            a = int(parent[a])
        while depth[b] > depth[a]:
            right.append(b)
            b = int(parent[b])
        while a != b:
            left.append(a)
            right.append(b)
            a = int(parent[a])
            b = int(parent[b])
        top = a
        for x in left + right:
            if marked[x]:
                raise NotCactus("two cycles share an edge")
            marked[x] = True
        cycles.append([top] + left[::-1] + right)
    return parent, depth, cycles


def classify(g: Graph) -> GraphClass:
    """Most specific class among tree / unicyclic / cactus / other."""
    if g.m == g.n - 1:
        return GraphClass.TREE
    if g.m == g.n:
        return GraphClass.UNICYCLIC
    # a cactus has at most floor(3(n-1)/2) edges
    if 2 * g.m > 3 * (g.n - 1):
        return GraphClass.OTHER
    try:
        _bfs_cycles(g)
    except NotCactus:
        return GraphClass.OTHER
    return GraphClass.CACTUS


# ---------------------------------------------------------------------------
# Cycle extraction


@dataclass(frozen=True)
class CycleDecomposition:
    """The unique cycle of a unicyclic graph plus its pendant trees.

    ``cycle`` lists the cycle vertices in traversal order starting at the
    lowest-id cycle vertex, stepping first toward its lower-id neighbor on
    the cycle.  ``position`` maps cycle vertex -> index in ``cycle``.
    ``pendant`` maps a cycle vertex to the vertex set of the tree hanging off
    it (root included); roots of trivial trees are omitted.
    """

    cycle: tuple[int, ...]
    position: dict[int, int]
    pendant: dict[int, frozenset[int]]


def _peel_leaves(g: Graph) -> np.ndarray:
    """Mask of the cycle vertices of a unicyclic graph (level-synchronous
    degree-1 peeling)."""
    deg = (g.offsets[1:] - g.offsets[:-1]).copy()
    alive = np.ones(g.n, dtype=bool)
    frontier = np.nonzero(deg == 1)[0]
    while frontier.size:
        alive[frontier] = False
        nb, _ = _gather_csr(g.offsets, g.neighbors, frontier)
        nb = nb[alive[nb]]
        np.add.at(deg, nb, -1)
        cand = np.unique(nb)
        frontier = cand[(deg[cand] == 1) & alive[cand]]
    return alive


def extract_cycle(g: Graph, with_pendants: bool = True) -> CycleDecomposition:
    from .errors import NotUnicyclic

    if g.m != g.n:
        raise NotUnicyclic("graph is not unicyclic")
    if g.n < _SMALL_N:
        deg = (g.offsets[1:] - g.offsets[:-1]).copy()
        # peel degree-1 vertices; what survives is the cycle
        queue = deque(np.nonzero(deg == 1)[0].tolist())
        removed = np.zeros(g.n, dtype=bool)
        while queue:
            v = queue.popleft()
            removed[v] = True
            for w in g.neighbors_of(v):
                deg[w] -= 1
                if deg[w] == 1 and not removed[w]:
                    queue.append(int(w))
        cyc_mask = ~removed
    else:
        cyc_mask = _peel_leaves(g)
    start = int(np.nonzero(cyc_mask)[0][0])
    cyc_nbrs = [int(w) for w in g.neighbors_of(start) if cyc_mask[w]]
    nxt = min(cyc_nbrs)
    cycle = [start, nxt]
    prev, cur = start, nxt
    neighbors, offsets = g.neighbors, g.offsets
    while True:
        step = [int(w) for w in neighbors[offsets[cur]: offsets[cur + 1]]
                if cyc_mask[w] and w != prev]
        if not step:  # 2-cycle impossible in a simple graph; len-3 guard
            break
        prev, cur = cur, step[0]
        if cur == start:
            break
        cycle.append(cur)
    position = {v: i for i, v in enumerate(cycle)}
    pendant: dict[int, frozenset[int]] = {}
    if with_pendants:
        comp = np.full(g.n, -1, dtype=np.int64)
        comp[cycle] = cycle
        order, parent, _, _ = bfs_forest(g, cycle)
        for v in order.tolist():
            if comp[v] < 0:
                comp[v] = comp[parent[v]]
        noncyc = np.nonzero(~cyc_mask)[0]
        for r in cycle:
            members = noncyc[comp[noncyc] == r]
            if members.size:
                pendant[r] = frozenset(members.tolist()) | {r}
    return CycleDecomposition(tuple(cycle), position, pendant)


# ---------------------------------------------------------------------------
# Solutions and verification


@dataclass(frozen=True)
class DominatingSet:
    """A k-hop dominating set: every vertex is within k hops of a member."""

    members: frozenset[int]
    k: int

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)


@dataclass(frozen=True)
class VerifyResult:
    covered: bool
    witness: Optional[int]
    max_dist: int


def verify_khds(g: Graph, members: Iterable[int], k: int) -> VerifyResult:
    """Check coverage by multi-source BFS; witness is a farthest vertex."""
    if k < 1:
        raise InvalidK("k must be >= 1")
    members = sorted(set(int(v) for v in members))
    if not members:
        raise EmptySetError("dominating set must be non-empty")
    if members[0] < 0 or members[-1] >= g.n:
        raise ParseError("set member out of range")
    dist = multi_source_distances(g, members)
    max_dist = int(dist.max())
    if max_dist <= k:
        return VerifyResult(True, None, max_dist)
    witness = int(np.nonzero(dist == max_dist)[0][0])
    return VerifyResult(False, witness, max_dist)
