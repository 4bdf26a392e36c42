"""Shared instance builders for the test suite."""

import random

import pytest

from khds.graph import Graph, graph_from_edges


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def rand_tree(rng: random.Random, n: int) -> Graph:
    return graph_from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def rand_unicyclic(rng: random.Random, n: int, cycle_len: int = 0) -> Graph:
    cl = cycle_len or rng.randint(3, max(3, min(7, n)))
    cl = min(cl, n)
    edges = [(i, (i + 1) % cl) for i in range(cl)]
    edges += [(rng.randrange(i), i) for i in range(cl, n)]
    return graph_from_edges(n, edges)


def rand_cactus(rng: random.Random, n: int, n_cycles: int):
    """Grow a cactus by attaching pendant vertices or whole cycles at
    random existing vertices.  Returns None when the cycle budget does
    not fit in n vertices."""
    edges = []
    nv = 1
    cycles_left = n_cycles
    while nv < n:
        attach = rng.randrange(nv)
        room = n - nv
        if cycles_left and room >= 2:
            clen = rng.randint(3, min(7, room + 1))
            ids = [attach] + [nv + i for i in range(clen - 1)]
            for i in range(clen):
                edges.append((ids[i], ids[(i + 1) % clen]))
            nv += clen - 1
            cycles_left -= 1
        else:
            edges.append((attach, nv))
            nv += 1
    if cycles_left:
        return None
    return graph_from_edges(n, edges)


def rand_arcs(rng: random.Random, n_positions: int, n_arcs: int):
    out = []
    for _ in range(n_arcs):
        s = rng.randrange(n_positions)
        out.append((s, (s + rng.randrange(n_positions)) % n_positions))
    return out


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
