"""Cactus solver, cycle-detecting DFS, and the single-cycle rewrite step."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khds.cactus import dfs_based, solve_cactus, solve_special_unicycle
from khds.errors import NoBackEdge, NotCactus, NotUnicyclic
from khds.graph import GraphClass, classify, graph_from_edges, verify_khds
from khds.oracles import brute_force_khds
from khds.tree import solve_tree
from khds.unicyclic import solve_unicyclic

from .conftest import cycle_graph, rand_cactus, rand_tree, rand_unicyclic


@given(st.integers(min_value=3, max_value=16),
       st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=150, deadline=None)
def test_matches_brute_force(n, k, n_cycles, seed):
    g = rand_cactus(random.Random(seed), n, n_cycles)
    if g is None:
        return
    got = solve_cactus(g, k)
    assert got.size == brute_force_khds(g, k).size
    assert verify_khds(g, got.members, k).covered
    assert all(0 <= v < n for v in got.members)


@given(st.integers(min_value=1, max_value=20),
       st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=80, deadline=None)
def test_tree_passthrough(n, k, seed):
    g = rand_tree(random.Random(seed), n)
    assert solve_cactus(g, k).size == solve_tree(g, 0, k).dom.size


@given(st.integers(min_value=3, max_value=24),
       st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=80, deadline=None)
def test_unicyclic_passthrough(n, k, seed):
    g = rand_unicyclic(random.Random(seed), n)
    assert solve_cactus(g, k).size == solve_unicyclic(g, k).size


def test_non_cactus_rejected():
    diamond = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    with pytest.raises(NotCactus):
        solve_cactus(diamond, 1)


def test_dfs_tree_has_no_back_edges(rng):
    g = rand_tree(rng, 10)
    dfs = dfs_based(g, 0)
    assert dfs.finish_list == ()
    assert not dfs.back_edge.any()


def test_dfs_single_cycle_marks_the_top():
    g = cycle_graph(5)
    dfs = dfs_based(g, 1)
    assert dfs.finish_list == (1,)
    assert dfs.back_edge[1]
    assert dfs.back_edge.sum() == 1


def test_dfs_nested_cycles_finish_inner_first():
    # a triangle topped at 0 and a square hanging below its vertex 2
    edges = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)]
    g = graph_from_edges(6, edges)
    dfs = dfs_based(g, 0)
    assert dfs.finish_list == (2, 0)
    assert set(dfs.finish_list) == {int(v) for v in range(6) if dfs.back_edge[v]}


def test_special_unicycle_plan_shape(rng):
    trials = 0
    while trials < 150:
        n = rng.randint(4, 14)
        g = rand_cactus(rng, n, rng.randint(1, 2))
        if g is None or classify(g) is GraphClass.TREE:
            continue
        dfs = dfs_based(g, 0)
        if not dfs.finish_list:
            continue
        rho = dfs.finish_list[0]
        k = rng.randint(1, 3)
        try:
            partial, plan = solve_special_unicycle(g, rho, k, dfs)
        except NotUnicyclic:
            # two cycles can share the same top vertex; the single-cycle
            # rewrite rightly refuses such a component
            continue
        trials += 1
        assert plan.spine[0] == rho
        assert not (plan.removed & set(plan.spine))
        assert all(v >= n for v in plan.synthetic)
        if plan.synthetic:
            assert len(plan.synthetic) == k
            u = plan.spine[-1]
            assert plan.provenance == {s: u for s in plan.synthetic}
        assert len(plan.spine) <= 2 * k + 1


def test_special_unicycle_needs_back_edge(rng):
    g = rand_unicyclic(random.Random(3), 10, cycle_len=4)
    dfs = dfs_based(g, 0)
    pendant = next(v for v in range(10) if not dfs.back_edge[v] and g.degree(v) == 1)
    with pytest.raises(NoBackEdge):
        solve_special_unicycle(g, pendant, 2, dfs)


def test_figure_eight_shared_vertex():
    # two triangles joined at vertex 0 with a pendant path
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (5, 6)]
    g = graph_from_edges(7, edges)
    for k in (1, 2, 3):
        got = solve_cactus(g, k)
        assert got.size == brute_force_khds(g, k).size
        assert verify_khds(g, got.members, k).covered


def test_chain_of_cycles():
    # four triangles strung together by bridges
    edges = []
    base = 0
    prev_anchor = None
    for _ in range(4):
        a, b, c = base, base + 1, base + 2
        edges += [(a, b), (b, c), (c, a)]
        if prev_anchor is not None:
            edges.append((prev_anchor, a))
        prev_anchor = c
        base += 3
    g = graph_from_edges(12, edges)
    for k in (1, 2, 3):
        got = solve_cactus(g, k)
        assert got.size == brute_force_khds(g, k).size
        assert verify_khds(g, got.members, k).covered
