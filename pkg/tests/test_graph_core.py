"""Graph container, parsing, traversal, classification, verification."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khds.errors import DisconnectedGraph, ParseError
from khds.graph import (
    GraphClass,
    classify,
    extract_cycle,
    format_graph,
    graph_from_edges,
    multi_source_distances,
    parse_graph,
    verify_khds,
)

from .conftest import cycle_graph, path_graph, rand_cactus, rand_tree, rand_unicyclic


def test_single_vertex():
    g = graph_from_edges(1, [])
    assert g.n == 1
    assert classify(g) is GraphClass.TREE
    assert verify_khds(g, {0}, 1).covered


def test_parse_format_roundtrip(rng):
    g = rand_cactus(rng, 14, 2) or rand_tree(rng, 14)
    text = format_graph(g)
    h = parse_graph(text)
    assert h.n == g.n
    assert sorted(h.edges()) == sorted(g.edges())
    assert format_graph(h) == text


def test_parse_rejects_bad_header():
    with pytest.raises(ParseError):
        parse_graph("3\n0 1\n")


def test_parse_rejects_out_of_range_vertex():
    with pytest.raises(ParseError):
        parse_graph("2 1\n0 5\n")


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraph):
        graph_from_edges(4, [(0, 1), (2, 3)])


def test_classify_families(rng):
    assert classify(rand_tree(rng, 9)) is GraphClass.TREE
    assert classify(rand_unicyclic(rng, 9)) is GraphClass.UNICYCLIC
    g = rand_cactus(rng, 12, 2)
    if g is not None:
        assert classify(g) in (GraphClass.CACTUS, GraphClass.UNICYCLIC)
    diamond = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert classify(diamond) is GraphClass.OTHER


def test_multi_source_distances_matches_single_bfs(rng):
    g = rand_unicyclic(rng, 20)
    src = [3, 11]
    dist = multi_source_distances(g, src)
    per = np.minimum(multi_source_distances(g, [3]), multi_source_distances(g, [11]))
    assert np.array_equal(dist, per)
    assert all(dist[s] == 0 for s in src)


@given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=60, deadline=None)
def test_extract_cycle_finds_the_ring(cl, seed):
    rng = random.Random(seed)
    n = cl + rng.randrange(8)
    g = rand_unicyclic(rng, n, cycle_len=cl)
    cyc = extract_cycle(g)
    assert sorted(cyc.cycle) == list(range(cl))
    # consecutive members are adjacent in the graph
    ring = cyc.cycle
    for i, v in enumerate(ring):
        assert ring[(i + 1) % cl] in g.neighbors_of(v).tolist()
    assert cyc.position == {v: i for i, v in enumerate(ring)}
    # every non-cycle vertex hangs off exactly one cycle vertex, and each
    # pendant tree is keyed by (and contains) its cycle root
    seen = set()
    for r, pend in cyc.pendant.items():
        assert r in pend
        hang = pend - {r}
        assert hang and not (hang & seen)
        seen |= hang
    assert seen == set(range(n)) - set(ring)


def test_extract_cycle_without_pendants():
    g = rand_unicyclic(random.Random(5), 30, cycle_len=6)
    base = extract_cycle(g)
    lean = extract_cycle(g, with_pendants=False)
    assert lean.cycle == base.cycle
    assert lean.pendant == {}


def test_verify_reports_witness():
    g = path_graph(7)
    res = verify_khds(g, {0}, 2)
    assert not res.covered
    assert res.witness is not None
    assert res.max_dist > 2
    full = verify_khds(g, {3}, 3)
    assert full.covered and full.witness is None and full.max_dist == 3


@given(st.integers(min_value=1, max_value=25), st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=60, deadline=None)
def test_verify_accepts_whole_vertex_set(n, seed):
    g = rand_tree(random.Random(seed), n)
    assert verify_khds(g, range(n), 1).covered


def test_cycle_graph_has_no_pendants():
    cyc = extract_cycle(cycle_graph(5))
    assert len(cyc.cycle) == 5
    assert cyc.pendant == {}
