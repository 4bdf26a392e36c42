"""Sanity checks on the reference implementations themselves."""

import math
import random

import pytest

from khds.errors import TooLargeError
from khds.graph import verify_khds
from khds.oracles import (
    all_minimum_khds,
    all_minimum_piercings,
    brute_force_khds,
    brute_force_piercing,
    quadratic_piercing,
)
from khds.piercing import normalize_arcs

from .conftest import cycle_graph, path_graph, rand_arcs, rand_tree


def test_brute_khds_on_paths_and_cycles():
    for n in range(1, 13):
        for k in (1, 2, 3):
            want = math.ceil(n / (2 * k + 1))
            assert brute_force_khds(path_graph(n), k).size == want
            if n >= 3:
                assert brute_force_khds(cycle_graph(n), k).size == want


def test_brute_khds_output_covers(rng):
    for _ in range(30):
        g = rand_tree(rng, rng.randint(1, 12))
        k = rng.randint(1, 3)
        got = brute_force_khds(g, k)
        assert verify_khds(g, got.members, k).covered


def test_all_minimum_khds_contains_the_witness(rng):
    g = rand_tree(rng, 10)
    got = brute_force_khds(g, 2)
    sets = list(all_minimum_khds(g, 2))
    assert got.members in sets
    assert all(len(s) == got.size for s in sets)
    assert all(verify_khds(g, s, 2).covered for s in sets)


def test_size_limits_enforced():
    with pytest.raises(TooLargeError):
        brute_force_khds(path_graph(21), 1)
    big = normalize_arcs(100, [(i, i + 1) for i in range(0, 60, 4)])
    with pytest.raises(TooLargeError):
        brute_force_piercing(big)


def test_piercing_oracles_agree(rng):
    for _ in range(60):
        npos = rng.randint(3, 12)
        inst = normalize_arcs(npos, rand_arcs(rng, npos, rng.randint(1, 6)))
        b = brute_force_piercing(inst)
        q = quadratic_piercing(inst)
        assert b.size == q.size
        sets = list(all_minimum_piercings(inst))
        assert b.points in sets
        assert all(len(s) == b.size for s in sets)


def test_single_arc_needs_one_point():
    inst = normalize_arcs(10, [(2, 5)])
    got = brute_force_piercing(inst)
    assert got.size == 1
    p = next(iter(got.points))
    assert 2 <= p <= 5
