"""Circular-arc piercing: greedy solver, anchored and reduced variants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from khds.errors import NoArcsError, ParseError, RhoNotInDomain
from khds.oracles import all_minimum_piercings, brute_force_piercing, quadratic_piercing
from khds.piercing import (
    compute_next,
    format_arcs,
    normalize_arcs,
    parse_arcs,
    pierce_arcs,
    pierce_arcs_anchored,
    pierce_arcs_reduced,
    pierce_segments,
)

from .conftest import rand_arcs


def _hits_all(inst, points):
    big = inst.n_positions
    for a in inst.arcs:
        assert any((p - a.s) % big <= (a.e - a.s) % big for p in points), (a, points)


def _circ_dist(a, b, big):
    d = (a - b) % big
    return min(d, big - d)


@given(st.integers(min_value=3, max_value=12),
       st.integers(min_value=1, max_value=6),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=150, deadline=None)
def test_matches_brute_force(npos, narcs, seed):
    rng = random.Random(seed)
    inst = normalize_arcs(npos, rand_arcs(rng, npos, narcs))
    got = pierce_arcs(inst)
    assert got.size == brute_force_piercing(inst).size
    _hits_all(inst, got.points)


@given(st.integers(min_value=3, max_value=200),
       st.integers(min_value=1, max_value=60),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=100, deadline=None)
def test_matches_quadratic_reference(npos, narcs, seed):
    rng = random.Random(seed)
    inst = normalize_arcs(npos, rand_arcs(rng, npos, narcs))
    got = pierce_arcs(inst)
    assert got.size == quadratic_piercing(inst).size
    _hits_all(inst, got.points)


@given(st.integers(min_value=3, max_value=200),
       st.integers(min_value=1, max_value=40),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=80, deadline=None)
def test_points_are_ending_points(npos, narcs, seed):
    rng = random.Random(seed)
    inst = normalize_arcs(npos, rand_arcs(rng, npos, narcs))
    ends = set(inst.ending_points().tolist())
    assert pierce_arcs(inst).points <= ends


def test_compute_next_matches_definition(rng):
    for _ in range(150):
        npos = rng.randint(3, 30)
        inst = normalize_arcs(npos, rand_arcs(rng, npos, rng.randint(1, 8)))
        if inst.n == 0 or inst.full_circle_ids:
            continue
        nxt = compute_next(inst)
        for p in inst.ending_points().tolist():
            # first arc whose start lies strictly after p, clockwise
            best = min(inst.arcs, key=lambda a: ((a.s - p - 1) % npos))
            assert nxt[p] == best.e


def test_full_circle_arcs_collapse_to_one_point():
    inst = normalize_arcs(10, [(0, 9), (3, 2)])
    assert inst.n == 0
    got = pierce_arcs(inst)
    assert got.size == 1
    assert len(inst.full_circle_ids) == 2


def test_contained_arcs_are_represented():
    inst = normalize_arcs(12, [(1, 8), (2, 4), (3, 3)])
    # (3,3) lies inside (2,4) lies inside (1,8): only the innermost survives
    assert inst.n == 1
    assert pierce_arcs(inst).points == {3}


def test_segments_greedy():
    got = pierce_segments([(0, 3), (2, 5), (7, 9)])
    assert got.size == 2
    for s, e in [(0, 3), (2, 5), (7, 9)]:
        assert any(s <= p <= e for p in got.points)


def test_segments_empty_input_empty_output():
    assert pierce_segments([]).size == 0


def test_segments_reject_reversed():
    with pytest.raises(ParseError):
        pierce_segments([(5, 2)])


def test_no_arcs_rejected():
    with pytest.raises(NoArcsError):
        normalize_arcs(10, [])


@given(st.integers(min_value=3, max_value=12),
       st.integers(min_value=1, max_value=6),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=100, deadline=None)
def test_anchored_distance_is_the_global_minimum(npos, narcs, seed):
    rng = random.Random(seed)
    inst = normalize_arcs(npos, rand_arcs(rng, npos, narcs))
    rho = rng.randrange(npos)
    got = pierce_arcs_anchored(inst, rho)
    assert got.size == pierce_arcs(inst).size
    mine = min(_circ_dist(p, rho, npos) for p in got.points)
    best = min(min(_circ_dist(p, rho, npos) for p in s)
               for s in all_minimum_piercings(inst))
    assert got.anchored_distance == mine == best


def test_anchored_rejects_bad_rho():
    inst = normalize_arcs(8, [(0, 3)])
    with pytest.raises(RhoNotInDomain):
        pierce_arcs_anchored(inst, 8)


def _excused(inst, rho, i):
    """Arcs containing rho with both endpoints at circular distance >= i."""
    big = inst.n_positions
    out = []
    for a in inst.arcs:
        holds = (rho - a.s) % big <= (a.e - a.s) % big
        out.append(holds and (a.e - rho) % big >= i and (rho - a.s) % big >= i)
    return out


@given(st.integers(min_value=3, max_value=12),
       st.integers(min_value=1, max_value=6),
       st.integers(min_value=2, max_value=4),
       st.integers(min_value=0, max_value=2 ** 30))
@settings(max_examples=100, deadline=None)
def test_reduced_finds_largest_feasible_threshold(npos, narcs, k, seed):
    rng = random.Random(seed)
    inst = normalize_arcs(npos, rand_arcs(rng, npos, narcs))
    rho = rng.randrange(npos)
    m = pierce_arcs(inst).size
    res = pierce_arcs_reduced(inst, rho, k, m)

    want = None
    for i in range(k - 1, 0, -1):
        keep = [(a.s, a.e) for a, x in zip(inst.arcs, _excused(inst, rho, i)) if not x]
        if not keep:
            opt = 0
        else:
            sub = normalize_arcs(npos, keep)
            opt = 1 if sub.n == 0 else brute_force_piercing(sub).size
        if opt <= m - 1:
            want = i
            break

    if res is None:
        assert want is None
    else:
        i_got, pset = res
        assert i_got == want
        assert len(pset.points) == m - 1
        big = inst.n_positions
        for a, x in zip(inst.arcs, _excused(inst, rho, i_got)):
            if not x:
                assert any((q - a.s) % big <= (a.e - a.s) % big for q in pset.points)


def test_parse_format_roundtrip(rng):
    inst = normalize_arcs(20, rand_arcs(rng, 20, 8))
    npos, pairs = parse_arcs(format_arcs(inst))
    again = normalize_arcs(npos, pairs)
    assert again.n == inst.n
    assert pierce_arcs(again).size == pierce_arcs(inst).size


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_arcs("10 1\n3 x\n")
