from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleramsey.cycleset import CycleSet, parse_cycle_set
from cycleramsey.graph.core import (
    BLUE,
    RED,
    RedBlueGraph,
    build,
    clique_exists,
    cycle_exists,
    cycle_from_set,
    cycle_spectrum,
    from_blue,
    is_avoiding,
    is_bipartite,
    is_pancyclic,
)

from conftest import adjacency, brute_cycle, colourings

C5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def complete(n: int) -> RedBlueGraph:
    return build(n, itertools.combinations(range(n), 2))


def blue_k(p: int, q: int) -> RedBlueGraph:
    return from_blue(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def test_build_examples():
    k3 = build(3, [(0, 1), (1, 2), (0, 2)])
    assert all(k3.colour(u, v) is RED for u, v in itertools.combinations(range(3), 2))
    k4 = build(4, [])
    assert all(k4.colour(u, v) is BLUE for u, v in itertools.combinations(range(4), 2))
    assert sorted(C5.degrees(RED)) == [2] * 5 and sorted(C5.degrees(BLUE)) == [2] * 5


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build(3, [(0, 0)])
    with pytest.raises(ValueError):
        build(3, [(0, 3)])
    with pytest.raises(ValueError):
        RedBlueGraph(2, (2, 0))
    with pytest.raises(ValueError):
        RedBlueGraph(65, (0,) * 65)


def test_cycle_length_outside_range_is_rejected():
    with pytest.raises(ValueError):
        cycle_exists(C5, RED, 6)
    with pytest.raises(ValueError):
        cycle_exists(C5, RED, 2)


def test_cycle_exists_examples():
    assert cycle_exists(C5, RED, 5)
    assert not cycle_exists(C5, RED, 3)
    assert all(cycle_exists(complete(6), RED, k) for k in range(3, 7))
    assert not cycle_exists(blue_k(4, 4), BLUE, 5)


def test_cycle_from_set_examples():
    assert cycle_from_set(C5, BLUE, CycleSet.of(3)) is None
    assert cycle_from_set(complete(5), RED, parse_cycle_set(">=4")) == 4
    assert cycle_from_set(blue_k(4, 4), BLUE, parse_cycle_set("odd")) is None


def test_is_avoiding_examples():
    assert is_avoiding(C5, CycleSet.of(3), CycleSet.of(3))
    assert is_avoiding(blue_k(4, 4), parse_cycle_set(">=5"), parse_cycle_set("odd"))
    assert not is_avoiding(complete(6), CycleSet.of(3), CycleSet.of(3))


def test_is_bipartite_examples():
    parts = is_bipartite(blue_k(4, 4), BLUE)
    assert parts is not None and sorted(map(len, parts)) == [4, 4]
    assert is_bipartite(C5, BLUE) is None
    assert is_bipartite(build(3, [(0, 1), (1, 2)]), BLUE) is not None


def test_is_pancyclic_examples():
    assert is_pancyclic(complete(5), RED, range(5))
    assert is_pancyclic(complete(6), RED, range(6))
    k33 = blue_k(3, 3).swap_colours()
    assert not is_pancyclic(k33, RED, range(6))


def test_clique_exists_examples():
    assert clique_exists(complete(5), RED, 5)
    assert not clique_exists(C5, RED, 3)
    assert not clique_exists(blue_k(4, 4), BLUE, 3)


@settings(max_examples=300, deadline=None)
@given(colourings(min_n=3, max_n=6), st.data(), st.booleans())
def test_cycle_exists_matches_permutation_search(g, data, red):
    k = data.draw(st.integers(3, g.n))
    colour = RED if red else BLUE
    assert cycle_exists(g, colour, k) == brute_cycle(adjacency(g, red), k)


@settings(max_examples=200, deadline=None)
@given(colourings(max_n=7), st.booleans())
def test_spectrum_matches_cycle_exists(g, red):
    colour = RED if red else BLUE
    spectrum = cycle_spectrum(g, colour)
    for k in range(3, g.n + 1):
        assert bool(spectrum >> k & 1) == cycle_exists(g, colour, k)


def test_cycle_exists_exhaustive_on_five_vertices():
    pairs = list(itertools.combinations(range(5), 2))
    for bits in range(1 << len(pairs)):
        g = build(5, [e for i, e in enumerate(pairs) if bits >> i & 1])
        adj = adjacency(g)
        for k in (3, 4, 5):
            assert cycle_exists(g, RED, k) == brute_cycle(adj, k)


@settings(max_examples=100, deadline=None)
@given(colourings(min_n=2, max_n=6), st.data())
def test_non_avoiding_is_inherited_by_supergraphs(g, data):
    a = data.draw(st.sampled_from([CycleSet.of(3), CycleSet.of(4), parse_cycle_set("odd"), CycleSet.of(3, 5)]))
    b = data.draw(st.sampled_from([CycleSet.of(3), CycleSet.of(4), parse_cycle_set(">=4")]))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    extra = rng.randint(1, 2)
    n = g.n + extra
    red = list(g.edges()) + [(u, v) for v in range(g.n, n) for u in range(v) if rng.random() < 0.5]
    big = build(n, red)
    assert big.induced(list(range(g.n))) == g
    if not is_avoiding(g, a, b):
        assert not is_avoiding(big, a, b)


def test_monochromatic_c7_forces_c6_and_c6_forces_c4_on_seven_vertices():
    rng = random.Random(7)
    for _ in range(3000):
        g = build(7, [e for e in itertools.combinations(range(7), 2) if rng.random() < 0.5])
        for colour in (RED, BLUE):
            if cycle_exists(g, colour, 7):
                assert cycle_exists(g, RED, 6) or cycle_exists(g, BLUE, 6)
            if cycle_exists(g, colour, 6):
                assert cycle_exists(g, RED, 4) or cycle_exists(g, BLUE, 4)


def test_swap_and_relabel():
    g = build(4, [(0, 1), (1, 2)])
    assert g.swap_colours().swap_colours() == g
    assert set(g.swap_colours().edges()) == set(g.edges(BLUE))
    h = g.relabel([3, 2, 1, 0])
    assert set(h.edges()) == {(2, 3), (1, 2)}
