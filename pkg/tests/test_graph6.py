from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from cycleramsey.acceptance import reference_graph6_decode
from cycleramsey.graph.core import BLUE, RED, build
from cycleramsey.graph.graph6 import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    read_graph6_lines,
    write_graph6_lines,
)

from conftest import colourings


@given(colourings(min_n=1, max_n=12))
def test_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g
    assert graph6_decode(graph6_encode(g, BLUE), BLUE) == g


def test_fixed_vectors():
    # small hand-checked encodings of the red subgraph
    assert graph6_encode(build(1, [])) == b"@"
    assert graph6_encode(build(2, [(0, 1)])) == b"A_"
    assert graph6_encode(build(3, [(0, 1), (1, 2), (0, 2)])) == b"Bw"
    assert graph6_encode(build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])) == b"Dhc"


def test_agrees_with_networkx():
    rng = random.Random(6)
    for n in list(range(1, 12)) + [62, 63, 64]:
        p = rng.random()
        g = build(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])
        ours = graph6_encode(g)
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(h, nodes=range(n), header=False).strip()
        assert ours == ref
        back = nx.from_graph6_bytes(ours)
        assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges())


def test_agrees_with_reference_decoder():
    rng = random.Random(8)
    for i in range(50):
        n = 1 + i % 10 if i < 45 else 60 + i % 5
        g = build(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4])
        assert reference_graph6_decode(graph6_encode(g).decode()) == (n, set(g.edges()))


def test_blue_convention_stores_the_complement():
    g = build(4, [(0, 1)])
    assert graph6_decode(graph6_encode(g, BLUE)) == g.swap_colours()
    assert graph6_encode(g, BLUE) == graph6_encode(g.swap_colours(), RED)


@pytest.mark.parametrize("data", [b"", b"A", b"B\x7f", b"Bww", b"~??"])
def test_malformed_input(data):
    with pytest.raises(Graph6Error):
        graph6_decode(data)


def test_line_helpers():
    graphs = [build(3, [(0, 1)]), build(5, []), build(2, [(0, 1)])]
    data = write_graph6_lines(graphs)
    assert list(read_graph6_lines(data)) == graphs
    assert list(read_graph6_lines(b">>graph6<<" + data)) == graphs
