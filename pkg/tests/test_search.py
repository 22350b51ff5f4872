from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycleramsey.acceptance import ORACLE_CATALOG
from cycleramsey.cycleset import CycleSet, gamma, parse_cycle_set
from cycleramsey.formulas import generalized_ramsey
from cycleramsey.graph.canon import canonical_key
from cycleramsey.graph.core import BLUE, is_avoiding, is_bipartite
from cycleramsey.search import (
    ABOVE_CAP,
    SearchConfig,
    SearchUndecided,
    all_graphs,
    check_characterization,
    enumerate_avoiding,
    enumerate_critical,
    exists_avoiding,
    r_blue_oracle,
    ramsey_oracle,
)
from cycleramsey.witnesses import Colouring3, CompleteBipCritical, enumerate_family

from conftest import all_colourings_brute, cycle_sets


def test_exists_avoiding_examples():
    g = exists_avoiding("{3}", "{3}", 5)
    assert g is not None and canonical_key(g) == canonical_key(Colouring3().build())
    assert exists_avoiding("{3}", "{3}", 6) is None
    g = exists_avoiding(">=5", "{3}", 8)
    assert g is not None and canonical_key(g) == canonical_key(CompleteBipCritical(5).build())


def test_ramsey_oracle_examples():
    assert ramsey_oracle("{4}", "{4}", 8) == 6
    assert ramsey_oracle("{4}", "{3}", 8) == 7
    assert ramsey_oracle("{5,6}", "{5,6}", 9) == 7


def test_ramsey_oracle_reports_above_cap():
    assert ramsey_oracle("{3}", "{3}", 5) is ABOVE_CAP


def test_enumerate_avoiding_examples():
    assert len(enumerate_avoiding("{3}", "{3}", 5)) == 1
    result = enumerate_avoiding("{5}", "{3}", 8)
    family = {k for k, _ in enumerate_family("complete-bip-critical", 5)}
    assert result.exhaustive and set(result.keys) == family and len(result) == 2


def _brute_classes(a, b, n) -> set:
    return {canonical_key(g) for g in all_colourings_brute(n) if is_avoiding(g, a, b)}


def test_c4_against_c4_on_five_vertices_matches_brute_force():
    a = b = CycleSet.of(4)
    assert set(enumerate_avoiding(a, b, 5).keys) == _brute_classes(a, b, 5)


def test_enumerate_critical_examples():
    r = enumerate_critical("{3}", "{3}")
    assert r.n == 5 and len(r) == 1 and r.notes["confirmed"]
    r = enumerate_critical("{6}", "{4}")
    assert set(r.keys) == {k for k, _ in enumerate_family("g-families", 6)}


def test_c6_against_c5_critical_graphs():
    r = enumerate_critical("{6}", "{5}")
    assert r.n == 10 and r.notes["confirmed"]
    assert set(r.keys) == {k for k, _ in enumerate_family("complete-bip-critical", 6)}


def test_r_blue_oracle_examples():
    assert r_blue_oracle("{4}", "{6}", 10) == 6
    assert r_blue_oracle("{3}", "{4}", 10) == 5
    assert r_blue_oracle("{5}", "{3}", 10) == 9


def test_characterisation_examples():
    assert check_characterization("{5}", "{3}", [g for _, g in enumerate_family("complete-bip-critical", 5)]).match
    assert check_characterization("{6}", "{4}", [g for _, g in enumerate_family("g-families", 6)]).match
    assert check_characterization(">=5", "{3}", [g for _, g in enumerate_family("equal-parts", 5)]).match


def test_characterisation_detects_a_wrong_family():
    report = check_characterization("{5}", "{3}", [CompleteBipCritical(5).build()])
    assert not report.match and len(report.missing_from_family) == 1


@pytest.mark.parametrize("g1,g2,value", [c for c in ORACLE_CATALOG if c[2] <= 9])
def test_oracle_matches_formula_and_witnesses_exist(g1, g2, value):
    a, b = parse_cycle_set(g1), parse_cycle_set(g2)
    verdict = generalized_ramsey(a, b)
    assert verdict.exact and verdict.value == value
    assert ramsey_oracle(a, b, 10) == value
    witness = exists_avoiding(a, b, value - 1)
    assert witness is not None and is_avoiding(witness, a, b)
    assert exists_avoiding(a, b, value) is None


def test_pruned_search_matches_brute_force():
    rng = random.Random(20)
    pool = ["3", "4", "5", "3,4", "3,5", "4,5", ">=4", "odd", "even", ">=3", "<=4"]
    for _ in range(20):
        a, b = (parse_cycle_set(rng.choice(pool)) for _ in range(2))
        n = rng.randint(3, 5)
        expected = _brute_classes(a, b, n)
        assert set(enumerate_avoiding(a, b, n).keys) == expected, (a, b, n)
        assert set(enumerate_avoiding(a, b, n, SearchConfig(dedupe=False)).keys) == expected


def test_split_depth_and_threads_do_not_change_results():
    for a, b, n in (("{4}", "{4}", 5), ("{5}", "{3}", 8), ("{6}", "{4}", 6), ("odd", "{4}", 6)):
        base = enumerate_avoiding(a, b, n, SearchConfig(split_depth=0))
        for cfg in (SearchConfig(split_depth=2), SearchConfig(split_depth=2, threads=2), SearchConfig(dedupe=False, split_depth=2)):
            other = enumerate_avoiding(a, b, n, cfg)
            assert other.keys == base.keys
            assert [g.red for g in other.graphs] == [g.red for g in base.graphs]


def test_budget_exhaustion_is_undecided():
    with pytest.raises(SearchUndecided) as info:
        ramsey_oracle("{7}", "{7}", 14, SearchConfig(node_budget=100))
    assert info.value.explored_nodes > 100
    result = enumerate_avoiding("{6}", "{6}", 7, SearchConfig(node_budget=50))
    assert not result.exhaustive


def test_all_graphs_counts():
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


@settings(max_examples=25, deadline=None)
@given(cycle_sets(lo=5, hi=9), cycle_sets(lo=4, hi=9), st.integers(0, 2))
def test_avoiding_colourings_without_blue_triangles_are_blue_bipartite(a, rest, extra):
    b = CycleSet.of(3) | rest
    n = gamma(a) + extra
    for g in enumerate_avoiding(a, b, n).graphs:
        assert is_bipartite(g, BLUE) is not None


@settings(max_examples=25, deadline=None)
@given(cycle_sets(lo=3, hi=7), cycle_sets(lo=3, hi=7), st.integers(3, 6))
def test_search_results_are_avoiding_and_distinct(a, b, n):
    result = enumerate_avoiding(a, b, n)
    assert len(set(result.keys)) == len(result)
    for key, g in result.classes:
        assert is_avoiding(g, a, b) and canonical_key(g) == key
    witness = exists_avoiding(a, b, n)
    assert (witness is None) == (len(result) == 0)
