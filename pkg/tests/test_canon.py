from __future__ import annotations

import itertools
import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cycleramsey.cycleset import CycleSet, parse_cycle_set
from cycleramsey.graph.canon import automorphism_group_order, canonical_form, canonical_key, canonical_labelling
from cycleramsey.graph.core import build, is_avoiding

from conftest import all_colourings_brute, brute_isomorphic, colourings


def _random_graph(rng: random.Random, n: int):
    p = rng.random()
    return build(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def test_key_is_invariant_under_random_relabelling():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 9)
        g = _random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(g.relabel(perm)) == canonical_key(g)


def _classes_by_permutation(n: int) -> list:
    reps = []
    for g in all_colourings_brute(n):
        if not any(brute_isomorphic(g, h) for h in reps):
            reps.append(g)
    return reps


def test_class_counts_match_permutation_oracle():
    for n, expected in ((1, 1), (2, 2), (3, 4), (4, 11)):
        reps = _classes_by_permutation(n)
        assert len(reps) == expected
        keys = {canonical_key(g) for g in all_colourings_brute(n)}
        assert len(keys) == expected


def test_equal_keys_iff_isomorphic_on_five_vertices():
    rng = random.Random(5)
    graphs = [_random_graph(rng, 5) for _ in range(60)]
    for g, h in itertools.combinations(graphs, 2):
        assert (canonical_key(g) == canonical_key(h)) == brute_isomorphic(g, h)


def test_orbit_sizes_cover_all_labelled_colourings():
    for n in (4, 5):
        reps = {}
        for g in all_colourings_brute(n):
            key, rep = canonical_form(g)
            reps.setdefault(key, rep)
        total = sum(math.factorial(n) // automorphism_group_order(g) for g in reps.values())
        assert total == 2 ** (n * (n - 1) // 2)


def test_generators_are_automorphisms():
    rng = random.Random(3)
    for _ in range(200):
        g = _random_graph(rng, rng.randint(2, 9))
        for gen in canonical_labelling(g).generators:
            assert g.relabel(gen) == g


def test_known_group_orders():
    k5 = build(5, itertools.combinations(range(5), 2))
    assert automorphism_group_order(k5) == 120
    c5 = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert automorphism_group_order(c5) == 10


def test_canonical_form_is_a_fixed_point():
    rng = random.Random(4)
    for _ in range(200):
        g = _random_graph(rng, rng.randint(1, 8))
        key, rep = canonical_form(g)
        assert canonical_form(rep) == (key, rep)


SETS = [CycleSet.of(3), CycleSet.of(4), CycleSet.of(3, 5), parse_cycle_set("odd"), parse_cycle_set(">=5")]


@settings(max_examples=100, deadline=None)
@given(colourings(min_n=2, max_n=7), st.randoms(use_true_random=False), st.sampled_from(SETS), st.sampled_from(SETS))
def test_equal_keys_agree_on_avoidance(g, rng, a, b):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_key(h) == canonical_key(g)
    assert is_avoiding(h, a, b) == is_avoiding(g, a, b)
