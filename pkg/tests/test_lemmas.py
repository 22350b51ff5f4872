from __future__ import annotations

import itertools

import pytest

from cycleramsey.graph.core import BLUE, RED, build, cycle_exists, from_blue
from cycleramsey.search import lemmas
from cycleramsey.search.lemmas import LEMMAS, Lemma, UnknownLemma, lemma, red_cycles, verify_lemma, verify_lemmas


@pytest.mark.parametrize("lemma_id", sorted(LEMMAS))
def test_each_lemma_holds_exhaustively_on_six_vertices(lemma_id):
    report = verify_lemma(lemma_id, 6)
    assert report.holds, report.counterexamples
    assert report.colourings == 2**15
    assert report.classes == 156


def test_hypotheses_actually_fire():
    reports = verify_lemmas(sorted(LEMMAS), 7)
    fired = {r.lemma for r in reports if r.hypothesis_hits}
    # these need more vertices than 7 before their hypothesis can apply
    assert set(LEMMAS) - fired <= {"no-blue-c5-unit-drop", "odd-blue-red-interval", "odd-to-even-drop"} | {
        lid for lid, lem in LEMMAS.items() if lem.min_n > 7
    }


def test_odd_to_even_drop_on_seven_vertices():
    report = verify_lemma("odd-to-even-drop", 7)
    assert report.holds and report.colourings == 2**21 and report.hypothesis_hits > 0


def test_blue_cycle_transfer_on_seven_vertices():
    report = verify_lemma("blue-cycle-transfer", 7)
    assert report.holds and report.colourings == 2**21


def test_sampled_mode_is_reproducible():
    a = verify_lemma("odd-blue-red-interval", 8, mode="sampled", samples=3000, seed=11)
    b = verify_lemma("odd-blue-red-interval", 8, mode="sampled", samples=3000, seed=11)
    assert a.as_json() == b.as_json()
    assert a.holds and a.colourings == 3000 and a.seed == 11


def test_a_false_statement_is_caught(monkeypatch):
    bogus = Lemma("bogus", "every colouring has a red triangle", lambda v: v.has(RED, 3))
    monkeypatch.setitem(LEMMAS, "bogus", bogus)
    report = verify_lemma("bogus", 4)
    assert not report.holds and report.counterexamples


def test_unit_drop_needs_the_cycle_to_miss_a_vertex():
    # red K_{4,4}: a red C_8 on all 8 vertices, no blue C_5 and no red C_7
    g = from_blue(8, list(itertools.combinations(range(4), 2)) + list(itertools.combinations(range(4, 8), 2)))
    assert cycle_exists(g, RED, 8) and not cycle_exists(g, RED, 7) and not cycle_exists(g, BLUE, 5)
    assert LEMMAS["no-blue-c5-unit-drop"].check(lemmas._View(g)) is None


def test_red_cycles_lists_each_cycle_once():
    k5 = build(5, itertools.combinations(range(5), 2))
    assert len(list(red_cycles(k5, 5))) == 12
    assert len(list(red_cycles(k5, 3))) == 10


def test_unknown_lemma():
    with pytest.raises(UnknownLemma):
        lemma("no-such-lemma")
    with pytest.raises(ValueError):
        verify_lemma("even-step-down", 6, mode="bogus")
