from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycleramsey.cycleset import (
    INF,
    CycleSet,
    CycleSetSyntaxError,
    as_cycle_set,
    contains,
    format_cycle_set,
    gamma,
    gamma_even,
    parse_cycle_set,
)

from conftest import cycle_sets


def test_parse_examples():
    cs = parse_cycle_set("3,5")
    assert cs.atoms == {3, 5} and not cs.tails
    cs = parse_cycle_set(">=5")
    assert cs.tails == {(5, "any")} and gamma(cs) == 5
    cs = parse_cycle_set("odd")
    assert cs.tails == {(3, "odd")} and gamma_even(cs) == INF


def test_braces_and_whitespace():
    assert parse_cycle_set("{ 3 , 5 }") == parse_cycle_set("3,5")
    assert parse_cycle_set("{3}") == CycleSet.of(3)


def test_contains_examples():
    assert contains(parse_cycle_set(">=6"), 6)
    assert not contains(parse_cycle_set("odd"), 8)
    assert not contains(parse_cycle_set("<=4"), 5)


def test_gamma_examples():
    assert gamma(parse_cycle_set("{3,5}")) == 3
    assert gamma(parse_cycle_set(">=7:even")) == 8
    assert gamma(parse_cycle_set("even")) == 4


def test_gamma_even_examples():
    assert gamma_even(parse_cycle_set("{5}")) == INF
    assert gamma_even(parse_cycle_set(">=5")) == 6
    assert gamma_even(parse_cycle_set("{3,8}")) == 8


@pytest.mark.parametrize("text", ["", "{}", "2", "3,", ",3", ">=", ">=5:", ">=5:prime", "3 5", "{3", "abc", "<=2"])
def test_malformed_text_is_rejected(text):
    with pytest.raises(CycleSetSyntaxError):
        parse_cycle_set(text)


def test_syntax_error_reports_position():
    with pytest.raises(CycleSetSyntaxError) as info:
        parse_cycle_set("3,x")
    assert info.value.position == 2


def test_invalid_construction():
    with pytest.raises(ValueError):
        CycleSet()
    with pytest.raises(ValueError):
        CycleSet.of(2)
    with pytest.raises(ValueError):
        contains(CycleSet.of(3), 2)


def _denotation(text: str, k: int) -> bool:
    """Re-evaluate the grammar by hand, atom by atom."""
    body = text.strip().strip("{}")
    for atom in body.split(","):
        atom = atom.strip()
        if atom == "all":
            if k >= 3:
                return True
        elif atom == "odd":
            if k % 2:
                return True
        elif atom == "even":
            if k % 2 == 0:
                return True
        elif atom.startswith("<="):
            if k <= int(atom[2:]):
                return True
        elif atom.startswith(">="):
            bound, _, parity = atom[2:].partition(":")
            if k >= int(bound) and (not parity or (parity == "odd") == (k % 2 == 1)):
                return True
        elif int(atom) == k:
            return True
    return False


atom_text = st.one_of(
    st.integers(3, 20).map(str),
    st.integers(3, 20).map(lambda m: f"<={m}"),
    st.integers(3, 20).map(lambda m: f">={m}"),
    st.tuples(st.integers(3, 20), st.sampled_from(["odd", "even"])).map(lambda t: f">={t[0]}:{t[1]}"),
    st.sampled_from(["odd", "even", "all"]),
)


@given(st.lists(atom_text, min_size=1, max_size=5), st.booleans())
def test_contains_matches_naive_denotation(atoms, braces):
    text = ",".join(atoms)
    if braces:
        text = "{" + text + "}"
    cs = parse_cycle_set(text)
    for k in range(3, 65):
        assert contains(cs, k) == _denotation(text, k), (text, k)


@given(cycle_sets())
def test_print_then_parse_round_trips(cs):
    again = parse_cycle_set(format_cycle_set(cs))
    assert again.agrees_on(cs, 64)
    assert format_cycle_set(again) == format_cycle_set(cs)


@given(cycle_sets())
def test_gamma_bounds_gamma_even(cs):
    g, ge = gamma(cs), gamma_even(cs)
    assert g <= ge
    assert (g == ge) == (g % 2 == 0)
    assert contains(cs, g)
    assert all(not contains(cs, k) for k in range(3, g))
    if ge != INF:
        assert contains(cs, int(ge)) and ge % 2 == 0


@given(cycle_sets(), cycle_sets())
def test_union_is_membership_or(a, b):
    u = a | b
    for k in range(3, 40):
        assert contains(u, k) == (contains(a, k) or contains(b, k))


def test_as_cycle_set_accepts_several_forms():
    assert as_cycle_set("3,4") == as_cycle_set([3, 4]) == CycleSet.of(3, 4)
    cs = CycleSet.at_least(5)
    assert as_cycle_set(cs) is cs
