from __future__ import annotations

import pytest

from cycleramsey.cycleset import CycleSet
from cycleramsey.graph.canon import canonical_key
from cycleramsey.graph.core import BLUE, RED, cycle_exists, is_avoiding, is_bipartite
from cycleramsey.witnesses import (
    BipCase1,
    BipCase2,
    Colouring1,
    Colouring2,
    Colouring3,
    Colouring4,
    Colouring5,
    Colouring6,
    CompleteBipCritical,
    EqualParts,
    GFamily,
    WitnessError,
    build_witness,
    declared_specs,
    enumerate_family,
    family_specs,
    g_family_specs,
    matchings,
    spec_from_dict,
    verify_witness,
)

from conftest import brute_isomorphic


def test_colouring3_avoids_triangles():
    assert is_avoiding(build_witness(Colouring3()), CycleSet.of(3), CycleSet.of(3))


def test_colouring4_example():
    g = build_witness(Colouring4(6, 4))
    assert g.n == 6
    assert not cycle_exists(g, RED, 6)
    assert not cycle_exists(g, BLUE, 4)
    assert is_bipartite(g, BLUE) is not None


def test_g3_with_perfect_matching_has_hub_on_everything():
    g = build_witness(GFamily(3, 6, ((1, 2), (3, 4))))
    assert g.n == 6
    blue_nbrs = {v for v in range(6) if g.blue[0] >> v & 1}
    assert blue_nbrs == {1, 2, 3, 4, 5}


def test_family_class_counts():
    assert len(enumerate_family("complete-bip-critical", 5)) == 2
    assert len(enumerate_family("bip-case1", 6, 8)) == 4


def test_colouring6_range():
    for n in range(3, 11):
        report = verify_witness(Colouring6(n), f">={n}", f">={2 * n},odd")
        assert report.ok and report.vertex_count == 2 * n - 2


def test_colouring5_range():
    for k in range(4, 11, 2):
        assert verify_witness(Colouring5(k), f">={2 * k},odd", f">={k}").avoiding


def test_colouring1_avoids_triangles():
    report = verify_witness(Colouring1(), "{3}", "{3}")
    assert report.avoiding and report.vertex_count == 4


def test_colouring2_is_self_complementary():
    g = build_witness(Colouring2())
    assert sorted(g.degrees(RED)) == [1, 1, 2, 3, 3] == sorted(g.degrees(BLUE))
    assert brute_isomorphic(g, g.swap_colours())
    assert verify_witness(Colouring2()).ok


def test_all_declared_witnesses_verify():
    failures = [s.describe() for s in declared_specs(12) if not verify_witness(s).ok]
    assert failures == []


def test_bipartite_constructions_are_blue_bipartite():
    for n in range(3, 10):
        for k in range(4, 2 * n, 2):
            if (n, k) == (3, 4):
                continue
            for spec in family_specs("bip-case1", n, k) + family_specs("bip-case2", n, k):
                assert verify_witness(spec).blue_bipartite
        for spec in family_specs("equal-parts", n):
            assert verify_witness(spec).blue_bipartite


def test_hub_families_have_no_long_cycles():
    for n in (6, 7, 8):
        for spec in g_family_specs(n):
            g = spec.build()
            assert not any(cycle_exists(g, BLUE, k) for k in range(4, n + 1))
            assert not cycle_exists(g, RED, n)


def test_matchings_are_all_matchings():
    # 1 + 6 + 3 matchings on 4 vertices
    assert len(list(matchings([0, 1, 2, 3]))) == 10
    assert len(list(matchings([]))) == 1


@pytest.mark.parametrize(
    "factory",
    [
        lambda: Colouring4(5, 5),
        lambda: Colouring4(2, 4),
        lambda: BipCase1(3, 4, 0),
        lambda: BipCase1(6, 8, 4),
        lambda: BipCase2(6, 8, 1),
        lambda: EqualParts(4, 2),
        lambda: GFamily(4, 6),
        lambda: GFamily(2, 6, ((1, 2),)),
        lambda: GFamily(1, 6, ((0, 1),)),
        lambda: GFamily(1, 6, ((1, 2), (2, 3))),
    ],
)
def test_invalid_parameters_are_rejected(factory):
    with pytest.raises(WitnessError):
        factory()


def test_spec_round_trips_through_dict():
    for spec in [Colouring4(6, 8), BipCase2(6, 8, 4), GFamily(2, 7, ((1, 5), (2, 3))), CompleteBipCritical(5, True)]:
        d = spec.describe()
        assert spec_from_dict(d["spec"], d["params"]) == spec


def test_critical_graphs_for_c5_against_c3():
    keys = [k for k, _ in enumerate_family("complete-bip-critical", 5)]
    blue_k44 = CompleteBipCritical(5).build()
    assert canonical_key(blue_k44) in keys
    assert is_avoiding(blue_k44, CycleSet.of(5), CycleSet.of(3))
