from __future__ import annotations

import pytest

from cycleramsey.search.star import star_critical_report, star_critical_upper


@pytest.mark.parametrize("n,k", [(5, 3), (6, 3), (7, 3), (6, 5)])
def test_upper_bound_holds(n, k):
    assert star_critical_upper(n, k)


def test_witness_hosts_give_the_same_answer():
    a = star_critical_report(6, 3, source="witnesses")
    b = star_critical_report(6, 3, source="search")
    assert a.upper_bound_holds and b.upper_bound_holds
    assert a.critical_classes == b.critical_classes == 2


def test_bound_is_sharp():
    # with only n neighbours the new vertex can be coloured without a forbidden cycle
    report = star_critical_report(5, 3, neighbours=5)
    assert not report.upper_bound_holds and report.avoiding_extensions


@pytest.mark.parametrize("n,k", [(5, 4), (4, 3), (5, 5), (11, 3)])
def test_rejects_unsupported_arguments(n, k):
    with pytest.raises(ValueError):
        star_critical_report(n, k)
