"""Upper bound for star-critical numbers of a long cycle against C_3 or C_5.

With r = R(C_n, C_k) = 2n - 1, delete a star K_{1,n-3} centred at v from K_r.
Any avoiding colouring restricts to an avoiding colouring of H = K_r - v on
r - 1 vertices, which is therefore critical.  So it suffices to take every
critical class of H, every set S of n + 1 neighbours of v up to the
automorphisms of H, and every colouring of the edges from v to S.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from ..cycleset import CycleSet
from ..formulas import classical_cycle_ramsey
from ..graph.canon import canonical_labelling
from ..graph.core import RedBlueGraph
from ..graph.graph6 import graph6_encode
from .engine import Constraint, SearchConfig, conflicts
from .oracle import enumerate_critical

SOURCES = ("search", "witnesses")


@dataclass
class StarReport:
    n: int
    k: int
    critical_classes: int
    neighbour_sets: int  # orbit representatives tried, summed over classes
    colourings: int
    avoiding_extensions: list[dict] = field(default_factory=list)
    source: str = "search"

    @property
    def upper_bound_holds(self) -> bool:
        return not self.avoiding_extensions

    def as_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "source": self.source,
            "critical_classes": self.critical_classes,
            "neighbour_sets": self.neighbour_sets,
            "colourings": self.colourings,
            "avoiding_extensions": self.avoiding_extensions,
            "upper_bound_holds": self.upper_bound_holds,
        }


def _check_args(n: int, k: int) -> None:
    if k not in (3, 5):
        raise ValueError("k must be 3 or 5")
    if (k == 3 and n < 5) or (k == 5 and n < 6):
        raise ValueError("need n >= 5 for k = 3 and n >= 6 for k = 5")
    if n > 10:
        raise ValueError("n > 10 is beyond desk scale")


def _subset_orbits(size: int, m: int, generators) -> list[int]:
    """One representative (as a bitmask) per orbit of ``size``-subsets of range(m)."""
    seen: set[int] = set()
    reps = []
    for combo in itertools.combinations(range(m), size):
        mask = sum(1 << i for i in combo)
        if mask in seen:
            continue
        reps.append(mask)
        seen.add(mask)
        frontier = [mask]
        while frontier:
            nxt = []
            for s in frontier:
                for g in generators:
                    img = 0
                    for i in range(m):
                        if s >> i & 1:
                            img |= 1 << g[i]
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
    return reps


def _critical_hosts(n: int, k: int, source: str, cfg: SearchConfig) -> list[RedBlueGraph]:
    if source == "search":
        result = enumerate_critical(CycleSet.of(n), CycleSet.of(k), cfg, confirm=False)
        if not result.exhaustive:
            raise RuntimeError("critical enumeration did not finish within budget")
        return result.graphs
    if source == "witnesses":
        from ..witnesses import CompleteBipCritical

        return [CompleteBipCritical(n, minus).build() for minus in (False, True)]
    raise ValueError(f"source must be one of {SOURCES}")


def star_critical_report(
    n: int,
    k: int,
    source: str = "search",
    cfg: SearchConfig = SearchConfig(),
    neighbours: Optional[int] = None,
) -> StarReport:
    """Try every extension of every critical host; ``neighbours`` overrides the degree n + 1 of v."""
    _check_args(n, k)
    r = classical_cycle_ramsey(n, k)
    m = r - 1
    degree = m - (n - 3) if neighbours is None else neighbours
    if not 0 <= degree <= m:
        raise ValueError(f"v can have between 0 and {m} neighbours")
    cons = Constraint(1 << n, 1 << k)
    report = StarReport(n, k, 0, 0, 0, source=source)
    for host in _critical_hosts(n, k, source, cfg):
        if host.n != m:
            raise RuntimeError(f"critical class on {host.n} vertices, expected {m}")
        report.critical_classes += 1
        conf_r, conf_b = conflicts(host.red, cons)
        gens = canonical_labelling(host).generators
        for nbrs in _subset_orbits(degree, m, gens):
            report.neighbour_sets += 1
            members = [u for u in range(m) if nbrs >> u & 1]
            for bits in range(1 << degree):
                report.colourings += 1
                red = sum(1 << u for i, u in enumerate(members) if bits >> i & 1)
                blue = nbrs & ~red
                if any(conf_r[u] & red for u in members if red >> u & 1):
                    continue
                if any(conf_b[u] & blue for u in members if blue >> u & 1):
                    continue
                report.avoiding_extensions.append(
                    {"host": graph6_encode(host).decode(), "red_neighbours": [u for u in members if red >> u & 1],
                     "blue_neighbours": [u for u in members if blue >> u & 1]}
                )
    return report


def star_critical_upper(n: int, k: int, source: str = "search", cfg: SearchConfig = SearchConfig()) -> bool:
    """True iff every colouring of K_{2n-1} minus a star K_{1,n-3} has a red C_n or a blue C_k."""
    return star_critical_report(n, k, source, cfg).upper_bound_holds
