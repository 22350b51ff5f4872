"""Exhaustive answers by search: existence, Ramsey numbers, and critical classes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from ..cycleset import CycleSet, as_cycle_set
from ..formulas import generalized_ramsey
from ..graph.canon import CanonicalKey, canonical_form, canonical_masks
from ..graph.core import RedBlueGraph
from .engine import (
    Budget,
    Constraint,
    Masks,
    SearchConfig,
    SearchUndecided,
    attach,
    depth_first,
    extensions,
    labelled_leaves,
    next_level,
    swap,
    twin_first,
)

SetLike = Union[str, CycleSet]


class _AboveCap:
    def __repr__(self) -> str:
        return "ABOVE_CAP"


ABOVE_CAP = _AboveCap()


@dataclass
class EnumerationResult:
    n: int
    classes: list[tuple[CanonicalKey, RedBlueGraph]]
    explored_nodes: int
    exhaustive: bool
    notes: dict = field(default_factory=dict)

    @property
    def keys(self) -> list[CanonicalKey]:
        return [k for k, _ in self.classes]

    @property
    def graphs(self) -> list[RedBlueGraph]:
        return [g for _, g in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


def _pair(gamma1: SetLike, gamma2: SetLike) -> tuple[CycleSet, CycleSet]:
    return as_cycle_set(gamma1), as_cycle_set(gamma2)


def _levels(cons: Constraint, upto: int, cfg: SearchConfig, budget: Budget, colour_symmetric: bool):
    """Yield (t, frontier) for t = 1..upto; frontier = sorted (key, masks) of avoiding classes."""
    frontier = [canonical_masks((0,))]
    yield 1, frontier
    for t in range(1, upto):
        frontier = next_level([m for _, m in frontier], cons, cfg, budget, colour_symmetric)
        yield t + 1, frontier
        if not frontier:
            return


PROBE_NODES = 200_000
TWIN_PROBE_NODES = 3_000  # each node recomputes conflict masks


def _probe(target: int, cons: Constraint, budget: Budget) -> Optional[Masks]:
    """Cheap attempts at an avoiding colouring: blow-up shapes, then plain depth-first, each in both colour orders.

    Returns None when neither attempt succeeds within its share of the budget.
    """
    flipped = Constraint(cons.blue, cons.red)
    attempts = (
        (TWIN_PROBE_NODES, lambda share: twin_first(target, cons, share)),
        (TWIN_PROBE_NODES, lambda share: _swapped(twin_first(target, flipped, share))),
        (PROBE_NODES, lambda share: depth_first([(0,)], target, cons, share)),
        (PROBE_NODES, lambda share: _swapped(depth_first([(0,)], target, flipped, share))),
    )
    for limit, attempt in attempts:
        share = Budget(min(limit, budget.limit - budget.used))
        try:
            hit = attempt(share)
        except SearchUndecided:
            hit = None
        finally:
            budget.spend(share.used)
        if hit is not None:
            return hit
    return None


def _swapped(masks: Optional[Masks]) -> Optional[Masks]:
    return None if masks is None else swap(masks)


def exists_avoiding(
    gamma1: SetLike, gamma2: SetLike, n: int, cfg: SearchConfig = SearchConfig()
) -> Optional[RedBlueGraph]:
    """An avoiding colouring of K_n, or None if there is none.

    Raises SearchUndecided when the node budget runs out first.
    """
    a, b = _pair(gamma1, gamma2)
    cons = Constraint.of(a, b, n)
    budget = Budget(cfg.node_budget)
    if not cfg.dedupe:
        for leaf in labelled_leaves(n, cons, budget, cfg.split_depth):
            return RedBlueGraph(n, leaf)
        return None
    hit = _probe(n, cons, budget)
    if hit is not None:
        return canonical_form(RedBlueGraph(n, hit))[1]
    for t, frontier in _levels(cons, n, cfg, budget, cons.colour_symmetric):
        if not frontier:
            return None
        if t == n:
            return RedBlueGraph(n, frontier[0][1])
        if len(frontier) > cfg.frontier_cap:
            hit = depth_first([m for _, m in frontier], n, cons, budget)
            return None if hit is None else RedBlueGraph(n, hit)
    return None


def ramsey_oracle(
    gamma1: SetLike, gamma2: SetLike, cap: int, cfg: SearchConfig = SearchConfig()
) -> Union[int, _AboveCap]:
    """Least n <= cap with no avoiding colouring of K_n, else ABOVE_CAP.

    Avoidance is inherited by induced subgraphs, so one avoiding colouring on
    ``cap`` vertices settles the question; a short probe looks for one first.
    """
    a, b = _pair(gamma1, gamma2)
    cons = Constraint.of(a, b, cap)
    budget = Budget(cfg.node_budget)
    if _probe(cap, cons, budget) is not None:
        return ABOVE_CAP
    roots: list[Masks] = []
    reached = 0
    for t, frontier in _levels(cons, cap, cfg, budget, cons.colour_symmetric):
        if not frontier:
            return t
        reached = t
        roots = [m for _, m in frontier]
        if len(frontier) > cfg.frontier_cap:
            break
    for n in range(reached + 1, cap + 1):
        if depth_first(roots, n, cons, budget) is None:
            return n
    return ABOVE_CAP


def enumerate_avoiding(
    gamma1: SetLike, gamma2: SetLike, n: int, cfg: SearchConfig = SearchConfig()
) -> EnumerationResult:
    """All avoiding colourings of K_n up to colour-preserving isomorphism, sorted by key."""
    a, b = _pair(gamma1, gamma2)
    cons = Constraint.of(a, b, n)
    budget = Budget(cfg.node_budget)
    found: dict[CanonicalKey, RedBlueGraph] = {}
    try:
        if cfg.dedupe:
            for t, frontier in _levels(cons, n, cfg, budget, False):
                if t == n:
                    found = {k: RedBlueGraph(n, m) for k, m in frontier}
        else:
            for leaf in labelled_leaves(n, cons, budget, cfg.split_depth):
                key, g = canonical_form(RedBlueGraph(n, leaf))
                found.setdefault(key, g)
    except SearchUndecided:
        return EnumerationResult(n, sorted(found.items()), budget.used, False)
    return EnumerationResult(n, sorted(found.items()), budget.used, True)


def enumerate_critical(
    gamma1: SetLike, gamma2: SetLike, cfg: SearchConfig = SearchConfig(), confirm: bool = True
) -> EnumerationResult:
    """Avoiding colourings on R - 1 vertices.

    R comes from the closed form when that is proved exact, otherwise from
    :func:`ramsey_oracle`.  With ``confirm`` the search also checks that no
    class extends to R vertices.
    """
    a, b = _pair(gamma1, gamma2)
    verdict = generalized_ramsey(a, b)
    if verdict.exact:
        r = verdict.value
    else:
        r = ramsey_oracle(a, b, 13, cfg)
        if r is ABOVE_CAP:
            raise SearchUndecided("Ramsey number above the search cap", 0)
    result = enumerate_avoiding(a, b, r - 1, cfg)
    result.notes["ramsey"] = r
    if confirm and result.exhaustive:
        cons = Constraint.of(a, b, r)
        budget = Budget(cfg.node_budget)
        extendable = any(
            True for g in result.graphs for _ in extensions(g.red, cons, budget)
        )
        result.notes["confirmed"] = not extendable
        result.explored_nodes += budget.used
    return result


# --- blue-bipartite colourings -----------------------------------------------


def _bipartite_search(cons: Constraint, p: int, q: int, budget: Budget, collect: bool) -> list[Masks]:
    """Avoiding colourings whose blue edges all run between a p-set and a q-set.

    The q side is placed first as a red clique; p-side vertices follow with
    cross rows in non-decreasing order (rows of equal side are interchangeable).
    """
    out: list[Masks] = []
    clique: Masks = (0,)
    for _ in range(1, q):
        red = (1 << len(clique)) - 1
        if red not in set(extensions(clique, cons, budget, (len(clique), red, 0))):
            return out
        clique = attach(clique, red)
    if q == 0:
        clique = ()

    def go(masks: Masks, placed: int, floor: int) -> bool:
        if placed == p:
            out.append(masks)
            return not collect
        t = len(masks)
        p_side = ((1 << t) - 1) & ~((1 << q) - 1)
        for row in range(floor, 1 << q):
            red = row | p_side
            prefix = (t, red, ((1 << t) - 1) & ~red)
            for r in extensions(masks, cons, budget, prefix) if t else [0]:
                if go(attach(masks, r) if t else (0,), placed + 1, row):
                    return True
        return False

    go(clique, 0, 0)
    return out


def _bipartitions(n: int) -> Iterable[tuple[int, int]]:
    for q in range(0, n // 2 + 1):
        yield n - q, q


def blue_bipartite_avoiding(
    gamma1: SetLike, gamma2: SetLike, n: int, cfg: SearchConfig = SearchConfig()
) -> EnumerationResult:
    """Avoiding colourings of K_n with bipartite blue subgraph, up to isomorphism."""
    a, b = _pair(gamma1, gamma2)
    cons = Constraint.of(a, b, n)
    budget = Budget(cfg.node_budget)
    found: dict[CanonicalKey, RedBlueGraph] = {}
    for p, q in _bipartitions(n):
        for masks in _bipartite_search(cons, p, q, budget, collect=True):
            key, g = canonical_form(RedBlueGraph(n, masks))
            found.setdefault(key, g)
    return EnumerationResult(n, sorted(found.items()), budget.used, True)


def r_blue_oracle(gamma1: SetLike, gamma2: SetLike, cap: int, cfg: SearchConfig = SearchConfig()) -> Union[int, _AboveCap]:
    """Least n <= cap such that every blue-bipartite colouring of K_n is non-avoiding."""
    a, b = _pair(gamma1, gamma2)
    cons = Constraint.of(a, b, cap)
    budget = Budget(cfg.node_budget)
    for n in range(1, cap + 1):
        if not any(_bipartite_search(cons, p, q, budget, collect=False) for p, q in _bipartitions(n)):
            return n
    return ABOVE_CAP


# --- characterisation checks -------------------------------------------------


@dataclass
class CharacterizationReport:
    search_count: int
    family_count: int
    missing_from_family: list[CanonicalKey]
    missing_from_search: list[CanonicalKey]
    exhaustive: bool

    @property
    def match(self) -> bool:
        return self.exhaustive and not self.missing_from_family and not self.missing_from_search

    def as_json(self) -> dict:
        return {
            "search_classes": self.search_count,
            "family_classes": self.family_count,
            "missing_from_family": [k.hex() for k in self.missing_from_family],
            "missing_from_search": [k.hex() for k in self.missing_from_search],
            "exhaustive": self.exhaustive,
            "match": self.match,
        }


def compare_keys(searched: EnumerationResult, family: Sequence[RedBlueGraph]) -> CharacterizationReport:
    fam_keys = {canonical_form(g)[0] for g in family}
    found = set(searched.keys)
    return CharacterizationReport(
        search_count=len(found),
        family_count=len(fam_keys),
        missing_from_family=sorted(found - fam_keys),
        missing_from_search=sorted(fam_keys - found),
        exhaustive=searched.exhaustive,
    )


def check_characterization(
    gamma1: SetLike,
    gamma2: SetLike,
    family: Sequence[RedBlueGraph],
    cfg: SearchConfig = SearchConfig(),
) -> CharacterizationReport:
    """Compare the searched critical classes with a constructed family, by canonical key."""
    return compare_keys(enumerate_critical(gamma1, gamma2, cfg, confirm=False), family)


def all_graphs(n: int, cfg: SearchConfig = SearchConfig()) -> list[tuple[CanonicalKey, RedBlueGraph]]:
    """Every colouring of K_n up to isomorphism (no forbidden cycles)."""
    cons = Constraint(0, 0)
    budget = Budget(cfg.node_budget)
    last: list[tuple[CanonicalKey, Masks]] = []
    for _, last in _levels(cons, n, cfg, budget, False):
        pass
    return [(k, RedBlueGraph(n, m)) for k, m in last]


__all__ = [
    "ABOVE_CAP",
    "CharacterizationReport",
    "EnumerationResult",
    "all_graphs",
    "blue_bipartite_avoiding",
    "check_characterization",
    "compare_keys",
    "enumerate_avoiding",
    "enumerate_critical",
    "exists_avoiding",
    "r_blue_oracle",
    "ramsey_oracle",
]

