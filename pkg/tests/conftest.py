from __future__ import annotations

import itertools

from hypothesis import strategies as st

from cycleramsey.cycleset import CycleSet
from cycleramsey.graph.core import RedBlueGraph, build


@st.composite
def cycle_sets(draw, lo: int = 3, hi: int = 12):
    atoms = draw(st.frozensets(st.integers(lo, hi), max_size=4))
    tails = draw(
        st.frozensets(st.tuples(st.integers(lo, hi), st.sampled_from(["any", "odd", "even"])), max_size=2)
    )
    if not atoms and not tails:
        atoms = frozenset({draw(st.integers(lo, hi))})
    return CycleSet(atoms, tails)


@st.composite
def colourings(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, b in zip(pairs, bits) if b])


def brute_cycle(adj: list[set[int]], k: int) -> bool:
    """Any ordered k-tuple of distinct vertices forming a closed walk."""
    n = len(adj)
    for perm in itertools.permutations(range(n), k):
        if all(perm[(i + 1) % k] in adj[perm[i]] for i in range(k)):
            return True
    return False


def adjacency(g: RedBlueGraph, red: bool = True) -> list[set[int]]:
    masks = g.red if red else g.blue
    return [{v for v in range(g.n) if masks[u] >> v & 1} for u in range(g.n)]


def brute_isomorphic(g: RedBlueGraph, h: RedBlueGraph) -> bool:
    if g.n != h.n:
        return False
    target = set(h.edges())
    return any(
        {tuple(sorted((p[u], p[v]))) for u, v in g.edges()} == target
        for p in itertools.permutations(range(g.n))
    )


def all_colourings_brute(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
