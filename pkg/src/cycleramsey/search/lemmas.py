"""Structural cycle statements checked over every (or randomly sampled) colouring.

Each check receives a colouring and returns ``None`` when its hypothesis does
not apply, ``True`` when the conclusion holds and ``False`` on a
counterexample.  Checks depend only on the isomorphism class, so both modes
evaluate one representative per class: exhaustive mode walks all classes and
weights them by their number of labellings, sampled mode canonicalises each
random colouring and memoises the verdict by key.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from ..graph.canon import automorphism_group_order, canonical_masks
from ..graph.core import BLUE, RED, RedBlueGraph, _bits, cycle_spectrum, is_bipartite
from ..graph.graph6 import graph6_encode
from .engine import SearchConfig
from .oracle import all_graphs

MAX_COUNTEREXAMPLES = 10


class UnknownLemma(KeyError):
    pass


class _View:
    """A colouring with its red and blue cycle spectra computed once."""

    def __init__(self, g: RedBlueGraph):
        self.g = g
        self.n = g.n
        self.red = cycle_spectrum(g, RED)
        self.blue = cycle_spectrum(g, BLUE)

    def has(self, colour, k: int) -> bool:
        return bool((self.red if colour is RED else self.blue) >> k & 1)

    def mono(self, k: int) -> bool:
        return bool((self.red | self.blue) >> k & 1)

    @functools.cached_property
    def blue_bipartite(self) -> bool:
        return is_bipartite(self.g, BLUE) is not None


def _implications(pairs: Iterator[tuple[bool, bool]]) -> Optional[bool]:
    """Fold (hypothesis, conclusion) pairs: None if no hypothesis fired."""
    fired = False
    for hyp, concl in pairs:
        if hyp:
            fired = True
            if not concl:
                return False
    return True if fired else None


def _long_cycle_or_blue_even(v: _View) -> Optional[bool]:
    # |G| = n + k/2 - 1 with n >= k >= 4, n >= 5, k even
    params = [(v.n + 1 - k // 2, k) for k in range(4, v.n + 1, 2)]
    params = [(n, k) for n, k in params if n >= k and n >= 5]
    if not params:
        return None
    return all((v.red | v.blue) >> n or v.has(BLUE, k) for n, k in params)


def _odd_to_even_drop(v: _View) -> Optional[bool]:
    return _implications((v.mono(L), v.mono(L - 1)) for L in range(7, v.n + 1, 2))


def _even_step_down(v: _View) -> Optional[bool]:
    return _implications((v.mono(L), v.mono(L - 2)) for L in range(6, v.n + 1, 2))


def _blue_cycle_transfer(v: _View) -> Optional[bool]:
    return _implications(
        (v.has(BLUE, n), v.has(RED, n) or v.has(BLUE, k))
        for k in range(4, v.n + 1, 2)
        for n in range(k, v.n + 1)
    )


def _hamiltonian_or_bipartite(v: _View) -> Optional[bool]:
    if v.n < 3 or v.has(BLUE, 3):
        return None
    return v.has(RED, v.n) or v.blue_bipartite


def _linear_forest_or_cycle(masks: Sequence[int], subset: int) -> bool:
    """Whether the graph induced on ``subset`` has all its edges on one Hamiltonian cycle of it."""
    size = subset.bit_count()
    degs = [(masks[u] & subset).bit_count() for u in _bits(subset)]
    if any(d > 2 for d in degs):
        return False
    edges = sum(degs) // 2
    if edges == size:
        # 2-regular: must be one cycle through everything
        start = (subset & -subset).bit_length() - 1
        seen, frontier = 1 << start, 1 << start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= masks[u] & subset
            frontier = nxt & ~seen
            seen |= frontier
        return seen == subset
    # acyclic iff edges = vertices - components
    comps, left = 0, subset
    while left:
        comps += 1
        start = left & -left
        seen, frontier = start, start
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= masks[u] & subset
            frontier = nxt & ~seen
            seen |= frontier
        left &= ~seen
    return edges == size - comps


def _red_chords_pancyclic(v: _View) -> Optional[bool]:
    blue = v.g.blue
    fired = False
    for size in range(6, v.n + 1):
        for subset in _subsets(v.n, size):
            if not _linear_forest_or_cycle(blue, subset):
                continue
            fired = True
            spectrum = cycle_spectrum(v.g, RED, subset)
            want = ((1 << (size + 1)) - 1) & ~0b111
            if spectrum & want != want:
                return False
    return True if fired else None


@functools.lru_cache(maxsize=None)
def _subsets(n: int, size: int) -> tuple[int, ...]:
    import itertools

    return tuple(sum(1 << i for i in c) for c in itertools.combinations(range(n), size))


def _dense_hamiltonian_pancyclic(v: _View) -> Optional[bool]:
    edges = v.g.red_edge_count()
    if v.n < 3 or not v.has(RED, v.n) or 4 * edges < v.n * v.n:
        return None
    want = ((1 << (v.n + 1)) - 1) & ~0b111
    if v.red & want == want:
        return True
    balanced = v.n % 2 == 0 and 4 * edges == v.n * v.n and is_bipartite(v.g, RED) is not None
    return balanced


def _short_drop(v: _View) -> Optional[bool]:
    if v.has(BLUE, 5):
        return None
    return _implications((v.has(RED, n), v.has(RED, n - 1) or v.has(RED, n - 2)) for n in range(5, v.n + 1))


def _unit_drop(v: _View) -> Optional[bool]:
    if v.has(BLUE, 5):
        return None
    return _implications((v.has(RED, n), v.has(RED, n - 1)) for n in range(7, v.n))


def red_cycles(g: RedBlueGraph, length: int) -> Iterator[tuple[int, ...]]:
    """Every red cycle on ``length`` vertices once: least vertex first, second < last."""
    red = g.red
    for a in range(g.n):
        allowed = g.full & ~((1 << (a + 1)) - 1)
        stack = [(a, (a,), 1 << a)]
        while stack:
            u, path, used = stack.pop()
            if len(path) == length:
                if red[u] >> a & 1 and path[1] < path[-1]:
                    yield path
                continue
            for w in _bits(red[u] & allowed & ~used):
                stack.append((w, path + (w,), used | 1 << w))


def _extension(v: _View) -> Optional[bool]:
    if v.has(BLUE, 5):
        return None
    fired = False
    red = v.g.red
    for n in range(3, v.n):
        if not v.has(RED, n):
            continue
        fired = True
        if v.has(RED, n + 1):
            continue
        for cyc in red_cycles(v.g, n):
            pos = {u: i for i, u in enumerate(cyc)}
            on = sum(1 << u for u in cyc)
            for x in _bits(v.g.full & ~on):
                hits = sorted(pos[u] for u in _bits(red[x] & on))
                for i, p in enumerate(hits):
                    for q in hits[i + 1:]:
                        if (q - p) % n not in (2, n - 2):
                            return False
    return True if fired else None


def _odd_blue_red_interval(v: _View) -> Optional[bool]:
    if v.has(BLUE, 5) or v.blue_bipartite:
        return None
    return all(v.has(RED, L) for L in range(6, v.n - 1))


def _avoiding_blue_bipartite(v: _View) -> Optional[bool]:
    # strongest form: avoid only the two girth cycles
    pairs = [(not v.has(RED, n) and not v.has(BLUE, 3), v.blue_bipartite) for n in range(5, v.n + 1)]
    pairs += [(not v.has(RED, n) and not v.has(BLUE, 5), v.blue_bipartite) for n in range(6, v.n - 1)]
    return _implications(iter(pairs))


@dataclass(frozen=True)
class Lemma:
    id: str
    statement: str
    check: Callable[[_View], Optional[bool]]
    min_n: int = 3


LEMMAS: dict[str, Lemma] = {
    lem.id: lem
    for lem in (
        Lemma(
            "long-cycle-or-blue-even",
            "on n + k/2 - 1 vertices (n >= k >= 4, n >= 5, k even): a monochromatic cycle of length >= n or a blue C_k",
            _long_cycle_or_blue_even,
            6,
        ),
        Lemma("odd-to-even-drop", "a monochromatic C_{2m+1} (m >= 3) forces a monochromatic C_{2m}", _odd_to_even_drop, 7),
        Lemma("even-step-down", "a monochromatic C_{2m} (m >= 3) forces a monochromatic C_{2m-2}", _even_step_down, 6),
        Lemma("blue-cycle-transfer", "n >= k >= 4, k even: a blue C_n forces a red C_n or a blue C_k", _blue_cycle_transfer, 4),
        Lemma("hamiltonian-or-bipartite", "no blue C_3: red hamiltonian or blue bipartite", _hamiltonian_or_bipartite),
        Lemma(
            "red-chords-pancyclic",
            "a cycle on >= 6 vertices whose chords are all red spans a red pancyclic subgraph",
            _red_chords_pancyclic,
            6,
        ),
        Lemma(
            "dense-hamiltonian-pancyclic",
            "a red hamiltonian subgraph with >= n^2/4 edges is pancyclic or K_{n/2,n/2}",
            _dense_hamiltonian_pancyclic,
        ),
        Lemma("no-blue-c5-short-drop", "no blue C_5, red C_n (n >= 5): red C_{n-1} or C_{n-2}", _short_drop, 5),
        Lemma("no-blue-c5-unit-drop", "no blue C_5, red C_n (7 <= n <= |G|-1): red C_{n-1}", _unit_drop, 8),
        Lemma(
            "no-blue-c5-extension",
            "no blue C_5, red C_n and an outside vertex with red neighbours at cyclic distance not 2: red C_{n+1}",
            _extension,
            4,
        ),
        Lemma(
            "odd-blue-red-interval",
            "blue odd cycle, no blue C_5: red cycles of every length in [6, |G|-2]",
            _odd_blue_red_interval,
            8,
        ),
        Lemma(
            "avoiding-blue-bipartite",
            "no red C_n and no blue C_3 (n >= 5, |G| >= n), or no red C_n and no blue C_5 (n >= 6, |G| >= n+2): blue bipartite",
            _avoiding_blue_bipartite,
            5,
        ),
    )
}


def lemma(lemma_id: str) -> Lemma:
    try:
        return LEMMAS[lemma_id]
    except KeyError:
        raise UnknownLemma(f"unknown lemma {lemma_id!r}; choose from {', '.join(LEMMAS)}") from None


@dataclass
class LemmaReport:
    lemma: str
    n: int
    mode: str
    colourings: int  # labelled colourings covered (exhaustive) or drawn (sampled)
    classes: int
    hypothesis_hits: int  # colourings (counted like ``colourings``) where the hypothesis applied
    counterexamples: list[str] = field(default_factory=list)  # graph6 of the red subgraph
    seed: Optional[int] = None

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def as_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "n": self.n,
            "mode": self.mode,
            "colourings": self.colourings,
            "classes": self.classes,
            "hypothesis_hits": self.hypothesis_hits,
            "counterexamples": self.counterexamples,
            "holds": self.holds,
            "seed": self.seed,
        }


@functools.lru_cache(maxsize=4)
def _classes_with_weights(n: int) -> tuple[tuple[RedBlueGraph, int], ...]:
    classes = all_graphs(n, SearchConfig())
    out = tuple((g, math.factorial(n) // automorphism_group_order(g)) for _, g in classes)
    total = sum(w for _, w in out)
    if total != 2 ** (n * (n - 1) // 2):
        raise RuntimeError(f"class weights cover {total} colourings, expected 2^{n * (n - 1) // 2}")
    return out


def _random_masks(n: int, samples: int, seed: int) -> Iterator[tuple[int, ...]]:
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    weights = np.zeros((len(pairs), n), dtype=np.int64)
    for e, (i, j) in enumerate(pairs):
        weights[e, i] = 1 << j
        weights[e, j] = 1 << i
    chunk = 100_000
    for start in range(0, samples, chunk):
        size = min(chunk, samples - start)
        bits = rng.integers(0, 2, size=(size, len(pairs)), dtype=np.int64)
        for row in (bits @ weights).tolist():
            yield tuple(row)


def verify_lemmas(
    lemma_ids: Sequence[str],
    n: int,
    mode: str = "exhaustive",
    samples: int = 10**6,
    seed: int = 0,
) -> list[LemmaReport]:
    """Check several statements on the colourings of K_n, sharing the class walk."""
    lems = [lemma(i) for i in lemma_ids]
    if n < 3 or n > 10:
        raise ValueError("lemma checks support 3 <= n <= 10")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    reports = [LemmaReport(lem.id, n, mode, 0, 0, 0, seed=seed if mode == "sampled" else None) for lem in lems]

    def record(g: RedBlueGraph, verdicts: list[Optional[bool]], weight: int) -> None:
        for rep, verdict in zip(reports, verdicts):
            rep.colourings += weight
            if verdict is None:
                continue
            rep.hypothesis_hits += weight
            if verdict is False and len(rep.counterexamples) < MAX_COUNTEREXAMPLES:
                rep.counterexamples.append(graph6_encode(g).decode())

    def evaluate(g: RedBlueGraph) -> list[Optional[bool]]:
        view = _View(g)
        return [lem.check(view) if n >= lem.min_n else None for lem in lems]

    if mode == "exhaustive":
        classes = _classes_with_weights(n)
        for g, weight in classes:
            record(g, evaluate(g), weight)
        for rep in reports:
            rep.classes = len(classes)
        return reports

    memo: dict[bytes, tuple[RedBlueGraph, list[Optional[bool]]]] = {}
    for masks in _random_masks(n, samples, seed):
        key, rep_masks = canonical_masks(masks)
        hit = memo.get(key)
        if hit is None:
            g = RedBlueGraph(n, rep_masks)
            hit = memo[key] = (g, evaluate(g))
            record(g, hit[1], 1)
        else:
            for rep, verdict in zip(reports, hit[1]):
                rep.colourings += 1
                if verdict is not None:
                    rep.hypothesis_hits += 1
    for rep in reports:
        rep.classes = len(memo)
    return reports


def verify_lemma(lemma_id: str, n: int, mode: str = "exhaustive", samples: int = 10**6, seed: int = 0) -> LemmaReport:
    return verify_lemmas([lemma_id], n, mode, samples, seed)[0]
