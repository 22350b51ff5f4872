"""Vertex-by-vertex extension of avoiding colourings.

A colouring on ``t`` vertices is a tuple of red masks.  Adding vertex ``t``
means choosing its red neighbourhood R (blue is the rest).  Any new
monochromatic cycle passes through the new vertex, so it closes a path
between two same-coloured neighbours of it.  For the parent we precompute,
per colour, a conflict mask: ``a`` and ``b`` conflict when some path from
``a`` to ``b`` of the right number of vertices exists.  A red neighbourhood
is then admissible iff it is independent in the red conflict graph and its
complement is independent in the blue one, and these checks run edge by
edge as the neighbourhood is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from ..cycleset import CycleSet
from ..graph.canon import CanonicalKey, canonical_masks
from ..graph.core import _bits

Masks = tuple[int, ...]


class SearchUndecided(RuntimeError):
    """The node budget ran out before the question was settled."""

    def __init__(self, message: str, explored_nodes: int):
        super().__init__(message)
        self.explored_nodes = explored_nodes


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = 10**10
    split_depth: int = 0  # leading edges of each extension fixed per work unit
    dedupe: bool = True  # isomorphism rejection after every vertex
    threads: int = 1
    frontier_cap: int = 20_000  # above this, existence questions switch to depth-first

    def __post_init__(self):
        if self.node_budget <= 0 or self.threads <= 0 or self.frontier_cap <= 0:
            raise ValueError("budgets and worker counts must be positive")
        if self.split_depth < 0:
            raise ValueError("split_depth must be non-negative")


class Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, nodes: int) -> None:
        self.used += nodes
        if self.used > self.limit:
            raise SearchUndecided(f"node budget {self.limit} exhausted", self.used)


@dataclass(frozen=True)
class Constraint:
    """Forbidden red and blue cycle lengths, as bitmasks over lengths."""

    red: int
    blue: int

    @classmethod
    def of(cls, gamma1: CycleSet, gamma2: CycleSet, upto: int) -> "Constraint":
        return cls(gamma1.mask(upto), gamma2.mask(upto))

    @property
    def colour_symmetric(self) -> bool:
        return self.red == self.blue


# --- conflict masks ----------------------------------------------------------


def _path_conflicts(adj: Sequence[int], t: int, lengths: int) -> list[int]:
    """conf[a] has bit b iff a path a..b on L vertices exists with bit L+1 of ``lengths`` set."""
    conf = [0] * t
    want = lengths >> 1  # bit L set iff a cycle of L+1 vertices is forbidden
    want &= ~0b11  # paths need at least two vertices
    if not want:
        return conf
    # cheap special case: length-3 cycles are adjacent neighbours
    if want == 0b100:
        return list(adj[:t])
    max_len = want.bit_length() - 1
    min_len = (want & -want).bit_length() - 1
    if want >> 2 & 1:
        for a in range(t):
            conf[a] |= adj[a]

    full = (1 << t) - 1
    comp = [0] * t
    seen = 0
    for v in range(t):
        if seen >> v & 1:
            continue
        c = 1 << v
        frontier = c
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            nxt &= full & ~c
            c |= nxt
            frontier = nxt
        for u in _bits(c):
            comp[u] = c
        seen |= c

    long_want = want & ~0b111
    if not long_want:
        return conf

    for a in range(t):
        if comp[a].bit_count() < 3 or comp[a].bit_count() < min_len:
            continue
        # only record b > a; mirror afterwards
        targets = comp[a] & ~((2 << a) - 1)
        if not targets:
            continue
        found = 0
        top = min(max_len, comp[a].bit_count())
        stack = [(a, 1 << a, 1)]
        while stack:
            v, visited, length = stack.pop()
            nbrs = adj[v] & ~visited
            nl = length + 1
            if long_want >> nl & 1:
                hit = nbrs & targets & ~found
                if hit:
                    found |= hit
                    if found == targets:
                        break
            if nl < top:
                for w in _bits(nbrs):
                    stack.append((w, visited | 1 << w, nl))
        for b in _bits(found):
            conf[a] |= 1 << b
            conf[b] |= 1 << a
    return conf


def _blue_masks(masks: Masks) -> Masks:
    t = len(masks)
    full = (1 << t) - 1
    return tuple(full & ~m & ~(1 << v) for v, m in enumerate(masks))


def conflicts(masks: Masks, cons: Constraint) -> tuple[list[int], list[int]]:
    t = len(masks)
    limit = (1 << (t + 2)) - 1  # cycles through the new vertex have at most t+1 vertices
    red = _path_conflicts(masks, t, cons.red & limit)
    blue = _path_conflicts(_blue_masks(masks), t, cons.blue & limit)
    return red, blue


# --- extensions --------------------------------------------------------------


def extensions(
    masks: Masks,
    cons: Constraint,
    budget: Optional[Budget] = None,
    prefix: tuple[int, int, int] = (0, 0, 0),
) -> Iterator[int]:
    """Admissible red neighbourhoods for a new vertex joined to the colouring ``masks``.

    ``prefix`` = (depth, red, blue) fixes the colours of the first ``depth`` edges.
    """
    t = len(masks)
    conf_r, conf_b = conflicts(masks, cons)
    start, red0, blue0 = prefix
    for j in range(start):
        bit = 1 << j
        if red0 & bit and conf_r[j] & red0 & (bit - 1):
            return
        if blue0 & bit and conf_b[j] & blue0 & (bit - 1):
            return
    nodes = 0
    stack = [(start, red0, blue0)]
    while stack:
        j, red, blue = stack.pop()
        nodes += 1
        if j == t:
            yield red
            continue
        bit = 1 << j
        # blue pushed first so red-heavy neighbourhoods come out first
        if not conf_b[j] & blue:
            stack.append((j + 1, red, blue | bit))
        if not conf_r[j] & red:
            stack.append((j + 1, red | bit, blue))
        if budget is not None and nodes >= 4096:
            budget.spend(nodes)
            nodes = 0
    if budget is not None:
        budget.spend(nodes)


def attach(masks: Masks, red: int) -> Masks:
    t = len(masks)
    return tuple(m | ((red >> v & 1) << t) for v, m in enumerate(masks)) + (red,)


def swap(masks: Masks) -> Masks:
    return _blue_masks(masks)


def class_key(masks: Masks, colour_symmetric: bool) -> tuple[CanonicalKey, Masks]:
    key, rep = canonical_masks(masks)
    if colour_symmetric:
        key2, rep2 = canonical_masks(swap(masks))
        if key2 < key:
            return key2, rep2
    return key, rep


def _expand_chunk(args) -> tuple[list[tuple[CanonicalKey, Masks]], int]:
    parents, cons, prefix_depth, colour_symmetric, limit = args
    budget = Budget(limit)
    found: dict[CanonicalKey, Masks] = {}
    for masks in parents:
        for prefix in _prefixes(len(masks), prefix_depth):
            for red in extensions(masks, cons, budget, prefix):
                key, rep = class_key(attach(masks, red), colour_symmetric)
                if key not in found:
                    found[key] = rep
    return sorted(found.items()), budget.used


def _prefixes(t: int, depth: int) -> list[tuple[int, int, int]]:
    depth = min(depth, t)
    out = []
    for bits in range(1 << depth):
        full = (1 << depth) - 1
        out.append((depth, bits, full & ~bits))
    return out


def next_level(
    frontier: Sequence[Masks],
    cons: Constraint,
    cfg: SearchConfig,
    budget: Budget,
    colour_symmetric: bool = False,
) -> list[tuple[CanonicalKey, Masks]]:
    """All children of ``frontier`` up to isomorphism, sorted by key."""
    remaining = budget.limit - budget.used
    if cfg.threads > 1 and len(frontier) > 1:
        from multiprocessing import Pool

        chunks = [frontier[i::cfg.threads] for i in range(cfg.threads)]
        with Pool(cfg.threads) as pool:
            parts = pool.map(
                _expand_chunk,
                [(c, cons, cfg.split_depth, colour_symmetric, remaining) for c in chunks if c],
            )
    else:
        parts = [_expand_chunk((list(frontier), cons, cfg.split_depth, colour_symmetric, remaining))]
    merged: dict[CanonicalKey, Masks] = {}
    for items, used in parts:
        budget.spend(used)
        for key, rep in items:
            merged.setdefault(key, rep)
    return sorted(merged.items())


def depth_first(
    roots: Sequence[Masks],
    target: int,
    cons: Constraint,
    budget: Budget,
) -> Optional[Masks]:
    """First labelled extension of any root to ``target`` vertices, roots tried in order."""

    def go(masks: Masks) -> Optional[Masks]:
        if len(masks) == target:
            return masks
        for red in extensions(masks, cons, budget):
            hit = go(attach(masks, red))
            if hit is not None:
                return hit
        return None

    for root in roots:
        hit = go(root)
        if hit is not None:
            return hit
    return None


def labelled_leaves(n: int, cons: Constraint, budget: Budget, split_depth: int = 0) -> Iterator[Masks]:
    """Every labelled avoiding colouring on ``n`` vertices (no isomorphism rejection)."""

    def go(masks: Masks) -> Iterator[Masks]:
        if len(masks) == n:
            yield masks
            return
        for prefix in _prefixes(len(masks), split_depth):
            for red in extensions(masks, cons, budget, prefix):
                yield from go(attach(masks, red))

    yield from go((0,))


def admissible(masks: Masks, red: int, conf: tuple[list[int], list[int]]) -> bool:
    """Whether joining a vertex with red neighbourhood ``red`` keeps the colouring avoiding."""
    conf_r, conf_b = conf
    blue = ((1 << len(masks)) - 1) & ~red
    return not any(conf_r[u] & red for u in _bits(red)) and not any(conf_b[u] & blue for u in _bits(blue))


def _twin_rows(masks: Masks) -> list[int]:
    """All-red, all-blue, then for each vertex u its twin joined to u in red and in blue."""
    t = len(masks)
    full = (1 << t) - 1
    rows = [full, 0]
    for u, m in enumerate(masks):
        rows.extend((m | 1 << u, m))
    seen: set[int] = set()
    return [r for r in rows if not (r in seen or seen.add(r))]


def twin_first(target: int, cons: Constraint, budget: Budget) -> Optional[Masks]:
    """Depth-first search restricted to blow-up-like extensions (new vertex = twin or uniform).

    Incomplete by design: a quick way to find the clique-union shaped
    colourings that are typical extremal examples.
    """

    def go(masks: Masks) -> Optional[Masks]:
        if len(masks) == target:
            return masks
        conf = conflicts(masks, cons)
        budget.spend(1)
        for red in _twin_rows(masks):
            if admissible(masks, red, conf):
                hit = go(attach(masks, red))
                if hit is not None:
                    return hit
        return None

    return go((0,))
