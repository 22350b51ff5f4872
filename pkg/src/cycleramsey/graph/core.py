"""Red-blue complete graphs stored as one red-neighbourhood bitmask per vertex."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..cycleset import CycleSet

MAX_VERTICES = 64


class Colour(enum.Enum):
    RED = "red"
    BLUE = "blue"

    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED


RED = Colour.RED
BLUE = Colour.BLUE


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class RedBlueGraph:
    """A complete graph on ``n`` vertices; ``red[v]`` is the red neighbourhood of v.

    Every pair not joined in red is blue, so the red masks are the whole state.
    """

    n: int
    red: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [1, {MAX_VERTICES}]")
        if len(self.red) != self.n:
            raise ValueError("need one red mask per vertex")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.red):
            if m & ~full or m >> v & 1:
                raise ValueError(f"bad red mask for vertex {v}")
            for u in _bits(m):
                if not self.red[u] >> v & 1:
                    raise ValueError(f"red masks not symmetric at {u}{v}")

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "RedBlueGraph":
        return cls(len(masks), tuple(masks))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def blue(self) -> tuple[int, ...]:
        full = self.full
        return tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.red))

    def masks(self, colour: Colour) -> tuple[int, ...]:
        return self.red if colour is RED else self.blue

    def colour(self, u: int, v: int) -> Colour:
        if u == v:
            raise ValueError("no loops in a complete graph")
        return RED if self.red[u] >> v & 1 else BLUE

    def edges(self, colour: Colour = RED) -> list[tuple[int, int]]:
        masks = self.masks(colour)
        return [(u, v) for u in range(self.n) for v in _bits(masks[u] >> (u + 1) << (u + 1))]

    def swap_colours(self) -> "RedBlueGraph":
        return RedBlueGraph(self.n, self.blue)

    def relabel(self, perm: Sequence[int]) -> "RedBlueGraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        out = [0] * self.n
        for v, m in enumerate(self.red):
            img = 0
            for u in _bits(m):
                img |= 1 << perm[u]
            out[perm[v]] = img
        return RedBlueGraph(self.n, tuple(out))

    def induced(self, vertices: Sequence[int]) -> "RedBlueGraph":
        index = {v: i for i, v in enumerate(vertices)}
        out = []
        for v in vertices:
            m = 0
            for u in _bits(self.red[v]):
                if u in index:
                    m |= 1 << index[u]
            out.append(m)
        return RedBlueGraph(len(vertices), tuple(out))

    def red_edge_count(self) -> int:
        return sum(m.bit_count() for m in self.red) // 2

    def degrees(self, colour: Colour = RED) -> list[int]:
        return [m.bit_count() for m in self.masks(colour)]


def build(n: int, red_edges: Iterable[tuple[int, int]]) -> RedBlueGraph:
    """Complete red-blue graph on ``n`` vertices with exactly ``red_edges`` red."""
    masks = [0] * n
    seen = set()
    for u, v in red_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {u}{v} has a vertex outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return RedBlueGraph(n, tuple(masks))


def from_blue(n: int, blue_edges: Iterable[tuple[int, int]]) -> RedBlueGraph:
    return build(n, blue_edges).swap_colours()


# --- cycles ------------------------------------------------------------------


def _two_core(masks: Sequence[int], alive: int) -> int:
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (masks[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def _blocks(masks: Sequence[int], alive: int) -> list[int]:
    """Vertex masks of the biconnected components (size >= 3) of the subgraph on ``alive``."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[int] = []
    timer = 0
    for root in _bits(alive):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(list(_bits(masks[root] & alive))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(list(_bits(masks[w] & alive)))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        block |= 1 << a | 1 << b
                        if (a, b) == (u, v):
                            break
                    if block.bit_count() >= 3:
                        blocks.append(block)
    return blocks


def _bipartition(masks: Sequence[int], alive: int) -> Optional[tuple[int, int]]:
    side: dict[int, int] = {}
    for root in _bits(alive):
        if root in side:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in _bits(masks[v] & alive):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    a = sum(1 << v for v, s in side.items() if s == 0)
    return a, alive & ~a


def _reach_count(masks: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= masks[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen.bit_count() - 1


def _cycle_in_block(masks: Sequence[int], block: int, k: int) -> bool:
    remaining = block
    for anchor in list(_bits(block)):
        if remaining.bit_count() < k:
            return False
        if _anchored_cycle(masks, anchor, remaining, k):
            return True
        remaining &= ~(1 << anchor)
    return False


def _anchored_cycle(masks: Sequence[int], anchor: int, allowed: int, k: int) -> bool:
    """Is there a k-cycle through ``anchor`` inside ``allowed``?"""
    closers = masks[anchor] & allowed
    if closers.bit_count() < 2:
        return False

    def extend(v: int, visited: int, length: int) -> bool:
        # path anchor..v has `length` vertices
        if length == k:
            return bool(masks[v] >> anchor & 1)
        free = allowed & ~visited
        if not closers & free:
            return False
        if length + _reach_count(masks, v, free) < k:
            return False
        for w in _bits(masks[v] & free):
            if length + 1 == k and not masks[w] >> anchor & 1:
                continue
            if extend(w, visited | 1 << w, length + 1):
                return True
        return False

    return extend(anchor, 1 << anchor, 1)


def _has_cycle_of_length(masks: Sequence[int], alive: int, k: int) -> bool:
    core = _two_core(masks, alive)
    if core.bit_count() < k:
        return False
    for block in _blocks(masks, core):
        size = block.bit_count()
        if size < k:
            continue
        parts = _bipartition(masks, block)
        if parts is not None:
            if k % 2 or k > 2 * min(p.bit_count() for p in parts):
                continue
        if _cycle_in_block(masks, block, k):
            return True
    return False


def cycle_exists(g: RedBlueGraph, colour: Colour, k: int) -> bool:
    """Does the ``colour`` subgraph contain a simple cycle on exactly ``k`` vertices?"""
    if not 3 <= k <= g.n:
        raise ValueError(f"cycle length {k} outside [3, {g.n}]")
    return _has_cycle_of_length(g.masks(colour), g.full, k)


def cycle_from_set(g: RedBlueGraph, colour: Colour, gamma: CycleSet) -> Optional[int]:
    """Least length in ``gamma`` realised by a ``colour`` cycle, or None."""
    masks = g.masks(colour)
    core = _two_core(masks, g.full)
    if core.bit_count() < 3:
        return None
    for k in gamma.members(core.bit_count()):
        if _has_cycle_of_length(masks, core, k):
            return k
    return None


def is_avoiding(g: RedBlueGraph, gamma1: CycleSet, gamma2: CycleSet) -> bool:
    return cycle_from_set(g, RED, gamma1) is None and cycle_from_set(g, BLUE, gamma2) is None


def cycle_spectrum(g: RedBlueGraph, colour: Colour, vertices: Optional[int] = None) -> int:
    """Bitmask with bit k set iff the induced ``colour`` subgraph has a k-cycle."""
    masks = g.masks(colour)
    alive = g.full if vertices is None else vertices
    core = _two_core(masks, alive)
    spectrum = 0
    for block in _blocks(masks, core):
        parts = _bipartition(masks, block)
        top = block.bit_count()
        if parts is not None:
            top = min(top, 2 * min(p.bit_count() for p in parts))
        for k in range(3, top + 1):
            if spectrum >> k & 1 or (parts is not None and k % 2):
                continue
            if _cycle_in_block(masks, block, k):
                spectrum |= 1 << k
    return spectrum


# --- other predicates --------------------------------------------------------


def is_bipartite(g: RedBlueGraph, colour: Colour) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A split of the vertices with no ``colour`` edge inside a part, or None."""
    parts = _bipartition(g.masks(colour), g.full)
    if parts is None:
        return None
    a, b = parts
    return frozenset(_bits(a)), frozenset(_bits(b))


def is_pancyclic(g: RedBlueGraph, colour: Colour, vertices: Iterable[int]) -> bool:
    """Does the ``colour`` subgraph induced on ``vertices`` have cycles of every length 3..|U|?"""
    subset = 0
    for v in vertices:
        subset |= 1 << v
    size = subset.bit_count()
    if size < 3:
        raise ValueError("pancyclicity needs at least 3 vertices")
    want = sum(1 << k for k in range(3, size + 1))
    return cycle_spectrum(g, colour, subset) & want == want


def clique_exists(g: RedBlueGraph, colour: Colour, s: int) -> bool:
    if not 2 <= s <= g.n:
        raise ValueError(f"clique size {s} outside [2, {g.n}]")
    masks = g.masks(colour)

    def grow(candidates: int, size: int) -> bool:
        if size == s:
            return True
        if size + candidates.bit_count() < s:
            return False
        for v in _bits(candidates):
            candidates &= ~(1 << v)
            nxt = candidates & masks[v]
            if masks[v].bit_count() >= s - 1 and grow(nxt, size + 1):
                return True
        return False

    return grow(g.full, 0)


def all_colourings(n: int) -> Iterable[RedBlueGraph]:
    """Every labelled colouring of K_n (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        masks = [0] * n
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield RedBlueGraph(n, tuple(masks))
