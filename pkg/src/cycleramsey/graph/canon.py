"""Canonical labelling of red-blue graphs.

Colour refinement on the red subgraph produces an equitable ordered
partition; the search tree individualises vertices of the first smallest
non-singleton cell and keeps the least adjacency encoding over all leaves.
Automorphisms discovered at equal leaves prune the tree: the remainder of a
branch is abandoned once it is known to be the image of an explored one, and
vertices in an explored orbit of the pointwise stabiliser of the current
prefix are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import RedBlueGraph, _bits

CanonicalKey = bytes


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = masks[v]
                sig = tuple((row & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _encode(masks: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for i, v in enumerate(order):
        r = 0
        for u in _bits(masks[v]):
            p = pos[u]
            if p > i:
                r |= 1 << (len(order) - 1 - p)
        rows.append(r)
    return tuple(rows)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class _State:
    masks: Sequence[int]
    best_code: Optional[tuple[int, ...]] = None
    best_order: Optional[list[int]] = None
    best_path: Optional[list[int]] = None
    first_code: Optional[tuple[int, ...]] = None
    first_order: Optional[list[int]] = None
    first_path: Optional[list[int]] = None
    generators: list[tuple[int, ...]] = field(default_factory=list)


def _common_prefix(a: Sequence[int], b: Sequence[int]) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def _automorphism(src: Sequence[int], dst: Sequence[int]) -> tuple[int, ...]:
    perm = [0] * len(src)
    for a, b in zip(src, dst):
        perm[a] = b
    return tuple(perm)


def _search(st: _State, cells: list[list[int]], path: list[int]) -> int:
    """Explore the subtree; returns the depth to resume at (len(path) = keep going)."""
    cells = _refine(st.masks, cells)
    depth = len(path)
    target_index = -1
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (target_index < 0 or len(cell) < len(cells[target_index])):
            target_index = i
    if target_index < 0:
        order = [c[0] for c in cells]
        code = _encode(st.masks, order)
        if st.first_code is None:
            st.first_code, st.first_order, st.first_path = code, order, list(path)
            st.best_code, st.best_order, st.best_path = code, order, list(path)
            return depth
        if code == st.first_code:
            st.generators.append(_automorphism(order, st.first_order))
            return _common_prefix(path, st.first_path)
        if code == st.best_code:
            st.generators.append(_automorphism(order, st.best_order))
            return _common_prefix(path, st.best_path)
        if code < st.best_code:
            st.best_code, st.best_order, st.best_path = code, order, list(path)
        return depth

    target = cells[target_index]
    explored: list[int] = []
    for v in target:
        if explored and _same_orbit(st, path, v, explored):
            continue
        explored.append(v)
        rest = [u for u in target if u != v]
        child = cells[:target_index] + [[v], rest] + cells[target_index + 1:]
        resume = _search(st, child, path + [v])
        if resume < depth:
            return resume
    return depth


def _same_orbit(st: _State, path: Sequence[int], v: int, explored: Sequence[int]) -> bool:
    stabilising = [g for g in st.generators if all(g[p] == p for p in path)]
    if not stabilising:
        return False
    uf = _UnionFind(len(st.masks))
    for g in stabilising:
        for a, b in enumerate(g):
            uf.union(a, b)
    root = uf.find(v)
    return any(uf.find(u) == root for u in explored)


@dataclass(frozen=True)
class Labelling:
    key: CanonicalKey
    order: tuple[int, ...]  # order[i] = vertex placed at position i
    generators: tuple[tuple[int, ...], ...]

    @property
    def perm(self) -> tuple[int, ...]:
        """perm[v] = canonical position of vertex v."""
        out = [0] * len(self.order)
        for i, v in enumerate(self.order):
            out[v] = i
        return tuple(out)


def _key_bytes(n: int, code: Sequence[int]) -> bytes:
    width = max(1, (n + 7) // 8)
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in code)


def labelling_of_masks(masks: Sequence[int]) -> Labelling:
    """Canonical labelling of the graph whose red neighbourhoods are ``masks``."""
    st = _State(masks)
    _search(st, [list(range(len(masks)))], [])
    return Labelling(_key_bytes(len(masks), st.best_code), tuple(st.best_order), tuple(st.generators))


def canonical_masks(masks: Sequence[int]) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Key and the red masks relabelled into canonical position."""
    lab = labelling_of_masks(masks)
    pos = lab.perm
    out = [0] * len(masks)
    for v, m in enumerate(masks):
        img = 0
        for u in _bits(m):
            img |= 1 << pos[u]
        out[pos[v]] = img
    return lab.key, tuple(out)


def canonical_labelling(g: RedBlueGraph) -> Labelling:
    return labelling_of_masks(g.red)


def canonical_key(g: RedBlueGraph) -> CanonicalKey:
    return canonical_labelling(g).key


def canonical_form(g: RedBlueGraph) -> tuple[CanonicalKey, RedBlueGraph]:
    """The key together with the graph relabelled into canonical position."""
    lab = canonical_labelling(g)
    return lab.key, g.relabel(lab.perm)


def automorphism_group_order(g: RedBlueGraph) -> int:
    """Order of the colour-preserving automorphism group, by closure of the found generators."""
    gens = canonical_labelling(g).generators
    identity = tuple(range(g.n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)
