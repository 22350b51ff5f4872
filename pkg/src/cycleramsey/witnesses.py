"""Explicit extremal and critical colourings.

Every spec knows the cycle sets it avoids by default and the lower bound it
certifies (``claimed_bound``); a witness is extremal when it has exactly
``claimed_bound - 1`` vertices.  Bipartite constructions put the larger part
first: vertices ``0..p-1`` then ``p..p+q-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import ClassVar, Iterable, Iterator, Optional, Sequence, Union

from .cycleset import CycleSet, as_cycle_set, gamma, gamma_even
from .formulas import classical_cycle_ramsey, generalized_ramsey, r_blue, r_red
from .graph.canon import CanonicalKey, canonical_form
from .graph.core import BLUE, RED, RedBlueGraph, build, cycle_from_set, from_blue, is_bipartite

Pair = tuple[int, int]
SetLike = Union[str, CycleSet]

class WitnessError(ValueError):
    pass

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise WitnessError(message)

def _cliques(*parts: Sequence[int]) -> list[Pair]:
    return [e for part in parts for e in itertools.combinations(part, 2)]

def _blue_bipartite(p: int, q: int, red_cross: Iterable[Pair]) -> RedBlueGraph:
    """Red cliques on both parts; cross edges blue except ``red_cross``."""
    big, small = range(p), range(p, p + q)
    return build(p + q, _cliques(big, small) + list(red_cross))

@dataclass(frozen=True)
class WitnessSpec:
    kind: ClassVar[str] = ""

    def build(self) -> RedBlueGraph:
        raise NotImplementedError

    def default_sets(self) -> tuple[CycleSet, CycleSet]:
        raise NotImplementedError

    def claimed_bound(self) -> int:
        raise NotImplementedError

    def params(self) -> dict:
        out = asdict(self)
        for name, value in out.items():
            if isinstance(value, tuple):
                out[name] = [list(x) if isinstance(x, tuple) else x for x in value]
        return out

    def describe(self) -> dict:
        return {"spec": self.kind, "params": self.params()}

# --- the six small colourings -------------------------------------------------

@dataclass(frozen=True)
class Colouring1(WitnessSpec):
    """Red and blue paths on 3 edges each."""

    kind: ClassVar[str] = "Colouring1"

    def build(self) -> RedBlueGraph:
        return build(4, [(0, 1), (1, 2), (2, 3)])

    def default_sets(self):
        return as_cycle_set("all"), as_cycle_set("all")

    def claimed_bound(self) -> int:
        return r_blue(3, 4)

@dataclass(frozen=True)
class Colouring2(WitnessSpec):
    """The bull: a triangle with two pendant edges, self-complementary."""

    kind: ClassVar[str] = "Colouring2"

    def build(self) -> RedBlueGraph:
        g = build(5, [(0, 1), (1, 2), (2, 3), (1, 3), (2, 4)])
        red_deg = sorted(g.degrees(RED))
        if red_deg != [1, 1, 2, 3, 3] or sorted(g.degrees(BLUE)) != red_deg:
            raise WitnessError("bull colouring lost its degree sequence")
        return g

    def default_sets(self):
        return as_cycle_set(">=4"), as_cycle_set(">=4")

    def claimed_bound(self) -> int:
        return generalized_ramsey(*self.default_sets()).value

@dataclass(frozen=True)
class Colouring3(WitnessSpec):
    """Red and blue pentagons."""

    kind: ClassVar[str] = "Colouring3"

    def build(self) -> RedBlueGraph:
        return build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

    def default_sets(self):
        return as_cycle_set("3,4"), as_cycle_set("3,4")

    def claimed_bound(self) -> int:
        return generalized_ramsey(*self.default_sets()).value

@dataclass(frozen=True)
class Colouring4(WitnessSpec):
    """Blue K_{n-1,k/2-1}, everything else red."""

    n: int
    k: int
    kind: ClassVar[str] = "Colouring4"

    def __post_init__(self):
        _require(self.k >= 4 and self.k % 2 == 0, "k must be even and at least 4")
        _require(self.n >= 3 and 2 * self.n >= self.k, "need n >= 3 and n >= k/2")

    def build(self) -> RedBlueGraph:
        return _blue_bipartite(self.n - 1, self.k // 2 - 1, [])

    def default_sets(self):
        return as_cycle_set(f">={self.n}"), as_cycle_set(f">={self.k},odd")

    def claimed_bound(self) -> int:
        return self.n + self.k // 2 - 1

@dataclass(frozen=True)
class Colouring5(WitnessSpec):
    """Red K_{k-1,k-1}, everything else blue."""

    k: int
    kind: ClassVar[str] = "Colouring5"

    def __post_init__(self):
        _require(self.k >= 3, "k must be at least 3")

    def build(self) -> RedBlueGraph:
        return _blue_bipartite(self.k - 1, self.k - 1, []).swap_colours()

    def default_sets(self):
        return as_cycle_set(f">={2 * self.k},odd"), as_cycle_set(f">={self.k}")

    def claimed_bound(self) -> int:
        a, b = self.default_sets()
        return r_red(gamma(b), gamma_even(a))

@dataclass(frozen=True)
class Colouring6(WitnessSpec):
    """Blue K_{n-1,n-1}, everything else red."""

    n: int
    kind: ClassVar[str] = "Colouring6"

    def __post_init__(self):
        _require(self.n >= 3, "n must be at least 3")

    def build(self) -> RedBlueGraph:
        return _blue_bipartite(self.n - 1, self.n - 1, [])

    def default_sets(self):
        return as_cycle_set(f">={self.n}"), as_cycle_set(f">={2 * self.n},odd")

    def claimed_bound(self) -> int:
        a, b = self.default_sets()
        return r_blue(gamma(a), gamma_even(b))

# --- extremal blue-bipartite colourings ----------------------------------------

@dataclass(frozen=True)
class _BipartiteAgainst(WitnessSpec):
    n: int
    k: int

    def _check_long(self):
        _require(self.k >= 4 and self.k % 2 == 0, "k must be even and at least 4")
        _require(2 * self.n > self.k and (self.n, self.k) != (3, 4), "need 2n > k and (n, k) != (3, 4)")

    def default_sets(self):
        return as_cycle_set(f">={self.n}"), as_cycle_set(f">={self.k},odd")

    def claimed_bound(self) -> int:
        return r_blue(self.n, self.k)

@dataclass(frozen=True)
class BipCase1(_BipartiteAgainst):
    """Parts n-1 and k/2-1; a hub in the large part has ``red_star_size`` red cross edges."""

    red_star_size: int = 0
    kind: ClassVar[str] = "BipCase1"

    def __post_init__(self):
        self._check_long()
        _require(0 <= self.red_star_size <= self.k // 2 - 1, "red_star_size must lie in [0, k/2-1]")

    def build(self) -> RedBlueGraph:
        p, q = self.n - 1, self.k // 2 - 1
        return _blue_bipartite(p, q, [(0, p + j) for j in range(self.red_star_size)])

@dataclass(frozen=True)
class BipCase2(_BipartiteAgainst):
    """Parts n-2 and k/2; one small-part vertex has ``red_star_size`` (n-3 or n-2) red cross edges."""

    red_star_size: int = 0
    kind: ClassVar[str] = "BipCase2"

    def __post_init__(self):
        self._check_long()
        _require(self.red_star_size in (self.n - 3, self.n - 2), "red_star_size must be n-3 or n-2")

    def build(self) -> RedBlueGraph:
        p, q = self.n - 2, self.k // 2
        return _blue_bipartite(p, q, [(j, p) for j in range(self.red_star_size)])

@dataclass(frozen=True)
class EqualParts(WitnessSpec):
    """Two red K_{n-1} joined in blue except for 0, 1 or 2 disjoint red edges."""

    n: int
    red_cross_edges: int = 0
    kind: ClassVar[str] = "EqualParts"

    def __post_init__(self):
        _require(self.n >= 3, "n must be at least 3")
        limit = 2 if self.n == 3 else 1
        _require(0 <= self.red_cross_edges <= limit, f"at most {limit} red cross edges for n={self.n}")

    def build(self) -> RedBlueGraph:
        p = self.n - 1
        return _blue_bipartite(p, p, [(j, p + j) for j in range(self.red_cross_edges)])

    def default_sets(self):
        first = "3,>=5" if self.n == 3 and self.red_cross_edges == 2 else f">={self.n}"
        return as_cycle_set(first), as_cycle_set(f">={2 * self.n},odd")

    def claimed_bound(self) -> int:
        a, b = self.default_sets()
        return r_blue(gamma(a), gamma_even(b))

@dataclass(frozen=True)
class CompleteBipCritical(WitnessSpec):
    """Blue K_{n-1,n-1}, optionally with one edge recoloured red."""

    n: int
    minus_edge: bool = False
    kind: ClassVar[str] = "CompleteBipCritical"

    def __post_init__(self):
        _require(self.n >= 3, "n must be at least 3")

    def build(self) -> RedBlueGraph:
        p = self.n - 1
        return _blue_bipartite(p, p, [(0, p)] if self.minus_edge else [])

    def default_sets(self):
        return CycleSet.of(self.n), CycleSet.of(3)

    def claimed_bound(self) -> int:
        return classical_cycle_ramsey(self.n, 3)

# --- blue subgraphs built from a hub and a matching ---------------------------

def g_vertices(n: int) -> tuple[int, list[int], int]:
    """(v, X, y) with v = 0, X = 1..n-2 and y = n-1."""
    return 0, list(range(1, n - 1)), n - 1

def matched_set(index: int, n: int) -> list[int]:
    """Vertices the matching of a hub family may touch."""
    _, xs, y = g_vertices(n)
    return xs if index == 2 else xs + [y]

@dataclass(frozen=True)
class GFamily(WitnessSpec):
    """Blue subgraph: a hub joined to X (and y for index 3) plus a matching; red is the complement.

    Index 2 additionally joins y to x_{n-2} only, and x_{n-2} must be matched
    so that its blue degree is 3.
    """

    index: int
    n: int
    matching: tuple[Pair, ...] = ()
    kind: ClassVar[str] = "GFamily"

    def __post_init__(self):
        _require(self.index in (1, 2, 3), "index must be 1, 2 or 3")
        _require(self.n >= 6, "n must be at least 6")
        object.__setattr__(self, "matching", tuple(tuple(sorted(e)) for e in self.matching))
        allowed = set(matched_set(self.index, self.n))
        used: set[int] = set()
        for u, w in self.matching:
            _require(u != w, "matching edge is a loop")
            _require(u in allowed and w in allowed, f"matching edge {(u, w)} leaves its vertex set")
            _require(u not in used and w not in used, "matching edges must be disjoint")
            used |= {u, w}
        if self.index == 2:
            _require(self.n - 2 in used, "x_{n-2} must be matched to reach degree 3")

    def build(self) -> RedBlueGraph:
        v, xs, y = g_vertices(self.n)
        blue = [(v, x) for x in xs] + list(self.matching)
        if self.index == 2:
            blue.append((xs[-1], y))
        if self.index == 3:
            blue.append((v, y))
        return from_blue(self.n, blue)

    def default_sets(self):
        return CycleSet.of(self.n), CycleSet.of(4)

    def claimed_bound(self) -> int:
        return classical_cycle_ramsey(self.n, 4)

def matchings(vertices: Sequence[int]) -> Iterator[tuple[Pair, ...]]:
    """Every matching (including the empty one) on ``vertices``."""
    vertices = list(vertices)
    if not vertices:
        yield ()
        return
    first, rest = vertices[0], vertices[1:]
    yield from matchings(rest)
    for i, partner in enumerate(rest):
        for m in matchings(rest[:i] + rest[i + 1:]):
            yield ((first, partner),) + m

def representative_matchings(index: int, n: int) -> Iterator[tuple[Pair, ...]]:
    """One matching per isomorphism type: j edges inside X, with y matched or not."""
    _, xs, y = g_vertices(n)
    if index == 2:
        # x_{n-2} matched to x_1, plus j further edges
        rest = xs[1:-1]
        for j in range(len(rest) // 2 + 1):
            yield ((xs[0], xs[-1]),) + tuple((rest[2 * i], rest[2 * i + 1]) for i in range(j))
        return
    for y_matched in (False, True):
        pool = xs[1:] if y_matched else xs
        head = ((xs[0], y),) if y_matched else ()
        for j in range(len(pool) // 2 + 1):
            yield head + tuple((pool[2 * i], pool[2 * i + 1]) for i in range(j))

def g_family_specs(n: int, index: Optional[int] = None, exhaustive: bool = True) -> Iterator[GFamily]:
    for i in (index,) if index else (1, 2, 3):
        source = matchings(matched_set(i, n)) if exhaustive else representative_matchings(i, n)
        for m in source:
            if i == 2 and not any(n - 2 in e for e in m):
                continue
            yield GFamily(i, n, m)

# --- construction, families, verification -----------------------------------

def build_witness(spec: WitnessSpec) -> RedBlueGraph:
    return spec.build()

def dedupe(graphs: Iterable[RedBlueGraph]) -> list[tuple[CanonicalKey, RedBlueGraph]]:
    """Distinct isomorphism classes, sorted by canonical key."""
    found: dict[CanonicalKey, RedBlueGraph] = {}
    for g in graphs:
        key, rep = canonical_form(g)
        found.setdefault(key, rep)
    return sorted(found.items())

def blue_bipartite_extremal_specs(n: int, k: int) -> list[WitnessSpec]:
    """All blue-bipartite extremal colourings for red girth n and blue even girth k."""
    if 2 * n > k and (n, k) != (3, 4):
        out: list[WitnessSpec] = [BipCase1(n, k, s) for s in range(k // 2)]
        out += [BipCase2(n, k, r) for r in (n - 3, n - 2) if r >= 0]
        return out
    if n == 3:
        counts = [c for c in (0, 1, 2) if not (c == 0 and k < 6)]
        return [EqualParts(3, c) for c in counts]
    return [EqualParts(n, 0), EqualParts(n, 1)]

FAMILIES = ("complete-bip-critical", "equal-parts", "g1", "g2", "g3", "g-families", "bip-case1", "bip-case2", "blue-bipartite-extremal")

def family_specs(name: str, n: int, k: Optional[int] = None, exhaustive: bool = True) -> list[WitnessSpec]:
    if name == "complete-bip-critical":
        return [CompleteBipCritical(n, False), CompleteBipCritical(n, True)]
    if name == "equal-parts":
        return [EqualParts(n, c) for c in range(3 if n == 3 else 2)]
    if name in ("g1", "g2", "g3"):
        return list(g_family_specs(n, int(name[1]), exhaustive))
    if name == "g-families":
        return list(g_family_specs(n, None, exhaustive))
    if k is None:
        raise WitnessError(f"family {name!r} needs k")
    if name == "bip-case1":
        return [BipCase1(n, k, s) for s in range(k // 2)]
    if name == "bip-case2":
        return [BipCase2(n, k, r) for r in (n - 3, n - 2) if r >= 0]
    if name == "blue-bipartite-extremal":
        return blue_bipartite_extremal_specs(n, k)
    raise WitnessError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")

def enumerate_family(name: str, n: int, k: Optional[int] = None) -> list[tuple[CanonicalKey, RedBlueGraph]]:
    """Every member of a family up to isomorphism (all matchings for the hub families)."""
    return dedupe(spec.build() for spec in family_specs(name, n, k, exhaustive=n <= 10))

@dataclass
class WitnessReport:
    spec: dict
    avoiding: bool
    vertex_count: int
    expected_vertex_count: int
    red_cycle: Optional[int] = None
    blue_cycle: Optional[int] = None
    blue_bipartite: bool = False
    sets: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.avoiding and self.vertex_count == self.expected_vertex_count

    def as_json(self) -> dict:
        return {
            "spec": self.spec,
            "sets": self.sets,
            "avoiding": self.avoiding,
            "vertex_count": self.vertex_count,
            "expected_vertex_count": self.expected_vertex_count,
            "red_cycle": self.red_cycle,
            "blue_cycle": self.blue_cycle,
            "blue_bipartite": self.blue_bipartite,
        }

def verify_witness(spec: WitnessSpec, gamma1: Optional[SetLike] = None, gamma2: Optional[SetLike] = None) -> WitnessReport:
    """Build ``spec`` and check it avoids the given sets (default: the sets it was built for)."""
    a0, b0 = spec.default_sets()
    a = as_cycle_set(gamma1) if gamma1 is not None else a0
    b = as_cycle_set(gamma2) if gamma2 is not None else b0
    g = spec.build()
    red = cycle_from_set(g, RED, a)
    blue = cycle_from_set(g, BLUE, b)
    return WitnessReport(
        spec=spec.describe(),
        avoiding=red is None and blue is None,
        vertex_count=g.n,
        expected_vertex_count=spec.claimed_bound() - 1,
        red_cycle=red,
        blue_cycle=blue,
        blue_bipartite=is_bipartite(g, BLUE) is not None,
        sets=[str(a), str(b)],
    )

def declared_specs(limit: int = 20) -> Iterator[WitnessSpec]:
    """Every extremal spec whose parameters are at most ``limit``."""
    yield Colouring1()
    yield Colouring2()
    yield Colouring3()
    for n in range(3, limit + 1):
        yield Colouring6(n)
        for c in range(3 if n == 3 else 2):
            yield EqualParts(n, c)
        if n >= 5:
            yield CompleteBipCritical(n, False)
            yield CompleteBipCritical(n, True)
        if n >= 6:
            yield from g_family_specs(n, None, exhaustive=False)
        for k in range(4, limit + 1, 2):
            if 2 * n >= k and (n, k) != (3, 4):
                yield Colouring4(n, k)
            if 2 * n > k and (n, k) != (3, 4):
                yield from blue_bipartite_extremal_specs(n, k)
    for k in range(3, limit + 1):
        yield Colouring5(k)

SPEC_TYPES: dict[str, type] = {
    cls.kind: cls
    for cls in (Colouring1, Colouring2, Colouring3, Colouring4, Colouring5, Colouring6,
                BipCase1, BipCase2, EqualParts, CompleteBipCritical, GFamily)
}

def spec_from_dict(kind: str, params: dict) -> WitnessSpec:
    """Inverse of :meth:`WitnessSpec.describe`."""
    try:
        cls = SPEC_TYPES[kind]
    except KeyError:
        raise WitnessError(f"unknown witness {kind!r}; choose from {', '.join(SPEC_TYPES)}") from None
    params = dict(params)
    if "matching" in params:
        params["matching"] = tuple(tuple(e) for e in params["matching"])
    if "minus_edge" in params and isinstance(params["minus_edge"], str):
        params["minus_edge"] = params["minus_edge"].lower() in ("1", "true", "yes")
    try:
        return cls(**params)
    except TypeError as exc:
        raise WitnessError(str(exc)) from None
