"""Sets of cycle lengths and the small text language used to write them down.

A cycle set is a finite collection of explicit lengths plus any number of
"tails": every length from some minimum upward, optionally restricted to one
parity.  That covers all cycles, odd cycles, even cycles, bounded families
and their unions.

Grammar (comma separated atoms)::

    atom := INT | "<=" INT | ">=" INT [":" ("odd" | "even")]
          | "odd" | "even" | "all"

Braces around the whole text are accepted and ignored, so ``{3,5}`` and
``3,5`` denote the same set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Union

INF = math.inf
ExtendedLen = Union[int, float]  # a cycle length, or INF

PARITIES = ("any", "odd", "even")


class CycleSetSyntaxError(ValueError):
    """Raised for malformed cycle-set text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def _normalize_tail(min_len: int, parity: str) -> tuple[int, str]:
    if parity == "odd" and min_len % 2 == 0:
        min_len += 1
    elif parity == "even" and min_len % 2 == 1:
        min_len += 1
    return min_len, parity


@dataclass(frozen=True)
class CycleSet:
    atoms: frozenset[int] = frozenset()
    tails: frozenset[tuple[int, str]] = frozenset()

    def __post_init__(self):
        for k in self.atoms:
            if k < 3:
                raise ValueError(f"cycle length {k} is below 3")
        norm = set()
        for min_len, parity in self.tails:
            if parity not in PARITIES:
                raise ValueError(f"unknown parity {parity!r}")
            if min_len < 3:
                raise ValueError(f"tail start {min_len} is below 3")
            norm.add(_normalize_tail(min_len, parity))
        object.__setattr__(self, "tails", frozenset(norm))
        object.__setattr__(self, "atoms", frozenset(self.atoms))
        if not self.atoms and not self.tails:
            raise ValueError("a cycle set must be non-empty")

    @classmethod
    def of(cls, *lengths: int) -> "CycleSet":
        return cls(atoms=frozenset(lengths))

    @classmethod
    def at_least(cls, m: int, parity: str = "any") -> "CycleSet":
        return cls(tails=frozenset({(m, parity)}))

    @classmethod
    def at_most(cls, m: int) -> "CycleSet":
        return cls(atoms=frozenset(range(3, m + 1)))

    def __contains__(self, k: int) -> bool:
        return contains(self, k)

    def union(self, other: "CycleSet") -> "CycleSet":
        return CycleSet(self.atoms | other.atoms, self.tails | other.tails)

    __or__ = union

    @property
    def is_finite(self) -> bool:
        return not self.tails

    def members(self, upto: int) -> list[int]:
        """Members in ``[3, upto]`` in increasing order."""
        return [k for k in range(3, upto + 1) if contains(self, k)]

    def mask(self, upto: int) -> int:
        """Bit ``k`` set iff ``k`` is a member, for ``k <= upto``."""
        m = 0
        for k in self.members(upto):
            m |= 1 << k
        return m

    def max_relevant(self) -> int:
        """Past this length membership is periodic with period 2."""
        bound = max(self.atoms, default=3)
        for min_len, _ in self.tails:
            bound = max(bound, min_len)
        return bound

    def agrees_on(self, other: "CycleSet", upto: int) -> bool:
        return self.mask(upto) == other.mask(upto)

    def __str__(self) -> str:
        return format_cycle_set(self)


def contains(gamma: CycleSet, k: int) -> bool:
    if k < 3:
        raise ValueError(f"cycle length {k} is below 3")
    if k in gamma.atoms:
        return True
    for min_len, parity in gamma.tails:
        if k >= min_len and (parity == "any" or (parity == "odd") == (k % 2 == 1)):
            return True
    return False


def gamma(cs: CycleSet) -> int:
    """Least member."""
    best = min(cs.atoms, default=INF)
    for min_len, _ in cs.tails:
        best = min(best, min_len)
    return int(best)


def gamma_even(cs: CycleSet) -> ExtendedLen:
    """Least even member, or INF when there is none."""
    best: ExtendedLen = min((k for k in cs.atoms if k % 2 == 0), default=INF)
    for min_len, parity in cs.tails:
        if parity == "odd":
            continue
        first = min_len if min_len % 2 == 0 else min_len + 1
        best = min(best, first)
    return best


# --- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(<=|>=|\d+|odd|even|all|:|,)\s*")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise CycleSetSyntaxError("unexpected character", text, pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_cycle_set(text: str) -> CycleSet:
    """Parse the textual form described in the module docstring."""
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("{"):
        if not body.endswith("}"):
            raise CycleSetSyntaxError("unbalanced brace", text, offset + len(body))
        body = body[1:-1]
        offset += 1
    tokens = _tokenize(body)
    if not tokens:
        raise CycleSetSyntaxError("empty cycle set", text, offset)

    atoms: set[int] = set()
    tails: set[tuple[int, str]] = set()
    i = 0

    def expect_int() -> int:
        nonlocal i
        if i >= len(tokens) or not tokens[i][0].isdigit():
            where = tokens[i][1] if i < len(tokens) else len(body)
            raise CycleSetSyntaxError("expected an integer", text, offset + where)
        value, where = int(tokens[i][0]), tokens[i][1]
        if value < 3:
            raise CycleSetSyntaxError(f"cycle length {value} is below 3", text, offset + where)
        i += 1
        return value

    while True:
        tok, where = tokens[i]
        if tok.isdigit():
            atoms.add(expect_int())
        elif tok == "<=":
            i += 1
            atoms.update(range(3, expect_int() + 1))
        elif tok == ">=":
            i += 1
            m = expect_int()
            parity = "any"
            if i < len(tokens) and tokens[i][0] == ":":
                i += 1
                if i >= len(tokens) or tokens[i][0] not in ("odd", "even"):
                    where = tokens[i][1] if i < len(tokens) else len(body)
                    raise CycleSetSyntaxError("expected 'odd' or 'even'", text, offset + where)
                parity = tokens[i][0]
                i += 1
            tails.add((m, parity))
        elif tok == "odd":
            tails.add((3, "odd"))
            i += 1
        elif tok == "even":
            tails.add((4, "even"))
            i += 1
        elif tok == "all":
            tails.add((3, "any"))
            i += 1
        else:
            raise CycleSetSyntaxError(f"unexpected {tok!r}", text, offset + where)
        if i == len(tokens):
            break
        if tokens[i][0] != ",":
            raise CycleSetSyntaxError("expected ','", text, offset + tokens[i][1])
        i += 1
        if i == len(tokens):
            raise CycleSetSyntaxError("trailing ','", text, offset + len(body))

    return CycleSet(frozenset(atoms), frozenset(tails))


def format_cycle_set(cs: CycleSet) -> str:
    """Canonical text; ``parse_cycle_set(format_cycle_set(cs))`` denotes ``cs``."""
    parts = [str(k) for k in sorted(cs.atoms)]
    for min_len, parity in sorted(cs.tails):
        parts.append(f">={min_len}" if parity == "any" else f">={min_len}:{parity}")
    return "{" + ",".join(parts) + "}"


def as_cycle_set(value: Union[str, CycleSet, Iterable[int]]) -> CycleSet:
    if isinstance(value, CycleSet):
        return value
    if isinstance(value, str):
        return parse_cycle_set(value)
    return CycleSet(atoms=frozenset(value))


# Named families.
ALL_CYCLES = CycleSet.at_least(3)
ODD_CYCLES = CycleSet.at_least(3, "odd")
EVEN_CYCLES = CycleSet.at_least(4, "even")
