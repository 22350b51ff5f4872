"""Closed-form Ramsey numbers for pairs of cycle sets.

Everything here is a function of the four numbers (shortest cycle, shortest
even cycle) of each set, plus a handful of membership tests for lengths 3-5.
Infinite lengths are ``math.inf``; every threshold with a fraction in it is
compared after clearing denominators, so no division ever rounds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .cycleset import INF, CycleSet, ExtendedLen, as_cycle_set, contains, gamma, gamma_even

SetLike = Union[str, CycleSet]


def is_even(x: ExtendedLen) -> bool:
    return x != INF and x % 2 == 0


def is_odd(x: ExtendedLen) -> bool:
    return x != INF and x % 2 == 1


def _half(x: ExtendedLen) -> ExtendedLen:
    return INF if x == INF else x // 2


@dataclass(frozen=True)
class PairGammas:
    g1: int
    ge1: ExtendedLen
    g2: int
    ge2: ExtendedLen

    def __post_init__(self):
        for g, ge in ((self.g1, self.ge1), (self.g2, self.ge2)):
            if g < 3 or ge < g:
                raise ValueError(f"inconsistent gammas {g}, {ge}")
            if ge != INF and ge % 2:
                raise ValueError(f"shortest even length {ge} is odd")

    @classmethod
    def of(cls, gamma1: SetLike, gamma2: SetLike) -> "PairGammas":
        a, b = as_cycle_set(gamma1), as_cycle_set(gamma2)
        return cls(gamma(a), gamma_even(a), gamma(b), gamma_even(b))

    def swapped(self) -> "PairGammas":
        return PairGammas(self.g2, self.ge2, self.g1, self.ge1)

    def as_json(self) -> dict:
        def enc(x):
            return None if x == INF else int(x)

        return {"g1": self.g1, "ge1": enc(self.ge1), "g2": self.g2, "ge2": enc(self.ge2)}


def r_blue(g1: int, ge2: ExtendedLen) -> int:
    """Threshold over blue-bipartite colourings, from the red girth and blue even girth."""
    if (g1, ge2) == (3, 4):
        return 5
    return int(min(g1 + _half(ge2) - 1, 2 * g1 - 1))


def r_red(g2: int, ge1: ExtendedLen) -> int:
    return r_blue(g2, ge1)


def little_m(g: PairGammas) -> int:
    return max(
        5,
        int(min(g.g2 + _half(g.ge1) - 1, 2 * g.g2 - 1)),
        int(min(g.g1 + _half(g.ge2) - 1, 2 * g.g1 - 1)),
    )


def _both(gamma1: CycleSet, gamma2: CycleSet, k: int) -> bool:
    return contains(gamma1, k) and contains(gamma2, k)


def _either(gamma1: CycleSet, gamma2: CycleSet, k: int) -> bool:
    return contains(gamma1, k) or contains(gamma2, k)


def in_class_C(gamma1: SetLike, gamma2: SetLike) -> bool:
    """The exceptional pairs whose Ramsey number exceeds the bipartite bound by one."""
    a, b = as_cycle_set(gamma1), as_cycle_set(gamma2)
    shared_short = _both(a, b, 3) or _both(a, b, 4)
    return shared_short and not (_either(a, b, 3) and _either(a, b, 5))


def _c1_conditions(g: PairGammas) -> list[str]:
    """Which of the three red-side conditions hold (labels 'i', 'ii', 'iii')."""
    g1, ge1, g2, ge2 = g.g1, g.ge1, g.g2, g.ge2
    fired = []
    # (i) g2 even and g2 >= max(6, ge1), or g2 >= 3*ge1/2
    if (is_even(g2) and g2 >= max(6, ge1)) or 2 * g2 >= 3 * ge1:
        fired.append("i")
    # (ii) g1 odd, ge1 >= 2*g2, and (g2 even and g2 >= 2*g1/3, or g2 >= max(4, g1))
    if is_odd(g1) and ge1 >= 2 * g2 and ((is_even(g2) and 3 * g2 >= 2 * g1) or g2 >= max(4, g1)):
        fired.append("ii")
    # (iii) g2 > ge1 and ge2 = g2 + 1
    if g2 > ge1 and ge2 == g2 + 1:
        fired.append("iii")
    return fired


def in_C1(gamma1: SetLike, gamma2: SetLike) -> bool:
    return bool(_c1_conditions(PairGammas.of(gamma1, gamma2)))


def in_C2(gamma1: SetLike, gamma2: SetLike) -> bool:
    return bool(_c1_conditions(PairGammas.of(gamma1, gamma2).swapped()))


class Status(str, enum.Enum):
    EXACT = "Exact"
    CONJECTURED_LOWER_BOUND = "ConjecturedLowerBound"


@dataclass(frozen=True)
class RamseyVerdict:
    value: int
    status: Status
    basis: str
    gammas: PairGammas

    @property
    def exact(self) -> bool:
        return self.status is Status.EXACT

    def as_json(self) -> dict:
        return {
            "value": self.value,
            "status": self.status.value,
            "basis": self.basis,
            "gammas": self.gammas.as_json(),
        }


def _short_cycle_basis(a: CycleSet, b: CycleSet, g: PairGammas) -> str:
    """Name of the case that settles a pair whose shorter girth is at most 6."""
    if _both(a, b, 3) or _both(a, b, 4):
        return "shared-c3-or-c4"
    lo, hi = sorted((g.g1, g.g2))
    if (lo, hi) == (3, 4):
        return "c4-against-c3"
    if lo == 3:
        return "c3-bipartite"
    if lo == 4:
        return "c4-against-long"
    if (lo, hi) == (5, 5):
        return "c5-against-c5"
    if lo == 5:
        return "c5-against-long"
    return "c6-against-long"


def generalized_ramsey(gamma1: SetLike, gamma2: SetLike) -> RamseyVerdict:
    """Lower bound from the bipartite thresholds, marked exact where it is proved."""
    a, b = as_cycle_set(gamma1), as_cycle_set(gamma2)
    g = PairGammas.of(a, b)
    m = little_m(g)
    if in_class_C(a, b):
        return RamseyVerdict(m + 1, Status.EXACT, "class-C-plus-one", g)
    if min(g.g1, g.g2) <= 6:
        return RamseyVerdict(m, Status.EXACT, _short_cycle_basis(a, b, g), g)
    red_side = _c1_conditions(g)
    if red_side:
        return RamseyVerdict(m, Status.EXACT, "red-threshold-" + "+".join(red_side), g)
    blue_side = _c1_conditions(g.swapped())
    if blue_side:
        return RamseyVerdict(m, Status.EXACT, "blue-threshold-" + "+".join(blue_side), g)
    return RamseyVerdict(m, Status.CONJECTURED_LOWER_BOUND, "conjectured-equality", g)


# --- classical numbers -------------------------------------------------------


class DeltaClass(str, enum.Enum):
    SPECIAL = "Special33or44"
    DELTA1 = "Delta1"
    DELTA2 = "Delta2"
    DELTA3 = "Delta3"


def delta_class(n: int, k: int) -> DeltaClass:
    """Parity/ratio class of (n, k), n >= k >= 3; on the overlap n = 3k/2 (n odd) DELTA1 wins."""
    if not n >= k >= 3:
        raise ValueError(f"need n >= k >= 3, got ({n}, {k})")
    if (n, k) in ((3, 3), (4, 4)):
        return DeltaClass.SPECIAL
    if k % 2 == 1:
        return DeltaClass.DELTA3
    if (n % 2 == 0 and n >= 6) or 2 * n >= 3 * k:
        return DeltaClass.DELTA1
    return DeltaClass.DELTA2


def classical_cycle_ramsey(n: int, k: int) -> int:
    """R(C_n, C_k) for n >= k >= 3."""
    cls = delta_class(n, k)
    if cls is DeltaClass.SPECIAL:
        return 6
    if cls is DeltaClass.DELTA1:
        return n + k // 2 - 1
    if cls is DeltaClass.DELTA2:
        return 2 * k - 1
    return 2 * n - 1


class CliqueKind(str, enum.Enum):
    UP_TO = "UpTo"
    AT_LEAST = "AtLeast"


def cycle_vs_clique(kind: Union[CliqueKind, str], m: int, n: int) -> int:
    """Cycles of length <= m (UpTo) or >= m (AtLeast) in red against a blue K_n."""
    kind = CliqueKind(kind)
    if kind is CliqueKind.UP_TO:
        if not m > n >= 2:
            raise ValueError(f"need m > n >= 2, got m={m}, n={n}")
        return 2 * n if m < 2 * n - 1 else 2 * n - 1
    if m < 3 or n < 2:
        raise ValueError(f"need m >= 3 and n >= 2, got m={m}, n={n}")
    return (m - 1) * (n - 1) + 1

