"""Exhaustive search over red-blue colourings."""

from .engine import Budget, Constraint, SearchConfig, SearchUndecided
from .oracle import (
    ABOVE_CAP,
    CharacterizationReport,
    EnumerationResult,
    all_graphs,
    blue_bipartite_avoiding,
    check_characterization,
    compare_keys,
    enumerate_avoiding,
    enumerate_critical,
    exists_avoiding,
    r_blue_oracle,
    ramsey_oracle,
)

__all__ = [
    "ABOVE_CAP",
    "Budget",
    "CharacterizationReport",
    "Constraint",
    "EnumerationResult",
    "SearchConfig",
    "SearchUndecided",
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
