from .canon import (
    CanonicalKey,
    automorphism_group_order,
    canonical_form,
    canonical_key,
    canonical_labelling,
)
from .core import (
    BLUE,
    RED,
    Colour,
    RedBlueGraph,
    build,
    clique_exists,
    cycle_exists,
    cycle_from_set,
    cycle_spectrum,
    from_blue,
    is_avoiding,
    is_bipartite,
    is_pancyclic,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_lines, write_graph6_lines

__all__ = [
    "BLUE",
    "RED",
    "CanonicalKey",
    "Colour",
    "Graph6Error",
    "RedBlueGraph",
    "automorphism_group_order",
    "build",
    "canonical_form",
    "canonical_key",
    "canonical_labelling",
    "clique_exists",
    "cycle_exists",
    "cycle_from_set",
    "cycle_spectrum",
    "from_blue",
    "graph6_decode",
    "graph6_encode",
    "is_avoiding",
    "is_bipartite",
    "is_pancyclic",
    "read_graph6_lines",
    "write_graph6_lines",
]
