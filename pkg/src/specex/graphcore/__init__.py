"""Graph representation, family constructors, canonical forms and graph6."""

from .canon import (
    CanonicalForm,
    automorphism_orbits,
    canonical_graph,
    canonical_label,
    is_isomorphic,
)
from .families import (
    CliqueTreeSpec,
    balanced_sizes,
    blowup,
    clique_path,
    clique_path_spec,
    clique_star,
    clique_star_spec,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
    turan_union,
)
from .graph import (
    Graph,
    bits,
    complement,
    components,
    cut_vertices,
    disjoint_union,
    is_bipartite,
    is_connected,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode

__all__ = [
    "CanonicalForm",
    "CliqueTreeSpec",
    "Graph",
    "Graph6Error",
    "automorphism_orbits",
    "balanced_sizes",
    "bits",
    "blowup",
    "canonical_graph",
    "canonical_label",
    "clique_path",
    "clique_path_spec",
    "clique_star",
    "clique_star_spec",
    "complement",
    "complete_graph",
    "components",
    "cut_vertices",
    "cycle_graph",
    "disjoint_union",
    "graph6_decode",
    "graph6_encode",
    "is_bipartite",
    "is_connected",
    "is_isomorphic",
    "path_graph",
    "star_graph",
    "turan_union",
]
