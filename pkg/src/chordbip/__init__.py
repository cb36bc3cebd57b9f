"""Recognition, connectivity and extremal search for chordal bipartite graphs."""

from .chordality import (
    EliminationOrder,
    find_chordless_cycle_ge6,
    find_peeo,
    is_bisimplicial,
    bisimplicial_edges,
    is_chordal_bipartite,
    oracle_is_chordal_bipartite,
    random_chordal_bipartite,
    recognize,
    verify_peeo,
)
from .connectivity import (
    all_vertex_cuts_up_to,
    components,
    cut_vertices,
    is_vertex_cut,
    minimum_vertex_cuts,
    s_components,
    vertex_connectivity,
)
from .graph import (
    Bipartition,
    Edge,
    Graph,
    bipartition,
    degree,
    eliminate_edge,
    is_complete_bipartite_between,
    min_degree,
    neighbors,
    parse_graph6,
    remove_vertices,
    to_graph6,
)

__version__ = "0.1.0"
