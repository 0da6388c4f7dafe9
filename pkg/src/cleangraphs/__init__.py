"""Simplicial cliques in clean graphs: recognizers, the edge-dome algorithm,
brute-force oracles and fixtures."""

from .graph_core import (
    Graph,
    build_graph,
    find_induced_path,
    is_anticomplete_between,
    is_clique,
    is_complete_between,
)
from .recognizers import (
    Hole,
    HoleNeighbourOutcome,
    HoleNeighbourTag,
    Obstruction,
    ObstructionKind,
    SearchBudgetExceeded,
    chordal_elimination_order,
    classify_hole_neighbours,
    enumerate_holes,
    find_claw,
    find_clean_obstruction,
    find_simplicial_vertex,
    has_even_hole,
    is_clean,
)
from .simplicial import (
    Dome,
    EdgeDome,
    SimplicialCliqueResult,
    SimplicialVertex,
    candidate_descriptors,
    check_hole_dome_property,
    dome,
    find_simplicial_clique,
    is_simplicial_clique,
    x_set,
)

__version__ = "0.1.0"
