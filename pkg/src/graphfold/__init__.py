"""graphfold: graph reducibility solving, enumeration, and puzzle levels.

A graph is *reducible* when some self-map of its vertices vacates at least
one vertex, moves every vertex only within its closed neighborhood, and keeps
adjacent vertices adjacent-or-equal.  This package decides that property,
fully reduces graphs, enumerates all connected irreducible graphs through
9 vertices (OEIS A248571), and generates verified puzzle levels whose win
condition is exactly the reduction test.
"""

from .graphs import (
    Graph,
    are_isomorphic,
    closed_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_connected,
    path_graph,
    permute,
)
from .graph6 import Graph6Error, decode as graph6_decode, encode as graph6_encode
from .pixels import AdjacencyMode, PixelImage, from_pixels, load_points, pappy
from .reduction import (
    ReductionMap,
    ReductionReport,
    ReductionVerdict,
    diagnose_reduction,
    enumerate_reductions,
    find_reduction,
    is_reducible,
    reduce_fully,
    reduce_step,
    verify_reduction,
)
from .canonical import canonical_form, canonical_graph
from .catalog import (
    CatalogEntry,
    ClassifyResult,
    classify,
    classify_stream,
    connected_class_keys,
    enumerate_connected,
    export_catalog,
    verify_catalog,
)
from .levels import (
    Level,
    Placement,
    SolutionRecord,
    SolutionStore,
    WinCheck,
    check_win,
    conformance_fixtures,
    generate_levels,
    layout,
    level_from_pixels,
    read_levels,
    write_levels,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMode",
    "CatalogEntry",
    "ClassifyResult",
    "Graph",
    "Graph6Error",
    "Level",
    "PixelImage",
    "Placement",
    "ReductionMap",
    "ReductionReport",
    "ReductionVerdict",
    "SolutionRecord",
    "SolutionStore",
    "WinCheck",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "check_win",
    "classify",
    "classify_stream",
    "closed_neighborhood",
    "complete_graph",
    "conformance_fixtures",
    "connected_class_keys",
    "connected_components",
    "cycle_graph",
    "diagnose_reduction",
    "disjoint_union",
    "enumerate_connected",
    "enumerate_reductions",
    "export_catalog",
    "find_reduction",
    "from_pixels",
    "generate_levels",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "is_connected",
    "is_reducible",
    "layout",
    "level_from_pixels",
    "load_points",
    "pappy",
    "path_graph",
    "permute",
    "read_levels",
    "reduce_fully",
    "reduce_step",
    "verify_catalog",
    "verify_reduction",
    "write_levels",
]
