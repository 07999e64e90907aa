"""Recognition, decomposition, and exact optimization for graph classes
excluding Truemper configurations (thetas, pyramids, prisms, wheels)."""

from .chordal import (
    NotChordalError,
    chordal_color,
    chordal_mwc,
    chordal_mwss,
    is_chordal,
    simplicial_order,
)
from .classes import (
    NotInClassError,
    Recognition,
    color_gu,
    color_gutcap,
    double_star_cutset_from_cap,
    mwc_gt,
    mwc_mwss_gu,
    mwc_mwss_gutcap,
    mwss_gt,
    recognize_bu_h,
    recognize_gt,
    recognize_gu,
    recognize_gut,
    recognize_gutcap,
)
from .decomposition import (
    DecompositionTree,
    build_tree,
    find_clique_cutset,
    glue,
    solve_coloring,
    solve_mwc,
    solve_mwss,
)
from .detectors import (
    Certificate,
    check_certificate,
    find_cap,
    find_long_hole,
    find_small_obstruction,
)
from .generators import (
    GenSpec,
    gen_chordal,
    gen_class_member,
    gen_hyperantihole,
    gen_hyperhole,
    gen_ring,
    generate_from_spec,
)
from .graphs import Coloring, Graph, WeightedGraph, is_proper_coloring
from .io import ParseError, format_graph, parse_graph
from .rings import (
    GoodPartition,
    hyperhole_color,
    hyperhole_mwc_mwss,
    recognize_hyperantihole,
    recognize_hyperhole,
    recognize_ring,
    verify_good_partition,
    weighted_cycle_color,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Coloring",
    "DecompositionTree",
    "GenSpec",
    "GoodPartition",
    "Graph",
    "NotChordalError",
    "NotInClassError",
    "ParseError",
    "Recognition",
    "WeightedGraph",
    "build_tree",
    "check_certificate",
    "chordal_color",
    "chordal_mwc",
    "chordal_mwss",
    "color_gu",
    "color_gutcap",
    "double_star_cutset_from_cap",
    "find_cap",
    "find_clique_cutset",
    "find_long_hole",
    "find_small_obstruction",
    "format_graph",
    "gen_chordal",
    "gen_class_member",
    "gen_hyperantihole",
    "gen_hyperhole",
    "gen_ring",
    "generate_from_spec",
    "glue",
    "hyperhole_color",
    "hyperhole_mwc_mwss",
    "is_chordal",
    "is_proper_coloring",
    "mwc_gt",
    "mwc_mwss_gu",
    "mwc_mwss_gutcap",
    "mwss_gt",
    "parse_graph",
    "recognize_bu_h",
    "recognize_gt",
    "recognize_gu",
    "recognize_gut",
    "recognize_gutcap",
    "recognize_hyperantihole",
    "recognize_hyperhole",
    "recognize_ring",
    "simplicial_order",
    "solve_coloring",
    "solve_mwc",
    "solve_mwss",
    "verify_good_partition",
    "weighted_cycle_color",
]
