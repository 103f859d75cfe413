"""Regularity and v-number of edge ideals of finite simple graphs.

The public surface re-exported here covers the common workflow; the
submodules hold the full API.
"""
from .enumeration import canonical_form, connected_graphs, read_graph6_stream
from .errors import EdgeIdealError, FormatError, InvalidParams, NoEdges, NotCameronWalker
from .families import (
    build_case1_tree,
    build_case2_chordal,
    build_cw,
    build_cw_witness,
    build_rv_witness,
    build_whisker,
    build_whisker_witness,
)
from .graph import Graph, emit_graph6, from_edges, members, parse_graph6, vset
from .homology import independence_complex, reduced_homology, regularity, regularity_hochster
from .invariants import (
    edge_domination_number,
    forced_p3_triples,
    independence_number,
    induced_matching_number,
    invariant_record,
    matching_number,
    v_number,
)
from .recognition import cw_decomposition, is_cameron_walker, is_chordal, whisker_decomposition
from .rv_sets import (
    LatticeSet,
    empirical_rv,
    formula_A,
    formula_B,
    formula_conjecture_chordal,
    formula_RV_CW,
    formula_RV_W,
)

__version__ = "0.1.0"
