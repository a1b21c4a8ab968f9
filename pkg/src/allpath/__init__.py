"""Convexity over all simple paths of a graph, in linear time per query.

The fast path decomposes the graph into its block-cut tree and answers
membership, interval, hull, and the four convexity numbers from it.  The
oracle submodule re-derives everything by brute force on small graphs.
"""

from .blocks import BlockCutTree, EndBlockStats, decompose, end_block_stats, is_two_connected, to_dot
from .convexity import (
    ConvexityReport,
    PrunedTree,
    SetTooSmall,
    TrivialGraph,
    convexity_number,
    geodetic_iteration_number,
    hull,
    hull_number,
    interval,
    interval_number,
    is_convex,
    numbers,
    prune_tree,
)
from .generators import FAMILIES, GenSpec, InvalidSpec, SplitMix64, enumerate_small, generate
from .graph import (
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    Graph,
    GraphError,
    MalformedLine,
    SelfLoop,
    check_vertex_set,
    delete_vertices,
    neighbors_into,
    parse_edge_list,
    to_edge_list_text,
    validate_graph,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    hull_brute,
    interval_brute,
    is_convex_brute,
    numbers_brute,
)

__version__ = "0.1.0"
