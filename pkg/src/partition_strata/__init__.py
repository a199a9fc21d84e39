"""Simplex stratification of partition graphs, computed exactly."""

from .capacity import (
    CapacityProfile,
    capacity_profile,
    dim_loc_capacity,
    full_star_simplex,
    full_top_simplex,
    star_capacity,
    top_capacity,
)
from .cliques import InducedSubgraph, clique_number, dim_loc_clique
from .errors import ConsistencyError, InvalidArgument
from .graph import PartitionGraph, build_graph, neighbors_by_corners, neighbors_by_multiset
from .partitions import (
    Cell,
    CornerSets,
    Partition,
    conjugate,
    corners,
    enumerate_partitions,
    one_cell_extensions,
    partition_count,
    staircase,
    transfer,
)
from .strata import (
    BoundarySets,
    InterfaceGraph,
    Stratification,
    ThresholdTable,
    boundaries,
    interface_graph,
    layer,
    layer_ge,
    scan_thresholds,
    stratify,
)
from .traces import Region, axis, boundary_trace, framework, layer_trace

__version__ = "0.1.0"
