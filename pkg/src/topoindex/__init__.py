"""Mean-based degree indices of graphs, centred on the harmonic-arithmetic index."""

from .enumeration import (
    enumerate_connected_graphs,
    enumerate_free_trees,
    fig1_tree,
    is_min_family,
    make_path,
    make_star,
)
from .graph import (
    DegreeVector,
    EdgePartition,
    SimpleGraph,
    canonical_code,
    degree_vector,
    edge_partition,
    is_tree,
    parse_edge_list,
)
from .indices import (
    BUILTINS,
    IndexSpec,
    evaluate_index,
    gamma_ha,
    ha_index,
    ha_via_reduction,
    phi_ha,
)
from .mean_dsl import classify, eval_phi, format_phi, parse_phi, phi_table

__version__ = "0.1.0"
