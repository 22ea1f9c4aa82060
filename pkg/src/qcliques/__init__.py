"""Community analysis on sparse graphs via exact maximal quasi-clique
enumeration, with modularity scoring as the baseline for comparison, plus
seeded synthetic generators and stable serialization formats."""

from .graph import (
    Graph,
    SubgraphStats,
    VertexSubset,
    build_graph,
    core_decomposition,
    degree_extremes,
    graph_density,
    induced_stats,
    neighbors,
    normalize_subset,
)
from .cliques import (
    CommunitySet,
    brute_force_maximal_cliques,
    enumerate_maximal_cliques,
    iter_maximal_cliques,
)
from .metrics import (
    ModularityReport,
    Partition,
    QuasiCliqueParams,
    cover_to_partition,
    degenerate_partitions,
    exact_fraction,
    is_quasi_clique,
    modularity,
    modularity_value,
    partition_from_blocks,
)
from .quasi import (
    SweepCell,
    brute_force_quasi_cliques,
    enumerate_maximal_quasi_cliques,
    is_locally_maximal,
    sweep,
)
from .generate import (
    GeneratorOutput,
    configuration_model,
    gnp,
    planted_quasi_clique,
    regenerate,
    ring_of_cliques,
)
from .graphio import (
    identity_labels,
    read_communities,
    read_edge_list,
    read_graph,
    read_partition,
    write_communities,
    write_graph,
    write_partition,
)

__version__ = "0.1.0"
