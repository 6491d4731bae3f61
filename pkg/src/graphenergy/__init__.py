"""Toolkit for finding and verifying graphs with extremal adjacency energy."""

from .completion import (
    CompletionCandidate,
    EmptySelectionError,
    InfeasibleError,
    KnownFamily,
    NoUnknownsError,
    best_candidates,
    complete_spectrum,
    derive_constants,
    third_moment_test,
)
from .graph6 import Graph6Error, UnsupportedGraph6Error, decode, encode
from .graphs import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    construct,
    cycle,
    disjoint_union,
    line_graph,
    path,
    star,
    union_of_cycles,
)
from .search import (
    Budget,
    FoundGraph,
    SearchResult,
    SearchSpec,
    bitmask_class_count,
    bitmask_classes,
    bitmask_extremal_energy,
    cycle_partition_spectrum,
    enumerate_graphs,
    extremal_energy,
    partitions_min_part,
    realize_spectrum,
)
from .spectra import (
    PHI,
    EnergyReport,
    Spectrum,
    complement_spectrum_regular,
    cycle_spectrum,
    eigenvalues,
    energy,
    energy_report,
    graph_energy,
    is_bipartite_spectral,
    is_regular,
    koolen_moulton_bound,
    spectral_moment,
)

__version__ = "0.1.0"
