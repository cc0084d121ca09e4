"""Polynomial-delay enumeration of large maximal common independent sets
of two matroids, large maximal matroid matchings, ranked enumeration, and
the reductions built on them."""

from .exchange import (
    AugmentingPath,
    ExchangeDigraph,
    augment,
    build_exchange_digraph,
    complete_to_maximal,
    maximum_common_independent_set,
    shortest_augmenting_path,
)
from .applications import (
    build_cvc_instance,
    encode_b_matching,
    encode_colorful_forest,
    encode_degree_constrained,
    enumerate_min_cvc,
)
from .intersection import (
    ExtensionInstance,
    ReverseSearchState,
    children,
    enumerate_large,
    enumerate_maximum,
    extension_feasible,
    neighbourhood_violations,
    parent,
)
from .matching import (
    TractablePair,
    encode_intersection,
    enumerate_large_matchings,
    enumerate_maximum_matchings,
    is_matching,
    matching_extension_feasible,
    matching_parent,
)
from .matroids import (
    BasesMatroid,
    CographicMatroid,
    ContractError,
    FreeMatroid,
    GraphicMatroid,
    InputError,
    LinearMatroidGF2,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    check_axioms,
    contract,
    delete,
    fundamental_circuit,
    greedy_base,
    rank,
    restrict,
)
from .ranked import ThresholdAlgorithm, ranked_common_independent, ranked_enumerate, ranked_matchings
from .stats import EnumerationStats

__version__ = "0.1.0"
