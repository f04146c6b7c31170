"""c-strong hypergraph colouring toolkit."""

from .hypergraph import (
    Hypergraph,
    HypergraphViolation,
    InvalidHypergraph,
    Link,
    PropertyViolation,
    SizeGuardExceeded,
    Sunflower,
    find_sunflower,
    find_violation,
    hypergraph_from_dict,
    hypergraph_to_dict,
    is_t_intersecting,
    link,
    max_matching_at_least,
    small_edges,
    sunflower_violation,
    validate,
)
from .colouring import (
    Colouring,
    FailingEdge,
    StrongColourCert,
    chi_link,
    chi_strong,
    chi_strong_bruteforce,
    colouring_from_dict,
    colouring_to_dict,
    is_c_strong,
    product_colouring,
    rainbow_forced,
)
from .structures import (
    Bromeliad,
    BromeliadViolation,
    RegionPartition,
    SplitCheck,
    SplitDegenerateSeq,
    bromeliad_witness,
    compatible_with,
    crown_compare,
    find_bromeliad,
    is_k_split_degenerate,
    red_clique_to_bromeliad,
    regions,
    subsequence_check,
    triple_classify,
)
from .procedures import (
    DiagonalContradiction,
    ExtensionOutcome,
    LinkExtensionResult,
    PetalColouringResult,
    PruneOutcome,
    TraceParams,
    TraceResult,
    TraceStep,
    best_link_extension_colouring,
    extend_split_degenerate,
    prune,
    prune_trace,
    regional_colouring,
    sunflower_petal_colouring,
)
from .generators import (
    CoordinatePairSpec,
    complete_uniform,
    coordinate_pair_family,
    coordinate_pair_link_colouring,
    kernel_augmented,
    random_t_intersecting,
    sunflower_gen,
)

__all__ = [name for name in dir() if not name.startswith("_")]
