"""Seeded Ising model of binary iris templates.

Binary templates live on an m x n spin lattice with circular row wrap.  A
seed pins a subset of sites; the remaining sites are sampled by Metropolis
dynamics under pair couplings (J_v, J_h), and templates are reconstructed by
majority vote over chain snapshots.  Companion statistics cover Hamming
matching (plain and rotation-minimized), match-rate curves, coupling grid
search, and binomial degrees-of-freedom fits of distance distributions.
"""

from .analysis import (
    BinomialFit,
    DistanceSample,
    GridCell,
    GridResult,
    binomial_fit,
    effective_dof,
    grid_search_j,
    match_rate,
    match_rate_curve,
    summarize,
)
from .lattice import (
    HORIZONTAL,
    VERTICAL,
    FullTemplate,
    LatticeGeometry,
    Seed,
    TemplatePart,
    disagreement_counts,
    edge_sums,
    hamming_distance,
    hamming_distance_min_rotation,
    neighbors,
    rotate_columns,
)
from .oracle import (
    EmpiricalDistribution,
    ExactDistribution,
    detailed_balance_audit,
    empirical_distribution,
    exact_distribution,
    total_variation,
)
from .reconstruct import (
    SeedSpec,
    aggregate,
    extract_seed,
    extract_seeds,
    reconstruct_full,
    reconstruct_part,
)
from .sampler import (
    ChainState,
    IsingParams,
    RecordingSchedule,
    flip_log_ratio,
    initial_template,
    metropolis_step,
    run_chain,
    unnormalized_log_prob,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialFit", "ChainState", "DistanceSample", "EmpiricalDistribution",
    "ExactDistribution", "FullTemplate", "GridCell", "GridResult",
    "HORIZONTAL", "IsingParams", "LatticeGeometry", "RecordingSchedule",
    "Seed", "SeedSpec", "TemplatePart", "VERTICAL", "aggregate",
    "binomial_fit", "detailed_balance_audit", "disagreement_counts",
    "edge_sums", "effective_dof", "empirical_distribution",
    "exact_distribution", "extract_seed", "extract_seeds", "flip_log_ratio",
    "grid_search_j", "hamming_distance", "hamming_distance_min_rotation",
    "initial_template", "match_rate", "match_rate_curve", "metropolis_step",
    "neighbors", "reconstruct_full", "reconstruct_part", "rotate_columns",
    "run_chain", "summarize", "total_variation", "unnormalized_log_prob",
]
