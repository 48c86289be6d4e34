"""Majority colorings of digraphs: verifiers, exact oracles, constructive
procedures, randomized fractional colorings, and the hardness reduction."""

from .digraph import (Digraph, UndirectedGraph, VertexPartition,
                      degeneracy_order, has_odd_dicycle, strong_components,
                      topological_order, underlying_graph)
from .verify import (HALF, FractionalColoring, MajorityParam, is_popular,
                     is_stable, verify_fractional, verify_fractional_exact,
                     verify_majority)
from .exact import (StableSetFamily, enumerate_stable_sets,
                    exact_fractional_weight, exact_list_majority,
                    exact_majority_colorable, exact_od3_choice, hyp2col_exact,
                    solve_cover_lp)
from .construct import (alpha_majority_dichrom2, color_acyclic_alpha,
                        list_majority2, majority2_no_odd_cycles,
                        majority3_choose, majority3_from_odd_partition,
                        od3_choose, partition_chromatic6,
                        partition_dichromatic)
from .fractional import (SamplerParams, binomial_tail_check,
                         case_lower_bounds, estimate_highdeg_inclusion,
                         estimate_nonpopular_inclusion,
                         fractional_from_samples, highdeg_probability,
                         sample_X_4c, sample_X_highdeg)
from .hardness import (GadgetLayout, HypergraphInstance, build_d9,
                       check_d9_observation, d9_extends, pull_back_coloring,
                       reduce_hypergraph)
from .generators import gen_circulant, gen_gnp, gen_regular, gen_tournament
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Digraph", "UndirectedGraph", "VertexPartition", "degeneracy_order",
    "has_odd_dicycle", "strong_components", "topological_order",
    "underlying_graph",
    "HALF", "FractionalColoring", "MajorityParam", "is_popular", "is_stable",
    "verify_fractional", "verify_fractional_exact", "verify_majority",
    "StableSetFamily", "enumerate_stable_sets", "exact_fractional_weight",
    "exact_list_majority", "exact_majority_colorable", "exact_od3_choice",
    "hyp2col_exact", "solve_cover_lp",
    "alpha_majority_dichrom2", "color_acyclic_alpha", "list_majority2",
    "majority2_no_odd_cycles", "majority3_choose",
    "majority3_from_odd_partition", "od3_choose", "partition_chromatic6",
    "partition_dichromatic",
    "SamplerParams", "binomial_tail_check", "case_lower_bounds",
    "estimate_highdeg_inclusion", "estimate_nonpopular_inclusion",
    "fractional_from_samples", "highdeg_probability", "sample_X_4c",
    "sample_X_highdeg",
    "GadgetLayout", "HypergraphInstance", "build_d9", "check_d9_observation",
    "d9_extends", "pull_back_coloring", "reduce_hypergraph",
    "gen_circulant", "gen_gnp", "gen_regular", "gen_tournament",
    "errors",
]
