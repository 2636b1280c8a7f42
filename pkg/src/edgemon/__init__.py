"""Weighted edge monitoring: exact solvers per graph class, approximation
schemes, hardness reductions, seeded generators, and a brute-force oracle
that cross-checks everything."""

from .core import (
    BudgetExceeded,
    DominationPredicates,
    GenerationError,
    Graph,
    InputError,
    Instance,
    ParseError,
    Solution,
    domination_predicates,
    feasibility_precheck,
    is_monitoring_set,
    max_demand,
    monitor_table,
    monitors,
)
from .oracle import (
    SearchBudget,
    exact_double_dom,
    exact_gamma_m,
    exact_gamma_t,
    exact_vertex_cover,
    exists_independent_set,
    minimum_weight_cover,
)
from .complete import (
    fpt_monitoring_complete,
    gamma_bounds,
    ptas_complete,
    solve_complete_cbounded,
    solve_complete_uniform,
)
from .blocks import BlockCutTree, block_cut_tree, solve_block
from .intervals import (
    IntervalRealization,
    NicePathDecomposition,
    nice_path_decomposition,
    representant,
    solve_interval,
    unit_interval_bound_check,
)
from .cographs import Cotree, cotree_build, gamma_t_cograph, solve_cograph
from .reductions import (
    reduce_bip_tds_to_comparability,
    reduce_is_to_em,
    reduce_planar_vc_to_udg,
    reduce_tds_to_em,
    split_gamma_m,
    split_partition,
)
from .planar import Layering, bfs_layering, ptas_planar, solve_band
from .generators import (
    SplitMix64,
    gen_block_graph,
    gen_cograph,
    gen_complete,
    gen_interval,
    gen_planar,
    gen_split,
    gen_unit_disk,
)
from .textio import InstanceDocument, format_instance_text, parse_instance_text

__all__ = [
    "BlockCutTree",
    "BudgetExceeded",
    "Cotree",
    "DominationPredicates",
    "GenerationError",
    "Graph",
    "InputError",
    "Instance",
    "InstanceDocument",
    "IntervalRealization",
    "Layering",
    "NicePathDecomposition",
    "ParseError",
    "SearchBudget",
    "Solution",
    "SplitMix64",
    "bfs_layering",
    "block_cut_tree",
    "cotree_build",
    "domination_predicates",
    "exact_double_dom",
    "exact_gamma_m",
    "exact_gamma_t",
    "exact_vertex_cover",
    "exists_independent_set",
    "feasibility_precheck",
    "format_instance_text",
    "fpt_monitoring_complete",
    "gamma_bounds",
    "gamma_t_cograph",
    "gen_block_graph",
    "gen_cograph",
    "gen_complete",
    "gen_interval",
    "gen_planar",
    "gen_split",
    "gen_unit_disk",
    "is_monitoring_set",
    "max_demand",
    "minimum_weight_cover",
    "monitor_table",
    "monitors",
    "nice_path_decomposition",
    "parse_instance_text",
    "ptas_complete",
    "ptas_planar",
    "reduce_bip_tds_to_comparability",
    "reduce_is_to_em",
    "reduce_planar_vc_to_udg",
    "reduce_tds_to_em",
    "representant",
    "solve_band",
    "solve_block",
    "solve_cograph",
    "solve_complete_cbounded",
    "solve_complete_uniform",
    "solve_interval",
    "split_gamma_m",
    "split_partition",
    "unit_interval_bound_check",
]
