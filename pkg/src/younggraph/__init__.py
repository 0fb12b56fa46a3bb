"""Exact combinatorics of the Young graph.

Partitions and dominance order, tableau-count dimensions, exact measures and
their level projections, stochastic dominance with coupling witnesses, Schur
and Hall-Littlewood evaluations, boundary parameters and the coherent growth
sampler.  All core arithmetic is exact (arbitrary-precision integers and
rationals); floating point appears only in an explicitly requested sampler
mode and in CSV convenience columns.
"""

from .partitions import (
    BoxMove,
    MoveQuadruple,
    Partition,
    addable_cells,
    add_box,
    apply_move,
    as_partition,
    classify_corners,
    conjugate,
    covers,
    dominance_geq,
    down_neighbors,
    enumerate_move_quadruples,
    enumerate_partitions,
    format_partition,
    parse_partition,
    removable_corners,
    remove_box,
    upper_sets,
)
from .dimensions import dim_hook, dim_paths, skew_dim, check_dim_ratio_inequality
from .jordan import (
    UnipotentMatrix,
    dim_t_edge_enum,
    dim_t_enum,
    jordan_tables,
    jordan_type,
)
from .measures import (
    Coupling,
    MeasureOnLevel,
    check_projection_dominance,
    coupling_is_valid,
    dominates_flow,
    dominates_upperset,
    project_atom_direct,
    project_one,
    project_to,
    tv_distance,
)
from .schur import (
    check_monomial_positivity,
    check_product_inequality,
    check_product_inequality_reduced,
    kostka,
    schur_ones,
    schur_product,
)
from .hall_littlewood import hl_P, hl_Q, hl_Q_symmetrization, hl_P_values
from .thoma import (
    PLANCHEREL,
    GrowthChain,
    ThomaParams,
    clutch_params,
    convergence_experiment,
    d_inf,
    extreme_measure,
    growth_transitions,
    lipschitz_check,
    lln_experiment,
    power_sum,
    sample_diagram,
    staircase_sequence,
    super_schur,
)

__all__ = [name for name in dir() if not name.startswith("_")]
