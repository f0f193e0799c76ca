"""
Analytic solver: regime classification, closed-form minimizers, variant
problems and lambda sweeps.
"""

from .dispatch import (
    circumscribed_family_solution,
    fallback_candidates,
    family_members,
    inscribed_solver,
    large_lambda_threshold,
    min_side_configs,
    oracle_fallback_solver,
    solve,
    solve_large_lambda,
)
from .family import circumscribed_body, sample_circumscribed_family
from .quasi import q_bounds, quasi_regular_candidates, quasi_regular_root, x2y2, x_bounds, y2_closed_form
from .regimes import (
    FAMILY_NOTE,
    NoSolution,
    Regime,
    Solution,
    config_key,
    disk_solution,
    polygon_solution,
    select_minimizers,
)
from .sequences import (
    beta,
    betahat,
    min_feasible_sides,
    optimal_regular_N,
    p0,
    regular_polygon_J,
    regular_switch_lambda,
    unconstrained_regular_N,
)
from .sweep import SweepRow, locate_boundary, shape_key, shape_label, sweep
from .triangle import inscribed_config, triangle_band_solver, triangle_candidates
from .variants import solve_inner_only, solve_outer_only, triangle_witness

__all__ = [
    'Regime',
    'Solution',
    'NoSolution',
    'FAMILY_NOTE',
    'config_key',
    'select_minimizers',
    'polygon_solution',
    'disk_solution',
    'solve',
    'solve_large_lambda',
    'large_lambda_threshold',
    'min_side_configs',
    'inscribed_solver',
    'circumscribed_family_solution',
    'fallback_candidates',
    'oracle_fallback_solver',
    'family_members',
    'p0',
    'beta',
    'betahat',
    'regular_polygon_J',
    'regular_switch_lambda',
    'min_feasible_sides',
    'unconstrained_regular_N',
    'optimal_regular_N',
    'x_bounds',
    'x2y2',
    'y2_closed_form',
    'q_bounds',
    'quasi_regular_root',
    'quasi_regular_candidates',
    'inscribed_config',
    'triangle_candidates',
    'triangle_band_solver',
    'circumscribed_body',
    'sample_circumscribed_family',
    'solve_inner_only',
    'solve_outer_only',
    'triangle_witness',
    'SweepRow',
    'shape_key',
    'shape_label',
    'locate_boundary',
    'sweep',
]
