"""
Angle-class encoding of candidate polygons, the closed-form functional,
optimality certificates and perturbation formulas.
"""

from .certificates import (
    Certificate,
    SecondOrderVerdict,
    certify_config,
    hessian_spectrum,
    kkt_residuals,
    non_polygon_certificate,
    second_order_ok,
)
from .energy import (
    angle_gradient,
    area_of,
    chord_slope,
    chord_term,
    evaluate_J,
    perimeter_of,
    tangent_slope,
    tangent_term,
    xi0_slope,
    xi0_term,
)
from .model import AngleConfig, RingParams, regular_config, xi0
from .perturbations import (
    chord_cut_disk,
    delta_arc_chord,
    delta_arc_tangent,
    delta_min_side,
    delta_slide_vertex,
    delta_trapezoid,
    tangent_corner_disk,
)
from .synthesis import polygon_vertices, synthesize_polygon

__all__ = [
    'AngleConfig',
    'RingParams',
    'regular_config',
    'xi0',
    'area_of',
    'perimeter_of',
    'evaluate_J',
    'angle_gradient',
    'tangent_slope',
    'chord_slope',
    'xi0_slope',
    'tangent_term',
    'chord_term',
    'xi0_term',
    'polygon_vertices',
    'synthesize_polygon',
    'Certificate',
    'SecondOrderVerdict',
    'kkt_residuals',
    'hessian_spectrum',
    'second_order_ok',
    'certify_config',
    'non_polygon_certificate',
    'delta_arc_chord',
    'delta_arc_tangent',
    'delta_slide_vertex',
    'delta_min_side',
    'delta_trapezoid',
    'chord_cut_disk',
    'tangent_corner_disk',
]
