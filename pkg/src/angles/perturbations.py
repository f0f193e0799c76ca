"""
Closed-form J differences of the elementary perturbations used to rule out
boundary pieces of an optimal set, and the bodies they compare.
"""

import math

from ..errors import ParameterError
from ..geometry import Arc, ConvexBody, Point, Segment
from .model import RingParams


def _check_lambda(lam: float) -> None:
    if not math.isfinite(lam):
        raise ParameterError(f"lambda must be finite, got {lam}")


def delta_arc_chord(b: float, lam: float, eta: float) -> float:
    """
    J(D_b) - J(D_b cut by the chord of half-angle eta).

    Equals (b/2)(eta - sin eta cos eta)(2 lambda b - 4(eta - sin eta)/(eta - sin eta cos eta)),
    written without the quotient so that eta = 0 gives 0.
    """
    _check_lambda(lam)
    if b <= 0.0:
        raise ParameterError(f"b must be positive, got {b}")
    if not (0.0 <= eta <= 0.5 * math.pi):
        raise ParameterError(f"eta must lie in [0, pi/2], got {eta}")
    cap_area = b * b * (eta - math.sin(eta) * math.cos(eta))
    arc_excess = 2.0 * b * (eta - math.sin(eta))
    return lam * cap_area - arc_excess


def delta_arc_tangent(a: float, lam: float, eta: float) -> float:
    """J(D_a) - J(D_a with the arc (-eta, eta) replaced by two tangent segments)."""
    _check_lambda(lam)
    if a <= 0.0:
        raise ParameterError(f"a must be positive, got {a}")
    if not (0.0 <= eta < 0.5 * math.pi):
        raise ParameterError(f"eta must lie in [0, pi/2), got {eta}")
    return -a * a * (math.tan(eta) - eta) * (lam - 2.0 / a)


def _check_residual_angle(ring: RingParams, x: float) -> None:
    if not (0.0 < x < ring.xi0):
        raise ParameterError(f"x must lie in (0, xi0={ring.xi0}), got {x}")


def delta_slide_vertex(ring: RingParams, lam: float, x: float) -> float:
    """
    J(chord polygon) - J(tangent polygon) when the vertex between a xi0 side
    and the residual side slides along the tangent line.

    tan x (b^2 cos^2 x - a^2)(lambda - 2/(b cos x + a)); vanishes at the
    minimum-side threshold.
    """
    _check_lambda(lam)
    _check_residual_angle(ring, x)
    a, b = ring.a, ring.b
    c = b * math.cos(x)
    return math.tan(x) * (c * c - a * a) * (lam - 2.0 / (c + a))


def delta_min_side(ring: RingParams, lam: float, x: float) -> float:
    """J(tangent polygon) - J(chord polygon) for the two minimum-side polygons with residual angle x."""
    _check_lambda(lam)
    _check_residual_angle(ring, x)
    a, b = ring.a, ring.b
    c = b * math.cos(x)
    return math.tan(x) * (a - c) * (lam * (a + c) - 2.0)


def delta_trapezoid(ring: RingParams, lam: float, eta: float, eps: float) -> float:
    """
    J gain of pushing a xi0 side outward into a trapezoid.

    Both ends of the side move by eps along directions at angle eta below the
    side: the area grows by eps sin(eta)(2 sqrt(b^2 - a^2) - eps cos(eta)) and
    the perimeter by 2 eps (1 - cos eta).
    """
    _check_lambda(lam)
    if not (0.0 < eta < 0.5 * math.pi):
        raise ParameterError(f"eta must lie in (0, pi/2), got {eta}")
    side = 2.0 * ring.half_chord
    if eps < 0.0 or 2.0 * eps * math.cos(eta) >= side:
        raise ParameterError(f"eps must lie in [0, {side / (2.0 * math.cos(eta))}), got {eps}")
    height = eps * math.sin(eta)
    return lam * height * (side - eps * math.cos(eta)) - 2.0 * eps * (1.0 - math.cos(eta))


def chord_cut_disk(b: float, eta: float) -> ConvexBody:
    """D_b with the cap of half-angle eta around direction 0 cut off."""
    if not (0.0 < eta < 0.5 * math.pi):
        raise ParameterError(f"eta must lie in (0, pi/2), got {eta}")
    lower = Point(b * math.cos(eta), -b * math.sin(eta))
    upper = Point(b * math.cos(eta), b * math.sin(eta))
    return ConvexBody((Segment(lower, upper), Arc(b, eta, 2.0 * math.pi - 2.0 * eta)))


def tangent_corner_disk(a: float, eta: float) -> ConvexBody:
    """D_a with the arc (-eta, eta) replaced by the two tangent segments meeting at (a / cos eta, 0)."""
    if not (0.0 < eta < 0.5 * math.pi):
        raise ParameterError(f"eta must lie in (0, pi/2), got {eta}")
    lower = Point(a * math.cos(eta), -a * math.sin(eta))
    apex = Point(a / math.cos(eta), 0.0)
    upper = Point(a * math.cos(eta), a * math.sin(eta))
    return ConvexBody((
        Segment(lower, apex),
        Segment(apex, upper),
        Arc(a, eta, 2.0 * math.pi - 2.0 * eta),
    ))
