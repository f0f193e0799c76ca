"""
Closed-form area, perimeter and J_lambda = lambda*area - perimeter of an
angle configuration, with its gradient.
"""

import math
from typing import Tuple

import numpy as np

from .model import AngleConfig, RingParams


def area_of(config: AngleConfig, ring: RingParams) -> float:
    """p*a^2*tan(xi0) + a^2*sum(tan theta) + b^2*sum(sin eta cos eta)."""
    config = config.validated(ring)
    a, b = ring.a, ring.b
    terms = [config.p * a * ring.half_chord]
    terms.extend(a * a * math.tan(t) for t in config.tangent_angles)
    terms.extend(b * b * math.sin(e) * math.cos(e) for e in config.chord_angles)
    return math.fsum(terms)


def perimeter_of(config: AngleConfig, ring: RingParams) -> float:
    """2*(p*a*tan(xi0) + a*sum(tan theta) + b*sum(sin eta))."""
    config = config.validated(ring)
    a, b = ring.a, ring.b
    terms = [config.p * ring.half_chord]
    terms.extend(a * math.tan(t) for t in config.tangent_angles)
    terms.extend(b * math.sin(e) for e in config.chord_angles)
    return 2.0 * math.fsum(terms)


def evaluate_J(config: AngleConfig, ring: RingParams, lam: float) -> float:
    """
    Value of lambda*area - perimeter for the polygon encoded by `config`.

    Args:
        config: Angle classes (validated against the ring)
        ring: Ring radii
        lam: Area weight lambda

    Returns:
        J_lambda of the polygon
    """
    config = config.validated(ring)
    a, b = ring.a, ring.b
    terms = [config.p * ring.half_chord * (lam * a - 2.0)]
    terms.extend(a * (lam * a - 2.0) * math.tan(t) for t in config.tangent_angles)
    terms.extend(b * math.sin(e) * (lam * b * math.cos(e) - 2.0) for e in config.chord_angles)
    return math.fsum(terms)


def tangent_slope(ring: RingParams, lam: float, theta):
    """dJ/dtheta = a^2 (lambda - 2/a) / cos^2(theta); accepts arrays."""
    a = ring.a
    return a * (lam * a - 2.0) / np.cos(theta) ** 2


def chord_slope(ring: RingParams, lam: float, eta):
    """dJ/deta = lambda b^2 cos(2 eta) - 2 b cos(eta); accepts arrays."""
    b = ring.b
    return lam * b * b * np.cos(2.0 * eta) - 2.0 * b * np.cos(eta)


def xi0_slope(ring: RingParams, lam: float) -> float:
    """The tangent slope evaluated at xi0: b^2 (lambda - 2/a)."""
    return ring.b * ring.b * (lam - 2.0 / ring.a)


def angle_gradient(config: AngleConfig, ring: RingParams, lam: float) -> Tuple[float, np.ndarray, np.ndarray]:
    """
    Partial derivatives of J with respect to each angle.

    Returns:
        Tuple of (slope shared by the xi0 angles, tangent slopes, chord slopes)
    """
    config = config.validated(ring)
    tangent = tangent_slope(ring, lam, np.asarray(config.tangent_angles, dtype=float))
    chords = chord_slope(ring, lam, np.asarray(config.chord_angles, dtype=float))
    return xi0_slope(ring, lam), np.atleast_1d(tangent), np.atleast_1d(chords)


def tangent_term(ring: RingParams, lam: float, theta):
    """J contribution of one tangent pair; accepts arrays."""
    a = ring.a
    return a * (lam * a - 2.0) * np.tan(theta)


def chord_term(ring: RingParams, lam: float, eta):
    """J contribution of one chord; accepts arrays."""
    b = ring.b
    return b * np.sin(eta) * (lam * b * np.cos(eta) - 2.0)


def xi0_term(ring: RingParams, lam: float) -> float:
    """J contribution of one xi0 side."""
    return ring.half_chord * (lam * ring.a - 2.0)
