"""
Polygon synthesis from angle classes.
"""

import logging
import math
from typing import List, Tuple

from ..geometry import ConvexBody
from .model import AngleConfig, RingParams

logger = logging.getLogger(__name__)


def _polar(radius: float, angle: float) -> Tuple[float, float]:
    return (radius * math.cos(angle), radius * math.sin(angle))


def polygon_vertices(config: AngleConfig, ring: RingParams) -> List[Tuple[float, float]]:
    """
    Corners of the canonical polygon, counterclockwise from direction 0.

    Layout: the first xi0 side is split at its tangency point and the tangent
    pairs are inserted there, then come the remaining xi0 sides, then the
    chords. Each class is laid out in descending order.
    """
    config = config.validated(ring).canonical()
    a, b, xi = ring.a, ring.b, ring.xi0
    vertices: List[Tuple[float, float]] = []
    phi = 0.0
    if config.p == 0 and config.tangent_angles:
        # all sides tangent to D_a: only the apexes are corners
        for theta in config.tangent_angles:
            vertices.append(_polar(a / math.cos(theta), phi + theta))
            phi += 2.0 * theta
        return vertices

    vertices.append(_polar(b, 0.0))
    remaining_xi = config.p
    if config.tangent_angles:
        phi = xi
        for theta in config.tangent_angles:
            vertices.append(_polar(a / math.cos(theta), phi + theta))
            phi += 2.0 * theta
        phi += xi
        vertices.append(_polar(b, phi))
        remaining_xi -= 1
    for _ in range(remaining_xi):
        phi += 2.0 * xi
        vertices.append(_polar(b, phi))
    for eta in config.chord_angles:
        phi += 2.0 * eta
        vertices.append(_polar(b, phi))
    # the walk ends where it started
    vertices.pop()
    return vertices


def synthesize_polygon(config: AngleConfig, ring: RingParams) -> ConvexBody:
    """
    Canonical convex polygon realizing the angle classes.

    Args:
        config: Angle classes, validated against the ring
        ring: Ring radii

    Returns:
        ConvexBody inscribed in D_b and containing D_a
    """
    vertices = polygon_vertices(config, ring)
    logger.debug(f"Synthesized {len(vertices)} corners for {config}")
    return ConvexBody.from_vertices(vertices)
