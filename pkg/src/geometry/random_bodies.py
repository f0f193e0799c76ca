"""
Seeded random convex polygons for fuzzing.
"""

import logging

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from config.settings import MAX_REDRAWS
from ..errors import GeometryError, ParameterError
from .body import ConvexBody

logger = logging.getLogger(__name__)


def random_convex_polygon(n: int, radius: float, seed: int) -> ConvexBody:
    """
    Convex hull of n points drawn uniformly in the disk of given radius.

    Args:
        n: Number of sampled points (>= 3)
        radius: Radius of the sampling disk
        seed: Seed for numpy's generator; equal seeds give equal polygons

    Returns:
        ConvexBody with counterclockwise vertices
    """
    if n < 3:
        raise ParameterError(f"Need at least 3 points, got {n}")
    if not radius > 0.0:
        raise ParameterError(f"Radius must be positive, got {radius}")
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_REDRAWS):
        r = radius * np.sqrt(rng.random(n))
        theta = 2.0 * np.pi * rng.random(n)
        points = np.column_stack((r * np.cos(theta), r * np.sin(theta)))
        try:
            hull = ConvexHull(points)
        except QhullError:
            logger.debug(f"Degenerate sample on attempt {attempt}, redrawing")
            continue
        if hull.volume <= 1e-12 * radius * radius:
            continue
        try:
            return ConvexBody.from_vertices(points[hull.vertices])
        except GeometryError:
            logger.debug(f"Hull rejected on attempt {attempt}, redrawing")
    raise GeometryError(f"No non-degenerate hull after {MAX_REDRAWS} draws (n={n}, seed={seed})")
