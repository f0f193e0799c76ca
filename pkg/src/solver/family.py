"""
Bodies circumscribed to D_a: arcs of the inner circle joined by tangent
corners. At lambda = 2/a every such body has J = 0.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import TAU_ANGLE
from ..errors import ParameterError
from ..geometry import Arc, BoundaryPiece, ConvexBody, Point, Segment

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
# keeps sampled corners away from the unbounded right-angle limit
MAX_SAMPLED_HALF_ANGLE = 1.2


def circumscribed_body(a: float, corners: Sequence[Tuple[float, float]]) -> ConvexBody:
    """
    Body bounded by D_a arcs and tangent corners.

    Args:
        a: Inner radius
        corners: (direction, half-angle) pairs; the corner apex lies at
            distance a / cos(half-angle) in the given direction and its two
            sides touch D_a at direction +/- half-angle. Corners must not overlap.

    Returns:
        ConvexBody (D_a itself when `corners` is empty)
    """
    if a <= 0.0:
        raise ParameterError(f"a must be positive, got {a}")
    if not corners:
        return ConvexBody.disk(a)
    ordered = sorted(((phi % TWO_PI, theta) for phi, theta in corners), key=lambda c: c[0])
    for phi, theta in ordered:
        if not (0.0 < theta < 0.5 * math.pi):
            raise ParameterError(f"Corner half-angle must lie in (0, pi/2), got {theta}")
    pieces: List[BoundaryPiece] = []
    count = len(ordered)
    for k, (phi, theta) in enumerate(ordered):
        nxt_phi, nxt_theta = ordered[(k + 1) % count]
        if k == count - 1:
            nxt_phi += TWO_PI
        gap = (nxt_phi - nxt_theta) - (phi + theta)
        if gap < -TAU_ANGLE:
            raise ParameterError(f"Corners at {phi} and {nxt_phi} overlap")
        start = Point(a * math.cos(phi - theta), a * math.sin(phi - theta))
        apex_r = a / math.cos(theta)
        apex = Point(apex_r * math.cos(phi), apex_r * math.sin(phi))
        end = Point(a * math.cos(phi + theta), a * math.sin(phi + theta))
        pieces.append(Segment(start, apex))
        pieces.append(Segment(apex, end))
        if gap > TAU_ANGLE:
            pieces.append(Arc(a, phi + theta, gap))
    if all(isinstance(p, Segment) for p in pieces):
        # tangent polygon: consecutive corners share their touching point
        return ConvexBody.from_vertices([s.end.to_list() for s in pieces[::2]])
    return ConvexBody(tuple(pieces))


def sample_circumscribed_family(
    a: float,
    count: int,
    seed: int = 0,
    max_half_angle: Optional[float] = None,
) -> List[ConvexBody]:
    """
    Deterministic sample of bodies circumscribed to D_a.

    Member k has k+1 corners (cycling through 1..4) with random directions
    and half-angles filling 30% to 90% of their slot, so every member mixes
    arcs and tangent segments.

    Args:
        a: Inner radius
        count: Number of members
        seed: RNG seed
        max_half_angle: Upper bound on half-angles (xi0 keeps members inside D_b)
    """
    if count < 0:
        raise ParameterError(f"count must be non-negative, got {count}")
    cap = MAX_SAMPLED_HALF_ANGLE if max_half_angle is None else min(max_half_angle, MAX_SAMPLED_HALF_ANGLE)
    rng = np.random.default_rng(seed)
    members = []
    for k in range(count):
        corners_n = 1 + k % 4
        offset = float(rng.uniform(0.0, TWO_PI))
        weights = rng.uniform(0.5, 1.5, size=corners_n)
        slots = TWO_PI * weights / weights.sum()
        fills = rng.uniform(0.3, 0.9, size=corners_n)
        corners = []
        start = offset
        for slot, fill in zip(slots, fills):
            theta = min(0.5 * slot * fill, cap * (1.0 - 1e-9))
            corners.append((start + 0.5 * slot, theta))
            start += slot
        members.append(circumscribed_body(a, corners))
    logger.debug(f"Sampled {count} circumscribed bodies around D_{a}")
    return members
