"""
Measurements of convex bodies: area, perimeter, support function, ring
membership, inradius and circumradius.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from config.settings import ARC_SAMPLE_STEP, TAU_GEOM
from ..errors import GeometryError, ParameterError
from .body import Arc, ConvexBody, Point, Segment

logger = logging.getLogger(__name__)

Circle = Tuple[float, float, float]


def area(body: ConvexBody) -> float:
    """
    Enclosed area by Green's theorem over the pieces.

    Segments contribute the shoelace term, arcs the sector term r^2*sweep/2,
    so the result is exact up to rounding.
    """
    return sum(piece.area_term() for piece in body.pieces)


def perimeter(body: ConvexBody) -> float:
    """Sum of segment and arc lengths."""
    return sum(piece.length for piece in body.pieces)


def support_value(body: ConvexBody, direction: float) -> float:
    """
    Support function h(u) = max <x, u> over the body.

    Args:
        body: Convex body
        direction: Angle of the unit vector u in radians

    Returns:
        Support value in length units
    """
    ux, uy = math.cos(direction), math.sin(direction)
    best = -math.inf
    for piece in body.pieces:
        if isinstance(piece, Arc) and piece.contains_direction(direction):
            best = max(best, piece.radius)
        start, end = piece.start_point, piece.end_point
        best = max(best, start.x * ux + start.y * uy, end.x * ux + end.y * uy)
    return best


def _check_radii(a: float, b: float) -> None:
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterError(f"Ring radii must be finite, got a={a}, b={b}")
    if a <= 0.0 or a >= b:
        raise ParameterError(f"Ring radii must satisfy 0 < a < b, got a={a}, b={b}")


def in_ring(body: ConvexBody, a: float, b: float) -> bool:
    """
    True iff D_a is contained in the body and the body in D_b (origin-centered).

    The support function of a convex body attains its minimum at an outward
    normal of a segment or along an arc, so checking those suffices.
    """
    _check_radii(a, b)
    tol = max(TAU_GEOM, body.tolerance)
    min_support = math.inf
    max_distance = 0.0
    for piece in body.pieces:
        if isinstance(piece, Segment):
            nx, ny = piece.outward_normal()
            min_support = min(min_support, piece.start.x * nx + piece.start.y * ny)
            max_distance = max(
                max_distance,
                math.hypot(piece.start.x, piece.start.y),
                math.hypot(piece.end.x, piece.end.y),
            )
        else:
            min_support = min(min_support, piece.radius)
            max_distance = max(max_distance, piece.radius)
    return min_support >= a - tol and max_distance <= b + tol


def _supporting_lines(body: ConvexBody) -> Tuple[np.ndarray, np.ndarray]:
    normals: List[Tuple[float, float]] = []
    offsets: List[float] = []
    for piece in body.pieces:
        if isinstance(piece, Segment):
            nx, ny = piece.outward_normal()
            normals.append((nx, ny))
            offsets.append(piece.start.x * nx + piece.start.y * ny)
        else:
            for angle in piece.sample_angles(ARC_SAMPLE_STEP):
                normals.append((math.cos(angle), math.sin(angle)))
                offsets.append(piece.radius)
    return np.asarray(normals), np.asarray(offsets)


def incircle(body: ConvexBody) -> Tuple[Point, float]:
    """
    Largest disk inside the body (Chebyshev center).

    Solved as the linear program max r s.t. <c, n_i> + r <= h_i over the
    supporting lines; arcs contribute tangent lines sampled every 1e-3 rad.

    Returns:
        Tuple of (center, radius)
    """
    if body.degenerate:
        raise GeometryError("Inradius of a degenerate body is undefined")
    normals, offsets = _supporting_lines(body)
    a_ub = np.column_stack((normals, np.ones(len(offsets))))
    result = linprog(
        c=np.array([0.0, 0.0, -1.0]),
        A_ub=a_ub,
        b_ub=offsets,
        bounds=[(None, None), (None, None), (0.0, None)],
        method="highs",
    )
    if not result.success:
        raise GeometryError(f"Inradius program failed: {result.message}")
    cx, cy, r = result.x
    if r <= body.tolerance:
        raise GeometryError("Body has zero inradius")
    return Point(float(cx), float(cy)), float(r)


def inradius(body: ConvexBody) -> float:
    """Radius of the largest disk contained in the body."""
    return incircle(body)[1]


def contact_count(body: ConvexBody, center: Point, radius: float, rel_tol: float = 1e-7) -> int:
    """Number of segments whose supporting line touches the given disk."""
    count = 0
    for segment in body.segments:
        nx, ny = segment.outward_normal()
        gap = (segment.start.x - center.x) * nx + (segment.start.y - center.y) * ny - radius
        if abs(gap) <= rel_tol * max(1.0, radius):
            count += 1
    return count


# Smallest enclosing circle (incremental Welzl construction)

def _inside(circle: Optional[Circle], x: float, y: float) -> bool:
    if circle is None:
        return False
    cx, cy, r = circle
    return math.hypot(x - cx, y - cy) <= r * (1.0 + 1e-14) + 1e-15


def _diameter_circle(p: Sequence[float], q: Sequence[float]) -> Circle:
    cx, cy = (p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0
    return (cx, cy, max(math.hypot(cx - p[0], cy - p[1]), math.hypot(cx - q[0], cy - q[1])))


def _circumcircle(p: Sequence[float], q: Sequence[float], r: Sequence[float]) -> Optional[Circle]:
    ox = (min(p[0], q[0], r[0]) + max(p[0], q[0], r[0])) / 2.0
    oy = (min(p[1], q[1], r[1]) + max(p[1], q[1], r[1])) / 2.0
    ax, ay = p[0] - ox, p[1] - oy
    bx, by = q[0] - ox, q[1] - oy
    cx, cy = r[0] - ox, r[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    radius = max(math.hypot(x - p[0], y - p[1]), math.hypot(x - q[0], y - q[1]), math.hypot(x - r[0], y - r[1]))
    return (x, y, radius)


def _cross(x0: float, y0: float, x1: float, y1: float, x2: float, y2: float) -> float:
    return (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)


def _circle_two_points(points: Sequence[Sequence[float]], p: Sequence[float], q: Sequence[float]) -> Circle:
    circ = _diameter_circle(p, q)
    left: Optional[Circle] = None
    right: Optional[Circle] = None
    for r in points:
        if _inside(circ, r[0], r[1]):
            continue
        side = _cross(p[0], p[1], q[0], q[1], r[0], r[1])
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        c_side = _cross(p[0], p[1], q[0], q[1], c[0], c[1])
        if side > 0.0 and (left is None or c_side > _cross(p[0], p[1], q[0], q[1], left[0], left[1])):
            left = c
        elif side < 0.0 and (right is None or c_side < _cross(p[0], p[1], q[0], q[1], right[0], right[1])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _circle_one_point(points: Sequence[Sequence[float]], p: Sequence[float]) -> Circle:
    circ: Circle = (p[0], p[1], 0.0)
    for i, q in enumerate(points):
        if not _inside(circ, q[0], q[1]):
            if circ[2] == 0.0:
                circ = _diameter_circle(p, q)
            else:
                circ = _circle_two_points(points[: i + 1], p, q)
    return circ


def enclosing_circle(points: np.ndarray, seed: int = 0) -> Circle:
    """
    Smallest circle containing all points.

    Args:
        points: Array of shape (n, 2)
        seed: Shuffle seed (the result does not depend on it)

    Returns:
        Tuple of (center_x, center_y, radius)
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise GeometryError("Enclosing circle needs at least one point")
    order = np.random.default_rng(seed).permutation(pts.shape[0])
    shuffled = [tuple(row) for row in pts[order]]
    circ: Optional[Circle] = None
    for i, p in enumerate(shuffled):
        if circ is None or not _inside(circ, p[0], p[1]):
            circ = _circle_one_point(shuffled[: i + 1], p)
    return circ


def circumradius(body: ConvexBody) -> float:
    """Radius of the smallest disk containing the body."""
    return enclosing_circle(body.boundary_points())[2]
