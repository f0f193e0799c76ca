"""
Convex Body Module
Closed convex boundaries made of straight segments and origin-centered arcs.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from config.settings import ARC_SAMPLE_STEP, TAU_GEOM, TURNING_TOL
from ..errors import GeometryError

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Point:
    """A point of the plane."""
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def to_list(self) -> List[float]:
        return [self.x, self.y]


@dataclass(frozen=True)
class Segment:
    """Straight boundary piece from start to end."""
    start: Point
    end: Point

    def __post_init__(self):
        if self.start.distance_to(self.end) <= 0.0:
            raise GeometryError(f"Segment endpoints coincide at {self.start}")

    @property
    def length(self) -> float:
        return self.start.distance_to(self.end)

    @property
    def start_point(self) -> Point:
        return self.start

    @property
    def end_point(self) -> Point:
        return self.end

    def direction(self) -> Tuple[float, float]:
        """Unit direction of travel."""
        length = self.length
        return ((self.end.x - self.start.x) / length, (self.end.y - self.start.y) / length)

    def start_tangent(self) -> Tuple[float, float]:
        return self.direction()

    def end_tangent(self) -> Tuple[float, float]:
        return self.direction()

    def outward_normal(self) -> Tuple[float, float]:
        """Right-hand normal, outward for a counterclockwise boundary."""
        dx, dy = self.direction()
        return (dy, -dx)

    def area_term(self) -> float:
        """Contribution to 1/2 * closed integral of (x dy - y dx)."""
        return 0.5 * (self.start.x * self.end.y - self.end.x * self.start.y)

    def to_dict(self) -> Dict[str, Any]:
        return {"segment": {"start": self.start.to_list(), "end": self.end.to_list()}}


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc of the origin-centered circle of given radius."""
    radius: float
    angle_start: float
    angle_sweep: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise GeometryError(f"Arc radius must be positive, got {self.radius}")
        if not (0.0 < self.angle_sweep <= TWO_PI + 1e-12):
            raise GeometryError(f"Arc sweep must lie in (0, 2*pi], got {self.angle_sweep}")
        object.__setattr__(self, "angle_start", math.fmod(self.angle_start, TWO_PI) % TWO_PI)
        object.__setattr__(self, "angle_sweep", min(self.angle_sweep, TWO_PI))

    @property
    def angle_end(self) -> float:
        return self.angle_start + self.angle_sweep

    @property
    def length(self) -> float:
        return self.radius * self.angle_sweep

    def point_at(self, angle: float) -> Point:
        return Point(self.radius * math.cos(angle), self.radius * math.sin(angle))

    @property
    def start_point(self) -> Point:
        return self.point_at(self.angle_start)

    @property
    def end_point(self) -> Point:
        return self.point_at(self.angle_end)

    def start_tangent(self) -> Tuple[float, float]:
        return (-math.sin(self.angle_start), math.cos(self.angle_start))

    def end_tangent(self) -> Tuple[float, float]:
        return (-math.sin(self.angle_end), math.cos(self.angle_end))

    def contains_direction(self, angle: float) -> bool:
        """True if the outward normal `angle` is attained along the arc."""
        offset = (angle - self.angle_start) % TWO_PI
        return offset <= self.angle_sweep + 1e-15

    def sample_angles(self, step: float = ARC_SAMPLE_STEP) -> np.ndarray:
        count = max(2, int(math.ceil(self.angle_sweep / step)) + 1)
        return np.linspace(self.angle_start, self.angle_end, count)

    def area_term(self) -> float:
        return 0.5 * self.radius * self.radius * self.angle_sweep

    def to_dict(self) -> Dict[str, Any]:
        return {
            "arc": {
                "radius": self.radius,
                "angle_start": self.angle_start,
                "angle_sweep": self.angle_sweep,
            }
        }


BoundaryPiece = Union[Segment, Arc]


def _piece_from_dict(data: Dict[str, Any]) -> BoundaryPiece:
    if "segment" in data:
        seg = data["segment"]
        return Segment(Point(*map(float, seg["start"])), Point(*map(float, seg["end"])))
    if "arc" in data:
        arc = data["arc"]
        return Arc(float(arc["radius"]), float(arc["angle_start"]), float(arc["angle_sweep"]))
    raise GeometryError(f"Unknown boundary piece: {sorted(data)}")


def _turn(t_in: Tuple[float, float], t_out: Tuple[float, float], degenerate: bool, tol: float) -> float:
    cross = t_in[0] * t_out[1] - t_in[1] * t_out[0]
    dot = t_in[0] * t_out[0] + t_in[1] * t_out[1]
    if dot < 0.0 and abs(cross) <= tol:
        if not degenerate:
            raise GeometryError("Boundary reverses direction on a non-degenerate body")
        return math.pi
    if cross < -tol:
        raise GeometryError(f"Boundary turns right (cross product {cross:.3e})")
    return math.atan2(cross, dot)


@dataclass(frozen=True)
class ConvexBody:
    """
    Closed convex body given by its counterclockwise boundary.

    Degenerate bodies (a diameter traversed twice) are allowed only when
    flagged; they have zero area.
    """
    pieces: Tuple[BoundaryPiece, ...]
    degenerate: bool = False
    _extent: float = field(default=0.0, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not self.pieces:
            raise GeometryError("A body needs at least one boundary piece")
        extent = max(
            max(abs(p.start_point.x), abs(p.start_point.y), abs(p.end_point.x), abs(p.end_point.y))
            for p in self.pieces
        )
        object.__setattr__(self, "_extent", extent)
        self._validate()

    @property
    def tolerance(self) -> float:
        return TAU_GEOM * max(1.0, self._extent)

    def _validate(self) -> None:
        tol = self.tolerance
        n = len(self.pieces)
        total_turn = 0.0
        for k, piece in enumerate(self.pieces):
            nxt = self.pieces[(k + 1) % n]
            gap = piece.end_point.distance_to(nxt.start_point)
            if gap > tol:
                raise GeometryError(f"Boundary not closed between pieces {k} and {(k + 1) % n} (gap {gap:.3e})")
            if isinstance(piece, Arc):
                total_turn += piece.angle_sweep
            total_turn += _turn(piece.end_tangent(), nxt.start_tangent(), self.degenerate, tol)
        if abs(total_turn - TWO_PI) > TURNING_TOL:
            raise GeometryError(f"Boundary is not simple and convex (total turning {total_turn:.6f})")
        signed_area = sum(p.area_term() for p in self.pieces)
        if self.degenerate:
            if abs(signed_area) > tol:
                raise GeometryError("Degenerate body must enclose zero area")
        elif signed_area <= tol:
            raise GeometryError(f"Body must enclose positive area, got {signed_area:.3e}")

    # Constructors

    @classmethod
    def from_vertices(cls, vertices: Iterable[Sequence[float]]) -> "ConvexBody":
        """Polygon through the given vertices (either orientation); repeated and collinear vertices are dropped."""
        pts = [(float(v[0]), float(v[1])) for v in vertices]
        if len(pts) < 3:
            raise GeometryError(f"A polygon needs at least 3 vertices, got {len(pts)}")
        signed = 0.5 * sum(
            pts[i][0] * pts[(i + 1) % len(pts)][1] - pts[(i + 1) % len(pts)][0] * pts[i][1]
            for i in range(len(pts))
        )
        if signed < 0.0:
            pts.reverse()
        scale = max(1.0, max(max(abs(x), abs(y)) for x, y in pts))
        tol = TAU_GEOM * scale
        deduped: List[Tuple[float, float]] = []
        for p in pts:
            if not deduped or math.hypot(p[0] - deduped[-1][0], p[1] - deduped[-1][1]) > tol:
                deduped.append(p)
        while len(deduped) > 1 and math.hypot(
            deduped[0][0] - deduped[-1][0], deduped[0][1] - deduped[-1][1]
        ) <= tol:
            deduped.pop()
        cleaned = _drop_collinear(deduped, tol)
        if len(cleaned) < 3:
            raise GeometryError("Polygon collapses to fewer than 3 distinct vertices")
        segments = [
            Segment(Point(*cleaned[i]), Point(*cleaned[(i + 1) % len(cleaned)]))
            for i in range(len(cleaned))
        ]
        return cls(tuple(segments))

    @classmethod
    def disk(cls, radius: float) -> "ConvexBody":
        return cls((Arc(radius, 0.0, TWO_PI),))

    @classmethod
    def double_diameter(cls, radius: float) -> "ConvexBody":
        """The segment [-radius, radius] on the x axis traversed twice."""
        left, right = Point(-radius, 0.0), Point(radius, 0.0)
        return cls((Segment(left, right), Segment(right, left)), degenerate=True)

    # Views

    @property
    def is_polygon(self) -> bool:
        return all(isinstance(p, Segment) for p in self.pieces)

    @property
    def segments(self) -> List[Segment]:
        return [p for p in self.pieces if isinstance(p, Segment)]

    @property
    def arcs(self) -> List[Arc]:
        return [p for p in self.pieces if isinstance(p, Arc)]

    def vertices(self) -> List[Point]:
        """Start points of every piece (the corners for a polygon)."""
        return [p.start_point for p in self.pieces]

    def boundary_points(self, step: float = ARC_SAMPLE_STEP) -> np.ndarray:
        """Segment endpoints plus arcs sampled at the given angular step."""
        chunks = []
        for piece in self.pieces:
            if isinstance(piece, Segment):
                chunks.append(np.array([piece.start.to_list(), piece.end.to_list()]))
            else:
                angles = piece.sample_angles(step)
                chunks.append(np.column_stack((piece.radius * np.cos(angles), piece.radius * np.sin(angles))))
        return np.vstack(chunks)

    # Transformations

    def translate(self, dx: float, dy: float) -> "ConvexBody":
        """Translated copy; only polygonal bodies can move off the origin."""
        if self.arcs:
            raise GeometryError("Bodies with origin-centered arcs cannot be translated")
        pieces = tuple(
            Segment(Point(s.start.x + dx, s.start.y + dy), Point(s.end.x + dx, s.end.y + dy))
            for s in self.segments
        )
        return ConvexBody(pieces, degenerate=self.degenerate)

    def scale(self, factor: float) -> "ConvexBody":
        if not (math.isfinite(factor) and factor > 0.0):
            raise GeometryError(f"Scale factor must be positive, got {factor}")
        pieces: List[BoundaryPiece] = []
        for piece in self.pieces:
            if isinstance(piece, Segment):
                pieces.append(Segment(
                    Point(piece.start.x * factor, piece.start.y * factor),
                    Point(piece.end.x * factor, piece.end.y * factor),
                ))
            else:
                pieces.append(Arc(piece.radius * factor, piece.angle_start, piece.angle_sweep))
        return ConvexBody(tuple(pieces), degenerate=self.degenerate)

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {"pieces": [p.to_dict() for p in self.pieces], "degenerate": self.degenerate}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConvexBody":
        try:
            pieces = tuple(_piece_from_dict(item) for item in data["pieces"])
        except (KeyError, TypeError) as exc:
            raise GeometryError(f"Malformed body document: {exc}")
        return cls(pieces, degenerate=bool(data.get("degenerate", False)))


def _drop_collinear(points: List[Tuple[float, float]], tol: float) -> List[Tuple[float, float]]:
    """Remove vertices where the boundary continues straight on."""
    changed = True
    pts = list(points)
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            prev, cur, nxt = pts[i - 1], pts[i], pts[(i + 1) % n]
            ax, ay = cur[0] - prev[0], cur[1] - prev[1]
            bx, by = nxt[0] - cur[0], nxt[1] - cur[1]
            la, lb = math.hypot(ax, ay), math.hypot(bx, by)
            cross = (ax * by - ay * bx) / (la * lb)
            dot = ax * bx + ay * by
            if abs(cross) <= tol and dot > 0.0:
                del pts[i]
                changed = True
                break
    return pts
