"""
Display Module
SVG drawings of bodies in the ring and console summaries of solutions.
"""

import math
from typing import List, Optional, Sequence

import drawsvg as draw
import numpy as np

from config.settings import SIGNIFICANT_DIGITS, SVG_SIZE
from ..geometry import ConvexBody, Segment
from ..solver import Solution, shape_label

BODY_FILL = "#9ecae1"
BODY_STROKE = "#08519c"
CIRCLE_STROKE = "#636363"
LABEL_COLOR = "#252525"
# relative tolerance for deciding that a side touches a circle
CONTACT_TOL = 1e-6


def _num(value: float) -> float:
    # fixed rounding keeps the SVG text identical across runs
    return round(float(value), 6)


class RingCanvas:
    """Maps plane coordinates (y up) into a square drawsvg canvas (y down)."""

    def __init__(self, extent: float, size: int = SVG_SIZE):
        self.size = size
        self.half = 0.5 * size
        self.scale = 0.45 * size / extent
        self.drawing = draw.Drawing(size, size)
        self.drawing.append(draw.Rectangle(0, 0, size, size, fill="white"))

    def xy(self, x: float, y: float):
        return _num(self.half + self.scale * x), _num(self.half - self.scale * y)

    def circle(self, radius: float, **style) -> None:
        self.drawing.append(draw.Circle(
            _num(self.half), _num(self.half), _num(self.scale * radius), **style
        ))

    def body_path(self, body: ConvexBody, **style) -> draw.Path:
        path = draw.Path(**style)
        first = body.pieces[0]
        path.M(*self.xy(first.start_point.x, first.start_point.y))
        for piece in body.pieces:
            if isinstance(piece, Segment):
                path.L(*self.xy(piece.end.x, piece.end.y))
                continue
            # SVG arcs cannot close a full turn, so split into halves at most
            chunks = max(1, int(math.ceil(piece.angle_sweep / math.pi - 1e-12)))
            r = _num(self.scale * piece.radius)
            for k in range(1, chunks + 1):
                end = piece.point_at(piece.angle_start + piece.angle_sweep * k / chunks)
                # y is flipped, so counterclockwise in the plane is sweep flag 0
                path.A(r, r, 0, 0, 0, *self.xy(end.x, end.y))
        path.Z()
        self.drawing.append(path)
        return path

    def text(self, label: str, x: float, y: float, font_size: int = 12) -> None:
        sx, sy = self.xy(x, y)
        self.drawing.append(draw.Text(
            label, font_size, sx, sy, fill=LABEL_COLOR, text_anchor="middle", font_family="sans-serif"
        ))

    def as_svg(self) -> str:
        return self.drawing.as_svg()


def side_class(segment: Segment, a: Optional[float], b: Optional[float]) -> Optional[str]:
    """
    Angle class of a polygon side read off the geometry.

    Returns:
        'ξ0' for chords of D_b tangent to D_a, 'θ' for sides tangent to D_a
        only, 'η' for chords of D_b missing D_a, None otherwise
    """
    nx, ny = segment.outward_normal()
    distance = segment.start.x * nx + segment.start.y * ny
    tangent = bool(a) and abs(distance - a) <= CONTACT_TOL * a
    chord = b is not None and all(
        abs(math.hypot(p.x, p.y) - b) <= CONTACT_TOL * b for p in (segment.start, segment.end)
    )
    if tangent and chord:
        return "ξ0"
    if tangent:
        return "θ"
    if chord:
        return "η"
    return None


def render_body_svg(
    body: ConvexBody,
    a: Optional[float] = None,
    b: Optional[float] = None,
    title: Optional[str] = None,
    labels: bool = True,
) -> str:
    """
    Draw a body with the constraint circles D_a and D_b.

    Args:
        body: Body to draw
        a: Inner radius (no inner circle when None or 0)
        b: Outer radius (no outer circle when None)
        title: Optional caption at the top
        labels: Mark polygon sides with their angle class

    Returns:
        SVG document text, identical for identical input
    """
    points = body.boundary_points()
    extent = max(float(np.max(np.hypot(points[:, 0], points[:, 1]))), b or 0.0, a or 0.0)
    canvas = RingCanvas(extent)
    canvas.body_path(body, fill=BODY_FILL, fill_opacity=0.6, stroke=BODY_STROKE, stroke_width=2)
    if b:
        canvas.circle(b, fill="none", stroke=CIRCLE_STROKE, stroke_width=1, stroke_dasharray="6,4")
    if a:
        canvas.circle(a, fill="none", stroke=CIRCLE_STROKE, stroke_width=1, stroke_dasharray="2,3")
    if labels:
        for segment in body.segments:
            label = side_class(segment, a, b)
            if label is None:
                continue
            mx = 0.5 * (segment.start.x + segment.end.x)
            my = 0.5 * (segment.start.y + segment.end.y)
            nx, ny = segment.outward_normal()
            offset = 0.06 * extent
            canvas.text(label, mx + offset * nx, my + offset * ny)
    if title:
        canvas.text(title, 0.0, 1.05 * extent, font_size=14)
    return canvas.as_svg()


def render_solution_svg(solution: Solution, index: int = 0) -> str:
    """SVG of one minimizer of a solution with its ring and regime caption."""
    title = f"{shape_label(solution)}, λ = {solution.lam:.6g}"
    return render_body_svg(solution.bodies[index], solution.a, solution.b, title=title)


def render_family_svg(bodies: Sequence[ConvexBody], a: float, b: float) -> List[str]:
    """One drawing per sampled member of the lambda = 2/a family."""
    return [
        render_body_svg(body, a, b, title=f"J = 0 family member {k + 1}", labels=False)
        for k, body in enumerate(bodies)
    ]


def _fmt(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.{SIGNIFICANT_DIGITS}g}"


def format_solution(solution: Solution) -> str:
    """Multi-line console summary."""
    lines = [
        f"Regime:    {solution.regime.value} ({shape_label(solution)})",
        f"Ring:      a = {_fmt(solution.a)}, b = {_fmt(solution.b)}",
        f"Lambda:    {_fmt(solution.lam)}",
        f"J:         {_fmt(solution.J)}",
        f"Area:      {_fmt(solution.area)}",
        f"Perimeter: {_fmt(solution.perimeter)}",
    ]
    config = solution.config
    if config is not None:
        lines.append(f"Classes:   p = {config.p}")
        if config.tangent_angles:
            lines.append("  θ: " + ", ".join(_fmt(t) for t in config.tangent_angles))
        if config.chord_angles:
            lines.append("  η: " + ", ".join(_fmt(e) for e in config.chord_angles))
        cert = solution.certificate
        lines.append(f"KKT residual: {cert.kkt_residual:.3e}, second order ok: {cert.second_order_ok}")
    if len(solution.bodies) > 1:
        lines.append(f"Minimizers: {len(solution.bodies)}")
    if solution.family_note:
        lines.append(f"Note: {solution.family_note}")
    return "\n".join(lines)
