"""
Triangle band: for b > 2a and 1/(a+b) <= lambda <= 1/b the minimizer is one
of five triangles inscribed in D_b.
"""

import logging
import math
from typing import Dict, Optional, Sequence

from config.settings import LAMBDA_EQ_TOL, TAU_ANGLE
from ..angles import AngleConfig, RingParams
from ..errors import RegimeError
from .regimes import Regime, Solution, polygon_solution, select_minimizers

logger = logging.getLogger(__name__)

TRIANGLE_NAMES = ("T", "T'", "T''", "T'''", "T''''")


def inscribed_config(ring: RingParams, angles: Sequence[float]) -> Optional[AngleConfig]:
    """
    Config of the inscribed polygon with the given chord half-angles.

    Angles equal to xi0 (within TAU_ANGLE) become xi0 sides; returns None when
    an angle is not in (0, xi0].
    """
    xi = ring.xi0
    p = 0
    chords = []
    for angle in angles:
        if abs(angle - xi) <= TAU_ANGLE:
            p += 1
        elif 0.0 < angle < xi:
            chords.append(angle)
        else:
            return None
    return AngleConfig(p, (), tuple(chords))


def _check_band(ring: RingParams, lam: float) -> None:
    a, b = ring.a, ring.b
    if not b > 2.0 * a:
        raise RegimeError(f"Triangle band needs b > 2a, got a={a}, b={b}")
    lo, hi = 1.0 / (a + b), 1.0 / b
    slack = LAMBDA_EQ_TOL * max(1.0, hi)
    if not (lo - slack <= lam <= hi + slack):
        raise RegimeError(f"lambda={lam} outside the triangle band [{lo}, {hi}]")


def triangle_candidates(ring: RingParams, lam: float) -> Dict[str, AngleConfig]:
    """
    Feasible candidate triangles keyed by name.

    T is equilateral; T' is isosceles with cos x = (1 + sqrt(9 - 8 lambda b))/4;
    T'' has one xi0 side and two equal chords; T''' has one xi0 side and
    u with sin(u + xi0/2) * 2 lambda b sin(xi0/2) = 1; T'''' has two xi0 sides.
    """
    xi = ring.xi0
    b = ring.b
    third = math.pi / 3.0
    shapes: Dict[str, Optional[AngleConfig]] = {}
    shapes["T"] = inscribed_config(ring, (third,) * 3)

    disc = 9.0 - 8.0 * lam * b
    if disc >= 0.0:
        x_bar = math.acos(min(1.0, (1.0 + math.sqrt(disc)) / 4.0))
        if third - TAU_ANGLE <= x_bar <= xi + TAU_ANGLE:
            shapes["T'"] = inscribed_config(ring, (x_bar, x_bar, math.pi - 2.0 * x_bar))

    half = 0.5 * (math.pi - xi)
    shapes["T''"] = inscribed_config(ring, (xi, half, half))

    level = 1.0 / (2.0 * lam * b * math.sin(0.5 * xi)) if lam > 0.0 else math.inf
    if level <= 1.0:
        u_bar = math.pi - math.asin(level) - 0.5 * xi
        if half < u_bar < xi:
            shapes["T'''"] = inscribed_config(ring, (xi, u_bar, math.pi - xi - u_bar))

    shapes["T''''"] = inscribed_config(ring, (xi, xi, math.pi - 2.0 * xi))
    feasible = {name: cfg for name, cfg in shapes.items() if cfg is not None}
    logger.debug(f"Triangle candidates at lambda={lam}: {sorted(feasible)}")
    return feasible


def triangle_band_solver(ring: RingParams, lam: float) -> Solution:
    """
    Best triangle of the band.

    Raises:
        RegimeError: b <= 2a or lambda outside [1/(a+b), 1/b]
    """
    _check_band(ring, lam)
    winners = select_minimizers(triangle_candidates(ring, lam).values(), ring, lam)
    return polygon_solution(Regime.TRIANGLE_BAND, ring, lam, winners)
