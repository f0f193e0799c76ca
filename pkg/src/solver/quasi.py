"""
Quasi-regular inscribed polygons.

A quasi-regular polygon has p xi0 sides, q-1 chords of half-angle x and one
smaller chord of half-angle y, with (q-1)x + y = pi - p*xi0 and
cos x + cos y = 1/(lambda b). Writing y = phi(x) = arccos(1/(lambda b) - cos x),
the roots are the zeros of psi(x) = phi(x) - pi + p*xi0 + (q-1)x on
[x2, x1), where psi decreases.
"""

import logging
import math
from typing import List, Optional, Tuple

from scipy.optimize import brentq

from config.settings import MAX_QUASI_SIDES, MIN_CHORD_ANGLE, ROOT_XTOL, TAU_ANGLE
from ..angles import AngleConfig, RingParams, regular_config, second_order_ok
from ..errors import RegimeError
from .sequences import p0

logger = logging.getLogger(__name__)


def _level(b: float, lam: float) -> float:
    if lam <= 0.0:
        raise RegimeError(f"lambda must be positive, got {lam}")
    return 1.0 / (lam * b)


def _phi(c: float, x: float) -> float:
    return math.acos(min(1.0, max(-1.0, c - math.cos(x))))


def x_bounds(b: float, lam: float) -> Tuple[float, float]:
    """
    Bracket angles with cos x0 = 1/(2 lambda b) and cos x1 = 1/(lambda b) - 1.

    Raises:
        RegimeError: lambda < 1/(2b), where the arccos arguments leave [-1, 1]
    """
    c = _level(b, lam)
    if c / 2.0 > 1.0 + 1e-15 or c - 1.0 > 1.0 + 1e-15:
        raise RegimeError(f"lambda={lam} below 1/(2b)={0.5 / b}: no quasi-regular bracket")
    x0 = math.acos(min(1.0, c / 2.0))
    x1 = math.acos(min(1.0, max(-1.0, c - 1.0)))
    return x0, x1


def x2y2(b: float, lam: float, q: int) -> Tuple[float, float]:
    """
    Point of the curve cos x + cos y = 1/(lambda b) where its slope is -(q-1).

    For q = 2 this is the diagonal point (x0, x0).

    Raises:
        RegimeError: no such point with x2 > y2 > 0
    """
    if q < 2:
        raise RegimeError(f"q must be at least 2, got {q}")
    x0, x1 = x_bounds(b, lam)
    if q == 2:
        return x0, x0
    if x1 - x0 <= ROOT_XTOL:
        raise RegimeError(f"Empty bracket [{x0}, {x1}] for q={q}")
    c = 1.0 / (lam * b)
    k = q - 1

    def slope_gap(x: float) -> float:
        return math.sin(x) - k * math.sin(_phi(c, x))

    x2 = brentq(slope_gap, x0, x1, xtol=ROOT_XTOL)
    y2 = _phi(c, x2)
    if not (0.0 < y2 < x2):
        raise RegimeError(f"Tangency point ({x2}, {y2}) outside the octant x > y > 0")
    return x2, y2


def y2_closed_form(b: float, lam: float, q: int) -> float:
    """
    Explicit y2: cos y2 = (sqrt(k^2 c^2 + (k^2 - 1)^2) - c) / (k^2 - 1) with
    k = q - 1 and c = 1/(lambda b); for q = 2, cos y2 = c/2.
    """
    c = _level(b, lam)
    k = q - 1
    if k == 1:
        return math.acos(min(1.0, c / 2.0))
    kk = k * k - 1.0
    u = (math.sqrt(k * k * c * c + kk * kk) - c) / kk
    return math.acos(min(1.0, max(-1.0, u)))


def q_bounds(ring: RingParams, lam: float, p: int) -> Tuple[int, int]:
    """
    Range of q admitting a root for p xi0 sides.

    q >= p0 + 1 - p because every chord is shorter than a xi0 side, and
    psi(x1) = (q-1)x1 - R <= 0 gives q <= R/x1 + 1, R = pi - p*xi0. The lower
    end R/x1 follows from y2 < x2 < x1. An empty range is returned as (lo, hi)
    with lo > hi.
    """
    _, x1 = x_bounds(ring.b, lam)
    remaining = math.pi - p * ring.xi0
    lo = max(2, p0(ring) + 1 - p)
    if x1 <= 0.0 or remaining <= TAU_ANGLE:
        return lo, lo - 1
    ratio = remaining / x1
    lo = max(lo, int(math.floor(ratio)))
    hi = min(int(math.floor(ratio + 1.0)), MAX_QUASI_SIDES)
    return lo, hi


def quasi_regular_root(ring: RingParams, lam: float, p: int, q: int) -> Optional[AngleConfig]:
    """
    The quasi-regular config for (p, q), or None when psi has no root on [x2, x1).

    Roots with y below MIN_CHORD_ANGLE (the polygon degenerates to q-1 sides),
    with x >= xi0, or violating sin x >= (q-1) sin y are discarded.
    """
    remaining = math.pi - p * ring.xi0
    if remaining <= TAU_ANGLE:
        return None
    b = ring.b
    c = 1.0 / (lam * b)
    try:
        x2, _ = x2y2(b, lam, q)
        _, x1 = x_bounds(b, lam)
    except RegimeError:
        return None

    def psi(x: float) -> float:
        return _phi(c, x) - remaining + (q - 1) * x

    lo_val, hi_val = psi(x2), psi(x1)
    if not (lo_val >= 0.0 >= hi_val):
        return None
    if hi_val == 0.0:
        x = x1
    elif lo_val == 0.0:
        x = x2
    else:
        x = brentq(psi, x2, x1, xtol=ROOT_XTOL)
    y = _phi(c, x)
    if y < MIN_CHORD_ANGLE or x >= ring.xi0 or y >= x:
        return None
    if math.sin(x) < (q - 1) * math.sin(y):
        return None
    # absorb the root tolerance in y so the angles add up to pi
    y = remaining - (q - 1) * x
    if y < MIN_CHORD_ANGLE:
        return None
    logger.debug(f"Quasi-regular root p={p} q={q}: x={x:.13f} y={y:.13f}")
    return AngleConfig(p, (), (x,) * (q - 1) + (y,))


def quasi_regular_candidates(ring: RingParams, lam: float, p_values: Optional[List[int]] = None) -> List[AngleConfig]:
    """
    Quasi-regular roots passing the second-order test, plus the regular configs
    {x * q} with q*x = pi - p*xi0, for every admissible (p, q).

    Args:
        ring: Ring radii
        lam: lambda in (1/(2b), 1/b)
        p_values: Restrict the xi0 counts (default 0..p0)

    Returns:
        Candidate configs, possibly empty
    """
    b = ring.b
    if not (0.5 / b < lam < 1.0 / b):
        raise RegimeError(f"lambda={lam} outside the inscribed band (1/(2b), 1/b)")
    ps = range(p0(ring) + 1) if p_values is None else p_values
    candidates: List[AngleConfig] = []
    for p in ps:
        remaining = math.pi - p * ring.xi0
        if remaining <= TAU_ANGLE:
            continue
        lo, hi = q_bounds(ring, lam, p)
        for q in range(lo, hi + 1):
            config = quasi_regular_root(ring, lam, p, q)
            if config is not None and second_order_ok(config, ring, lam).ok:
                candidates.append(config)
            if remaining / q <= ring.xi0 + TAU_ANGLE:
                candidates.append(regular_config(ring, q, p=p))
    logger.debug(f"{len(candidates)} quasi-regular candidates at lambda={lam}")
    return candidates
