"""
Support descent oracle.

A body is described by its support numbers h_k at the M equally spaced
normal directions k*Delta. Face lengths follow from second differences,
so J = lambda * 1/2 sum(h l) - sum(l) is a quadratic in h. The descent keeps
a <= h <= b cos(Delta/2) (so every vertex of the reconstructed polygon
lies in D_b) and repairs discrete convexity l_k >= 0 after each step.

The normal fan is fixed, so the minimum is only an approximation of the
continuous problem.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from scipy.spatial import ConvexHull, QhullError

from config.settings import (
    DESCENT_M,
    DESCENT_MAX_ITER,
    DESCENT_MIN_STEP,
    DESCENT_RESTARTS,
    TAU_GEOM,
)
from ..angles import RingParams
from ..errors import GeometryError, ParameterError
from ..geometry import ConvexBody
from ..runtime import worker_count
from .results import OracleMethod, OracleResult, body_J

logger = logging.getLogger(__name__)

MIN_FAN = 8
FAN_NOTE = "fixed normal fan approximation"


class SupportFan:
    """Support-number functional on M fixed normal directions."""

    def __init__(self, ring: RingParams, lam: float, M: int):
        self.ring = ring
        self.lam = lam
        self.M = M
        self.delta = 2.0 * math.pi / M
        self.cos_d = math.cos(self.delta)
        self.sin_d = math.sin(self.delta)
        self.lower = ring.a
        self.upper = ring.b * math.cos(0.5 * self.delta)
        if self.upper < self.lower:
            raise ParameterError(
                f"M={M} too coarse: b cos(pi/M)={self.upper:.6g} is below a={self.lower}"
            )
        # d(sum l)/dh_k is the same for every k
        self.perimeter_slope = 2.0 * (1.0 - self.cos_d) / self.sin_d

    def faces(self, h: np.ndarray) -> np.ndarray:
        """Face lengths l_k = (h_{k-1} - 2 h_k cos Delta + h_{k+1}) / sin Delta."""
        return (np.roll(h, 1) - 2.0 * self.cos_d * h + np.roll(h, -1)) / self.sin_d

    def value(self, h: np.ndarray) -> float:
        faces = self.faces(h)
        return float(self.lam * 0.5 * np.dot(h, faces) - faces.sum())

    def gradient(self, h: np.ndarray) -> np.ndarray:
        return self.lam * self.faces(h) - self.perimeter_slope

    def clamp(self, h: np.ndarray) -> np.ndarray:
        return np.clip(h, self.lower, self.upper)

    def repair(self, h: np.ndarray) -> np.ndarray:
        """
        Restore l_k >= -TAU_GEOM by red-black passes.

        A violating h_k is lowered to (h_{k-1} + h_{k+1}) / (2 cos Delta),
        which makes its own face length zero; at most 10*M passes.
        """
        h = h.copy()
        even = np.arange(self.M) % 2 == 0
        # odd M: the last index neighbours index 0, so it gets its own colour
        colours = [even, ~even] if self.M % 2 == 0 else [even & (np.arange(self.M) < self.M - 1), ~even, np.arange(self.M) == self.M - 1]
        for _ in range(10 * self.M):
            if self.faces(h).min() >= -TAU_GEOM:
                break
            for colour in colours:
                bad = (self.faces(h) < -TAU_GEOM) & colour
                if bad.any():
                    target = (np.roll(h, 1) + np.roll(h, -1)) / (2.0 * self.cos_d)
                    h[bad] = target[bad]
            h = self.clamp(h)
        return h

    def vertices(self, h: np.ndarray) -> np.ndarray:
        """Intersections of consecutive supporting lines."""
        k = np.arange(self.M)
        nxt = np.roll(h, -1)
        x = (h * np.sin((k + 1) * self.delta) - nxt * np.sin(k * self.delta)) / self.sin_d
        y = (-h * np.cos((k + 1) * self.delta) + nxt * np.cos(k * self.delta)) / self.sin_d
        return np.column_stack((x, y))

    def body(self, h: np.ndarray) -> ConvexBody:
        points = self.vertices(h)
        try:
            hull = ConvexHull(points)
        except QhullError as exc:
            raise GeometryError(f"Support vector yields a degenerate polygon: {exc}")
        return ConvexBody.from_vertices(points[hull.vertices])


def _inscribed_start(fan: SupportFan, rng: np.random.Generator) -> np.ndarray:
    """Support numbers of a random polygon with vertices on D_b."""
    count = int(rng.integers(3, 9))
    angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, count))
    points = fan.ring.b * np.column_stack((np.cos(angles), np.sin(angles)))
    directions = np.arange(fan.M) * fan.delta
    normals = np.column_stack((np.cos(directions), np.sin(directions)))
    return (normals @ points.T).max(axis=1)


def starting_point(fan: SupportFan, restart: int, rng: np.random.Generator) -> np.ndarray:
    """Restart 0 is the largest fan polygon, restart 1 the smallest, the rest random."""
    if restart == 0:
        return np.full(fan.M, fan.upper)
    if restart == 1:
        return np.full(fan.M, fan.lower)
    if restart % 2 == 0:
        h = _inscribed_start(fan, rng)
    else:
        h = rng.uniform(fan.lower, fan.upper, fan.M)
    return fan.repair(fan.clamp(h))


def descend(fan: SupportFan, h: np.ndarray) -> Tuple[np.ndarray, float, List[float], int]:
    """
    Projected normalized-gradient descent with an adaptive step.

    Returns:
        Tuple of (support numbers, J, accepted J history, evaluations)
    """
    current = fan.value(h)
    history = [current]
    evaluations = 1
    step = 0.1 * (fan.upper - fan.lower) + 1e-3 * fan.ring.b
    for _ in range(DESCENT_MAX_ITER):
        if step < DESCENT_MIN_STEP:
            break
        grad = fan.gradient(h)
        norm = float(np.max(np.abs(grad)))
        if norm == 0.0:
            break
        trial = fan.repair(fan.clamp(h - step * grad / norm))
        value = fan.value(trial)
        evaluations += 1
        if value < current:
            h, current = trial, value
            history.append(current)
            step *= 1.5
        else:
            step *= 0.5
    return h, current, history, evaluations


def _run_restart(ring: RingParams, lam: float, M: int, restart: int, seed: np.random.SeedSequence):
    fan = SupportFan(ring, lam, M)
    rng = np.random.default_rng(seed)
    h0 = starting_point(fan, restart, rng)
    h, value, history, evaluations = descend(fan, h0)
    return value, evaluations, restart, h, history


def support_descent(
    ring: RingParams,
    lam: float,
    M: int = DESCENT_M,
    restarts: int = DESCENT_RESTARTS,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> OracleResult:
    """
    Minimize the discretized functional over support vectors.

    Args:
        ring: Ring radii
        lam: Area weight lambda
        M: Number of normal directions (>= 8; 180 or more for certification)
        restarts: Independent starts, run through joblib
        seed: Root seed; each restart gets a spawned child sequence
        n_jobs: Worker count (ANNULUS_OPT_THREADS by default)

    Returns:
        OracleResult whose body is the reconstructed polygon; J is measured
        on that polygon
    """
    if M < MIN_FAN:
        raise ParameterError(f"M must be at least {MIN_FAN}, got {M}")
    if restarts < 1:
        raise ParameterError(f"restarts must be positive, got {restarts}")
    SupportFan(ring, lam, M)
    children = np.random.SeedSequence(seed).spawn(restarts)
    jobs = worker_count() if n_jobs is None else n_jobs
    runs = Parallel(n_jobs=jobs)(
        delayed(_run_restart)(ring, lam, M, k, child) for k, child in enumerate(children)
    )
    value, evaluations, restart, h, history = min(runs, key=lambda run: (run[0], run[1], run[2]))
    total = sum(run[1] for run in runs)
    body = SupportFan(ring, lam, M).body(h)
    J = body_J(body, lam)
    logger.debug(f"Support descent M={M}: best restart {restart}, fan J={value:.10g}, body J={J:.10g}")
    return OracleResult(
        J=J,
        body=body,
        method=OracleMethod.SUPPORT_DESCENT,
        evaluations=total,
        history=history,
        notes=(FAN_NOTE,),
    )
