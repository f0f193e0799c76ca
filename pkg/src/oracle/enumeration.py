"""
Config enumeration oracle.

Every structural pattern with at most two free angles is scanned on a grid,
the best ORACLE_REFINE_TOP of them are refined (golden section or bounded
Brent in 1-D, Nelder-Mead in 2-D) and polished on their stationarity
equations. The two disks and a set of arc/tangent hybrids are compared as well.

Patterns (p xi0 sides, R = pi - p*xi0 left for the rest):
    A  nothing else (R = 0)
    B  one tangent pair, theta = R
    C  q equal chords, q*x = R
    D  q-1 chords x and one chord y
    E  one tangent pair and q equal chords
    F  one tangent pair, q-1 chords x and one chord y
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize, minimize_scalar, root

from config.settings import (
    HYBRID_PATTERNS,
    MIN_CHORD_ANGLE,
    ORACLE_REFINE_MARGIN,
    ORACLE_REFINE_TOP,
    TAU_ANGLE,
)
from ..angles import (
    AngleConfig,
    RingParams,
    chord_slope,
    chord_term,
    evaluate_J,
    synthesize_polygon,
    tangent_slope,
    tangent_term,
    xi0_term,
)
from ..geometry import ConvexBody
from ..solver.family import circumscribed_body
from ..solver.sequences import p0
from .results import OracleBudget, OracleMethod, OracleResult

logger = logging.getLogger(__name__)

HYBRID_FILLS = (0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class Pattern:
    """One structural pattern: p xi0 sides plus the listed free classes."""
    name: str
    p: int
    q: int = 0
    tangent: bool = False
    quasi: bool = False

    @property
    def dims(self) -> int:
        if self.name in ("A", "B", "C"):
            return 0
        return 2 if self.name == "F" else 1

    @property
    def x_count(self) -> int:
        return self.q - 1 if self.quasi else self.q

    def label(self) -> str:
        return f"{self.name}(p={self.p}, q={self.q})"


def patterns(ring: RingParams, budget: OracleBudget) -> List[Pattern]:
    """All patterns allowed by the budget."""
    xi = ring.xi0
    top = p0(ring)
    p_max = top if budget.p_max is None else min(budget.p_max, top)
    found: List[Pattern] = []
    for p in range(p_max + 1):
        remaining = math.pi - p * xi
        if abs(remaining) <= TAU_ANGLE:
            found.append(Pattern("A", p))
            continue
        if remaining < 0.0:
            continue
        if p >= 1:
            found.append(Pattern("B", p, tangent=True))
        for q in range(1, budget.q_max + 1):
            found.append(Pattern("C", p, q))
            if q >= 2:
                found.append(Pattern("D", p, q, quasi=True))
            if p >= 1:
                found.append(Pattern("E", p, q, tangent=True))
                if q >= 2:
                    found.append(Pattern("F", p, q, tangent=True, quasi=True))
    return found


class PatternModel:
    """Angles, feasibility and J of one pattern as functions of its free variables."""

    def __init__(self, pattern: Pattern, ring: RingParams, lam: float):
        self.pattern = pattern
        self.ring = ring
        self.lam = lam
        self.remaining = math.pi - pattern.p * ring.xi0
        self.lo = MIN_CHORD_ANGLE
        self.hi = ring.xi0 - MIN_CHORD_ANGLE
        # scalar coefficients for the refinement path
        self._base = pattern.p * xi0_term(ring, lam)
        self._tangent = ring.a * (lam * ring.a - 2.0)
        self._lam_b = lam * ring.b

    def angles(self, free: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(theta, x, y) arrays for rows of free variables; absent classes are zeros."""
        pat, R = self.pattern, self.remaining
        free = np.atleast_2d(np.asarray(free, dtype=float))
        zeros = np.zeros(free.shape[0])
        if pat.name == "A":
            return zeros, zeros, zeros
        if pat.name == "B":
            return zeros + R, zeros, zeros
        if pat.name == "C":
            return zeros, zeros + R / pat.q, zeros
        if pat.name == "D":
            x = free[:, 0]
            return zeros, x, R - (pat.q - 1) * x
        if pat.name == "E":
            theta = free[:, 0]
            return theta, (R - theta) / pat.q, zeros
        theta, x = free[:, 0], free[:, 1]
        return theta, x, R - theta - (pat.q - 1) * x

    def _inside(self, values: np.ndarray) -> np.ndarray:
        return (values >= self.lo) & (values <= self.hi)

    def feasible(self, theta: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        pat = self.pattern
        mask = np.ones(theta.shape, dtype=bool)
        if pat.tangent:
            mask &= self._inside(theta)
        if pat.x_count:
            mask &= self._inside(x)
        if pat.quasi:
            mask &= self._inside(y)
        return mask

    def values(self, free: np.ndarray) -> np.ndarray:
        """J for each row of free variables, +inf where infeasible."""
        pat, ring, lam = self.pattern, self.ring, self.lam
        theta, x, y = self.angles(free)
        mask = self.feasible(theta, x, y)
        J = np.full(theta.shape, pat.p * xi0_term(ring, lam))
        with np.errstate(invalid="ignore", over="ignore"):
            if pat.tangent:
                J = J + tangent_term(ring, lam, theta)
            if pat.x_count:
                J = J + pat.x_count * chord_term(ring, lam, x)
            if pat.quasi:
                J = J + chord_term(ring, lam, y)
        return np.where(mask, J, np.inf)

    def _scalar_angles(self, free) -> Tuple[float, float, float]:
        pat, R = self.pattern, self.remaining
        if pat.name == "A":
            return 0.0, 0.0, 0.0
        if pat.name == "B":
            return R, 0.0, 0.0
        if pat.name == "C":
            return 0.0, R / pat.q, 0.0
        if pat.name == "D":
            x = float(free[0])
            return 0.0, x, R - (pat.q - 1) * x
        if pat.name == "E":
            theta = float(free[0])
            return theta, (R - theta) / pat.q, 0.0
        theta, x = float(free[0]), float(free[1])
        return theta, x, R - theta - (pat.q - 1) * x

    def value(self, free) -> float:
        """J at a single point of the free variables, +inf where infeasible."""
        pat = self.pattern
        theta, x, y = self._scalar_angles(free)
        lo, hi = self.lo, self.hi
        if pat.tangent and not lo <= theta <= hi:
            return math.inf
        if pat.x_count and not lo <= x <= hi:
            return math.inf
        if pat.quasi and not lo <= y <= hi:
            return math.inf
        b, lam_b = self.ring.b, self._lam_b
        J = self._base
        if pat.tangent:
            J += self._tangent * math.tan(theta)
        if pat.x_count:
            J += pat.x_count * b * math.sin(x) * (lam_b * math.cos(x) - 2.0)
        if pat.quasi:
            J += b * math.sin(y) * (lam_b * math.cos(y) - 2.0)
        return J

    def gradient(self, free) -> np.ndarray:
        """Derivative of J along the free variables with the dependent angle eliminated."""
        pat, ring, lam = self.pattern, self.ring, self.lam
        theta, x, y = self._scalar_angles(free)
        if pat.name == "D":
            return np.array([(pat.q - 1) * (chord_slope(ring, lam, x) - chord_slope(ring, lam, y))])
        if pat.name == "E":
            return np.array([tangent_slope(ring, lam, theta) - chord_slope(ring, lam, x)])
        dep = chord_slope(ring, lam, y)
        return np.array([
            tangent_slope(ring, lam, theta) - dep,
            (pat.q - 1) * (chord_slope(ring, lam, x) - dep),
        ])

    def free_ranges(self) -> List[Tuple[float, float]]:
        """Box of each free variable implied by the angle bounds (may be empty)."""
        pat, R = self.pattern, self.remaining
        lo, hi = self.lo, self.hi
        if pat.name == "D":
            k = pat.q - 1
            return [(max(lo, (R - hi) / k), min(hi, (R - lo) / k))]
        if pat.name == "E":
            return [(max(lo, R - pat.q * hi), min(hi, R - pat.q * lo))]
        if pat.name == "F":
            return [(lo, min(hi, R - pat.q * lo)), (lo, min(hi, (R - 2.0 * lo) / (pat.q - 1)))]
        return []

    def config(self, free) -> AngleConfig:
        pat = self.pattern
        theta, x, y = self._scalar_angles(free)
        tangent = (theta,) if pat.tangent else ()
        chords = (x,) * pat.x_count + ((y,) if pat.quasi else ())
        return AngleConfig(pat.p, tangent, chords)


def _axis(lo: float, hi: float, step: float) -> np.ndarray:
    count = max(3, int(math.ceil((hi - lo) / step)) + 1)
    return np.linspace(lo, hi, count)


def grid_scan(model: PatternModel, grid_n: int) -> Tuple[float, np.ndarray, int]:
    """
    Best grid point of a pattern.

    Returns:
        Tuple of (J, free variables, number of evaluations); J is +inf when
        no grid point is feasible
    """
    if model.pattern.dims == 0:
        J = model.value(np.zeros(0))
        return J, np.zeros(0), 1
    ranges = model.free_ranges()
    if any(lo > hi for lo, hi in ranges):
        return math.inf, np.zeros(len(ranges)), 0
    step = math.pi / grid_n
    axes = [_axis(lo, hi, step) for lo, hi in ranges]
    mesh = np.stack([m.ravel() for m in np.meshgrid(*axes, indexing="ij")], axis=1)
    values = model.values(mesh)
    best = int(np.argmin(values))
    return float(values[best]), mesh[best], int(mesh.shape[0])


def refine(model: PatternModel, start: np.ndarray, grid_n: int) -> Tuple[float, np.ndarray, int]:
    """Local refinement from the best grid point: golden/bounded in 1-D, Nelder-Mead in 2-D."""
    dims = model.pattern.dims
    if dims == 0:
        return model.value(start), start, 0
    step = math.pi / grid_n
    if dims == 1:
        lo_box, hi_box = model.free_ranges()[0]
        x0 = float(start[0])
        left, right = max(lo_box, x0 - step), min(hi_box, x0 + step)
        f = lambda t: model.value([t])
        f0, f_left, f_right = f(x0), f(left), f(right)
        if left < x0 < right and f0 < f_left and f0 < f_right:
            res = minimize_scalar(f, bracket=(left, x0, right), method="golden", tol=1e-12)
        else:
            res = minimize_scalar(f, bounds=(left, right), method="bounded", options={"xatol": 1e-12})
        best = np.array([float(res.x)])
        return model.value(best), best, int(res.nfev) + 3
    res = minimize(
        model.value,
        start,
        method="Nelder-Mead",
        options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000, "initial_simplex": np.array([
            start, start + [step, 0.0], start + [0.0, step],
        ])},
    )
    best = np.asarray(res.x, dtype=float)
    value = model.value(best)
    if not math.isfinite(value) or value > model.value(start):
        return model.value(start), start, int(res.nfev)
    return value, best, int(res.nfev)


def polish(model: PatternModel, start: np.ndarray) -> Tuple[float, np.ndarray, int]:
    """
    Solve the reduced stationarity equations from a refined point.

    The polished point replaces the start only when it is feasible and does
    not raise J.
    """
    start_value = model.value(start)
    if model.pattern.dims == 0:
        return start_value, start, 0
    res = root(model.gradient, start, method="hybr", tol=1e-15)
    candidate = np.asarray(res.x, dtype=float)
    value = model.value(candidate)
    evaluations = int(res.nfev)
    if res.success and math.isfinite(value) and value <= start_value + 1e-12 * max(1.0, abs(start_value)):
        return value, candidate, evaluations
    return start_value, start, evaluations


def hybrid_J(a: float, lam: float, corners: int, theta: float) -> float:
    """J of D_a with `corners` equal tangent corners of half-angle theta."""
    return a * (lam * a - 2.0) * (corners * math.tan(theta) + math.pi - corners * theta)


def hybrid_shapes(ring: RingParams) -> List[Tuple[int, float]]:
    """(corners, half-angle) of the sampled hybrids that fit in D_b."""
    shapes = []
    for k in range(1, HYBRID_PATTERNS // len(HYBRID_FILLS) + 1):
        for fill in HYBRID_FILLS:
            theta = fill * math.pi / k
            if theta < ring.xi0 and theta < 0.5 * math.pi:
                shapes.append((k, theta))
    return shapes


def hybrid_body(a: float, corners: int, theta: float) -> ConvexBody:
    step = 2.0 * math.pi / corners
    return circumscribed_body(a, [(k * step, theta) for k in range(corners)])


def enumerate_configs(ring: RingParams, lam: float, budget: Optional[OracleBudget] = None) -> OracleResult:
    """
    Global minimum over the enumerated structures, the two disks and the hybrids.

    Args:
        ring: Ring radii
        lam: Area weight lambda
        budget: Pattern limits (defaults: p0, 16, 100)

    Returns:
        OracleResult with method ConfigEnumeration; config is None for disks
        and arc/tangent hybrids
    """
    budget = budget or OracleBudget()
    a, b = ring.a, ring.b
    scanned = []
    evaluations = 0
    for pattern in patterns(ring, budget):
        model = PatternModel(pattern, ring, lam)
        value, free, count = grid_scan(model, budget.grid_n)
        evaluations += count
        if math.isfinite(value):
            scanned.append((value, model, free))
    logger.debug(f"Scanned {len(scanned)} feasible patterns with {evaluations} evaluations")

    best_config: Optional[AngleConfig] = None
    best_pattern: Optional[str] = None
    best_value = math.inf
    if scanned:
        grid_best = min(v for v, _, _ in scanned)
        margin = ORACLE_REFINE_MARGIN * max(1.0, abs(grid_best))
        shortlist = sorted((item for item in scanned if item[0] <= grid_best + margin), key=lambda item: item[0])
        shortlist = shortlist[:ORACLE_REFINE_TOP]
        logger.debug(f"Refining {len(shortlist)} of {len(scanned)} patterns")
        for value, model, free in shortlist:
            value, free, count = refine(model, free, budget.grid_n)
            evaluations += count
            value, free, count = polish(model, free)
            evaluations += count
            if value < best_value:
                best_value = value
                best_config = model.config(free).validated(ring)
                best_pattern = model.pattern.label()
        best_value = evaluate_J(best_config, ring, lam)

    # disks and hybrids: (J, body factory, config, label)
    extra = [
        (lam * math.pi * b * b - 2.0 * math.pi * b, lambda: ConvexBody.disk(b), None, "D_b"),
        (lam * math.pi * a * a - 2.0 * math.pi * a, lambda: ConvexBody.disk(a), None, "D_a"),
    ]
    for corners, theta in hybrid_shapes(ring):
        config = None
        if abs(corners * theta - math.pi) <= TAU_ANGLE:
            config = AngleConfig(0, (theta,) * corners)
        extra.append((
            hybrid_J(a, lam, corners, theta),
            lambda k=corners, t=theta: hybrid_body(a, k, t),
            config,
            f"hybrid(k={corners}, theta={theta:.6f})",
        ))
    evaluations += len(extra)

    result_body: Optional[ConvexBody] = None
    for value, factory, config, label in extra:
        if value < best_value - 1e-12 * max(1.0, abs(value)):
            best_value, best_config, best_pattern = value, config, label
            result_body = factory()
    if result_body is None:
        result_body = synthesize_polygon(best_config, ring)
    logger.debug(f"Enumeration at lambda={lam}: {best_pattern} J={best_value:.12g}")
    return OracleResult(
        J=best_value,
        body=result_body,
        method=OracleMethod.CONFIG_ENUMERATION,
        evaluations=evaluations,
        config=best_config,
        pattern=best_pattern,
    )
