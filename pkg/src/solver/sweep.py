"""
Lambda sweeps: one row per maximal interval with a constant regime and
optimal structure, with boundaries located by bisection.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from config.settings import BOUNDARY_LIMIT, BOUNDARY_XTOL
from ..angles import AngleConfig, RingParams
from ..errors import ParameterError
from ..runtime import worker_count
from .dispatch import solve
from .regimes import Regime, Solution

logger = logging.getLogger(__name__)

SIDE_NAMES = {3: "triangle", 4: "quadrilateral", 5: "pentagon", 6: "hexagon", 7: "heptagon", 8: "octagon"}


def _chord_class(angles: Sequence[float]) -> str:
    if not angles:
        return "none"
    values = sorted(angles, reverse=True)
    if values[0] - values[-1] <= 1e-7:
        return "regular"
    if len(values) >= 2 and values[0] - values[-2] <= 1e-7:
        return "quasi"
    return "mixed"


def shape_key(solution: Solution) -> Tuple:
    """
    Structural identity of a solution, shared by every lambda of a sweep row.

    Polygons of equal angle classes found by different regimes get different
    keys, so a row never spans a regime change.
    """
    config = solution.config
    if config is None:
        return (solution.regime.value, round(solution.perimeter, 9))
    return (
        solution.regime.value,
        config.p,
        len(config.tangent_angles),
        len(config.chord_angles),
        _chord_class(config.chord_angles),
    )


def shape_label(solution: Solution) -> str:
    """Short human description, e.g. 'regular inscribed pentagon'."""
    regime = solution.regime
    if regime == Regime.OUTER_DISK:
        return "disk D_b"
    if regime == Regime.INNER_DISK:
        return "disk D_a"
    if regime == Regime.CIRCUMSCRIBED_FAMILY:
        return "circumscribed family (J = 0)"
    if regime == Regime.DOUBLE_DIAMETER:
        return "double diameter"
    config = solution.config
    sides = config.side_count
    name = SIDE_NAMES.get(sides, f"{sides}-gon")
    chords = _chord_class(config.chord_angles)
    if config.p == 0 and not config.tangent_angles:
        kind = "regular inscribed" if chords == "regular" else ("quasi-regular inscribed" if chords == "quasi" else "inscribed")
        return f"{kind} {name}"
    if config.tangent_angles and not config.chord_angles:
        return f"{name} circumscribed to D_a"
    if not config.tangent_angles and not config.chord_angles:
        return f"regular {name} circumscribed to D_a, inscribed in D_b"
    return f"{name} inscribed in D_b with {config.p} sides tangent to D_a"


@dataclass
class SweepRow:
    """One lambda interval of the regime table."""
    lambda_lo: float
    lambda_hi: float
    regime: str
    label: str
    config: Optional[AngleConfig]
    area: float
    perimeter: float
    J: float

    @property
    def p(self) -> int:
        return self.config.p if self.config else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda_lo": self.lambda_lo,
            "lambda_hi": self.lambda_hi,
            "regime": self.regime,
            "label": self.label,
            "p": self.p,
            "tangent_angles": list(self.config.tangent_angles) if self.config else [],
            "chord_angles": list(self.config.chord_angles) if self.config else [],
            "area": self.area,
            "perimeter": self.perimeter,
            "J": self.J,
        }


def _row(lo: float, hi: float, solution: Solution) -> SweepRow:
    return SweepRow(
        lambda_lo=lo,
        lambda_hi=hi,
        regime=solution.regime.value,
        label=shape_label(solution),
        config=solution.config,
        area=solution.area,
        perimeter=solution.perimeter,
        J=solution.J,
    )


def locate_boundary(
    ring: RingParams,
    lo: float,
    hi: float,
    xtol: float = BOUNDARY_XTOL,
) -> Tuple[float, float, Solution]:
    """
    Bisect [lo, hi] down to xtol on a change of shape_key away from its value at lo.

    Returns:
        Tuple of (last lambda with the left structure, first lambda with another, solution there)
    """
    left_key = shape_key(solve(ring, lo))
    right = solve(ring, hi)
    if shape_key(right) == left_key:
        raise ParameterError(f"No structural change between {lo} and {hi}")
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        current = solve(ring, mid)
        if shape_key(current) == left_key:
            lo = mid
        else:
            hi, right = mid, current
    return lo, hi, right


def _check_grid(grid: Sequence[float]) -> List[float]:
    values = [float(v) for v in grid]
    if len(values) < 1:
        raise ParameterError("lambda grid is empty")
    if any(v < 0.0 for v in values):
        raise ParameterError("lambda grid must be non-negative")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ParameterError("lambda grid must be strictly ascending")
    return values


def sweep(ring: RingParams, grid: Sequence[float], n_jobs: Optional[int] = None) -> List[SweepRow]:
    """
    Regime table over a lambda grid.

    Grid points are solved in parallel (ANNULUS_OPT_THREADS workers by
    default); every structural change between neighbours is resolved to
    BOUNDARY_XTOL, at most BOUNDARY_LIMIT changes per grid cell.

    Returns:
        Rows covering [grid[0], grid[-1]] in ascending order
    """
    values = _check_grid(grid)
    jobs = worker_count() if n_jobs is None else n_jobs
    solutions = Parallel(n_jobs=jobs)(delayed(solve)(ring, lam) for lam in values)
    rows: List[SweepRow] = []
    row_lo, row_solution = values[0], solutions[0]
    for k in range(1, len(values)):
        left_key = shape_key(solutions[k - 1])
        if shape_key(solutions[k]) == left_key:
            continue
        start = values[k - 1]
        target_key = shape_key(solutions[k])
        for _ in range(BOUNDARY_LIMIT):
            last_left, first_right, right = locate_boundary(ring, start, values[k])
            boundary = 0.5 * (last_left + first_right)
            rows.append(_row(row_lo, boundary, row_solution))
            row_lo, row_solution = boundary, right
            if shape_key(right) == target_key:
                break
            start = first_right
        else:
            logger.warning(f"More than {BOUNDARY_LIMIT} structural changes in [{values[k - 1]}, {values[k]}]")
            row_solution = solutions[k]
    rows.append(_row(row_lo, values[-1], row_solution))
    logger.info(f"Sweep over {len(values)} lambdas: {len(rows)} rows")
    return rows
