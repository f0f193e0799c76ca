"""
Problems with a single disk constraint: D_a inside the set only, or the
set inside D_b only.
"""

import logging
import math
from typing import List, Tuple, Union

from config.settings import LAMBDA_EQ_TOL, OUTER_ONLY_INNER_FRACTION
from ..angles import RingParams, non_polygon_certificate
from ..errors import ParameterError
from ..geometry import ConvexBody
from .dispatch import solve
from .regimes import FAMILY_NOTE, NoSolution, Regime, Solution, check_lambda, disk_solution

logger = logging.getLogger(__name__)

WITNESS_LENGTH = 8


def _check_radius(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise ParameterError(f"{name} must be positive and finite, got {value}")
    return value


def triangle_witness(a: float, lam: float, count: int = WITNESS_LENGTH) -> List[Tuple[float, float]]:
    """
    (b, J) for isosceles triangles circumscribed to D_a with two sides that
    are chords of D_b, b = 4a * 2^k; J -> -infinity when lambda < 2/a.
    """
    witness = []
    for k in range(count):
        b = 4.0 * a * 2.0 ** k
        xi = math.acos(a / b)
        J = (lam * a - 2.0) * a * (2.0 * math.tan(xi) + math.tan(math.pi - 2.0 * xi))
        witness.append((b, J))
    return witness


def solve_inner_only(a: float, lam: float) -> Union[Solution, NoSolution]:
    """
    Minimize lambda*area - perimeter over convex sets containing D_a.

    Returns:
        NoSolution for lambda < 2/a, the zero-J family at lambda = 2/a, D_a above
    """
    a = _check_radius("a", a)
    lam = check_lambda(lam)
    critical = 2.0 / a
    if abs(lam - critical) <= LAMBDA_EQ_TOL * max(1.0, critical):
        solution = disk_solution(Regime.CIRCUMSCRIBED_FAMILY, a, lam, a, None)
        solution.J = 0.0
        solution.family_note = FAMILY_NOTE
        return solution
    if lam > critical:
        return disk_solution(Regime.INNER_DISK, a, lam, a, None)
    witness = triangle_witness(a, lam)
    logger.info(f"No minimizer for a={a}, lambda={lam} < 2/a: J unbounded below")
    return NoSolution(
        lam=lam,
        a=a,
        reason="J is unbounded below for lambda < 2/a",
        witness=witness,
    )


def solve_outer_only(b: float, lam: float) -> Solution:
    """
    Minimize lambda*area - perimeter over convex sets inside D_b.

    Below 1/b the answer is the ring answer with a vanishing inner disk; from
    1/b on it is the diameter traversed twice, J = -4b. The returned Solution
    reports a = 0.
    """
    b = _check_radius("b", b)
    lam = check_lambda(lam)
    if lam <= 0.5 / b:
        return disk_solution(Regime.OUTER_DISK, b, lam, 0.0, b)
    if lam < 1.0 / b:
        solution = solve(RingParams(OUTER_ONLY_INNER_FRACTION * b, b), lam)
        solution.a = 0.0
        return solution
    body = ConvexBody.double_diameter(b)
    return Solution(
        regime=Regime.DOUBLE_DIAMETER,
        lam=lam,
        a=0.0,
        b=b,
        bodies=[body],
        J=-4.0 * b,
        area=0.0,
        perimeter=4.0 * b,
        certificate=non_polygon_certificate(),
    )
