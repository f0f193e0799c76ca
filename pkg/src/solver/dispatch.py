"""
Regime dispatch of the analytic solver.

    lambda <= 1/(2b)                  -> D_b
    1/(2b) < lambda < 1/(a+b)         -> regular or quasi-regular inscribed polygon
    1/(a+b) <= lambda < 1/b, b > 2a   -> triangle band
    1/(a+b) <= lambda < 1/b, b <= 2a  -> candidate union certified by enumeration
    1/b <= lambda < 2/a               -> polygon with the minimum number of sides
    lambda = 2/a                      -> circumscribed family, J = 0
    lambda > 2/a                      -> D_a
"""

import logging
import math
from typing import List

from config.settings import LAMBDA_EQ_TOL, TAU_ANGLE
from ..angles import AngleConfig, RingParams
from ..errors import RegimeError
from ..geometry import ConvexBody
from .family import sample_circumscribed_family
from .quasi import quasi_regular_candidates
from .regimes import (
    FAMILY_NOTE,
    Regime,
    Solution,
    check_lambda,
    disk_solution,
    polygon_solution,
    select_minimizers,
)
from .sequences import optimal_regular_N, p0
from .triangle import inscribed_config, triangle_band_solver, triangle_candidates

logger = logging.getLogger(__name__)


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= LAMBDA_EQ_TOL * max(1.0, abs(y))


def _residual_angle(ring: RingParams) -> float:
    x = math.pi - p0(ring) * ring.xi0
    return 0.0 if abs(x) <= TAU_ANGLE else x


def large_lambda_threshold(ring: RingParams) -> float:
    """
    2/(b cos x + a) with x = pi - p0*xi0: above it the residual side turns
    into a tangent pair, below it stays a chord.

    Raises:
        RegimeError: xi0 divides pi, so there is no residual side
    """
    x = _residual_angle(ring)
    if x == 0.0:
        raise RegimeError(f"xi0 divides pi for a={ring.a}, b={ring.b}: no residual side")
    return 2.0 / (ring.b * math.cos(x) + ring.a)


def min_side_configs(ring: RingParams) -> List[AngleConfig]:
    """Polygons with the minimum number of sides: p0 xi0 sides plus the residual as chord and as tangent pair."""
    p = p0(ring)
    x = _residual_angle(ring)
    if x == 0.0:
        return [AngleConfig(p)]
    return [AngleConfig(p, (), (x,)), AngleConfig(p, (x,), ())]


def solve_large_lambda(ring: RingParams, lam: float) -> Solution:
    """
    Minimizer for 1/b <= lambda < 2/a.

    Raises:
        RegimeError: lambda out of range
    """
    a, b = ring.a, ring.b
    if not (1.0 / b - LAMBDA_EQ_TOL <= lam < 2.0 / a):
        raise RegimeError(f"lambda={lam} outside [1/b, 2/a) = [{1.0 / b}, {2.0 / a})")
    p = p0(ring)
    x = _residual_angle(ring)
    if x == 0.0:
        return polygon_solution(Regime.MIN_SIDE_POLYGON, ring, lam, [AngleConfig(p)])
    threshold = large_lambda_threshold(ring)
    chord, tangent = AngleConfig(p, (), (x,)), AngleConfig(p, (x,), ())
    if _close(lam, threshold):
        configs = [chord, tangent]
    elif lam < threshold:
        configs = [chord]
    else:
        configs = [tangent]
    return polygon_solution(Regime.MIN_SIDE_POLYGON, ring, lam, configs)


def _regular_inscribed(ring: RingParams, lam: float) -> AngleConfig:
    n = optimal_regular_N(ring, lam)
    config = inscribed_config(ring, (math.pi / n,) * n)
    if config is None:
        raise RegimeError(f"Regular {n}-gon does not fit the ring a={ring.a}, b={ring.b}")
    return config


def _is_regular(config: AngleConfig) -> bool:
    angles = config.chord_angles
    return not config.tangent_angles and (not angles or max(angles) - min(angles) <= 1e-9)


def inscribed_solver(ring: RingParams, lam: float) -> Solution:
    """
    Best of the optimal regular polygon and the quasi-regular roots without
    xi0 sides, for 1/(2b) < lambda < 1/(a+b).
    """
    a, b = ring.a, ring.b
    if not (0.5 / b < lam < 1.0 / (a + b)):
        raise RegimeError(f"lambda={lam} outside the inscribed band ({0.5 / b}, {1.0 / (a + b)})")
    candidates = [_regular_inscribed(ring, lam)]
    candidates.extend(quasi_regular_candidates(ring, lam, p_values=[0]))
    winners = select_minimizers(candidates, ring, lam)
    regime = Regime.INSCRIBED_REGULAR if _is_regular(winners[0]) else Regime.INSCRIBED_QUASI_REGULAR
    return polygon_solution(regime, ring, lam, winners)


def circumscribed_family_solution(ring: RingParams, lam: float) -> Solution:
    """lambda = 2/a: D_a as representative of the zero-J family."""
    solution = disk_solution(Regime.CIRCUMSCRIBED_FAMILY, ring.a, lam, ring.a, ring.b)
    solution.J = 0.0
    solution.family_note = FAMILY_NOTE
    return solution


def fallback_candidates(ring: RingParams, lam: float) -> List[AngleConfig]:
    """Union of every closed-form generator, used where no classification applies."""
    candidates: List[AngleConfig] = list(min_side_configs(ring))
    b = ring.b
    if 0.5 / b < lam < 1.0 / b:
        candidates.append(_regular_inscribed(ring, lam))
        candidates.extend(quasi_regular_candidates(ring, lam))
    if lam > 0.0:
        candidates.extend(triangle_candidates(ring, lam).values())
    return candidates


def oracle_fallback_solver(ring: RingParams, lam: float) -> Solution:
    """Closed-form candidates plus the polished enumeration optimum, tagged OracleFallback."""
    from ..oracle.enumeration import enumerate_configs

    candidates = fallback_candidates(ring, lam)
    found = enumerate_configs(ring, lam)
    if found.config is not None:
        candidates.append(found.config)
    winners = select_minimizers(candidates, ring, lam)
    logger.info(f"Fallback band at lambda={lam}: {len(candidates)} candidates, best {winners[0].to_dict()}")
    return polygon_solution(Regime.ORACLE_FALLBACK, ring, lam, winners)


def solve(ring: RingParams, lam: float) -> Solution:
    """
    Global minimizer of lambda*area - perimeter over convex sets between D_a and D_b.

    Args:
        ring: Ring radii
        lam: Area weight, finite and non-negative

    Returns:
        Solution with every minimizer found, canonical first

    Raises:
        ParameterError: negative or non-finite lambda
    """
    lam = check_lambda(lam)
    a, b = ring.a, ring.b
    if lam <= 0.5 / b:
        solution = disk_solution(Regime.OUTER_DISK, b, lam, a, b)
    elif _close(lam, 2.0 / a):
        solution = circumscribed_family_solution(ring, lam)
    elif lam > 2.0 / a:
        solution = disk_solution(Regime.INNER_DISK, a, lam, a, b)
    elif lam >= 1.0 / b:
        solution = solve_large_lambda(ring, lam)
    elif lam >= 1.0 / (a + b):
        if b > 2.0 * a:
            solution = triangle_band_solver(ring, lam)
        else:
            solution = oracle_fallback_solver(ring, lam)
    else:
        solution = inscribed_solver(ring, lam)
    logger.debug(f"solve(a={a}, b={b}, lambda={lam}) -> {solution.regime.value}, J={solution.J:.10g}")
    return solution


def family_members(ring: RingParams, count: int, seed: int = 0) -> List[ConvexBody]:
    """Members of the lambda = 2/a family that fit in D_b."""
    return sample_circumscribed_family(ring.a, count, seed=seed, max_half_angle=ring.xi0)
