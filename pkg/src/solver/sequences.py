"""
Regular polygon sequences: the transition constants beta_n and betahat_n,
the maximal count of xi0 sides, and the choice of the optimal inscribed
regular polygon.
"""

import logging
import math

from config.settings import LAMBDA_EQ_TOL
from ..angles import RingParams
from ..errors import ParameterError, RegimeError

logger = logging.getLogger(__name__)

# cap on the side-count search close to lambda = 1/(2b)
MAX_REGULAR_SIDES = 1_000_000

# betahat_n - 1/4 ~ BETAHAT_TAIL / n**2
BETAHAT_TAIL = 3.0 * math.pi**2 / 40.0

# terms of the power series in betahat; exact to double precision for every n >= 3
_SERIES_TERMS = 12


def _check_n(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 3:
        raise ParameterError(f"n must be an integer >= 3, got {n}")
    return int(n)


def beta(n: int) -> float:
    """(sin t - t cos t) / (sin t cos t - t cos 2t) with t = pi/n."""
    n = _check_n(n)
    t = math.pi / n
    return (math.sin(t) - t * math.cos(t)) / (math.sin(t) * math.cos(t) - t * math.cos(2.0 * t))


def betahat(n: int) -> float:
    """
    Value of lambda*b/2 at which the regular n-gon and (n+1)-gon inscribed in D_b tie.

    The defining ratio (sinc(pi/n) - sinc(pi/(n+1))) / (sinc(2pi/n) - sinc(2pi/(n+1)))
    cancels catastrophically for large n. Both differences are expanded in powers of
    u = (pi/n)^2 and v = (pi/(n+1))^2 with the common factor u - v divided out, so
    u^k - v^k becomes the complete homogeneous sum h_{k-1}(u, v).

    Args:
        n: Side count, at least 3

    Returns:
        betahat_n, strictly decreasing towards 1/4
    """
    n = _check_n(n)
    u, v = (math.pi / n) ** 2, (math.pi / (n + 1)) ** 2
    h, v_power = 1.0, 1.0
    factorial, sign, four = 6.0, -1.0, 4.0
    num = den = 0.0
    for k in range(1, _SERIES_TERMS + 1):
        num += sign * h / factorial
        den += sign * four * h / factorial
        v_power *= v
        h = u * h + v_power
        factorial *= (2 * k + 2) * (2 * k + 3)
        sign, four = -sign, 4.0 * four
    return num / den


def regular_polygon_J(n: int, b: float, lam: float) -> float:
    """J of the regular n-gon inscribed in D_b: 2bn sin(pi/n)(lambda (b/2) cos(pi/n) - 1)."""
    n = _check_n(n)
    t = math.pi / n
    return 2.0 * b * n * math.sin(t) * (0.5 * lam * b * math.cos(t) - 1.0)


def regular_switch_lambda(n: int, b: float) -> float:
    """lambda at which the inscribed regular n-gon hands over to the (n+1)-gon."""
    return 2.0 * betahat(n) / b


def p0(ring: RingParams) -> int:
    """Largest integer p with p*xi0 <= pi, snapped when pi/xi0 is within 1e-12 of an integer."""
    ratio = math.pi / ring.xi0
    nearest = round(ratio)
    if abs(ratio - nearest) <= LAMBDA_EQ_TOL * max(1.0, ratio):
        return int(nearest)
    return int(math.floor(ratio))


def min_feasible_sides(ring: RingParams) -> int:
    """Smallest N >= 3 whose regular N-gon inscribed in D_b contains D_a, i.e. cos(pi/N) >= a/b."""
    ratio = math.pi / ring.xi0
    nearest = round(ratio)
    if abs(ratio - nearest) <= LAMBDA_EQ_TOL * max(1.0, ratio):
        n_bar = int(nearest)
    else:
        n_bar = int(math.ceil(ratio))
    return max(3, n_bar)


def unconstrained_regular_N(b: float, lam: float) -> int:
    """
    N with betahat_N <= lambda*b/2 < betahat_{N-1} (N = 3 above betahat_3).

    The search starts from the asymptotic count sqrt(BETAHAT_TAIL / (lambda*b/2 - 1/4))
    and walks to the exact bracket.
    """
    target = 0.5 * lam * b
    if target <= 0.25:
        raise RegimeError(f"lambda*b/2 = {target} must exceed 1/4")
    estimate = math.sqrt(BETAHAT_TAIL / (target - 0.25))
    if estimate > MAX_REGULAR_SIDES:
        raise RegimeError(f"No regular polygon found below {MAX_REGULAR_SIDES} sides for lambda={lam}")
    n = max(3, int(estimate))
    while n > 3 and betahat(n - 1) <= target:
        n -= 1
    while betahat(n) > target:
        n += 1
    return n


def optimal_regular_N(ring: RingParams, lam: float) -> int:
    """
    Side count of the best regular polygon inscribed in D_b and containing D_a.

    Raises:
        RegimeError: lambda outside (1/(2b), 1/b)
    """
    b = ring.b
    if not (1.0 / (2.0 * b) < lam < 1.0 / b):
        raise RegimeError(f"lambda={lam} outside (1/(2b), 1/b) = ({0.5 / b}, {1.0 / b})")
    n = unconstrained_regular_N(b, lam)
    n_bar = min_feasible_sides(ring)
    if n < n_bar:
        logger.debug(f"Regular {n}-gon leaves D_a uncovered, clamping to {n_bar}")
    return max(n, n_bar)
