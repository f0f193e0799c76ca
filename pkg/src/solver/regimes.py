"""
Regime tags and result types of the analytic solver.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import J_TIE_TOL
from ..angles import (
    AngleConfig,
    Certificate,
    RingParams,
    area_of,
    certify_config,
    evaluate_J,
    non_polygon_certificate,
    perimeter_of,
    synthesize_polygon,
)
from ..errors import ParameterError
from ..geometry import ConvexBody

logger = logging.getLogger(__name__)


class Regime(Enum):
    """Structural description of the minimizer on a lambda interval"""
    OUTER_DISK = "OuterDisk"
    INSCRIBED_REGULAR = "InscribedRegular"
    INSCRIBED_QUASI_REGULAR = "InscribedQuasiRegular"
    TRIANGLE_BAND = "TriangleBand"
    MIN_SIDE_POLYGON = "MinSidePolygon"
    CIRCUMSCRIBED_FAMILY = "CircumscribedFamily"
    INNER_DISK = "InnerDisk"
    ORACLE_FALLBACK = "OracleFallback"
    DOUBLE_DIAMETER = "DoubleDiameter"


FAMILY_NOTE = "any circumscribed figure of arcs of D_a and tangent segments attains J = 0"


@dataclass
class Solution:
    """
    Global minimizer(s) of lambda*area - perimeter for one parameter set.

    Attributes:
        regime: Regime tag
        lam: Area weight lambda
        a: Inner radius (0 when the inner constraint is absent, None if unused)
        b: Outer radius (None when the outer constraint is absent)
        bodies: All minimizers found, canonical first
        configs: Angle classes of the polygonal minimizers, aligned with bodies
        J: Optimal value
        area: Area of the canonical minimizer
        perimeter: Perimeter of the canonical minimizer
        certificate: Optimality evidence for the canonical minimizer
        family_note: Description of the minimizing family at lambda = 2/a
    """
    regime: Regime
    lam: float
    a: Optional[float]
    b: Optional[float]
    bodies: List[ConvexBody]
    J: float
    area: float
    perimeter: float
    certificate: Certificate
    configs: List[AngleConfig] = field(default_factory=list)
    family_note: Optional[str] = None

    @property
    def config(self) -> Optional[AngleConfig]:
        return self.configs[0] if self.configs else None

    @property
    def body(self) -> ConvexBody:
        return self.bodies[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "regime": self.regime.value,
            "lambda": self.lam,
            "a": self.a,
            "b": self.b,
            "config": self.config.to_dict() if self.config else None,
            "alternatives": [c.to_dict() for c in self.configs[1:]],
            "J": self.J,
            "area": self.area,
            "perimeter": self.perimeter,
            "certificate": self.certificate.to_dict(),
            "family_note": self.family_note,
            "bodies": [b.to_dict() for b in self.bodies],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Solution":
        configs = [AngleConfig.from_dict(data["config"])] if data.get("config") else []
        configs.extend(AngleConfig.from_dict(c) for c in data.get("alternatives", ()))
        return cls(
            regime=Regime(data["regime"]),
            lam=float(data["lambda"]),
            a=data.get("a"),
            b=data.get("b"),
            bodies=[ConvexBody.from_dict(b) for b in data["bodies"]],
            J=float(data["J"]),
            area=float(data["area"]),
            perimeter=float(data["perimeter"]),
            certificate=Certificate.from_dict(data["certificate"]),
            configs=configs,
            family_note=data.get("family_note"),
        )


@dataclass
class NoSolution:
    """
    Outcome of a problem whose infimum is not attained.

    `witness` lists (b, J) pairs of admissible bodies with strictly
    decreasing J, showing that J is unbounded below.
    """
    lam: float
    a: float
    reason: str
    witness: List[Tuple[float, float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "regime": "NoSolution",
            "lambda": self.lam,
            "a": self.a,
            "reason": self.reason,
            "witness": [{"b": b, "J": j} for b, j in self.witness],
        }


def check_lambda(lam: float) -> float:
    lam = float(lam)
    if not math.isfinite(lam) or lam < 0.0:
        raise ParameterError(f"lambda must be finite and non-negative, got {lam}")
    return lam


def config_key(config: AngleConfig) -> Tuple:
    """Canonical ordering: fewest sides, then lexicographically smallest classes."""
    canon = config.canonical()
    return (
        canon.side_count,
        canon.p,
        tuple(round(t, 9) for t in canon.tangent_angles),
        tuple(round(e, 9) for e in canon.chord_angles),
    )


def select_minimizers(configs: Iterable[AngleConfig], ring: RingParams, lam: float) -> List[AngleConfig]:
    """
    Distinct configs whose J is within J_TIE_TOL of the best, canonical first.

    Returns an empty list when no config is given.
    """
    scored: Dict[Tuple, Tuple[float, AngleConfig]] = {}
    for config in configs:
        config = config.validated(ring).canonical()
        key = config_key(config)
        if key not in scored:
            scored[key] = (evaluate_J(config, ring, lam), config)
    if not scored:
        return []
    best = min(j for j, _ in scored.values())
    tol = J_TIE_TOL * max(1.0, abs(best))
    winners = [(key, cfg) for key, (j, cfg) in scored.items() if j <= best + tol]
    winners.sort(key=lambda item: item[0])
    return [cfg for _, cfg in winners]


def polygon_solution(
    regime: Regime,
    ring: RingParams,
    lam: float,
    configs: Sequence[AngleConfig],
    a: Optional[float] = None,
) -> Solution:
    """Solution for polygonal minimizers given canonical-first."""
    if not configs:
        raise ValueError("polygon_solution needs at least one config")
    lead = configs[0]
    solution = Solution(
        regime=regime,
        lam=lam,
        a=ring.a if a is None else a,
        b=ring.b,
        bodies=[synthesize_polygon(c, ring) for c in configs],
        J=evaluate_J(lead, ring, lam),
        area=area_of(lead, ring),
        perimeter=perimeter_of(lead, ring),
        certificate=certify_config(lead, ring, lam),
        configs=list(configs),
    )
    logger.debug(f"{regime.value} at lambda={lam}: {lead.to_dict()} J={solution.J:.10g}")
    if not solution.certificate.stationary:
        logger.warning(f"{regime.value} at lambda={lam}: KKT residual {solution.certificate.kkt_residual:.3e}")
    return solution


def disk_solution(regime: Regime, radius: float, lam: float, a: Optional[float], b: Optional[float]) -> Solution:
    """Solution whose minimizer is the origin-centered disk of the given radius."""
    area = math.pi * radius * radius
    perimeter = 2.0 * math.pi * radius
    return Solution(
        regime=regime,
        lam=lam,
        a=a,
        b=b,
        bodies=[ConvexBody.disk(radius)],
        J=lam * area - perimeter,
        area=area,
        perimeter=perimeter,
        certificate=non_polygon_certificate(),
    )
