"""
First- and second-order optimality certificates for angle configurations.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from config.settings import KKT_TOL
from .energy import angle_gradient
from .model import AngleConfig, RingParams

logger = logging.getLogger(__name__)

MULTIPLIER_UNDERDETERMINED = "multiplier underdetermined"
SECOND_ORDER_INDETERMINATE = "second-order test indeterminate"
NOT_A_POLYGON = "non-polygonal optimum"


@dataclass
class Certificate:
    """Stationarity and curvature evidence for a candidate optimum."""
    kkt_residual: float
    hessian_eigenvalues: Tuple[float, ...] = ()
    second_order_ok: Optional[bool] = None
    hpr_sum: Optional[float] = None
    multiplier: Optional[float] = None
    xi0_multipliers: Tuple[float, ...] = ()
    chord_pair_residual: Optional[float] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def stationary(self) -> bool:
        return self.kkt_residual <= KKT_TOL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kkt_residual": self.kkt_residual,
            "hessian_eigenvalues": list(self.hessian_eigenvalues),
            "second_order_ok": self.second_order_ok,
            "hpr_sum": self.hpr_sum,
            "multiplier": self.multiplier,
            "xi0_multipliers": list(self.xi0_multipliers),
            "chord_pair_residual": self.chord_pair_residual,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        return cls(
            kkt_residual=float(data["kkt_residual"]),
            hessian_eigenvalues=tuple(data.get("hessian_eigenvalues", ())),
            second_order_ok=data.get("second_order_ok"),
            hpr_sum=data.get("hpr_sum"),
            multiplier=data.get("multiplier"),
            xi0_multipliers=tuple(data.get("xi0_multipliers", ())),
            chord_pair_residual=data.get("chord_pair_residual"),
            notes=tuple(data.get("notes", ())),
        )


class SecondOrderVerdict(NamedTuple):
    ok: Optional[bool]
    hpr_sum: Optional[float]
    negative_count: int


def kkt_residuals(config: AngleConfig, ring: RingParams, lam: float) -> Certificate:
    """
    Residual of the stationarity system with the best-fit multiplier.

    Every free angle must share the slope mu0 (the multiplier of the angle-sum
    constraint). The xi0 angles sit on their upper bound, so their multipliers
    mu_k = mu0 - b^2 (lambda - 2/a) must be non-negative; a negative value
    counts as a violation.
    """
    config = config.validated(ring)
    xi_slope, tangent, chords = angle_gradient(config, ring, lam)
    free = np.concatenate((tangent, chords))
    notes: List[str] = []
    if free.size:
        mu0 = float(np.mean(free))
        residual = float(np.max(np.abs(free - mu0)))
    else:
        mu0 = float(xi_slope)
        residual = 0.0
        notes.append(MULTIPLIER_UNDERDETERMINED)
    xi_multipliers = tuple(mu0 - xi_slope for _ in range(config.p))
    if xi_multipliers:
        residual = max(residual, max(0.0, -min(xi_multipliers)))

    pair_residual = None
    distinct = sorted(set(round(e, 12) for e in config.chord_angles))
    if len(distinct) >= 2 and lam > 0.0:
        hi, lo = max(config.chord_angles), min(config.chord_angles)
        pair_residual = abs(math.cos(hi) + math.cos(lo) - 1.0 / (ring.b * lam))
    return Certificate(
        kkt_residual=residual,
        multiplier=mu0,
        xi0_multipliers=xi_multipliers,
        chord_pair_residual=pair_residual,
        notes=tuple(notes),
    )


def hessian_spectrum(config: AngleConfig, ring: RingParams, lam: float) -> List[float]:
    """
    Diagonal of the Hessian of J, ordered xi0 angles, tangent angles, chord angles.

    Returns:
        List of eigenvalues (the Hessian is diagonal in the angle coordinates)
    """
    config = config.validated(ring)
    a, b = ring.a, ring.b
    xi_entry = 2.0 * (b * b) / (a * a) * ring.half_chord * (a * lam - 2.0)
    values = [xi_entry] * config.p
    values.extend(2.0 * a * (a * lam - 2.0) * math.sin(t) / math.cos(t) ** 3 for t in config.tangent_angles)
    values.extend(2.0 * b * (-b * lam * math.sin(2.0 * e) + math.sin(e)) for e in config.chord_angles)
    return values


def second_order_ok(config: AngleConfig, ring: RingParams, lam: float) -> SecondOrderVerdict:
    """
    Second-order test on the angle-sum hyperplane.

    The xi0 angles are fixed coordinates and are left out. With no negative
    eigenvalue the test passes, with two or more it fails; with exactly one,
    the quadratic form is non-negative on the hyperplane of normal (1, ..., 1)
    iff sum(1/lambda_i) <= 0. A zero eigenvalue next to a negative one leaves
    the test undecided (ok is None).
    """
    spectrum = hessian_spectrum(config, ring, lam)[config.p:]
    if not spectrum:
        return SecondOrderVerdict(True, None, 0)
    scale = max(1.0, max(abs(v) for v in spectrum))
    zero_tol = 1e-12 * scale
    negatives = sum(1 for v in spectrum if v < -zero_tol)
    zeros = sum(1 for v in spectrum if abs(v) <= zero_tol)
    if negatives == 0:
        return SecondOrderVerdict(True, None, 0)
    if negatives >= 2:
        return SecondOrderVerdict(False, None, negatives)
    if zeros:
        return SecondOrderVerdict(None, None, negatives)
    inverses = [1.0 / v for v in spectrum]
    hpr = math.fsum(inverses)
    tol = 1e-9 * max(abs(v) for v in inverses)
    return SecondOrderVerdict(hpr <= tol, hpr, negatives)


def certify_config(config: AngleConfig, ring: RingParams, lam: float) -> Certificate:
    """Full certificate: KKT residuals plus Hessian spectrum and second-order verdict."""
    cert = kkt_residuals(config, ring, lam)
    verdict = second_order_ok(config, ring, lam)
    cert.hessian_eigenvalues = tuple(hessian_spectrum(config, ring, lam))
    cert.second_order_ok = verdict.ok
    cert.hpr_sum = verdict.hpr_sum
    if verdict.ok is None:
        cert.notes = cert.notes + (SECOND_ORDER_INDETERMINATE,)
    return cert


def non_polygon_certificate() -> Certificate:
    """Certificate attached to disk and degenerate optima, where angle conditions do not apply."""
    return Certificate(kkt_residual=0.0, second_order_ok=True, notes=(NOT_A_POLYGON,))
