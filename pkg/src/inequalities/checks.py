"""
Inradius and circumradius inequalities for planar convex bodies.

    Bonnesen-Fenchel      P <= 2A / r
    Favard                A >= R (P - 4R)
    circumradius bound    A >= R (2P - 3 pi R)

The last two lower bounds cross at P = (3 pi - 4) R.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from config.settings import INEQUALITY_REL_TOL, NEAR_EQUALITY_REL
from ..errors import GeometryError, ParameterError
from ..geometry import ConvexBody, area, circumradius, inradius, perimeter

CROSSOVER_FACTOR = 3.0 * math.pi - 4.0


class InequalityName(Enum):
    BONNESEN_FENCHEL = "BonnesenFenchel"
    FAVARD = "Favard"
    NEW_CIRCUMRADIUS = "NewCircumradius"


@dataclass(frozen=True)
class InequalityReport:
    """
    Both sides of one inequality, written so that slack = lhs - rhs >= 0 holds.
    """
    name: InequalityName
    lhs: float
    rhs: float

    @property
    def slack(self) -> float:
        return self.lhs - self.rhs

    @property
    def scale(self) -> float:
        return max(abs(self.lhs), abs(self.rhs), 1.0)

    @property
    def holds(self) -> bool:
        return self.slack >= -INEQUALITY_REL_TOL * self.scale

    @property
    def near_equality(self) -> bool:
        return abs(self.slack) <= NEAR_EQUALITY_REL * self.scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "holds": self.holds,
            "near_equality": self.near_equality,
        }


def check_bonnesen_fenchel(body: ConvexBody) -> InequalityReport:
    """
    2A/r against P.

    Raises:
        GeometryError: degenerate body or zero inradius
    """
    if body.degenerate:
        raise GeometryError("Bonnesen-Fenchel check needs a body with interior")
    r = inradius(body)
    return InequalityReport(InequalityName.BONNESEN_FENCHEL, 2.0 * area(body) / r, perimeter(body))


def check_favard(body: ConvexBody) -> InequalityReport:
    """A against R(P - 4R); degenerate bodies allowed."""
    R = circumradius(body)
    return InequalityReport(InequalityName.FAVARD, area(body), R * (perimeter(body) - 4.0 * R))


def check_new_circumradius(body: ConvexBody) -> InequalityReport:
    """A against R(2P - 3 pi R); equality for disks."""
    R = circumradius(body)
    return InequalityReport(
        InequalityName.NEW_CIRCUMRADIUS, area(body), R * (2.0 * perimeter(body) - 3.0 * math.pi * R)
    )


def crossover(R: float) -> float:
    """Perimeter (3 pi - 4) R above which the circumradius bound beats Favard's."""
    if not R > 0.0:
        raise ParameterError(f"Circumradius must be positive, got {R}")
    return CROSSOVER_FACTOR * R


def _sign(value: float, tol: float) -> int:
    if abs(value) <= tol:
        return 0
    return 1 if value > 0.0 else -1


def crossover_sign(body: ConvexBody) -> Tuple[int, int]:
    """
    Signs of rhs(new) - rhs(Favard) and of P - (3 pi - 4) R.

    Both are computed from the same R and P, so they agree on every body;
    differences within rounding count as 0.
    """
    R = circumradius(body)
    P = perimeter(body)
    bound_gap = R * (2.0 * P - 3.0 * math.pi * R) - R * (P - 4.0 * R)
    perimeter_gap = P - CROSSOVER_FACTOR * R
    tol = 1e-12 * max(P, R, 1.0)
    return _sign(bound_gap, tol * R), _sign(perimeter_gap, tol)


def check_all(body: ConvexBody) -> Tuple[InequalityReport, ...]:
    """All three reports; Bonnesen-Fenchel is skipped for degenerate bodies."""
    reports = []
    if not body.degenerate:
        reports.append(check_bonnesen_fenchel(body))
    reports.append(check_favard(body))
    reports.append(check_new_circumradius(body))
    return tuple(reports)
