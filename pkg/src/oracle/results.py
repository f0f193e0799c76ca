"""
Oracle result and budget types.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from config.settings import ORACLE_GRID_N, ORACLE_Q_LIMIT, ORACLE_Q_MAX
from ..angles import AngleConfig
from ..errors import ParameterError
from ..geometry import ConvexBody, area, perimeter


class OracleMethod(Enum):
    """Brute-force minimizers"""
    CONFIG_ENUMERATION = "ConfigEnumeration"
    SUPPORT_DESCENT = "SupportDescent"


@dataclass
class OracleResult:
    """Best admissible body found by one oracle."""
    J: float
    body: ConvexBody
    method: OracleMethod
    evaluations: int
    config: Optional[AngleConfig] = None
    pattern: Optional[str] = None
    history: List[float] = field(default_factory=list)
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "J": self.J,
            "method": self.method.value,
            "evaluations": self.evaluations,
            "config": self.config.to_dict() if self.config else None,
            "pattern": self.pattern,
            "notes": list(self.notes),
        }


@dataclass
class OracleBudget:
    """
    Limits of the enumeration oracle.

    Attributes:
        p_max: Largest count of xi0 sides (None means p0 of the ring)
        q_max: Largest chord count per pattern
        grid_n: Grid resolution, free angles are scanned at step pi/grid_n
    """
    p_max: Optional[int] = None
    q_max: int = ORACLE_Q_MAX
    grid_n: int = ORACLE_GRID_N

    def __post_init__(self):
        if self.p_max is not None and self.p_max < 0:
            raise ParameterError(f"p_max must be non-negative, got {self.p_max}")
        if not (1 <= self.q_max <= ORACLE_Q_LIMIT):
            raise ParameterError(f"q_max must lie in [1, {ORACLE_Q_LIMIT}], got {self.q_max}")
        if self.grid_n < ORACLE_GRID_N:
            raise ParameterError(f"grid_n must be at least {ORACLE_GRID_N}, got {self.grid_n}")

    @classmethod
    def parse(cls, text: str) -> "OracleBudget":
        """
        Parse 'p:q:grid'; an empty or '*' p field means p0.

        Example:
            OracleBudget.parse("*:16:200") -> OracleBudget(None, 16, 200)
        """
        parts = text.split(":")
        if len(parts) != 3:
            raise ParameterError(f"Oracle budget must look like p:q:grid, got {text!r}")
        try:
            p_max = None if parts[0] in ("", "*") else int(parts[0])
            return cls(p_max=p_max, q_max=int(parts[1]), grid_n=int(parts[2]))
        except ValueError as exc:
            raise ParameterError(f"Malformed oracle budget {text!r}: {exc}")

    def to_dict(self) -> Dict[str, Any]:
        return {"p_max": self.p_max, "q_max": self.q_max, "grid_n": self.grid_n}


def body_J(body: ConvexBody, lam: float) -> float:
    """lambda*area - perimeter measured on the body itself."""
    return lam * area(body) - perimeter(body)
