"""
Angle Model
Ring parameters and the central-angle encoding of candidate polygons.

A polygon of the class considered here is described by three groups of
half central angles: p copies of xi0 (sides that are chords of D_b tangent
to D_a), tangent half-angles theta (pairs of sides tangent to D_a meeting
at a vertex inside D_b) and chord half-angles eta (chords of D_b that miss
D_a). The half-angles add up to pi.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from config.settings import ANGLE_RENORM_LIMIT, TAU_ANGLE
from ..errors import ConfigError, ParameterError


@dataclass(frozen=True)
class RingParams:
    """Radii of the inner disk D_a and the outer disk D_b."""
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ParameterError(f"Ring radii must be finite, got a={a}, b={b}")
        if a <= 0.0 or a >= b:
            raise ParameterError(f"Ring radii must satisfy 0 < a < b, got a={a}, b={b}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def xi0(self) -> float:
        return math.acos(self.a / self.b)

    @property
    def half_chord(self) -> float:
        """Half length of a chord of D_b tangent to D_a, sqrt(b^2 - a^2) = a*tan(xi0)."""
        return math.sqrt((self.b - self.a) * (self.b + self.a))

    def to_dict(self) -> Dict[str, float]:
        return {"a": self.a, "b": self.b}


def xi0(ring: RingParams) -> float:
    """Half central angle arccos(a/b) subtended by a chord of D_b tangent to D_a."""
    return ring.xi0


def _as_angles(values: Iterable[float], label: str) -> Tuple[float, ...]:
    angles = tuple(float(v) for v in values)
    for v in angles:
        if not math.isfinite(v):
            raise ConfigError(f"{label} angles must be finite, got {v}")
    return angles


@dataclass(frozen=True)
class AngleConfig:
    """
    Class decomposition of a polygon.

    Attributes:
        p: Number of xi0 angles (sides tangent to D_a with both ends on D_b)
        tangent_angles: Half-angles of tangent side pairs
        chord_angles: Half-angles of chords of D_b
    """
    p: int = 0
    tangent_angles: Tuple[float, ...] = ()
    chord_angles: Tuple[float, ...] = ()

    def __post_init__(self):
        if isinstance(self.p, bool) or int(self.p) != self.p or self.p < 0:
            raise ConfigError(f"p must be a non-negative integer, got {self.p}")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "tangent_angles", _as_angles(self.tangent_angles, "Tangent"))
        object.__setattr__(self, "chord_angles", _as_angles(self.chord_angles, "Chord"))

    @property
    def free_angles(self) -> Tuple[float, ...]:
        return self.tangent_angles + self.chord_angles

    @property
    def side_count(self) -> int:
        return self.p + len(self.tangent_angles) + len(self.chord_angles)

    @property
    def size(self) -> int:
        """Number of angles, i.e. the dimension of the Hessian."""
        return self.p + len(self.tangent_angles) + len(self.chord_angles)

    def angle_sum(self, ring: RingParams) -> float:
        return math.fsum((self.p * ring.xi0,) + self.tangent_angles + self.chord_angles)

    def canonical(self) -> "AngleConfig":
        """Same classes with each class sorted in descending order."""
        return AngleConfig(
            self.p,
            tuple(sorted(self.tangent_angles, reverse=True)),
            tuple(sorted(self.chord_angles, reverse=True)),
        )

    def validated(self, ring: RingParams) -> "AngleConfig":
        """
        Check the invariants for a ring and return a config whose angles add up to pi.

        A sum off by at most ANGLE_RENORM_LIMIT is absorbed by the largest
        free angle; anything larger is rejected.

        Raises:
            ConfigError: angle outside (0, xi0), bad sum, or a layout that no
                polygon realizes
        """
        limit = ring.xi0
        for angle in self.free_angles:
            if not (0.0 < angle < limit):
                raise ConfigError(f"Angle {angle!r} outside (0, xi0={limit!r})")
        if self.tangent_angles and self.chord_angles and self.p == 0:
            raise ConfigError("Tangent pairs and chords can only coexist next to xi0 sides (p >= 1)")
        residual = math.pi - self.angle_sum(ring)
        if abs(residual) <= TAU_ANGLE:
            return self
        if abs(residual) > ANGLE_RENORM_LIMIT or not self.free_angles:
            raise ConfigError(f"Angles add up to pi - {residual:.3e}, not pi")
        tangent = list(self.tangent_angles)
        chords = list(self.chord_angles)
        largest_t = max(tangent) if tangent else -1.0
        largest_c = max(chords) if chords else -1.0
        if largest_c >= largest_t:
            i = chords.index(largest_c)
            chords[i] += residual
            if not (0.0 < chords[i] < limit):
                raise ConfigError("Renormalized chord angle leaves (0, xi0)")
        else:
            i = tangent.index(largest_t)
            tangent[i] += residual
            if not (0.0 < tangent[i] < limit):
                raise ConfigError("Renormalized tangent angle leaves (0, xi0)")
        return AngleConfig(self.p, tuple(tangent), tuple(chords))

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "tangent": list(self.tangent_angles), "chords": list(self.chord_angles)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AngleConfig":
        try:
            return cls(int(data["p"]), tuple(data.get("tangent", ())), tuple(data.get("chords", ())))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"Malformed angle config document: {exc}")


def regular_config(ring: RingParams, sides: int, p: int = 0, total: Optional[float] = None) -> AngleConfig:
    """
    Config with p xi0 angles and `sides` equal chord angles sharing the rest of pi.

    When the shared angle equals xi0 the chords are reported as xi0 sides.
    """
    remaining = math.pi - p * ring.xi0 if total is None else total
    angle = remaining / sides
    if abs(angle - ring.xi0) <= TAU_ANGLE:
        return AngleConfig(p + sides)
    return AngleConfig(p, (), (angle,) * sides)
