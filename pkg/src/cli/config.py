"""
Validated run configuration of the command-line front end.
"""

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config.settings import DESCENT_M, DESCENT_RESTARTS
from ..angles import RingParams
from ..oracle import OracleBudget


class Command(str, Enum):
    SOLVE = "solve"
    SWEEP = "sweep"
    BETA_TABLE = "beta-table"
    RENDER = "render"
    CERTIFY = "certify"
    FUZZ = "fuzz"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    SVG = "svg"
    TEXT = "text"


class Variant(str, Enum):
    RING = "ring"
    INNER = "inner"
    OUTER = "outer"


DEFAULT_FORMATS = {
    Command.SOLVE: OutputFormat.JSON,
    Command.SWEEP: OutputFormat.CSV,
    Command.BETA_TABLE: OutputFormat.CSV,
    Command.RENDER: OutputFormat.SVG,
    Command.CERTIFY: OutputFormat.JSON,
    Command.FUZZ: OutputFormat.JSON,
}

ALLOWED_FORMATS = {
    Command.SOLVE: {OutputFormat.JSON, OutputFormat.TEXT},
    Command.SWEEP: {OutputFormat.CSV, OutputFormat.JSON},
    Command.BETA_TABLE: {OutputFormat.CSV, OutputFormat.JSON},
    Command.RENDER: {OutputFormat.SVG},
    Command.CERTIFY: {OutputFormat.JSON},
    Command.FUZZ: {OutputFormat.JSON},
}


class LambdaGrid(BaseModel):
    """Evenly spaced lambda values lo..hi (n points)."""
    lo: float = Field(ge=0.0)
    hi: float
    n: int = Field(ge=2)

    @model_validator(mode="after")
    def _ordered(self) -> "LambdaGrid":
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi, got {self.lo} and {self.hi}")
        return self

    @classmethod
    def parse(cls, text: str) -> "LambdaGrid":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"lambda grid must look like lo:hi:n, got {text!r}")
        return cls(lo=float(parts[0]), hi=float(parts[1]), n=int(parts[2]))

    def values(self) -> List[float]:
        return [float(v) for v in np.linspace(self.lo, self.hi, self.n)]


class RunConfig(BaseModel):
    """
    Everything one CLI invocation needs.

    Ring commands (solve with the ring variant, sweep, render, certify)
    require 0 < a < b.
    """
    model_config = ConfigDict(frozen=True)

    command: Command
    a: Optional[float] = None
    b: Optional[float] = None
    lam: Optional[float] = Field(default=None, ge=0.0)
    lambda_grid: Optional[LambdaGrid] = None
    variant: Variant = Variant.RING
    output_path: Optional[str] = None
    format: Optional[OutputFormat] = None
    seed: int = 0
    oracle_budget: Optional[str] = None
    descent_m: int = Field(default=DESCENT_M, ge=8)
    restarts: int = Field(default=DESCENT_RESTARTS, ge=1)
    skip_descent: bool = False
    solution_path: Optional[str] = None
    n_max: int = Field(default=52, ge=3)
    fuzz_n: int = Field(default=1000, ge=1)
    timings: bool = False
    witness_csv: Optional[str] = None
    family_sample: int = Field(default=0, ge=0)

    @field_validator("oracle_budget")
    @classmethod
    def _budget(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            OracleBudget.parse(value)
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        command = self.command
        needs_ring = command in (Command.SWEEP, Command.RENDER, Command.CERTIFY) or (
            command == Command.SOLVE and self.variant == Variant.RING
        )
        if needs_ring:
            if self.a is None or self.b is None:
                raise ValueError(f"{command.value} needs both --a and --b")
            RingParams(self.a, self.b)
        if command == Command.SOLVE and self.variant == Variant.INNER and not (self.a and self.a > 0.0):
            raise ValueError("the inner-only variant needs --a > 0")
        if command == Command.SOLVE and self.variant == Variant.OUTER and not (self.b and self.b > 0.0):
            raise ValueError("the outer-only variant needs --b > 0")
        if command in (Command.SOLVE, Command.RENDER) and self.lam is None:
            raise ValueError(f"{command.value} needs --lambda")
        if command == Command.SWEEP and self.lambda_grid is None:
            raise ValueError("sweep needs --lambda-grid lo:hi:n")
        if command == Command.CERTIFY and self.lam is None and self.lambda_grid is None:
            raise ValueError("certify needs --lambda or --lambda-grid")
        if self.format is not None and self.format not in ALLOWED_FORMATS[command]:
            raise ValueError(f"{command.value} cannot write {self.format.value}")
        return self

    @property
    def ring(self) -> RingParams:
        return RingParams(self.a, self.b)

    @property
    def output_format(self) -> OutputFormat:
        return self.format or DEFAULT_FORMATS[self.command]

    @property
    def budget(self) -> Optional[OracleBudget]:
        return OracleBudget.parse(self.oracle_budget) if self.oracle_budget else None

    def lambdas(self) -> List[float]:
        if self.lambda_grid is not None:
            return self.lambda_grid.values()
        return [self.lam]
