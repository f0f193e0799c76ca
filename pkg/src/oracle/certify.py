"""
Certification of analytic solutions against both oracles.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from joblib import Parallel, delayed

from config.settings import DESCENT_M, DESCENT_RESTARTS, DESCENT_TOL, ENUMERATION_TOL
from ..angles import RingParams
from ..runtime import worker_count
from ..solver import Solution, solve
from .descent import support_descent
from .enumeration import enumerate_configs
from .results import OracleBudget, OracleResult

logger = logging.getLogger(__name__)


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class OracleCheck:
    """One oracle's view of a solution: gap = J(solution) - J(oracle)."""
    result: OracleResult
    gap: float
    tolerance: float
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.gap <= self.tolerance

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "method": self.result.method.value,
            "J": self.result.J,
            "gap": self.gap,
            "tolerance": self.tolerance,
            "evaluations": self.result.evaluations,
            "passed": self.passed,
        }
        if self.result.pattern:
            data["pattern"] = self.result.pattern
        if self.result.notes:
            data["notes"] = list(self.result.notes)
        if timings and self.wall_time is not None:
            data["wall_time"] = self.wall_time
        return data


@dataclass
class CertifyReport:
    """Verdict of a certification run."""
    lam: float
    a: float
    b: float
    regime: str
    J: float
    enumeration: OracleCheck
    descent: Optional[OracleCheck] = None

    @property
    def verdict(self) -> Verdict:
        checks = [self.enumeration] + ([self.descent] if self.descent else [])
        return Verdict.PASS if all(c.passed for c in checks) else Verdict.FAIL

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        return {
            "lambda": self.lam,
            "a": self.a,
            "b": self.b,
            "regime": self.regime,
            "J": self.J,
            "verdict": self.verdict.value,
            "enumeration": self.enumeration.to_dict(timings),
            "descent": self.descent.to_dict(timings) if self.descent else None,
        }


def _timed(func, *args, **kwargs):
    start = time.perf_counter()
    result = func(*args, **kwargs)
    return result, time.perf_counter() - start


def certify(
    solution: Solution,
    ring: RingParams,
    lam: float,
    budget: Optional[OracleBudget] = None,
    M: int = DESCENT_M,
    restarts: int = DESCENT_RESTARTS,
    seed: int = 0,
    run_descent: bool = True,
    n_jobs: Optional[int] = None,
) -> CertifyReport:
    """
    Run both oracles against an analytic solution.

    PASS when J(solution) <= J(enumeration) + ENUMERATION_TOL and
    J(solution) <= J(descent) + DESCENT_TOL. n_jobs is passed to the
    descent restarts.
    """
    found, elapsed = _timed(enumerate_configs, ring, lam, budget)
    enumeration = OracleCheck(found, solution.J - found.J, ENUMERATION_TOL, elapsed)
    descent = None
    if run_descent:
        found, elapsed = _timed(support_descent, ring, lam, M=M, restarts=restarts, seed=seed, n_jobs=n_jobs)
        descent = OracleCheck(found, solution.J - found.J, DESCENT_TOL, elapsed)
    report = CertifyReport(
        lam=lam,
        a=ring.a,
        b=ring.b,
        regime=solution.regime.value,
        J=solution.J,
        enumeration=enumeration,
        descent=descent,
    )
    logger.info(
        f"Certify {solution.regime.value} at lambda={lam}: {report.verdict.value} "
        f"(enumeration gap {enumeration.gap:.3e}"
        + (f", descent gap {descent.gap:.3e})" if descent else ")")
    )
    return report


def _solve_and_certify(ring: RingParams, lam: float, options: Dict[str, Any]) -> CertifyReport:
    return certify(solve(ring, lam), ring, lam, **options)


def certify_grid(
    ring: RingParams,
    lambdas: Iterable[float],
    budget: Optional[OracleBudget] = None,
    M: int = DESCENT_M,
    restarts: int = DESCENT_RESTARTS,
    seed: int = 0,
    run_descent: bool = True,
    n_jobs: Optional[int] = None,
) -> List[CertifyReport]:
    """
    Solve and certify every lambda of a grid, one joblib task per lambda.

    Args:
        ring: Ring radii
        lambdas: Area weights, certified in the given order
        n_jobs: Workers over the grid (default ANNULUS_OPT_THREADS); the
            descent inside each task runs single-threaded when the grid is
            split across workers

    Returns:
        One report per lambda
    """
    values = [float(lam) for lam in lambdas]
    jobs = worker_count() if n_jobs is None else n_jobs
    options = {
        "budget": budget,
        "M": M,
        "restarts": restarts,
        "seed": seed,
        "run_descent": run_descent,
        "n_jobs": 1 if jobs != 1 else None,
    }
    reports = Parallel(n_jobs=jobs)(delayed(_solve_and_certify)(ring, lam, options) for lam in values)
    failed = sum(r.verdict == Verdict.FAIL for r in reports)
    logger.info(f"Certified {len(reports)} lambdas on ring ({ring.a}, {ring.b}) with {jobs} workers: {failed} failed")
    return reports
