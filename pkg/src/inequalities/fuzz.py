"""
Seeded fuzzing of the inequalities on random convex polygons.

Every body gets its own child of the master SeedSequence, so results do
not depend on how the batch is sharded across workers.
"""

import csv
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from config.settings import FUZZ_RADIUS_RANGE, FUZZ_VARIANTS, FUZZ_VERTEX_RANGE, INEQUALITY_REL_TOL
from ..errors import ParameterError
from ..geometry import ConvexBody, contact_count, incircle, random_convex_polygon
from ..runtime import worker_count
from .checks import InequalityName, InequalityReport, check_all, crossover_sign

logger = logging.getLogger(__name__)

SHARD_SIZE = 250


@dataclass
class Witness:
    """A body on which one inequality is (nearly) tight."""
    index: int
    variant: int
    name: InequalityName
    slack: float
    scale: float
    contacts: Optional[int]
    vertices: List[Tuple[float, float]]

    def to_row(self) -> List[Any]:
        points = ";".join(f"{x:.10g} {y:.10g}" for x, y in self.vertices)
        return [self.index, self.variant, self.name.value, f"{self.slack:.10g}", f"{self.scale:.10g}",
                "" if self.contacts is None else self.contacts, points]


@dataclass
class BodyOutcome:
    index: int
    reports: List[Tuple[int, Tuple[InequalityReport, ...]]]
    witnesses: List[Witness]
    homogeneous: bool
    crossover_consistent: bool


@dataclass
class FuzzSummary:
    """Aggregate of a fuzz run."""
    n: int
    seed: int
    bodies_checked: int = 0
    violations: Dict[str, int] = field(default_factory=dict)
    worst_slack: Dict[str, float] = field(default_factory=dict)
    witnesses: List[Witness] = field(default_factory=list)
    homogeneity_failures: int = 0
    crossover_failures: int = 0

    @property
    def passed(self) -> bool:
        return (
            not any(self.violations.values())
            and self.homogeneity_failures == 0
            and self.crossover_failures == 0
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "seed": self.seed,
            "bodies_checked": self.bodies_checked,
            "violations": dict(self.violations),
            "worst_relative_slack": dict(self.worst_slack),
            "near_equality_witnesses": len(self.witnesses),
            "homogeneity_failures": self.homogeneity_failures,
            "crossover_failures": self.crossover_failures,
            "passed": self.passed,
        }


WITNESS_HEADER = ["index", "variant", "inequality", "slack", "scale", "contacts", "vertices"]


def write_witness_csv(witnesses: Iterable[Witness], path: str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(WITNESS_HEADER)
        for witness in witnesses:
            writer.writerow(witness.to_row())


def _witnesses(index: int, variant: int, body: ConvexBody, reports: Sequence[InequalityReport]) -> List[Witness]:
    found = []
    for report in reports:
        if not report.near_equality:
            continue
        contacts = None
        if report.name == InequalityName.BONNESEN_FENCHEL:
            center, r = incircle(body)
            contacts = contact_count(body, center, r)
        found.append(Witness(
            index, variant, report.name, report.slack, report.scale, contacts,
            [(p.x, p.y) for p in body.vertices()],
        ))
    return found


def _homogeneous(base: Sequence[InequalityReport], scaled: Sequence[InequalityReport], factor: float) -> bool:
    for r0, r1 in zip(base, scaled):
        expected = factor * factor * r0.slack
        if abs(r1.slack - expected) > INEQUALITY_REL_TOL * factor * factor * r0.scale:
            return False
    return True


def check_body(index: int, seed: np.random.SeedSequence, vertex_range: Tuple[int, int], variants: int) -> BodyOutcome:
    """Draw one polygon and its moved/scaled variants, run every check."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(vertex_range[0], vertex_range[1] + 1))
    radius = float(rng.uniform(*FUZZ_RADIUS_RANGE))
    body = random_convex_polygon(n, radius, int(seed.generate_state(1)[0]))
    base = check_all(body)
    reports = [(0, base)]
    witnesses = _witnesses(index, 0, body, base)
    homogeneous = True
    consistent = _consistent(body)
    for v in range(1, variants + 1):
        factor = float(rng.uniform(0.5, 2.0))
        dx, dy = rng.uniform(-radius, radius, 2)
        moved = body.scale(factor).translate(float(dx), float(dy))
        current = check_all(moved)
        reports.append((v, current))
        witnesses.extend(_witnesses(index, v, moved, current))
        homogeneous &= _homogeneous(base, current, factor)
        consistent &= _consistent(moved)
    return BodyOutcome(index, reports, witnesses, homogeneous, consistent)


def _consistent(body: ConvexBody) -> bool:
    bound_sign, perimeter_sign = crossover_sign(body)
    return bound_sign == perimeter_sign or 0 in (bound_sign, perimeter_sign)


def _shard(start: int, seeds: Sequence[np.random.SeedSequence], vertex_range, variants) -> List[BodyOutcome]:
    return [check_body(start + k, s, vertex_range, variants) for k, s in enumerate(seeds)]


def fuzz(
    n: int,
    seed: int = 0,
    vertex_range: Tuple[int, int] = FUZZ_VERTEX_RANGE,
    variants: int = FUZZ_VARIANTS,
    n_jobs: Optional[int] = None,
) -> FuzzSummary:
    """
    Check all three inequalities on n random convex polygons.

    Args:
        n: Number of base polygons (>= 1)
        seed: Master seed
        vertex_range: Inclusive range of sampled point counts
        variants: Translated and scaled copies per polygon
        n_jobs: Worker count (ANNULUS_OPT_THREADS by default)

    Returns:
        FuzzSummary with violation counts, worst relative slack and
        near-equality witnesses
    """
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    lo, hi = vertex_range
    if not (3 <= lo <= hi):
        raise ParameterError(f"Vertex range must satisfy 3 <= lo <= hi, got {vertex_range}")
    if variants < 0:
        raise ParameterError(f"variants must be non-negative, got {variants}")
    children = np.random.SeedSequence(seed).spawn(n)
    jobs = worker_count() if n_jobs is None else n_jobs
    shards = Parallel(n_jobs=jobs)(
        delayed(_shard)(start, children[start:start + SHARD_SIZE], (lo, hi), variants)
        for start in range(0, n, SHARD_SIZE)
    )
    summary = FuzzSummary(n=n, seed=seed)
    for name in InequalityName:
        summary.violations[name.value] = 0
        summary.worst_slack[name.value] = math.inf
    for outcome in (o for shard in shards for o in shard):
        for _, reports in outcome.reports:
            summary.bodies_checked += 1
            for report in reports:
                key = report.name.value
                if not report.holds:
                    summary.violations[key] += 1
                    logger.warning(f"{key} violated on body {outcome.index}: slack {report.slack:.3e}")
                summary.worst_slack[key] = min(summary.worst_slack[key], report.slack / report.scale)
        summary.witnesses.extend(outcome.witnesses)
        summary.homogeneity_failures += not outcome.homogeneous
        summary.crossover_failures += not outcome.crossover_consistent
    logger.info(
        f"Fuzz of {summary.bodies_checked} bodies: violations {summary.violations}, "
        f"{len(summary.witnesses)} near-equality witnesses"
    )
    return summary
