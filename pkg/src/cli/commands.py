"""
Command implementations. Each returns a process exit code.
"""

import csv
import io
import json
import logging
import math
import os
from typing import Any, Iterable, List, Optional, Sequence

from config.settings import BETA_DECIMALS, EXIT_FAILURE, EXIT_OK, SIGNIFICANT_DIGITS
from ..inequalities import fuzz, write_witness_csv
from ..oracle import Verdict, certify, certify_grid
from ..solver import (
    Regime,
    Solution,
    beta,
    betahat,
    family_members,
    solve,
    solve_inner_only,
    solve_outer_only,
    sweep,
)
from ..visualization import format_solution, render_family_svg, render_solution_svg
from .config import OutputFormat, RunConfig, Variant

logger = logging.getLogger(__name__)

SWEEP_HEADER = ["lambda_lo", "lambda_hi", "regime", "label", "p", "tangent_angles", "chord_angles", "area", "perimeter", "J"]


def _sig(value: float) -> str:
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def rounded(data: Any) -> Any:
    """Round every float in a JSON-like structure to the printed precision."""
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, float):
        if not math.isfinite(data):
            return None
        return float(_sig(data))
    if isinstance(data, dict):
        return {k: rounded(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [rounded(v) for v in data]
    return data


def to_json(data: Any) -> str:
    return json.dumps(rounded(data), indent=2, ensure_ascii=False) + "\n"


def emit(text: str, path: Optional[str]) -> None:
    """Write to the output file, or stdout when no path is given."""
    if path is None:
        print(text, end="")
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    logger.info(f"Wrote {path}")


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _solve(cfg: RunConfig):
    if cfg.variant == Variant.INNER:
        return solve_inner_only(cfg.a, cfg.lam)
    if cfg.variant == Variant.OUTER:
        return solve_outer_only(cfg.b, cfg.lam)
    return solve(cfg.ring, cfg.lam)


def cmd_solve(cfg: RunConfig) -> int:
    result = _solve(cfg)
    if cfg.output_format == OutputFormat.TEXT and isinstance(result, Solution):
        emit(format_solution(result) + "\n", cfg.output_path)
    else:
        emit(to_json(result.to_dict()), cfg.output_path)
    return EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    rows = sweep(cfg.ring, cfg.lambda_grid.values())
    if cfg.output_format == OutputFormat.JSON:
        emit(to_json([row.to_dict() for row in rows]), cfg.output_path)
        return EXIT_OK
    lines = [
        [
            _sig(row.lambda_lo),
            _sig(row.lambda_hi),
            row.regime,
            row.label,
            row.p,
            ";".join(_sig(t) for t in (row.config.tangent_angles if row.config else ())),
            ";".join(_sig(e) for e in (row.config.chord_angles if row.config else ())),
            _sig(row.area),
            _sig(row.perimeter),
            _sig(row.J),
        ]
        for row in rows
    ]
    emit(_csv(SWEEP_HEADER, lines), cfg.output_path)
    return EXIT_OK


def cmd_beta_table(cfg: RunConfig) -> int:
    values = [(n, beta(n), betahat(n)) for n in range(3, cfg.n_max + 1)]
    if cfg.output_format == OutputFormat.JSON:
        emit(to_json([{"n": n, "beta": b, "betahat": bh} for n, b, bh in values]), cfg.output_path)
        return EXIT_OK
    lines = [[n, f"{b:.{BETA_DECIMALS}f}", f"{bh:.{BETA_DECIMALS}f}"] for n, b, bh in values]
    emit(_csv(["n", "beta", "betahat"], lines), cfg.output_path)
    return EXIT_OK


def _family_paths(path: Optional[str], count: int) -> List[Optional[str]]:
    if path is None:
        return [None] * count
    stem, ext = os.path.splitext(path)
    return [f"{stem}_family{k + 1}{ext or '.svg'}" for k in range(count)]


def cmd_render(cfg: RunConfig) -> int:
    solution = solve(cfg.ring, cfg.lam)
    emit(render_solution_svg(solution), cfg.output_path)
    if cfg.family_sample:
        if solution.regime != Regime.CIRCUMSCRIBED_FAMILY:
            logger.warning(f"--family-sample ignored: lambda={cfg.lam} is not 2/a")
            return EXIT_OK
        members = family_members(cfg.ring, cfg.family_sample, seed=cfg.seed)
        for svg, path in zip(render_family_svg(members, cfg.a, cfg.b), _family_paths(cfg.output_path, len(members))):
            emit(svg, path)
    return EXIT_OK


def _load_solution(path: str) -> Solution:
    with open(path, encoding="utf-8") as handle:
        return Solution.from_dict(json.load(handle))


def cmd_certify(cfg: RunConfig) -> int:
    ring = cfg.ring
    options = {
        "budget": cfg.budget,
        "M": cfg.descent_m,
        "restarts": cfg.restarts,
        "seed": cfg.seed,
        "run_descent": not cfg.skip_descent,
    }
    if cfg.solution_path:
        solution = _load_solution(cfg.solution_path)
        reports = [certify(solution, ring, solution.lam, **options)]
    else:
        reports = certify_grid(ring, cfg.lambdas(), **options)
    failed = [r for r in reports if r.verdict == Verdict.FAIL]
    emit(to_json({
        "verdict": (Verdict.FAIL if failed else Verdict.PASS).value,
        "reports": [r.to_dict(cfg.timings) for r in reports],
    }), cfg.output_path)
    if failed:
        logger.warning(f"{len(failed)} of {len(reports)} certifications failed")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_fuzz(cfg: RunConfig) -> int:
    summary = fuzz(cfg.fuzz_n, seed=cfg.seed)
    emit(to_json(summary.to_dict()), cfg.output_path)
    if cfg.witness_csv:
        write_witness_csv(summary.witnesses, cfg.witness_csv)
    return EXIT_OK if summary.passed else EXIT_FAILURE
