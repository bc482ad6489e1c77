"""Execution of a run: cell planning, optional process fan-out and report assembly."""

import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor

from delannoy_schroder import __version__
from delannoy_schroder.core.checks.config import RunConfig
from delannoy_schroder.core.checks.executor import (
    evaluate,
    expand_cells,
    lookup,
    validate_params,
)
from delannoy_schroder.core.checks.models import CheckResult, Summary
from delannoy_schroder.core.checks.registry import get_catalog, select_entries
from delannoy_schroder.core.checks.report import Report
from delannoy_schroder.core.config.config import REPORT_SCHEMA_VERSION
from delannoy_schroder.toolkits.congruences.bigprime import REMARK_PRIME, REMARK_Y

logger = logging.getLogger(__name__)


def plan_cells(cfg: RunConfig) -> list[tuple[str, dict[str, int]]]:
    """(id, params) for every selected cell, in catalog order."""
    cells = []
    for entry in select_entries(cfg.suites, cfg.ids):
        entry_cells = expand_cells(
            entry,
            n_max=cfg.n_max,
            primes=cfg.primes,
            grid=cfg.grid,
            extended=cfg.extended,
        )
        logger.debug("%s: %d cells", entry.id, len(entry_cells))
        cells.extend((entry.id, cell) for cell in entry_cells)
    return cells


def evaluate_cell(entry_id: str, cell: dict[str, int], timings: bool) -> CheckResult:
    """Worker entry point; looks the entry up again so only plain data crosses processes."""
    return evaluate(get_catalog()[entry_id], cell, timings)


async def _run_cells(
    cells: list[tuple[str, dict[str, int]]], jobs: int, timings: bool
) -> list[CheckResult]:
    if jobs == 1:
        return [evaluate_cell(entry_id, cell, timings) for entry_id, cell in cells]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            loop.run_in_executor(pool, evaluate_cell, entry_id, cell, timings)
            for entry_id, cell in cells
        ]
        return list(await asyncio.gather(*futures))


def _bigprime_cells(cfg: RunConfig) -> list[CheckResult]:
    p = REMARK_PRIME if cfg.p is None else cfg.p
    y = REMARK_Y if cfg.y is None else cfg.y
    logger.info("Large-prime check at p = %d, y = %d", p, y)
    entry = lookup(get_catalog(), "REMARK_1_2")
    return [evaluate(entry, validate_params(entry, {"p": p, "y": y}), cfg.timings)]


async def run_suite(cfg: RunConfig) -> Report:
    """Evaluate every selected cell and collect a deterministic report."""
    start = time.perf_counter()
    if cfg.command == "bigprime":
        results = _bigprime_cells(cfg)
    else:
        cells = plan_cells(cfg)
        logger.info(
            "Running %d cells from suites %s with %d job(s)",
            len(cells),
            ",".join(s.value for s in cfg.suites),
            cfg.jobs,
        )
        results = await _run_cells(cells, cfg.jobs, cfg.timings)
    results.sort(key=CheckResult.sort_key)
    summary = Summary.from_results(results)
    logger.info("Finished: %s", summary)
    elapsed_ms = int((time.perf_counter() - start) * 1000) if cfg.timings else 0
    return Report(
        schema_version=REPORT_SCHEMA_VERSION,
        tool_version=__version__,
        config=cfg,
        results=results,
        summary=summary,
        elapsed_ms=elapsed_ms,
    )


def exit_code(report: Report, strict_conjectures: bool = False) -> int:
    """0 when no proved statement failed; conjecture failures count only when strict."""
    if report.summary.proved_failures:
        return 1
    if strict_conjectures and report.summary.conjecture_failures:
        return 1
    return 0
