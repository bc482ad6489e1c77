"""Report model and its json, csv and text renderings."""

import json
import logging
import sys
from pathlib import Path

import pandas as pd
from pydantic import BaseModel

from delannoy_schroder.core.checks.config import RunConfig
from delannoy_schroder.core.checks.errors import ReportWriteError
from delannoy_schroder.core.checks.models import (
    CheckResult,
    OutputFormat,
    Summary,
    format_params,
)

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["suite", "id", "params", "status", "witness", "elapsed_ms"]


class Report(BaseModel):
    schema_version: int
    tool_version: str
    config: RunConfig
    results: list[CheckResult]
    summary: Summary
    elapsed_ms: int = 0


def results_frame(results: list[CheckResult]) -> pd.DataFrame:
    """One row per result with params rendered as k1=v1;k2=v2."""
    rows = [
        {
            "suite": r.suite.value,
            "id": r.id,
            "params": format_params(r.params),
            "status": r.status.value,
            "witness": r.witness,
            "elapsed_ms": r.elapsed_ms,
        }
        for r in results
    ]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def to_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"


def to_csv(report: Report) -> str:
    return results_frame(report.results).to_csv(index=False, lineterminator="\n")


def to_text(report: Report) -> str:
    """Summary table of the results followed by the status counts."""
    if not report.results:
        table = "No checks selected"
    else:
        frame = results_frame(report.results).drop(columns=["elapsed_ms"])
        table = frame.to_string(index=False, max_colwidth=100)
    lines = [table, "", f"Summary: {report.summary}"]
    if report.summary.proved_failures:
        lines.append(f"Proved-statement failures: {report.summary.proved_failures}")
    if report.summary.conjecture_failures:
        lines.append(f"Conjecture failures: {report.summary.conjecture_failures}")
    return "\n".join(lines) + "\n"


RENDERERS = {
    OutputFormat.JSON: to_json,
    OutputFormat.CSV: to_csv,
    OutputFormat.TEXT: to_text,
}


def emit_report(report: Report, fmt: OutputFormat, path: str | Path | None = None):
    """Write the rendered report to `path`, or to standard output when path is None."""
    content = RENDERERS[OutputFormat(fmt)](report)
    if path is None:
        sys.stdout.write(content)
        return
    try:
        Path(path).write_text(content, encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(f"Cannot write report to '{path}': {e}") from e
    logger.info("Report written to '%s'", path)
