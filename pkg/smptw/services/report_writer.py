# smptw/services/report_writer.py
# Result emission
# - JSON reports (pydantic, schema_version at top level, no timestamps)
# - CSV rows (samples, curves) via csv.DictWriter to a file or stdout
# - Aligned text tables for fits, simulation and model comparison reports

from __future__ import annotations

import csv
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, TextIO

from loguru import logger
from pydantic import BaseModel

from smptw.schema import FitResult, ModelComparisonReport, SimulationReport


def _collect_fieldnames(rows: List[Dict]) -> List[str]:
    """Field names in order of first appearance."""
    seen = set()
    order: List[str] = []
    for row in rows:
        for k in row.keys():
            if k not in seen:
                seen.add(k)
                order.append(k)
    return order


def _fmt(value: Optional[float], width: int = 10, digits: int = 4) -> str:
    if value is None:
        return "-".rjust(width)
    return f"{value:{width}.{digits}f}"


# --------------------------------------------------------
# JSON
# --------------------------------------------------------
def to_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2, by_alias=True) + "\n"


def write_json(report: BaseModel, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(report), encoding="utf-8")
    logger.info(f"[Report] wrote {path}")


# --------------------------------------------------------
# CSV
# --------------------------------------------------------
def write_csv(
    rows: List[Dict],
    path: Optional[Path] = None,
    field_order: Optional[List[str]] = None,
) -> List[str]:
    """
    Write dict rows as CSV to path, or to stdout when path is None.
    None values become empty fields.
    """
    if not rows:
        raise ValueError("No rows to write")

    fieldnames = field_order or _collect_fieldnames(rows)

    def _dump(f: TextIO) -> None:
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in fieldnames})

    if path is None:
        _dump(sys.stdout)
    else:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as f:
            _dump(f)
        logger.debug(f"[Report] wrote CSV {path}, fields={fieldnames}")
    return fieldnames


def write_values_csv(values: Iterable[float], path: Optional[Path] = None) -> None:
    """Single-column CSV with header "y" (same layout load_dataset reads back)."""
    write_csv([{"y": repr(float(v))} for v in values], path, field_order=["y"])


# --------------------------------------------------------
# Text tables
# --------------------------------------------------------
def format_fit_table(fit: FitResult) -> str:
    lines = [
        f"model: {fit.model_id}   n = {fit.n_obs}   log-likelihood = {fit.log_likelihood:.4f}",
        f"{'parameter':<12}{'estimate':>12}{'std.error':>12}",
    ]
    for i, name in enumerate(fit.param_names):
        se = fit.std_errors[i] if fit.std_errors is not None else None
        lines.append(f"{name:<12}{_fmt(fit.estimates[i], 12)}{_fmt(se, 12)}")
    status = "converged" if fit.converged else f"NOT converged ({fit.message})"
    lines.append(f"{status}; iterations = {fit.iterations}; |score| = {fit.gradient_norm:.2e}")
    return "\n".join(lines) + "\n"


def format_simulation_table(report: SimulationReport) -> str:
    header = (
        f"{'lambda':>7}{'phi':>7}{'n':>6}  {'param':<7}{'mean':>10}{'bias':>10}"
        f"{'MSE':>10}{'coverage':>10}{'reps':>6}{'retry':>6}"
    )
    lines = [header, "-" * len(header)]
    for cell in report.cells:
        flag = " *" if cell.unreliable else ""
        if not cell.stats:
            lines.append(
                f"{cell.params.lambda_:7.2f}{cell.params.phi:7.2f}{cell.n:6d}  (no converged fits){flag}"
            )
            continue
        for s in cell.stats:
            lines.append(
                f"{cell.params.lambda_:7.2f}{cell.params.phi:7.2f}{cell.n:6d}  {s.name:<7}"
                f"{_fmt(s.mean_estimate)}{_fmt(s.bias)}{_fmt(s.mse)}{_fmt(s.coverage, 10, 3)}"
                f"{cell.replications:6d}{cell.retries:6d}{flag}"
            )
    if any(c.unreliable for c in report.cells):
        lines.append("* retry cap reached with failed fits left (cell unreliable)")
    return "\n".join(lines) + "\n"


def format_comparison_table(report: ModelComparisonReport) -> str:
    lines = [f"dataset: {report.dataset}   n = {report.n_obs}"]
    width = max(len(r.model_id.value) for r in report.rows) + 2
    lines.append(f"{'model':<{width}}estimates (std. errors)")
    for r in report.rows:
        parts = []
        for i, name in enumerate(r.param_names):
            se = f" ({r.std_errors[i]:.4f})" if r.std_errors is not None else ""
            parts.append(f"{name}={r.estimates[i]:.4f}{se}")
        lines.append(f"{r.model_id.value:<{width}}{', '.join(parts)}")

    lines.append("")
    header = (
        f"{'model':<{width}}{'loglik':>11}{'AIC':>11}{'BIC':>11}{'AICc':>11}{'HQIC':>11}{'rank':>6}"
    )
    lines += [header, "-" * len(header)]
    for r in report.rows:
        rank = str(r.rank) if r.rank is not None else ("-" if r.converged else "failed")
        lines.append(
            f"{r.model_id.value:<{width}}{_fmt(r.log_likelihood, 11)}{_fmt(r.aic, 11)}"
            f"{_fmt(r.bic, 11)}{_fmt(r.aicc, 11)}{_fmt(r.hqic, 11)}{rank:>6}"
        )
    return "\n".join(lines) + "\n"
