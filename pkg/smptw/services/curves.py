# smptw/services/curves.py
# Curve data for external plotting: pdf, cdf, survival and hazard on a grid

from typing import List, Tuple

import numpy as np

from smptw.core.errors import DomainError, HazardOverflowError
from smptw.schema import CurveRow, SmptwParams
from smptw.services.distribution import (SURVIVAL_FLOOR, cdf, hazard, pdf,
                                         survival)


def parse_grid(text: str) -> Tuple[float, float, int]:
    """'A,B,K' -> (A, B, K)."""
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise DomainError(f"grid must be 'start,stop,count', got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise DomainError(f"invalid grid {text!r}: {e}") from e


def emit_curves(p: SmptwParams, grid: Tuple[float, float, int]) -> List[CurveRow]:
    """
    Evaluate the distribution on count equally spaced points of [start, stop].
    Hazard is left empty where S(y) < 1e-12 (and at y = 0 when phi < 1).

    Raises:
        DomainError: start < 0, start >= stop or count < 2
    """
    start, stop, count = grid
    if not (np.isfinite(start) and np.isfinite(stop)) or start < 0 or start >= stop or count < 2:
        raise DomainError(f"invalid grid ({start}, {stop}, {count})")

    ys = np.linspace(start, stop, int(count))
    f = np.asarray(pdf(p, ys))
    F = np.asarray(cdf(p, ys))
    S = np.asarray(survival(p, ys))

    rows: List[CurveRow] = []
    for y, fy, Fy, Sy in zip(ys, f, F, S):
        h = None
        if Sy >= SURVIVAL_FLOOR and y > 0:
            try:
                h = hazard(p, float(y))
            except HazardOverflowError:
                h = None
        elif Sy >= SURVIVAL_FLOOR and np.isfinite(fy):
            h = float(fy / Sy)
        rows.append(
            CurveRow(
                y=float(y),
                pdf=float(fy) if np.isfinite(fy) else float("inf"),
                cdf=float(Fy),
                survival=float(Sy),
                hazard=h,
            )
        )
    return rows
