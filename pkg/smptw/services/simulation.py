# smptw/services/simulation.py
# Monte Carlo study: bias / MSE / Wald coverage of the SMPtW MLE
# - SimulationRunner: process pool sized like MAX_PARALLEL (0 = cpu - 1)
# - Replication r of cell c, attempt a, draws from stream_id = hash(c, r, a)
# - Failed fits (not converged, no standard errors) are re-drawn in replication
#   order, at most ceil(SIM_RETRY_FRACTION * R) per cell
# - info logs: study start, completed cells; debug logs: retry passes

from __future__ import annotations

import hashlib
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from loguru import logger

from smptw.config import settings
from smptw.core.errors import SmptwError
from smptw.schema import (ParameterStats, SeededStream, SimulationCell,
                          SimulationPlan, SimulationReport, SmptwParams)
from smptw.services.inference import fit_mle, wald_interval
from smptw.services.sampler import sample


def stream_id_for(cell: int, replication: int, attempt: int = 0) -> int:
    """64-bit substream id for (cell, replication, attempt)."""
    key = f"{cell}:{replication}:{attempt}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


class ReplicationTask(NamedTuple):
    cell: int
    replication: int
    attempt: int
    params: SmptwParams
    n: int
    seed: int
    level: float


class ReplicationOutcome(NamedTuple):
    estimates: Optional[Tuple[float, float]]
    covered: Optional[Tuple[bool, bool]]

    @property
    def ok(self) -> bool:
        return self.estimates is not None


def run_replication(task: ReplicationTask) -> ReplicationOutcome:
    """Sample, fit and check interval coverage for one replication (pure)."""
    stream = SeededStream(
        seed=task.seed, stream_id=stream_id_for(task.cell, task.replication, task.attempt)
    )
    y = sample(task.params, task.n, stream)
    try:
        fit = fit_mle(y)
    except SmptwError:
        return ReplicationOutcome(None, None)
    if not fit.converged or not fit.std_errors_available:
        return ReplicationOutcome(None, None)
    truth = (task.params.lambda_, task.params.phi)
    covered = tuple(wald_interval(fit, i, task.level).contains(truth[i]) for i in range(2))
    return ReplicationOutcome((fit.estimates[0], fit.estimates[1]), covered)


def _cell_stats(params: SmptwParams, outcomes: List[ReplicationOutcome]) -> List[ParameterStats]:
    good = [o for o in outcomes if o.ok]
    if not good:
        return []
    est = np.array([o.estimates for o in good])
    cov = np.array([o.covered for o in good], dtype=float)
    stats: List[ParameterStats] = []
    for i, (name, truth) in enumerate((("lambda", params.lambda_), ("phi", params.phi))):
        diffs = est[:, i] - truth
        stats.append(
            ParameterStats(
                name=name,
                true_value=truth,
                mean_estimate=float(np.mean(est[:, i])),
                bias=float(np.mean(diffs)),
                mse=float(np.mean(diffs**2)),
                coverage=float(np.mean(cov[:, i])),
            )
        )
    return stats


class SimulationRunner:
    def __init__(self, max_parallel: Optional[int] = None):
        # Determine max concurrency
        requested = settings.MAX_PARALLEL if max_parallel is None else max_parallel
        if requested in (0, None):
            self.max_parallel = max(1, (os.cpu_count() or 2) - 1)
        else:
            self.max_parallel = int(requested)

    # --------------------------------------------------------
    # Execute a batch of replications (order preserving)
    # --------------------------------------------------------
    def _map(self, tasks: List[ReplicationTask]) -> List[ReplicationOutcome]:
        if self.max_parallel == 1 or len(tasks) <= 1:
            return [run_replication(t) for t in tasks]
        chunk = max(1, len(tasks) // (4 * self.max_parallel))
        with ProcessPoolExecutor(max_workers=self.max_parallel) as pool:
            return list(pool.map(run_replication, tasks, chunksize=chunk))

    # --------------------------------------------------------
    # Public API
    # --------------------------------------------------------
    def run(self, plan: SimulationPlan) -> SimulationReport:
        """
        Run every (param pair, sample size) cell of the plan.

        The report depends only on the plan: worker count and completion
        order never change it.
        """
        cells = [(p, n) for p in plan.param_pairs for n in plan.sample_sizes]
        R = plan.replications
        cap = math.ceil(settings.SIM_RETRY_FRACTION * R)
        logger.info(
            f"[Simulation] {len(cells)} cells x {R} replications, "
            f"workers={self.max_parallel}, seed={plan.base_seed}"
        )

        def task(ci: int, r: int, attempt: int) -> ReplicationTask:
            p, n = cells[ci]
            return ReplicationTask(ci, r, attempt, p, n, plan.base_seed, plan.confidence_level)

        tasks = [task(ci, r, 0) for ci in range(len(cells)) for r in range(R)]
        outcomes: Dict[Tuple[int, int], ReplicationOutcome] = dict(
            zip(((t.cell, t.replication) for t in tasks), self._map(tasks))
        )
        attempts = {key: 0 for key in outcomes}
        retries = [0] * len(cells)

        while True:
            batch: List[ReplicationTask] = []
            for ci in range(len(cells)):
                for r in range(R):
                    if retries[ci] >= cap:
                        break
                    if not outcomes[(ci, r)].ok:
                        attempts[(ci, r)] += 1
                        retries[ci] += 1
                        batch.append(task(ci, r, attempts[(ci, r)]))
            if not batch:
                break
            logger.debug(f"[Simulation] retry pass with {len(batch)} replications")
            for t, outcome in zip(batch, self._map(batch)):
                outcomes[(t.cell, t.replication)] = outcome

        report_cells: List[SimulationCell] = []
        for ci, (p, n) in enumerate(cells):
            cell_outcomes = [outcomes[(ci, r)] for r in range(R)]
            ok = sum(o.ok for o in cell_outcomes)
            unreliable = ok < R
            if unreliable:
                logger.warning(
                    f"[Simulation] cell lambda={p.lambda_} phi={p.phi} n={n}: "
                    f"{R - ok} failed fits left after {retries[ci]} retries"
                )
            report_cells.append(
                SimulationCell(
                    params=p,
                    n=n,
                    replications=ok,
                    retries=retries[ci],
                    unreliable=unreliable,
                    stats=_cell_stats(p, cell_outcomes),
                )
            )
            logger.info(f"[Simulation] cell lambda={p.lambda_} phi={p.phi} n={n} done ({ok}/{R})")

        return SimulationReport(plan=plan, cells=report_cells)


def run_simulation(plan: SimulationPlan, max_parallel: Optional[int] = None) -> SimulationReport:
    return SimulationRunner(max_parallel).run(plan)
