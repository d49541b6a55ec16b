# smptw/main.py
# smptw command-line entrypoint
# - Initialize logger (stderr) from --log-level / settings
# - Subcommands: sample, fit, simulate, compare, curves
# - Exit codes: 0 success, 2 domain / parse / validation errors, 3 numeric errors
# - Global config provided by smptw/config.py (pydantic-settings)

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from smptw.config import settings
from smptw.core.errors import DomainError, NumericError
from smptw.core.logger import setup_logger
from smptw.core.version import TOOL_NAME, VERSION
from smptw.schema import ModelId, SeededStream, SimulationPlan, SmptwParams
from smptw.services import report_writer
from smptw.services.application import run_application
from smptw.services.curves import emit_curves, parse_grid
from smptw.services.dataset_service import load_dataset
from smptw.services.model_zoo import fit_model
from smptw.services.sampler import sample
from smptw.services.simulation import run_simulation

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3


# --------------------------------------------------------
# Subcommand handlers
# --------------------------------------------------------
def _cmd_sample(args: argparse.Namespace) -> int:
    p = SmptwParams(lambda_=args.lam, phi=args.phi)
    y = sample(p, args.n, SeededStream(seed=args.seed, stream_id=args.stream_id))
    report_writer.write_values_csv(y, args.out)
    logger.info(f"[CLI] sampled n={args.n} from lambda={p.lambda_} phi={p.phi}")
    return EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.data)
    fit = fit_model(args.model, dataset.values)
    sys.stdout.write(report_writer.format_fit_table(fit))
    if args.out:
        report_writer.write_json(fit, args.out)
    return EXIT_OK if fit.converged else EXIT_NUMERIC


def _build_plan(args: argparse.Namespace) -> SimulationPlan:
    if args.paper_table2:
        plan = SimulationPlan.reference_grid()
    else:
        plan_path = Path(args.plan)
        if not plan_path.exists():
            raise FileNotFoundError(f"Plan file not found: {plan_path}")
        plan = SimulationPlan.model_validate_json(plan_path.read_text(encoding="utf-8"))

    overrides = {}
    if args.replications is not None:
        overrides["replications"] = args.replications
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.level is not None:
        overrides["confidence_level"] = args.level
    if overrides:
        plan = SimulationPlan.model_validate({**plan.model_dump(by_alias=True), **overrides})
    return plan


def _cmd_simulate(args: argparse.Namespace) -> int:
    plan = _build_plan(args)
    report = run_simulation(plan, max_parallel=args.workers)
    report_writer.write_json(report, args.out)
    sys.stdout.write(report_writer.format_simulation_table(report))
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.data)
    report = run_application(dataset, paper_faithful=args.paper_faithful)
    sys.stdout.write(report_writer.format_comparison_table(report))
    if args.out:
        report_writer.write_json(report, args.out)
    return EXIT_OK


def _cmd_curves(args: argparse.Namespace) -> int:
    p = SmptwParams(lambda_=args.lam, phi=args.phi)
    rows = emit_curves(p, parse_grid(args.grid))
    report_writer.write_csv(
        [r.model_dump() for r in rows],
        args.out,
        field_order=["y", "pdf", "cdf", "survival", "hazard"],
    )
    return EXIT_OK


# --------------------------------------------------------
# Argument parser
# --------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="SMP-transformed standard Weibull: sampling, fitting, simulation and model comparison",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {VERSION}")
    parser.add_argument("--log-level", default=None, help="DEBUG / INFO / WARNING / ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", help="draw a seeded SMPtW sample (CSV)")
    p_sample.add_argument("--lambda", dest="lam", type=float, required=True)
    p_sample.add_argument("--phi", type=float, required=True)
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--stream-id", type=int, default=0)
    p_sample.add_argument("--out", type=Path, default=None, help="CSV file (default: stdout)")
    p_sample.set_defaults(handler=_cmd_sample)

    p_fit = sub.add_parser("fit", help="maximum-likelihood fit of one model")
    p_fit.add_argument("--data", type=Path, required=True)
    p_fit.add_argument(
        "--model", default=ModelId.SMPTW.value, choices=[m.value for m in ModelId]
    )
    p_fit.add_argument("--out", type=Path, default=None, help="JSON file for the FitResult")
    p_fit.set_defaults(handler=_cmd_fit)

    p_sim = sub.add_parser("simulate", help="Monte Carlo bias / MSE / coverage study")
    source = p_sim.add_mutually_exclusive_group(required=True)
    source.add_argument("--plan", type=Path, help="SimulationPlan JSON file")
    source.add_argument("--paper-table2", action="store_true", help="the reference five-pair plan")
    p_sim.add_argument("--replications", type=int, default=None)
    p_sim.add_argument("--seed", type=int, default=None)
    p_sim.add_argument("--level", type=float, default=None, help="Wald interval level")
    p_sim.add_argument(
        "--workers", type=int, default=None, help=f"worker processes (default MAX_PARALLEL={settings.MAX_PARALLEL})"
    )
    p_sim.add_argument("--out", type=Path, required=True)
    p_sim.set_defaults(handler=_cmd_simulate)

    p_cmp = sub.add_parser("compare", help="fit and rank the competitor models")
    p_cmp.add_argument("--data", type=Path, required=True)
    p_cmp.add_argument("--out", type=Path, default=None)
    p_cmp.add_argument(
        "--paper-faithful", action="store_true", help="exclude the two-parameter SMPtW from ranking"
    )
    p_cmp.set_defaults(handler=_cmd_compare)

    p_curves = sub.add_parser("curves", help="pdf / cdf / survival / hazard on a grid (CSV)")
    p_curves.add_argument("--lambda", dest="lam", type=float, required=True)
    p_curves.add_argument("--phi", type=float, required=True)
    p_curves.add_argument("--grid", required=True, help="start,stop,count")
    p_curves.add_argument("--out", type=Path, default=None, help="CSV file (default: stdout)")
    p_curves.set_defaults(handler=_cmd_curves)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        setup_logger(args.log_level or settings.LOG_LEVEL)
    except Exception as e:
        import logging

        logging.basicConfig(level=logging.DEBUG)
        logging.error(f"Logger setup failed, fallback to std logging: {e}")

    try:
        return args.handler(args)
    except (DomainError, ValidationError, FileNotFoundError) as e:
        logger.error(f"[CLI] {args.command}: {e}")
        return EXIT_DOMAIN
    except NumericError as e:
        logger.error(f"[CLI] {args.command}: numerical failure: {e}")
        return EXIT_NUMERIC


# Entry point: use `python -m smptw`
if __name__ == "__main__":
    sys.exit(main())
