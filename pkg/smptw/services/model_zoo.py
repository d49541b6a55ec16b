# smptw/services/model_zoo.py
# Competitor model service
# - Registry of ModelSpec per ModelId (reference order)
# - model_pdf / fit_model through smptw.models and the shared MleEngine
# - compare_models: fit all, attach information criteria, rank by AIC (ties by BIC)

from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from loguru import logger

from smptw.core.errors import AiccUnavailableError, DomainError
from smptw.models import as_lifetime_data, get_model
from smptw.schema import (FitResult, ModelComparisonReport,
                          ModelComparisonRow, ModelId, ModelSpec)
from smptw.services.inference import MleEngine, information_criteria

# The six compared models, in reporting order
REFERENCE_MODELS: List[ModelId] = [
    ModelId.STANDARD_WEIBULL,
    ModelId.TWO_PARAM_WEIBULL,
    ModelId.EXPONENTIATED_WEIBULL,
    ModelId.TRANSMUTED_WEIBULL,
    ModelId.SINE_ALPHA_POWER_WEIBULL,
    ModelId.SMP_WEIBULL_3P,
]

MODEL_SPECS: Dict[ModelId, ModelSpec] = {m: get_model(m).spec for m in ModelId}

SpecLike = Union[ModelSpec, ModelId, str]


def _model_id(spec: SpecLike) -> ModelId:
    if isinstance(spec, ModelSpec):
        return spec.model_id
    try:
        return ModelId(str(spec).lower())
    except ValueError as e:
        raise DomainError(f"unknown model: {spec}") from e


def model_pdf(spec: SpecLike, params: Sequence[float], y):
    """
    Density of a zoo model.

    Raises:
        DomainError: params outside the model's domains or y <= 0
    """
    out = get_model(_model_id(spec)).pdf(params, y)
    return float(out) if np.ndim(out) == 0 else out


def fit_model(spec: SpecLike, data: Sequence[float]) -> FitResult:
    """
    MLE of a zoo model. Non-convergence is reported in the result, never raised.

    Raises:
        DomainError: len(data) <= param_count + 1 or invalid observations
    """
    model = get_model(_model_id(spec))
    y = as_lifetime_data(data)
    if y.size <= model.param_count + 1:
        raise DomainError(
            f"{model.model_id} needs more than {model.param_count + 1} observations, got {y.size}"
        )
    return MleEngine(model).fit(y)


def _row(fit: FitResult, n: int) -> ModelComparisonRow:
    k = len(fit.estimates)
    criteria = {}
    if fit.converged:
        try:
            criteria = information_criteria(fit.log_likelihood, k, n).model_dump()
        except AiccUnavailableError:
            criteria = {}
    return ModelComparisonRow(
        model_id=ModelId(fit.model_id),
        param_names=fit.param_names,
        estimates=fit.estimates,
        std_errors=fit.std_errors,
        log_likelihood=fit.log_likelihood,
        converged=fit.converged,
        message=fit.message,
        **criteria,
    )


def compare_models(
    data: Sequence[float],
    specs: Optional[Sequence[SpecLike]] = None,
    dataset_name: str = "data",
    ranked: Optional[Sequence[SpecLike]] = None,
) -> ModelComparisonReport:
    """
    Fit every model and rank the converged ones by AIC, ties broken by BIC.

    Args:
        data: Positive observations
        specs: Models to fit (default: the six compared models)
        dataset_name: Name recorded in the report
        ranked: Subset of specs that takes part in the ranking (default: all)

    Returns:
        ModelComparisonReport: one row per model in the given order; failed or
            excluded models keep rank=None
    """
    y = as_lifetime_data(data)
    ids = [_model_id(s) for s in (specs if specs is not None else REFERENCE_MODELS)]
    if not ids:
        raise DomainError("compare_models needs at least one model")
    rank_ids = set(ids if ranked is None else (_model_id(s) for s in ranked))

    rows: List[ModelComparisonRow] = []
    for model_id in ids:
        try:
            fit = fit_model(model_id, y)
        except ArithmeticError as e:
            logger.warning(f"[ModelZoo] {model_id} failed: {e}")
            k = MODEL_SPECS[model_id].param_count
            fit = FitResult(
                model_id=str(model_id),
                param_names=list(MODEL_SPECS[model_id].param_names),
                estimates=[float("nan")] * k,
                log_likelihood=-1e308,
                converged=False,
                iterations=0,
                gradient_norm=1e308,
                n_obs=int(y.size),
                message=str(e),
            )
        rows.append(_row(fit, y.size))

    eligible = [
        r for r in rows if r.converged and r.aic is not None and r.model_id in rank_ids
    ]
    order = sorted(eligible, key=lambda r: (r.aic, r.bic))
    ranks = {r.model_id: i for i, r in enumerate(order, start=1)}
    rows = [r.model_copy(update={"rank": ranks.get(r.model_id)}) for r in rows]

    best = order[0].model_id if order else None
    logger.info(f"[ModelZoo] compared {len(rows)} models on {dataset_name} (n={y.size}); best={best}")
    return ModelComparisonReport(dataset=dataset_name, n_obs=int(y.size), rows=rows)
