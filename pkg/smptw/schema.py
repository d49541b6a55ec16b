# smptw/schema.py
# Pydantic Schema Models
# - Numerical kernel settings: SeriesConfig, QuadratureConfig, SeriesSum
# - Distribution values: SmptwParams, EvalPoint, StressStrengthPair, OrderStatSpec
# - Sampling / inference: SeededStream, FitResult, ConfidenceInterval, InformationCriteria
# - Model zoo: ModelId, ModelSpec
# - Harness: SimulationPlan, SimulationReport, Dataset, ModelComparisonReport, CurveRow

import math
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str(self.value).__format__(format_spec)
from typing import List, Optional, Tuple

from pydantic import (BaseModel, ConfigDict, Field, field_validator,
                      model_validator)

from smptw.config import settings
from smptw.core.version import SCHEMA_VERSION

_U64 = 2**64


# --------------------------------------------------------
# Numerical kernel
# --------------------------------------------------------
class SeriesConfig(BaseModel):
    """
    Truncation rule for every infinite series: stop after two consecutive
    terms with |term| < abs_tol + rel_tol * |partial sum|.
    """

    abs_tol: float = Field(default_factory=lambda: settings.SERIES_ABS_TOL, gt=0)
    rel_tol: float = Field(default_factory=lambda: settings.SERIES_REL_TOL, gt=0)
    max_terms: int = Field(default_factory=lambda: settings.SERIES_MAX_TERMS, ge=1)

    model_config = ConfigDict(frozen=True)


class QuadratureConfig(BaseModel):
    """Tolerances for adaptive quadrature."""

    abs_tol: float = Field(default_factory=lambda: settings.QUAD_ABS_TOL, gt=0)
    rel_tol: float = Field(default_factory=lambda: settings.QUAD_REL_TOL, gt=0)
    max_subdivisions: int = Field(
        default_factory=lambda: settings.QUAD_MAX_SUBDIVISIONS, ge=1
    )

    model_config = ConfigDict(frozen=True)


class SeriesSum(BaseModel):
    """Result of a truncated series: value and number of terms used."""

    value: float
    terms: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True)


# --------------------------------------------------------
# Distribution values
# --------------------------------------------------------
class SmptwParams(BaseModel):
    """
    Parameters of the two-parameter SMPtW law.

    lambda_ (alias "lambda") is the SMP shape, phi the Weibull shape.
    lambda = 1 is the plain standard Weibull member.
    """

    lambda_: float = Field(
        ..., alias="lambda", gt=0, allow_inf_nan=False, description="SMP shape"
    )
    phi: float = Field(..., gt=0, allow_inf_nan=False, description="Weibull shape")

    model_config = ConfigDict(
        frozen=True,
        validate_by_name=True,
        validate_by_alias=True,
        serialize_by_alias=True,
        json_schema_extra={"example": {"lambda": 3.0, "phi": 7.0}},
    )

    @property
    def is_weibull(self) -> bool:
        """True when lambda is close enough to 1 to use the Weibull branch."""
        return abs(self.lambda_ - 1.0) < settings.LAMBDA_ONE_TOL

    @property
    def log_lambda(self) -> float:
        return math.log(self.lambda_)


class EvalPoint(BaseModel):
    """A support point of the SMPtW law."""

    y: float = Field(..., ge=0, allow_inf_nan=False)

    model_config = ConfigDict(frozen=True)


class StressStrengthPair(BaseModel):
    """Strength Y1 ~ SMPtW(lambda1, phi1) against stress Y2 ~ SMPtW(lambda2, phi2)."""

    strength: SmptwParams
    stress: SmptwParams

    model_config = ConfigDict(frozen=True)


class OrderStatSpec(BaseModel):
    """j-th smallest of n."""

    j: int = Field(..., ge=1)
    n: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_rank(self) -> "OrderStatSpec":
        if self.j > self.n:
            raise ValueError(f"rank j={self.j} exceeds sample size n={self.n}")
        return self


# --------------------------------------------------------
# Sampling / inference
# --------------------------------------------------------
class SeededStream(BaseModel):
    """Reproducible uniform source: one independent substream per stream_id."""

    seed: int = Field(..., ge=0, lt=_U64)
    stream_id: int = Field(0, ge=0, lt=_U64)

    model_config = ConfigDict(frozen=True)


class FitResult(BaseModel):
    """
    Maximum-likelihood fit: point estimates, observed-information covariance
    and optimizer diagnostics.
    """

    model_id: str = Field("smptw", description="Fitted model identifier")
    param_names: List[str]
    estimates: List[float]
    std_errors: Optional[List[float]] = Field(
        None, description="sqrt(diag(covariance)); null when unavailable"
    )
    covariance: Optional[List[List[float]]] = None
    log_likelihood: float
    converged: bool
    iterations: int = Field(..., ge=0)
    gradient_norm: float = Field(..., ge=0)
    n_obs: int = Field(..., ge=0)
    message: str = ""

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_shapes(self) -> "FitResult":
        k = len(self.param_names)
        if len(self.estimates) != k:
            raise ValueError("estimates length does not match param_names")
        if self.std_errors is not None and len(self.std_errors) != k:
            raise ValueError("std_errors length does not match param_names")
        if self.covariance is not None:
            if len(self.covariance) != k or any(len(r) != k for r in self.covariance):
                raise ValueError("covariance must be a k x k matrix")
            for i in range(k):
                for j in range(i + 1, k):
                    a, b = self.covariance[i][j], self.covariance[j][i]
                    if not math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12):
                        raise ValueError("covariance must be symmetric")
        return self

    @property
    def std_errors_available(self) -> bool:
        return self.std_errors is not None and all(math.isfinite(s) for s in self.std_errors)

    def estimate(self, name: str) -> float:
        return self.estimates[self.param_names.index(name)]


class ConfidenceInterval(BaseModel):
    lower: float
    upper: float
    level: float = Field(..., gt=0, lt=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_order(self) -> "ConfidenceInterval":
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        return self

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


class InformationCriteria(BaseModel):
    aic: float
    bic: float
    aicc: float
    hqic: float

    model_config = ConfigDict(frozen=True)


# --------------------------------------------------------
# Model zoo
# --------------------------------------------------------
class ModelId(StrEnum):
    STANDARD_WEIBULL = "standard_weibull"
    TWO_PARAM_WEIBULL = "two_param_weibull"
    EXPONENTIATED_WEIBULL = "exponentiated_weibull"
    TRANSMUTED_WEIBULL = "transmuted_weibull"
    SINE_ALPHA_POWER_WEIBULL = "sine_alpha_power_weibull"
    SMP_WEIBULL_3P = "smp_weibull_3p"
    SMPTW = "smptw"


class ModelSpec(BaseModel):
    """
    Static description of a competitor model.

    param_domains are open intervals; names listed in closed_params also
    accept their finite endpoints (transmutation parameter on [-1, 1]).
    """

    model_id: ModelId
    param_count: int = Field(..., ge=1)
    param_names: Tuple[str, ...]
    param_domains: Tuple[Tuple[float, float], ...]
    closed_params: Tuple[str, ...] = ()
    label: str = ""

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_counts(self) -> "ModelSpec":
        if len(self.param_names) != self.param_count:
            raise ValueError("param_names length must equal param_count")
        if len(self.param_domains) != self.param_count:
            raise ValueError("param_domains length must equal param_count")
        for lo, hi in self.param_domains:
            if not lo < hi:
                raise ValueError(f"empty parameter domain ({lo}, {hi})")
        return self

    def contains(self, params) -> bool:
        """True if every parameter lies inside its domain."""
        for name, value, (lo, hi) in zip(self.param_names, params, self.param_domains):
            if not math.isfinite(value):
                return False
            if name in self.closed_params:
                if not lo <= value <= hi:
                    return False
            elif not lo < value < hi:
                return False
        return True


# --------------------------------------------------------
# Harness
# --------------------------------------------------------
class SimulationPlan(BaseModel):
    """Monte Carlo plan: every (param pair, sample size) cell is replicated."""

    param_pairs: List[SmptwParams] = Field(..., min_length=1)
    sample_sizes: List[int] = Field(..., min_length=1)
    replications: int = Field(..., ge=1)
    confidence_level: float = Field(
        default_factory=lambda: settings.CONFIDENCE_LEVEL, gt=0, lt=1
    )
    base_seed: int = Field(default_factory=lambda: settings.SIM_BASE_SEED, ge=0, lt=_U64)

    model_config = ConfigDict(frozen=True)

    @field_validator("sample_sizes")
    @classmethod
    def validate_sample_sizes(cls, v: List[int]) -> List[int]:
        if any(n < 5 for n in v):
            raise ValueError("sample sizes must be at least 5")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("sample sizes must be strictly increasing")
        return v

    @classmethod
    def reference_grid(cls, replications: int = 1000, base_seed: Optional[int] = None):
        """The five parameter pairs and five sample sizes of the reference study."""
        pairs = [(3.0, 7.0), (1.5, 2.0), (2.5, 1.2), (3.5, 1.7), (0.5, 4.5)]
        return cls(
            param_pairs=[SmptwParams(lambda_=lam, phi=phi) for lam, phi in pairs],
            sample_sizes=[50, 100, 250, 500, 1000],
            replications=replications,
            confidence_level=0.95,
            base_seed=settings.SIM_BASE_SEED if base_seed is None else base_seed,
        )


class ParameterStats(BaseModel):
    """Bias / MSE / coverage of one parameter in one simulation cell."""

    name: str
    true_value: float
    mean_estimate: float
    bias: float
    mse: float = Field(..., ge=0)
    coverage: float = Field(..., ge=0, le=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_variance(self) -> "ParameterStats":
        if self.mse < self.bias**2 - 1e-12:
            raise ValueError("mse below squared bias (negative variance)")
        return self


class SimulationCell(BaseModel):
    params: SmptwParams
    n: int
    replications: int = Field(..., description="Replications that entered the statistics")
    retries: int = Field(0, ge=0, description="Fresh substreams drawn after failed fits")
    unreliable: bool = Field(False, description="Retry cap exhausted with failures left")
    stats: List[ParameterStats]

    model_config = ConfigDict(frozen=True)


class SimulationReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    plan: SimulationPlan
    cells: List[SimulationCell]

    model_config = ConfigDict(frozen=True)


class Dataset(BaseModel):
    values: List[float] = Field(..., min_length=1)
    name: str
    source: str = ""

    model_config = ConfigDict(frozen=True)

    @field_validator("values")
    @classmethod
    def validate_values(cls, v: List[float]) -> List[float]:
        for i, value in enumerate(v, start=1):
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"value #{i} must be positive and finite, got {value}")
        return v


class ModelComparisonRow(BaseModel):
    model_id: ModelId
    param_names: List[str]
    estimates: List[float]
    std_errors: Optional[List[float]] = None
    log_likelihood: float
    aic: Optional[float] = None
    bic: Optional[float] = None
    aicc: Optional[float] = None
    hqic: Optional[float] = None
    rank: Optional[int] = Field(None, description="1 = best by AIC, ties by BIC; null if unranked")
    converged: bool
    message: str = ""

    model_config = ConfigDict(frozen=True)


class ModelComparisonReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    dataset: str
    n_obs: int
    rows: List[ModelComparisonRow]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_ranks(self) -> "ModelComparisonReport":
        ranks = sorted(r.rank for r in self.rows if r.rank is not None)
        if ranks != list(range(1, len(ranks) + 1)):
            raise ValueError("ranks must be a permutation of 1..number of ranked models")
        return self

    def best(self) -> Optional[ModelComparisonRow]:
        return next((r for r in self.rows if r.rank == 1), None)

    def row(self, model_id: ModelId) -> ModelComparisonRow:
        return next(r for r in self.rows if r.model_id == model_id)


class CurveRow(EvalPoint):
    """One row of emitted curve data; hazard is null where survival < 1e-12."""

    pdf: float
    cdf: float
    survival: float
    hazard: Optional[float] = None
