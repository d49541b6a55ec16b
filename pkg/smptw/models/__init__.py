# smptw/models/__init__.py
# Lifetime model factory
# - Provides a unified interface for every fitted model
# - Uses Python 3.12 match-case syntax
# - Exposes the factory plus the base class and data validator

from smptw.core.errors import DomainError
from smptw.schema import ModelId

from .base_model import BaseLifetimeModel, as_lifetime_data
from .sine_alpha_power import SineAlphaPowerWeibullModel
from .smp_weibull import SmptwModel, SmpWeibull3pModel
from .weibull import (ExponentiatedWeibullModel, StandardWeibullModel,
                      TransmutedWeibullModel, TwoParamWeibullModel)


def get_model(model_id: str | ModelId) -> BaseLifetimeModel:
    """
    Get a model instance by identifier.

    Args:
        model_id: One of the ModelId values
                    - "standard_weibull", "two_param_weibull",
                      "exponentiated_weibull", "transmuted_weibull",
                      "sine_alpha_power_weibull", "smp_weibull_3p", "smptw"

    Returns:
        BaseLifetimeModel: Model instance

    Raises:
        DomainError: If model_id is not supported

    Examples:
        >>> model = get_model("two_param_weibull")
        >>> model.param_names
        ['beta', 'phi']
    """
    match str(model_id).lower():
        case ModelId.STANDARD_WEIBULL:
            return StandardWeibullModel()
        case ModelId.TWO_PARAM_WEIBULL:
            return TwoParamWeibullModel()
        case ModelId.EXPONENTIATED_WEIBULL:
            return ExponentiatedWeibullModel()
        case ModelId.TRANSMUTED_WEIBULL:
            return TransmutedWeibullModel()
        case ModelId.SINE_ALPHA_POWER_WEIBULL:
            return SineAlphaPowerWeibullModel()
        case ModelId.SMP_WEIBULL_3P:
            return SmpWeibull3pModel()
        case ModelId.SMPTW:
            return SmptwModel()
        case _:
            raise DomainError(
                f"Unsupported model: {model_id}. "
                f"Supported models: {', '.join(m.value for m in ModelId)}"
            )


__all__ = ["get_model", "BaseLifetimeModel", "as_lifetime_data"]
