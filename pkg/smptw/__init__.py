# smptw package
# SMP-transformed standard Weibull distribution: properties, estimation,
# sampling, simulation study and model comparison.
# Library log records stay silent until smptw.core.logger.setup_logger() is called.

from loguru import logger

from smptw.core.version import VERSION

__version__ = VERSION

logger.disable("smptw")
