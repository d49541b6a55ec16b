# smptw/config.py
# Global configuration file: loads environment variables and .env
# Using pydantic-settings to automatically map env vars to Python attributes

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # -------------------------
    # Logging
    # -------------------------
    LOG_LEVEL: str = "INFO"
    # Logging level: DEBUG / INFO / WARNING / ERROR

    LOG_DIR: str = "logs"
    # Directory for log files. Can be relative or absolute. Default: logs

    LOG_TO_FILE: bool = False
    # True  = also write system.log / error.log under LOG_DIR
    # False = console (stderr) only

    # -------------------------
    # Parallelism
    # -------------------------
    MAX_PARALLEL: int = 0
    #  >0   = explicit number of simulation worker processes (e.g. 4)
    #  0    = auto (defaults to CPU count - 1)

    # -------------------------
    # Numerical kernel
    # -------------------------
    LAMBDA_ONE_TOL: float = 1e-8
    # |lambda - 1| below this switches to the plain Weibull formulas

    SERIES_ABS_TOL: float = 1e-12
    SERIES_REL_TOL: float = 1e-10
    SERIES_MAX_TERMS: int = 500
    # Truncation of every infinite series (two consecutive small terms)

    QUAD_ABS_TOL: float = 1e-10
    QUAD_REL_TOL: float = 1e-8
    QUAD_MAX_SUBDIVISIONS: int = 200
    # Adaptive quadrature tolerances

    # -------------------------
    # Estimation
    # -------------------------
    FIT_MAX_ITER: int = 500
    # Optimizer iteration cap per start point

    FIT_GRADIENT_TOL: float = 1e-6
    # A fit is converged only if the score norm at the optimum is below this

    CONFIDENCE_LEVEL: float = 0.95
    # Default Wald interval level (coverage study)

    # -------------------------
    # Simulation study
    # -------------------------
    SIM_BASE_SEED: int = 20240601
    # Base seed when a plan or the CLI does not supply one

    SIM_RETRY_FRACTION: float = 0.05
    # Non-converged replications are re-drawn up to this fraction per cell

    # -------------------------
    # Data
    # -------------------------
    DATA_DIR: str = "data"
    # Directory holding bundled datasets (kevlar373.csv)

    # -------------------------
    # Internal settings
    # -------------------------
    # Load .env file from project root
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


# Singleton instance
settings = Settings()
