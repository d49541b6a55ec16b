# smptw/services/dataset_service.py
# Dataset loading service
# - Picks a parser by file suffix / content (csv or whitespace text)
# - Validates through the Dataset schema (positive, finite, nonempty)
# - Locates bundled datasets under DATA_DIR

from pathlib import Path
from typing import Union

from loguru import logger
from pydantic import ValidationError

from smptw import parsers
from smptw.config import settings
from smptw.core.errors import DatasetError
from smptw.schema import Dataset

KEVLAR_FILE = "kevlar373.csv"


def detect_format(path: Path) -> str:
    """csv for .csv files or any file containing a comma, text otherwise."""
    if path.suffix.lower() == ".csv":
        return "csv"
    try:
        head = path.read_text(encoding="utf-8-sig")[:4096]
    except UnicodeDecodeError as e:
        raise DatasetError(f"not a text file: {e}", path=path) from e
    return "csv" if "," in head else "text"


def load_dataset(path: Union[str, Path], name: str = "") -> Dataset:
    """
    Load a numeric dataset.

    Args:
        path: CSV with one numeric column (optional header) or
            whitespace-separated values
        name: Dataset name (default: file stem)

    Returns:
        Dataset: values in file order

    Raises:
        FileNotFoundError: If the file doesn't exist
        DatasetError: parse failure, empty file, nonpositive or non-finite value
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Dataset file not found: {path}")

    fmt = detect_format(path) if path.is_file() else "csv"
    values = parsers.get_parser(fmt).parse_values(path)
    if not values:
        raise DatasetError("dataset is empty", path=path)

    try:
        dataset = Dataset(values=values, name=name or path.stem, source=str(path))
    except ValidationError as e:
        raise DatasetError(str(e), path=path) from e

    logger.info(f"[Dataset] loaded {len(dataset.values)} values from {path} ({fmt})")
    return dataset


def bundled_dataset_path(filename: str = KEVLAR_FILE) -> Path:
    """Path of a dataset shipped under DATA_DIR (relative paths resolve from the repo root)."""
    data_dir = Path(settings.DATA_DIR)
    if not data_dir.is_absolute():
        repo_root = Path(__file__).resolve().parents[2]
        candidate = repo_root / data_dir / filename
        if candidate.exists() or not (data_dir / filename).exists():
            return candidate
    return data_dir / filename


def load_kevlar() -> Dataset:
    """The 76 Kevlar 373/epoxy fatigue-fracture observations."""
    return load_dataset(bundled_dataset_path(), name="kevlar373")
