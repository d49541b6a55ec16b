# smptw/parsers/base_parser.py
# Abstract base class for dataset parsers
# - Defines the interface for all dataset parsers
# - Prevents direct instantiation
# - Shared path validation and row-numbered value conversion

import math
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List

from smptw.core.errors import DatasetError


class BaseParser(ABC):
    """
    Abstract base class for dataset parsers.

    All dataset parsers must inherit from this class and implement
    the parse_values method.
    """

    def __init__(self):
        """
        Prevent direct instantiation of abstract base class.
        """
        if self.__class__ == BaseParser:
            raise NotImplementedError(
                "BaseParser is abstract. Use parsers.get_parser() to get parser instance."
            )

    @abstractmethod
    def parse_values(self, path: Path) -> List[float]:
        """
        Read observations from a dataset file, order preserved.

        Args:
            path: Path to the dataset file

        Returns:
            List[float]: Parsed observations

        Raises:
            FileNotFoundError: If the file doesn't exist
            DatasetError: If a row cannot be parsed or the file holds no values
        """
        pass

    def validate_path(self, path: Path) -> None:
        """
        Common validation for dataset file path.

        Raises:
            FileNotFoundError: If file doesn't exist
            DatasetError: If path is not a regular file
        """
        if not path.exists():
            raise FileNotFoundError(f"Dataset file not found: {path}")

        if not path.is_file():
            raise DatasetError("path is not a file", path=path)

    @staticmethod
    def is_number(token: str) -> bool:
        try:
            float(token)
            return True
        except ValueError:
            return False

    @staticmethod
    def to_value(token: str, path: Path, row: int) -> float:
        """
        Convert one field to a positive finite observation.

        Raises:
            DatasetError: not a number, not finite, or not positive
        """
        try:
            value = float(token)
        except ValueError:
            raise DatasetError(f"not a number: {token!r}", path=path, row=row) from None
        if not math.isfinite(value):
            raise DatasetError(f"value is not finite: {token!r}", path=path, row=row)
        if value <= 0:
            raise DatasetError(f"value must be positive, got {value}", path=path, row=row)
        return value
