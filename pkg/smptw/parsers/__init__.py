# smptw/parsers/__init__.py
# Dataset parser factory
# - Provides unified interface for all dataset parsers
# - Uses Python 3.12 match-case syntax
# - Exposes only factory function, hides implementation details

from smptw.core.errors import DomainError

from .base_parser import BaseParser
from .csv_parser import CSVParser
from .text_parser import TextParser


def get_parser(format_type: str = "csv") -> BaseParser:
    """
    Get dataset parser instance based on format type.

    Args:
        format_type: Parser type to create
                    - "csv": single-column CSV (with or without header)
                    - "text": whitespace-separated values

    Returns:
        BaseParser: Parser instance

    Raises:
        DomainError: If format_type is not supported

    Examples:
        >>> parser = get_parser("csv")
        >>> values = parser.parse_values(Path("data/kevlar373.csv"))
    """
    match format_type.lower():
        case "csv":
            return CSVParser()
        case "text" | "txt":
            return TextParser()
        case _:
            raise DomainError(
                f"Unsupported dataset format: {format_type}. " f"Supported formats: csv, text"
            )


# Public interface: only expose factory function
__all__ = ["get_parser"]
