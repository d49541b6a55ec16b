# smptw/parsers/csv_parser.py
# CSV dataset parser
# - One numeric column, with or without a header row
# - Header is detected when the first non-blank row is not numeric
# - Blank lines are skipped; row numbers in errors are 1-based file lines

import csv
from pathlib import Path
from typing import List

from loguru import logger

from smptw.core.errors import DatasetError

from .base_parser import BaseParser


class CSVParser(BaseParser):
    """
    Parser for single-column CSV datasets.

    Supports both:
    - CSV with a header (e.g. "y") - first row skipped
    - CSV without a header - every row is a value
    """

    def parse_values(self, path: Path) -> List[float]:
        self.validate_path(path)
        logger.debug(f"[CSVParser] Parsing dataset: {path}")

        values: List[float] = []
        header_checked = False
        with path.open(newline="", encoding="utf-8-sig") as f:
            for row_no, row in enumerate(csv.reader(f), start=1):
                fields = [c.strip() for c in row]
                if not any(fields):
                    continue
                # Trailing empty cells ("1.5,") are tolerated
                while fields and not fields[-1]:
                    fields.pop()
                if len(fields) != 1:
                    raise DatasetError(
                        f"expected one column, found {len(fields)}", path=path, row=row_no
                    )
                if not header_checked:
                    header_checked = True
                    if not self.is_number(fields[0]):
                        logger.debug(f"[CSVParser] Header detected: {fields[0]!r}")
                        continue
                values.append(self.to_value(fields[0], path, row_no))

        return values
