# smptw/parsers/text_parser.py
# Whitespace-separated dataset parser
# - Any number of values per line; optional one-token header line
# - Lines starting with "#" are comments

from pathlib import Path
from typing import List

from loguru import logger

from .base_parser import BaseParser


class TextParser(BaseParser):
    """Parser for whitespace-separated numeric datasets."""

    def parse_values(self, path: Path) -> List[float]:
        self.validate_path(path)
        logger.debug(f"[TextParser] Parsing dataset: {path}")

        values: List[float] = []
        first = True
        with path.open(encoding="utf-8-sig") as f:
            for line_no, line in enumerate(f, start=1):
                tokens = line.split("#", 1)[0].split()
                if not tokens:
                    continue
                if first:
                    first = False
                    if len(tokens) == 1 and not self.is_number(tokens[0]):
                        continue
                values.extend(self.to_value(t, path, line_no) for t in tokens)

        return values
