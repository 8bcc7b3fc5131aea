"""Small parsing and formatting helpers used by the CLI and the exporters"""
from __future__ import annotations

import math
import re

from .errors import FormatError

_PARAM_PATTERN = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.+?)\s*$")


def parse_param_pairs(pairs: list[str] | None) -> dict[str, str]:
    """Parse repeated ``key=value`` command-line parameters

    Args:
        pairs: Raw strings such as ``["mu=2", "matrix=0,1,1,1"]``

    Returns:
        Mapping of keys to raw (unparsed) values, later keys win

    Raises:
        FormatError: If an entry is not of the form ``key=value``
    """
    params: dict[str, str] = {}
    for raw in pairs or []:
        match = _PARAM_PATTERN.match(raw)
        if not match:
            raise FormatError(f"expected key=value, got {raw!r}")
        params[match.group(1)] = match.group(2)
    return params


def parse_csv(text: str) -> list[str]:
    """Split a comma separated list, dropping blanks and duplicates (order kept)"""
    items = [item.strip() for item in text.split(",")]
    return list(dict.fromkeys(item for item in items if item))


def json_number(value: float | int | None) -> int | str | None:
    """Map graph quantities to JSON-safe values (infinity becomes ``"inf"``)"""
    if value is None:
        return None
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return int(value)
