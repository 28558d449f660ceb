"""Utility functions for formatting numbers in console output."""

import math
from typing import Optional


def format_quantity(value: Optional[float], unit: str = "", digits: int = 4) -> str:
    """Format a quantity for console tables.

    Args:
        value: Number to format; None and NaN render as '-'
        unit: Optional unit appended after a space
        digits: Significant digits

    Returns:
        str: Formatted quantity (e.g., '11.71' or '0.2 gamma_h')
    """
    if value is None or math.isnan(value):
        return "-"
    return f"{value:.{digits}g} {unit}".strip()
