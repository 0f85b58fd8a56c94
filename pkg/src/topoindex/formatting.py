"""Serialisation of exact and floating-point values."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union


def format_exact(x: Fraction) -> str:
    """``"p/q"`` in lowest terms, or ``"k"`` when integral."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_float(x: Union[Fraction, float]) -> float:
    """Round to 12 significant digits."""
    return float(f"{float(x):.12g}")


def exact_or_none(x: Union[Fraction, float, None]) -> Optional[str]:
    return format_exact(x) if isinstance(x, (Fraction, int)) else None
