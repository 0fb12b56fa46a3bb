"""Parsing and formatting of exact rationals as "num/den" strings."""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "3/4", "-1/2", "2" or a plain decimal like "0.25" exactly."""
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Canonical "num/den" form; integers print without a denominator."""
    return str(Fraction(value))


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list; the empty string is the empty list."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(piece) for piece in text.split(","))
