"""Exact rational wire format: "p/q" strings, lowest terms, q > 0."""

from __future__ import annotations

from fractions import Fraction


def format_rational(value: Fraction | int) -> str:
    """Render a rational as "p" (integers) or "p/q" (lowest terms, q > 0)."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q". Rejects anything else with a diagnostic."""
    token = text.strip()
    try:
        if "/" in token:
            num, _, den = token.partition("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational 'p/q' token: {token!r}") from exc
    return value
