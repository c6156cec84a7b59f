"""Coefficient formatting for exact rationals."""

from __future__ import annotations

import re
from fractions import Fraction

_COEFF = re.compile(r"^(?:\((\d+/\d+)\)|(\d+(?:/\d+)?))\s*")


def format_coeff(c: Fraction) -> str:
    """``3`` for integers, ``(p/q)`` otherwise; sign is left to the caller."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def parse_coeff(chunk: str) -> tuple[Fraction, str]:
    """Split an unsigned ``coeff monomial`` chunk; a missing coefficient means 1."""
    m = _COEFF.match(chunk)
    if m is None:
        return Fraction(1), chunk.strip()
    raw = m.group(1) or m.group(2)
    rest = chunk[m.end():].strip()
    if not rest:
        raise ValueError(f"coefficient without monomial: {chunk!r}")
    return Fraction(raw), rest


def to_json(c: Fraction) -> str:
    return str(Fraction(c))


def from_json(s: str | int) -> Fraction:
    return Fraction(s)
