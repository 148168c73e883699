"""Exact rational scalars: parsing from decimal text and half-even formatting.

All arithmetic in the package runs on `fractions.Fraction`; rounding happens
only here, at the presentation boundary.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

Rational = Fraction


def as_rational(value: object) -> Fraction:
    """Convert decimal text, an int, a Decimal or a Fraction to an exact Fraction.

    Floats are rejected: binary floats do not round-trip decimal data exactly,
    and every comparison in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass a decimal string for exactness"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(x: Fraction, places: int = 6) -> str:
    """Render x as a fixed-point decimal with `places` digits, rounding half to even."""
    if places < 0:
        raise ValueError("places must be nonnegative")
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**places
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r > scaled.denominator or (2 * r == scaled.denominator and q % 2 == 1):
        q += 1
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def is_terminating(x: Fraction) -> bool:
    """True when x has a finite decimal expansion."""
    d = x.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def exact_str(x: Fraction, fallback_places: int = 6) -> str:
    """Exact decimal text when one exists, else a rounded decimal."""
    if x.denominator == 1:
        return str(x.numerator)
    if not is_terminating(x):
        return format_rational(x, fallback_places)
    places = 0
    d = x.denominator
    while d % 2 == 0:
        d //= 2
        places += 1
    fives = 0
    while d % 5 == 0:
        d //= 5
        fives += 1
    places = max(places, fives)
    return format_rational(x, places)
