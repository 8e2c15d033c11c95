"""Exact rational arithmetic backend.

All weights, LP coefficients and bound values in this package are exact
rationals.  gmpy2.mpq is used when available (it is considerably faster
once numerators grow); fractions.Fraction is a drop-in fallback.  Both
keep values normalized to lowest terms with a positive denominator, so
every result is identical across backends.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

    BACKEND = "fractions"

RZERO = Rat(0)
RONE = Rat(1)
RTWO = Rat(2)


def rat(numerator, denominator=1):
    """Build an exact rational; denominator must be nonzero."""
    return Rat(numerator, denominator)


def parse_rat(text):
    """Parse 'num/den' or a bare integer string into a rational.

    Raises ValueError on malformed input or a zero denominator.
    """
    s = text.strip()
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num, den = int(num_s), int(den_s)
        if den == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return Rat(num, den)
    return Rat(int(s))


def format_rat(q) -> str:
    """Canonical 'num/den' form (lowest terms, explicit denominator)."""
    return f"{q.numerator}/{q.denominator}"


def rat_ceil(q) -> int:
    """Exact ceiling of a rational, as a Python int."""
    num, den = int(q.numerator), int(q.denominator)
    return -((-num) // den)
