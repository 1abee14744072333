import math

import sympy

from pyrandgroups.errors import PrecisionError, SizeLimitError

DEFAULT_RELATOR_CAP = 2**32
# Digits used when (2n-1)^(dL) is irrational; about 166 bits.
EVALUATION_DIGITS = 50
BOUNDARY_GUARD = sympy.Rational(1, 2**30)


def density_as_rational(d: float | str | sympy.Rational) -> sympy.Rational:
    """Read a density the way it is written: ``0.3`` means 3/10, not the nearest double."""
    if isinstance(d, sympy.Rational):
        return d
    return sympy.Rational(str(d))


def compute_relator_count(
    n: int, d: float | str, L: int, cap: int = DEFAULT_RELATOR_CAP
) -> int:
    """b_L = floor((2n-1)^(dL)), exact when the power is an integer.

    Irrational powers are evaluated to ``EVALUATION_DIGITS`` digits and rejected
    with :class:`PrecisionError` if they fall within 2^-30 of an integer.
    """
    if n < 1:
        raise ValueError(f"Generator count must be at least 1, got {n}.")
    if L < 1:
        raise ValueError(f"Relator length must be at least 1, got {L}.")
    density = density_as_rational(d)
    if not 0 < density < 1:
        raise ValueError(f"Density must lie strictly between 0 and 1, got {d}.")

    base = 2 * n - 1
    if base == 1:
        return 1

    exponent = density * L
    if float(exponent) * math.log2(base) > math.log2(cap) + 1:
        raise SizeLimitError(
            f"(2n-1)^(dL) = {base}^{exponent} exceeds the relator cap {cap}."
        )

    power = sympy.Integer(base) ** exponent
    if power.is_Integer:
        count = int(power)
    else:
        approximation = power.evalf(EVALUATION_DIGITS)
        nearest = sympy.floor(approximation + sympy.Rational(1, 2))
        if abs(approximation - nearest) < BOUNDARY_GUARD:
            raise PrecisionError(
                f"{base}^{exponent} is within 2^-30 of the integer {nearest}; refusing to floor it."
            )
        count = int(sympy.floor(approximation))

    if count > cap:
        raise SizeLimitError(f"b_L = {count} exceeds the relator cap {cap}.")
    return count
