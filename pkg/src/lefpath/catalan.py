"""Catalan generating-function machinery.

Powers of the Catalan series C(x) carry the dual-generator numerators;
reciprocal powers carry the presentation coefficients with alternating
signs.  The coefficient identity [x^i](C^m * C^-m) = 0 is exactly the
statement that the degree-m relation annihilates the dual generator, so it
is exposed as a direct finite sum.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import as_exact, binomial
from .hilbert import flo
from .algebra import c_coeff, dual_numerator


class TruncatedSeries:
    """Power series truncated at a fixed order, exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")
        self.coeffs = tuple(as_exact(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Product truncated to the smaller order."""
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out)

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the same order (constant term != 0)."""
        if self.coeffs[0] == 0:
            raise ValueError("series with zero constant term has no reciprocal")
        inv0 = 1 / self.coeffs[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = sum(
                (self.coeffs[k] * out[n - k] for k in range(1, n + 1)),
                Fraction(0),
            )
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def pow(self, exponent: int) -> "TruncatedSeries":
        result = TruncatedSeries([1] + [0] * self.order)
        for _ in range(exponent):
            result = result.mul(self)
        return result


def catalan_number(n: int) -> int:
    """n-th Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return binomial(2 * n, n) // (n + 1)


def catalan_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([catalan_number(n) for n in range(order + 1)])


def catalan_power(m: int, order: int) -> TruncatedSeries:
    """C(x)^m by the closed form [x^n] = (m/(m+2n)) * C(m+2n, n)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if order < 0:
        raise ValueError(f"need order >= 0, got {order}")
    return TruncatedSeries([dual_numerator(m, n) for n in range(order + 1)])


def catalan_power_reciprocal(m: int, order: int) -> TruncatedSeries:
    """1 / C(x)^m by series inversion.

    Coefficients 0..flo(m) equal (-1)^n c_coeff(m, n); the tail beyond
    flo(m) is exposed as computed, with no closed form attached.
    """
    return catalan_power(m, order).reciprocal()


def check_identity_zero(m: int, i: int) -> bool:
    """True iff sum_{k=0}^{i} (-1)^k c_coeff(m, k) * dual_numerator(m, i-k) == 0.

    Valid for 1 <= i <= flo(m); this is the coefficient of x^i in
    C(x)^m * C(x)^-m, computed directly from both closed forms.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if not 1 <= i <= flo(m):
        raise ValueError(f"need 1 <= i <= {flo(m)}, got {i}")
    total = sum(
        (-1) ** k * c_coeff(m, k) * dual_numerator(m, i - k) for k in range(i + 1)
    )
    return total == 0
