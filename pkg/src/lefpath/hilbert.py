"""Hilbert series of the two-parameter algebras A(m, n) and unimodality scans.

The series is the polynomial product prod_{i=1..n} (1 + t^i + ... + t^{(m-1)i}).
For n = 2 there is also a closed form built from halved floors; both routes
are kept separate so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


def flo(x: int) -> int:
    """floor(x / 2)."""
    return x // 2


def flo_star(x: int) -> int:
    """max(0, floor(x / 2))."""
    return max(0, x // 2)


def socle_degree(m: int, n: int) -> int:
    """Top nonzero degree of A(m, n): n(n+1)(m-1)/2."""
    return n * (n + 1) * (m - 1) // 2


@dataclass(frozen=True)
class HilbertFunction:
    """Coefficient sequence of the Hilbert series of A(m, n)."""

    m: int
    n: int
    coeffs: tuple[int, ...]

    @property
    def socle_degree(self) -> int:
        return len(self.coeffs) - 1


def hilbert_series(m: int, n: int) -> HilbertFunction:
    """Hilbert function of A(m, n) by exact polynomial multiplication."""
    if m < 1 or n < 1:
        raise ValueError(f"hilbert_series needs m, n >= 1, got ({m}, {n})")
    coeffs = [1]
    for i in range(1, n + 1):
        factor_degree = (m - 1) * i
        out = [0] * (len(coeffs) + factor_degree)
        for d, c in enumerate(coeffs):
            for step in range(0, factor_degree + 1, i):
                out[d + step] += c
        coeffs = out
    return HilbertFunction(m, n, tuple(coeffs))


def hilbert_m2_closed(m: int, i: int) -> int:
    """Closed form for dim A(m, 2)_i: flo(i+2) - flo*(i+2-m) - flo*(i+2-2m).

    The third term is subtracted: adding it instead fails against the
    series already at m = 5, i = 10 (6 - 3 + 1 = 4 vs the true
    coefficient 2).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if not 0 <= i <= 3 * (m - 1):
        raise ValueError(f"degree {i} outside [0, {3 * (m - 1)}] for m={m}")
    return flo(i + 2) - flo_star(i + 2 - m) - flo_star(i + 2 - 2 * m)


def is_unimodal(seq: Sequence[int]) -> bool:
    """True iff seq weakly increases to some peak, then weakly decreases."""
    if len(seq) == 0:
        raise ValueError("empty sequence")
    k = 0
    while k + 1 < len(seq) and seq[k + 1] >= seq[k]:
        k += 1
    while k + 1 < len(seq) and seq[k + 1] <= seq[k]:
        k += 1
    return k == len(seq) - 1


def first_violation_index(seq: Sequence[int]) -> Optional[int]:
    """Index of the first dip that rises again later; None if unimodal.

    A "dip" at j means seq[j] < seq[j-1] with some seq[k] > seq[j] for k > j.
    """
    for j in range(1, len(seq)):
        if seq[j] < seq[j - 1] and any(seq[k] > seq[j] for k in range(j + 1, len(seq))):
            return j
    return None


@dataclass(frozen=True)
class UnimodalityRecord:
    m: int
    n: int
    socle_degree: int
    unimodal: bool
    first_violation_index: Optional[int]


def scan_unimodality(
    m_range: Iterable[int], n_range: Iterable[int]
) -> list[UnimodalityRecord]:
    """One record per (m, n), in row-major (m, n) order."""
    records = []
    for m in m_range:
        for n in n_range:
            h = hilbert_series(m, n)
            records.append(
                UnimodalityRecord(
                    m=m,
                    n=n,
                    socle_degree=h.socle_degree,
                    unimodal=is_unimodal(h.coeffs),
                    first_violation_index=first_violation_index(h.coeffs),
                )
            )
    return records
