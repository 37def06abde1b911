"""Exact integer/rational helpers and dense exact linear algebra.

Everything here is pure and allocation-immutable: matrices are tuples of
tuples of ``fractions.Fraction`` and every operation returns a fresh value.
Determinants run fraction-free (Bareiss) on a denominator-cleared integer
copy, so the factorial-scaled matrices produced elsewhere never blow up
into huge intermediate rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0, k > n, or n < 0.

    The out-of-range convention is load-bearing: matrix entries built from
    binomials with a negative lower index must vanish, matching the empty
    path counts they stand for.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_exact(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact arithmetic only: got {type(value).__name__}")


class ExactMatrix:
    """Dense matrix over the rationals with exact det / rank / signature."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        table = tuple(tuple(as_exact(e) for e in row) for row in rows)
        if not table:
            raise ValueError("matrix needs at least one row")
        width = len(table[0])
        if width == 0 or any(len(row) != width for row in table):
            raise ValueError("matrix rows must be nonempty and equal length")
        self.rows = table

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in row) for row in self.rows
        )
        return f"ExactMatrix[{body}]"

    def scaled(self, factor) -> "ExactMatrix":
        c = as_exact(factor)
        return ExactMatrix(tuple(tuple(c * e for e in row) for row in self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def _integer_rows(self) -> tuple[list[list[int]], Fraction]:
        """Clear denominators row by row; return (int rows, det scale).

        det(self) = det(int rows) / scale, where scale is the product of
        the per-row multipliers.
        """
        cleared = []
        scale = Fraction(1)
        for row in self.rows:
            mult = math.lcm(*(e.denominator for e in row))
            scale *= mult
            cleared.append([int(e * mult) for e in row])
        return cleared, scale

    def det(self) -> Fraction:
        """Exact determinant via fraction-free (Bareiss) elimination.

        Pivoting takes the first nonzero entry in each column; magnitude
        heuristics are pointless in exact arithmetic.
        """
        if not self.is_square():
            raise ValueError("determinant requires a square matrix")
        m, scale = self._integer_rows()
        n = self.nrows
        sign = 1
        prev = 1
        for k in range(n - 1):
            pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                    q, r = divmod(num, prev)
                    assert r == 0, "Bareiss exact division failed"
                    m[i][j] = q
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1]) / scale

    def rank(self) -> int:
        """Exact rank over the rationals (plain Gaussian elimination)."""
        m = [list(row) for row in self.rows]
        nr, nc = self.nrows, self.ncols
        rank = 0
        row = 0
        for col in range(nc):
            pivot_row = next((r for r in range(row, nr) if m[r][col] != 0), None)
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            inv = 1 / m[row][col]
            for r in range(row + 1, nr):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[row])]
            rank += 1
            row += 1
            if row == nr:
                break
        return rank

    def signature(self) -> int:
        """(#positive - #negative eigenvalues) of a symmetric matrix.

        Computed by simultaneous row/column (congruence) elimination, which
        preserves the signature; no eigenvalues are ever computed.  A zero
        diagonal pivot with a nonzero off-diagonal partner yields one +1 and
        one -1 pivot (hyperbolic pair) after the congruence
        row_i += row_j / col_i += col_j.
        """
        if not self.is_symmetric():
            raise ValueError("signature requires a symmetric matrix")
        m = [list(row) for row in self.rows]
        n = self.nrows
        sig = 0
        i = 0
        while i < n:
            if m[i][i] == 0:
                swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
                if swap is not None:
                    m[i], m[swap] = m[swap], m[i]
                    for row in m:
                        row[i], row[swap] = row[swap], row[i]
                else:
                    partner = next(
                        (j for j in range(i + 1, n) if m[i][j] != 0), None
                    )
                    if partner is None:
                        i += 1
                        continue
                    for col in range(n):
                        m[i][col] += m[partner][col]
                    for row in m:
                        row[i] += row[partner]
            pivot = m[i][i]
            sig += 1 if pivot > 0 else -1
            for j in range(i + 1, n):
                if m[j][i] != 0:
                    f = m[j][i] / pivot
                    for col in range(n):
                        m[j][col] -= f * m[i][col]
                    for row in m:
                        row[j] -= f * row[i]
            i += 1
        return sig


def identity_matrix(n: int) -> ExactMatrix:
    return ExactMatrix(
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    )


def det_cofactor(rows: Sequence[Sequence]) -> Fraction:
    """Independent determinant oracle: recursive cofactor expansion.

    Exponential; only for cross-checking small matrices in tests.
    """
    table = [[as_exact(e) for e in row] for row in rows]
    n = len(table)
    if any(len(row) != n for row in table):
        raise ValueError("cofactor oracle requires a square matrix")
    if n == 1:
        return table[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in table[1:]]
        term = table[0][j] * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total
