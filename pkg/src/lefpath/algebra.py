"""Weighted bivariate polynomials, the differentiation pairing, and Hessians.

Two sides share one sparse representation keyed by exponent pairs (a, b)
with weighted degree a + 2b:

* operator side, variables ``e1`` (weight 1) and ``e2`` (weight 2) -- these
  act on the dual side by partial differentiation;
* dual side, variables ``E1``/``E2`` -- carriers of the dual socle
  polynomial whose annihilator presents the algebra A(m, 2).

The degree-i pairing matrices (higher Hessians) of the dual polynomial are
what the Lefschetz verdicts are read from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .exact import ExactMatrix, as_exact, binomial
from .hilbert import flo, flo_star

OPERATOR_SIDE = "op"
DUAL_SIDE = "dual"
_VAR_NAMES = {OPERATOR_SIDE: ("e1", "e2"), DUAL_SIDE: ("E1", "E2")}


class GradedPoly:
    """Sparse polynomial in two variables of weights 1 and 2.

    ``terms`` maps exponent pairs (a, b) to nonzero rational coefficients;
    the weighted degree of a term is a + 2b.
    """

    __slots__ = ("side", "terms")

    def __init__(self, side: str, terms: Mapping[tuple[int, int], object]):
        if side not in _VAR_NAMES:
            raise ValueError(f"unknown side {side!r}")
        cleaned: dict[tuple[int, int], Fraction] = {}
        for (a, b), coeff in terms.items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term ({a}, {b})")
            c = as_exact(coeff)
            if c != 0:
                cleaned[(a, b)] = c
        self.side = side
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, side: str) -> "GradedPoly":
        return cls(side, {})

    @classmethod
    def monomial(cls, side: str, a: int, b: int, coeff=1) -> "GradedPoly":
        return cls(side, {(a, b): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self) -> int:
        """Largest weighted degree among the terms (-1 for the zero poly)."""
        if not self.terms:
            return -1
        return max(a + 2 * b for a, b in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {a + 2 * b for a, b in self.terms}
        return len(degrees) <= 1

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPoly)
            and self.side == other.side
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.side, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _require_same_side(self, other: "GradedPoly") -> None:
        if self.side != other.side:
            raise ValueError("cannot mix operator-side and dual-side polynomials")

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._require_same_side(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return GradedPoly(self.side, terms)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "GradedPoly":
        c = as_exact(factor)
        return GradedPoly(self.side, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        self._require_same_side(other)
        terms: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return GradedPoly(self.side, terms)

    def evaluate(self, c1, c2) -> Fraction:
        x, y = as_exact(c1), as_exact(c2)
        return sum(
            (c * x**a * y**b for (a, b), c in self.terms.items()), Fraction(0)
        )

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms ordered by decreasing first exponent, then increasing second."""
        return iter(sorted(self.terms.items(), key=lambda kv: (-kv[0][0], kv[0][1])))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        v1, v2 = _VAR_NAMES[self.side]
        pieces = []
        for (a, b), coeff in self.sorted_terms():
            factors = []
            if a == 1:
                factors.append(v1)
            elif a > 1:
                factors.append(f"{v1}^{a}")
            if b == 1:
                factors.append(v2)
            elif b > 1:
                factors.append(f"{v2}^{b}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def to_json_terms(self) -> list[dict]:
        return [
            {"a": a, "b": b, "coeff": format_rational(c)}
            for (a, b), c in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        return f"GradedPoly({self.side!r}, {self.to_text()})"


def format_rational(value: Fraction) -> str:
    """Render exactly: "p/q", or just "p" for integers.  Never decimal."""
    value = as_exact(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _exact_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} was expected to be an integer, got {value}")
    return value.numerator


def c_coeff(m: int, k: int) -> int:
    """Presentation coefficient (m/(m-k)) * C(m-k, k); 0 outside 0 <= k <= flo(m)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if k < 0 or k > flo(m):
        return 0
    value = Fraction(m, m - k) * binomial(m - k, k)
    return _exact_integer(value, f"c_coeff({m}, {k})")


def f_m(m: int) -> GradedPoly:
    """Degree-m relation sum_k (-1)^k c_coeff(m, k) e1^(m-2k) e2^k."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    terms = {
        (m - 2 * k, k): (-1) ** k * c_coeff(m, k) for k in range(flo(m) + 1)
    }
    return GradedPoly(OPERATOR_SIDE, terms)


def dual_numerator(m: int, n: int) -> int:
    """(m/(m+2n)) * C(m+2n, n), the integer numerator of a dual-generator term."""
    value = Fraction(m, m + 2 * n) * binomial(m + 2 * n, n)
    return _exact_integer(value, f"dual_numerator({m}, {n})")


def dual_generator(m: int) -> GradedPoly:
    """Dual socle polynomial of A(m, 2), homogeneous of weighted degree 3(m-1).

    Term n (0 <= n <= m-1) is
    dual_numerator(m, n) * E1^(m+2n-1) E2^(m-n-1) / ((m+2n-1)! (m-n-1)!).
    """
    if m < 2:
        raise ValueError(f"dual generator needs m >= 2, got {m}")
    terms = {}
    for n in range(m):
        a = m + 2 * n - 1
        b = m - n - 1
        terms[(a, b)] = Fraction(
            dual_numerator(m, n), math.factorial(a) * math.factorial(b)
        )
    return GradedPoly(DUAL_SIDE, terms)


def contract(op: GradedPoly, dual: GradedPoly) -> GradedPoly:
    """Apply an operator polynomial to a dual polynomial by differentiation.

    Monomial action: e1^a e2^b sends E1^A E2^B to
    (A!/(A-a)!) (B!/(B-b)!) E1^(A-a) E2^(B-b), zero if a > A or b > B.
    """
    if op.side != OPERATOR_SIDE or dual.side != DUAL_SIDE:
        raise ValueError("contract expects (operator side, dual side)")
    terms: dict[tuple[int, int], Fraction] = {}
    for (a, b), c_op in op.terms.items():
        for (A, B), c_dual in dual.terms.items():
            if a > A or b > B:
                continue
            key = (A - a, B - b)
            factor = (
                math.factorial(A)
                // math.factorial(A - a)
                * (math.factorial(B) // math.factorial(B - b))
            )
            terms[key] = terms.get(key, Fraction(0)) + c_op * c_dual * factor
    return GradedPoly(DUAL_SIDE, terms)


def annihilator_check(m: int) -> bool:
    """True iff both defining relations kill the dual generator.

    Checks f_m(e1, e2) o F = 0 and e2^m o F = 0 as full symbolic
    contractions, not just point evaluations.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    F = dual_generator(m)
    e2_power = GradedPoly.monomial(OPERATOR_SIDE, 0, m)
    return contract(f_m(m), F).is_zero() and contract(e2_power, F).is_zero()


def verify_f_recursion(m: int) -> bool:
    """Check f_{m+2} = (e1^2 - 2 e2) f_m - e2^2 f_{m-2}, plus the equivalent
    coefficient recursion c_{m+2,k} = c_{m,k} + 2 c_{m,k-1} - c_{m-2,k-2}."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    lhs = f_m(m + 2)
    multiplier = GradedPoly(OPERATOR_SIDE, {(2, 0): 1, (0, 1): -2})
    e2_sq = GradedPoly.monomial(OPERATOR_SIDE, 0, 2)
    rhs = multiplier * f_m(m) - e2_sq * f_m(m - 2)
    if lhs != rhs:
        return False
    return all(
        c_coeff(m + 2, k) == c_coeff(m, k) + 2 * c_coeff(m, k - 1) - c_coeff(m - 2, k - 2)
        for k in range(flo(m + 2) + 1)
    )


def _roots_substitution(f: GradedPoly) -> dict[tuple[int, int], Fraction]:
    """Expand f(e1, e2) at e1 = x + y, e2 = x y as a dict {(i, j): coeff}."""
    result: dict[tuple[int, int], Fraction] = {}
    for (a, b), c in f.terms.items():
        # (x + y)^a * (xy)^b
        for t in range(a + 1):
            key = (t + b, a - t + b)
            result[key] = result.get(key, Fraction(0)) + c * binomial(a, t)
    return {key: v for key, v in result.items() if v != 0}


def verify_power_sum(m: int) -> bool:
    """True iff f_m(x + y, x y) = x^m + y^m as an exact bivariate identity."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    expanded = _roots_substitution(f_m(m))
    return expanded == {(m, 0): Fraction(1), (0, m): Fraction(1)}


@dataclass(frozen=True)
class MonomialBasis:
    """Ordered degree-i monomial basis e1^(i-2p) e2^p of A(m, 2)."""

    m: int
    i: int
    elements: tuple[tuple[int, int], ...]

    @property
    def p_range(self) -> range:
        return range(flo_star(self.i + 2 - self.m), flo(self.i) + 1)

    def __len__(self) -> int:
        return len(self.elements)


def monomial_basis(m: int, i: int) -> MonomialBasis:
    """Basis exponents (i - 2p, p) for p from flo*(i + 2 - m) to flo(i)."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if not 0 <= i <= 2 * m - 1:
        raise ValueError(f"degree {i} outside [0, {2 * m - 1}] for m={m}")
    elements = tuple(
        (i - 2 * p, p) for p in range(flo_star(i + 2 - m), flo(i) + 1)
    )
    return MonomialBasis(m, i, elements)


def _check_hessian_degree(m: int, i: int) -> None:
    top = flo(3 * (m - 1))
    if not 0 <= i <= top:
        raise ValueError(f"degree {i} outside [0, {top}] for m={m}")


def hessian(m: int, i: int, eval_point: tuple = (1, 0)) -> ExactMatrix:
    """Degree-i pairing matrix of the dual generator, entries evaluated at a point.

    Entry (p, q) is (e1^(2i-2p-2q) e2^(p+q) o F_m) evaluated at
    (E1, E2) = eval_point, over the degree-i monomial basis.  The Lefschetz
    evaluation point is (c1, 0): the degree-1 component is spanned by e1
    alone, so linear forms are c1*e1.  A nonzero second coordinate is
    allowed for experimentation but is not a Lefschetz evaluation.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    _check_hessian_degree(m, i)
    c1, c2 = eval_point
    F = dual_generator(m)
    ps = list(monomial_basis(m, i).p_range)
    rows = []
    for p in ps:
        row = []
        for q in ps:
            op = GradedPoly.monomial(OPERATOR_SIDE, 2 * i - 2 * p - 2 * q, p + q)
            row.append(contract(op, F).evaluate(c1, c2))
        rows.append(row)
    return ExactMatrix(rows)


def hessian_closed_form(m: int, i: int) -> ExactMatrix:
    """Closed form of hessian(m, i, (1, 0)):

    entry (p, q) = (1/(3m-3-2i)!) * (m/(3m-2-2p-2q)) * C(3m-2-2p-2q, m-1-p-q),
    with the binomial vanishing whenever m-1-p-q < 0.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    _check_hessian_degree(m, i)
    scale = Fraction(1, math.factorial(3 * m - 3 - 2 * i))
    ps = list(monomial_basis(m, i).p_range)
    rows = []
    for p in ps:
        row = []
        for q in ps:
            top = 3 * m - 2 - 2 * p - 2 * q
            row.append(scale * Fraction(m, top) * binomial(top, m - 1 - p - q))
        rows.append(row)
    return ExactMatrix(rows)
