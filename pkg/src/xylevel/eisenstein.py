"""Divisor-sum Fourier coefficients and exact edge evaluation of the
Eisenstein series of level x, y, and (x, y).

An edge is the matrix (pi^k, u; 0, 1); the value of a series on it is

    nu * q^(1-k) * [ const + sum_{0 != m in F_q[T], deg m <= k-2} w(m) eta(m*u) ]

where w is the appropriate divisor sum of the monic associate of m and eta
is the additive character reading off the pi^1-coefficient.  The character
sum lands in Z[zeta_q] and must collapse to a rational integer; a surviving
zeta-coordinate signals a bug, not a rounding issue, hence the hard error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .ffpoly import (
    DEGREE_CAP,
    CyclotomicInt,
    LaurentSeries,
    MonicPoly,
    PrimeField,
    character,
    cyclotomic_as_integer,
    laurent_from_poly,
    laurent_inverse_of_poly,
    laurent_pi_power,
    laurent_zero,
    monic_associate,
    monic_divisors,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_trim,
)


def sigma(m: MonicPoly) -> int:
    """sum of |m'| over the monic divisors m' of m."""
    if m.degree > DEGREE_CAP:
        raise ValueError(f"degree {m.degree} above cap {DEGREE_CAP}")
    return sum(d.norm() for d in monic_divisors(m))


def sigma_level(m: MonicPoly, n: MonicPoly) -> int:
    """sigma(m) - |n| * sigma(m/n), with sigma(m/n) = 0 when n does not divide m."""
    base = sigma(m)
    quot, rem = poly_divmod(m.field, m.coeffs, n.coeffs)
    if rem:
        return base
    return base - n.norm() * sigma(MonicPoly(m.field, quot))


def sigma_prime(m: MonicPoly, p: MonicPoly, q: MonicPoly) -> int:
    """sum of |m'| over monic divisors of m coprime to p*q."""
    if p.coeffs == q.coeffs:
        raise ValueError("the two primes must be distinct")
    pq = poly_mul(m.field, p.coeffs, q.coeffs)
    total = 0
    for d in monic_divisors(m):
        if poly_gcd(m.field, d.coeffs, pq) == (1,):
            total += d.norm()
    return total


# ---------------------------------------------------------------------------
# Series and edges.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EisensteinSeries:
    """Either the level-n series (pair_q is None) or the (p, q)-pair series."""

    level: MonicPoly
    pair_q: MonicPoly | None = None

    @property
    def field(self) -> PrimeField:
        return self.level.field

    def normalization(self) -> int:
        """nu: q+1 exactly when every degree in sight is odd, else 1."""
        q = self.field.q
        if self.pair_q is None:
            return q + 1 if self.level.degree % 2 == 1 else 1
        if self.level.degree % 2 == 0 or self.pair_q.degree % 2 == 0:
            return 1
        return q + 1

    def constant_term(self) -> Fraction:
        q = self.field.q
        if self.pair_q is None:
            return Fraction(1 - self.level.norm(), 1 - q * q)
        return Fraction((1 - self.level.norm()) * (1 - self.pair_q.norm()), 1 - q * q)

    def weight(self, m: MonicPoly) -> int:
        if self.pair_q is None:
            return sigma_level(m, self.level)
        return sigma_prime(m, self.level, self.pair_q)


@dataclass(frozen=True)
class EdgeSpec:
    """The edge (pi^k, u; 0, 1)."""

    k: int
    u: LaurentSeries


def figure_edges(field: PrimeField, a: int, b: int) -> dict[str, EdgeSpec]:
    """The labeled edge set of the level-xy quotient graph, for y = T^2+aT+b.

    The a6 twist uses the constant term b of y; the c4/a3 edges carry 1/y.
    """
    pi = laurent_pi_power(field, 1)
    pi2 = laurent_pi_power(field, 2)
    pi3 = laurent_pi_power(field, 3)
    y_inv = laurent_inverse_of_poly(field, (b % field.q, a % field.q, 1))
    zero = laurent_zero(field)
    edges = {
        "c1": EdgeSpec(1, zero),
        "c2": EdgeSpec(3, zero),
        "c3": EdgeSpec(4, pi),
        "c4": EdgeSpec(5, y_inv),
        "a1": EdgeSpec(2, pi),
        "a2": EdgeSpec(3, pi),
        "a3": EdgeSpec(4, y_inv),
        "a4": EdgeSpec(3, pi2),
        "a5": EdgeSpec(2, zero),
        "a6": EdgeSpec(4, pi + pi3.scale(field.neg(b))),
    }
    for u in field.elements():
        edges[f"b{u}"] = EdgeSpec(3, pi + pi2.scale(u))
    return edges


def evaluate_on_edge(series: EisensteinSeries, edge: EdgeSpec) -> Fraction:
    """Exact value of the series on the edge.

    The character sum runs over all nonzero m (not only monic); the divisor
    weight is taken on the monic associate.  The Z[zeta] total must be
    rational, otherwise NotRational propagates.
    """
    field = series.field
    q = field.q
    total = CyclotomicInt.zero(q)
    max_deg = edge.k - 2
    for deg in range(0, max_deg + 1):
        for coeffs in itertools.product(field.elements(), repeat=deg + 1):
            if coeffs[-1] == 0:
                continue
            poly = poly_trim(tuple(coeffs))
            w = series.weight(monic_associate(field, poly))
            mu = laurent_from_poly(field, poly) * edge.u
            total = total + character(field, mu).scale(w)
    bracket = series.constant_term() + cyclotomic_as_integer(total)
    nu = series.normalization()
    return Fraction(nu) * Fraction(q) ** (1 - edge.k) * bracket


def series_x(field: PrimeField) -> EisensteinSeries:
    return EisensteinSeries(MonicPoly(field, (0, 1)))


def series_y(field: PrimeField, a: int, b: int) -> EisensteinSeries:
    return EisensteinSeries(MonicPoly(field, (b % field.q, a % field.q, 1)))


def series_xy(field: PrimeField, a: int, b: int) -> EisensteinSeries:
    return EisensteinSeries(
        MonicPoly(field, (0, 1)), MonicPoly(field, (b % field.q, a % field.q, 1))
    )


def eisenstein_combination(field: PrimeField, a: int, b: int, label: str) -> Fraction:
    """-(q+1) E_x + (q^2+1) E_y + q E_(x,y) on a labeled edge."""
    q = field.q
    edge = figure_edges(field, a, b)[label]
    ex = evaluate_on_edge(series_x(field), edge)
    ey = evaluate_on_edge(series_y(field, a, b), edge)
    exy = evaluate_on_edge(series_xy(field, a, b), edge)
    return -(q + 1) * ex + (q * q + 1) * ey + q * exy
