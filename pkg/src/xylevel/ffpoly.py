"""Exact arithmetic over prime fields F_q, monic polynomials in F_q[T],
Laurent series in the uniformizer pi = T^-1, and q-th cyclotomic integers.

Field elements are plain ints in [0, q); a :class:`PrimeField` carries the
modulus and the operations.  Polynomials store ascending coefficient tuples.
Laurent series track an explicit precision window so that every coefficient
query is either answered exactly or rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import NotRational, PrecisionError

MAX_Q = 97
DEGREE_CAP = 12
DEFAULT_PRECISION = 8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class QuadClass(Enum):
    ZERO = "zero"
    SQUARE = "square"
    NONSQUARE = "nonsquare"


class PrimeField:
    """F_q for a prime q with 2 <= q <= 97.

    Restricting to prime q keeps the additive character trivial to evaluate
    (the trace down to the prime field is the identity).
    """

    def __init__(self, q: int):
        if not is_prime(q) or not 2 <= q <= MAX_Q:
            raise ValueError(f"q must be a prime in [2, {MAX_Q}], got {q}")
        self.q = q
        self._squares = frozenset((a * a) % q for a in range(1, q))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        return pow(a, self.q - 2, self.q)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def quad_class(self, e: int) -> QuadClass:
        """Classify e as zero, a nonzero square, or a nonsquare in F_q."""
        e %= self.q
        if e == 0:
            return QuadClass.ZERO
        return QuadClass.SQUARE if e in self._squares else QuadClass.NONSQUARE


# ---------------------------------------------------------------------------
# Polynomials over F_q.
# ---------------------------------------------------------------------------


def poly_trim(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def poly_deg(coeffs: tuple[int, ...]) -> int:
    """Degree of a trimmed coefficient tuple; -1 for the zero polynomial."""
    return len(coeffs) - 1


def poly_add(field: PrimeField, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return poly_trim(tuple(out))


def poly_mul(field: PrimeField, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % field.q
    return poly_trim(tuple(out))


def poly_divmod(
    field: PrimeField, f: tuple[int, ...], g: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Quotient and remainder of f by a nonzero g."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = poly_deg(g)
    inv_lead = field.inv(g[-1])
    quot = [0] * max(0, len(f) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = field.mul(c, inv_lead)
        quot[i - dg] = factor
        for j, b in enumerate(g):
            rem[i - dg + j] = field.sub(rem[i - dg + j], field.mul(factor, b))
    return poly_trim(tuple(quot)), poly_trim(tuple(rem))


def poly_gcd(field: PrimeField, f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Monic gcd by the Euclidean algorithm."""
    while g:
        f, g = g, poly_divmod(field, f, g)[1]
    if f and f[-1] != 1:
        inv = field.inv(f[-1])
        f = tuple(field.mul(c, inv) for c in f)
    return f


def poly_eval(field: PrimeField, f: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % field.q
    return acc


@dataclass(frozen=True)
class MonicPoly:
    """A monic polynomial in F_q[T], stored by ascending coefficients."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("MonicPoly requires leading coefficient 1")
        if any(not 0 <= c < self.field.q for c in self.coeffs):
            raise ValueError("coefficients must be canonical residues")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "MonicPoly") -> "MonicPoly":
        return MonicPoly(self.field, poly_mul(self.field, self.coeffs, other.coeffs))

    def divides(self, other: "MonicPoly") -> bool:
        return not poly_divmod(self.field, other.coeffs, self.coeffs)[1]

    def norm(self) -> int:
        """|m| = q^deg(m), the size of F_q[T]/(m)."""
        return self.field.q**self.degree

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "T" if i == 1 else f"T^{i}"
                parts.append(var if c == 1 else f"{c}{var}")
        return "+".join(parts)


def monic_one(field: PrimeField) -> MonicPoly:
    return MonicPoly(field, (1,))


def monic_t(field: PrimeField) -> MonicPoly:
    return MonicPoly(field, (0, 1))


def monic_of_degree(field: PrimeField, degree: int) -> Iterator[MonicPoly]:
    """All monic polynomials of the given degree, in coefficient order."""
    if degree == 0:
        yield monic_one(field)
        return

    def rec(prefix: list[int], i: int) -> Iterator[MonicPoly]:
        if i == degree:
            yield MonicPoly(field, tuple(prefix) + (1,))
            return
        for c in field.elements():
            prefix.append(c)
            yield from rec(prefix, i + 1)
            prefix.pop()

    yield from rec([], 0)


def monic_associate(field: PrimeField, coeffs: tuple[int, ...]) -> MonicPoly:
    """The monic scalar multiple of a nonzero polynomial."""
    coeffs = poly_trim(coeffs)
    if not coeffs:
        raise ValueError("zero polynomial has no monic associate")
    inv = field.inv(coeffs[-1])
    return MonicPoly(field, tuple(field.mul(c, inv) for c in coeffs))


def monic_divisors(m: MonicPoly) -> list[MonicPoly]:
    """All monic divisors of m, by trial division.

    Candidates of degree <= deg(m)/2 are paired with their (monic) cofactors,
    and the result is sorted by (degree, coefficient tuple).
    """
    if m.degree > DEGREE_CAP:
        raise ValueError(f"degree {m.degree} above cap {DEGREE_CAP}")
    field = m.field
    found: set[tuple[int, ...]] = set()
    for d in range(0, m.degree // 2 + 1):
        for cand in monic_of_degree(field, d):
            quot, rem = poly_divmod(field, m.coeffs, cand.coeffs)
            if not rem:
                found.add(cand.coeffs)
                found.add(quot)
    return [MonicPoly(field, c) for c in sorted(found, key=lambda c: (len(c), c))]


def is_irreducible_deg2(field: PrimeField, a: int, b: int) -> bool:
    """Whether T^2 + aT + b has no root in F_q."""
    return all(poly_eval(field, (b % field.q, a % field.q, 1), t) != 0 for t in field.elements())


# ---------------------------------------------------------------------------
# Laurent series in pi = T^-1.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentSeries:
    """sum_{k >= start} c_k pi^k, with coefficients known exactly on [start, prec).

    Queries below `start` return 0 (the series is constructed so that `start`
    is a true lower bound for the support); queries at or above `prec` raise.
    """

    field: PrimeField
    start: int
    coeffs: tuple[int, ...]
    prec: int

    def __post_init__(self):
        if len(self.coeffs) != self.prec - self.start:
            raise ValueError("coefficient window does not match [start, prec)")

    def coeff(self, k: int) -> int:
        if k >= self.prec:
            raise PrecisionError(f"coefficient pi^{k} outside window [.., {self.prec})")
        if k < self.start:
            return 0
        return self.coeffs[k - self.start]

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        start = min(self.start, other.start)
        prec = min(self.prec, other.prec)
        out = [0] * (prec - start)
        for k in range(start, prec):
            out[k - start] = self.field.add(
                self.coeffs[k - self.start] if self.start <= k < self.prec else 0,
                other.coeffs[k - other.start] if other.start <= k < other.prec else 0,
            )
        return LaurentSeries(self.field, start, tuple(out), prec)

    def scale(self, c: int) -> "LaurentSeries":
        c %= self.field.q
        return LaurentSeries(
            self.field, self.start, tuple(self.field.mul(c, x) for x in self.coeffs), self.prec
        )

    def shift(self, j: int) -> "LaurentSeries":
        """Multiply by pi^j."""
        return LaurentSeries(self.field, self.start + j, self.coeffs, self.prec + j)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        start = self.start + other.start
        prec = min(self.prec + other.start, other.prec + self.start)
        out = [0] * (prec - start)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = start + i + j
                if k >= prec:
                    break
                out[i + j] = (out[i + j] + a * b) % self.field.q
        return LaurentSeries(self.field, start, tuple(out), prec)


def laurent_zero(field: PrimeField, prec: int = DEFAULT_PRECISION) -> LaurentSeries:
    return LaurentSeries(field, prec, (), prec)


def laurent_pi_power(field: PrimeField, k: int, prec: int = DEFAULT_PRECISION) -> LaurentSeries:
    if k >= prec:
        raise ValueError("pi power beyond requested precision")
    return LaurentSeries(field, k, (1,) + (0,) * (prec - k - 1), prec)


def laurent_from_poly(
    field: PrimeField, coeffs: tuple[int, ...], prec: int = DEFAULT_PRECISION
) -> LaurentSeries:
    """Embed a polynomial in T: T^i contributes at pi^-i."""
    coeffs = poly_trim(coeffs)
    if not coeffs:
        return laurent_zero(field, prec)
    start = -poly_deg(coeffs)
    window = list(reversed(coeffs)) + [0] * (prec - start - len(coeffs))
    return LaurentSeries(field, start, tuple(window), prec)


def laurent_inverse_of_poly(
    field: PrimeField, coeffs: tuple[int, ...], prec: int = DEFAULT_PRECISION
) -> LaurentSeries:
    """1/f(T) as a Laurent series in pi, for a nonzero polynomial f.

    Writing f = c * pi^-d * (1 + e_1 pi + ...), the unit part is inverted by
    the standard power-series recurrence.
    """
    coeffs = poly_trim(coeffs)
    if not coeffs:
        raise ZeroDivisionError("inverse of the zero polynomial")
    d = poly_deg(coeffs)
    lead = coeffs[-1]
    # unit part u_j = coefficient of pi^j, u_0 = 1
    unit = [field.div(coeffs[d - j], lead) if d - j >= 0 else 0 for j in range(prec - d + 1)]
    n = len(unit)
    inv = [0] * n
    inv[0] = 1
    for j in range(1, n):
        acc = 0
        for i in range(1, j + 1):
            acc = (acc + unit[i] * inv[j - i]) % field.q
        inv[j] = field.neg(acc)
    inv_lead = field.inv(lead)
    window = tuple(field.mul(inv_lead, c) for c in inv)
    return LaurentSeries(field, d, window[: prec - d], prec)


def laurent_coeff(f: LaurentSeries, k: int) -> int:
    """Coefficient of pi^k, with an explicit window check."""
    return f.coeff(k)


# ---------------------------------------------------------------------------
# Cyclotomic integers Z[zeta_p], p = q prime.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2)."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.p - 1:
            raise ValueError("coordinate vector must have length p-1")

    @staticmethod
    def zero(p: int) -> "CyclotomicInt":
        return CyclotomicInt(p, (0,) * (p - 1))

    @staticmethod
    def one(p: int) -> "CyclotomicInt":
        return CyclotomicInt(p, (1,) + (0,) * (p - 2))

    @staticmethod
    def zeta_pow(p: int, k: int) -> "CyclotomicInt":
        """zeta^k reduced into the basis (zeta^(p-1) = -1 - zeta - ... - zeta^(p-2))."""
        k %= p
        if k < p - 1:
            coords = tuple(1 if i == k else 0 for i in range(p - 1))
        else:
            coords = (-1,) * (p - 1)
        return CyclotomicInt(p, coords)

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        return self + (-other)

    def scale(self, n: int) -> "CyclotomicInt":
        return CyclotomicInt(self.p, tuple(n * a for a in self.coords))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        p = self.p
        # convolve with exponents mod p, then fold zeta^(p-1) into the basis
        raw = [0] * p
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                raw[(i + j) % p] += a * b
        top = raw[p - 1]
        return CyclotomicInt(p, tuple(raw[i] - top for i in range(p - 1)))

    def _check(self, other: "CyclotomicInt") -> None:
        if other.p != self.p:
            raise ValueError("mixed cyclotomic orders")


def character(field: PrimeField, u: LaurentSeries) -> CyclotomicInt:
    """The additive character zeta^(a_1), where a_1 is the pi^1-coefficient of u."""
    return CyclotomicInt.zeta_pow(field.q, u.coeff(1))


def cyclotomic_as_integer(c: CyclotomicInt) -> int:
    """Extract n from c = n*1; raise NotRational if any zeta-coordinate survives."""
    if any(x != 0 for x in c.coords[1:]):
        raise NotRational(f"nonzero zeta coordinates: {c.coords}")
    return c.coords[0]
