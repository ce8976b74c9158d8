"""Hecke matrices on the rank-q lattice of cuspidal cochains of level xy,
the trace-form discriminant of the Hecke algebra, the Eisenstein-ideal
quotient, and the rank-one kernel search certifying Gorenstein completions.

For y = T^2 + aT + b and s in F_q^x, the (u, w) entry of the degree-one
Hecke matrix is

    2 - Q(u, w) - (q+1)*[w == s] + q*[u == 0]*[w == b/s]

where Q(u, w) counts the distinct roots beta in F_q of
(u-beta)(w-beta)(s-beta) + beta(beta^2 + a*beta + b), plus 1 when
u + w + s + a = 0.  The operator at s = 0 is never produced by this recipe;
it is pinned by the relation sum_{s in F_q} T_{x-s} = -1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import StructureMismatch
from .ffpoly import PrimeField, is_irreducible_deg2
from .zlinalg import (
    AbelianGroup,
    IntMatrix,
    cokernel_of_rows,
    express_in_span,
    mat_add,
    mat_identity,
    mat_mul,
    mat_scale,
    mat_sub,
    nullity_mod_ell,
    trace_form_discriminant,
)


@dataclass(frozen=True)
class LevelParams:
    """Level xy with x = T and y = T^2 + aT + b irreducible over F_q."""

    q: int
    a: int
    b: int

    def __post_init__(self):
        f = PrimeField(self.q)
        object.__setattr__(self, "a", self.a % self.q)
        object.__setattr__(self, "b", self.b % self.q)
        if not is_irreducible_deg2(f, self.a, self.b):
            raise ValueError(f"T^2+{self.a}T+{self.b} is reducible over F_{self.q}")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)

    def y_str(self) -> str:
        parts = ["T^2"]
        if self.a:
            parts.append("T" if self.a == 1 else f"{self.a}T")
        if self.b:
            parts.append(str(self.b))
        return "+".join(parts)


def gekeler_matrix(lp: LevelParams, s: int) -> IntMatrix:
    """The q x q integer matrix of the degree-one Hecke operator at x - s."""
    f = lp.field
    q, a, b = lp.q, lp.a, lp.b
    s %= q
    if s == 0:
        raise ValueError("s must be nonzero; the s = 0 operator comes from the sum relation")
    b_over_s = f.div(b, s)
    M = [[0] * q for _ in range(q)]
    for u in range(q):
        for w in range(q):
            count = 0
            for beta in range(q):
                lhs = (u - beta) * (w - beta) * (s - beta) + beta * (beta * beta + a * beta + b)
                if lhs % q == 0:
                    count += 1
            if (u + w + s + a) % q == 0:
                count += 1
            M[u][w] = 2 - count - (q + 1) * (1 if w == s else 0) + (
                q if (u == 0 and w == b_over_s) else 0
            )
    return M


def hecke_t_zero(lp: LevelParams) -> IntMatrix:
    """The matrix at s = 0, from sum over all s of the operators being -1."""
    q = lp.q
    M = mat_scale(-1, mat_identity(q))
    for s in range(1, q):
        M = mat_sub(M, gekeler_matrix(lp, s))
    return M


@dataclass(frozen=True)
class HeckePackage:
    """All degree-one Hecke matrices for a fixed level, rows/cols in F_q order."""

    lp: LevelParams
    matrices: dict = dc_field(default_factory=dict)  # s in F_q^x -> matrix

    @staticmethod
    def build(lp: LevelParams) -> "HeckePackage":
        mats = {s: gekeler_matrix(lp, s) for s in range(1, lp.q)}
        for s, M in mats.items():
            for u in range(lp.q):
                row_sum = sum(M[u])
                expected = -1 if u == s else 0
                assert row_sum == expected, f"row-sum identity fails at s={s}, u={u}"
        return HeckePackage(lp, mats)

    def basis(self) -> list[IntMatrix]:
        """Z-basis of the Hecke algebra: identity then the s = 1..q-1 matrices."""
        return [mat_identity(self.lp.q)] + [self.matrices[s] for s in range(1, self.lp.q)]

    def eta(self, s: int) -> IntMatrix:
        """The Eisenstein-ideal generator at s: the s-matrix minus (q+1)."""
        return mat_sub(self.matrices[s], mat_scale(self.lp.q + 1, mat_identity(self.lp.q)))


def discriminant(lp: LevelParams) -> int:
    """Trace-form discriminant of the Hecke algebra on its degree-one basis."""
    return trace_form_discriminant(HeckePackage.build(lp).basis())


def eisenstein_quotient(lp: LevelParams) -> AbelianGroup:
    """Quotient of the Hecke algebra by the span of the degree-one Eisenstein
    generators, asserted cyclic of order (q+1)(q^2+1).

    Coordinates live on the algebra's degree-one basis; every product
    eta_s * t is re-expressed integrally in that basis.
    """
    q = lp.q
    pkg = HeckePackage.build(lp)
    basis = pkg.basis()
    rows = []
    for s in range(1, q):
        eta = pkg.eta(s)
        for t in basis:
            rows.append(express_in_span(mat_mul(eta, t), basis))
    group = cokernel_of_rows(rows)
    expected = (q + 1) * (q * q + 1)
    if not group.is_cyclic() or group.order() != expected:
        raise StructureMismatch(
            f"degree-one Eisenstein quotient is {group}, expected Z/{expected}"
        )
    return group


def _coefficient_order(bound: int) -> list[int]:
    """0, 1, -1, 2, -2, ...: deterministic per-coordinate scan order."""
    out = [0]
    for v in range(1, bound + 1):
        out.extend((v, -v))
    return out


def gorenstein_search(
    lp: LevelParams, ell: int, coeff_bound: int = 3
) -> tuple[int, ...] | None:
    """First coefficient vector (c_s) with a rank-one kernel mod ell.

    Scans eta = sum c_s * eta_s lexicographically over |c_s| <= coeff_bound
    (coordinate order 0, 1, -1, 2, -2, ...) and returns the first with
    one-dimensional kernel on the cochain lattice mod ell.  None means the
    search was exhausted: inconclusive, not a refutation.
    """
    from .ffpoly import is_prime

    q = lp.q
    if not is_prime(ell):
        raise ValueError(f"ell = {ell} is not prime")
    if ((q + 1) * (q * q + 1)) % ell != 0:
        raise ValueError(f"ell = {ell} does not divide (q+1)(q^2+1)")
    if ell == q:
        raise ValueError("ell must differ from the characteristic")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    pkg = HeckePackage.build(lp)
    etas = [pkg.eta(s) for s in range(1, q)]
    zero = [[0] * q for _ in range(q)]
    for coeffs in itertools.product(_coefficient_order(coeff_bound), repeat=q - 1):
        M = zero
        for c, eta in zip(coeffs, etas):
            if c:
                M = mat_add(M, mat_scale(c, eta))
        if M is zero:
            continue
        if nullity_mod_ell(M, ell) == 1:
            return coeffs
    return None
