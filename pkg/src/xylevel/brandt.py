"""Brandt matrices of the Eichler order attached to level xy.

For odd q with nonsquare constant term b of y, the degree-one Brandt matrix
entries come from closed-form square-class tests: an entry is 2, 1, or 0 as
the classifying element is a nonzero square, zero, or a nonsquare.  The
index set is P^1(F_q) in the fixed order (inf, 0, 1, ..., q-1).  For q = 2
and y = T^2+T+1 the two degree-one matrices are pinned table values.

The transfer matrices B'(x-s) realize the same operators on the rank-q
cycle lattice of the quaternionic quotient graph, via

    B'_{u',u}(x-s) = B_{u',gamma(inf)} - B_{u',gamma(u)}

with gamma the orientation-reversal permutation; B'(x) is pinned by the
sum relation sum_{s in F_q} B'(x-s) = -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import UnsupportedOrder
from .ffpoly import QuadClass
from .hecke import LevelParams
from .zlinalg import IntMatrix, mat_identity, mat_scale, mat_sub

# q = 2, y = T^2+T+1: degree-one tables in index order (inf, 0, 1)
_Q2_B_TPRIME = [[2, 1, 2], [1, 2, 2], [2, 2, 1]]
_Q2_B_TPRIME_MINUS_1 = [[0, 2, 1], [2, 0, 1], [1, 1, 1]]


def _require_supported(lp: LevelParams) -> None:
    if lp.q == 2:
        if (lp.a, lp.b) != (1, 1):
            raise UnsupportedOrder("q = 2 is only supported for y = T^2+T+1")
        return
    if lp.field.quad_class(lp.b) is not QuadClass.NONSQUARE:
        raise UnsupportedOrder(
            f"constant term b = {lp.b} is a square in F_{lp.q}; the closed-form "
            "ideal counts do not apply"
        )


def _count(cls: QuadClass) -> int:
    return {QuadClass.SQUARE: 2, QuadClass.ZERO: 1, QuadClass.NONSQUARE: 0}[cls]


def gamma_perm(lp: LevelParams) -> list[int]:
    """The order-2 permutation of (inf, 0, .., q-1), as an index list.

    Odd q: fixes inf and 0, negates F_q^x.  q = 2: read off from the
    pinned tables (2J - B at the split place), which swap inf and 0.
    """
    _require_supported(lp)
    q = lp.q
    if q == 2:
        return [1, 0, 2]
    out = [0, 1]
    for u in range(1, q):
        out.append(1 + (-u) % q)
    return out


def brandt_matrix(lp: LevelParams, s: int) -> IntMatrix:
    """The (q+1) x (q+1) degree-one Brandt matrix at parameter s != 0.

    Entry classifiers, computed in F_q for y = T^2+aT+b:

        (inf, inf): s itself
        (inf, u):   alpha(s, u)  = 1 + s(4u^2 + a + sb)
        (u, u):     beta(s, u)   = ((a + 4u^2)^2 - 4b)s + 16u^2
        (u, u'):    xi(s, u, u') = (2u^2 + 2u'^2 + s(u'-u)^2 a)^2
                       - (1 - s(u'-u)^2)(16 u^2 u'^2 - s(u'-u)^2 (a^2 - 4b))
    """
    _require_supported(lp)
    q, a, b = lp.q, lp.a, lp.b
    s %= q
    if s == 0:
        raise ValueError("s must be nonzero")
    if q == 2:
        return [row[:] for row in _Q2_B_TPRIME_MINUS_1]
    f = lp.field
    n = q + 1
    M = [[0] * n for _ in range(n)]
    M[0][0] = _count(f.quad_class(s))
    for u in range(q):
        alpha = (1 + s * (4 * u * u + a + s * b)) % q
        M[0][1 + u] = M[1 + u][0] = _count(f.quad_class(alpha))
        beta = (((a + 4 * u * u) ** 2 - 4 * b) * s + 16 * u * u) % q
        M[1 + u][1 + u] = _count(f.quad_class(beta))
    for u in range(q):
        for v in range(u + 1, q):
            d2 = (v - u) * (v - u) % q
            first = (2 * u * u + 2 * v * v + s * d2 * a) % q
            xi = (first * first - (1 - s * d2) * (16 * u * u * v * v - s * d2 * (a * a - 4 * b))) % q
            M[1 + u][1 + v] = M[1 + v][1 + u] = _count(f.quad_class(xi))
    return M


def brandt_t_prime(lp: LevelParams) -> IntMatrix:
    """B at the split place: 2J - gamma (as a permutation matrix)."""
    _require_supported(lp)
    if lp.q == 2:
        return [row[:] for row in _Q2_B_TPRIME]
    n = lp.q + 1
    perm = gamma_perm(lp)
    return [[2 - (1 if perm[i] == j else 0) for j in range(n)] for i in range(n)]


def bprime_matrix(lp: LevelParams, s: int) -> IntMatrix:
    """Transfer matrix of the degree-one operator on the quaternionic lattice.

    For s != 0 built from the Brandt matrix at parameter s; for s = 0 pinned
    by -I - sum over nonzero s.
    """
    _require_supported(lp)
    q = lp.q
    s %= q
    if s == 0:
        M = mat_scale(-1, mat_identity(q))
        for t in range(1, q):
            M = mat_sub(M, bprime_matrix(lp, t))
        return M
    B = brandt_matrix(lp, s)
    perm = gamma_perm(lp)
    g_inf = perm[0]
    out = [[0] * q for _ in range(q)]
    for u_prime in range(q):
        for u in range(q):
            out[u_prime][u] = B[1 + u_prime][g_inf] - B[1 + u_prime][perm[1 + u]]
    return out


@dataclass(frozen=True)
class BrandtPackage:
    """Degree-one Brandt data for a fixed level: gamma, B(T'), B at s in F_q^x."""

    lp: LevelParams
    gamma: list = dc_field(default_factory=list)
    t_prime: IntMatrix = dc_field(default_factory=list)
    matrices: dict = dc_field(default_factory=dict)

    @staticmethod
    def build(lp: LevelParams) -> "BrandtPackage":
        gamma = gamma_perm(lp)
        mats = {s: brandt_matrix(lp, s) for s in range(1, lp.q)}
        for s, M in mats.items():
            n = lp.q + 1
            assert all(M[i][j] == M[j][i] for i in range(n) for j in range(n))
            assert all(sum(row) == lp.q + 1 for row in M), f"mass identity fails at s={s}"
            assert all(v in (0, 1, 2) for row in M for v in row)
        return BrandtPackage(lp, gamma, brandt_t_prime(lp), mats)
