"""Closed-form arithmetic invariants, parametrized by q and prime degrees:
supersingular counts, component groups, the cuspidal divisor group, the
Shimura subgroup, the cut-out Eisenstein congruence space, and the
conjectured kernel of the transfer isogeny.

Every formula is evaluated with exact rationals and the final integrality
is asserted (NonIntegral), never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NonIntegral
from .zlinalg import AbelianGroup, cokernel_of_rows, smith_with_transforms

ModulusSpec = list  # list[tuple[int, int]]: (degree, multiplicity) per prime


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegral(f"{what} = {x} is not an integer")
    return int(x)


def _check_modulus(m: ModulusSpec) -> None:
    for d, r in m:
        if d < 1 or r < 1:
            raise ValueError("degrees and multiplicities must be >= 1")


def _L(q: int, m: ModulusSpec) -> int:
    out = 1
    for d, r in m:
        out *= q ** (d * (r - 1)) * (q**d + 1)
    return out


def _R(m: ModulusSpec) -> int:
    return 1 if all(d % 2 == 0 for d, _ in m) else 0


def supersingular_count(q: int, deg_p: int, m: ModulusSpec) -> int:
    """Number of supersingular points on the reduced level-m curve at a prime
    of degree deg_p (coprime to m)."""
    _check_modulus(m)
    P = q**deg_p
    L, R, s = _L(q, m), _R(m), len(m)
    if deg_p % 2 == 0:
        return _as_int(Fraction(P - 1, q * q - 1) * L, "supersingular count")
    total = Fraction(P - q, q * q - 1) * L + Fraction(L + q * 2**s * R, q + 1)
    return _as_int(total, "supersingular count")


def component_group_fp(q: int, deg_p: int, m: ModulusSpec) -> AbelianGroup:
    """Component group at a degree-deg_p prime of the level p*m Jacobian."""
    _check_modulus(m)
    S = supersingular_count(q, deg_p, m)
    s = len(m)
    if deg_p % 2 == 1 and not m:
        return AbelianGroup.cyclic((q + 1) * (S - 1) + 1)
    if deg_p % 2 == 0 or any(d % 2 == 1 for d, _ in m):
        return AbelianGroup.cyclic(S)
    # deg_p odd, m nonempty, all prime degrees even
    big = (q + 1) ** 2 * S - q * (q + 1) * 2**s
    return AbelianGroup.from_orders([big] + [q + 1] * (2**s - 2))


def component_group_pq(q: int, deg_p: int, deg_q: int) -> tuple[AbelianGroup, AbelianGroup]:
    """(component group at p, its Galois-fixed subgroup) for level pq."""
    n = Fraction((q**deg_p - 1) * (q**deg_q + 1), q * q - 1)
    if deg_p % 2 == 1 and deg_q % 2 == 0:
        full = _as_int((q + 1) ** 2 * n, "component group order")
        fixed = _as_int((q + 1) * n, "fixed subgroup order")
        return AbelianGroup.cyclic(full), AbelianGroup.cyclic(fixed)
    order = _as_int(n, "component group order")
    g = AbelianGroup.cyclic(order)
    return g, g


def _mu(q: int, dp: int, dq: int) -> int:
    if dp % 2 == 0 or dq % 2 == 0:
        return (q - 1) * (q * q - 1)
    return (q - 1) ** 2


def _eps(q: int, dp: int, dq: int) -> int:
    if dp % 2 == 1 and dq % 2 == 0:
        return q - 1 if q % 2 == 0 else 2 * (q - 1)
    if (dp % 2 == 1 and dq % 2 == 1) or (q % 2 == 0 and dp % 2 == 0):
        return q * q - 1
    return 2 * (q * q - 1)


@dataclass(frozen=True)
class CuspidalGroups:
    order_cp: int
    order_cq: int
    cprime: AbelianGroup
    c: AbelianGroup


def cuspidal_group(q: int, deg_p: int, deg_q: int) -> CuspidalGroups:
    """Orders of the two cusp classes and the structures of C' and C.

    C' is the product of the three cyclic groups cut out by the explicit
    modular units; C is recovered from C' by the two-primary promotion rule
    (r1+1, r2+1, r3) when q is odd and some degree is even.
    """
    P, Q = q**deg_p, q**deg_q
    n_mm = _as_int(Fraction((P - 1) * (Q - 1), _mu(q, deg_p, deg_q)), "order of c(-,-)")
    n_mp = _as_int(Fraction((P - 1) * (Q + 1), _eps(q, deg_p, deg_q)), "order of c(-,+)")
    n_pm = _as_int(Fraction((P + 1) * (Q - 1), _eps(q, deg_q, deg_p)), "order of c(+,-)")
    order_cp = _as_int(
        Fraction((P * P - 1) * (Q - 1), (q - 1) * (q * q - 1)), "order of c_p"
    )
    order_cq = _as_int(
        Fraction((P - 1) * (Q * Q - 1), (q - 1) * (q * q - 1)), "order of c_q"
    )
    cprime = AbelianGroup.from_orders([n_mm, n_mp, n_pm])
    if q % 2 == 0 or (deg_p % 2 == 1 and deg_q % 2 == 1):
        return CuspidalGroups(order_cp, order_cq, cprime, cprime)
    # q odd, some even degree: promote the two largest 2-power exponents
    odds, exps = [], []
    for n in (n_mm, n_mp, n_pm):
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        odds.append(n)
        exps.append(e)
    r1, r2, r3 = sorted(exps, reverse=True)
    two_part = [2 ** (r1 + 1), 2 ** (r2 + 1), 2**r3]
    c = AbelianGroup.from_orders(odds + [t for t in two_part if t > 1])
    return CuspidalGroups(order_cp, order_cq, cprime, c)


def shimura_group(q: int, degrees: list[int]) -> AbelianGroup:
    """Shimura subgroup for a square-free level with the given prime degrees."""
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("need at least one prime degree >= 1")
    if any(d % 2 == 1 for d in degrees):
        orders = [_as_int(Fraction(q**d - 1, q - 1), "Shimura factor") for d in degrees]
        return AbelianGroup.from_orders(orders)
    if q % 2 == 0:
        orders = [_as_int(Fraction(q**d - 1, q * q - 1), "Shimura factor") for d in degrees]
        return AbelianGroup.from_orders(orders)
    # q odd, all degrees even: quotient of the doubled product by a diagonal Z/2
    ms = [_as_int(Fraction(2 * (q**d - 1), q * q - 1), "Shimura factor") for d in degrees]
    rows = [[m if i == j else 0 for j, m in enumerate(ms)] for i, _ in enumerate(ms)]
    rows.append([m // 2 for m in ms])
    return cokernel_of_rows(rows)


def _nu_single(q: int, d: int) -> int:
    return q + 1 if d % 2 == 1 else 1


def _nu_pair(q: int, dp: int, dq: int) -> int:
    return 1 if dp % 2 == 0 or dq % 2 == 0 else q + 1


def eisenstein_relation_matrix(q: int, deg_p: int, deg_q: int) -> list[list[int]]:
    """Integer coefficient matrix of the congruence system cutting out the
    Eisenstein space of level pq over Z/n (rows annihilate (a, b, c))."""
    P, Q = q**deg_p, q**deg_q
    qq = q * q - 1
    a1 = _as_int(Fraction((P - 1) * (Q + 1) * _nu_single(q, deg_p), qq), "relation")
    a2 = _as_int(Fraction((P + 1) * (Q - 1) * _nu_single(q, deg_q), qq), "relation")
    b1 = _as_int(Fraction((P - 1) * _nu_single(q, deg_p), qq), "relation")
    b2 = _as_int(Fraction((Q - 1) * _nu_single(q, deg_q), qq), "relation")
    b3 = _as_int(Fraction((P - 1) * (Q - 1) * _nu_pair(q, deg_p, deg_q), qq), "relation")
    return [[a1, 0, 0], [0, a2, 0], [b1, b2, -b3]]


def eisenstein_space_bruteforce(
    q: int, deg_p: int, deg_q: int, n: int
) -> AbelianGroup:
    """Solution group of the Eisenstein congruence system over Z/n.

    Solved by Smith normal form of the 3x3 relation matrix: the kernel of a
    diagonal matrix (d_i) on (Z/n)^3 is the product of Z/gcd(d_i, n).
    """
    if n < 1 or n > 10**4:
        raise ValueError("modulus must be in [1, 10^4]")
    if gcd(n, q) != 1:
        raise ValueError("modulus must be coprime to q")
    M = eisenstein_relation_matrix(q, deg_p, deg_q)
    D, _, _ = smith_with_transforms(M)
    return AbelianGroup.from_orders([gcd(D[i][i], n) if D[i][i] else n for i in range(3)])


@dataclass(frozen=True)
class JLKernelData:
    kernel: AbelianGroup
    phi_prime_q: AbelianGroup
    phi_tilde_q: AbelianGroup


def jl_kernel_conjecture(q: int, deg_p: int, deg_q: int) -> JLKernelData:
    """Conjectured kernel of the transfer isogeny, with the quaternionic
    component group and the reduced split-side component group at q."""
    if deg_p not in (1, 2):
        raise ValueError("deg_p must be 1 or 2")
    Q = q**deg_q
    if deg_q % 2 == 0:
        M = Q + 1
    else:
        M = _as_int(Fraction(Q + 1, q + 1), "kernel order")
    if deg_p == 1:
        kernel = AbelianGroup.cyclic(M)
        phi_prime = AbelianGroup.cyclic((q + 1) * M if deg_q % 2 == 0 else M)
        phi_tilde = (
            AbelianGroup.cyclic(q + 1) if deg_q % 2 == 0 else AbelianGroup.cyclic(1)
        )
    else:
        kernel = AbelianGroup.from_orders([M, q * q + 1])
        phi_prime = AbelianGroup.cyclic(M if deg_q % 2 == 0 else (q + 1) * M)
        phi_tilde = AbelianGroup.cyclic(
            q * q + 1 if deg_q % 2 == 0 else (q * q + 1) * (q + 1)
        )
    return JLKernelData(kernel, phi_prime, phi_tilde)
