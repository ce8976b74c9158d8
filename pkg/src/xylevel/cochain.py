"""Cuspidal harmonic cochains of level xy via the labeled edge set, the
component groups at the place at infinity on both the split and the
quaternion side, and the canonical Eisenstein generator mod N = (q+1)(q^2+1).

A cochain is stored by its values on the finite edge labels
c1..c4, a1..a6, b_u (u in F_q); the identification b_0 = a_2 means a2 is an
alias, not a stored slot.  The six-relation system it must satisfy is::

    (q-1) f(a1) + f(a5) = 0          (q-1) f(a2) - f(a6) = 0
    (q-1) f(a3) + f(a6) = 0          (q-1) f(a4) - f(a5) = 0
    f(a2) + sum_{u != 0} f(b_u) = f(a1)
    f(a3) - sum_{u != 0} f(b_u) = f(a4)

together with vanishing on the cusp labels c1..c4.  Integrally-extendable
cochains additionally satisfy f(a1) + f(a4) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureMismatch
from .ffpoly import PrimeField
from .zlinalg import AbelianGroup, smith_normal_form

A_LABELS = ("a1", "a3", "a4", "a5", "a6")
CUSP_LABELS = ("c1", "c2", "c3", "c4")


@dataclass(frozen=True)
class CochainXY:
    """Edge values of a level-xy cochain, with coefficient modulus n (0 = Z)."""

    q: int
    values: dict
    modulus: int = 0

    def value(self, label: str) -> int:
        if label == "a2":
            label = "b0"
        return self.values[label]

    def b_vector(self) -> list[int]:
        return [self.values[f"b{u}"] for u in range(self.q)]


def _red(x: int, n: int) -> int:
    return x % n if n else x


def extend_cochain(q: int, b_values: list[int], modulus: int = 0) -> CochainXY:
    """The unique cuspidal extension of the b-values to all edge labels.

    The a-values are forced by the relation system; the one relation not used
    in the construction is asserted afterwards (it is implied).
    """
    PrimeField(q)  # validates q
    if len(b_values) != q:
        raise ValueError(f"need {q} b-values, got {len(b_values)}")
    n = modulus
    vals: dict = {f"b{u}": _red(b, n) for u, b in enumerate(b_values)}
    a1 = sum(b_values)
    vals["a1"] = _red(a1, n)
    vals["a4"] = _red(-a1, n)
    vals["a5"] = _red(-(q - 1) * a1, n)
    a2 = b_values[0]
    vals["a6"] = _red((q - 1) * a2, n)
    vals["a3"] = _red(-a2, n)
    for c in CUSP_LABELS:
        vals[c] = 0
    out = CochainXY(q, vals, n)
    # the remaining relation f(a3) - sum_{u!=0} f(b_u) = f(a4) is implied
    assert check_harmonic(out)
    return out


def check_harmonic(c: CochainXY) -> bool:
    """Whether the six relations and cusp vanishing hold modulo the modulus."""
    q, n = c.q, c.modulus

    def zero(x: int) -> bool:
        return x % n == 0 if n else x == 0

    f = c.value
    tail = sum(f(f"b{u}") for u in range(1, q))
    checks = [
        (q - 1) * f("a1") + f("a5"),
        (q - 1) * f("a2") - f("a6"),
        (q - 1) * f("a3") + f("a6"),
        (q - 1) * f("a4") - f("a5"),
        f("a2") + tail - f("a1"),
        f("a3") - tail - f("a4"),
    ]
    checks.extend(f(lbl) for lbl in CUSP_LABELS)
    return all(zero(x) for x in checks)


def _pairing_matrix_level(q: int) -> list[list[int]]:
    """Gram matrix of the cycle basis: q+2 at the two extreme diagonal slots,
    2 on the interior diagonal, -1 on the off-diagonals."""
    M = [[0] * q for _ in range(q)]
    for i in range(q):
        M[i][i] = q + 2 if i in (0, q - 1) else 2
        if i + 1 < q:
            M[i][i + 1] = -1
            M[i + 1][i] = -1
    return M


def phi_infinity_level(q: int) -> AbelianGroup:
    """Component group at infinity on the split side: cokernel of the cycle
    pairing matrix, checked cyclic of order (q+1)(q^2+1)."""
    PrimeField(q)
    group = smith_normal_form(_pairing_matrix_level(q))
    expected = (q + 1) * (q * q + 1)
    if not group.is_cyclic() or group.order() != expected:
        raise StructureMismatch(f"component group {group} is not Z/{expected}")
    return group


def phi_infinity_quaternion(q: int) -> AbelianGroup:
    """Component group at infinity on the quaternion side: cokernel of I + J,
    checked cyclic of order q+1."""
    PrimeField(q)
    M = [[1 + (1 if i == j else 0) for j in range(q)] for i in range(q)]
    group = smith_normal_form(M)
    if not group.is_cyclic() or group.order() != q + 1:
        raise StructureMismatch(f"component group {group} is not Z/{q + 1}")
    return group


def eisenstein_generator(q: int) -> tuple[int, list[int]]:
    """The generator of the Eisenstein line mod N = (q+1)(q^2+1).

    Pinned by f(a1) = 1 and f(b_u) = -(q+1) for u != 0; the b_0 value
    q^2 = 1 + (q-1)(q+1) is then forced by the relation f(a1) = sum f(b_u).
    """
    PrimeField(q)
    N = (q + 1) * (q * q + 1)
    b = [q * q % N] + [(-(q + 1)) % N] * (q - 1)
    cochain = extend_cochain(q, b, N)
    assert check_harmonic(cochain)
    assert cochain.value("a1") % N == 1
    return N, b
