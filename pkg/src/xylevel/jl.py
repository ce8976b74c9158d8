"""Simultaneous integer conjugacy between the two degree-one matrix families.

The pairing side: for a candidate functional alpha on the quaternionic
lattice, the q x q Gram matrix M has entry (u, s) equal to the u-th
coordinate of B'(x-s)^T alpha, columns over all s in F_q (s = 0 included via
the sum relation).  |det M| = 1 certifies that the two Hecke modules are
both isomorphic to the dual of the Hecke algebra.

The conjugator side: a unimodular C with C^-1 B'(x-s) C = G(x-s) for every
s in F_q^x.  Candidates derived from the pairing matrices are tried first in
all transpose/inverse orientations; if none verifies, a basis of the integer
intertwiner lattice {C : B'(x-s) C = C G(x-s) for all s} is computed exactly
and small coefficient combinations are scanned for a unimodular element.
A report is produced only for a C that verifies entry-for-entry; nothing is
ever guessed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .brandt import bprime_matrix
from .errors import NoIntertwiner
from .hecke import LevelParams, _coefficient_order, gekeler_matrix, hecke_t_zero
from .zlinalg import (
    IntMatrix,
    det,
    integer_kernel_basis,
    mat_inverse_unimodular,
    mat_mul,
    mat_transpose,
    mat_vec,
)


def _bprime_family(lp: LevelParams) -> dict:
    return {s: bprime_matrix(lp, s) for s in range(lp.q)}


def _gekeler_family(lp: LevelParams) -> dict:
    fam = {s: gekeler_matrix(lp, s) for s in range(1, lp.q)}
    fam[0] = hecke_t_zero(lp)
    return fam


def pairing_gram(lp: LevelParams, alpha: list[int]) -> IntMatrix:
    """M[u][s] = (B'(x-s)^T alpha)_u, columns s = 0..q-1."""
    q = lp.q
    if len(alpha) != q:
        raise ValueError(f"alpha must have length {q}")
    bprimes = _bprime_family(lp)
    cols = [mat_vec(mat_transpose(bprimes[s]), list(alpha)) for s in range(q)]
    return [[cols[s][u] for s in range(q)] for u in range(q)]


def find_alpha(lp: LevelParams, bound: int = 1) -> tuple[int, ...] | None:
    """First alpha (lexicographic, coordinates scanned 0, 1, -1, 2, -2, ...)
    whose Gram matrix is unimodular; None if the bound is exhausted."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    for alpha in itertools.product(_coefficient_order(bound), repeat=lp.q):
        if not any(alpha):
            continue
        if det(pairing_gram(lp, list(alpha))) in (1, -1):
            return alpha
    return None


def verify_conjugator(b_family: dict, g_family: dict, C: IntMatrix) -> dict:
    """Per-s check of C^-1 B_s C == G_s over the nonzero keys of the families."""
    if det(C) not in (1, -1):
        return {s: False for s in b_family if s != 0}
    Cinv = mat_inverse_unimodular(C)
    return {
        s: mat_mul(mat_mul(Cinv, b_family[s]), C) == g_family[s]
        for s in b_family
        if s != 0
    }


def _pairing_candidates(lp: LevelParams, alpha: list[int]) -> list[tuple[str, IntMatrix]]:
    """Conjugator candidates from the two pairing matrices, all orientations."""
    q = lp.q
    bprimes = _bprime_family(lp)
    p_h = [[-1] * q] + [[1 if v == s else 0 for v in range(q)] for s in range(1, q)]
    p_hp = [list(alpha)] + [
        mat_vec(mat_transpose(bprimes[s]), list(alpha)) for s in range(1, q)
    ]
    cands: list[tuple[str, IntMatrix]] = []
    if det(p_hp) in (1, -1):
        X = mat_mul(mat_inverse_unimodular(p_h), p_hp)
        cands.append(("pairing", X))
        cands.append(("pairing-transpose", mat_transpose(X)))
        Xi = mat_inverse_unimodular(X)
        cands.append(("pairing-inverse", Xi))
        cands.append(("pairing-inverse-transpose", mat_transpose(Xi)))
    return cands


def find_conjugator_lattice(
    b_family: dict, g_family: dict, bound: int = 3
) -> IntMatrix | None:
    """Unimodular element of {C : B_s C = C G_s for all s != 0}, if one exists
    within the coefficient bound on a saturated lattice basis.

    The lattice is the exact integer solution set of the bilinear system; a
    unimodular member is searched by iterative deepening over coefficient
    vectors, so the witness is deterministic.
    """
    some_b = next(iter(b_family.values()))
    n = len(some_b)
    rows = []
    for s, B in sorted(b_family.items()):
        if s == 0:
            continue  # implied by linearity and the sum relation
        G = g_family[s]
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[k * n + j] += B[i][k]
                for l in range(n):
                    row[i * n + l] -= G[l][j]
                rows.append(row)
    basis = integer_kernel_basis(rows)
    if not basis:
        return None
    mats = [[vec[i * n : (i + 1) * n] for i in range(n)] for vec in basis]
    for depth in range(1, bound + 1):
        for coeffs in itertools.product(_coefficient_order(depth), repeat=len(mats)):
            if not any(coeffs) or max(abs(c) for c in coeffs) != depth:
                continue
            C = [
                [sum(c * Mk[i][j] for c, Mk in zip(coeffs, mats)) for j in range(n)]
                for i in range(n)
            ]
            if det(C) in (1, -1):
                return C
    return None


@dataclass(frozen=True)
class ConjugacyReport:
    lp: LevelParams
    alpha: tuple
    gram: IntMatrix
    gram_det: int
    conjugator: IntMatrix | None
    variant: str
    per_s: dict

    @property
    def verified(self) -> bool:
        return self.conjugator is not None and all(self.per_s.values())


def build_and_verify_conjugator(
    lp: LevelParams, alpha: list[int], lattice_bound: int = 3
) -> ConjugacyReport:
    """Produce a verified simultaneous conjugator for the level's families.

    Requires |det M| = 1 for the given alpha.  Pairing-derived candidates are
    tested first in every orientation; the intertwiner-lattice search is the
    fallback.  Raises NoIntertwiner when nothing verifies.
    """
    gram = pairing_gram(lp, alpha)
    d = det(gram)
    if d not in (1, -1):
        raise ValueError(f"alpha does not give a unimodular Gram matrix (det {d})")
    b_family = _bprime_family(lp)
    g_family = _gekeler_family(lp)
    for variant, C in _pairing_candidates(lp, alpha):
        per_s = verify_conjugator(b_family, g_family, C)
        if per_s and all(per_s.values()):
            return ConjugacyReport(lp, tuple(alpha), gram, d, C, variant, per_s)
    C = find_conjugator_lattice(b_family, g_family, lattice_bound)
    if C is not None:
        per_s = verify_conjugator(b_family, g_family, C)
        if per_s and all(per_s.values()):
            return ConjugacyReport(lp, tuple(alpha), gram, d, C, "lattice", per_s)
    raise NoIntertwiner(
        f"no unimodular simultaneous conjugator found for q={lp.q}, y={lp.y_str()}"
    )
