"""Exact integer linear algebra on plain list-of-list matrices.

Everything here is arbitrary-precision: Bareiss determinants, Faddeev-
LeVerrier characteristic polynomials, Smith normal form with transform
tracking, exact rational solves, and Sturm-sequence root localization.
No floating point is used anywhere.

Matrices are rectangular ``list[list[int]]``; integer polynomials are
ascending-coefficient tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSolution, NotIntegral

DIM_CAP = 512

IntMatrix = list  # list[list[int]]
IntPoly = tuple  # tuple[int, ...], ascending, trailing zeros trimmed


# ---------------------------------------------------------------------------
# Matrix helpers.
# ---------------------------------------------------------------------------


def mat_shape(M: IntMatrix) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise ValueError("ragged matrix")
    if rows > DIM_CAP or cols > DIM_CAP:
        raise ValueError(f"matrix dimension above cap {DIM_CAP}")
    return rows, cols


def mat_identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_copy(M: IntMatrix) -> IntMatrix:
    return [row[:] for row in M]


def mat_transpose(M: IntMatrix) -> IntMatrix:
    rows, cols = mat_shape(M)
    return [[M[i][j] for i in range(rows)] for j in range(cols)]


def mat_add(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c: int, M: IntMatrix) -> IntMatrix:
    return [[c * a for a in row] for row in M]


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    _, ca = mat_shape(A)
    rb, _ = mat_shape(B)
    if ca != rb:
        raise ValueError("incompatible shapes")
    Bt = mat_transpose(B)
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: IntMatrix, v: list) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in A]


def trace(M: IntMatrix) -> int:
    n, m = mat_shape(M)
    if n != m:
        raise ValueError("trace of non-square matrix")
    return sum(M[i][i] for i in range(n))


def det(M: IntMatrix) -> int:
    """Fraction-free Bareiss determinant."""
    n, m = mat_shape(M)
    if n != m:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    A = mat_copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def charpoly(M: IntMatrix) -> IntPoly:
    """Exact monic characteristic polynomial det(X*I - M).

    Faddeev-LeVerrier recursion; every division is exact over Z.
    Returned ascending: (c_0, ..., c_{n-1}, 1).
    """
    n, m = mat_shape(M)
    if n != m:
        raise ValueError("characteristic polynomial of non-square matrix")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    N = mat_identity(n)
    for k in range(1, n + 1):
        MN = mat_mul(M, N)
        tn = -trace(MN)
        assert tn % k == 0
        c = tn // k
        coeffs[n - k] = c
        N = mat_add(MN, mat_scale(c, mat_identity(n)))
    return tuple(coeffs)


def mat_inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with det = +-1 (integer result)."""
    if det(M) not in (1, -1):
        raise ValueError("matrix is not unimodular")
    n, _ = mat_shape(M)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        cols.append([int(v) for v in solve_rational(M, e)])
    return mat_transpose(cols)


# ---------------------------------------------------------------------------
# Abelian groups by invariant factors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroup:
    """Invariant factors d_1 | d_2 | ... (>= 1, finite part), 0 for free rank.

    Equality ignores trivial factors: two groups are equal iff their
    nontrivial invariant chains and free ranks agree.
    """

    invariants: tuple[int, ...]

    def __post_init__(self):
        ds = self.invariants
        if any(d < 0 for d in ds):
            raise ValueError("invariant factors must be >= 0")
        finite = [d for d in ds if d != 0]
        if list(ds[: len(finite)]) != finite:
            raise ValueError("free factors must come last")
        for a, b in zip(finite, finite[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain fails: {a} does not divide {b}")

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d != 1)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariants if d == 0)

    def order(self) -> int:
        """Order of the finite part (the full order when free_rank is 0)."""
        out = 1
        for d in self.invariants:
            if d != 0:
                out *= d
        return out

    def is_cyclic(self) -> bool:
        return self.free_rank == 0 and len(self.nontrivial) <= 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.nontrivial

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.nontrivial == other.nontrivial

    def __hash__(self) -> int:
        return hash(self.nontrivial)

    def __str__(self) -> str:
        if self.is_trivial():
            return "0"
        return " x ".join(f"Z/{d}" if d else "Z" for d in self.nontrivial)

    @staticmethod
    def cyclic(n: int) -> "AbelianGroup":
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        return AbelianGroup((n,) if n > 1 else ())

    @staticmethod
    def from_orders(orders: list[int]) -> "AbelianGroup":
        """Invariant-factor form of a direct product of cyclic groups."""
        powers: dict[int, list[int]] = {}
        for n in orders:
            if n < 1:
                raise ValueError("cyclic orders must be >= 1")
            for p, e in _factorize(n).items():
                powers.setdefault(p, []).append(e)
        depth = max((len(es) for es in powers.values()), default=0)
        invs = []
        for i in range(depth):
            d = 1
            for p, es in powers.items():
                es_sorted = sorted(es, reverse=True)
                if i < len(es_sorted):
                    d *= p ** es_sorted[i]
            invs.append(d)
        return AbelianGroup(tuple(reversed(invs)))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Smith normal form.
# ---------------------------------------------------------------------------


def smith_with_transforms(M: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, S, T) with S*M*T = D diagonal in divisibility order.

    S and T are unimodular.  The pivot is always a nonzero entry of minimal
    absolute value, which keeps intermediate growth in check at the small
    dimensions used here.
    """
    rows, cols = mat_shape(M)
    D = mat_copy(M)
    S = mat_identity(rows)
    T = mat_identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        S[i], S[j] = S[j], S[i]

    def swap_cols(i, j):
        for r in range(rows):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        for r in range(cols):
            T[r][i], T[r][j] = T[r][j], T[r][i]

    def add_row(dst, src, factor):
        for j in range(cols):
            D[dst][j] += factor * D[src][j]
        for j in range(rows):
            S[dst][j] += factor * S[src][j]

    def add_col(dst, src, factor):
        for i in range(rows):
            D[i][dst] += factor * D[i][src]
        for i in range(cols):
            T[i][dst] += factor * T[i][src]

    def reduce_to_diagonal():
        t = 0
        while t < min(rows, cols):
            pos = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if D[i][j] != 0 and (pos is None or abs(D[i][j]) < abs(D[pos[0]][pos[1]])):
                        pos = (i, j)
            if pos is None:
                return
            if pos[0] != t:
                swap_rows(t, pos[0])
            if pos[1] != t:
                swap_cols(t, pos[1])
            while True:
                for i in range(t + 1, rows):
                    q = D[i][t] // D[t][t]
                    if q:
                        add_row(i, t, -q)
                dirty = [i for i in range(t + 1, rows) if D[i][t] != 0]
                if dirty:
                    i = min(dirty, key=lambda r: abs(D[r][t]))
                    swap_rows(t, i)
                    continue
                for j in range(t + 1, cols):
                    q = D[t][j] // D[t][t]
                    if q:
                        add_col(j, t, -q)
                dirty = [j for j in range(t + 1, cols) if D[t][j] != 0]
                if dirty:
                    j = min(dirty, key=lambda c: abs(D[t][c]))
                    swap_cols(t, j)
                    continue
                break
            t += 1

    reduce_to_diagonal()
    # enforce the divisibility chain d_i | d_{i+1}
    n = min(rows, cols)
    while True:
        bad = None
        for i in range(n - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a != 0 and b % a != 0:
                bad = i
                break
        if bad is None:
            break
        add_col(bad, bad + 1, 1)
        reduce_to_diagonal()
    for i in range(n):
        if D[i][i] < 0:
            for j in range(cols):
                D[i][j] = -D[i][j]
            for j in range(rows):
                S[i][j] = -S[i][j]
    return D, S, T


def smith_normal_form(M: IntMatrix) -> AbelianGroup:
    """Invariant factors of coker(M: Z^cols -> Z^rows).

    The result has one entry per row of the ambient lattice: the nonzero
    diagonal factors (1s included) followed by 0s for the free part.
    """
    rows, cols = mat_shape(M)
    D, _, _ = smith_with_transforms(M)
    diag = [D[i][i] for i in range(min(rows, cols)) if D[i][i] != 0]
    return AbelianGroup(tuple(diag) + (0,) * (rows - len(diag)))


def cokernel_of_rows(M: IntMatrix) -> AbelianGroup:
    """Invariant factors of Z^cols modulo the row span of M."""
    return smith_normal_form(mat_transpose(M))


def integer_kernel_basis(M: IntMatrix) -> list[list[int]]:
    """Basis of the saturated integer kernel {x in Z^cols : M x = 0}.

    With S*M*T = D, the columns of T beyond the rank of D span the kernel;
    T is unimodular, so the basis is automatically saturated.
    """
    rows, cols = mat_shape(M)
    D, _, T = smith_with_transforms(M)
    rank = sum(1 for i in range(min(rows, cols)) if D[i][i] != 0)
    return [[T[i][j] for i in range(cols)] for j in range(rank, cols)]


# ---------------------------------------------------------------------------
# Exact rational solving and span membership.
# ---------------------------------------------------------------------------


def solve_rational(A: IntMatrix, b: list) -> list[Fraction]:
    """Solve A x = b exactly over Q; raise NoSolution if inconsistent.

    Columns of A must be linearly independent (the unique-solution case).
    """
    rows, cols = mat_shape(A)
    aug = [[Fraction(A[i][j]) for j in range(cols)] + [Fraction(b[i])] for i in range(rows)]
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pr is None:
            raise NoSolution("columns are linearly dependent")
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, rows):
        if aug[i][cols] != 0:
            raise NoSolution("inconsistent system")
    return [aug[i][cols] for i in range(cols)]


def express_in_span(target: IntMatrix, basis: list[IntMatrix]) -> list[int]:
    """Integer coefficients c with target = sum c_i * basis_i.

    The rational solution is computed exactly and asserted integral;
    a non-integral solution raises NotIntegral, an inconsistent system
    NoSolution.
    """
    if not basis:
        raise ValueError("empty basis")
    rows, cols = mat_shape(basis[0])
    for B in basis:
        if mat_shape(B) != (rows, cols):
            raise ValueError("basis shape mismatch")
    if mat_shape(target) != (rows, cols):
        raise ValueError("target shape mismatch")
    A = [[B[i][j] for B in basis] for i in range(rows) for j in range(cols)]
    b = [target[i][j] for i in range(rows) for j in range(cols)]
    x = solve_rational(A, b)
    if any(v.denominator != 1 for v in x):
        raise NotIntegral(f"non-integral span coordinates: {x}")
    return [int(v) for v in x]


def trace_form_discriminant(basis: list[IntMatrix]) -> int:
    """det(Trace(t_i t_j)) for square matrices t_i of a common size."""
    if not basis:
        raise ValueError("empty basis")
    n, m = mat_shape(basis[0])
    if n != m:
        raise ValueError("basis elements must be square")
    for B in basis:
        if mat_shape(B) != (n, m):
            raise ValueError("basis size mismatch")
    gram = [[trace(mat_mul(a, b)) for b in basis] for a in basis]
    return det(gram)


def nullity_mod_ell(M: IntMatrix, ell: int) -> int:
    """Kernel dimension of M over F_ell by exact Gaussian elimination."""
    from .ffpoly import is_prime

    if not is_prime(ell):
        raise ValueError(f"modulus {ell} is not prime")
    rows, cols = mat_shape(M)
    A = [[M[i][j] % ell for j in range(cols)] for i in range(rows)]
    rank = 0
    for c in range(cols):
        pr = next((i for i in range(rank, rows) if A[i][c] % ell != 0), None)
        if pr is None:
            continue
        A[rank], A[pr] = A[pr], A[rank]
        inv = pow(A[rank][c], ell - 2, ell)
        A[rank] = [(v * inv) % ell for v in A[rank]]
        for i in range(rows):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(v - f * w) % ell for v, w in zip(A[i], A[rank])]
        rank += 1
    return cols - rank


# ---------------------------------------------------------------------------
# Integer polynomials and Sturm-based root localization.
# ---------------------------------------------------------------------------


def zpoly_trim(p) -> IntPoly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def zpoly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def zpoly_mul(f, g) -> IntPoly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return zpoly_trim(out)


def zpoly_sub(f, g) -> IntPoly:
    n = max(len(f), len(g))
    return zpoly_trim(
        tuple((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n))
    )


def zpoly_derivative(p) -> IntPoly:
    return zpoly_trim(tuple(i * c for i, c in enumerate(p) if i >= 1))


def _qpoly_divmod(f: list, g: list):
    """Division with remainder over Q; f, g are Fraction lists, g nonzero."""
    f = f[:]
    while f and f[-1] == 0:
        f.pop()
    g = g[:]
    while g and g[-1] == 0:
        g.pop()
    dg = len(g) - 1
    q = [Fraction(0)] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        k = len(f) - 1 - dg
        c = f[-1] / g[-1]
        q[k] = c
        for i, gc in enumerate(g):
            f[k + i] -= c * gc
        while f and f[-1] == 0:
            f.pop()
    return q, f


def _primitive(p: list) -> IntPoly:
    """Primitive integer polynomial proportional to a Fraction list, lc > 0."""
    if not p:
        return ()
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*(abs(c) for c in ints))
    if g > 1:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return zpoly_trim(ints)


def zpoly_squarefree_part(p) -> IntPoly:
    """p / gcd(p, p'), primitive over Z."""
    p = zpoly_trim(p)
    if len(p) <= 1:
        return p
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in zpoly_derivative(p)]
    while any(b):
        _, r = _qpoly_divmod(a, b)
        a, b = b, r
    if len(a) <= 1:
        return p
    quot, rem = _qpoly_divmod([Fraction(c) for c in p], a)
    assert not rem
    return _primitive(quot)


def _sturm_chain(p: IntPoly) -> list[IntPoly]:
    chain = [zpoly_trim(p)]
    d = zpoly_derivative(p)
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        f = [Fraction(c) for c in chain[-2]]
        g = [Fraction(c) for c in chain[-1]]
        _, r = _qpoly_divmod(f, g)
        if not r:
            break
        chain.append(_primitive([-c for c in r]))
    return chain


def _sign_at(p: IntPoly, x) -> int:
    """Sign of p at x, where x is a Fraction or '+inf'/'-inf'."""
    if not p:
        return 0
    if x == "+inf":
        return 1 if p[-1] > 0 else -1
    if x == "-inf":
        lead = p[-1] if (len(p) - 1) % 2 == 0 else -p[-1]
        return 1 if lead > 0 else -1
    v = zpoly_eval(p, x)
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(chain: list[IntPoly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPoly, lo, hi) -> int:
    """Number of distinct real roots of p in (lo, hi]; endpoints may be +-inf."""
    p = zpoly_trim(p)
    if len(p) <= 1:
        return 0
    chain = _sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def _deflate_root(p: IntPoly, root: int) -> IntPoly:
    """p / (Y - root), assuming p(root) = 0 exactly."""
    n = len(p) - 1
    out = [0] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        out[i] = acc
        acc = p[i] + acc * root
    assert acc == 0, "not a root"
    return zpoly_trim(out)


def roots_bounded_by(p: IntPoly, bound_sq: int) -> bool:
    """Whether every root lambda of p is real with lambda^2 <= bound_sq.

    The squares are localized through r(Y) = lc^2 * prod(Y - lambda_i^2),
    obtained from the even/odd split of p, so no irrational square roots
    are ever compared.
    """
    p = zpoly_trim(p)
    if not p:
        raise ValueError("zero polynomial")
    if bound_sq < 0:
        raise ValueError("bound_sq must be >= 0")
    if len(p) == 1:
        return True
    p_sf = zpoly_squarefree_part(p)
    if sturm_count(p_sf, "-inf", "+inf") != len(p_sf) - 1:
        return False
    n = len(p) - 1
    even = zpoly_trim(tuple(p[i] for i in range(0, len(p), 2)))
    odd = zpoly_trim(tuple(p[i] for i in range(1, len(p), 2)))
    r = zpoly_sub(zpoly_mul(even, even), zpoly_trim((0,) + zpoly_mul(odd, odd)))
    if n % 2 == 1:
        r = tuple(-c for c in r)
    r_sf = zpoly_squarefree_part(r)
    # roots exactly at bound_sq are allowed; deflate before counting
    while len(r_sf) > 1 and zpoly_eval(r_sf, Fraction(bound_sq)) == 0:
        r_sf = _deflate_root(r_sf, bound_sq)
    return sturm_count(r_sf, Fraction(bound_sq), "+inf") == 0
