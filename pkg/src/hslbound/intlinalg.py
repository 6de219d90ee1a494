"""Exact integer linear algebra: normal forms, kernels, lattice solving.

Vectors are tuples of Python ints and matrices are tuples of row tuples,
so everything runs on arbitrary-precision integers.  Normal-form pipelines
(Hermite, Smith) can blow up intermediate entries far past machine width,
which is why nothing here ever touches floating point or fixed-width
arithmetic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


# ---------------------------------------------------------------------------
# small vector / matrix helpers


def vector(entries) -> IntVector:
    return tuple(int(e) for e in entries)


def matrix(rows) -> IntMatrix:
    rows = tuple(vector(r) for r in rows)
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
    return rows


def dot(u: IntVector, v: IntVector) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(v, c):
    return tuple(c * a for a in v)


def vec_neg(v):
    return tuple(-a for a in v)


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(A: IntMatrix) -> IntMatrix:
    return tuple(zip(*A)) if A else ()


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def mat_vec(A: IntMatrix, x: IntVector) -> IntVector:
    """A @ x with x a column vector."""
    return tuple(dot(row, x) for row in A)


def vec_mat(x: IntVector, A: IntMatrix) -> IntVector:
    """x @ A with x a row vector."""
    if len(x) != len(A):
        raise ValueError("length mismatch")
    n = len(A[0]) if A else 0
    return tuple(sum(x[i] * A[i][j] for i in range(len(A))) for j in range(n))


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: (g, x, y) with x*a + y*b == g and g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise ValueError("determinant needs a square matrix")
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if M[i][k]), None)
            if pivot is None:
                return 0
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form


def hermite_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.  Returns (H, U) with H == U @ A.

    U is unimodular.  Pivots are positive, pivot columns strictly increase,
    entries above a pivot are reduced into [0, pivot), and zero rows sink
    to the bottom, so the nonzero rows are a canonical basis of the row
    lattice of A.
    """
    A = matrix(A)
    if not A:
        raise ValueError("empty matrix")
    m, n = len(A), len(A[0])
    H = [list(r) for r in A]
    U = [list(r) for r in identity_matrix(m)]
    row = 0
    for col in range(n):
        if row == m:
            break
        pivot = next((i for i in range(row, m) if H[i][col]), None)
        if pivot is None:
            continue
        if pivot != row:
            H[row], H[pivot] = H[pivot], H[row]
            U[row], U[pivot] = U[pivot], U[row]
        for i in range(row + 1, m):
            if H[i][col] == 0:
                continue
            a, b = H[row][col], H[i][col]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            # rows (row, i) <- unimodular [x y; -bg ag] acting on them
            for R in (H, U):
                top, bot = R[row], R[i]
                R[row] = [x * s + y * t for s, t in zip(top, bot)]
                R[i] = [-bg * s + ag * t for s, t in zip(top, bot)]
        if H[row][col] < 0:
            H[row] = [-e for e in H[row]]
            U[row] = [-e for e in U[row]]
        p = H[row][col]
        for i in range(row):
            q = H[i][col] // p  # floor leaves the remainder in [0, p)
            if q:
                H[i] = [s - q * t for s, t in zip(H[i], H[row])]
                U[i] = [s - q * t for s, t in zip(U[i], U[row])]
        row += 1
    return matrix(H), matrix(U)


def matrix_rank(A) -> int:
    rows = matrix(A)
    if not rows:
        return 0
    H, _ = hermite_normal_form(rows)
    return sum(1 for r in H if any(r))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D diagonal.

    The diagonal is nonnegative, forms a divisibility chain, and any zero
    entries come last.  invariant_factors is that diagonal.
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix
    invariant_factors: tuple[int, ...]


def smith_normal_form(A: IntMatrix) -> SmithDecomposition:
    A = matrix(A)
    if not A:
        raise ValueError("empty matrix")
    m, n = len(A), len(A[0])
    D = [list(r) for r in A]
    U = [list(r) for r in identity_matrix(m)]
    V = [list(r) for r in identity_matrix(n)]

    def row_combine(i1, i2, x, y, z, w):
        # rows (i1, i2) <- [x y; z w] @ rows, with xw - yz == +-1
        for R in (D, U):
            top, bot = R[i1], R[i2]
            R[i1] = [x * s + y * t for s, t in zip(top, bot)]
            R[i2] = [z * s + w * t for s, t in zip(top, bot)]

    def col_combine(j1, j2, x, y, z, w):
        # cols (j1, j2) <- cols @ [x z; y w]
        for R in (D, V):
            for r in R:
                a, b = r[j1], r[j2]
                r[j1] = x * a + y * b
                r[j2] = z * a + w * b

    def row_swap(i1, i2):
        for R in (D, U):
            R[i1], R[i2] = R[i2], R[i1]

    def col_swap(j1, j2):
        for R in (D, V):
            for r in R:
                r[j1], r[j2] = r[j2], r[j1]

    k = min(m, n)
    for t in range(k):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (pivot is None or abs(D[i][j]) < pivot[0]):
                    pivot = (abs(D[i][j]), i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        # Clear column t, then row t, repeating while gcd steps cross-dirty
        # the other line.  Divisible entries are removed by plain
        # elimination (which cannot re-dirty anything); a full 2x2 gcd
        # transform strictly shrinks |D[t][t]|, so the loop terminates.
        while True:
            col_dirty = [i for i in range(m) if i != t and D[i][t]]
            if col_dirty:
                for i in col_dirty:
                    a, b = D[t][t], D[i][t]
                    if b % a == 0:
                        row_combine(t, i, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = xgcd(a, b)
                        row_combine(t, i, x, y, -(b // g), a // g)
                continue
            row_dirty = [j for j in range(n) if j != t and D[t][j]]
            if row_dirty:
                for j in row_dirty:
                    a, b = D[t][t], D[t][j]
                    if b % a == 0:
                        col_combine(t, j, 1, 0, -(b // a), 1)
                    else:
                        g, x, y = xgcd(a, b)
                        col_combine(t, j, x, y, -(b // g), a // g)
                continue
            break

    for t in range(k):
        if D[t][t] < 0:
            for R in (D, U):
                R[t] = [-e for e in R[t]]

    def fix_pair(i, j):
        # replace diag entries (a, b) by (gcd, lcm) via a local 2x2 reduction
        a, b = D[i][i], D[j][j]
        col_combine(i, j, 1, 0, 1, 1)  # col_j += col_i
        g, x, y = xgcd(a, b)
        row_combine(i, j, x, y, -(b // g), a // g)
        col_swap(i, j)
        q = (x * a) // g  # exact: g divides a
        col_combine(i, j, 1, 0, -q, 1)  # col_j -= q * col_i
        if D[j][j] < 0:
            for r in D:
                r[j] = -r[j]
            for r in V:
                r[j] = -r[j]

    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if (a == 0 and b != 0) or (a != 0 and b % a != 0):
                fix_pair(i, i + 1)
                changed = True

    factors = tuple(D[i][i] for i in range(k))
    return SmithDecomposition(matrix(D), matrix(U), matrix(V), factors)


# ---------------------------------------------------------------------------
# kernels and lattice solving


def kernel_basis(A: IntMatrix) -> tuple[IntVector, ...]:
    """Basis of the integer kernel {x : A @ x == 0}, HNF-canonicalized."""
    A = matrix(A)
    if not A:
        raise ValueError("empty matrix")
    H, U = hermite_normal_form(transpose(A))
    rows = [U[i] for i in range(len(H)) if not any(H[i])]
    if not rows:
        return ()
    KH, _ = hermite_normal_form(matrix(rows))
    return tuple(r for r in KH if any(r))


def solve_in_row_lattice(rows, target) -> IntVector | None:
    """Integer c with sum(c[j] * rows[j]) == target, or None.

    The rows need not be independent; any valid coefficient vector is
    returned (a deterministic one).
    """
    rows = matrix(rows)
    if not rows:
        return None if any(target) else ()
    target = vector(target)
    H, U = hermite_normal_form(rows)
    y = [0] * len(rows)
    rem = list(target)
    for i, hrow in enumerate(H):
        pcol = next((j for j, e in enumerate(hrow) if e), None)
        if pcol is None:
            break
        if rem[pcol] % hrow[pcol] != 0:
            return None
        q = rem[pcol] // hrow[pcol]
        if q:
            rem = [s - q * t for s, t in zip(rem, hrow)]
        y[i] = q
    if any(rem):
        return None
    return vec_mat(tuple(y), U)


def solve_in_lattice(basis, v) -> IntVector | None:
    """Coordinates of v in the lattice spanned by an independent basis."""
    return solve_in_row_lattice(basis, v)


def solve_rational(A, b) -> tuple[Fraction, ...] | None:
    """One exact solution of A @ x == b over the rationals, or None.

    Free variables are set to zero, so full-column-rank systems get their
    unique solution.
    """
    A = matrix(A)
    m = len(A)
    n = len(A[0]) if A else 0
    aug = [[Fraction(e) for e in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [e / pv for e in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [e - f * g for e, g in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for rr, cc in pivots:
        x[cc] = aug[rr][n]
    return tuple(x)


def int_matrix_inverse(A: IntMatrix) -> IntMatrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    A = matrix(A)
    n = len(A)
    cols = []
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        x = solve_rational(A, e)
        if x is None:
            raise ValueError("matrix is singular")
        if any(f.denominator != 1 for f in x):
            raise ValueError("matrix is not unimodular")
        cols.append(tuple(int(f) for f in x))
    return transpose(matrix(cols))


# ---------------------------------------------------------------------------
# primitivity and prime factors


def primitive(v) -> IntVector:
    """v divided by the gcd of its entries; direction is preserved."""
    v = vector(v)
    g = 0
    for e in v:
        g = math.gcd(g, e)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(e // g for e in v)


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far past any input seen here."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_TRIAL_BOUND = 1000
_RHO_SEED = 0x5EED1A7  # fixed: factoring must be deterministic


def _pollard_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n."""
    while True:
        c = rng.randrange(1, n)
        x = rng.randrange(2, n)
        y = x
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def largest_prime_factor(n: int) -> int:
    """Largest prime dividing n; 0 for n == 1.  n must be positive."""
    if n <= 0:
        raise ValueError("positive integer required")
    best = 0
    for p in range(2, _TRIAL_BOUND + 1):
        while n % p == 0:
            best = p
            n //= p
        if n == 1:
            return best
    rng = random.Random(_RHO_SEED)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            best = max(best, m)
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return best
