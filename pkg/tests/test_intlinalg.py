import random

import pytest

from hslbound.intlinalg import (
    SmithDecomposition,
    det,
    hermite_normal_form,
    identity_matrix,
    int_matrix_inverse,
    is_prime,
    kernel_basis,
    largest_prime_factor,
    mat_mul,
    matrix_rank,
    primitive,
    smith_normal_form,
    solve_in_lattice,
    solve_in_row_lattice,
    solve_rational,
    transpose,
    vec_mat,
    xgcd,
)
from oracles import brute_kernel_vectors, brute_row_lattice, random_int_matrix


def assert_hnf_shape(H):
    pivots = []
    seen_zero = False
    for row in H:
        nz = next((j for j, e in enumerate(row) if e), None)
        if nz is None:
            seen_zero = True
            continue
        assert not seen_zero, "zero row above a nonzero row"
        assert row[nz] > 0
        if pivots:
            assert nz > pivots[-1][1]
        pivots.append((row, nz))
    for i, (_, col) in enumerate(pivots):
        p = pivots[i][0][col]
        for above, _ in pivots[:i]:
            assert 0 <= above[col] < p


def test_xgcd():
    for a, b in [(0, 0), (0, 5), (5, 0), (12, 18), (-12, 18), (7, -3)]:
        g, x, y = xgcd(a, b)
        assert g == x * a + y * b
        assert g >= 0


def test_hnf_identity():
    I = identity_matrix(2)
    H, U = hermite_normal_form(I)
    assert H == I and U == I


def test_hnf_full_lattice():
    # det of ((5,1),(4,1)) is 1, so the row lattice is all of Z^2
    A = ((5, 1), (4, 1))
    H, U = hermite_normal_form(A)
    assert mat_mul(U, A) == H
    assert H == identity_matrix(2)
    # brute check that the unit vectors really are integer combinations
    lat = brute_row_lattice(A, 6)
    assert (1, 0) in lat and (0, 1) in lat


def test_hnf_already_reduced():
    A = ((2, 0), (0, 4))
    H, _ = hermite_normal_form(A)
    assert H == A


def test_hnf_properties_random():
    rng = random.Random(1)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = random_int_matrix(rng, m, n, -9, 9)
        H, U = hermite_normal_form(A)
        assert mat_mul(U, A) == H
        assert abs(det(U)) == 1
        assert_hnf_shape(H)


def test_snf_examples():
    # off-diagonal gcd interplay: diag(2,3) has invariant factors (1,6)
    assert smith_normal_form(((2, 0), (0, 3))).invariant_factors == (1, 6)
    assert smith_normal_form(identity_matrix(3)).invariant_factors == (1, 1, 1)
    assert smith_normal_form(((0,),)).invariant_factors == (0,)


def assert_snf_valid(A, snf: SmithDecomposition):
    assert mat_mul(mat_mul(snf.u, A), snf.v) == snf.d
    assert abs(det(snf.u)) == 1
    assert abs(det(snf.v)) == 1
    k = min(len(A), len(A[0]))
    diag = [snf.d[i][i] for i in range(k)]
    assert snf.invariant_factors == tuple(diag)
    for i, r in enumerate(snf.d):
        for j, e in enumerate(r):
            if i != j:
                assert e == 0
    assert all(e >= 0 for e in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0


def test_snf_properties_random():
    rng = random.Random(2)
    for _ in range(200):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = random_int_matrix(rng, m, n, -9, 9)
        assert_snf_valid(A, smith_normal_form(A))


def test_kernel_examples():
    assert kernel_basis(((-1, 5),)) == ((5, 1),)
    assert kernel_basis(((4, -1),)) == ((1, 4),)
    assert kernel_basis(identity_matrix(3)) == ()


def test_kernel_spans_brute_solutions():
    rng = random.Random(3)
    for _ in range(100):
        m = rng.randint(1, 3)
        n = rng.randint(1, 4)
        A = random_int_matrix(rng, m, n, -4, 4)
        basis = kernel_basis(A)
        for b in basis:
            assert all(sum(row[j] * b[j] for j in range(n)) == 0 for row in A)
        assert len(basis) == n - matrix_rank(A)
        for x in brute_kernel_vectors(A, 2):
            assert solve_in_lattice(basis, x) is not None


def test_solve_in_lattice():
    assert solve_in_lattice(((5, 1), (1, 4)), (6, 5)) == (1, 1)
    assert solve_in_lattice(((2, 0),), (3, 0)) is None
    assert solve_in_lattice(((5, 1),), (15, 3)) == (3,)


def test_solve_in_row_lattice_dependent_rows():
    rows = ((2, 0), (4, 0), (0, 3))
    c = solve_in_row_lattice(rows, (6, 3))
    assert c is not None
    assert vec_mat(c, rows) == (6, 3)
    assert solve_in_row_lattice(rows, (1, 0)) is None


def test_solve_rational():
    x = solve_rational(((5, 1), (1, 4)), (1, 1))
    assert x is not None and (x[0].numerator, x[0].denominator) == (3, 19)
    assert (x[1].numerator, x[1].denominator) == (4, 19)
    assert solve_rational(((1, 0), (1, 0)), (0, 1)) is None


def test_int_matrix_inverse():
    U = ((2, 1), (1, 1))
    Ui = int_matrix_inverse(U)
    assert mat_mul(U, Ui) == identity_matrix(2)
    with pytest.raises(ValueError):
        int_matrix_inverse(((2, 0), (0, 2)))


def test_primitive():
    assert primitive((-2, 10)) == (-1, 5)
    assert primitive((4, -1)) == (4, -1)
    assert primitive((0, 7)) == (0, 1)
    with pytest.raises(ValueError):
        primitive((0, 0))


def test_primitive_scaling_property():
    rng = random.Random(4)
    for _ in range(100):
        v = tuple(rng.randint(-9, 9) for _ in range(3))
        if not any(v):
            continue
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        scaled = primitive(tuple(c * e for e in v))
        base = primitive(v)
        assert scaled == (base if c > 0 else tuple(-e for e in base))


def test_largest_prime_factor():
    assert largest_prime_factor(1) == 0
    assert largest_prime_factor(12) == 3
    assert largest_prime_factor(97) == 97
    with pytest.raises(ValueError):
        largest_prime_factor(0)
    # beyond the trial-division bound, exercising the rho fallback
    assert largest_prime_factor(1009 * 1013) == 1013
    assert largest_prime_factor(1009 * 1013) == 1013  # deterministic


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 53, 97, 1009}
    for n in range(2, 100):
        assert is_prime(n) == all(n % d for d in range(2, n)), n
    assert is_prime(1013) and not is_prime(1011)
    assert not is_prime(1) and not is_prime(0)
    assert all(is_prime(p) for p in primes)


def test_transpose_roundtrip():
    A = ((1, 2, 3), (4, 5, 6))
    assert transpose(transpose(A)) == A
