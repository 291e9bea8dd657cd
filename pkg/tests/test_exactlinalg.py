"""Exact rank/kernel/RREF against an independent naive rational oracle."""

import random
from fractions import Fraction

import pytest

from lefschetz_props.exactlinalg import (
    ExactMatrix,
    kernel_basis,
    rank,
    rank_mod,
    row_reduce,
)

# primes above 2^31 for the modular cross-check (pure-Python path)
BIG_PRIMES = (2147483659, 2147483693)


def naive_rank(rows):
    """Straight rational Gaussian elimination, no fraction-free tricks."""
    a = [[Fraction(e) for e in r] for r in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = None
        for rr in range(r, nrows):
            if a[rr][c]:
                pivot = rr
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for rr in range(r + 1, nrows):
            if a[rr][c]:
                f = a[rr][c] / a[r][c]
                a[rr] = [x - f * y for x, y in zip(a[rr], a[r])]
        r += 1
    return r


def test_rank_examples():
    assert rank(ExactMatrix.identity(3)) == 3
    assert rank(ExactMatrix.zeros(5, 7)) == 0
    M = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert naive_rank(M.to_lists()) == 2
    assert rank(M) == 2


def test_rank_empty_dims():
    assert rank(ExactMatrix.zeros(0, 4)) == 0
    assert rank(ExactMatrix.zeros(4, 0)) == 0


def test_rank_fraction_entries():
    M = ExactMatrix.from_rows(
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 6)]]
    )
    assert rank(M) == 1


def test_rank_oracle_agreement_random():
    rng = random.Random(20240817)
    equal_mod = 0
    total_mod = 0
    for _ in range(500):
        nrows = rng.randint(1, 12)
        ncols = rng.randint(1, 12)
        rows = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
        M = ExactMatrix.from_rows(rows)
        r = rank(M)
        assert r == naive_rank(rows)
        assert kernel_basis(M).cols == ncols - r
        for p in BIG_PRIMES:
            rp = rank_mod(M, p)
            total_mod += 1
            assert rp <= r  # modular rank never exceeds the rational rank
            equal_mod += rp == r
    # entries are tiny compared to the primes: no discrepancies expected
    assert equal_mod == total_mod


def test_kernel_examples():
    assert kernel_basis(ExactMatrix.identity(4)).cols == 0
    K = kernel_basis(ExactMatrix.from_rows([[1, 1], [1, 1]]))
    assert K.cols == 1
    col = K.column(0)
    assert col[0] * (-1) == col[1] and col[0] != 0  # proportional to (1, -1)


def test_kernel_columns_annihilated():
    rng = random.Random(7)
    for _ in range(25):
        rows = [[rng.randint(-5, 5) for _ in range(6)] for _ in range(4)]
        M = ExactMatrix.from_rows(rows)
        K = kernel_basis(M)
        assert K.cols == 6 - rank(M)
        for j in range(K.cols):
            assert all(v == 0 for v in M.matvec(K.column(j)))


def test_row_reduce_examples():
    R, pivots = row_reduce(ExactMatrix.identity(3))
    assert R == ExactMatrix.identity(3)
    assert pivots == (0, 1, 2)
    R, pivots = row_reduce(ExactMatrix.from_rows([[0, 2], [0, 4]]))
    assert R == ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert pivots == (1,)


def test_row_reduce_idempotent_and_rank_preserving():
    rng = random.Random(11)
    for _ in range(25):
        rows = [[rng.randint(-6, 6) for _ in range(5)] for _ in range(5)]
        M = ExactMatrix.from_rows(rows)
        R, pivots = row_reduce(M)
        assert list(pivots) == sorted(pivots)
        assert len(pivots) == rank(M) == rank(R)
        R2, pivots2 = row_reduce(R)
        assert R2 == R and pivots2 == pivots


def test_from_rows_validation():
    with pytest.raises(ValueError):
        ExactMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(TypeError):
        ExactMatrix.from_rows([[1.5]])


def test_transpose_and_equality():
    M = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    T = M.transpose()
    assert (T.rows, T.cols) == (3, 2)
    assert T.transpose() == M
    assert rank(T) == rank(M)
