"""Compiled and pure rank kernels must agree, including across the overflow
bailout of the compiled path."""

import random

import pytest

from lefschetz_props import _kernels, _ranks_py

compiled = pytest.importorskip("lefschetz_props._core") if _kernels.COMPILED_AVAILABLE else None

needs_compiled = pytest.mark.skipif(
    not _kernels.COMPILED_AVAILABLE, reason="compiled extension not built"
)


@needs_compiled
def test_backends_agree_small():
    rng = random.Random(99)
    for _ in range(300):
        nrows = rng.randint(1, 10)
        ncols = rng.randint(1, 10)
        rows = [[rng.randint(-20, 20) for _ in range(ncols)] for _ in range(nrows)]
        rc = compiled.rank_i64(rows, ncols)
        rp = _ranks_py.rank_i64(rows, ncols)
        assert rc == rp
        assert compiled.rank_mod(rows, ncols, 2147483647) == _ranks_py.rank_mod(
            rows, ncols, 2147483647
        )


@needs_compiled
def test_compiled_bails_on_huge_inputs():
    rows = [[2**70, 1], [1, 1]]
    assert compiled.rank_i64(rows, 2) == -1
    assert _kernels.rank_int_rows(rows, 2) == 2


@needs_compiled
def test_compiled_bails_on_intermediate_growth():
    # 25x25 with entries up to 99: Bareiss minors overflow 62 bits mid-way
    rng = random.Random(4)
    rows = [[rng.randint(-99, 99) for _ in range(25)] for _ in range(25)]
    assert compiled.rank_i64(rows, 25) == -1
    assert _kernels.rank_int_rows(rows, 25) == _ranks_py.rank_i64(rows, 25)


def test_dispatcher_matches_pure():
    rng = random.Random(5)
    for _ in range(100):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
        assert _kernels.rank_int_rows(rows, ncols) == _ranks_py.rank_i64(rows, ncols)


def test_pure_kernel_does_not_mutate_input():
    rows = [[1, 2], [3, 4]]
    _ranks_py.rank_i64(rows, 2)
    _ranks_py.rank_mod(rows, 2, 97)
    assert rows == [[1, 2], [3, 4]]


def test_mod_rank_is_lower_bound():
    rng = random.Random(12)
    for _ in range(100):
        rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)]
        assert _kernels.rank_mod_rows(rows, 6) <= _ranks_py.rank_i64(rows, 6)
