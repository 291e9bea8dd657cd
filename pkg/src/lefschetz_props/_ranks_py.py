"""Pure-Python rank kernels, call-compatible with the compiled extension.

The Bareiss path here runs on Python integers, so it never overflows and
never returns -1.  Input rows are not mutated.
"""

from __future__ import annotations


def rank_i64(rows, ncols: int) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    a = [list(row) for row in rows]
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for rr in range(r, nrows):
            if a[rr][c]:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        pivot_row = a[r]
        pivot = pivot_row[c]
        for rr in range(r + 1, nrows):
            row = a[rr]
            mult = row[c]
            for cc in range(c + 1, ncols):
                row[cc] = (pivot * row[cc] - mult * pivot_row[cc]) // prev
            row[c] = 0
        prev = pivot
        r += 1
    return r


def rank_mod(rows, ncols: int, p: int) -> int:
    """Rank of the matrix reduced modulo the prime p."""
    nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    a = [[e % p for e in row] for row in rows]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for rr in range(r, nrows):
            if a[rr][c]:
                pr = rr
                break
        if pr < 0:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        pivot_row = a[r]
        inv = pow(pivot_row[c], p - 2, p)
        for rr in range(r + 1, nrows):
            row = a[rr]
            f = row[c] * inv % p
            if f:
                for cc in range(c, ncols):
                    row[cc] = (row[cc] - f * pivot_row[cc]) % p
        r += 1
    return r
