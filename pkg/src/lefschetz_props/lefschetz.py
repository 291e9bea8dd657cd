"""Multiplication-map matrices and the Lefschetz-property deciders.

Monomial quotients are decided with the all-ones linear form, which suffices
for monomial algebras; form quotients use seeded random trial forms, with the
per-map convention that maximal rank achieved in any trial stands (specializing
a form can only drop rank) and a failure is only reported when every trial
fails.  Every reported rank is exact: the modular fast path is used solely to
certify maximal rank (a modular rank is a lower bound), and anything smaller
is recomputed with fraction-free exact elimination.

Maps whose source and target both sit below the minimal generator degree are
multiplication maps of the full polynomial ring; those are injective, hence
recorded as maximal without building a matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import _kernels
from .combinatorics import basis_index, basis_size, monomial_basis, multinomial
from .exactlinalg import ExactMatrix
from .ideals import FormIdeal, MonomialIdeal, reduce_mod_piece, socle_degree
from .reporting import LefschetzReport, PairRecord

DEFAULT_TRIALS = 3
DEFAULT_COEFF_BOUND = 1000
DEFAULT_SEED = 1


@dataclass(frozen=True)
class LinearForm:
    """Linear form given by its coefficient vector (not all zero)."""

    coefficients: tuple

    def __post_init__(self):
        if not self.coefficients or all(c == 0 for c in self.coefficients):
            raise ValueError("linear form must be nonzero")

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def is_ones(self) -> bool:
        return all(c == 1 for c in self.coefficients)


def ones_form(n: int) -> LinearForm:
    return LinearForm((1,) * n)


def random_linear_form(n: int, seed: int, bound: int = DEFAULT_COEFF_BOUND) -> LinearForm:
    """Integer coefficients uniform in [1, bound]; deterministic in the seed."""
    if bound < 2:
        raise ValueError("coefficient bound must be at least 2")
    rng = random.Random(seed)
    return LinearForm(tuple(rng.randint(1, bound) for _ in range(n)))


@lru_cache(maxsize=None)
def _ell_offsets(n: int, i: int) -> tuple:
    """(offset exponent, multinomial weight) pairs in the expansion of the
    i-th power of a generic linear form."""
    return tuple((c, multinomial(i, c)) for c in monomial_basis(n, i))


@lru_cache(maxsize=None)
def _ones_columns(n: int, j: int, i: int) -> tuple:
    """Sparse columns of multiplication by the all-ones form's i-th power on
    the full ring: source basis index -> ((target index, weight), ...)."""
    tgt_index = basis_index(n, j + i)
    offsets = _ell_offsets(n, i)
    cols = []
    for a in monomial_basis(n, j):
        col = tuple(
            (tgt_index[tuple(x + y for x, y in zip(a, c))], w) for c, w in offsets
        )
        cols.append(col)
    return tuple(cols)


def _weighted_offsets(n: int, i: int, coefficients) -> list:
    out = []
    for c, w in _ell_offsets(n, i):
        weight = Fraction(w)
        for t, e in enumerate(c):
            if e:
                weight *= Fraction(coefficients[t]) ** e
        if weight:
            out.append((c, weight))
    return out


def _build_monomial_rows(I: MonomialIdeal, ell: LinearForm, i: int, j: int):
    """Rows of the quotient multiplication map; returns (rows, nrows, ncols,
    integral flag)."""
    n = I.n
    mask_j = I.degree_mask(j)
    mask_ji = I.degree_mask(j + i)
    src = [gi for gi in range(basis_size(n, j)) if not (mask_j >> gi) & 1]
    nt = basis_size(n, j + i)
    rowmap = [-1] * nt
    r = 0
    for gi in range(nt):
        if not (mask_ji >> gi) & 1:
            rowmap[gi] = r
            r += 1
    nrows, ncols = r, len(src)
    rows = [[0] * ncols for _ in range(nrows)]
    if ell.is_ones():
        cols = _ones_columns(n, j, i)
        for ci, gi in enumerate(src):
            for tg, w in cols[gi]:
                rr = rowmap[tg]
                if rr >= 0:
                    rows[rr][ci] = w
        return rows, nrows, ncols, True
    offsets = _weighted_offsets(n, i, ell.coefficients)
    tgt_index = basis_index(n, j + i)
    base = monomial_basis(n, j)
    integral = all(w.denominator == 1 for _, w in offsets)
    for ci, gi in enumerate(src):
        a = base[gi]
        for c, w in offsets:
            rr = rowmap[tgt_index[tuple(x + y for x, y in zip(a, c))]]
            if rr >= 0:
                rows[rr][ci] += int(w) if integral else w
    return rows, nrows, ncols, integral


def _build_form_rows(I: FormIdeal, ell: LinearForm, i: int, j: int, order: str):
    """Quotient multiplication map for a form ideal: expand, reduce each
    column modulo the row-reduced span, project onto standard monomials."""
    pj = I.piece(j, order)
    pji = I.piece(j + i, order)
    src = pj.standard
    tgt_cols = [pji.col_index[m] for m in pji.standard]
    nrows, ncols = len(tgt_cols), len(src)
    offsets = _weighted_offsets(I.n, i, ell.coefficients)
    rows = [[0] * ncols for _ in range(nrows)]
    for ci, a in enumerate(src):
        vec = [0] * len(pji.columns)
        for c, w in offsets:
            vec[pji.col_index[tuple(x + y for x, y in zip(a, c))]] += w
        vec = reduce_mod_piece(pji, vec)
        for rr, cpos in enumerate(tgt_cols):
            rows[rr][ci] = vec[cpos]
    return rows, nrows, ncols, False


def _build_rows(I, ell: LinearForm, i: int, j: int, order: str):
    if isinstance(I, MonomialIdeal):
        return _build_monomial_rows(I, ell, i, j)
    return _build_form_rows(I, ell, i, j, order)


def mult_map_matrix(
    I, ell: LinearForm | None, i: int, j: int, order: str = "degrevlex"
) -> ExactMatrix:
    """Matrix of multiplication by the i-th power of ell from degree j to
    degree j+i, rows indexed by the target standard monomials."""
    if i < 1 or j < 0:
        raise ValueError("need i >= 1 and j >= 0")
    ell = ones_form(I.n) if ell is None else ell
    rows, nrows, ncols, _ = _build_rows(I, ell, i, j, order)
    return ExactMatrix(nrows, ncols, rows)


def _scaled_int_rows(rows) -> list:
    out = []
    for r in rows:
        denom = 1
        for e in r:
            if isinstance(e, Fraction) and e.denominator != 1:
                denom = lcm(denom, e.denominator)
        out.append([int(e * denom) for e in r] if denom != 1 else [int(e) for e in r])
    return out


def _rank_for_pair(rows, nrows, ncols, integral, fast):
    """Exact rank; in fast mode a modular rank equal to min(dims) certifies
    maximality, otherwise the exact kernel decides."""
    m = min(nrows, ncols)
    if m == 0:
        return 0
    if not integral:
        rows = _scaled_int_rows(rows)
    if fast:
        rp = _kernels.rank_mod_rows(rows, ncols)
        if rp == m:
            return m
    return _kernels.rank_int_rows(rows, ncols)


def has_maximal_rank(
    I, ell: LinearForm | None, i: int, j: int, *, fast: bool = True,
    order: str = "degrevlex",
) -> tuple[bool, int]:
    """Whether multiplication by ell^i from degree j has maximal rank; the
    exact rank is returned alongside."""
    ell = ones_form(I.n) if ell is None else ell
    rows, nrows, ncols, integral = _build_rows(I, ell, i, j, order)
    r = _rank_for_pair(rows, nrows, ncols, integral, fast)
    return r == min(nrows, ncols), r


def _resolve_mode(I, mode: str | None) -> str:
    if mode in (None, "auto"):
        return "exact" if isinstance(I, MonomialIdeal) else "randomized"
    if mode not in ("exact", "randomized"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def _trial_forms(n: int, seed: int, trials: int, bound: int):
    seeds = tuple(seed + t for t in range(trials))
    return [random_linear_form(n, s, bound) for s in seeds], seeds


def _min_gen_degree(I) -> int | None:
    return I.min_degree


def _pair_via_forms(I, forms, i, j, order, fast) -> PairRecord:
    """Per-map randomized record: best exact rank over the trial forms."""
    best = -1
    dims = None
    for ell in forms:
        rows, nrows, ncols, integral = _build_rows(I, ell, i, j, order)
        dims = (ncols, nrows)
        m = min(nrows, ncols)
        r = _rank_for_pair(rows, nrows, ncols, integral, fast)
        if r > best:
            best = r
        if r == m:
            break
    return PairRecord(i, j, dims[0], dims[1], best, best == min(dims))


def _pair_exact(I, ell, i, j, order, fast) -> PairRecord:
    rows, nrows, ncols, integral = _build_rows(I, ell, i, j, order)
    r = _rank_for_pair(rows, nrows, ncols, integral, fast)
    return PairRecord(i, j, ncols, nrows, r, r == min(nrows, ncols))


def _scan_pairs(
    I, pair_list, mode, ell, forms, order, fast, early_stop
) -> tuple[list[PairRecord], tuple[int, int] | None]:
    """Evaluate (i, j) pairs in the given order; free pairs (both degrees
    below the minimal generator degree, or zero target) skip the matrix."""
    d = _min_gen_degree(I)
    n = I.n
    records: list[PairRecord] = []
    witness = None
    for i, j in pair_list:
        hj = I.hf(j)
        hji = I.hf(j + i)
        if hji == 0:
            records.append(PairRecord(i, j, hj, 0, 0, True))
            continue
        if d is not None and j + i < d:
            # full polynomial ring below the generators: injective
            records.append(PairRecord(i, j, hj, hji, hj, True))
            continue
        if hj == 0:
            records.append(PairRecord(i, j, 0, hji, 0, True))
            continue
        if mode == "randomized":
            rec = _pair_via_forms(I, forms, i, j, order, fast)
        else:
            rec = _pair_exact(I, ell, i, j, order, fast)
        records.append(rec)
        if not rec.maximal and witness is None:
            witness = (i, j)
            if early_stop:
                break
    return records, witness


def check_wlp(
    I,
    mode: str | None = None,
    *,
    ell: LinearForm | None = None,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    fast: bool = True,
    early_stop: bool = False,
    order: str = "degrevlex",
) -> LefschetzReport:
    """Weak Lefschetz check: multiplication from every degree up to the socle
    must have maximal rank."""
    mode = _resolve_mode(I, mode)
    e = socle_degree(I)
    pair_list = [(1, j) for j in range(e + 1)]
    forms, seeds = ([], ())
    if mode == "randomized":
        forms, seeds = _trial_forms(I.n, seed, trials, coeff_bound)
        used_ell = None
    else:
        used_ell = ones_form(I.n) if ell is None else ell
    records, witness = _scan_pairs(
        I, pair_list, mode, used_ell, forms, order, fast, early_stop
    )
    return LefschetzReport(
        property="WLP",
        verdict=witness is None,
        method="full",
        mode=mode,
        pairs=tuple(records),
        witness=witness,
        ell=None if used_ell is None else used_ell.coefficients,
        seeds=seeds,
        trials=len(seeds),
    )


def check_slp(
    I,
    mode: str | None = None,
    *,
    ell: LinearForm | None = None,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    fast: bool = True,
    early_stop: bool = False,
    order: str = "degrevlex",
) -> LefschetzReport:
    """Strong Lefschetz check: every power map between nonzero graded pieces
    must have maximal rank; pairs scanned in lexicographic (i, j) order."""
    mode = _resolve_mode(I, mode)
    e = socle_degree(I)
    pair_list = [(i, j) for i in range(1, e + 1) for j in range(e - i + 1)]
    forms, seeds = ([], ())
    if mode == "randomized":
        forms, seeds = _trial_forms(I.n, seed, trials, coeff_bound)
        used_ell = None
    else:
        used_ell = ones_form(I.n) if ell is None else ell
    records, witness = _scan_pairs(
        I, pair_list, mode, used_ell, forms, order, fast, early_stop
    )
    return LefschetzReport(
        property="SLP",
        verdict=witness is None,
        method="full",
        mode=mode,
        pairs=tuple(records),
        witness=witness,
        ell=None if used_ell is None else used_ell.coefficients,
        seeds=seeds,
        trials=len(seeds),
    )


def check_power(
    I,
    i: int,
    mode: str | None = None,
    *,
    ell: LinearForm | None = None,
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
    fast: bool = True,
    early_stop: bool = False,
    order: str = "degrevlex",
) -> LefschetzReport:
    """Full check that multiplication by the i-th power has maximal rank in
    every degree."""
    if i < 1:
        raise ValueError("power must be positive")
    mode = _resolve_mode(I, mode)
    e = socle_degree(I)
    pair_list = [(i, j) for j in range(max(e - i + 1, 0))]
    forms, seeds = ([], ())
    if mode == "randomized":
        forms, seeds = _trial_forms(I.n, seed, trials, coeff_bound)
        used_ell = None
    else:
        used_ell = ones_form(I.n) if ell is None else ell
    records, witness = _scan_pairs(
        I, pair_list, mode, used_ell, forms, order, fast, early_stop
    )
    return LefschetzReport(
        property="power",
        verdict=witness is None,
        method="full",
        mode=mode,
        pairs=tuple(records),
        witness=witness,
        power=i,
        ell=None if used_ell is None else used_ell.coefficients,
        seeds=seeds,
        trials=len(seeds),
    )


def check_power_shortcut(
    I: MonomialIdeal, i: int, *, fast: bool = True
) -> LefschetzReport:
    """Decide everywhere-maximal rank of the i-th power map from the single
    surjectivity test in degree d-i.

    Valid for monomial ideals with minimal generator degree d >= 2 when
    1 <= i <= d-1 and HF(R, d-i) >= HF(R, d); outside the gate the full check
    runs instead and the fallback is recorded, never silent.
    """
    if not isinstance(I, MonomialIdeal):
        raise TypeError("the shortcut applies to monomial ideals")
    if i < 1:
        raise ValueError("power must be positive")
    d = I.min_degree
    gate = d is not None and d >= 2 and i <= d - 1 and I.hf(d - i) >= I.hf(d)
    if not gate:
        rep = check_power(I, i, "exact", fast=fast)
        rep.method = "full"
        rep.fallback = True
        return rep
    ell = ones_form(I.n)
    rows, nrows, ncols, integral = _build_rows(I, ell, i, d - i, "degrevlex")
    r = _rank_for_pair(rows, nrows, ncols, integral, fast)
    surjective = r == nrows
    pair = PairRecord(i, d - i, ncols, nrows, r, r == min(nrows, ncols))
    return LefschetzReport(
        property="power",
        verdict=surjective,
        method="shortcut",
        mode="exact",
        pairs=(pair,),
        witness=None if surjective else (i, d - i),
        power=i,
        ell=ell.coefficients,
    )


def check_slp_shortcut(I: MonomialIdeal, *, fast: bool = True) -> LefschetzReport:
    """Decide the SLP from the single surjectivity test of the (d-1)-st power
    from degree 1 to degree d.

    Valid for monomial ideals with minimal generator degree d >= 2 when
    HF(R, 1) >= HF(R, d); outside the gate the full SLP check runs and the
    fallback is recorded.
    """
    if not isinstance(I, MonomialIdeal):
        raise TypeError("the shortcut applies to monomial ideals")
    d = I.min_degree
    gate = d is not None and d >= 2 and I.hf(1) >= I.hf(d)
    if not gate:
        rep = check_slp(I, "exact", fast=fast)
        rep.fallback = True
        return rep
    ell = ones_form(I.n)
    rows, nrows, ncols, integral = _build_rows(I, ell, d - 1, 1, "degrevlex")
    r = _rank_for_pair(rows, nrows, ncols, integral, fast)
    surjective = r == nrows
    pair = PairRecord(d - 1, 1, ncols, nrows, r, r == min(nrows, ncols))
    return LefschetzReport(
        property="SLP",
        verdict=surjective,
        method="shortcut",
        mode="exact",
        pairs=(pair,),
        witness=None if surjective else (d - 1, 1),
        ell=ell.coefficients,
    )
