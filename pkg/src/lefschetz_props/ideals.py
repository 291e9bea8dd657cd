"""Monomial and form ideals: graded pieces, Hilbert functions, socle degree,
and degreewise initial ideals.

Graded pieces of a monomial ideal are computed by degree-by-degree
divisibility propagation over the cached monomial bases, stored as bitmasks.
Form ideals never go through a Groebner engine: for an ideal with minimal
generator degree d, the degree-k piece is the explicit span of all
monomial-times-generator products, row reduced once per (degree, term order)
and cached.  Ideals are immutable after construction and their caches only
grow, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    Monomial,
    basis_index,
    basis_size,
    monomial_basis,
)
from .errors import CapExceededError, NotArtinianError
from .exactlinalg import ExactMatrix, row_reduce

TERM_ORDERS = ("degrevlex", "lex", "grlex")

SOCLE_CAP_MARGIN = 8


def divides(g: Monomial, m: Monomial) -> bool:
    return all(ge <= me for ge, me in zip(g, m))


@lru_cache(maxsize=None)
def _parent_table(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """For each degree-k monomial, the indices of its degree-(k-1) divisors."""
    idx_prev = basis_index(n, k - 1)
    table = []
    for m in monomial_basis(n, k):
        parents = []
        for t in range(n):
            if m[t] > 0:
                parents.append(idx_prev[m[:t] + (m[t] - 1,) + m[t + 1:]])
        table.append(tuple(parents))
    return tuple(table)


@lru_cache(maxsize=None)
def ordered_basis(n: int, k: int, order: str) -> tuple[tuple[Monomial, ...], dict]:
    """Degree-k monomials sorted descending by the term order, plus index map.

    Only a total order within one degree is needed, so grlex coincides with
    lex here, and degrevlex descending is exactly the canonical basis order.
    """
    if order not in TERM_ORDERS:
        raise ValueError(f"unknown term order {order!r}")
    base = monomial_basis(n, k)
    if order == "degrevlex":
        mons = base
    else:  # lex / grlex agree within a fixed degree
        mons = tuple(sorted(base, reverse=True))
    return mons, {m: i for i, m in enumerate(mons)}


# ---------------------------------------------------------------------------
# monomial ideals


class MonomialIdeal:
    """Ideal generated by monomials; generators kept divisibility-minimal."""

    __slots__ = ("n", "generators", "_masks", "_hf")

    def __init__(self, n: int, generators):
        gens = []
        for g in generators:
            g = tuple(int(e) for e in g)
            if len(g) != n:
                raise ValueError(f"generator {g} has arity {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
            if sum(g) == 0:
                raise ValueError("constant monomial cannot be a generator")
            gens.append(g)
        gens = _minimal_subset(set(gens))
        gens.sort(key=lambda g: (sum(g), basis_index(n, sum(g))[g]))
        self.n = n
        self.generators = tuple(gens)
        self._masks: dict[int, int] = {}
        self._hf: dict[int, int] = {}

    @property
    def min_degree(self) -> int | None:
        """Minimal generator degree; None for the zero ideal."""
        if not self.generators:
            return None
        return sum(self.generators[0])

    @property
    def max_degree(self) -> int | None:
        if not self.generators:
            return None
        return sum(self.generators[-1])

    def is_equigenerated(self) -> bool:
        return bool(self.generators) and self.min_degree == self.max_degree

    def degree_mask(self, k: int) -> int:
        """Bitmask over monomial_basis(n, k): bit set iff the monomial lies
        in the ideal.  I_k = S_1 * I_{k-1} + (degree-k generators), filled
        degree by degree from the minimal generator degree."""
        if k < 0:
            raise ValueError("degree must be nonnegative")
        cached = self._masks.get(k)
        if cached is not None:
            return cached
        lo = self.min_degree
        if lo is None or k < lo:
            self._masks[k] = 0
            return 0
        for deg in range(lo, k + 1):
            if deg in self._masks:
                continue
            mask = 0
            if deg > lo:
                prev = self._masks[deg - 1]
                if prev:
                    for idx, parents in enumerate(_parent_table(self.n, deg)):
                        for p in parents:
                            if (prev >> p) & 1:
                                mask |= 1 << idx
                                break
            idxmap = basis_index(self.n, deg)
            for g in self.generators:
                if sum(g) == deg:
                    mask |= 1 << idxmap[g]
            self._masks[deg] = mask
        return self._masks[k]

    def hf(self, k: int) -> int:
        cached = self._hf.get(k)
        if cached is None:
            cached = basis_size(self.n, k) - self.degree_mask(k).bit_count()
            self._hf[k] = cached
        return cached

    def standard_monomials(self, k: int) -> tuple[Monomial, ...]:
        mask = self.degree_mask(k)
        return tuple(
            m for i, m in enumerate(monomial_basis(self.n, k)) if not (mask >> i) & 1
        )

    def pure_power_degrees(self) -> dict[int, int]:
        """Variable index -> degree of its pure-power generator, if any."""
        out: dict[int, int] = {}
        for g in self.generators:
            nz = [t for t in range(self.n) if g[t] > 0]
            if len(nz) == 1:
                out[nz[0]] = g[nz[0]]
        return out

    def generator_strings(self) -> list[str]:
        from .parsing import format_monomial

        return [format_monomial(g, "x") for g in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.generators == other.generators

    def __hash__(self):
        return hash((self.n, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={len(self.generators)})"


def _minimal_subset(mons: set[Monomial]) -> list[Monomial]:
    by_degree = sorted(mons, key=sum)
    kept: list[Monomial] = []
    for m in by_degree:
        if not any(divides(g, m) for g in kept if sum(g) < sum(m)):
            kept.append(m)
    return kept


def minimalize(monomials) -> MonomialIdeal:
    """Divisibility-minimal generating set for the given monomials."""
    mons = list(monomials)
    if not mons:
        raise ValueError("need at least one monomial")
    n = len(mons[0])
    return MonomialIdeal(n, mons)


# ---------------------------------------------------------------------------
# form ideals


class FormIdeal:
    """Ideal generated by homogeneous polynomials with exact coefficients."""

    __slots__ = ("n", "generators", "_pieces")

    def __init__(self, n: int, generators):
        gens = []
        for g in generators:
            terms = dict(g)
            clean: dict[Monomial, Fraction] = {}
            deg = None
            for mon, coeff in terms.items():
                mon = tuple(int(e) for e in mon)
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                if len(mon) != n or any(e < 0 for e in mon):
                    raise ValueError(f"bad monomial {mon} for arity {n}")
                if deg is None:
                    deg = sum(mon)
                elif sum(mon) != deg:
                    raise ValueError("generator is not homogeneous")
                clean[mon] = coeff
            if not clean:
                raise ValueError("zero generator")
            if deg < 1:
                raise ValueError("generators must have degree at least 1")
            items = tuple(sorted(clean.items(), key=lambda kv: basis_index(n, deg)[kv[0]]))
            gens.append((deg, items))
        if not gens:
            raise ValueError("need at least one generator")
        gens.sort(key=lambda g: g[0])
        self.n = n
        self.generators = tuple(gens)
        self._pieces: dict[tuple[int, str], _FormPiece] = {}

    @property
    def min_degree(self) -> int:
        return self.generators[0][0]

    def piece(self, k: int, order: str = "degrevlex") -> "_FormPiece":
        key = (k, order)
        cached = self._pieces.get(key)
        if cached is None:
            cached = _build_form_piece(self, k, order)
            self._pieces[key] = cached
        return cached

    def hf(self, k: int, order: str = "degrevlex") -> int:
        return len(self.piece(k, order).standard)

    def standard_monomials(self, k: int, order: str = "degrevlex") -> tuple[Monomial, ...]:
        return self.piece(k, order).standard

    def generator_strings(self) -> list[str]:
        from .parsing import format_terms

        return [format_terms(items, "x") for _, items in self.generators]

    def __repr__(self) -> str:
        return f"FormIdeal(n={self.n}, gens={len(self.generators)})"


@dataclass(frozen=True)
class _FormPiece:
    """Row-reduced degree-k span of a form ideal under one term order."""

    degree: int
    order: str
    columns: tuple[Monomial, ...]      # descending by the term order
    col_index: dict
    rref_rows: tuple[tuple, ...]       # normalized rows over the columns
    pivots: tuple[int, ...]
    leads: tuple[Monomial, ...]        # pivot monomials = leading monomials
    standard: tuple[Monomial, ...]     # canonical basis order


def _build_form_piece(I: FormIdeal, k: int, order: str) -> _FormPiece:
    cols, col_index = ordered_basis(I.n, k, order)
    rows: list[list] = []
    for deg, items in I.generators:
        if deg > k:
            continue
        for m in monomial_basis(I.n, k - deg):
            row = [0] * len(cols)
            for mon, coeff in items:
                prod = tuple(a + b for a, b in zip(mon, m))
                row[col_index[prod]] = coeff
            rows.append(row)
    if rows:
        rref, pivots = row_reduce(ExactMatrix(len(rows), len(cols), rows))
        rref_rows = tuple(rref.row(i) for i in range(len(pivots)))
    else:
        rref_rows, pivots = (), ()
    pivot_set = set(pivots)
    leads = tuple(cols[c] for c in pivots)
    standard_set = {cols[c] for c in range(len(cols)) if c not in pivot_set}
    standard = tuple(m for m in monomial_basis(I.n, k) if m in standard_set)
    return _FormPiece(k, order, cols, col_index, rref_rows, pivots, leads, standard)


def reduce_mod_piece(piece: _FormPiece, vec: list) -> list:
    """Reduce a coefficient vector (in the piece's column order) modulo the
    row-reduced span; the result is supported on standard monomials."""
    v = list(vec)
    for row, c in zip(piece.rref_rows, piece.pivots):
        f = v[c]
        if f:
            for cc in range(c, len(v)):
                if row[cc]:
                    v[cc] -= f * row[cc]
    return v


# ---------------------------------------------------------------------------
# shared operations


@dataclass(frozen=True)
class GradedPiece:
    """Degree-k data of a quotient: standard monomials, plus span data for
    form ideals (row-reduced basis of the ideal's degree-k span)."""

    degree: int
    standard_monomials: tuple[Monomial, ...]
    span: ExactMatrix | None = None
    pivot_monomials: tuple[Monomial, ...] = ()


def is_artinian(I, cap: int | None = None) -> bool:
    """Finite dimensionality of S/I.

    Monomial case: every variable must carry a pure-power generator (exact,
    no search).  Form case: the Hilbert function must vanish at or below the
    socle cap; if it has not vanished by then the test is indeterminate and
    CapExceededError is raised.
    """
    if isinstance(I, MonomialIdeal):
        return len(I.pure_power_degrees()) == I.n
    cap = default_socle_cap(I) if cap is None else cap
    for k in range(cap + 2):
        if I.hf(k) == 0:
            return True
    raise CapExceededError(
        f"Hilbert function still positive at degree {cap + 1}; raise the cap"
    )


def default_socle_cap(I) -> int:
    """n*(d_max - 1) + margin; the monomial complete intersection attains
    n*(d-1), so this covers every admissible input with room to spare."""
    if isinstance(I, MonomialIdeal):
        dmax = I.max_degree or 1
    else:
        dmax = max(deg for deg, _ in I.generators)
    return I.n * (dmax - 1) + SOCLE_CAP_MARGIN


def graded_piece(I, k: int, order: str = "degrevlex") -> GradedPiece:
    """Standard monomials (and, for form ideals, the reduced span) in degree k."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if isinstance(I, MonomialIdeal):
        return GradedPiece(k, I.standard_monomials(k))
    piece = I.piece(k, order)
    span = ExactMatrix(
        len(piece.rref_rows), len(piece.columns), [list(r) for r in piece.rref_rows]
    )
    return GradedPiece(k, piece.standard, span, piece.leads)


def hilbert_function(I, upto: int, order: str = "degrevlex") -> tuple[int, ...]:
    """h_0, ..., h_upto of S/I."""
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    if isinstance(I, MonomialIdeal):
        return tuple(I.hf(k) for k in range(upto + 1))
    return tuple(I.hf(k, order) for k in range(upto + 1))


def socle_degree(I, cap: int | None = None) -> int:
    """Largest e with HF(S/I, e) > 0; requires an artinian ideal.

    The quotient is standard graded, so the scan stops at the first zero.
    """
    if not is_artinian(I, cap=cap):
        raise NotArtinianError("socle degree needs an artinian ideal")
    cap = default_socle_cap(I) if cap is None else cap
    e = 0
    for k in range(cap + 2):
        h = I.hf(k)
        if h == 0:
            return k - 1
        e = k
    raise CapExceededError(f"no vanishing up to degree {cap + 1}")


def initial_ideal_degreewise(
    I: FormIdeal, order: str = "degrevlex", upto: int = 0
) -> dict[int, tuple[Monomial, ...]]:
    """Leading monomials of each graded span I_k for k <= upto.

    For artinian ideals with known minimal generator degree the degreewise
    spans are complete, so no Groebner computation is involved; by rank,
    |leads(k)| = HF(S, k) - HF(S/I, k) in every degree.
    """
    if upto < I.min_degree:
        raise ValueError("upto must reach the minimal generator degree")
    out: dict[int, tuple[Monomial, ...]] = {}
    for k in range(upto + 1):
        out[k] = I.piece(k, order).leads if k >= I.min_degree else ()
    return out


def monomial_ideal_from_leads(
    leads: dict[int, tuple[Monomial, ...]], n: int
) -> MonomialIdeal:
    """Minimalized monomial ideal generated by all degreewise leads."""
    gens = [m for mons in leads.values() for m in mons]
    if not gens:
        raise ValueError("no leading monomials given")
    return MonomialIdeal(n, gens)
