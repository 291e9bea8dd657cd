"""Hilbert-function admissibility and the force-WLP / force-SLP classifiers.

A sequence is admissible when every step obeys the binomial growth bound.
The classifiers work on the abstract sequence alone; the embedding dimension
is read off as h_1.  Empty condition ranges (t = 1) are vacuously true.
"""

from __future__ import annotations

from .combinatorics import macaulay_growth, macaulay_lower

HilbertSequence = tuple[int, ...]


def _validated(H) -> HilbertSequence:
    seq = tuple(int(h) for h in H)
    if not seq or seq[0] != 1:
        raise ValueError("sequence must start with h_0 = 1")
    if any(h < 0 for h in seq):
        raise ValueError("entries must be nonnegative")
    return seq


def is_o_sequence(H) -> bool:
    """Admissibility as a Hilbert function: h_{i+1} <= growth(h_i, i) for all
    i >= 1 (h_1 is unconstrained)."""
    seq = _validated(H)
    for i in range(1, len(seq) - 1):
        if seq[i + 1] > macaulay_growth(seq[i], i):
            return False
    return True


def t_index(H) -> int:
    """Smallest t >= 1 with h_t <= t; exists because the sequence ends in 0."""
    seq = _validated(H)
    for t in range(1, len(seq)):
        if seq[t] <= t:
            return t
    return len(seq)  # implied trailing zero


def _chain_holds(seq: HilbertSequence, t: int) -> bool:
    # h_{i-1} must equal the (-1,-1) shift of the i-binomial expansion of h_i
    for i in range(1, t):
        if seq[i - 1] != macaulay_lower(seq[i], i):
            return False
    return True


def forces_wlp(H) -> bool:
    """Whether every artinian algebra with this Hilbert function has the WLP."""
    seq = _validated(H)
    if not is_o_sequence(seq):
        raise ValueError("sequence is not admissible")
    return _chain_holds(seq, t_index(seq))


def forces_slp(H) -> bool:
    """Whether every artinian algebra with this Hilbert function has the SLP.

    Embedding dimension at most two always forces the SLP; beyond that the
    value at the t-index must be at most two and the WLP chain must hold.
    """
    seq = _validated(H)
    if not is_o_sequence(seq):
        raise ValueError("sequence is not admissible")
    n = seq[1] if len(seq) > 1 else 0
    if n <= 2:
        return True
    t = t_index(seq)
    h_t = seq[t] if t < len(seq) else 0
    return h_t <= 2 and _chain_holds(seq, t)
