"""Weighted factorization lengths, w-orderings, weighted delta sets, and the
quasilinear recurrences of the extreme weighted length functions.

Weights are exact rationals; every result is a Fraction (or int where the
value is integral by construction).  All functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .factorizations import betti_elements, factorizations
from .semigroup import Semigroup


def rational_gcd(values) -> Fraction:
    """gcd of exact rationals: clear to the common denominator, gcd the
    numerators.  Zeros are ignored; gcd of nothing is 0."""
    vals = [abs(Fraction(v)) for v in values if v]
    if not vals:
        return Fraction(0)
    den = reduce(lcm, (v.denominator for v in vals))
    num = reduce(gcd, (v.numerator * (den // v.denominator) for v in vals))
    return Fraction(num, den)


def _check_weights(S: Semigroup, w) -> tuple[Fraction, ...]:
    ws = tuple(Fraction(x) for x in w)
    if len(ws) != S.k:
        raise ValueError(f"{len(ws)} weights for {S.k} generators")
    return ws


def weighted_length(z, w) -> Fraction:
    """Dot product of an exponent vector with a weight vector, exact."""
    if len(z) != len(w):
        raise ValueError(f"dimension mismatch: {len(z)} exponents, {len(w)} weights")
    return sum((Fraction(wi) * zi for wi, zi in zip(w, z)), Fraction(0))


@dataclass(frozen=True)
class WOrdering:
    """Generator indices partitioned into tie-blocks, earlier blocks having
    larger w_i / g_i (ties share a block, listed by ascending generator)."""

    weights: tuple[Fraction, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(i for block in self.blocks for i in block)

    @property
    def first(self) -> int:
        """Index driving the max-length recurrence (largest ratio)."""
        return self.blocks[0][0]

    @property
    def last(self) -> int:
        """Index driving the min-length recurrence (smallest ratio)."""
        return self.blocks[-1][0]


def w_ordering(S: Semigroup, w) -> WOrdering:
    """Order generator indices by descending w_i / g_i, grouping ties."""
    ws = _check_weights(S, w)
    gens = S.generators
    idx = sorted(range(S.k), key=lambda i: (-Fraction(ws[i], gens[i]), gens[i]))
    blocks: list[list[int]] = []
    for i in idx:
        ratio = Fraction(ws[i], gens[i])
        if blocks and Fraction(ws[blocks[-1][0]], gens[blocks[-1][0]]) == ratio:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return WOrdering(ws, tuple(tuple(b) for b in blocks))


def weighted_length_set(S: Semigroup, t: int, w) -> tuple[Fraction, ...]:
    """Sorted set of weighted lengths over Z(t); t must be an element."""
    ws = _check_weights(S, w)
    zs = factorizations(S, t)
    if not zs:
        raise ValueError(f"{t} is not an element of {S!r}")
    return tuple(sorted({weighted_length(z, ws) for z in zs}))


def weighted_extremes(S: Semigroup, t: int, w) -> tuple[Fraction, Fraction]:
    """(max, min) weighted length of t."""
    ls = weighted_length_set(S, t, w)
    return ls[-1], ls[0]


def delta_w_of_element(S: Semigroup, t: int, w) -> tuple[Fraction, ...]:
    """Set of successive gaps of the weighted length set of t, sorted."""
    ls = weighted_length_set(S, t, w)
    return tuple(sorted({b - a for a, b in zip(ls, ls[1:])}))


def min_delta_w(S: Semigroup, w) -> Fraction:
    """Minimum of the weighted delta set via the pairwise gcd formula;
    0 encodes an empty weighted delta set.

    gcd over pairs of |w_i g_j - w_j g_i| with the generators divided by their
    gcd first: scaling generators leaves every factorization (hence every
    weighted length set) unchanged, so the formula must be evaluated on the
    gcd-1 tuple.
    """
    ws = _check_weights(S, w)
    red = S._reduced
    terms = [
        ws[i] * red[j] - ws[j] * red[i]
        for i in range(S.k)
        for j in range(i + 1, S.k)
    ]
    return rational_gcd(terms)


def max_delta_w(S: Semigroup, w):
    """Maximum of the weighted delta set: largest gap over the Betti elements.
    None when the weighted delta set is empty."""
    ws = _check_weights(S, w)
    if min_delta_w(S, ws) == 0:
        return None
    gaps = []
    for beta in betti_elements(S):
        gaps.extend(delta_w_of_element(S, beta, ws))
    if not gaps:
        raise RuntimeError("nonzero minimum delta but no gap at any Betti element")
    return max(gaps)


def _integerized(ws: tuple[Fraction, ...]) -> tuple[list[int], int]:
    den = reduce(lcm, (w.denominator for w in ws), 1)
    return [int(w * den) for w in ws], den


def weighted_extreme_tables(S: Semigroup, w, limit: int):
    """DP tables of the max and min weighted length for every element
    0..limit; None at non-elements.  Returns (max_table, min_table)."""
    ws = _check_weights(S, w)
    iw, den = _integerized(ws)
    gens = S.generators
    d = S.d
    hi: list[int | None] = [None] * (limit + 1)
    lo: list[int | None] = [None] * (limit + 1)
    if limit >= 0:
        hi[0] = lo[0] = 0
    for t in range(d, limit + 1, d):
        best_hi = best_lo = None
        for g, wi in zip(gens, iw):
            if t >= g and hi[t - g] is not None:
                cand = hi[t - g] + wi
                if best_hi is None or cand > best_hi:
                    best_hi = cand
                cand = lo[t - g] + wi
                if best_lo is None or cand < best_lo:
                    best_lo = cand
        hi[t] = best_hi
        lo[t] = best_lo
    conv = lambda v: None if v is None else Fraction(v, den)
    return [conv(v) for v in hi], [conv(v) for v in lo]


@dataclass(frozen=True)
class RecurrenceCheck:
    """Scan result for one extreme-length recurrence f(n) = f(n - step) + weight."""

    step: int
    weight: Fraction
    largest_failure: int | None
    holds_from: int


@dataclass(frozen=True)
class WeightedRecurrenceReport:
    horizon: int
    threshold: int  # square of the largest generator
    max_side: RecurrenceCheck
    min_side: RecurrenceCheck


def verify_weighted_recurrences(S: Semigroup, w, horizon: int) -> WeightedRecurrenceReport:
    """Scan n <= horizon for failures of the two quasilinear recurrences
    M_w(n) = M_w(n - g_first) + w_first and m_w(n) = m_w(n - g_last) + w_last,
    where g_first / g_last are the generators with the largest / smallest
    weight-to-generator ratio.

    Failures must all lie at or below the largest generator squared; the scan
    raises if one appears beyond it.
    """
    ws = _check_weights(S, w)
    threshold = max(S.generators) ** 2
    if horizon <= threshold:
        raise ValueError(f"horizon {horizon} must exceed {threshold} (largest generator squared)")
    order = w_ordering(S, ws)
    hi, lo = weighted_extreme_tables(S, ws, horizon)

    def scan(table, idx) -> RecurrenceCheck:
        g = S.generators[idx]
        wt = ws[idx]
        largest = None
        for t in range(0, horizon + 1, S.d):
            if table[t] is None:
                continue
            prev = table[t - g] if t >= g else None
            if prev is None or table[t] != prev + wt:
                largest = t
        if largest is not None and largest > threshold:
            raise RuntimeError(
                f"recurrence with step {g} fails at {largest} > {threshold}"
            )
        return RecurrenceCheck(g, wt, largest, 0 if largest is None else largest + 1)

    return WeightedRecurrenceReport(
        horizon=horizon,
        threshold=threshold,
        max_side=scan(hi, order.first),
        min_side=scan(lo, order.last),
    )


def weighted_delta_profile(S: Semigroup, w, bound: int) -> dict[int, tuple[Fraction, ...]]:
    """Brute-force weighted delta sets of every element <= bound, keyed by
    element; elements with fewer than two weighted lengths are omitted.

    Independent of the factorization enumerator: weighted length sets are
    accumulated bottom-up as bitmasks (one bit per attainable scaled length),
    so the cost stays polynomial even when factorization counts explode.
    """
    ws = _check_weights(S, w)
    iw, den = _integerized(ws)
    gens = S.generators
    d = S.d
    depth = bound // min(gens) + 1
    offset = max(0, -min(iw)) * depth
    masks = [0] * (bound + 1)
    if bound >= 0:
        masks[0] = 1 << offset
    for t in range(d, bound + 1, d):
        acc = 0
        for g, wi in zip(gens, iw):
            if t >= g and masks[t - g]:
                acc |= masks[t - g] << wi if wi >= 0 else masks[t - g] >> -wi
        masks[t] = acc
    out: dict[int, tuple[Fraction, ...]] = {}
    for t in range(d, bound + 1, d):
        m = masks[t]
        if m == 0 or m & (m - 1) == 0:
            continue  # empty or a single length
        bits = bin(m)[2:][::-1]
        pos = [i for i, c in enumerate(bits) if c == "1"]
        out[t] = tuple(sorted({Fraction(b - a, den) for a, b in zip(pos, pos[1:])}))
    return out


def weighted_delta_union_up_to(S: Semigroup, w, bound: int) -> tuple[Fraction, ...]:
    """Union of the brute-forced weighted delta sets of all elements <= bound."""
    out = set()
    for gaps in weighted_delta_profile(S, w, bound).values():
        out.update(gaps)
    return tuple(sorted(out))
