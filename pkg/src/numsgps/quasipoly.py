"""Exact quasipolynomial fitting over integer-indexed rational samples.

A quasipolynomial of period p is a polynomial whose coefficients depend on the
residue of the argument mod p.  Everything here is exact rational arithmetic
with zero tolerance: a sample either reproduces or the fit reports the
mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _interpolate(points) -> list[Fraction]:
    """Monomial coefficients (ascending) of the polynomial through the points."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    m = len(points)
    # Newton divided differences, then expansion of the Newton basis
    coef = ys[:]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * m
    basis = [Fraction(1)]
    for i in range(m):
        for j, b in enumerate(basis):
            poly[j] += coef[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            nxt[j] += -xs[i] * b
            nxt[j + 1] += b
        basis = nxt
    return poly


def _poly_eval(coeffs, n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    """Degree-``degree`` polynomial with period-``period`` coefficients.

    ``coeffs[j][s]`` is the coefficient of n**j on the residue class s; a class
    that carried no samples has None in every row.  ``evaluate`` reproduces all
    fitted samples with n >= n_min exactly.
    """

    period: int
    degree: int
    coeffs: tuple[tuple[Fraction | None, ...], ...]
    n_min: int

    def evaluate(self, n: int) -> Fraction:
        s = n % self.period
        if self.coeffs[0][s] is None:
            raise ValueError(f"residue class {s} (mod {self.period}) carried no samples")
        return sum(
            (self.coeffs[j][s] * Fraction(n) ** j for j in range(self.degree + 1)),
            Fraction(0),
        )


@dataclass(frozen=True)
class FitMismatch:
    """Failed fit: the tail above ``mismatch_n`` is too short to stabilize."""

    mismatch_n: int
    reason: str


def fit(samples, period: int, degree: int):
    """Fit an exact quasipolynomial to ``samples`` (mapping n -> rational).

    Per residue class, the polynomial is anchored on the newest degree+1
    samples and all older samples are verified backwards; the largest
    mismatching n (if any) sets the class threshold and everything above it
    must still hold at least degree+2 samples, otherwise a FitMismatch naming
    that n is returned.  Classes without samples are left absent.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    classes: dict[int, list[tuple[int, Fraction]]] = {}
    for n, v in samples.items():
        classes.setdefault(n % period, []).append((int(n), Fraction(v)))
    if not classes:
        raise ValueError("no samples")
    for s, pts in classes.items():
        pts.sort()
        if len(pts) < degree + 2:
            raise ValueError(
                f"residue class {s} (mod {period}) has {len(pts)} samples, needs {degree + 2}"
            )

    columns: dict[int, list[Fraction]] = {}
    thresholds = []
    for s, pts in sorted(classes.items()):
        poly = _interpolate(pts[-(degree + 1):])
        largest_bad = None
        for n, v in reversed(pts[:-(degree + 1)]):
            if _poly_eval(poly, n) != v:
                largest_bad = n
                break
        if largest_bad is None:
            thresholds.append(pts[0][0])
        else:
            good = [n for n, _ in pts if n > largest_bad]
            if len(good) < degree + 2:
                return FitMismatch(
                    largest_bad,
                    f"sample at n={largest_bad} disagrees with the tail fit and only "
                    f"{len(good)} samples remain above it (need {degree + 2})",
                )
            thresholds.append(good[0])
        columns[s] = poly + [Fraction(0)] * (degree + 1 - len(poly))

    n_min = max(thresholds)
    coeffs = [
        tuple(columns[s][j] if s in columns else None for s in range(period))
        for j in range(degree + 1)
    ]
    # drop identically-zero top rows so the stated degree is sharp
    deg = degree
    while deg > 0 and all(c == 0 for c in coeffs[deg] if c is not None):
        coeffs.pop()
        deg -= 1
    return QuasiPolynomial(period, deg, tuple(coeffs), n_min)


def detect(samples, max_period: int, max_degree: int):
    """Smallest (period, degree) -- degree-major -- whose quasipolynomial
    reproduces every sample exactly, or None.

    Candidates are scanned with degree as the major key, so the result is the
    lexicographically least (degree, period) admitting an exact fit of the
    whole sample set.
    """
    items = sorted((int(n), Fraction(v)) for n, v in samples.items())
    if not items:
        raise ValueError("no samples")
    for degree in range(max_degree + 1):
        for period in range(1, max_period + 1):
            classes: dict[int, list[tuple[int, Fraction]]] = {}
            for n, v in items:
                classes.setdefault(n % period, []).append((n, v))
            if any(len(pts) < degree + 2 for pts in classes.values()):
                raise ValueError(
                    f"too few samples to test period {period}, degree {degree}"
                )
            ok = True
            for pts in classes.values():
                poly = _interpolate(pts[-(degree + 1):])
                if any(_poly_eval(poly, n) != v for n, v in pts[:-(degree + 1)]):
                    ok = False
                    break
            if ok:
                return period, degree
    return None


def leading_coefficient(qp: QuasiPolynomial):
    """Top coefficient per residue class; collapses to a single Fraction when
    every sampled class agrees."""
    row = [c for c in qp.coeffs[qp.degree] if c is not None]
    if all(c == row[0] for c in row):
        return row[0]
    return qp.coeffs[qp.degree]
