"""Linear families P_n = <w_1 n + r_1, ..., w_k n + r_k> and polynomial
families P_n = <f_1(n), ..., f_k(n)>: normalization, relation transport
between consecutive family members, the Betti-element bijection, the constant
weighted delta value, closed-form Apery sets, pseudo-Frobenius transport, and
invariant scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd

from .factorizations import (
    Relation,
    betti_elements,
    minimal_presentation,
    verify_minimal_presentation,
)
from .semigroup import AperySet, Semigroup
from .weighted import weighted_extreme_tables, weighted_length_set


class VerificationError(RuntimeError):
    """An identity that is guaranteed in the large-n regime failed to verify."""


def _dot(z, v) -> int:
    return sum(a * b for a, b in zip(z, v))


@dataclass(frozen=True)
class LinearFamily:
    """Normalized linear family: w positive integers, r non-negative integers,
    ratios r_i/w_i ascending, and 0 <= r_1 < w_1.

    ``shift`` records the reparametrization applied by :meth:`normalize`:
    generators(n) here equal the original family's generators at n + shift.
    """

    w: tuple[int, ...]
    r: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        if len(self.w) != len(self.r) or not self.w:
            raise ValueError("w and r must be nonempty tuples of equal length")
        if any(x < 1 for x in self.w):
            raise ValueError("all w_i must be >= 1")
        if any(x < 0 for x in self.r):
            raise ValueError("normalized r_i must be >= 0")
        ratios = [Fraction(ri, wi) for wi, ri in zip(self.w, self.r)]
        if any(a > b for a, b in zip(ratios, ratios[1:])):
            raise ValueError("generators must be ordered by ascending r_i/w_i")
        if not 0 <= self.r[0] < self.w[0]:
            raise ValueError("normalization requires 0 <= r_1 < w_1")

    @classmethod
    def normalize(cls, w, r) -> "LinearFamily":
        """Sort the (w_i, r_i) pairs by ascending r_i/w_i (ties by ascending
        w_i) and substitute n -> n + s with the unique integer s giving
        0 <= r_1 < w_1 and every r_i >= 0."""
        w = tuple(int(x) for x in w)
        r = tuple(int(x) for x in r)
        if len(w) != len(r) or not w:
            raise ValueError("w and r must be nonempty and of equal length")
        if any(x < 1 for x in w):
            raise ValueError("all w_i must be >= 1")
        pairs = sorted(zip(w, r), key=lambda p: (Fraction(p[1], p[0]), p[0]))
        w = tuple(p[0] for p in pairs)
        r = tuple(p[1] for p in pairs)
        s = -(r[0] // w[0])
        return cls(w, tuple(ri + wi * s for wi, ri in zip(w, r)), s)

    @property
    def k(self) -> int:
        return len(self.w)

    @property
    def max_weight(self) -> int:
        return max(self.w)

    @property
    def max_offset(self) -> int:
        return max(self.r)

    @property
    def period(self) -> int:
        """w_1 r_k - w_k r_1: the step at which presentations and Betti data
        repeat for large n.  Zero exactly when all ratios r_i/w_i coincide."""
        return self.w[0] * self.r[-1] - self.w[-1] * self.r[0]

    @property
    def is_degenerate(self) -> bool:
        return self.period == 0

    @property
    def transport_bound(self) -> int:
        """n above which relation transport and the Betti bijection are
        guaranteed: w_1^2 * max(w) * max(r)^2."""
        return self.w[0] ** 2 * self.max_weight * self.max_offset**2

    @property
    def apery_bound(self) -> int:
        """n above which the closed-form Apery set is guaranteed (w_1 = 1
        families): max(w) * max(r)^2."""
        return self.max_weight * self.max_offset**2

    def generators(self, n: int) -> tuple[int, ...]:
        return tuple(wi * n + ri for wi, ri in zip(self.w, self.r))

    def instantiate(self, n: int) -> Semigroup:
        """The member semigroup at parameter n, generator order preserved."""
        gens = self.generators(n)
        if any(g < 1 for g in gens):
            raise ValueError(f"non-positive generator in {gens} at n={n}")
        return Semigroup(gens, keep_order=True)


@dataclass(frozen=True)
class PolynomialFamily:
    """P_n = <f_1(n), ..., f_k(n)> for integer polynomials f_i, each given by
    ascending-degree coefficients, eventually increasing and >= 1 from
    ``n_min`` on.  Supports scans only (there is no transport for nonlinear
    families)."""

    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cleaned = []
        for coeffs in self.polys:
            cs = list(coeffs)
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
            if not cs:
                raise ValueError("empty coefficient list")
            if len(cs) == 1:
                if cs[0] < 1:
                    raise ValueError(f"constant generator {cs[0]} must be >= 1")
            elif cs[-1] <= 0:
                raise ValueError(f"leading coefficient must be positive in {coeffs}")
            cleaned.append(tuple(cs))
        object.__setattr__(self, "polys", tuple(cleaned))

    @property
    def k(self) -> int:
        return len(self.polys)

    def value(self, i: int, n: int) -> int:
        acc = 0
        for c in reversed(self.polys[i]):
            acc = acc * n + c
        return acc

    @cached_property
    def n_min(self) -> int:
        """Smallest n >= 0 from which every f_i(m) >= 1 for all m >= n."""
        start = 0
        for cs in self.polys:
            if len(cs) == 1:
                continue
            lead = cs[-1]
            # all real roots of f and f' lie below 1 + max|c_j|/lead
            bound = 1 + max(abs(c) for c in cs[:-1]) // lead + 1
            start = max(start, bound)
        while start > 0 and all(self.value(i, start - 1) >= 1 for i in range(self.k)):
            start -= 1
        return start

    def generators(self, n: int) -> tuple[int, ...]:
        return tuple(self.value(i, n) for i in range(self.k))

    def instantiate(self, n: int) -> Semigroup:
        gens = self.generators(n)
        if any(g < 1 for g in gens):
            raise ValueError(f"non-positive generator in {gens} at n={n}")
        return Semigroup(gens, keep_order=True)


def family_from_spec(doc: dict):
    """Build a family from its JSON document: {"w": [...], "r": [...]} for a
    linear family (normalized on load) or {"polys": [[c0, c1, ...], ...]}."""
    if "w" in doc and "r" in doc:
        return LinearFamily.normalize(doc["w"], doc["r"])
    if "polys" in doc:
        return PolynomialFamily(tuple(tuple(int(c) for c in p) for p in doc["polys"]))
    raise ValueError('family spec needs either "w" and "r" or "polys"')


def family_delta(family: LinearFamily) -> int:
    """The single weighted delta value of the family members for large n:
    gcd over generator pairs of |w_i r_j - w_j r_i| (n cancels, so the value
    is n-independent).  0 encodes an empty weighted delta set (all ratios
    equal, e.g. w_i = r_i)."""
    terms = [
        abs(family.w[i] * family.r[j] - family.w[j] * family.r[i])
        for i in range(family.k)
        for j in range(i + 1, family.k)
    ]
    return reduce(gcd, terms, 0)


def phi(family: LinearFamily, n: int, rel: Relation) -> Relation:
    """Transport one relation of P_n to P_{n+p}: the side of larger weighted
    length gains ell*w_k on the first coordinate, the other side gains
    ell*w_1 on the last, where ell is the weighted length difference; equal
    weighted lengths transport unchanged."""
    if family.is_degenerate:
        raise ValueError("degenerate family: period zero, P_{n+p} = P_n")
    gens = family.generators(n)
    if _dot(rel.left, gens) != _dot(rel.right, gens):
        raise ValueError(f"{rel} is not a relation of the member at n={n}")
    lw = _dot(rel.left, family.w)
    rw = _dot(rel.right, family.w)
    ell = abs(lw - rw)
    w1, wk = family.w[0], family.w[-1]
    k = family.k

    def bump(z, pos, amount):
        out = list(z)
        out[pos] += amount
        return tuple(out)

    if lw > rw:
        left, right = bump(rel.left, 0, ell * wk), bump(rel.right, k - 1, ell * w1)
    elif lw < rw:
        left, right = bump(rel.left, k - 1, ell * w1), bump(rel.right, 0, ell * wk)
    else:
        left, right = rel.left, rel.right
    gens2 = family.generators(n + family.period)
    dl, dr = _dot(left, gens2), _dot(right, gens2)
    if dl != dr:
        raise VerificationError(f"transported pair unbalanced at n+p: {dl} != {dr}")
    if _dot(left, family.w) - _dot(right, family.w) != lw - rw:
        raise VerificationError("transport changed the weighted length difference")
    return Relation(left, right, dl)


@dataclass(frozen=True)
class TransportReport:
    """Transport of a whole minimal presentation from P_n to P_{n+p}, checked
    against an independently computed presentation of the target."""

    n: int
    period: int
    transport_bound: int
    source: tuple[Relation, ...]
    image: tuple[Relation, ...]
    independent: tuple[Relation, ...]
    problems: tuple[str, ...]

    @property
    def in_guaranteed_regime(self) -> bool:
        return self.n > self.transport_bound

    @property
    def ok(self) -> bool:
        return not self.problems


def transport_presentation(family: LinearFamily, n: int) -> TransportReport:
    """Apply :func:`phi` to the canonical minimal presentation of P_n and
    verify the image is a minimal presentation of P_{n+p} (Betti degree
    multiset plus component spanning structure).  A mismatch is reported, not
    raised; it is guaranteed absent for n > transport_bound."""
    if family.is_degenerate:
        raise ValueError("degenerate family: period zero, P_{n+p} = P_n")
    source = minimal_presentation(family.instantiate(n))
    image = tuple(phi(family, n, rel) for rel in source)
    target = family.instantiate(n + family.period)
    problems = list(verify_minimal_presentation(target, image))
    independent = minimal_presentation(target)
    want = sorted(r.degree for r in independent)
    got = sorted(r.degree for r in image)
    if want != got:
        problems.append(f"image degrees {got} != independent degrees {want}")
    return TransportReport(
        n=n,
        period=family.period,
        transport_bound=family.transport_bound,
        source=source,
        image=image,
        independent=independent,
        problems=tuple(problems),
    )


@dataclass(frozen=True)
class BettiBijectionReport:
    """The piecewise map Betti(P_n) -> Betti(P_{n+p}): a Betti element whose
    weighted length set is a singleton {lam} moves by lam*p; one with set
    {lam, lam+d} additionally moves by d*w_1*(w_k*(n+p) + r_k)."""

    n: int
    period: int
    delta: int
    transport_bound: int
    mapping: tuple[tuple[int, int], ...]
    source: tuple[tuple[int, int], ...]
    target: tuple[tuple[int, int], ...]
    anomalies: tuple[tuple[int, tuple[Fraction, ...]], ...]

    @property
    def in_guaranteed_regime(self) -> bool:
        return self.n > self.transport_bound

    @property
    def is_bijection(self) -> bool:
        if self.anomalies:
            return False
        image = [b for _, b in self.mapping]
        return len(set(image)) == len(image) and sorted(image) == sorted(
            b for b, _ in self.target
        )


def betti_bijection(family: LinearFamily, n: int) -> BettiBijectionReport:
    """Map each Betti element of P_n per its weighted length set and verify
    the image is exactly Betti(P_{n+p}).

    A Betti element whose weighted length set is neither {lam} nor
    {lam, lam+d} is recorded as an anomaly (never happens above the
    transport bound)."""
    if family.is_degenerate:
        raise ValueError("degenerate family: period zero")
    d = family_delta(family)
    p = family.period
    P = family.instantiate(n)
    source = betti_elements(P)
    target = betti_elements(family.instantiate(n + p))
    w1, wk, rk = family.w[0], family.w[-1], family.r[-1]
    mapping = []
    anomalies = []
    for beta in source:
        lengths = weighted_length_set(P, beta, family.w)
        lam = lengths[0]
        if len(lengths) == 1:
            mapping.append((beta, beta + int(lam) * p))
        elif len(lengths) == 2 and lengths[1] - lam == d:
            mapping.append((beta, beta + int(lam) * p + d * w1 * (wk * (n + p) + rk)))
        else:
            anomalies.append((beta, lengths))
    return BettiBijectionReport(
        n=n,
        period=p,
        delta=d,
        transport_bound=family.transport_bound,
        mapping=tuple(mapping),
        source=tuple(source.items()),
        target=tuple(target.items()),
        anomalies=tuple(anomalies),
    )


def apery_at_multiple(S: Semigroup, n: int) -> AperySet:
    """Closed-form Apery set of S relative to d*n when d*n exceeds the
    Frobenius number: position i holds d*i if d*i is an element, else
    d*i + d*n."""
    d = S.d
    if d * n <= S.frobenius():
        raise ValueError(f"need d*n > frobenius ({d * n} <= {S.frobenius()})")
    elements = tuple(
        d * i if S.contains(d * i) else d * i + d * n for i in range(n)
    )
    return AperySet(S, d * n, elements)


def _inner_semigroup(family: LinearFamily):
    """The semigroup of the positive offsets r_i with their weights; a
    duplicated offset keeps its cheapest weight (the larger weight never
    achieves a minimum)."""
    if family.w[0] != 1:
        raise ValueError("this construction requires w_1 = 1 (hence r_1 = 0)")
    if family.is_degenerate:
        raise ValueError("degenerate family: every generator is a multiple of the first")
    best: dict[int, int] = {}
    for wi, ri in zip(family.w, family.r):
        if ri > 0:
            best[ri] = min(best.get(ri, wi), wi)
    rs = tuple(sorted(best))
    return Semigroup(rs, keep_order=True), tuple(best[x] for x in rs)


@dataclass(frozen=True)
class FastAperyCheck:
    """Closed-form Apery set of the member at n versus the direct one."""

    n: int
    apery_bound: int
    theorem: AperySet
    direct: AperySet
    singleton_failures: tuple[tuple[int, tuple[Fraction, ...]], ...]

    @property
    def in_guaranteed_regime(self) -> bool:
        return self.n > self.apery_bound

    @property
    def matches(self) -> bool:
        return self.theorem.elements == self.direct.elements

    @property
    def ok(self) -> bool:
        return self.matches and not self.singleton_failures


def _theorem_apery(family: LinearFamily, n: int):
    S, ws = _inner_semigroup(family)
    d = S.d
    if gcd(n, d) != 1:
        raise ValueError(
            f"gcd(n, {d}) must be 1: the member at n={n} has gcd {gcd(n, d)} and its "
            f"Apery set at n has fewer than n elements"
        )
    ap = apery_at_multiple(S, n)
    _, lo = weighted_extreme_tables(S, ws, ap.max_element())
    P = family.instantiate(n)
    elements: list[int | None] = [None] * n
    min_lengths: dict[int, int] = {}
    for a in ap.elements:
        mw = lo[a]
        e = a + int(mw) * n
        elements[e % n] = e
        min_lengths[e] = int(mw)
    if any(e is None for e in elements):
        raise VerificationError("mapped Apery elements collide modulo n")
    return P, tuple(elements), min_lengths


def verify_fast_apery(family: LinearFamily, n: int) -> FastAperyCheck:
    """Compute the closed-form Apery set {i + m_w(i) * n} and compare it with
    the directly computed Ap(P_n; n); also check that each mapped element's
    weighted length set in P_n is the predicted singleton."""
    P, elements, min_lengths = _theorem_apery(family, n)
    direct = P.apery_set(n)
    failures = []
    for e, mw in sorted(min_lengths.items()):
        lengths = weighted_length_set(P, e, family.w)
        if lengths != (Fraction(mw),):
            failures.append((e, lengths))
    return FastAperyCheck(
        n=n,
        apery_bound=family.apery_bound,
        theorem=AperySet(P, n, elements),
        direct=direct,
        singleton_failures=tuple(failures),
    )


def fast_apery(family: LinearFamily, n: int, verify: bool = True) -> AperySet:
    """Apery set of the member at n via the closed form (w_1 = 1 families).

    With ``verify`` (default) the result is checked against the direct
    computation and the singleton weighted length sets; a failure raises
    VerificationError (guaranteed not to happen for n > apery_bound)."""
    if not verify:
        P, elements, _ = _theorem_apery(family, n)
        return AperySet(P, n, elements)
    check = verify_fast_apery(family, n)
    if not check.matches:
        raise VerificationError(
            f"closed-form Apery set differs from the direct one at n={n} "
            f"(n > bound: {check.in_guaranteed_regime})"
        )
    if check.singleton_failures:
        e, lengths = check.singleton_failures[0]
        raise VerificationError(
            f"Apery element {e} has weighted length set {lengths}, expected a singleton"
        )
    return check.theorem


@dataclass(frozen=True)
class PFTransportReport:
    """Pseudo-Frobenius transport between the members at n and n + r_k, via
    the Apery-set coordinates i in Ap(S; dn).

    Elementwise the map is i -> i + d*r_k: both branches of Ap(S; dn) track
    d*n, so an element d*j of S keeps pace by moving r_k positions up, while
    a gap element d*j + d*n moves because d*n itself grows by d*r_k."""

    n: int
    step: int
    apery_bound: int
    f_n: tuple[int, ...]
    f_next: tuple[int, ...]
    mapping: tuple[tuple[int, int], ...]
    type_n: int
    type_next: int

    @property
    def in_guaranteed_regime(self) -> bool:
        return self.n > self.apery_bound

    @property
    def is_bijection(self) -> bool:
        image = sorted(b for _, b in self.mapping)
        return image == sorted(set(image)) and image == list(self.f_next)

    @property
    def types_equal(self) -> bool:
        return self.type_n == self.type_next


def pf_transport(family: LinearFamily, n: int) -> PFTransportReport:
    S, _ = _inner_semigroup(family)
    d = S.d
    if gcd(n, d) != 1:
        raise ValueError(f"gcd(n, {d}) must be 1 for pseudo-Frobenius numbers to exist")
    rk = family.r[-1]
    P1 = family.instantiate(n)
    P2 = family.instantiate(n + rk)
    pf1 = P1.pseudo_frobenius()
    pf2 = P2.pseudo_frobenius()
    res1 = {a % n for a in pf1}
    res2 = {a % (n + rk) for a in pf2}
    f_n = tuple(i for i in sorted(apery_at_multiple(S, n).elements) if i % n in res1)
    f_next = tuple(
        i for i in sorted(apery_at_multiple(S, n + rk).elements) if i % (n + rk) in res2
    )
    mapping = tuple((i, i + d * rk) for i in f_n)
    return PFTransportReport(
        n=n,
        step=rk,
        apery_bound=family.apery_bound,
        f_n=f_n,
        f_next=f_next,
        mapping=mapping,
        type_n=len(pf1),
        type_next=len(pf2),
    )


SCAN_INVARIANTS = (
    "frobenius",
    "genus",
    "type",
    "wilf",
    "betti_count",
    "betti_multiset",
    "minpres_degrees",
)


def scan(family, ns, invariant: str) -> list[tuple[int, object]]:
    """Exact invariant values of the family members over the given parameters.

    ``wilf`` uses the k(F-g)-(F+1) variant.  ``betti_multiset`` emits the
    sorted multiset of per-element multiplicities
    (components - 1, i.e. one entry per relation); ``minpres_degrees`` the
    sorted degree multiset of the canonical minimal presentation.  Rows come
    back in the traversal order of ``ns``.
    """
    if invariant not in SCAN_INVARIANTS:
        raise ValueError(f"unknown invariant {invariant!r}; choose from {SCAN_INVARIANTS}")
    rows: list[tuple[int, object]] = []
    for n in ns:
        P = family.instantiate(n)
        if invariant == "frobenius":
            v: object = P.frobenius()
        elif invariant == "genus":
            v = P.genus()
        elif invariant == "type":
            v = P.type()
        elif invariant == "wilf":
            v = P.wilf_number("variant")
        elif invariant == "betti_count":
            v = len(betti_elements(P))
        elif invariant == "betti_multiset":
            v = tuple(sorted(betti_elements(P).values()))
        else:
            v = tuple(sorted(rel.degree for rel in minimal_presentation(P)))
        rows.append((n, v))
    return rows
