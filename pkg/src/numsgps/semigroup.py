"""Additive subsemigroups of the non-negative integers and their classical invariants.

A semigroup here is given by a finite tuple of positive integer generators and
need not have finite complement: the gcd d of the generators may exceed 1, in
which case every element is a multiple of d and the Frobenius number / genus
are taken relative to the multiples of d.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from math import gcd


class Semigroup:
    """The subsemigroup of Z>=0 generated by a tuple of positive integers.

    By default the generator tuple is deduplicated and sorted ascending.  With
    ``keep_order=True`` the supplied order is preserved (duplicates rejected);
    factorization exponent vectors always follow ``self.generators`` order.

    Instances are immutable after construction; the lazily built membership
    tables are idempotent, so concurrent readers are safe.
    """

    def __init__(self, generators, keep_order: bool = False):
        gens = tuple(int(g) for g in generators)
        if not gens:
            raise ValueError("a semigroup needs at least one generator")
        if any(g <= 0 for g in gens):
            raise ValueError(f"generators must be positive, got {gens}")
        if keep_order:
            if len(set(gens)) != len(gens):
                raise ValueError(f"duplicate generators in {gens}")
        else:
            gens = tuple(sorted(set(gens)))
        self.generators: tuple[int, ...] = gens
        self.d: int = gcd(*gens) if len(gens) > 1 else gens[0]

    def __repr__(self):
        return f"Semigroup{self.generators}"

    def __eq__(self, other):
        return isinstance(other, Semigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        """Smallest generator (= smallest positive element)."""
        return min(self.generators)

    @cached_property
    def _reduced(self) -> tuple[int, ...]:
        # generators divided by d; a gcd-1 semigroup with the same factorizations
        return tuple(g // self.d for g in self.generators)

    @cached_property
    def _residue_table(self) -> list[int]:
        """table[rho] = least element of the reduced semigroup congruent to rho
        modulo the reduced multiplicity.

        Shortest paths in the residue graph mod the smallest generator: one
        Dijkstra pass instead of per-query enumeration, so membership becomes
        a single table lookup.
        """
        m1 = min(self._reduced)
        dist: list[int | None] = [None] * m1
        dist[0] = 0
        heap = [(0, 0)]
        steps = [a for a in set(self._reduced) if a % m1 != 0]
        while heap:
            val, rho = heapq.heappop(heap)
            if dist[rho] != val:
                continue
            for a in steps:
                nrho = (rho + a) % m1
                nval = val + a
                cur = dist[nrho]
                if cur is None or nval < cur:
                    dist[nrho] = nval
                    heapq.heappush(heap, (nval, nrho))
        # every residue is reachable because the reduced generators have gcd 1
        return dist  # type: ignore[return-value]

    def _contains_reduced(self, t: int) -> bool:
        if t < 0:
            return False
        tab = self._residue_table
        return t >= tab[t % len(tab)]

    def contains(self, t: int) -> bool:
        """True iff t has at least one factorization (t = 0 always does)."""
        if t < 0 or t % self.d:
            return False
        return self._contains_reduced(t // self.d)

    def __contains__(self, t: int) -> bool:
        return self.contains(t)

    def elements_up_to(self, bound: int) -> list[int]:
        """All semigroup elements <= bound, ascending."""
        return [t for t in range(0, bound + 1, self.d) if self._contains_reduced(t // self.d)]

    def apery_set(self, m: int) -> "AperySet":
        """Least element of the semigroup in each residue class modulo m.

        m must be a positive element.  The result has m/d members, stored so
        that position rho holds the element e with (e/d) = rho (mod m/d).
        """
        if m <= 0 or not self.contains(m):
            raise ValueError(f"{m} is not a positive element of {self!r}")
        m_red = m // self.d
        tab = self._residue_table
        if m_red == len(tab):
            return AperySet(self, m, tuple(x * self.d for x in tab))
        elements = []
        for rho in range(m_red):
            t = rho
            while not self._contains_reduced(t):
                t += m_red
            elements.append(t * self.d)
        return AperySet(self, m, tuple(elements))

    def frobenius(self) -> int:
        """Largest multiple of d outside the semigroup; -d when there is none."""
        tab = self._residue_table
        return self.d * (max(tab) - len(tab))

    def genus(self) -> int:
        """Number of multiples of d missing from the semigroup."""
        tab = self._residue_table
        m1 = len(tab)
        return sum(t // m1 for t in tab)

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique inclusion-minimal generating subset, in generator order.

        A generator is redundant iff it lies in the semigroup generated by the
        others; the minimal generators are contained in every generating set,
        so one filtering pass suffices.
        """
        gens = self.generators
        if len(gens) == 1:
            return gens
        keep = []
        for g in gens:
            others = tuple(h for h in gens if h != g)
            if not Semigroup(others).contains(g):
                keep.append(g)
        return tuple(keep)

    def embedding_dimension(self) -> int:
        return len(self.minimal_generators())

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Gaps m >= 0 with m + s in the semigroup for every positive element s.

        Only defined for gcd 1.  Computed as {a - m : a maximal in Ap(S; m)}
        under the order a <= b iff b - a is in S; the m >= 0 convention makes
        PF(<1>) empty.
        """
        if self.d != 1:
            raise ValueError("pseudo-Frobenius numbers require gcd(generators) = 1")
        ap = self.apery_set(self.multiplicity).elements
        m = self.multiplicity
        out = []
        for a in ap:
            if any(b != a and self.contains(b - a) for b in ap):
                continue
            if a - m >= 0:
                out.append(a - m)
        return tuple(sorted(out))

    def type(self) -> int:
        """Number of pseudo-Frobenius numbers (gcd 1 only)."""
        return len(self.pseudo_frobenius())

    def wilf_number(self, formula: str = "standard") -> int:
        """Wilf number with k the embedding dimension (gcd must be 1):
        k(F + 1 - g) - (F + 1) for formula="standard", or the variant
        k(F - g) - (F + 1) for formula="variant".

        The two differ by exactly k; the variant is negative on every
        two-generated semigroup (e.g. <2,3> gives -2), so both are exposed.
        """
        if self.d != 1:
            raise ValueError("Wilf numbers require gcd(generators) = 1")
        k = self.embedding_dimension()
        f = self.frobenius()
        g = self.genus()
        if formula == "variant":
            return k * (f - g) - (f + 1)
        if formula == "standard":
            return k * (f + 1 - g) - (f + 1)
        raise ValueError(f"unknown Wilf formula {formula!r}")

    @cached_property
    def _descending_suffixes(self) -> tuple[tuple[int, ...], tuple["Semigroup", ...]]:
        """Generator indices sorted by descending value, plus the semigroup of
        each suffix of that ordering (used to prune factorization search)."""
        order = tuple(sorted(range(self.k), key=lambda i: -self.generators[i]))
        suffixes = tuple(
            Semigroup(tuple(self.generators[i] for i in order[j:]))
            for j in range(self.k)
        )
        return order, suffixes


@dataclass(frozen=True)
class AperySet:
    """Apery set of a semigroup relative to a positive element ``base``.

    ``elements[rho]`` is the least element e with (e/d) = rho (mod base/d);
    there are exactly base/d of them and they are pairwise distinct mod base.
    """

    semigroup: Semigroup
    base: int
    elements: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def max_element(self) -> int:
        return max(self.elements)
