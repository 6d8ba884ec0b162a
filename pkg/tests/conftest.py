"""Shared brute-force oracles for the test suite.

These are deliberately coded with different algorithms than the library
(bottom-up set DP instead of pruned recursion, direct gap scans instead of
residue tables) so agreement is meaningful.
"""

from __future__ import annotations

import random
from fractions import Fraction

ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_factorization_table(gens, bound):
    """table[t] = set of exponent tuples factoring t, for all 0 <= t <= bound,
    built bottom-up (independent of the library's recursive enumerator)."""
    k = len(gens)
    table = [set() for _ in range(bound + 1)]
    table[0].add((0,) * k)
    for t in range(1, bound + 1):
        acc = table[t]
        for i, g in enumerate(gens):
            if t >= g:
                for z in table[t - g]:
                    acc.add(z[:i] + (z[i] + 1,) + z[i + 1:])
    return table


def brute_members(gens, bound):
    """Set of representable integers <= bound via plain reachability DP."""
    reach = [False] * (bound + 1)
    reach[0] = True
    for t in range(1, bound + 1):
        reach[t] = any(t >= g and reach[t - g] for g in gens)
    return {t for t in range(bound + 1) if reach[t]}


def brute_length_sets(gens, bound):
    """length_sets[t] = set of factorization lengths of t (bottom-up DP)."""
    table = [set() for _ in range(bound + 1)]
    table[0].add(0)
    for t in range(1, bound + 1):
        for g in gens:
            if t >= g:
                table[t].update(x + 1 for x in table[t - g])
    return table


def brute_weighted_length_sets(gens, w, bound):
    """Weighted variant of brute_length_sets; values are Fractions."""
    ws = [Fraction(x) for x in w]
    table = [set() for _ in range(bound + 1)]
    table[0].add(Fraction(0))
    for t in range(1, bound + 1):
        for g, wi in zip(gens, ws):
            if t >= g:
                table[t].update(x + wi for x in table[t - g])
    return table


def brute_pseudo_frobenius(gens, frobenius):
    """Pseudo-Frobenius numbers by direct definition over all gaps.

    m + s lands in S for every positive element s iff it does for every
    generator (any positive element is a sum of generators)."""
    members = brute_members(gens, frobenius + max(gens) + 1)
    return [
        m
        for m in range(0, frobenius + 1)
        if m not in members and all((m + g) in members for g in gens)
    ]


def random_generators(rng: random.Random, max_k=4, lo=3, hi=20):
    k = rng.randint(2, max_k)
    gens = sorted(rng.sample(range(lo, hi + 1), k))
    return tuple(gens)


def random_weights(rng: random.Random, k, allow_negative=True):
    lo = -5 if allow_negative else 0
    return tuple(
        Fraction(rng.randint(lo, 6), rng.randint(1, 4)) for _ in range(k)
    )
