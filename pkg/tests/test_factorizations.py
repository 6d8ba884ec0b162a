import random
from math import gcd

import pytest

from conftest import brute_factorization_table, random_generators
from numsgps import (
    Semigroup,
    betti_bound,
    betti_elements,
    connects_under_relations,
    delta_of_element,
    delta_set_up_to,
    factorization_graph,
    factorizations,
    length_set,
    max_min_length,
    minimal_presentation,
    verify_minimal_presentation,
    weighted_extreme_tables,
)


class TestFactorizations:
    def test_examples(self):
        S = Semigroup([6, 9, 20])
        assert set(factorizations(S, 60)) == {
            (10, 0, 0), (7, 2, 0), (4, 4, 0), (1, 6, 0), (0, 0, 3),
        }
        assert set(factorizations(S, 18)) == {(3, 0, 0), (0, 2, 0)}
        assert factorizations(S, 0) == ((0, 0, 0),)
        assert factorizations(S, 43) == ()
        assert factorizations(S, -7) == ()

    def test_parametrized_member_example(self):
        # generators of the member at n=44 of w=(2,3,5,7,8), r=(0,0,5,7,9)
        S = Semigroup((88, 132, 225, 315, 361), keep_order=True)
        assert set(factorizations(S, 1620)) == {(0, 0, 3, 3, 0), (2, 0, 0, 0, 4)}

    def test_dot_product_invariant_and_oracle_agreement(self):
        rng = random.Random(3)
        for _ in range(8):
            gens = random_generators(rng, lo=5)
            S = Semigroup(gens)
            table = brute_factorization_table(gens, 300)
            for t in range(301):
                zs = factorizations(S, t)
                assert set(zs) == table[t], (gens, t)
                for z in zs:
                    assert sum(a * g for a, g in zip(z, gens)) == t


class TestLengthSets:
    def test_examples(self):
        S = Semigroup([6, 9, 20])
        assert length_set(S, 60) == (3, 7, 8, 9, 10)
        assert delta_of_element(S, 60) == (1, 4)
        assert length_set(S, 18) == (2, 3)
        assert delta_of_element(S, 18) == (1,)
        assert length_set(S, 0) == (0,)
        assert delta_of_element(S, 0) == ()
        assert max_min_length(S, 60) == (10, 3)
        assert max_min_length(S, 18) == (3, 2)

    def test_single_generator_element(self):
        S = Semigroup([6, 9, 20])
        assert max_min_length(S, 20) == (1, 1)

    def test_rejects_non_elements(self):
        S = Semigroup([6, 9, 20])
        with pytest.raises(ValueError):
            length_set(S, 43)

    def test_quasilinear_recurrences_beyond_square(self):
        # M(t) - M(t - r_min) = 1 and m(t) - m(t - r_max) = 1 past r_max^2
        rng = random.Random(17)
        for _ in range(6):
            gens = random_generators(rng, lo=3, hi=25)
            S = Semigroup(gens)
            r1, rk = min(gens), max(gens)
            hor = rk * rk + 3 * rk
            hi, lo = weighted_extreme_tables(S, (1,) * S.k, hor)
            for t in range(rk * rk + 1, hor + 1):
                if hi[t] is None:
                    continue
                if t - r1 >= 0 and hi[t - r1] is not None:
                    assert hi[t] == hi[t - r1] + 1, (gens, t)
                if t - rk >= 0 and lo[t - rk] is not None:
                    assert lo[t] == lo[t - rk] + 1, (gens, t)


class TestFactorizationGraph:
    def test_disconnected_graphs(self):
        S = Semigroup([6, 9, 20])
        g18 = factorization_graph(S, 18)
        assert g18.components == (((0, 2, 0),), ((3, 0, 0),))
        assert not g18.is_connected and g18.multiplicity == 1
        g60 = factorization_graph(S, 60)
        assert len(g60.components) == 2
        assert ((0, 0, 3),) in g60.components
        big = next(c for c in g60.components if len(c) > 1)
        assert set(big) == {(10, 0, 0), (7, 2, 0), (4, 4, 0), (1, 6, 0)}

    def test_connected_singleton(self):
        S = Semigroup([6, 9, 20])
        g = factorization_graph(S, 15)
        assert g.components == (((1, 1, 0),),)
        assert g.is_connected


class TestBettiElements:
    def test_examples(self):
        assert betti_elements(Semigroup([6, 9, 20])) == {18: 1, 60: 1}
        assert betti_elements(Semigroup([2, 3])) == {6: 1}
        assert betti_elements(Semigroup([3, 4, 5])) == {8: 1, 9: 1, 10: 1}

    def test_gcd_above_one(self):
        assert betti_elements(Semigroup([4, 6])) == {12: 1}
        assert betti_elements(Semigroup([1])) == {}

    def test_redundant_generator_creates_betti_element(self):
        assert 7 in betti_elements(Semigroup([2, 3, 7]))

    def test_matches_graph_scan(self):
        rng = random.Random(41)
        for _ in range(10):
            gens = random_generators(rng)
            S = Semigroup(gens)
            betti = betti_elements(S)
            for t in S.elements_up_to(betti_bound(S)):
                if t == 0:
                    continue
                graph = factorization_graph(S, t)
                if graph.is_connected:
                    assert t not in betti, (gens, t)
                else:
                    assert betti[t] == graph.multiplicity, (gens, t)

    def test_invariant_under_generator_permutation(self):
        rng = random.Random(43)
        for _ in range(8):
            gens = list(random_generators(rng))
            S = Semigroup(gens)
            perm = gens[:]
            rng.shuffle(perm)
            T = Semigroup(tuple(perm), keep_order=True)
            assert betti_elements(S) == betti_elements(T)


class TestDeltaSet:
    def test_min_max_via_structure(self):
        S = Semigroup([6, 9, 20])
        brute = delta_set_up_to(S, 400)
        assert min(brute) == gcd(9 - 6, 20 - 9) == 1
        assert max(brute) == 4
        assert max(max(delta_of_element(S, b)) for b in betti_elements(S)) == 4


class TestMinimalPresentation:
    def test_canonical_choice(self):
        rels = minimal_presentation(Semigroup([6, 9, 20]))
        assert len(rels) == 2
        assert (rels[0].left, rels[0].right, rels[0].degree) == ((3, 0, 0), (0, 2, 0), 18)
        assert rels[1].degree == 60
        assert rels[1].right == (0, 0, 3)
        assert rels[1].left in {(10, 0, 0), (7, 2, 0), (4, 4, 0), (1, 6, 0)}

    def test_two_three(self):
        rels = minimal_presentation(Semigroup([2, 3]))
        assert len(rels) == 1
        assert {rels[0].left, rels[0].right} == {(3, 0), (0, 2)}

    def test_relation_count_is_betti_multiplicity_sum(self):
        rng = random.Random(47)
        for _ in range(8):
            gens = random_generators(rng)
            S = Semigroup(gens)
            rels = minimal_presentation(S)
            assert len(rels) == sum(betti_elements(S).values())
            assert verify_minimal_presentation(S, rels) == []

    def test_chain_property(self):
        rng = random.Random(53)
        cases = [(6, 9, 20), (2, 3), (3, 4, 5)]
        cases += [random_generators(rng) for _ in range(4)]
        for gens in cases:
            S = Semigroup(gens)
            rels = minimal_presentation(S)
            for t in S.elements_up_to(300):
                assert connects_under_relations(S, rels, t), (gens, t)

    def test_verifier_rejects_broken_presentations(self):
        S = Semigroup([6, 9, 20])
        rels = minimal_presentation(S)
        assert verify_minimal_presentation(S, rels[:1])  # missing a relation
        doubled = rels + rels[:1]
        assert verify_minimal_presentation(S, doubled)  # redundant relation
