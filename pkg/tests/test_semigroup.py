import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from conftest import brute_members, brute_pseudo_frobenius, random_generators
from numsgps import Semigroup


class TestConstruction:
    def test_dedup_and_sort(self):
        S = Semigroup([9, 6, 6, 20])
        assert S.generators == (6, 9, 20)
        assert S.d == 1

    def test_gcd(self):
        assert Semigroup([4, 6]).d == 2
        assert Semigroup([6, 9, 20]).d == 1

    def test_keep_order(self):
        S = Semigroup((21, 13), keep_order=True)
        assert S.generators == (21, 13)
        with pytest.raises(ValueError):
            Semigroup((5, 5), keep_order=True)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            Semigroup([])
        with pytest.raises(ValueError):
            Semigroup([0, 3])
        with pytest.raises(ValueError):
            Semigroup([-2])


class TestMembership:
    def test_examples(self):
        S = Semigroup([6, 9, 20])
        assert not S.contains(43)
        assert S.contains(0)
        T = Semigroup([4, 6])
        assert not T.contains(5)
        assert T.contains(10)
        assert not T.contains(-4)

    def test_against_reachability_dp(self):
        rng = random.Random(11)
        for _ in range(12):
            gens = random_generators(rng)
            S = Semigroup(gens)
            members = brute_members(gens, 500)
            for t in range(501):
                assert S.contains(t) == (t in members), (gens, t)


class TestApery:
    def test_six_nine_twenty(self):
        S = Semigroup([6, 9, 20])
        assert S.apery_set(6).elements == (0, 49, 20, 9, 40, 29)

    def test_small_cases(self):
        assert Semigroup([2, 3]).apery_set(2).elements == (0, 3)
        assert Semigroup([4, 6]).apery_set(4).elements == (0, 6)

    def test_rejects_non_elements(self):
        S = Semigroup([6, 9, 20])
        with pytest.raises(ValueError):
            S.apery_set(7)
        with pytest.raises(ValueError):
            S.apery_set(0)

    def test_size_and_distinctness_mod_base(self):
        rng = random.Random(5)
        for _ in range(15):
            gens = random_generators(rng)
            S = Semigroup(gens)
            elems = S.elements_up_to(3 * max(gens))
            m = rng.choice([e for e in elems if e > 0])
            ap = S.apery_set(m)
            assert len(ap) == m // S.d
            assert len({t % m for t in ap.elements}) == len(ap)
            for t in ap.elements:
                assert S.contains(t) and not S.contains(t - m)
            assert S.frobenius() == ap.max_element() - m  # Selmer at any base

    def test_non_multiplicity_base(self):
        S = Semigroup([6, 9, 20])
        ap = S.apery_set(9)
        assert len(ap) == 9
        assert S.frobenius() == ap.max_element() - 9  # Selmer at any base


class TestFrobeniusGenus:
    def test_six_nine_twenty(self):
        S = Semigroup([6, 9, 20])
        assert S.frobenius() == 43
        assert S.genus() == 22

    def test_small(self):
        assert Semigroup([2, 3]).frobenius() == 1
        assert Semigroup([2, 3]).genus() == 1
        assert Semigroup([4, 6]).frobenius() == 2
        assert Semigroup([1]).genus() == 0

    def test_complement_free_convention(self):
        assert Semigroup([1]).frobenius() == -1
        assert Semigroup([2, 4]).frobenius() == -2  # all even numbers present

    def test_genus_equals_gap_count(self):
        rng = random.Random(7)
        for _ in range(15):
            gens = random_generators(rng, hi=40, lo=2)
            S = Semigroup(gens)
            f = S.frobenius()
            members = brute_members(gens, max(f, 0) + 1)
            gaps = [t for t in range(0, max(f, 0) + 1, S.d) if t not in members]
            assert S.genus() == len(gaps), gens
            assert S.frobenius() == (max(gaps) if gaps else -S.d), gens


class TestMinimalGenerators:
    def test_examples(self):
        assert Semigroup([6, 9, 20]).minimal_generators() == (6, 9, 20)
        assert Semigroup([2, 3, 7]).minimal_generators() == (2, 3)
        assert Semigroup([5]).minimal_generators() == (5,)

    def test_regenerates_same_semigroup(self):
        rng = random.Random(13)
        for _ in range(10):
            gens = random_generators(rng)
            S = Semigroup(gens)
            M = Semigroup(S.minimal_generators())
            bound = 3 * max(gens) + 50
            assert S.elements_up_to(bound) == M.elements_up_to(bound)


class TestPseudoFrobenius:
    def test_examples(self):
        assert Semigroup([6, 9, 20]).pseudo_frobenius() == (43,)
        assert Semigroup([6, 9, 20]).type() == 1
        assert Semigroup([2, 3]).pseudo_frobenius() == (1,)
        assert Semigroup([3, 4, 5]).pseudo_frobenius() == (1, 2)
        assert Semigroup([3, 4, 5]).type() == 2

    def test_rejects_gcd_above_one(self):
        with pytest.raises(ValueError):
            Semigroup([4, 6]).pseudo_frobenius()

    def test_against_definition(self):
        rng = random.Random(23)
        done = 0
        while done < 12:
            gens = random_generators(rng)
            S = Semigroup(gens)
            if S.d != 1:
                continue
            assert list(S.pseudo_frobenius()) == brute_pseudo_frobenius(gens, S.frobenius())
            done += 1

    def test_irreducible_odd_frobenius_has_type_one(self):
        # smallest-possible-genus semigroups with odd Frobenius number
        rng = random.Random(31)
        found = 0
        for _ in range(400):
            gens = random_generators(rng, lo=2)
            S = Semigroup(gens)
            f = S.frobenius()
            if S.d == 1 and f > 0 and f % 2 == 1 and S.genus() == (f + 1) // 2:
                assert S.type() == 1, gens
                found += 1
        assert found > 3


class TestConcurrency:
    def test_concurrent_readers_share_a_fresh_value(self):
        # the lazy membership table must be safe to race on
        def probe(S):
            return (S.frobenius(), S.genus(), S.apery_set(S.multiplicity).elements,
                    [S.contains(t) for t in range(200)])

        expected = probe(Semigroup([6, 9, 20]))
        S = Semigroup([6, 9, 20])
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: probe(S), range(16)))
        assert all(r == expected for r in results)


class TestWilf:
    def test_both_formulas(self):
        S = Semigroup([6, 9, 20])
        assert S.wilf_number("variant") == 3 * (43 - 22) - 44 == 19
        assert S.wilf_number("standard") == 3 * 22 - 44 == 22

    def test_two_three(self):
        S = Semigroup([2, 3])
        assert S.wilf_number("standard") == 0
        assert S.wilf_number("variant") == -2  # differs from standard by k

    def test_rejects(self):
        with pytest.raises(ValueError):
            Semigroup([4, 6]).wilf_number()
        with pytest.raises(ValueError):
            Semigroup([2, 3]).wilf_number("other")
