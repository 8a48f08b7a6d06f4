"""Tests for the permutation and stabilizer-chain core."""

import random

import pytest

from amalgamlab.perm import (
    DegreeMismatch,
    ParseError,
    PermGroup,
    Permutation,
    all_subgroups,
    closure_elements,
    group_from_text,
    group_to_text,
    parse_cycles,
)


def perm(text, degree):
    return parse_cycles(text, degree)


class TestCompose:
    def test_cycle_square(self):
        p = perm("(1,2,3)", 3)
        assert p * p == perm("(1,3,2)", 3)

    def test_identity(self):
        p = perm("(1,2,3)", 5)
        e = Permutation.identity(5)
        assert p * e == p
        assert e * p == p

    def test_klein_four(self):
        # hand product in V4, left factor applied first
        a = perm("(1,2)(3,4)", 4)
        b = perm("(1,3)(2,4)", 4)
        assert a * b == perm("(1,4)(2,3)", 4)

    def test_left_first_convention(self):
        p = perm("(1,2)", 3)
        q = perm("(2,3)", 3)
        # (p*q)(x) = q(p(x)): 1 ->p 2 ->q 3
        assert (p * q)(0) == 2

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            perm("(1,2)", 2) * perm("(1,2)", 3)

    def test_inverse(self):
        rng = random.Random(7)
        S6 = PermGroup.from_cycles(6, "(1,2,3,4,5,6)", "(1,2)")
        for _ in range(50):
            g = S6.random_element(rng)
            assert g * g.inverse() == Permutation.identity(6)

    def test_conjugation_and_commutator(self):
        x = perm("(1,2)", 4)
        y = perm("(1,3,2,4)", 4)
        assert x ** y == y.inverse() * x * y
        assert x.commutator(y) == x.inverse() * y.inverse() * x * y


class TestParseCycles:
    def test_two_four_cycles(self):
        p = parse_cycles("(1,2,3,4)(5,6,7,8)", 8)
        assert list(p.images) == [1, 2, 3, 0, 5, 6, 7, 4]

    def test_empty_is_identity(self):
        assert parse_cycles("", 5) == Permutation.identity(5)
        assert parse_cycles("()", 5) == Permutation.identity(5)

    def test_involution(self):
        p = parse_cycles("(2,6)(4,8)", 8)
        assert p.order() == 2
        assert p(1) == 5 and p(3) == 7

    def test_repeated_point(self):
        with pytest.raises(ParseError):
            parse_cycles("(1,2)(2,3)", 4)

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            parse_cycles("(1,9)", 4)

    def test_malformed(self):
        with pytest.raises(ParseError):
            parse_cycles("(1,2", 4)

    def test_roundtrip(self):
        p = parse_cycles("(1,5,3)(2,8)", 8)
        assert parse_cycles(p.cycle_string(), 8) == p


class TestGroupOrder:
    def test_c5(self):
        assert PermGroup.from_cycles(5, "(1,2,3,4,5)").order() == 5

    def test_s3_star_s3(self):
        G = PermGroup.from_cycles(6, "(1,2,3)", "(4,5,6)", "(2,3)(4,5)")
        assert G.order() == 18

    def test_l1_order(self):
        G = PermGroup.from_cycles(
            8,
            "(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)",
            "(1,2)(5,6)", "(1,5)(2,6)(3,7)(4,8)",
        )
        assert G.order() == 576

    def test_chain_matches_closure(self):
        rng = random.Random(11)
        S7 = PermGroup.from_cycles(7, "(1,2,3,4,5,6,7)", "(1,2)")
        for _ in range(50):
            gens = [S7.random_element(rng) for _ in range(rng.randint(1, 3))]
            G = PermGroup(gens, 7)
            assert G.order() == len(closure_elements(gens, 7))


class TestMembership:
    def test_parity(self):
        G = PermGroup.from_cycles(3, "(1,2,3)")
        ok, _ = G.membership(perm("(1,2)", 3))
        assert not ok

    def test_generators(self):
        G = PermGroup.from_cycles(6, "(1,2,3)", "(4,5,6)", "(2,3)(4,5)")
        for g in G.generators:
            ok, w = G.membership(g)
            assert ok

    def test_square_of_four_cycle(self):
        G = PermGroup.from_cycles(4, "(1,2,3,4)")
        ok, _ = G.membership(perm("(1,3)(2,4)", 4))
        assert ok

    def test_witness_evaluates_back(self):
        rng = random.Random(3)
        G = PermGroup.from_cycles(8, "(1,2,3,4,5,6,7,8)", "(1,2)")
        for _ in range(1000):
            g = G.random_element(rng)
            ok, word = G.membership(g)
            assert ok
            prod = Permutation.identity(8)
            for u in word:
                prod = prod * u
            assert prod == g


class TestStabilizers:
    def test_all_points_fixed(self):
        G = PermGroup.from_cycles(4, "(1,2,3,4)", "(1,2)")
        assert G.pointwise_stabilizer(range(4)).order() == 1

    def test_regular_action(self):
        G = PermGroup.from_cycles(5, "(1,2,3,4,5)")
        assert G.pointwise_stabilizer([0]).order() == 1

    def test_s5_point_stabilizer(self):
        G = PermGroup.from_cycles(5, "(1,2,3,4,5)", "(1,2)")
        assert G.pointwise_stabilizer([0]).order() == 24

    def test_orbit_stabilizer(self):
        rng = random.Random(19)
        S6 = PermGroup.from_cycles(6, "(1,2,3,4,5,6)", "(1,2)")
        for _ in range(20):
            gens = [S6.random_element(rng) for _ in range(2)]
            G = PermGroup(gens, 6)
            for pt in range(6):
                stab = G.pointwise_stabilizer([pt])
                assert len(G.orbit(pt)) * stab.order() == G.order()


class TestCoreAndFriends:
    def test_core_of_normal(self):
        S4 = PermGroup.from_cycles(4, "(1,2,3,4)", "(1,2)")
        V4 = PermGroup.from_cycles(4, "(1,2)(3,4)", "(1,3)(2,4)")
        assert S4.core_of(V4).order() == 4

    def test_core_in_a4(self):
        A4 = PermGroup.from_cycles(4, "(1,2,3)", "(2,3,4)")
        H = PermGroup.from_cycles(4, "(1,2)(3,4)")
        assert A4.core_of(H).order() == 1

    def test_core_brute_agreement(self):
        # largest subgroup of H normal in A, by exhaustion over subgroups of H
        rng = random.Random(23)
        S4 = PermGroup.from_cycles(4, "(1,2,3,4)", "(1,2)")
        for _ in range(10):
            gens = [S4.random_element(rng) for _ in range(2)]
            H = PermGroup(gens, 4)
            core = S4.core_of(H)
            best = 1
            for sub in all_subgroups(H):
                K = PermGroup(sorted(sub, key=lambda g: g.images), 4)
                if K.is_normal_in(S4):
                    best = max(best, K.order())
            assert core.order() == best
            assert core.is_normal_in(S4)
            assert core.is_subgroup_of(H)

    def test_normal_closure(self):
        S4 = PermGroup.from_cycles(4, "(1,2,3,4)", "(1,2)")
        N = S4.normal_closure([perm("(1,2)(3,4)", 4)])
        assert N.order() == 4

    def test_center_q8(self):
        # Q8 in its regular action on 8 points
        i = perm("(1,2,3,4)(5,8,7,6)", 8)
        j = perm("(1,5,3,7)(2,6,4,8)", 8)
        Q8 = PermGroup([i, j], 8)
        assert Q8.order() == 8
        assert Q8.center().order() == 2

    def test_intersection(self):
        H = PermGroup.from_cycles(3, "(1,2)")
        K = PermGroup.from_cycles(3, "(1,3)")
        assert H.intersection(K).order() == 1
        assert H.intersection(H).order() == 2

    def test_centralizer(self):
        S4 = PermGroup.from_cycles(4, "(1,2,3,4)", "(1,2)")
        C = S4.centralizer_of_element(perm("(1,2,3,4)", 4))
        assert C.order() == 4


class TestGroupFile:
    def test_roundtrip(self):
        G = PermGroup.from_cycles(6, "(1,2,3)", "(4,5,6)", "(2,3)(4,5)")
        text = group_to_text(G)
        H = group_from_text(text)
        assert H.degree == 6
        assert H.generators == G.generators
        assert group_to_text(H) == text

    def test_comments_ignored(self):
        text = "# a comment\ndegree 5\n(1,2,3,4,5)\n# trailing\n"
        G = group_from_text(text)
        assert G.order() == 5


class TestPropertySuite:
    def test_algebra_laws(self):
        # associativity, inverse laws, conjugation identity on random cases
        rng = random.Random(101)
        S8 = PermGroup.from_cycles(8, "(1,2,3,4,5,6,7,8)", "(1,2)")
        for _ in range(10_000):
            p = S8.random_element(rng)
            q = S8.random_element(rng)
            r = S8.random_element(rng)
            assert (p * q) * r == p * (q * r)
            assert (p * q).inverse() == q.inverse() * p.inverse()
            assert (p ** q) ** q.inverse() == p
