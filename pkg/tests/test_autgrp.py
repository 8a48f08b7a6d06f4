"""Tests for automorphism groups and double-coset uniqueness counts."""

import pytest

from amalgamlab.amalgam import build_row
from amalgamlab.autgrp import (
    automorphism_group,
    certify_uniqueness,
    double_coset_count,
    gl2z4_cross_check,
    restrict_to_subgroup,
)
from amalgamlab.grpid import realize
from amalgamlab.perm import PermGroup


KNOWN_AUT_ORDERS = [
    ("C2", 1),
    ("C4", 2),
    ("C4 x C2", 8),
    ("C8", 4),
    ("D8", 8),
    ("Q8", 24),
    ("C4 x C4", 96),
    ("S4", 24),
    ("A4", 24),
    ("A5", 120),
    ("S5", 120),
    ("Frob20", 20),
    ("S4 star S4", 1152),
    ("A4 x A4", 1152),
    ("S4 x S4", 1152),
]


class TestAutomorphismGroup:
    @pytest.mark.parametrize("spec,order", KNOWN_AUT_ORDERS)
    def test_known_orders(self, spec, order):
        aut = automorphism_group(realize(spec))
        assert aut.action.order() == order

    def test_inner_index(self):
        # Out(S4) = 1, Out(A4) = C2, Out(Q8) = S3
        for spec, out in [("S4", 1), ("A4", 2), ("Q8", 6)]:
            aut = automorphism_group(realize(spec))
            assert aut.action.order() == out * aut.inner.order()

    def test_generators_respect_products(self):
        G = realize("D8")
        aut = automorphism_group(G)
        els = aut.elements
        idx = {g: i for i, g in enumerate(els)}
        for a in aut.action.elements():
            for x in els:
                for y in els:
                    assert a(idx[x * y]) == idx[els[a(idx[x])] * els[a(idx[y])]]

    def test_trivial_group(self):
        aut = automorphism_group(PermGroup([], 1))
        assert aut.action.order() == 1


class TestRestriction:
    def test_center_restriction_is_trivial(self):
        # every automorphism preserves the center, acting trivially on C2
        G = realize("D8")
        aut = automorphism_group(G)
        restricted = restrict_to_subgroup(aut, G.center())
        assert restricted.order() == 1

    def test_characteristic_c4_in_d8(self):
        G = realize("D8")
        c4 = next(
            PermGroup([g], G.degree) for g in G.elements() if g.order() == 4)
        aut = automorphism_group(G)
        restricted = restrict_to_subgroup(aut, c4)
        assert restricted.order() == 2


class TestDoubleCosets:
    def test_full_group_single_coset(self):
        aut = automorphism_group(realize("C4 x C2"))
        count, reps = double_coset_count(aut, aut.action, aut.action)
        assert count == 1 and len(reps) == 1

    def test_trivial_subgroups_give_singletons(self):
        aut = automorphism_group(realize("C4 x C2"))
        one = PermGroup([], aut.action.degree)
        count, _ = double_coset_count(aut, one, one)
        assert count == aut.action.order()


class TestUniquenessCertificates:
    @pytest.mark.parametrize(
        "label,count",
        [("Q1^1", 1), ("Q1^2", 1), ("Q1^3", 1), ("Q1^4", 2),
         ("Q2^1", 1), ("Q2^5", 1), ("Q2^7", 1), ("Q3^1", 3)])
    def test_counts(self, label, count):
        report = certify_uniqueness(label)
        assert report["double_cosets"] == count
        assert report["primitive_classes"] == 1
        assert report["ok"]

    def test_q3_1_star_orders(self):
        report = certify_uniqueness("Q3^1")
        assert report["aut_order"] == 96
        assert report["a1_star_order"] == 8
        assert report["a2_star_order"] == 8


class TestGL2Z4:
    def test_cross_check(self):
        check = gl2z4_cross_check()
        assert check["gl_order_96"]
        assert check["aut_is_gl"]
        assert check["aut_order"] == 96
        assert check["a1_matrix_order"] == 8
        assert check["a2_matrix_order"] == 8
        assert check["stars_match_matrices"]

    def test_b_is_c4_squared(self):
        amalgam = build_row("Q3^1")
        g, h = amalgam.b.generators
        assert g.order() == 4 and h.order() == 4
        assert amalgam.b.order() == 16
