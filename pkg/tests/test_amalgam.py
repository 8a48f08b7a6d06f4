"""Catalog integrity, the primitivity decision, and its brute oracle."""

import pytest

from amalgamlab.amalgam import (
    ROWS_BY_LABEL,
    amalgam_from_text,
    amalgam_to_text,
    build_row,
    catalog,
    primitive_brute_oracle,
    q3_1_variants,
    verify_row,
)

ALL_LABELS = list(ROWS_BY_LABEL)


class TestCatalogShape:
    def test_row_count(self):
        assert len(ROWS_BY_LABEL) == 25

    def test_s_column(self):
        expected = [1] * 4 + [2] * 9 + [3] * 5 + [4] * 6 + [5]
        assert [r.s for r in ROWS_BY_LABEL.values()] == expected

    def test_q2_6_names(self):
        row = ROWS_BY_LABEL["Q2^6"]
        assert row.b_order == 8
        assert row.a2_name == "M16"

    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_degree_and_orders(self, label):
        row = ROWS_BY_LABEL[label]
        amalgam = build_row(label)
        assert amalgam.degree() == (5, 2)
        assert amalgam.b.order() == row.b_order
        assert amalgam.a1.order() == 5 * row.b_order
        assert amalgam.a2.order() == 2 * row.b_order

    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_primitive(self, label):
        assert build_row(label).is_primitive()

    @pytest.mark.parametrize("label", ALL_LABELS)
    def test_b_prime_divisors(self, label):
        n = ROWS_BY_LABEL[label].b_order
        for p in (2, 3):
            while n % p == 0:
                n //= p
        assert n == 1

    def test_catalog_pairs(self):
        rows = catalog()
        assert len(rows) == 25
        assert all(row.label == label for (row, _), label
                   in zip(rows, ALL_LABELS))


class TestBruteOracle:
    @pytest.mark.parametrize("label", [
        lbl for lbl, r in ROWS_BY_LABEL.items() if r.b_order <= 64])
    def test_agreement_on_catalog(self, label):
        amalgam = build_row(label)
        assert primitive_brute_oracle(amalgam) == amalgam.is_primitive()

    def test_agreement_on_twists(self):
        for amalgam in q3_1_variants():
            assert primitive_brute_oracle(amalgam) == amalgam.is_primitive()


class TestVariants:
    def test_three_outcomes(self):
        first, second, third = q3_1_variants()
        assert first.is_primitive()
        assert not second.is_primitive()
        assert not third.is_primitive()

    def test_second_kernel_is_h(self):
        # h is the B generator embedded away from the central factor
        second = q3_1_variants()[1]
        K = second.max_common_normal()
        assert K.order() == 4
        h = second.b.generators[1]
        assert h in K

    def test_third_kernel(self):
        K = q3_1_variants()[2].max_common_normal()
        assert K.order() == 4


class TestVerifyRow:
    @pytest.mark.parametrize("label", ["Q1^1", "Q2^6", "Q2^9", "Q3^1",
                                       "Q4^1", "Q5^1"])
    def test_all_checks_pass(self, label):
        out = verify_row(label)
        assert out["ok"], out["checks"]

    def test_q2_9_orders(self):
        out = verify_row("Q2^9")
        assert out["orders"] == (120, 48, 24)

    def test_q4_6_note_recorded(self):
        out = verify_row("Q4^6")
        assert any("4608" in note for note in out["notes"])
        assert out["orders"][2] == 1152


class TestSerialization:
    def test_round_trip(self):
        amalgam = build_row("Q3^1")
        text = amalgam_to_text(amalgam)
        back = amalgam_from_text(text)
        assert back.a1.order() == amalgam.a1.order()
        assert back.degree() == (5, 2)
        assert back.is_primitive()
