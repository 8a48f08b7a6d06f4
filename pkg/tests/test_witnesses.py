"""The frozen generating assignments for the s >= 4 presentations."""

import pytest

from amalgamlab.fpgroups import TABLE4, evaluate_word
from amalgamlab.witnesses import (
    TABLE4_ASSIGNMENTS,
    assignment_permutations,
    verify_assignment,
)

ALL = list(TABLE4_ASSIGNMENTS)


class TestAssignments:
    def test_every_row_present(self):
        assert ALL == ["Q4^1", "Q4^2", "Q4^3", "Q4^4", "Q4^5", "Q4^6",
                       "Q5^1"]
        assert set(ALL) == set(TABLE4)

    @pytest.mark.parametrize("label", ALL)
    def test_names_match_presentation(self, label):
        assert set(TABLE4_ASSIGNMENTS[label]) == set(
            TABLE4[label].generators)

    @pytest.mark.parametrize("label", ALL)
    def test_relators_die(self, label):
        pres = TABLE4[label]
        assignment = assignment_permutations(label)
        images = [assignment[name] for name in pres.generators]
        degree = images[0].degree
        for word, text in zip(pres.relators, pres.relator_texts):
            assert evaluate_word(word, images, degree).is_identity(), text

    @pytest.mark.parametrize("label", ALL)
    def test_witness_generates(self, label):
        out = verify_assignment(label)
        assert out["ok"], out
        assert out["generated_order"] == out["completion_order"]

    def test_basic_orders(self):
        a = assignment_permutations("Q4^1")
        assert a["e0"].order() == 2
        assert a["c"].order() == 3
        q5 = assignment_permutations("Q5^1")
        assert q5["e0"].order() == 2
        assert q5["c"].order() == 3
