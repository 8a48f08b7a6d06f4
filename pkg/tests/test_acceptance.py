"""Acceptance gate: the nine top-level criteria, one test (and one
pass/fail line) each.

Criterion 7's third clause (a cyclic forward image of order 4 on every
s = 3 row) is recorded as an expected failure: the clause holds for
Q3^1 but is structurally impossible for Q3^2 - Q3^5, whose vertex
groups induce A5 or S5 on the five neighbours, so the forward image is
A4- or S4-shaped.  See /root/notes/decisions.md for the analysis; the
attainable clauses of criterion 7 are asserted before the xfail.
"""

import random
import time

import pytest

from amalgamlab.amalgam import (
    ROWS_BY_LABEL,
    build_row,
    primitive_brute_oracle,
    q3_1_variants,
)
from amalgamlab.autgrp import certify_uniqueness, gl2z4_cross_check
from amalgamlab.fpgroups import TABLE3, verify_presentation_s_le_3
from amalgamlab.geometry import gq44_incidence_graph, pg24_incidence_graph
from amalgamlab.graphsym import graph_automorphisms
from amalgamlab.perm import PermGroup, Permutation, closure_elements
from amalgamlab.svalue import certified_completion, measure_row
from amalgamlab.witnesses import verify_all_assignments

ALL_LABELS = list(ROWS_BY_LABEL)
S_LE_3 = [lbl for lbl in ALL_LABELS if ROWS_BY_LABEL[lbl].s <= 3]


def report(n, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {n}: {status} - {detail}")


def test_criterion_1_catalog_integrity():
    start = time.monotonic()
    assert len(ALL_LABELS) == 25
    for label in ALL_LABELS:
        amalgam = build_row(label)
        b = amalgam.b.order()
        assert amalgam.degree() == (5, 2), label
        assert amalgam.is_primitive(), label
        assert amalgam.a1.order() == 5 * b, label
        assert amalgam.a2.order() == 2 * b, label
    elapsed = time.monotonic() - start
    assert elapsed < 120
    report(1, True, f"25 rows, degree (5,2), primitive, orders 5|B| "
           f"and 2|B|, {elapsed:.1f}s")


def test_criterion_2_oracle_agreement():
    small = [lbl for lbl in ALL_LABELS if ROWS_BY_LABEL[lbl].b_order <= 64]
    for label in small:
        amalgam = build_row(label)
        assert primitive_brute_oracle(amalgam) == amalgam.is_primitive(), \
            label
    report(2, True, f"iterated core == brute subgroup enumeration on "
           f"{len(small)} rows with |B| <= 64")


def test_criterion_3_variant_reproduction():
    first, second, third = q3_1_variants()
    assert first.is_primitive()
    assert not second.is_primitive()
    k2 = second.max_common_normal()
    h = second.b.generators[1]
    assert k2.order() == 4 and h in k2  # K = <h>
    assert not third.is_primitive()
    report(3, True, "three twists give (primitive, K = <h>, "
           "non-primitive)")


def test_criterion_4_goldschmidt_counts():
    expected = {"Q1^4": 2, "Q3^1": 3}
    for label in S_LE_3:
        cert = certify_uniqueness(label)
        assert cert["double_cosets"] == expected.get(label, 1), label
        if label in expected:
            assert cert["primitive_classes"] == 1, label
        assert cert["ok"], label
    q31 = certify_uniqueness("Q3^1")
    assert q31["a1_star_order"] == 8
    assert q31["a2_star_order"] == 8
    assert q31["aut_order"] == 96
    cross = gl2z4_cross_check()
    assert cross["gl_order_96"] and cross["aut_is_gl"]
    assert cross["a1_matrix_order"] == 8
    assert cross["a2_matrix_order"] == 8
    assert cross["stars_match_matrices"]
    report(4, True, "double cosets 1 except Q1^4 (2) and Q3^1 (3), one "
           "primitive class each; Q3^1 stars order 8 inside "
           "Aut(C4 x C4) = GL2(Z/4) of order 96, matching the matrix "
           "generators")


def test_criterion_5_presentations():
    start = time.monotonic()
    for label in S_LE_3:
        amalgam = build_row(label)
        out = verify_presentation_s_le_3(
            TABLE3[label], amalgam.b, amalgam.a1, amalgam.a2,
            max_cosets=1_000_000)
        assert out["ok"], label
    elapsed = time.monotonic() - start
    assert elapsed < 300
    report(5, True, f"18 rows: enumerated orders (|B|, 5|B|, 2|B|) and "
           f"isomorphism certificates, {elapsed:.1f}s")


def test_criterion_6_geometry():
    start = time.monotonic()
    plane = pg24_incidence_graph()
    assert plane.n == 42
    assert plane.girth() == 6
    assert graph_automorphisms(plane).order() == 241920
    quad = gq44_incidence_graph()
    assert quad.n == 170
    assert quad.girth() == 8
    assert graph_automorphisms(quad).order() == 3916800
    elapsed = time.monotonic() - start
    assert elapsed < 600
    report(6, True, f"42/girth-6/241920 and 170/girth-8/3916800, "
           f"{elapsed:.1f}s")


def test_criterion_7_s_values():
    expected_s = [1] * 4 + [2] * 9 + [3] * 5 + [4] * 6 + [5]
    measured = {lbl: measure_row(lbl) for lbl in ALL_LABELS}
    assert [measured[lbl]["s"] for lbl in ALL_LABELS] == expected_s
    for label in ALL_LABELS:
        if ROWS_BY_LABEL[label].s == 2:
            assert measured[label]["local"]["index"] != 4, label
        if ROWS_BY_LABEL[label].s == 3:
            assert measured[label]["local"]["index"] == 4, label
    cyclic_fail = [
        label for label in ALL_LABELS if ROWS_BY_LABEL[label].s == 3
        and not (measured[label]["local"]["forward_image_cyclic"]
                 and measured[label]["local"]["forward_image_order"] == 4)]
    if cyclic_fail:
        orders = {lbl: measured[lbl]["local"]["forward_image_order"]
                  for lbl in cyclic_fail}
        report(7, False, f"s column and index clauses hold, but the "
               f"cyclic-of-order-4 forward image holds only for Q3^1; "
               f"image orders {orders} (structurally forced: the local "
               f"action A5/S5 has point stabilizer A4/S4)")
        pytest.xfail("forward image cyclic of order 4 is unattainable "
                     "for Q3^2 - Q3^5; see /root/notes/decisions.md")
    report(7, True, "s column reproduced and all local clauses hold")


def test_criterion_8_witnesses():
    results = verify_all_assignments()
    assert list(results) == ["Q4^1", "Q4^2", "Q4^3", "Q4^4", "Q4^5",
                             "Q4^6", "Q5^1"]
    for label, out in results.items():
        assert out["ok"], (label, out)
    report(8, True, "frozen (a, e0, c, f, g) assignments satisfy every "
           "relator and generate all 7 geometric completions")


def test_criterion_9_property_suites():
    rng = random.Random(90125)
    S8 = PermGroup.from_cycles(8, "(1,2,3,4,5,6,7,8)", "(1,2)")
    ident = Permutation.identity(8)
    for _ in range(2500):
        p, q, r = (S8.random_element(rng) for _ in range(3))
        for x in range(8):
            assert (p * q)(x) == q(p(x))
        assert (p * q) * r == p * (q * r)
        assert p * p.inverse() == ident
        assert (p ** (q * r)) == ((p ** q) ** r)
    S7 = PermGroup.from_cycles(7, "(1,2,3,4,5,6,7)", "(1,2)")
    for _ in range(50):
        gens = [S7.random_element(rng) for _ in range(rng.randint(1, 3))]
        assert PermGroup(gens, 7).order() == len(closure_elements(gens, 7))
    for label in ALL_LABELS:
        n = ROWS_BY_LABEL[label].b_order
        for p in (2, 3):
            while n % p == 0:
                n //= p
        assert n == 1, label
        action, _ = certified_completion(label)
        graph = action.graph
        assert all(len(graph.adj[v]) == 5 for v in range(graph.n)), label
        assert action.group.pointwise_stabilizer([0]).order() == \
            5 * ROWS_BY_LABEL[label].b_order, label
    report(9, True, "10^4 algebra laws, 50 chain-vs-closure groups, "
           "prime check and valency/stabilizer checks on all 25 "
           "completions")
