"""Amalgam data model, the primitivity decision procedure, and the
25-row catalog.

An amalgam is stored as (A1, A2, B, pi2) with B a literal subgroup of A1
on the same point set, so that the first embedding is inclusion and only
the second needs explicit generator images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .grpid import is_isomorphic, realize
from .perm import (
    Homomorphism,
    PermGroup,
    all_subgroups,
    group_from_text,
    group_to_text,
    parse_cycles,
)


class AmalgamError(ValueError):
    pass


@dataclass
class Amalgam:
    """(A1, A2, B, pi1, pi2) with pi1 = inclusion of B in A1."""

    a1: PermGroup
    a2: PermGroup
    b: PermGroup
    pi2: Homomorphism

    def __post_init__(self):
        if self.b.degree != self.a1.degree:
            raise AmalgamError("B must live on A1's point set")
        if not self.b.is_subgroup_of(self.a1):
            raise AmalgamError("B is not a subgroup of A1")
        if self.pi2.image().order() != self.b.order():
            raise AmalgamError("pi2 is not injective")

    def degree(self):
        return (self.a1.order() // self.b.order(),
                self.a2.order() // self.pi2.image().order())

    def max_common_normal(self) -> PermGroup:
        """The largest K <= B with K normal in A1 and pi2(K) normal in A2.

        Alternates K <- core_A1(K) and K <- pi2^-1(core_A2(pi2(K)));
        orders strictly decrease, so this stabilizes quickly.
        """
        K = self.b
        while True:
            K1 = self.a1.core_of(K)
            image = PermGroup([self.pi2(g) for g in K1.generators],
                              self.a2.degree)
            core2 = self.a2.core_of(image)
            # injectivity of pi2 makes the elementwise pullback a group
            K2 = PermGroup([self.pi2.preimage(g) for g in core2.generators],
                           self.a1.degree)
            if K2.order() == K.order():
                return K2
            K = K2

    def is_primitive(self) -> bool:
        return self.max_common_normal().is_trivial()


def primitive_brute_oracle(amalgam: Amalgam) -> bool:
    """Primitivity by exhausting the subgroups of B; needs |B| <= 64."""
    if amalgam.b.order() > 64:
        raise AmalgamError("brute oracle needs |B| <= 64")
    for sub in all_subgroups(amalgam.b):
        if len(sub) == 1:
            continue
        K = PermGroup(sorted(sub, key=lambda g: g.images),
                      amalgam.b.degree)
        if not K.is_normal_in(amalgam.a1):
            continue
        image = PermGroup([amalgam.pi2(g) for g in K.generators],
                          amalgam.a2.degree)
        if image.is_normal_in(amalgam.a2):
            return False
    return True


# -- the 25-row catalog --------------------------------------------------------

@dataclass(frozen=True)
class CatalogRow:
    """One row of the classification: names, expected orders and the
    hard-coded embedding data (cycle strings on the realized point
    sets).  Geometric rows (s >= 4) carry a builder key instead."""

    label: str
    a1_name: str
    a2_name: str
    b_name: str
    s: int
    b_order: int
    b_gens: tuple = ()
    pi2_images: tuple = ()
    geometric: bool = False
    notes: tuple = ()

    @property
    def family(self) -> int:
        return self.s


# For each s <= 3 row: B generators inside the standard realization of
# A1, and their images inside the standard realization of A2.  Where the
# catalog leaves the embedding open, any choice passing primitivity is
# the unique amalgam of the type (each of these rows has Goldschmidt
# double-coset count 1 except Q1^4 and Q3^1, whose counts are 2 and 3
# with a single primitive class; autgrp certifies this).
CATALOG_ROWS = (
    CatalogRow("Q1^1", "C5", "C2", "1", 1, 1),
    CatalogRow("Q1^2", "D10", "2^2", "C2", 1, 2,
               ("(2,5)(3,4)",), ("(1,2)",)),
    CatalogRow("Q1^3", "D10", "C4", "C2", 1, 2,
               ("(2,5)(3,4)",), ("(1,3)(2,4)",)),
    CatalogRow("Q1^4", "D20", "D8", "2^2", 1, 4,
               ("(1,6)(2,7)(3,8)(4,9)(5,10)",
                "(2,10)(3,9)(4,8)(5,7)"),
               ("(2,4)", "(1,3)")),
    CatalogRow("Q2^1", "Frob20", "C4 x C2", "C4", 2, 4,
               ("(2,3,5,4)",), ("(1,2,3,4)",)),
    CatalogRow("Q2^2", "Frob20", "C8", "C4", 2, 4,
               ("(2,3,5,4)",), ("(1,3,5,7)(2,4,6,8)",)),
    CatalogRow("Q2^3", "Frob20", "D8", "C4", 2, 4,
               ("(2,3,5,4)",), ("(1,2,3,4)",)),
    CatalogRow("Q2^4", "Frob20", "Q8", "C4", 2, 4,
               ("(2,3,5,4)",), ("(1,2,3,4)(5,8,7,6)",)),
    CatalogRow("Q2^5", "Frob20 x C2", "N16", "C4 x C2", 2, 8,
               ("(2,3,5,4)", "(6,7)"),
               ("(1,2,3,4)(5,6,7,8)", "(5,7)(6,8)")),
    CatalogRow("Q2^6", "Frob20 x C2", "M16", "C4 x C2", 2, 8,
               ("(2,3,5,4)", "(6,7)"),
               ("(1,3,5,7)(2,4,6,8)", "(2,6)(4,8)")),
    CatalogRow("Q2^7", "A5", "S4", "A4", 2, 12,
               ("(1,2,3)", "(2,3,4)"),
               ("(1,2,3)", "(2,3,4)")),
    CatalogRow("Q2^8", "A5", "A4 x C2", "A4", 2, 12,
               ("(1,2,3)", "(2,3,4)"),
               ("(1,2,3)", "(2,3,4)")),
    CatalogRow("Q2^9", "S5", "S4 x C2", "S4", 2, 24,
               ("(1,2,3,4)", "(1,2)"),
               ("(1,2,3,4)", "(1,2)")),
    CatalogRow("Q3^1", "Frob20 x C4", "C4 wr C2", "C4 x C4", 3, 16,
               ("(2,3,5,4)", "(6,7,8,9)"),
               ("(1,2,3,4)", "(5,6,7,8)")),
    CatalogRow("Q3^2", "A5 x A4", "A4 wr C2", "A4 x A4", 3, 144,
               ("(1,2,3)", "(2,3,4)", "(6,7,8)", "(7,8,9)"),
               ("(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)")),
    CatalogRow("Q3^3", "S5 star S4", "L1", "S4 star S4", 3, 288,
               ("(1,2,3)", "(2,3,4)", "(6,7,8)", "(7,8,9)",
                "(2,3)(6,7)"),
               ("(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)",
                "(2,3)(5,6)")),
    CatalogRow("Q3^4", "S5 star S4", "L2", "S4 star S4", 3, 288,
               ("(1,2,3)", "(2,3,4)", "(6,7,8)", "(7,8,9)",
                "(2,3)(6,7)"),
               ("(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)",
                "(2,3)(5,6)")),
    CatalogRow("Q3^5", "S5 x S4", "S4 wr C2", "S4 x S4", 3, 576,
               ("(1,2,3,4)", "(1,2)", "(6,7,8,9)", "(6,7)"),
               ("(1,2,3,4)", "(1,2)", "(5,6,7,8)", "(5,6)")),
    CatalogRow("Q4^1", "2^4:A5", "2^(2+2+2):S3", "2^4:A4", 4, 192,
               geometric=True),
    CatalogRow("Q4^2", "2^4:A5", "2^(2+2+2):C6", "2^4:A4", 4, 192,
               geometric=True),
    CatalogRow("Q4^3", "2^4:(A5xC3)", "(2^(2+4):3):S3", "2^(2+4):3^2",
               4, 576, geometric=True),
    CatalogRow("Q4^4", "2^4:(A5xC3)", "(2^(2+4):3):C6", "2^(2+4):3^2",
               4, 576, geometric=True),
    CatalogRow("Q4^5", "2^4:S5", "2^(2+4+1):S3", "2^(2+4):S3",
               4, 384, geometric=True),
    CatalogRow("Q4^6", "2^4:S5*S3", "2^(2+4):S3^2", "2^(2+4):S4*S3",
               4, 1152, geometric=True,
               notes=("catalog lists B with order 4608; the geometric "
                      "construction gives |B| = |A1|/5 = 1152",)),
    CatalogRow("Q5^1", "2^6:S5*S3", "(2^6:(A4xC3)):C4", "2^6:S4*S3",
               5, 4608, geometric=True),
)

ROWS_BY_LABEL = {row.label: row for row in CATALOG_ROWS}


def _build_standard(row: CatalogRow) -> Amalgam:
    a1 = realize(row.a1_name)
    a2 = realize(row.a2_name)
    if row.b_gens:
        b = PermGroup([parse_cycles(t, a1.degree) for t in row.b_gens],
                      a1.degree)
        images = [parse_cycles(t, a2.degree) for t in row.pi2_images]
    else:
        b = PermGroup.trivial(a1.degree)
        images = []
    pi2 = Homomorphism.define(b, a2, images)
    if pi2 is None:
        raise AmalgamError(f"{row.label}: pi2 images do not extend")
    return Amalgam(a1, a2, b, pi2)


def _build_geometric(row: CatalogRow) -> Amalgam:
    from . import geometry

    if row.label == "Q5^1":
        a1, a2, b, images = geometry.build_q5_amalgam()
    else:
        a1, a2, b, images = geometry.build_q4_amalgam(row.label)
    pi2 = Homomorphism.define(b, a2, images)
    if pi2 is None:
        raise AmalgamError(f"{row.label}: pi2 images do not extend")
    return Amalgam(a1, a2, b, pi2)


@lru_cache(maxsize=None)
def build_row(label: str) -> Amalgam:
    row = ROWS_BY_LABEL[label]
    if row.geometric:
        return _build_geometric(row)
    return _build_standard(row)


def catalog():
    """All 25 (CatalogRow, Amalgam) pairs."""
    return [(row, build_row(row.label)) for row in CATALOG_ROWS]


def pi2_variants(label: str, images_list):
    """The amalgam of a catalog row with pi2 replaced by each image
    tuple; used to exhibit non-primitive twists of the same type."""
    row = ROWS_BY_LABEL[label]
    base = build_row(label)
    out = []
    for images in images_list:
        perms = [parse_cycles(t, base.a2.degree) for t in images]
        pi2 = Homomorphism.define(base.b, base.a2, perms)
        if pi2 is None:
            raise AmalgamError(f"{label}: variant images do not extend")
        out.append(Amalgam(base.a1, base.a2, base.b, pi2))
    return out


def q3_1_variants():
    """Three embeddings of C4 x C4 into C4 wr C2 over the same vertex
    group: the catalog one (primitive) and two twists that admit a
    common normal subgroup."""
    return pi2_variants("Q3^1", [
        ("(1,2,3,4)", "(5,6,7,8)"),
        ("(1,2,3,4)", "(1,2,3,4)(5,6,7,8)"),
        ("(1,2,3,4)", "(1,4,3,2)(5,6,7,8)"),
    ])


def verify_row(label: str) -> dict:
    """All machine checks for one catalog row (graph measurements are
    layered on separately)."""
    row = ROWS_BY_LABEL[label]
    amalgam = build_row(label)
    b_order = amalgam.b.order()
    checks = {
        "degree": amalgam.degree() == (5, 2),
        "orders": (amalgam.a1.order() == 5 * b_order
                   and amalgam.a2.order() == 2 * b_order
                   and b_order == row.b_order),
        "primitive": amalgam.is_primitive(),
        "b_primes": _prime_divisors(b_order) <= {2, 3},
    }
    if b_order <= 64:
        checks["brute_oracle"] = (primitive_brute_oracle(amalgam)
                                  == checks["primitive"])
    if not row.geometric:
        checks["a1_type"] = amalgam.a1.generators == realize(
            row.a1_name).generators
        checks["a2_type"] = amalgam.a2.generators == realize(
            row.a2_name).generators
        if row.b_name == "1":
            checks["b_type"] = amalgam.b.is_trivial()
        else:
            checks["b_type"] = is_isomorphic(
                amalgam.b, realize(row.b_name)) is not None
    return {
        "label": label,
        "s": row.s,
        "orders": (amalgam.a1.order(), amalgam.a2.order(), b_order),
        "checks": checks,
        "ok": all(checks.values()),
        "notes": list(row.notes),
    }


def _prime_divisors(n: int):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


# -- file format ---------------------------------------------------------------

def amalgam_to_text(amalgam: Amalgam) -> str:
    """Three group blocks plus one pi2 line per B generator (images
    written as cycle strings on A2's points)."""
    lines = ["a1:", group_to_text(amalgam.a1).rstrip("\n"),
             "a2:", group_to_text(amalgam.a2).rstrip("\n"),
             "b:", group_to_text(amalgam.b).rstrip("\n")]
    for g in amalgam.b.generators:
        lines.append(f"pi2: {amalgam.pi2(g).cycle_string()}")
    return "\n".join(lines) + "\n"


def amalgam_from_text(text: str) -> Amalgam:
    sections = {"a1": [], "a2": [], "b": []}
    pi2_lines = []
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line in ("a1:", "a2:", "b:"):
            current = line[:-1]
        elif line.startswith("pi2:"):
            pi2_lines.append(line[4:].strip())
        elif current is None:
            raise AmalgamError(f"content before any block: {line!r}")
        else:
            sections[current].append(line)
    groups = {}
    for key, body in sections.items():
        if not body:
            raise AmalgamError(f"missing block {key}")
        groups[key] = group_from_text("\n".join(body))
    b = groups["b"]
    if len(pi2_lines) != len(b.generators):
        raise AmalgamError("need one pi2 line per B generator")
    images = [parse_cycles(t, groups["a2"].degree) for t in pi2_lines]
    pi2 = Homomorphism.define(b, groups["a2"], images)
    if pi2 is None:
        raise AmalgamError("pi2 lines do not define a homomorphism")
    return Amalgam(groups["a1"], groups["a2"], b, pi2)
