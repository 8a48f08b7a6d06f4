"""Automorphism groups of small groups, induced actions on a common
subgroup, and double-coset counting for uniqueness certificates.

Aut(G) is represented as a permutation group on the sorted element list
of G, so stabilizer-chain machinery certifies its order and all
subgroup computations stay inside one representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .amalgam import Amalgam, ROWS_BY_LABEL, build_row
from .grpid import minimal_generating_set
from .perm import Homomorphism, PermGroup, Permutation

AUT_ORDER_CAP = 3000


class AutError(ValueError):
    pass


def _sorted_elements(G: PermGroup):
    return sorted(G.elements(), key=lambda g: g.images)


@dataclass
class AutGroup:
    """Aut(base) acting on the sorted element list of base."""

    base: PermGroup
    elements: tuple          # sorted elements of base
    action: PermGroup        # degree len(elements)
    inner: PermGroup

    def index_of(self, g: Permutation) -> int:
        return self._index[g]

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self.elements) <= 500:
            for a in self.action.generators:
                if not self._is_automorphism(a):
                    raise AutError("generator fails the multiplication table")

    def _is_automorphism(self, a: Permutation) -> bool:
        els = self.elements
        idx = self._index
        if a(idx[self.base.identity]) != idx[self.base.identity]:
            return False
        for x in els:
            for y in self.base.generators:
                if a(idx[x * y]) != idx[els[a(idx[x])] * els[a(idx[y])]]:
                    return False
        return True

    def element_map(self, a: Permutation):
        """The automorphism named by an action element, as a callable."""
        els, idx = self.elements, self._index
        return lambda g: els[a(idx[g])]


def _conjugacy_data(G: PermGroup, elements):
    """class index and class size per element position."""
    index = {g: i for i, g in enumerate(elements)}
    class_of = [None] * len(elements)
    sizes = []
    for i, g in enumerate(elements):
        if class_of[i] is not None:
            continue
        cls = {i}
        queue = [g]
        while queue:
            x = queue.pop()
            for h in G.generators:
                y = x ** h
                j = index[y]
                if class_of[j] is None and j not in cls:
                    cls.add(j)
                    queue.append(y)
        k = len(sizes)
        for j in cls:
            class_of[j] = k
        sizes.append(len(cls))
    return class_of, sizes


def automorphism_group(G: PermGroup) -> AutGroup:
    """Aut(G) by backtracking over images of a minimal generating set.

    Candidates are filtered by element order and conjugacy-class size;
    complete assignments are certified by walking the Cayley graph
    (Homomorphism.define) plus surjectivity.  Generators are collected
    level by level: the subgroup fixing a prefix of the generating set
    is built recursively and orbit pruning skips images already reached.
    """
    if G.order() > AUT_ORDER_CAP:
        raise AutError(f"automorphism search capped at order {AUT_ORDER_CAP}")
    elements = tuple(_sorted_elements(G))
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    if n == 1:
        action = PermGroup([], 1)
        return AutGroup(G, elements, action, action)

    gens = minimal_generating_set(G)
    source = PermGroup(gens, G.degree)
    class_of, sizes = _conjugacy_data(G, elements)

    def invariant(g):
        return (g.order(), sizes[class_of[index[g]]])

    pools = []
    for g in gens:
        want = invariant(g)
        pools.append([y for y in elements if invariant(y) == want])
    prefix_orders = [PermGroup(gens[:i + 1], G.degree).order()
                     for i in range(len(gens))]
    # orders of pairwise words, a cheap necessary condition on images
    pair_orders = {}
    for j in range(len(gens)):
        for d in range(j + 1, len(gens)):
            x, y = gens[j], gens[d]
            pair_orders[j, d] = ((x * y).order(), (x * y.inverse()).order(),
                                 ((x ** y) * x.inverse()).order())

    def _pair_ok(images, y, depth):
        for j in range(depth):
            x = images[j]
            want = pair_orders[j, depth]
            if (x * y).order() != want[0]:
                return False
            if (x * y.inverse()).order() != want[1]:
                return False
            if ((x ** y) * x.inverse()).order() != want[2]:
                return False
        return True

    def complete(images):
        depth = len(images)
        if depth == len(gens):
            phi = Homomorphism.define(source, G, images)
            if phi is not None and phi.image().order() == G.order():
                return phi
            return None
        for y in pools[depth]:
            if not _pair_ok(images, y, depth):
                continue
            trial = images + [y]
            if PermGroup(trial, G.degree).order() != prefix_orders[depth]:
                continue
            found = complete(trial)
            if found is not None:
                return found
        return None

    def to_perm(phi):
        return Permutation([index[phi(x)] for x in elements])

    def level(i):
        """Generators (as element-perms) of {phi : phi fixes gens[:i]}."""
        if i == len(gens):
            return []
        found = level(i + 1)
        if i == 0:
            # seed with the inner automorphisms
            found = found + [
                Permutation([index[x ** h] for x in elements])
                for h in G.generators]
        group = PermGroup(found, n)
        target = index[gens[i]]
        for y in pools[i]:
            if index[y] in group.orbit(target):
                continue
            phi = complete(list(gens[:i]) + [y])
            if phi is not None:
                found.append(to_perm(phi))
                group = PermGroup(found, n)
        return found

    action = PermGroup(level(0), n)
    inner = PermGroup(
        [Permutation([index[x ** h] for x in elements])
         for h in G.generators], n)
    aut = AutGroup(G, elements, action, inner)
    if action.order() % inner.order():
        raise AutError("inner automorphisms fail to embed")
    if inner.order() != G.order() // G.center().order():
        raise AutError("inner order mismatch")
    return aut


def restrict_to_subgroup(autA: AutGroup, S: PermGroup) -> PermGroup:
    """A* = the Aut(A)-normalizer of S, restricted to S's element list.

    Filters the (small) automorphism group elementwise for maps
    preserving S, then reads each off on the sorted elements of S.
    """
    if not S.is_subgroup_of(autA.base):
        raise AutError("not a subgroup of the automorphized group")
    s_elements = _sorted_elements(S)
    s_index = {g: i for i, g in enumerate(s_elements)}
    positions = [autA.index_of(g) for g in s_elements]
    position_set = set(positions)
    out = []
    for a in autA.action.elements():
        if not all(a(p) in position_set for p in positions):
            continue
        out.append(Permutation(
            [s_index[autA.elements[a(p)]] for p in positions]))
    return PermGroup(sorted(set(out), key=lambda g: g.images),
                     len(s_elements))


def transport_action(perms, source_elements, images_in_target,
                     target_elements):
    """Move an automorphism action along a bijection of element lists
    (e.g. along pi2, from pi2(B) back to B)."""
    t_index = {g: i for i, g in enumerate(target_elements)}
    s_index = {g: i for i, g in enumerate(source_elements)}
    m = [s_index[img] for img in images_in_target]  # target pos -> source pos
    m_inv = {p: i for i, p in enumerate(m)}
    out = []
    for a in perms:
        out.append(Permutation([m_inv[a(m[i])]
                                for i in range(len(target_elements))]))
    return out


def double_coset_count(autB: AutGroup, S1: PermGroup, S2: PermGroup):
    """(count, lexicographically-least representatives) of the
    (S1, S2)-double cosets in Aut(B)."""
    universe = autB.action.elements()
    if len(universe) > 100_000:
        raise AutError("double-coset enumeration bound exceeded")
    remaining = set(universe)
    reps = []
    sizes = []
    g1_invs = [g.inverse() for g in S1.generators]
    g2s = list(S2.generators)
    while remaining:
        seed = min(remaining, key=lambda g: g.images)
        coset = {seed}
        queue = [seed]
        while queue:
            x = queue.pop()
            for h in g1_invs:
                y = h * x
                if y not in coset:
                    coset.add(y)
                    queue.append(y)
            for h in g2s:
                y = x * h
                if y not in coset:
                    coset.add(y)
                    queue.append(y)
        remaining -= coset
        reps.append(seed)
        sizes.append(len(coset))
    if sum(sizes) != len(universe):
        raise AutError("double cosets fail to partition Aut(B)")
    return len(reps), reps


def twist_pi2(amalgam: Amalgam, autB: AutGroup,
              alpha: Permutation) -> Amalgam:
    """The amalgam with pi2 precomposed by the automorphism alpha."""
    mapping = autB.element_map(alpha)
    images = [amalgam.pi2(mapping(g)) for g in amalgam.b.generators]
    pi2 = Homomorphism.define(amalgam.b, amalgam.a2, images)
    if pi2 is None:
        raise AutError("twisted pi2 does not extend")
    return Amalgam(amalgam.a1, amalgam.a2, amalgam.b, pi2)


def certify_uniqueness(label: str) -> dict:
    """Goldschmidt certificate for one s <= 3 row: double-coset count in
    Aut(B) and, when the count exceeds one, the primitivity of every
    class representative's amalgam (exactly one class must be
    primitive)."""
    row = ROWS_BY_LABEL[label]
    if row.s > 3:
        raise AutError("uniqueness beyond s = 3 is out of scope")
    amalgam = build_row(label)
    if amalgam.b.is_trivial():
        return {"label": label, "aut_order": 1, "a1_star_order": 1,
                "a2_star_order": 1, "double_cosets": 1,
                "primitive_classes": 1, "ok": True}
    autB = automorphism_group(amalgam.b)
    autA1 = automorphism_group(amalgam.a1)
    a1_star = restrict_to_subgroup(autA1, amalgam.b)

    autA2 = automorphism_group(amalgam.a2)
    pi2_image = amalgam.pi2.image()
    star_on_image = restrict_to_subgroup(autA2, pi2_image)
    b_elements = _sorted_elements(amalgam.b)
    image_elements = _sorted_elements(pi2_image)
    a2_star = PermGroup(
        transport_action(star_on_image.generators, image_elements,
                         [amalgam.pi2(g) for g in b_elements],
                         b_elements),
        len(b_elements))

    count, reps = double_coset_count(autB, a1_star, a2_star)
    primitive = [twist_pi2(amalgam, autB, rep).is_primitive()
                 for rep in reps]
    expected = {"Q1^4": 2, "Q3^1": 3}.get(label, 1)
    report = {
        "label": label,
        "aut_order": autB.action.order(),
        "a1_star_order": a1_star.order(),
        "a2_star_order": a2_star.order(),
        "double_cosets": count,
        "primitive_classes": sum(primitive),
        "ok": count == expected and sum(primitive) == 1,
    }
    return report


# -- matrix cross-check for the C4 x C4 row --------------------------------------

def _matrix_perm_on_c4xc4(autB: AutGroup, g: Permutation, h: Permutation,
                          m) -> Permutation:
    """The automorphism of B = <g> x <h> sending g^i h^j to
    g^(i m00 + j m10) h^(i m01 + j m11), as an element-perm."""
    idx = {}
    for i in range(4):
        for j in range(4):
            idx[(g ** i) * (h ** j)] = (i, j)
    images = []
    for x in autB.elements:
        i, j = idx[x]
        i2 = (i * m[0][0] + j * m[1][0]) % 4
        j2 = (i * m[0][1] + j * m[1][1]) % 4
        images.append(autB.index_of((g ** i2) * (h ** j2)))
    return Permutation(images)


def gl2z4_cross_check() -> dict:
    """For the C4 x C4 row: Aut(B) is GL2(Z/4) of order 96, and the
    documented matrix generators span groups of orders 8 and 8 matching
    the computed A1*, A2* up to an automorphism of B (a basis change)."""
    amalgam = build_row("Q3^1")
    autB = automorphism_group(amalgam.b)
    g, h = amalgam.b.generators
    all_mats = []
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    if (a * d - b * c) % 2:
                        all_mats.append(((a, b), (c, d)))
    gl = PermGroup(
        [_matrix_perm_on_c4xc4(autB, g, h, m) for m in
         (((1, 1), (0, 1)), ((0, 1), (1, 0)), ((3, 0), (0, 3)),
          ((1, 0), (0, 3)), ((2, 1), (1, 2)))], 16)
    a1_mats = (((1, 0), (0, 3)), ((1, 1), (0, 1)))
    a2_mats = (((3, 0), (0, 3)), ((0, 1), (1, 0)), ((2, 1), (1, 2)))
    a1_m = PermGroup([_matrix_perm_on_c4xc4(autB, g, h, m)
                      for m in a1_mats], 16)
    a2_m = PermGroup([_matrix_perm_on_c4xc4(autB, g, h, m)
                      for m in a2_mats], 16)
    autA1 = automorphism_group(amalgam.a1)
    a1_star = restrict_to_subgroup(autA1, amalgam.b)
    autA2 = automorphism_group(amalgam.a2)
    pi2_image = amalgam.pi2.image()
    star_on_image = restrict_to_subgroup(autA2, pi2_image)
    b_elements = _sorted_elements(amalgam.b)
    a2_star = PermGroup(
        transport_action(star_on_image.generators,
                         _sorted_elements(pi2_image),
                         [amalgam.pi2(x) for x in b_elements],
                         b_elements), 16)
    # one basis change must carry both matrix groups onto the stars
    star1 = set(a1_star.elements())
    star2 = set(a2_star.elements())
    conjugate = any(
        set(a1_m.conjugate_subgroup(x).elements()) == star1
        and set(a2_m.conjugate_subgroup(x).elements()) == star2
        for x in autB.action.elements())
    return {
        "stars_match_matrices": conjugate,
        "gl_order_96": len(all_mats) == 96,
        "aut_order": autB.action.order(),
        "aut_is_gl": (autB.action.order() == 96
                      and all(p in autB.action for p in gl.generators)),
        "a1_matrix_order": a1_m.order(),
        "a2_matrix_order": a2_m.order(),
        "a1_matrix_group": a1_m,
        "a2_matrix_group": a2_m,
        "autB": autB,
    }
