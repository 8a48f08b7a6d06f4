"""Constructors for the named finite groups of the catalog and a
small-group isomorphism decider.

Every named group is realized as a concrete permutation group on its
smallest convenient point set; realizations are deterministic so that
downstream reports are reproducible.  Group names are parsed from a
small textual syntax, e.g. ``Frob20 x C4``, ``S5 star S4``, ``A4 wr C2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .perm import Homomorphism, PermGroup, Permutation, parse_cycles

ISO_ORDER_CAP = 100_000


def _cycle(points, degree):
    images = list(range(degree))
    for i, p in enumerate(points):
        images[p] = points[(i + 1) % len(points)]
    return Permutation(images)


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([_cycle(list(range(n)), n)], n)


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given (even) order, acting on order/2 points."""
    if order % 2 or order < 4:
        raise ValueError("dihedral order must be even and >= 4")
    n = order // 2
    rot = _cycle(list(range(n)), n)
    refl = Permutation([(n - i) % n for i in range(n)])
    return PermGroup([rot, refl], n)


def elementary_abelian_2(k: int) -> PermGroup:
    """2^k as k disjoint transpositions on 2k points."""
    gens = [_cycle([2 * i, 2 * i + 1], 2 * k) for i in range(k)]
    return PermGroup(gens, 2 * k)


def quaternion8() -> PermGroup:
    # regular action on 8 points
    return PermGroup.from_cycles(8, "(1,2,3,4)(5,8,7,6)", "(1,5,3,7)(2,6,4,8)")


def frobenius20() -> PermGroup:
    return PermGroup.from_cycles(5, "(1,2,3,4,5)", "(2,3,5,4)")


def modular16() -> PermGroup:
    return PermGroup.from_cycles(8, "(1,2,3,4,5,6,7,8)", "(2,6)(4,8)")


def n16() -> PermGroup:
    return PermGroup.from_cycles(
        8, "(1,2,3,4)(5,6,7,8)", "(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)")


def _alternating_gens(n: int, offset: int, degree: int):
    if n < 3:
        return []
    return [_cycle([offset + i, offset + i + 1, offset + i + 2], degree)
            for i in range(n - 2)]


def alternating(n: int) -> PermGroup:
    return PermGroup(_alternating_gens(n, 0, n), n)


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return PermGroup.trivial(1)
    gens = [_cycle(list(range(n)), n)]
    if n > 2:
        gens.append(_cycle([0, 1], n))
    return PermGroup(gens, n)


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    d = G.degree + H.degree
    gens = [g.extend(d) for g in G.generators]
    gens += [h.shift(G.degree, d) for h in H.generators]
    return PermGroup(gens, d)


def star_product(m: int, n: int) -> PermGroup:
    """The index-2 subgroup of S_m x S_n without a full symmetric factor.

    Generators: consecutive 3-cycles for A_m and A_n plus the paired
    transpositions (2,3)(m+1,m+2) in 1-based terms.
    """
    if m < 3 or n < 3:
        raise ValueError("star product needs both factors >= 3")
    d = m + n
    gens = _alternating_gens(m, 0, d) + _alternating_gens(n, m, d)
    gens.append(_cycle([1, 2], d) * _cycle([m, m + 1], d))
    return PermGroup(gens, d)


def wreath_c2(base: PermGroup) -> PermGroup:
    """base wr C2 on two shifted copies of the base point set."""
    d = 2 * base.degree
    gens = [g.extend(d) for g in base.generators]
    gens += [g.shift(base.degree, d) for g in base.generators]
    swap = Permutation([(p + base.degree) % d for p in range(d)])
    gens.append(swap)
    return PermGroup(gens, d)


def l1() -> PermGroup:
    return PermGroup.from_cycles(
        8, "(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)",
        "(1,2)(5,6)", "(1,5)(2,6)(3,7)(4,8)")


def l2() -> PermGroup:
    return PermGroup.from_cycles(
        8, "(1,2,3)", "(2,3,4)", "(5,6,7)", "(6,7,8)",
        "(1,6,2,5)(3,7)(4,8)")


# -- named-spec syntax -------------------------------------------------------

_ATOM_RE = re.compile(
    r"1|C(\d+)|D(\d+)|Q8|Frob20|M16|N16|L1|L2|A(\d+)|S(\d+)|2\^(\d+)")


def _realize_atom(token: str) -> PermGroup:
    m = _ATOM_RE.fullmatch(token)
    if m is None:
        raise ValueError(f"unknown group name {token!r}")
    if token == "1":
        return PermGroup.trivial(1)
    if token == "Q8":
        return quaternion8()
    if token == "Frob20":
        return frobenius20()
    if token == "M16":
        return modular16()
    if token == "N16":
        return n16()
    if token == "L1":
        return l1()
    if token == "L2":
        return l2()
    kind, value = token[0], token[1:]
    if kind == "C":
        return cyclic(int(value))
    if kind == "D":
        return dihedral(int(value))
    if kind == "A":
        return alternating(int(value))
    if kind == "S":
        return symmetric(int(value))
    return elementary_abelian_2(int(token[2:]))


@dataclass(frozen=True)
class NamedGroupSpec:
    """A parsed group-name expression, e.g. ``S5 star S4``."""

    text: str

    def realize(self) -> PermGroup:
        return realize(self.text)


def realize(spec: str) -> PermGroup:
    """Build the permutation group named by ``spec``.

    Syntax: atoms (``C4``, ``D8``, ``2^2``, ``A5``, ``S4``, ``Q8``,
    ``Frob20``, ``M16``, ``N16``, ``L1``, ``L2``, ``1``) combined
    left-associatively with ``x`` (direct product), ``wr`` (wreath with
    the following C2) and ``star``.
    """
    tokens = spec.split()
    if not tokens:
        raise ValueError("empty group spec")
    group = _realize_atom(tokens[0])
    last_atom = tokens[0]
    i = 1
    while i < len(tokens):
        op = tokens[i]
        if i + 1 >= len(tokens):
            raise ValueError(f"dangling operator {op!r} in {spec!r}")
        rhs = tokens[i + 1]
        if op == "x":
            group = direct_product(group, _realize_atom(rhs))
        elif op == "wr":
            if rhs != "C2":
                raise ValueError("only wreath products by C2 are supported")
            group = wreath_c2(group)
        elif op == "star":
            m = _ATOM_RE.fullmatch(last_atom)
            n = _ATOM_RE.fullmatch(rhs)
            if (m is None or n is None
                    or last_atom[0] != "S" or rhs[0] != "S" or i != 1):
                raise ValueError("star requires the form 'Sm star Sn'")
            group = star_product(int(last_atom[1:]), int(rhs[1:]))
        else:
            raise ValueError(f"unknown operator {op!r} in {spec!r}")
        last_atom = rhs
        i += 2
    return group


# -- invariants and isomorphism ----------------------------------------------

def _abelian_order_multiset(G: PermGroup, derived: PermGroup):
    """Element-order multiset of G/[G,G] (determines the abelian type)."""
    index = G.order() // derived.order()
    if index == 1:
        return (1,)
    base = frozenset(derived.elements())
    cosets = {base: 0}
    order_of = [None] * index
    order_of[0] = 1
    frontier = [(base, G.identity)]
    reps = [(base, G.identity)]
    while frontier:
        nxt = []
        for coset, rep in frontier:
            for g in G.generators:
                new_rep = rep * g
                new = frozenset(x * g for x in coset)
                if new not in cosets:
                    cosets[new] = len(cosets)
                    nxt.append((new, new_rep))
                    reps.append((new, new_rep))
        frontier = nxt
    for coset, rep in reps:
        k = 1
        power = rep
        while power not in derived:
            power = power * rep
            k += 1
        order_of[cosets[coset]] = k
    return tuple(sorted(order_of))


def fingerprint(G: PermGroup):
    """(order, element-order histogram, |Z|, abelianization, derived length).

    Equal fingerprints are necessary for isomorphism.
    """
    if G.order() > ISO_ORDER_CAP:
        raise ValueError("fingerprint needs order <= 10^5")
    derived = G.derived_subgroup()
    return (
        G.order(),
        tuple(sorted(G.element_order_histogram().items())),
        G.center().order(),
        _abelian_order_multiset(G, derived),
        G.derived_series_length(),
    )


def _conjugacy_classes(G: PermGroup):
    """Conjugacy classes as (representative, frozenset of members)."""
    remaining = set(G.elements())
    classes = []
    while remaining:
        rep = min(remaining, key=lambda g: g.images)
        cls = {rep}
        queue = [rep]
        while queue:
            x = queue.pop()
            for g in G.generators:
                y = x ** g
                if y not in cls:
                    cls.add(y)
                    queue.append(y)
        remaining -= cls
        classes.append((rep, frozenset(cls)))
    return classes


def minimal_generating_set(G: PermGroup):
    """A small generating set found greedily (largest element orders first)."""
    if G.is_trivial():
        return []
    pool = sorted(G.elements(), key=lambda g: (-g.order(), g.images))
    gens = []
    current = PermGroup.trivial(G.degree)
    for g in pool:
        if g in current:
            continue
        gens.append(g)
        current = PermGroup(gens, G.degree)
        if current.order() == G.order():
            return gens
    raise AssertionError("generating set search failed")


def _element_invariant(G: PermGroup, x: Permutation):
    return (x.order(), G.centralizer_of_element(x).order())


def is_isomorphic(G: PermGroup, H: PermGroup):
    """An explicit isomorphism G -> H, or None.

    Fingerprint pruning first, then generator-image backtracking.  The
    image of the first generator only varies over conjugacy-class
    representatives of H (composing with an inner automorphism fixes
    that freedom), and every complete assignment is certified by walking
    the Cayley graph of G.
    """
    if G.order() > ISO_ORDER_CAP or H.order() > ISO_ORDER_CAP:
        raise ValueError("isomorphism test needs orders <= 10^5")
    if fingerprint(G) != fingerprint(H):
        return None
    if G.is_trivial():
        return Homomorphism(G, H, [])
    gens = minimal_generating_set(G)
    source = PermGroup(gens, G.degree)
    inv = [_element_invariant(G, g) for g in gens]
    classes = _conjugacy_classes(H)
    first_candidates = [rep for rep, cls in classes
                        if _element_invariant(H, rep) == inv[0]]
    later_candidates = []
    for i in range(1, len(gens)):
        later_candidates.append(
            [y for y in H.elements() if _element_invariant(H, y) == inv[i]])
    prefix_orders = []
    for i in range(1, len(gens)):
        prefix_orders.append(PermGroup(gens[:i + 1], G.degree).order())

    def extend(images):
        depth = len(images)
        if depth == len(gens):
            phi = Homomorphism.define(source, H, images)
            if phi is not None and phi.is_isomorphism():
                return phi
            return None
        pool = first_candidates if depth == 0 else later_candidates[depth - 1]
        for y in pool:
            if depth >= 1:
                part = PermGroup(images + [y], H.degree)
                if part.order() != prefix_orders[depth - 1]:
                    continue
            found = extend(images + [y])
            if found is not None:
                return found
        return None

    return extend([])


def classify_transitive_s5(G: PermGroup) -> str:
    """Label a transitive degree-5 group by its order."""
    if G.degree != 5 or not G.is_transitive():
        raise ValueError("need a transitive action on 5 points")
    labels = {5: "C5", 10: "D10", 20: "Frob20", 60: "A5", 120: "S5"}
    order = G.order()
    if order not in labels:
        raise AssertionError(f"impossible transitive order {order} on 5 points")
    return labels[order]
