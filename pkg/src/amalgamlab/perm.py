"""Permutations on {0,...,n-1} and permutation groups with stabilizer chains.

Conventions (fixed globally):

* points are 0-based internally; all text I/O (cycle notation, group files)
  is 1-based;
* products compose left-to-right: ``(p * q)(x) == q(p(x))``;
* conjugation is ``x ** y == y.inverse() * x * y`` and commutators are
  ``x^-1 y^-1 x y``.

Groups of order up to ``ELEMENT_CAP`` may materialise their element list;
anything larger must go through the stabilizer chain.
"""

from __future__ import annotations

import re
from functools import reduce
from math import gcd

ELEMENT_CAP = 100_000

# Default degree cap; the catalog needs at most 170 points plus regular
# actions of groups of order <= 2880 for automorphism work.
DEGREE_CAP = 4096


class DegreeMismatch(ValueError):
    pass


class ParseError(ValueError):
    pass


class Permutation:
    """An element of Sym({0,...,n-1}), stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degrees differ: {len(self.images)} vs {len(other.images)}")
        oi = other.images
        return Permutation([oi[i] for i in self.images])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, other):
        if isinstance(other, Permutation):
            # conjugation x^y = y^-1 x y
            return other.inverse() * self * other
        n = other
        if n == 0:
            return Permutation.identity(self.degree)
        base = self if n > 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def commutator(self, other: "Permutation") -> "Permutation":
        return self.inverse() * other.inverse() * self * other

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b),
                      (len(c) for c in self.cycles()), 1)

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation; identity prints as ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")"
                       for c in cycs)

    def moved_points(self):
        return [i for i, j in enumerate(self.images) if i != j]

    def extend(self, degree: int) -> "Permutation":
        """The same permutation on a larger point set (new points fixed)."""
        if degree < len(self.images):
            raise ValueError("cannot shrink a permutation")
        return Permutation(self.images + tuple(range(len(self.images), degree)))

    def shift(self, offset: int, degree: int) -> "Permutation":
        """Relabel through ``point + offset`` inside a degree-``degree`` set."""
        images = list(range(degree))
        for i, j in enumerate(self.images):
            images[i + offset] = j + offset
        return Permutation(images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


_CYCLE_RE = re.compile(r"\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation, e.g. ``(1,2,3)(4,5)``.

    Unmentioned points are fixed; the empty string and ``()`` denote the
    identity.  Raises ValueError on repeated points, points out of range
    or malformed syntax.
    """
    stripped = text.strip()
    images = list(range(degree))
    if stripped in ("", "()"):
        return Permutation(images)
    pos = 0
    seen = set()
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"malformed cycle notation at {stripped[pos:]!r}")
        points = [int(tok) for tok in m.group(1).split(",")]
        for p in points:
            if not 1 <= p <= degree:
                raise ParseError(f"point {p} out of range 1..{degree}")
            if p - 1 in seen:
                raise ParseError(f"repeated point {p}")
            seen.add(p - 1)
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)] - 1
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    return Permutation(images)


class _Level:
    """One stabilizer-chain level: base point, generators, basic orbit."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens = []
        self.transversal = {point: Permutation.identity(degree)}

    def recompute_orbit(self):
        degree = len(next(iter(self.transversal.values())).images)
        self.transversal = {self.point: Permutation.identity(degree)}
        queue = [self.point]
        while queue:
            p = queue.pop(0)
            u = self.transversal[p]
            for g in self.gens:
                q = g(p)
                if q not in self.transversal:
                    self.transversal[q] = u * g
                    queue.append(q)


class StabilizerChain:
    """Deterministic Schreier-Sims structure.

    The base starts with ``base_prefix`` (even where the orbit is trivial);
    further base points are the smallest moved points of outstanding
    generators, which keeps report output reproducible.
    """

    def __init__(self, generators, degree: int, base_prefix=()):
        self.degree = degree
        self.levels = [_Level(p, degree) for p in base_prefix]
        gens = [g for g in generators if not g.is_identity()]
        self._build(gens)

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    def _locate(self, g: Permutation) -> int:
        """Deepest level i such that g fixes base[:i]."""
        for i, lv in enumerate(self.levels):
            if g(lv.point) != lv.point:
                return i
        return len(self.levels)

    def _ensure_base_point(self, g: Permutation):
        if self._locate(g) == len(self.levels):
            moved = g.moved_points()
            if moved:
                self.levels.append(_Level(moved[0], self.degree))

    def _build(self, gens):
        for g in gens:
            self._ensure_base_point(g)
        for g in gens:
            depth = self._locate(g)
            for i in range(depth + 1):
                if i < len(self.levels):
                    self.levels[i].gens.append(g)
        for lv in self.levels:
            lv.recompute_orbit()
        self._close()

    def _close(self):
        """Bottom-up verification of the strong generating property."""
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            lv.recompute_orbit()
            restart = False
            for p in list(lv.transversal):
                u = lv.transversal[p]
                for s in lv.gens:
                    schreier = u * s * lv.transversal[s(p)].inverse()
                    residue, level = self._strip(schreier, i + 1)
                    if residue.is_identity():
                        continue
                    self._ensure_base_point(residue)
                    depth = self._locate(residue)
                    for j in range(i + 1, min(depth, len(self.levels) - 1) + 1):
                        self.levels[j].gens.append(residue)
                    i = min(depth, len(self.levels) - 1)
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def _strip(self, g: Permutation, start: int = 0):
        """Sift g through levels >= start; returns (residue, stop level)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            p = g(lv.point)
            if p == lv.point:
                continue
            if p not in lv.transversal:
                return g, i
            g = g * lv.transversal[p].inverse()
        return g, len(self.levels)

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise DegreeMismatch("degree mismatch in membership test")
        residue, _ = self._strip(g)
        return residue.is_identity()

    def factor(self, g: Permutation):
        """Transversal factorization: returns [u_k,...,u_1] with product g.

        None when g is not in the group.
        """
        word = []
        for lv in self.levels:
            p = g(lv.point)
            if p == lv.point:
                continue
            if p not in lv.transversal:
                return None
            u = lv.transversal[p]
            word.append(u)
            g = g * u.inverse()
        if not g.is_identity():
            return None
        word.reverse()
        return word

    def stabilizer_generators(self, depth: int):
        """Generators of the stabilizer of base[:depth] (requires the base
        to begin with those points, i.e. a chain built with base_prefix)."""
        seen = set()
        out = []
        for i in range(depth, len(self.levels)):
            for g in self.levels[i].gens:
                if g.images not in seen and self._locate(g) >= depth:
                    seen.add(g.images)
                    out.append(g)
        return out

    def iter_elements(self):
        """All group elements (orbit-transversal product order)."""
        def rec(i, prefix):
            if i < 0:
                yield prefix
                return
            lv = self.levels[i]
            for p in sorted(lv.transversal):
                yield from rec(i - 1, prefix * lv.transversal[p])
        if not self.levels:
            yield Permutation.identity(self.degree)
            return
        yield from rec(len(self.levels) - 1,
                       Permutation.identity(self.degree))


class PermGroup:
    """A permutation group given by generators, with a lazy stabilizer chain.

    Immutable after construction; every derived object (chain, element
    cache) is computed once and then only read.
    """

    def __init__(self, generators, degree: int | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g)
                for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a trivial group")
            degree = gens[0].degree
        if degree > DEGREE_CAP:
            raise ValueError(f"degree {degree} exceeds cap {DEGREE_CAP}")
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch("all generators must share the degree")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        self._chain = None
        self._elements = None
        self._order = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([], degree)

    @classmethod
    def from_cycles(cls, degree: int, *cycle_strings: str) -> "PermGroup":
        return cls([parse_cycles(s, degree) for s in cycle_strings], degree)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def chain(self, base_prefix=()) -> StabilizerChain:
        if base_prefix:
            return StabilizerChain(self.generators, self.degree,
                                   base_prefix=tuple(base_prefix))
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            self._order = self.chain().order()
        return self._order

    def is_trivial(self) -> bool:
        return not self.generators

    def __contains__(self, g: Permutation) -> bool:
        return self.chain().contains(g)

    def membership(self, g: Permutation):
        """(bool, witness): witness is a transversal word multiplying to g."""
        if g.degree != self.degree:
            raise DegreeMismatch("degree mismatch in membership test")
        word = self.chain().factor(g)
        return (word is not None), word

    def elements(self):
        """The full element list (cached); requires order <= ELEMENT_CAP."""
        if self._elements is None:
            if self.order() > ELEMENT_CAP:
                raise ValueError(
                    f"order {self.order()} exceeds element cap {ELEMENT_CAP}")
            self._elements = sorted(self.chain().iter_elements(),
                                    key=lambda p: p.images)
        return self._elements

    def element_set(self):
        return frozenset(self.elements())

    # -- orbits -----------------------------------------------------------

    def orbit(self, point: int):
        orb = [point]
        seen = {point}
        for p in orb:
            for g in self.generators:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    orb.append(q)
        return orb

    def orbits(self):
        seen = set()
        out = []
        for p in range(self.degree):
            if p not in seen:
                orb = self.orbit(p)
                seen.update(orb)
                out.append(sorted(orb))
        return out

    def is_transitive(self, points=None) -> bool:
        if points is None:
            points = range(self.degree)
        points = set(points)
        if not points:
            return True
        start = min(points)
        return points <= set(self.orbit(start))

    def transporter(self, source: int, target: int):
        """Some g in G with source^g = target, or None."""
        tree = {source: self.identity}
        queue = [source]
        while queue:
            p = queue.pop(0)
            if p == target:
                return tree[p]
            for g in self.generators:
                q = g(p)
                if q not in tree:
                    tree[q] = tree[p] * g
                    queue.append(q)
        return tree.get(target)

    # -- subgroup constructions -------------------------------------------

    def pointwise_stabilizer(self, points) -> "PermGroup":
        points = tuple(points)
        for p in points:
            if not 0 <= p < self.degree:
                raise ValueError(f"point {p} outside degree {self.degree}")
        chain = self.chain(base_prefix=points)
        return PermGroup(chain.stabilizer_generators(len(points)), self.degree)

    def conjugate_subgroup(self, g: Permutation) -> "PermGroup":
        return PermGroup([h ** g for h in self.generators], self.degree)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def is_normal_in(self, ambient: "PermGroup") -> bool:
        return all(h ** g in self
                   for g in ambient.generators for h in self.generators)

    def normal_closure(self, subgroup_gens) -> "PermGroup":
        """Smallest subgroup of self containing subgroup_gens and normal
        in self (self must contain the given elements)."""
        gens, closure = reduce_generators(subgroup_gens, self.degree)
        queue = list(gens)
        while queue:
            h = queue.pop()
            for g in self.generators:
                c = h ** g
                if c not in closure:
                    gens.append(c)
                    closure = PermGroup(gens, self.degree)
                    queue.append(c)
        return PermGroup(reduce_generators(gens, self.degree)[0], self.degree)

    def derived_subgroup(self) -> "PermGroup":
        comms = [a.commutator(b)
                 for a in self.generators for b in self.generators]
        return self.normal_closure(reduce_generators(comms, self.degree)[0])

    def derived_series_length(self) -> int:
        length = 0
        current = self
        while not current.is_trivial():
            nxt = current.derived_subgroup()
            if nxt.order() == current.order():
                # perfect group: series stabilises without reaching 1
                return length + 1
            current = nxt
            length += 1
        return length

    def centralizer_of_element(self, x: Permutation) -> "PermGroup":
        if self.order() > ELEMENT_CAP:
            raise ValueError("centralizer by filtration needs order <= cap")
        gens = [g for g in self.elements() if g * x == x * g]
        return PermGroup(reduce_generators(gens, self.degree)[0], self.degree)

    def element_centralizer(self, x: Permutation) -> "PermGroup":
        """Centralizer of x without enumerating the group: Schreier
        generators for the stabilizer of x in the conjugation action on
        its class."""
        index = {x: 0}
        points = [x]
        trans = [self.identity]
        found = []
        H = PermGroup([], self.degree)
        i = 0
        while i < len(points):
            y, u = points[i], trans[i]
            i += 1
            for h in self.generators:
                z = y ** h
                if z not in index:
                    index[z] = len(points)
                    points.append(z)
                    trans.append(u * h)
                else:
                    s = u * h * trans[index[z]].inverse()
                    if s not in H:
                        found.append(s)
                        H = PermGroup(found, self.degree)
        return H

    def centralizer(self, other: "PermGroup") -> "PermGroup":
        if self.order() > ELEMENT_CAP:
            raise ValueError("centralizer by filtration needs order <= cap")
        gens = [g for g in self.elements()
                if all(g * x == x * g for x in other.generators)]
        return PermGroup(reduce_generators(gens, self.degree)[0], self.degree)

    def center(self) -> "PermGroup":
        return self.centralizer(self)

    def intersection(self, other: "PermGroup") -> "PermGroup":
        if self.degree != other.degree:
            raise DegreeMismatch("intersection needs equal degrees")
        small, large = (self, other) if self.order() <= other.order() else (other, self)
        if small.order() > ELEMENT_CAP:
            raise ValueError("intersection needs one factor of order <= cap")
        gens = [g for g in small.elements() if g in large]
        return PermGroup(reduce_generators(gens, self.degree)[0], self.degree)

    def core_of(self, subgroup: "PermGroup") -> "PermGroup":
        """Largest subgroup of ``subgroup`` normal in ``self``.

        Computed by repeatedly intersecting with generator conjugates until
        the result is normal in self.  Requires subgroup <= self.
        """
        if not subgroup.is_subgroup_of(self):
            raise ValueError("core requires subgroup containment")
        current = subgroup
        while not current.is_normal_in(self):
            for g in self.generators:
                conj = current.conjugate_subgroup(g)
                if not conj.element_set() >= current.element_set():
                    current = current.intersection(conj)
        return current

    def random_element(self, rng) -> Permutation:
        chain = self.chain()
        g = self.identity
        for lv in chain.levels:
            points = sorted(lv.transversal)
            g = g * lv.transversal[points[rng.randrange(len(points))]]
        return g

    def element_order_histogram(self):
        hist = {}
        for g in self.elements():
            o = g.order()
            hist[o] = hist.get(o, 0) + 1
        return dict(sorted(hist.items()))

    def __repr__(self):
        return (f"PermGroup(degree={self.degree}, "
                f"ngens={len(self.generators)})")


class Homomorphism:
    """A group homomorphism fixed by generator images.

    Construction via :meth:`define` walks the Cayley graph of the source
    and checks phi(x*g) = phi(x)*phi(g) on every edge, which certifies
    well-definedness outright (needs source order <= ELEMENT_CAP).
    """

    def __init__(self, source: PermGroup, target: PermGroup, gen_images,
                 element_map=None):
        if len(gen_images) != len(source.generators):
            raise ValueError("one image per source generator required")
        self.source = source
        self.target = target
        self.gen_images = tuple(gen_images)
        self._map = element_map
        self._image = None

    @classmethod
    def define(cls, source: PermGroup, target: PermGroup, gen_images):
        """Build the homomorphism, or return None if the images do not
        extend to one."""
        gen_images = tuple(gen_images)
        if len(gen_images) != len(source.generators):
            raise ValueError("one image per source generator required")
        for h in gen_images:
            if h not in target:
                return None
        ident = source.identity
        mapping = {ident: target.identity}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                fx = mapping[x]
                for g, h in zip(source.generators, gen_images):
                    y = x * g
                    fy = fx * h
                    known = mapping.get(y)
                    if known is None:
                        if len(mapping) >= ELEMENT_CAP:
                            raise ValueError("source exceeds element cap")
                        mapping[y] = fy
                        nxt.append(y)
                    elif known != fy:
                        return None
            frontier = nxt
        return cls(source, target, gen_images, element_map=mapping)

    def _element_map(self):
        if self._map is None:
            built = Homomorphism.define(self.source, self.target,
                                        self.gen_images)
            if built is None:
                raise ValueError("generator images are not a homomorphism")
            self._map = built._map
        return self._map

    def __call__(self, x: Permutation) -> Permutation:
        return self._element_map()[x]

    def image(self) -> PermGroup:
        if self._image is None:
            self._image = PermGroup(self.gen_images, self.target.degree)
        return self._image

    def is_injective(self) -> bool:
        return self.image().order() == self.source.order()

    def is_isomorphism(self) -> bool:
        return (self.is_injective()
                and self.image().order() == self.target.order())

    def preimage(self, y: Permutation):
        """Some x with phi(x) = y, or None."""
        for x, fx in self._element_map().items():
            if fx == y:
                return x
        return None

    def __repr__(self):
        return (f"Homomorphism(|source|={self.source.order()}, "
                f"|target|={self.target.order()})")



def reduce_generators(gens, degree: int):
    """Drop redundant generators; returns (kept list, generated group)."""
    kept = []
    group = PermGroup.trivial(degree)
    for g in gens:
        if g.is_identity() or g in group:
            continue
        kept.append(g)
        group = PermGroup(kept, degree)
    return kept, group


# -- closure oracle and subgroup enumeration (test/verification helpers) ----

def closure_elements(generators, degree: int, cap: int = ELEMENT_CAP):
    """Brute-force closure of a generating set; independent of the chain."""
    gens = [g for g in generators if not g.is_identity()]
    seen = {Permutation.identity(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    if len(seen) >= cap:
                        raise ValueError("closure exceeded cap")
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def all_subgroups(group: PermGroup, max_order: int = 64):
    """Every subgroup of ``group`` as a frozenset of elements.

    Exponential; intended as an oracle for groups of order <= 64.
    """
    if group.order() > max_order:
        raise ValueError(f"subgroup enumeration capped at order {max_order}")
    elements = group.elements()
    identity = group.identity
    trivial = frozenset([identity])
    subgroups = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for sub in frontier:
            for x in elements:
                if x in sub:
                    continue
                new = frozenset(closure_elements(list(sub) + [x],
                                                 group.degree))
                if new not in subgroups:
                    subgroups.add(new)
                    nxt.append(new)
        frontier = nxt
    return subgroups


# -- group file format -------------------------------------------------------

def group_to_text(group: PermGroup) -> str:
    """Text form: ``degree n`` then one generator per line in cycle notation."""
    lines = [f"degree {group.degree}"]
    lines.extend(g.cycle_string() for g in group.generators)
    return "\n".join(lines) + "\n"


def group_from_text(text: str) -> PermGroup:
    degree = None
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if m is None:
                raise ValueError("group file must start with 'degree n'")
            degree = int(m.group(1))
        else:
            gens.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("empty group file")
    return PermGroup(gens, degree)
