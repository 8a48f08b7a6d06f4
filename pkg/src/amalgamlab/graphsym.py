"""Graphs, coset graphs, automorphism search, and s-arc-transitivity
measurement.

Automorphism groups are found by equitable-partition refinement with
individualization backtracking; the result is an ordinary PermGroup on
the vertex set, so orders are certified by a stabilizer chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import PermGroup, Permutation

VERTEX_CAP = 500
INDEX_CAP = 100_000


class GraphError(ValueError):
    pass


class Graph:
    """Simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges):
        self.n = n
        neighbours = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError("loops are not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError("vertex out of range")
            neighbours[u].add(v)
            neighbours[v].add(u)
        self.adj = tuple(tuple(sorted(s)) for s in neighbours)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_set(self):
        return frozenset(frozenset(e) for e in self.edges())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def valency_profile(self):
        counts = {}
        for v in range(self.n):
            counts[self.degree(v)] = counts.get(self.degree(v), 0) + 1
        return dict(sorted(counts.items()))

    def is_regular(self, k: int) -> bool:
        return self.valency_profile() == {k: self.n}

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        queue = [0]
        while queue:
            v = queue.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def girth(self):
        """Length of a shortest cycle, or None for a forest (BFS from
        every vertex)."""
        best = None
        for root in range(self.n):
            dist = {root: 0}
            parent = {root: -1}
            queue = [root]
            while queue:
                nxt = []
                for v in queue:
                    for w in self.adj[v]:
                        if w not in dist:
                            dist[w] = dist[v] + 1
                            parent[w] = v
                            nxt.append(w)
                        elif w != parent[v]:
                            cycle = dist[v] + dist[w] + 1
                            if best is None or cycle < best:
                                best = cycle
                queue = nxt
        return best

    def diameter(self):
        worst = 0
        for root in range(self.n):
            dist = {root: 0}
            queue = [root]
            while queue:
                nxt = []
                for v in queue:
                    for w in self.adj[v]:
                        if w not in dist:
                            dist[w] = dist[v] + 1
                            nxt.append(w)
                queue = nxt
            if len(dist) < self.n:
                return None
            worst = max(worst, max(dist.values()))
        return worst

    def to_edge_text(self, labels=None) -> str:
        lines = []
        for u, v in self.edges():
            if labels is None:
                lines.append(f"{u} {v}")
            else:
                lines.append(f"{labels[u]} {labels[v]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_text(cls, text: str) -> "Graph":
        edges = []
        top = -1
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line {line!r}")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            top = max(top, u, v)
        return cls(top + 1, edges)


@dataclass
class GroupAction:
    """A permutation group acting on the vertices of a graph; every
    generator must preserve the edge set."""

    graph: Graph
    group: PermGroup

    def __post_init__(self):
        edges = self.graph.edge_set()
        for g in self.group.generators:
            mapped = frozenset(frozenset((g(u), g(v))) for u, v in
                               self.graph.edges())
            if mapped != edges:
                raise GraphError("generator does not preserve edges")


# -- coset graphs --------------------------------------------------------------

def _canonical_coset_rep(chain, g: Permutation) -> Permutation:
    """The lexicographically least element of the right coset A1*g,
    for a chain of A1 with full base 0..n-1 (greedy per base point;
    the minimum is unique at each level because g is injective)."""
    current = g
    for level in chain.levels:
        orbit = level.transversal
        best = min(orbit, key=lambda p: current(p))
        current = orbit[best] * current
    return current


def coset_graph(G: PermGroup, A1: PermGroup, A2: PermGroup) -> GroupAction:
    """The graph on right cosets of A1 with A1g ~ A1h iff hg^-1 in
    A1*a*A1 for a in A2 - B, together with the right-translation
    action of G."""
    degree = G.degree
    if not (A1.is_subgroup_of(G) and A2.is_subgroup_of(G)):
        raise GraphError("A1, A2 must be subgroups of G")
    chain = A1.chain(base_prefix=tuple(range(degree)))
    index = G.order() // A1.order()
    if index > INDEX_CAP:
        raise GraphError("index too large")

    B = A1.intersection(A2)
    outside = [a for a in A2.generators if a not in B]
    if not outside:
        # generators may all lie in B even though A2 > B
        if A2.order() <= 1000:
            outside = [a for a in A2.elements() if a not in B]
        if not outside:
            raise GraphError("A2 has no element outside A1 (degenerate)")
    a0 = outside[0]
    base_neighbour = _canonical_coset_rep(chain, a0)
    if A2.order() <= 1000:
        # well-definedness: every a in A2 - B must give the same coset
        for a in A2.elements():
            if a in B:
                continue
            if _canonical_coset_rep(chain, a) != base_neighbour:
                raise GraphError("adjacency depends on the choice of a")
    if base_neighbour.is_identity():
        raise GraphError("A2 lies in A1 (single-vertex graph rejected)")

    reps = [_canonical_coset_rep(chain, G.identity)]
    number = {reps[0]: 0}
    queue = [0]
    while queue:
        i = queue.pop(0)
        for x in G.generators:
            r = _canonical_coset_rep(chain, reps[i] * x)
            if r not in number:
                number[r] = len(reps)
                reps.append(r)
                queue.append(len(reps) - 1)
    n = len(reps)
    if n != index:
        raise GraphError("coset enumeration mismatch")

    perms = []
    for x in G.generators:
        perms.append(Permutation(
            [number[_canonical_coset_rep(chain, reps[i] * x)]
             for i in range(n)]))
    action = PermGroup(perms, n)

    # the edge set is the orbit of {A1, A1*a0} under right translation
    base_edge = (0, number[base_neighbour])
    edges = {frozenset(base_edge)}
    frontier = [base_edge]
    while frontier:
        u, v = frontier.pop()
        for p in perms:
            e = (p(u), p(v))
            key = frozenset(e)
            if key not in edges:
                edges.add(key)
                frontier.append(e)
    graph = Graph(n, [tuple(e) for e in edges])
    return GroupAction(graph, action)


# -- automorphism search -------------------------------------------------------

def _refine(adj, cells):
    """Stable equitable refinement; returns (cells, trace) where the
    trace is an isomorphism-invariant record of the refinement, used
    for lockstep pruning."""
    cells = [tuple(c) for c in cells]
    trace = []
    while True:
        index_of = {}
        for i, cell in enumerate(cells):
            for v in cell:
                index_of[v] = i
        new_cells = []
        step = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                step.append((1, None))
                continue
            groups = {}
            for v in cell:
                counts = {}
                for w in adj[v]:
                    j = index_of[w]
                    counts[j] = counts.get(j, 0) + 1
                sig = tuple(sorted(counts.items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(tuple(sorted(groups[sig])))
                step.append((len(groups[sig]), sig))
        trace.append(tuple(step))
        cells = new_cells
        if not changed:
            return cells, tuple(trace)


def _individualize(cells, i, v):
    cell = cells[i]
    rest = tuple(x for x in cell if x != v)
    return list(cells[:i]) + [(v,), rest] + list(cells[i + 1:])


def _first_non_singleton(cells):
    for i, cell in enumerate(cells):
        if len(cell) > 1:
            return i
    return None


def _find_map(adj1, cells1, adj2, cells2):
    """A bijection respecting the two ordered partitions that maps the
    first graph onto the second, or None; complete backtracking with
    lockstep refinement."""
    cells1, trace1 = _refine(adj1, cells1)
    cells2, trace2 = _refine(adj2, cells2)
    if trace1 != trace2:
        return None
    i = _first_non_singleton(cells1)
    if i is None:
        images = [0] * len(adj1)
        for c1, c2 in zip(cells1, cells2):
            images[c1[0]] = c2[0]
        perm = Permutation(images)
        for u in range(len(adj1)):
            if sorted(perm(w) for w in adj1[u]) != list(adj2[perm(u)]):
                return None
        return perm
    v = cells1[i][0]
    sub1 = _individualize(cells1, i, v)
    for u in cells2[i]:
        found = _find_map(adj1, sub1, adj2, _individualize(cells2, i, u))
        if found is not None:
            return found
    return None


def _aut_generators(adj, cells, n):
    cells, _ = _refine(adj, cells)
    i = _first_non_singleton(cells)
    if i is None:
        return []
    v = cells[i][0]
    fixed = _individualize(cells, i, v)
    gens = _aut_generators(adj, fixed, n)
    group = PermGroup(gens, n)
    for u in cells[i][1:]:
        if u in group.orbit(v):
            continue
        phi = _find_map(adj, fixed, adj, _individualize(cells, i, u))
        if phi is not None:
            gens.append(phi)
            group = PermGroup(gens, n)
    return gens


def graph_automorphisms(graph: Graph) -> PermGroup:
    """The full automorphism group as a PermGroup on the vertices."""
    if graph.n > VERTEX_CAP:
        raise GraphError(f"automorphism search capped at {VERTEX_CAP}")
    gens = _aut_generators(graph.adj, [tuple(range(graph.n))], graph.n)
    return PermGroup(gens, graph.n)


def graph_isomorphism(g1: Graph, g2: Graph):
    """An explicit vertex bijection g1 -> g2, or None."""
    if g1.n != g2.n or len(g1.edges()) != len(g2.edges()):
        return None
    return _find_map(g1.adj, [tuple(range(g1.n))],
                     g2.adj, [tuple(range(g2.n))])


# -- s-arc transitivity --------------------------------------------------------

def _arcs_of_length(graph: Graph, s: int):
    """All s-arcs (x0..xs): walks without immediate backtracking."""
    arcs = [(v,) for v in range(graph.n)]
    for _ in range(s):
        nxt = []
        for arc in arcs:
            tail = arc[-1]
            prev = arc[-2] if len(arc) > 1 else None
            for w in graph.adj[tail]:
                if w != prev:
                    nxt.append(arc + (w,))
        arcs = nxt
    return arcs


def _single_orbit(arcs, perms):
    if not arcs:
        return True
    total = len(arcs)
    arc_set = set(arcs)
    seed = arcs[0]
    seen = {seed}
    queue = [seed]
    while queue:
        arc = queue.pop()
        for p in perms:
            image = tuple(p(x) for x in arc)
            if image not in seen:
                if image not in arc_set:
                    raise GraphError("group does not preserve arcs")
                seen.add(image)
                queue.append(image)
    return len(seen) == total


def measure_s(action: GroupAction, cap: int = 8) -> int:
    """The largest s <= cap with a single orbit on s-arcs."""
    graph, group = action.graph, action.group
    if not graph.is_connected() or not graph.is_regular(5):
        raise GraphError("need a connected 5-regular graph")
    if not group.is_transitive():
        raise GraphError("action is not vertex-transitive")
    perms = group.generators
    s = 0
    while s < cap:
        arcs = _arcs_of_length(graph, s + 1)
        if not _single_orbit(arcs, perms):
            break
        s += 1
    if s == 0:
        raise GraphError("action is not arc-transitive")
    return s


def chain_s(action: GroupAction, cap: int = 8) -> int:
    """The tree s-value, from path-stabilizer forward actions.

    A covering of graphs is an isomorphism on closed 1-balls, so a
    non-backtracking path in the finite graph lifts uniquely once a
    lift of its start is fixed; the stabilizer of the path and its
    action on the forward neighbours of the endpoint therefore agree
    with the tree values whatever the girth.  Transitivity on (k+1)-arcs
    is transitivity on k-arcs plus transitivity of the k-arc stabilizer
    on the forward neighbours, so walking one path decides s.
    """
    graph, group = action.graph, action.group
    if len(group.orbit(0)) != graph.n:
        raise GraphError("action is not vertex-transitive")
    path = [0]
    g_x = group.pointwise_stabilizer([0])
    if len(g_x.orbit(graph.adj[0][0])) != len(graph.adj[0]):
        return 0
    path.append(graph.adj[0][0])
    s = 1
    while s < cap:
        stab = group.pointwise_stabilizer(path)
        forward = [u for u in graph.adj[path[-1]] if u != path[-2]]
        if len(stab.orbit(forward[0])) != len(forward):
            return s
        path.append(forward[0])
        s += 1
    return s


def s_guard(action: GroupAction, s: int):
    """Why the finite measurement certifies the tree value of s: either
    the girth is large enough that s-arcs lift, or the path-stabilizer
    chain (which transfers along coverings) reproduces s.  Returns the
    guard name; raises if neither guard holds."""
    if action.graph.girth() >= 2 * s + 2:
        return "girth"
    if chain_s(action) == s:
        return "local"
    raise GraphError("finite s measurement is not certified")


def measure_s_local(action: GroupAction, path):
    """Stabilizer data along a 3-path (x, y, z, w): orders of the
    pointwise stabilizers and the image of G_xyz on the forward
    neighbours of z."""
    graph, group = action.graph, action.group
    x, y, z, w = path
    for u, v in ((x, y), (y, z), (z, w)):
        if v not in graph.adj[u]:
            raise GraphError("path is not a path in the graph")
    g_xyz = group.pointwise_stabilizer([x, y, z])
    g_xyzw = group.pointwise_stabilizer([x, y, z, w])
    forward = [u for u in graph.adj[z] if u != y]
    image_perms = []
    for g in g_xyz.generators:
        image_perms.append(Permutation(
            [forward.index(g(forward[i])) for i in range(len(forward))]))
    image = PermGroup(image_perms, len(forward))
    return {
        "stab_xyz": g_xyz.order(),
        "stab_xyzw": g_xyzw.order(),
        "index": g_xyz.order() // g_xyzw.order(),
        "forward_image_order": image.order(),
        "forward_image_cyclic": _is_cyclic(image),
    }


def _is_cyclic(G: PermGroup) -> bool:
    order = G.order()
    return any(g.order() == order for g in G.elements())
