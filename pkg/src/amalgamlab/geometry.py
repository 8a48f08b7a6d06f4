"""Finite-geometry constructions for the s >= 4 catalog rows.

PG(2,4) with its full collineation-correlation group realizes the six
s = 4 rows on the 42-vertex incidence graph; the symplectic generalized
quadrangle GQ(4,4) realizes the s = 5 row on the 170-vertex incidence
graph, whose full automorphism group is found by graph search.

GF(4) is {0, 1, w, w^2} encoded as 0..3 with addition = xor and
tabulated multiplication (w^2 = w + 1).
"""

from __future__ import annotations

from functools import lru_cache

from .graphsym import Graph, graph_automorphisms
from .perm import PermGroup, Permutation

# multiplication table for GF(4): index encoding 0, 1, w, w^2
_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
_INV = (None, 1, 3, 2)
_FROB = (0, 1, 3, 2)  # x -> x^2


def gf4_add(a: int, b: int) -> int:
    return a ^ b


def gf4_mul(a: int, b: int) -> int:
    return _MUL[a][b]


def _vec_scale(v, c):
    return tuple(_MUL[c][x] for x in v)


def _vec_dot(u, v):
    out = 0
    for a, b in zip(u, v):
        out ^= _MUL[a][b]
    return out


def _normalize(v):
    """Scale so the first nonzero coordinate is 1 (canonical projective
    representative)."""
    for x in v:
        if x:
            return _vec_scale(v, _INV[x])
    raise ValueError("zero vector")


def _projective_points(dim: int):
    """All normalized nonzero vectors of GF4^dim, lexicographically."""
    points = set()
    vectors = [()]
    for _ in range(dim):
        vectors = [v + (c,) for v in vectors for c in range(4)]
    for v in vectors:
        if any(v):
            points.add(_normalize(v))
    return sorted(points)


def _mat_vec(v, m):
    """Row vector times matrix over GF(4)."""
    n = len(v)
    return tuple(
        _xor_all(_MUL[v[i]][m[i][j]] for i in range(n))
        for j in range(len(m[0])))


def _xor_all(items):
    out = 0
    for x in items:
        out ^= x
    return out


def _mat_inv(m):
    """Inverse of a square matrix over GF(4) by Gaussian elimination."""
    n = len(m)
    a = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col])
        a[col], a[pivot] = a[pivot], a[col]
        inv = _INV[a[col][col]]
        a[col] = [_MUL[inv][x] for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x ^ _MUL[c][y] for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _transpose(m):
    return tuple(tuple(m[i][j] for i in range(len(m)))
                 for j in range(len(m[0])))


# -- PG(2,4) and Aut(PSL3(4)) on 42 vertices ------------------------------------

@lru_cache(maxsize=None)
def _pg24():
    points = _projective_points(3)
    lines = list(points)  # functionals, same normal form
    point_index = {v: i for i, v in enumerate(points)}
    line_index = {u: 21 + j for j, u in enumerate(lines)}
    edges = [(point_index[v], line_index[u])
             for v in points for u in lines if _vec_dot(v, u) == 0]
    return points, lines, point_index, line_index, edges


def pg24_incidence_graph() -> Graph:
    """Bipartite incidence graph on 21 points and 21 lines."""
    _, _, _, _, edges = _pg24()
    return Graph(42, edges)


def pg24_vertex_labels():
    return tuple(f"P{i}" for i in range(21)) + tuple(
        f"L{j}" for j in range(21))


def _collineation(m) -> Permutation:
    """The permutation of the 42 vertices induced by a matrix: points by
    v -> vM, lines by u -> u M^-T (incidence v.u = 0 is preserved)."""
    points, lines, point_index, line_index, _ = _pg24()
    minv_t = _transpose(_mat_inv(m))
    images = [0] * 42
    for v in points:
        images[point_index[v]] = point_index[_normalize(_mat_vec(v, m))]
    for u in lines:
        images[line_index[u]] = line_index[_normalize(_mat_vec(u, minv_t))]
    return Permutation(images)


def _frobenius_perm() -> Permutation:
    points, lines, point_index, line_index, _ = _pg24()
    images = [0] * 42
    for v in points:
        w = _normalize(tuple(_FROB[x] for x in v))
        images[point_index[v]] = point_index[w]
    for u in lines:
        w = _normalize(tuple(_FROB[x] for x in u))
        images[line_index[u]] = line_index[w]
    return Permutation(images)


def _duality_perm() -> Permutation:
    """The correlation P(v) <-> L(reverse(v)); an involution because the
    reversal matrix is symmetric, and it swaps the marked point (1,0,0)
    with the marked line (0,0,1) through it."""
    points, lines, point_index, line_index, _ = _pg24()
    images = [0] * 42
    for v in points:
        images[point_index[v]] = line_index[_normalize(v[::-1])]
    for u in lines:
        images[line_index[u]] = point_index[_normalize(u[::-1])]
    return Permutation(images)


def _transvection(i, j, lam):
    m = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
    m[i][j] = lam
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def psl34_overgroup():
    """The degree-42 representation of Aut(PSL3(4)) with its marked
    pieces.

    Returns a dict with: 'group' (order 241920), 'psl' (order 20160),
    'p1' and 'b' (the point parabolic of order 960 and the Borel of
    order 192, both normalized by f and p), and the marked outer
    elements 'f' (field, order 2), 'p' (diagonal, order 3; chosen as
    diag(1,w,1) so that it commutes with the duality) and 'g' (duality,
    order 2), with <f,p,g> of order 12.
    """
    _, _, point_index, line_index, _ = _pg24()
    psl_gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                for lam in (1, 2):
                    psl_gens.append(_collineation(_transvection(i, j, lam)))
    psl = PermGroup(psl_gens, 42)
    f = _frobenius_perm()
    p = _collineation(((1, 0, 0), (0, 2, 0), (0, 0, 1)))
    g = _duality_perm()
    group = PermGroup(psl_gens + [f, p, g], 42)
    x0 = point_index[(1, 0, 0)]
    l0 = line_index[(0, 0, 1)]
    p1 = psl.pointwise_stabilizer([x0])
    b = psl.pointwise_stabilizer([x0, l0])
    return {
        "group": group, "psl": psl, "p1": p1, "b": b,
        "f": f, "p": p, "g": g,
        "point_vertex": x0, "line_vertex": l0,
    }


def _extend(base: PermGroup, extras) -> PermGroup:
    return PermGroup(list(base.generators) + list(extras), base.degree)


# the six tuples (A1, A2, A12) over P1 and B inside Aut(PSL3(4)),
# bound to the catalog labels
_Q4_RECIPES = {
    "Q4^1": ((), ("fg",), ()),
    "Q4^2": ((), ("g",), ()),
    "Q4^3": (("p",), ("p", "fg"), ("p",)),
    "Q4^4": (("p",), ("p", "g"), ("p",)),
    "Q4^5": (("f",), ("f", "g"), ("f",)),
    "Q4^6": (("f", "p"), ("f", "p", "g"), ("f", "p")),
}


def build_q4_amalgam(label: str):
    """(A1, A2, B, pi2-images) for one of the six s = 4 rows; B is a
    literal subgroup of both A1 and A2, so pi2 is inclusion."""
    ctx = psl34_overgroup()
    named = {"f": ctx["f"], "p": ctx["p"], "g": ctx["g"],
             "fg": ctx["f"] * ctx["g"]}
    extra1, extra2, extra12 = _Q4_RECIPES[label]
    a1 = _extend(ctx["p1"], [named[x] for x in extra1])
    a2 = _extend(ctx["b"], [named[x] for x in extra2])
    b = _extend(ctx["b"], [named[x] for x in extra12])
    return a1, a2, b, list(b.generators)


# -- GQ(4,4) and its automorphism group on 170 vertices -------------------------

def _symplectic_dot(u, v):
    """Alternating form x1 y2 + x2 y1 + x3 y4 + x4 y3 (char 2)."""
    return (_MUL[u[0]][v[1]] ^ _MUL[u[1]][v[0]]
            ^ _MUL[u[2]][v[3]] ^ _MUL[u[3]][v[2]])


@lru_cache(maxsize=None)
def _gq44():
    points = _projective_points(4)
    point_index = {v: i for i, v in enumerate(points)}
    lines = set()
    for i, u in enumerate(points):
        for v in points[i + 1:]:
            if _symplectic_dot(u, v):
                continue
            members = frozenset(
                point_index[_normalize(tuple(
                    a ^ _MUL[c][b] for a, b in zip(u, v)))]
                for c in range(4)) | {point_index[v]}
            lines.add(members)
    lines = sorted(lines, key=sorted)
    edges = []
    for j, members in enumerate(lines):
        for i in sorted(members):
            edges.append((i, 85 + j))
    return points, lines, edges


def gq44_incidence_graph() -> Graph:
    points, lines, edges = _gq44()
    assert len(points) == 85 and len(lines) == 85
    return Graph(170, edges)


def gq44_vertex_labels():
    return tuple(f"P{i}" for i in range(85)) + tuple(
        f"L{j}" for j in range(85))


def gq_axiom_holds() -> bool:
    """For each non-incident point-line pair, exactly one point of the
    line is collinear with the point."""
    points, lines, _ = _gq44()
    collinear = [[False] * 85 for _ in range(85)]
    for members in lines:
        for a in members:
            for b in members:
                collinear[a][b] = True
    for i in range(85):
        for members in lines:
            if i in members:
                continue
            hits = sum(1 for b in members if collinear[i][b])
            if hits != 1:
                return False
    return True


@lru_cache(maxsize=None)
def build_q5_amalgam():
    """(A1, A2, B, pi2-images) for the s = 5 row, inside the full
    automorphism group (order 3916800) of the GQ(4,4) incidence graph.

    A1 is the stabilizer of a point-vertex, A2 the setwise stabilizer
    of an incident edge (generated by B and a side-swapping element f
    of order 4), B their intersection.
    """
    graph = gq44_incidence_graph()
    full = graph_automorphisms(graph)
    x0 = 0
    y0 = graph.adj[x0][0]
    a1 = full.pointwise_stabilizer([x0])
    b = full.pointwise_stabilizer([x0, y0])
    swap = _edge_swapper(full, x0, y0)
    # prefer an order-4 swapper whose square preserves sides
    f = None
    for h in b.elements():
        cand = h * swap
        if cand.order() == 4 and cand(x0) == y0 and cand(y0) == x0:
            f = cand
            break
    if f is None:
        raise AssertionError("no order-4 side-swapping element found")
    a2 = PermGroup(list(b.generators) + [f], 170)
    return a1, a2, b, list(b.generators)


def _edge_swapper(group: PermGroup, x0: int, y0: int) -> Permutation:
    t = group.transporter(x0, y0)
    stab = group.pointwise_stabilizer([y0])
    d = stab.transporter(t(y0), x0)
    if d is None:
        raise AssertionError("no element swapping the marked edge")
    return t * d
