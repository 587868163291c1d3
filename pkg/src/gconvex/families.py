"""Deterministic constructors for the example families and the five
forbidden patterns; the shared test corpus.

Every constructor returns a validated Graph.  Labelings are documented per
family so tests can refer to vertices by id.
"""

import random
from itertools import combinations

from .graph import Graph, build_graph


class BadParams(ValueError):
    pass


def path(n):
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    if n < 1:
        raise BadParams("complete needs n >= 1")
    return build_graph(n, list(combinations(range(n), 2)))


def complete_multipartite(sizes):
    """Parts are consecutive id blocks in the given order."""
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise BadParams("complete_multipartite needs positive part sizes")
    if len(sizes) < 2 and sizes[0] > 1:
        raise BadParams("a single part is an edgeless graph")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(starts[i], starts[i + 1]):
                for v in range(starts[j], starts[j + 1]):
                    edges.append((u, v))
    return build_graph(starts[-1], edges)


def star(k):
    """K_{1,k}: center 0, leaves 1..k."""
    if k < 1:
        raise BadParams("star needs k >= 1 leaves")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def random_tree(n, seed):
    """Uniform labeled tree from a decoded random Pruefer sequence."""
    if n < 1:
        raise BadParams("random_tree needs n >= 1")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)
    edges.append((u, w))
    return build_graph(n, edges)


def hypercube(d):
    """Vertex i is its coordinate word; edges flip one bit."""
    if d < 1:
        raise BadParams("hypercube needs d >= 1")
    n = 1 << d
    edges = [(i, i | (1 << b)) for i in range(n) for b in range(d) if not (i >> b) & 1]
    return build_graph(n, edges)


def hamming(dims):
    """Cartesian product of cliques; mixed-radix vertex labels, last
    coordinate fastest.
    """
    dims = list(dims)
    if not dims or any(q < 1 for q in dims):
        raise BadParams("hamming needs positive alphabet sizes")
    n = 1
    for q in dims:
        n *= q
    if n > 4096:
        raise BadParams("hamming graph too large (%d vertices)" % n)

    def digits(i):
        out = []
        for q in reversed(dims):
            out.append(i % q)
            i //= q
        return out[::-1]

    words = [digits(i) for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if sum(a != b for a, b in zip(words[i], words[j])) == 1:
                edges.append((i, j))
    return build_graph(n, edges)


def hyperoctahedron(d):
    """K_{2d} minus the perfect matching i <-> i+d."""
    if d < 2:
        raise BadParams("hyperoctahedron needs d >= 2")
    n = 2 * d
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if j - i != d
    ]
    return build_graph(n, edges)


def johnson(n, k):
    """Vertices are the k-subsets of range(n) in lexicographic order,
    adjacent when the subsets share k-1 elements.
    """
    if k < 1 or k > n:
        raise BadParams("johnson needs 1 <= k <= n")
    verts = list(combinations(range(n), k))
    if len(verts) > 4096:
        raise BadParams("johnson graph too large (%d vertices)" % len(verts))
    edges = []
    for i in range(len(verts)):
        si = set(verts[i])
        for j in range(i + 1, len(verts)):
            if len(si.intersection(verts[j])) == k - 1:
                edges.append((i, j))
    return build_graph(len(verts), edges)


def half_cube(d):
    """Even-weight words of length d in increasing numeric order, adjacent
    at Hamming distance 2.
    """
    if d < 1:
        raise BadParams("half_cube needs d >= 1")
    if d > 12:
        raise BadParams("half-cube too large")
    words = [w for w in range(1 << d) if w.bit_count() % 2 == 0]
    edges = []
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            if (words[i] ^ words[j]).bit_count() == 2:
                edges.append((i, j))
    return build_graph(len(words), edges)


def petersen():
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, i + 5))
    return build_graph(10, edges)


def icosahedron():
    """Two apexes (0 and 11) over a pentagonal antiprism 1..5 / 6..10."""
    edges = []
    for i in range(1, 6):
        edges.append((0, i))
        edges.append((i, 1 + i % 5))
        edges.append((11, 5 + i))
        edges.append((5 + i, 5 + (1 + i % 5)))
        edges.append((i, 5 + i))
        edges.append((i, 5 + (1 + i % 5)))
    return build_graph(12, edges)


def dodecahedron():
    """Outer 10-cycle 0..9, inner pair of pentagons 10..19 (step 2),
    spokes i -- 10+i.
    """
    edges = []
    for i in range(10):
        edges.append((i, (i + 1) % 10))
        edges.append((10 + i, 10 + (i + 2) % 10))
        edges.append((i, 10 + i))
    return build_graph(20, edges)


def triangular_grid(r):
    """Radius-r ball patch of the equilateral triangular tiling, in axial
    coordinates (x,y) with |x|,|y|,|x+y| <= r; ids in (x,y) lex order.
    """
    if r < 1:
        raise BadParams("triangular_grid needs r >= 1")
    if r > 8:
        raise BadParams("triangular grid patch too large")
    coords = [
        (x, y)
        for x in range(-r, r + 1)
        for y in range(-r, r + 1)
        if abs(x + y) <= r
    ]
    idx = {c: i for i, c in enumerate(coords)}
    steps = ((1, 0), (0, 1), (1, -1))
    edges = []
    for (x, y), i in idx.items():
        for dx, dy in steps:
            j = idx.get((x + dx, y + dy))
            if j is not None:
                edges.append((i, j))
    return build_graph(len(coords), edges)


def king_grid(w, h):
    """w x h grid with king moves (8-neighborhoods); id = row*w + col."""
    if w < 1 or h < 1:
        raise BadParams("king_grid needs positive dimensions")
    if w * h > 4096:
        raise BadParams("king grid too large")
    edges = []
    for y in range(h):
        for x in range(w):
            i = y * w + x
            for dx, dy in ((1, 0), (0, 1), (1, 1), (1, -1)):
                nx, ny = x + dx, y + dy
                if 0 <= nx < w and 0 <= ny < h:
                    edges.append((i, ny * w + nx))
    return build_graph(w * h, edges)


def _spanning_trees(n, edges, guard):
    """All spanning trees as frozensets of edge indices, by recursive
    deletion / contraction of the first remaining edge.
    """
    out = []

    def rec(elist, labels, chosen):
        # elist: (u, v, original-index) with u,v in the contracted labels
        k = len(set(labels.values()))
        if k == 1:
            out.append(frozenset(chosen))
            if len(out) > guard:
                raise BadParams("spanning tree count exceeds guard %d" % guard)
            return
        if not elist:
            return
        u, v, idx = elist[0]
        rest = elist[1:]
        # delete: usable only if the rest still connects everything
        if _connects(rest, labels, k):
            rec(rest, labels, chosen)
        # contract u and v
        ru, rv = labels[u], labels[v]
        merged = {x: (ru if lab == rv else lab) for x, lab in labels.items()}
        kept = []
        for a, b, i in rest:
            if merged[a] != merged[b]:
                kept.append((a, b, i))
        rec(kept, merged, chosen + [idx])

    labels = {v: v for v in range(n)}
    rec([(u, v, i) for i, (u, v) in enumerate(edges)], labels, [])
    return out


def _connects(elist, labels, k):
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    comps = k
    for a, b, _ in elist:
        ra, rb = find(labels[a]), find(labels[b])
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


def basis_graph_graphic(h, guard=20000):
    """Basis graph of the graphic matroid of h: vertices are spanning trees
    (in enumeration order), adjacent when they differ in exactly one edge
    swap.
    """
    trees = _spanning_trees(h.n, h.edges, guard)
    trees.sort(key=lambda t: tuple(sorted(t)))
    m = len(trees)
    if m == 0:
        raise BadParams("input graph has no spanning tree")
    edges = []
    for i in range(m):
        for j in range(i + 1, m):
            if len(trees[i] ^ trees[j]) == 2:
                edges.append((i, j))
    return build_graph(m, edges)


# the 8-vertex graph whose union shadow at the bottom pole is non-convex;
# labels: w=0 u=1 v=2 s=3 t=4 x0=5 y=6 z=7
GAMMA_LABELS = {"w": 0, "u": 1, "v": 2, "s": 3, "t": 4, "x0": 5, "y": 6, "z": 7}

_GAMMA_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4),
    (1, 4), (1, 3), (2, 3), (3, 6), (3, 5),
    (1, 6), (4, 6), (4, 7), (2, 7), (6, 7),
    (1, 5), (2, 5), (5, 6), (5, 7),
]


def gamma():
    return build_graph(8, _GAMMA_EDGES)


_FORBIDDEN_EDGES = {
    1: [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
    2: [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    3: [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
    4: [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (1, 5), (3, 5), (4, 5)],
    5: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
        (3, 4), (1, 5), (3, 5), (4, 5)],
}

# the vertex and convex set that no complementary halfspace pair separates,
# one pair per forbidden pattern (used to replay the non-separability)
FORBIDDEN_WITNESS = {
    1: (1, (2,)),
    2: (3, (4,)),
    3: (1, (2,)),
    4: (4, (1, 3, 5)),
    5: (1, (2, 3, 4)),
}


def forbidden(i):
    """The five minimal meshed graphs that break point/convex-set
    separation; 1 = K_{2,3}, 2 adds the rim edge, 3 the center edge,
    4 and 5 are the 6-vertex patterns.
    """
    if i not in _FORBIDDEN_EDGES:
        raise BadParams("forbidden pattern index must be 1..5")
    edges = _FORBIDDEN_EDGES[i]
    return build_graph(5 if i <= 3 else 6, edges)


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_multipartite": (complete_multipartite, None),
    "star": (star, 1),
    "random_tree": (random_tree, 2),
    "hypercube": (hypercube, 1),
    "hamming": (hamming, None),
    "hyperoctahedron": (hyperoctahedron, 1),
    "johnson": (johnson, 2),
    "half_cube": (half_cube, 1),
    "petersen": (petersen, 0),
    "icosahedron": (icosahedron, 0),
    "dodecahedron": (dodecahedron, 0),
    "triangular_grid": (triangular_grid, 1),
    "king_grid": (king_grid, 2),
    "gamma": (gamma, 0),
    "forbidden": (forbidden, 1),
}


def generate(name, params=()):
    """Dispatch by family name with integer parameters.

    basis_graph_graphic is not dispatched here because its parameter is a
    graph; call it directly (the CLI loads the graph from a file first).
    """
    if name not in _FAMILIES:
        raise BadParams("unknown family %r" % name)
    fn, arity = _FAMILIES[name]
    try:
        args = [int(p) for p in params]
    except (TypeError, ValueError):
        raise BadParams("family parameters must be integers")
    if arity is None:
        if not args:
            raise BadParams("%s needs at least one size" % name)
        return fn(args)
    if len(args) != arity:
        raise BadParams("%s takes %d parameter(s), got %d" % (name, arity, len(args)))
    return fn(*args)
