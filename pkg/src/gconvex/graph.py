"""Core graph machinery: construction, distances, intervals, metric triangles,
metric-condition checkers, clique enumeration, induced-subgraph search, and
dismantling orders.

Vertices are dense integer ids 0..n-1.  Every vertex set is a fixed-width
bitset (see VertexSet); all hot loops work on the raw int masks.
"""

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    pass


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DisconnectedError(GraphError):
    """The input graph is not connected."""


class EmptyGraphError(GraphError):
    """The graph has no vertices."""


class TooLarge(GraphError):
    """An exhaustive operation was asked to exceed its size guard."""


def _bits(mask):
    """Iterate set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """Immutable set of vertex ids backed by an int bitmask.

    Supports the usual set algebra plus complement(); iteration is in
    ascending id order.
    """

    __slots__ = ("mask", "n")

    def __init__(self, n, mask=0):
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n, members):
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise GraphError("vertex %r out of range 0..%d" % (v, n - 1))
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    def members(self):
        return list(_bits(self.mask))

    def complement(self):
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def isdisjoint(self, other):
        return self.mask & other.mask == 0

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def __contains__(self, v):
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self):
        return _bits(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __bool__(self):
        return self.mask != 0

    def __eq__(self, other):
        return (
            isinstance(other, VertexSet)
            and self.mask == other.mask
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.mask, self.n))

    def __and__(self, other):
        return VertexSet(self.n, self.mask & other.mask)

    def __or__(self, other):
        return VertexSet(self.n, self.mask | other.mask)

    def __sub__(self, other):
        return VertexSet(self.n, self.mask & ~other.mask)

    def __xor__(self, other):
        return VertexSet(self.n, self.mask ^ other.mask)

    def __le__(self, other):
        return self.issubset(other)

    def __repr__(self):
        return "VertexSet(%r)" % (self.members(),)


@dataclass(frozen=True)
class MetricTriangle:
    """A triple v1v2v3 whose pairwise intervals meet only in the endpoints.

    size is d(v1,v2); in a meshed graph all three sides are equal.
    """

    v1: int
    v2: int
    v3: int
    size: int


@dataclass(frozen=True)
class ConditionWitness:
    """Outcome of a universally quantified condition check.

    witness is None when the condition holds, otherwise the minimal
    lexicographic violating tuple; replaying it against the definition
    reproduces the violation.
    """

    name: str
    witness: tuple | None = None

    @property
    def holds(self):
        return self.witness is None

    def __bool__(self):
        return self.holds


class Graph:
    """Immutable simple connected undirected graph with cached all-pairs
    distances (BFS from every vertex at build time).
    """

    def __init__(self, n, edges):
        # use build_graph; this constructor assumes validated, deduplicated input
        self.n = n
        self.edges = edges
        self.adj = [[] for _ in range(n)]
        self.nbr = [0] * n
        for u, v in edges:
            self.adj[u].append(v)
            self.adj[v].append(u)
            self.nbr[u] |= 1 << v
            self.nbr[v] |= 1 << u
        for row in self.adj:
            row.sort()
        self.dist = [self._bfs(s) for s in range(n)]
        for row in self.dist:
            for d in row:
                if d < 0:
                    raise DisconnectedError("graph is not connected")
        self._intervals = {}
        self._pair_hulls = {}
        self._max_cliques = None
        self._s3_cache = None
        self._aux = {}

    def _bfs(self, s):
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def degree(self, v):
        return len(self.adj[v])

    def adjacent(self, u, v):
        return (self.nbr[u] >> v) & 1 == 1

    def full_mask(self):
        return (1 << self.n) - 1

    def interval_mask(self, u, v):
        """Bitmask of {w : d(u,w)+d(w,v) = d(u,v)}; memoized per pair."""
        if u > v:
            u, v = v, u
        key = u * self.n + v
        cached = self._intervals.get(key)
        if cached is not None:
            return cached
        du, dv = self.dist[u], self.dist[v]
        duv = du[v]
        mask = 0
        for w in range(self.n):
            if du[w] + dv[w] == duv:
                mask |= 1 << w
        self._intervals[key] = mask
        return mask

    def vset(self, members):
        return VertexSet.of(self.n, members)

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, len(self.edges))


def build_graph(n, edges):
    """Validate and build a Graph.

    Raises EmptyGraphError, LoopEdgeError on a u==v edge, DisconnectedError
    when some pair of vertices is unreachable.
    """
    if n == 0:
        raise EmptyGraphError("graph needs at least one vertex")
    seen = set()
    clean = []
    for u, v in edges:
        if u == v:
            raise LoopEdgeError("loop edge at vertex %d" % u)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("edge (%d,%d) out of range 0..%d" % (u, v, n - 1))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        clean.append(key)
    clean.sort()
    return Graph(n, clean)


def interval(g, u, v):
    """The geodesic interval [u,v] as a VertexSet."""
    return VertexSet(g.n, g.interval_mask(u, v))


def is_bipartite(g):
    """Two-color the graph; True when no edge joins same-color vertices."""
    color = g.dist[0]
    return all((color[u] + color[v]) % 2 == 1 for u, v in g.edges)


# ---------------------------------------------------------------------------
# metric triangles / quasi-medians


def _is_metric_triangle(g, v1, v2, v3):
    e1 = g.interval_mask(v1, v2)
    e2 = g.interval_mask(v1, v3)
    e3 = g.interval_mask(v2, v3)
    return (
        e1 & e2 == 1 << v1
        and e1 & e3 == 1 << v2
        and e2 & e3 == 1 << v3
    )


def metric_triangle_of(g, x, y, z):
    """A quasi-median of the triple (x,y,z).

    Returns the metric triangle v1v2v3 realizing the three distance
    decompositions d(x,y)=d(x,v1)+d(v1,v2)+d(v2,y) (cyclically);
    deterministic: candidates scanned ascending by v1, then v2, then v3.
    """
    d = g.dist
    dxy, dyz, dzx = d[x][y], d[y][z], d[z][x]
    for v1 in _bits(g.interval_mask(x, y) & g.interval_mask(x, z)):
        for v2 in _bits(g.interval_mask(y, x) & g.interval_mask(y, z)):
            if d[x][v1] + d[v1][v2] + d[v2][y] != dxy:
                continue
            for v3 in _bits(g.interval_mask(z, x) & g.interval_mask(z, y)):
                if d[y][v2] + d[v2][v3] + d[v3][z] != dyz:
                    continue
                if d[z][v3] + d[v3][v1] + d[v1][x] != dzx:
                    continue
                if _is_metric_triangle(g, v1, v2, v3):
                    return MetricTriangle(v1, v2, v3, d[v1][v2])
    raise AssertionError("triple (%d,%d,%d) has no quasi-median" % (x, y, z))


# ---------------------------------------------------------------------------
# metric conditions


def _induced_squares(g):
    """Induced 4-cycles as canonical tuples (v1,v2,v3,v4), v1 minimal, v2<v4."""
    n = g.n
    for v1 in range(n):
        for v2 in g.adj[v1]:
            if v2 <= v1:
                continue
            for v3 in g.adj[v2]:
                if v3 <= v1 or g.adjacent(v1, v3):
                    continue
                for v4 in g.adj[v3]:
                    if v4 <= v2 or v4 == v2:
                        continue
                    if g.adjacent(v1, v4) and not g.adjacent(v2, v4):
                        yield (v1, v2, v3, v4)


def check_metric_condition(g, kind):
    """Scan one of the metric conditions TC / QC / QCminus / PC.

    Returns a ConditionWitness; on failure the witness tuple is the minimal
    lexicographic violation ((u,v,w), (u,v,w,z), or (b, square)).
    """
    kind = kind.lower()
    d = g.dist
    n = g.n
    if kind == "tc":
        for u in range(n):
            du = d[u]
            for v in range(n):
                for w in g.adj[v]:
                    if w <= v or du[v] != du[w] or du[v] < 1:
                        continue
                    k = du[v]
                    if not any(du[x] == k - 1 for x in _bits(g.nbr[v] & g.nbr[w])):
                        return ConditionWitness("TC", (u, v, w))
        return ConditionWitness("TC")
    if kind == "qc":
        for u in range(n):
            du = d[u]
            for v in range(n):
                for w in range(v + 1, n):
                    if d[v][w] != 2 or du[v] != du[w]:
                        continue
                    k = du[v]
                    for z in _bits(g.nbr[v] & g.nbr[w]):
                        if du[z] != k + 1:
                            continue
                        if not any(
                            du[x] == k - 1 for x in _bits(g.nbr[v] & g.nbr[w])
                        ):
                            return ConditionWitness("QC", (u, v, w, z))
        return ConditionWitness("QC")
    if kind == "qcminus":
        for u in range(n):
            du = d[u]
            for v in range(n):
                for w in range(v + 1, n):
                    if d[v][w] != 2:
                        continue
                    bound = du[v] + du[w]
                    if not any(
                        2 * du[x] <= bound for x in _bits(g.nbr[v] & g.nbr[w])
                    ):
                        return ConditionWitness("QCminus", (u, v, w))
        return ConditionWitness("QCminus")
    if kind == "pc":
        squares = list(_induced_squares(g))
        for b in range(n):
            db = d[b]
            for sq in squares:
                v1, v2, v3, v4 = sq
                if db[v1] + db[v3] != db[v2] + db[v4]:
                    return ConditionWitness("PC", (b, sq))
        return ConditionWitness("PC")
    raise ValueError("unknown metric condition %r" % kind)


def is_meshed(g):
    """Meshed = the weak quadrangle condition QCminus holds."""
    got = check_metric_condition(g, "qcminus")
    return ConditionWitness("meshed", got.witness)


def is_weakly_modular(g):
    """Weakly modular = TC and QC both hold."""
    got = check_metric_condition(g, "tc")
    if not got.holds:
        return ConditionWitness("weakly_modular", got.witness)
    got = check_metric_condition(g, "qc")
    return ConditionWitness("weakly_modular", got.witness)


# ---------------------------------------------------------------------------
# maximal cliques


def _bron_kerbosch(g, r, p, x, out):
    if p == 0 and x == 0:
        out.append(r)
        return
    # pivot: vertex of p|x with most neighbors inside p
    pivot, best = -1, -1
    for u in _bits(p | x):
        cnt = (p & g.nbr[u]).bit_count()
        if cnt > best:
            pivot, best = u, cnt
    for v in _bits(p & ~g.nbr[pivot]):
        bit = 1 << v
        _bron_kerbosch(g, r | bit, p & g.nbr[v], x & g.nbr[v], out)
        p &= ~bit
        x |= bit


def maximal_cliques(g):
    """Yield every maximal clique exactly once, increasing lexicographic by
    sorted member list.  Cached on the graph after the first full run.
    """
    if g._max_cliques is None:
        out = []
        _bron_kerbosch(g, 0, g.full_mask(), 0, out)
        out.sort(key=lambda m: tuple(_bits(m)))
        g._max_cliques = out
    for mask in g._max_cliques:
        yield VertexSet(g.n, mask)


def clique_masks(g):
    """Raw sorted maximal-clique masks (internal fast path)."""
    if g._max_cliques is None:
        for _ in maximal_cliques(g):
            pass
    return g._max_cliques


# ---------------------------------------------------------------------------
# induced subgraph search


def find_induced(g, pattern):
    """First induced embedding of pattern into g, or None.

    The embedding is a tuple img with img[i] = image of pattern vertex i,
    preserving adjacency and non-adjacency; the lexicographically least
    image tuple is returned.
    """
    k = pattern.n
    if k > g.n:
        return None
    pdeg = [pattern.degree(i) for i in range(k)]
    img = [-1] * k
    used = 0

    def place(i, used):
        if i == k:
            return True
        for cand in range(g.n):
            bit = 1 << cand
            if used & bit or g.degree(cand) < pdeg[i]:
                continue
            ok = True
            for j in range(i):
                if pattern.adjacent(i, j) != g.adjacent(cand, img[j]):
                    ok = False
                    break
            if ok:
                img[i] = cand
                if place(i + 1, used | bit):
                    return True
        return False

    if place(0, used):
        return tuple(img)
    return None


# ---------------------------------------------------------------------------
# dismantling


def _dominated_in(nbr, alive, v):
    """Is v dominated by some other alive vertex u~v (N(v) minus u inside N[u])?"""
    nv = nbr[v] & alive
    for u in _bits(nv):
        if nv & ~(nbr[u] | (1 << u)) == 0:
            return True
    return False


def dismantling_order(g):
    """Greedy dismantling order, or None.

    Repeatedly removes the lowest-id dominated vertex of the current induced
    subgraph; the removal order reversed gives v1..vn where each vi (i>=2) is
    dominated in the subgraph induced by {v1..vi}.
    """
    alive = g.full_mask()
    removed = []
    remaining = g.n
    while remaining > 1:
        pick = -1
        for v in _bits(alive):
            if _dominated_in(g.nbr, alive, v):
                pick = v
                break
        if pick < 0:
            return None
        alive &= ~(1 << pick)
        removed.append(pick)
        remaining -= 1
    removed.append(next(_bits(alive)))
    removed.reverse()
    return removed


# ---------------------------------------------------------------------------
# edge-list interchange format


def parse_edge_list(text):
    """Parse the interchange format: first data line "n m", then m lines
    "u v"; '#' starts a comment.  Errors cite the 1-based line number.
    """
    header = None
    edges = []
    want = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphError("line %d: expected header 'n m'" % lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphError("line %d: expected two integers" % lineno)
            header = (n, m)
            want = m
            continue
        if len(parts) != 2:
            raise GraphError("line %d: expected edge 'u v'" % lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError("line %d: expected two integers" % lineno)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphError(
                "line %d: edge (%d,%d) out of range 0..%d"
                % (lineno, u, v, header[0] - 1)
            )
        if u == v:
            raise GraphError("line %d: loop edge at vertex %d" % (lineno, u))
        edges.append((u, v))
    if header is None:
        raise GraphError("empty input: missing 'n m' header")
    if len(edges) != want:
        raise GraphError(
            "header announced %d edges, found %d" % (want, len(edges))
        )
    return build_graph(header[0], edges)


def format_edge_list(g):
    lines = ["%d %d" % (g.n, len(g.edges))]
    lines.extend("%d %d" % e for e in g.edges)
    return "\n".join(lines) + "\n"
