"""Geodesic convexity: hulls, convexity tests, shadows (set / vertex / union /
extended), imprints, joins, the W-partition of a vertex pair, and the
Peano / Pasch / sandglass axiom scanners.

All set arguments and results are VertexSets over a shared Graph.
"""

from dataclasses import dataclass

from .graph import ConditionWitness, VertexSet, _bits


class EmptyInput(ValueError):
    """An operation that needs a non-empty vertex set got an empty one."""


class NotPointedMaximalClique(ValueError):
    """(x0, K) does not satisfy: x0 not in K and K + x0 is a maximal clique."""


# ---------------------------------------------------------------------------
# hulls


def hull_mask(g, mask):
    """Interval-closure fixpoint on a raw bitmask.

    Each round only closes pairs with at least one endpoint added in the
    previous round; old-old pairs are already closed.
    """
    cur = mask
    frontier = mask
    while frontier:
        add = 0
        for u in _bits(frontier):
            for v in _bits(cur):
                add |= g.interval_mask(u, v)
        frontier = add & ~cur
        cur |= frontier
    return cur


def pair_hull_mask(g, u, v):
    """conv({u,v}) as a bitmask; memoized on the graph."""
    if u > v:
        u, v = v, u
    key = u * g.n + v
    got = g._pair_hulls.get(key)
    if got is None:
        got = hull_mask(g, (1 << u) | (1 << v))
        g._pair_hulls[key] = got
    return got


def convex_hull(g, s):
    """Smallest convex superset of s."""
    if not s.mask:
        raise EmptyInput("convex_hull needs a non-empty set")
    if s.mask.bit_count() == 2:
        a, b = s.members()
        return VertexSet(g.n, pair_hull_mask(g, a, b))
    return VertexSet(g.n, hull_mask(g, s.mask))


def is_convex(g, s):
    """s closed under intervals; the empty set counts as convex."""
    if not s.mask:
        return True
    return hull_mask(g, s.mask) == s.mask


def _induced_connected(g, mask):
    if mask == 0:
        return True
    start = next(_bits(mask))
    seen = 1 << start
    stack = [start]
    while stack:
        u = stack.pop()
        fresh = g.nbr[u] & mask & ~seen
        seen |= fresh
        stack.extend(_bits(fresh))
    return seen == mask


def is_locally_convex(g, s):
    """Induced subgraph connected and every inside pair at distance 2 has
    its whole interval inside.
    """
    mask = s.mask
    if not _induced_connected(g, mask):
        return False
    mem = list(_bits(mask))
    for i, u in enumerate(mem):
        du = g.dist[u]
        for v in mem[i + 1:]:
            if du[v] == 2 and g.interval_mask(u, v) & ~mask:
                return False
    return True


# ---------------------------------------------------------------------------
# shadows and imprints


def shadow(g, a, b):
    """Shadow of a with respect to b: {x : conv(b + x) meets a}.

    One hull call per candidate vertex; pair hulls are memoized, so the
    common vertex-pole case costs nothing after the first pass.
    """
    if not a.mask or not b.mask:
        raise EmptyInput("shadow needs non-empty sets")
    out = 0
    if b.mask.bit_count() == 1:
        x0 = next(_bits(b.mask))
        for x in range(g.n):
            if pair_hull_mask(g, x0, x) & a.mask:
                out |= 1 << x
    else:
        for x in range(g.n):
            if hull_mask(g, b.mask | (1 << x)) & a.mask:
                out |= 1 << x
    return VertexSet(g.n, out)


def vertex_shadow_mask(g, a_mask, x0):
    """Raw-mask shadow a/x0 (internal fast path)."""
    out = 0
    for x in range(g.n):
        if pair_hull_mask(g, x0, x) & a_mask:
            out |= 1 << x
    return out


def union_shadow(g, x0, k):
    """Union shadow of the vertex x0 over the set k: union of x0/y for y in k,
    i.e. {x : x0 in conv(x,y) for some y in k}.
    """
    if not k.mask:
        raise EmptyInput("union_shadow needs a non-empty set")
    out = 0
    for x in range(g.n):
        for y in _bits(k.mask):
            if (pair_hull_mask(g, x, y) >> x0) & 1:
                out |= 1 << x
                break
    return VertexSet(g.n, out)


def equidistant(g, k):
    """Vertices equidistant from every member of k."""
    mem = list(_bits(k.mask if isinstance(k, VertexSet) else k))
    if not mem:
        raise EmptyInput("equidistant needs a non-empty set")
    out = 0
    first = g.dist[mem[0]]
    for v in range(g.n):
        if all(g.dist[y][v] == first[v] for y in mem[1:]):
            out |= 1 << v
    return VertexSet(g.n, out)


def imprint(g, x0, a):
    """{z in a : [x0,z] meets a only in z}."""
    out = 0
    for z in _bits(a.mask):
        if g.interval_mask(x0, z) & a.mask == 1 << z:
            out |= 1 << z
    return VertexSet(g.n, out)


def w_partition(g, u, v):
    """Distance-comparison partition (W(u,v), W(v,u), W_=(u,v)) of V."""
    du, dv = g.dist[u], g.dist[v]
    wu = wv = we = 0
    for x in range(g.n):
        if du[x] < dv[x]:
            wu |= 1 << x
        elif dv[x] < du[x]:
            wv |= 1 << x
        else:
            we |= 1 << x
    n = g.n
    return VertexSet(n, wu), VertexSet(n, wv), VertexSet(n, we)


def is_pointed_maximal_clique(g, x0, k):
    """x0 outside k, k + x0 a clique, and no vertex adjacent to all of it."""
    kmask = k.mask if isinstance(k, VertexSet) else k
    if (kmask >> x0) & 1:
        return False
    full = kmask | (1 << x0)
    common = g.full_mask()
    for v in _bits(full):
        if full & ~(g.nbr[v] | (1 << v)):
            return False
        common &= g.nbr[v]
    return common & ~full == 0


def extended_shadow(g, x0, k):
    """x0//K: the union shadow of x0 over K plus the vertices equidistant
    from all of K + x0.  Requires (x0,K) to be a pointed maximal clique.
    """
    if not is_pointed_maximal_clique(g, x0, k):
        raise NotPointedMaximalClique(
            "(%d, %r) is not a pointed maximal clique" % (x0, k.members())
        )
    kp = VertexSet(g.n, k.mask | (1 << x0))
    return union_shadow(g, x0, k) | equidistant(g, kp)


# ---------------------------------------------------------------------------
# joins and the three axioms


def join(g, a, b):
    """A*B: union of the intervals [a,b] over a in A, b in B."""
    out = 0
    for x in _bits(a.mask):
        for y in _bits(b.mask):
            out |= g.interval_mask(x, y)
    return VertexSet(g.n, out)


def check_peano(g):
    """Peano axiom, interval form: for all u,v,w, x in [w,v], y in [u,x]
    there is z in [u,v] with y in [w,z].  Equivalent to join-hull
    commutativity.  Returns the first lexicographic violation (u,v,w,x,y).
    """
    n = g.n
    zcache = {}

    def zmask(w, y):
        # {z : y on a shortest w-z path}
        got = zcache.get((w, y))
        if got is None:
            dwy = g.dist[w][y]
            dy = g.dist[y]
            dw = g.dist[w]
            got = 0
            for z in range(n):
                if dwy + dy[z] == dw[z]:
                    got |= 1 << z
            zcache[(w, y)] = got
        return got

    for u in range(n):
        for v in range(n):
            iuv = g.interval_mask(u, v)
            for w in range(n):
                for x in _bits(g.interval_mask(w, v)):
                    for y in _bits(g.interval_mask(u, x)):
                        if iuv & zmask(w, y) == 0:
                            return ConditionWitness("Peano", (u, v, w, x, y))
    return ConditionWitness("Peano")


def check_pasch(g):
    """Pasch axiom: for all u,v,w, x in conv(w,u), y in conv(w,v) there is
    z in conv(u,y) and conv(v,x).  Equivalent to S4 for geodesic convexity.
    Returns the first lexicographic violation (u,v,w,x,y).
    """
    n = g.n
    for u in range(n):
        for v in range(n):
            for w in range(n):
                hwu = pair_hull_mask(g, w, u)
                hwv = pair_hull_mask(g, w, v)
                for x in _bits(hwu):
                    hvx = pair_hull_mask(g, v, x)
                    for y in _bits(hwv):
                        if pair_hull_mask(g, u, y) & hvx == 0:
                            return ConditionWitness("Pasch", (u, v, w, x, y))
    return ConditionWitness("Pasch")


def check_sandglass(g):
    """Sandglass axiom: whenever y in conv(u,u') and conv(v,v') and
    x in conv(u,v), some x' in conv(u',v') has y in conv(x,x').
    Returns the first lexicographic violation (u,u',v,v',x,y).
    """
    n = g.n
    qcache = {}

    def qmask(x, y):
        # {x' : y in conv(x,x')}
        got = qcache.get((x, y))
        if got is None:
            got = 0
            for xp in range(n):
                if (pair_hull_mask(g, x, xp) >> y) & 1:
                    got |= 1 << xp
            qcache[(x, y)] = got
        return got

    for u in range(n):
        for up in range(n):
            huu = pair_hull_mask(g, u, up)
            for v in range(n):
                huv = pair_hull_mask(g, u, v)
                for vp in range(n):
                    ymask = huu & pair_hull_mask(g, v, vp)
                    if ymask == 0:
                        continue
                    target = pair_hull_mask(g, up, vp)
                    for x in _bits(huv):
                        for y in _bits(ymask):
                            if target & qmask(x, y) == 0:
                                return ConditionWitness(
                                    "sandglass", (u, up, v, vp, x, y)
                                )
    return ConditionWitness("sandglass")


# ---------------------------------------------------------------------------
# declarative shadow requests (CLI surface)


@dataclass(frozen=True)
class ShadowSpec:
    """A shadow request: which variant, the base set, and the pole.

    kind is one of set / vertex / union / extended; for union and extended
    the pole must be a single vertex and the base a clique.
    """

    base: VertexSet
    pole: VertexSet
    kind: str = "set"

    def evaluate(self, g):
        if self.kind in ("set", "vertex"):
            return shadow(g, self.base, self.pole)
        if len(self.pole) != 1:
            raise EmptyInput("union/extended shadows need a single pole vertex")
        x0 = next(iter(self.pole))
        if self.kind == "union":
            return union_shadow(g, x0, self.base)
        if self.kind == "extended":
            return extended_shadow(g, x0, self.base)
        raise ValueError("unknown shadow kind %r" % self.kind)
