"""Halfspace enumeration and the halfspace separation problem.

Four enumeration strategies (brute force, bipartite edge W-pairs, gated edge
W-pairs, dismantling recursion for meshed graphs) and four separation
procedures: greedy growth, the generic three-step method, and the exact
gated and monophonic deciders built on top of it.  Every separable verdict is
re-verified against the halfspace-pair invariants before it is returned.
"""

from dataclasses import dataclass

from .graph import (
    GraphError,
    VertexSet,
    _bits,
    _dominated_in,
    build_graph,
    is_bipartite,
    is_meshed,
)
from .convexity import w_partition
from .altconvexity import _check_kind, hull_by_kind
from .oracles import _hull_mask_by_kind, enumerate_halfspace_masks


class StrategyInapplicable(ValueError):
    """A forced strategy's precondition does not hold for this input."""


class HereditaryDismantlingFailed(ValueError):
    """No dominated vertex can be removed while keeping the graph meshed."""


SEPARABLE = "separable"
NOT_SEPARABLE = "not_separable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class HalfspacePair:
    """Complementary pair of non-empty convex sets under one convexity."""

    h1: VertexSet
    h2: VertexSet
    kind: str = "geodesic"


@dataclass(frozen=True)
class SeparationResult:
    status: str
    pair: HalfspacePair = None
    reason: str = None

    @property
    def separable(self):
        return self.status == SEPARABLE


@dataclass(frozen=True)
class TwoSatInstance:
    """Clauses are pairs of non-zero 1-based literals; negative = negated."""

    nvars: int
    clauses: tuple


# ---------------------------------------------------------------------------
# small shared helpers


def _is_convex_mask(g, mask, tag):
    return mask == 0 or _hull_mask_by_kind(g, mask, tag) == mask


def _verify_split(g, m1, m2, tag):
    full = g.full_mask()
    return (
        m1 != 0
        and m2 != 0
        and m1 & m2 == 0
        and m1 | m2 == full
        and _is_convex_mask(g, m1, tag)
        and _is_convex_mask(g, m2, tag)
    )


def _make_pair(g, m1, m2, tag):
    assert _verify_split(g, m1, m2, tag), "halfspace pair failed verification"
    return HalfspacePair(VertexSet(g.n, m1), VertexSet(g.n, m2), tag)


def _found(g, m1, m2, tag):
    return SeparationResult(SEPARABLE, _make_pair(g, m1, m2, tag))


def _shadow_mask(g, amask, bmask, tag):
    """{x : kind-hull(b + x) meets a}; contains a."""
    out = 0
    for x in range(g.n):
        if _hull_mask_by_kind(g, bmask | (1 << x), tag) & amask:
            out |= 1 << x
    return out


# ---------------------------------------------------------------------------
# enumeration strategies


def _canonical(g, m1, m2):
    return (m1, m2) if m1 & 1 else (m2, m1)


def _emit_pairs(g, splits, tag):
    """Canonicalize (vertex-0 side first), dedup, sort, verify, wrap."""
    seen = {}
    for m1, m2 in splits:
        m1, m2 = _canonical(g, m1, m2)
        seen[m1] = m2
    out = []
    for m1 in sorted(seen, key=lambda m: (m.bit_count(), tuple(_bits(m)))):
        m2 = seen[m1]
        if _verify_split(g, m1, m2, tag):
            out.append(HalfspacePair(VertexSet(g.n, m1), VertexSet(g.n, m2), tag))
    return out


def _edge_w_splits(g):
    # an edge with distance ties cannot cross any halfspace pair
    for u, v in g.edges:
        wu, wv, we = w_partition(g, u, v)
        if not we.mask:
            yield wu.mask, wv.mask


def _dismantling_splits(g):
    """All geodesic halfspace splits of a meshed graph by removing one
    dominated vertex at a time, keeping every prefix meshed.

    A halfspace pair of g restricts to a halfspace pair of g - v (or to the
    split ({v}, V - v)), so lifting the recursive answer by placing v on
    either side and re-verifying is complete.
    """
    if g.n == 1:
        return []
    full = g.full_mask()
    pick = sub = None
    for v in range(g.n):
        if not _dominated_in(g.nbr, full, v):
            continue
        keep = [w for w in range(g.n) if w != v]
        relabel = {w: i for i, w in enumerate(keep)}
        sub_edges = [
            (relabel[a], relabel[b]) for a, b in g.edges if a != v and b != v
        ]
        try:
            cand = build_graph(g.n - 1, sub_edges)
        except GraphError:
            continue
        if is_meshed(cand):
            pick, sub = v, cand
            break
    if pick is None:
        raise HereditaryDismantlingFailed(
            "no dominated vertex leaves the graph meshed"
        )

    def lift(mask):
        out = 0
        for i in _bits(mask):
            out |= 1 << (i if i < pick else i + 1)
        return out

    bit = 1 << pick
    splits = [(bit, full & ~bit)]
    for p, q in _dismantling_splits(sub):
        lp, lq = lift(p), lift(q)
        splits.append((lp | bit, lq))
        splits.append((lp, lq | bit))
    return [s for s in splits if _verify_split(g, s[0], s[1], "geodesic")]


def enumerate_halfspaces(g, kind="geodesic", strategy="bruteforce", max_n=18):
    """All unordered complementary halfspace pairs under the kind.

    bruteforce filters the convex-set oracle (guarded); bipartite uses the
    edge distance-partitions, complete because every halfspace pair of a
    bipartite graph is such a pair; gated_edges does the same for gated
    convexity where ties across a crossing edge are impossible; dismantling
    recurses on meshed graphs through dominated-vertex removal.
    """
    tag = _check_kind(kind)
    if strategy == "bruteforce":
        return _emit_pairs(g, enumerate_halfspace_masks(g, tag, max_n), tag)
    if strategy == "bipartite":
        if not is_bipartite(g):
            raise StrategyInapplicable("bipartite strategy needs a bipartite graph")
        return _emit_pairs(g, _edge_w_splits(g), tag)
    if strategy == "gated_edges":
        if tag != "gated":
            raise StrategyInapplicable("gated_edges strategy only fits gated convexity")
        return _emit_pairs(g, _edge_w_splits(g), tag)
    if strategy == "dismantling":
        if tag != "geodesic":
            raise StrategyInapplicable("dismantling strategy only fits geodesic convexity")
        if not is_meshed(g):
            raise StrategyInapplicable("dismantling strategy needs a meshed graph")
        return _emit_pairs(g, _dismantling_splits(g), tag)
    raise ValueError("unknown strategy %r" % strategy)


# ---------------------------------------------------------------------------
# greedy growth


def greedy_separation(g, kind, a, b):
    """Absorb unassigned vertices into whichever side keeps the hulls
    disjoint, trying the a-side first, in ascending vertex order, restarting
    after every success.  Complete when the convexity satisfies the
    join-commutativity axiom; otherwise it can get stuck, which is reported
    as unknown rather than as a wrong negative.
    """
    tag = _check_kind(kind)
    am = hull_by_kind(g, a, tag).mask
    bm = hull_by_kind(g, b, tag).mask
    if am & bm:
        return SeparationResult(NOT_SEPARABLE, reason="the %s hulls intersect" % tag)
    full = g.full_mask()
    while am | bm != full:
        grew = False
        for x in _bits(full & ~(am | bm)):
            cand = _hull_mask_by_kind(g, am | (1 << x), tag)
            if cand & bm == 0:
                am = cand
                grew = True
                break
            cand = _hull_mask_by_kind(g, bm | (1 << x), tag)
            if cand & am == 0:
                bm = cand
                grew = True
                break
        if not grew:
            return SeparationResult(
                UNKNOWN, reason="greedy growth stuck with both sides blocked"
            )
    return _found(g, am, bm, tag)


# ---------------------------------------------------------------------------
# the three-step method


def shadow_closure(g, kind, a, b):
    """Alternate a <- hull(shadow(a,b)) and b <- hull(shadow(b,a)) until the
    pair is stable.  Returns (a*, b*), or None when the closures meet (then
    no halfspace pair separates the inputs).  Any separating pair must
    contain a* and b* on its two sides.
    """
    tag = _check_kind(kind)
    am = hull_by_kind(g, a, tag).mask
    bm = hull_by_kind(g, b, tag).mask
    while True:
        if am & bm:
            return None
        na = _hull_mask_by_kind(g, _shadow_mask(g, am, bm, tag), tag)
        nb = _hull_mask_by_kind(g, _shadow_mask(g, bm, na, tag), tag)
        if na == am and nb == bm:
            return VertexSet(g.n, am), VertexSet(g.n, bm)
        am, bm = na, nb


def _closest_pair(g, amask, bmask):
    best = None
    for p in _bits(amask):
        dp = g.dist[p]
        for q in _bits(bmask):
            key = (dp[q], p, q)
            if best is None or key < best:
                best = key
    return best


def _lex_shortest_path(g, p, q):
    path = [p]
    cur = p
    while cur != q:
        dq = g.dist[q]
        step = min(w for w in _bits(g.nbr[cur]) if dq[w] == dq[cur] - 1)
        path.append(step)
        cur = step
    return path


def _branch_pairs(g, kind, astar, bstar):
    """Step 2: osculating shadow-closed candidate pairs from one shortest
    path between a closest pair.  A separating halfspace pair crosses the
    path in some edge, so it survives into at least one branch.
    """
    tag = _check_kind(kind)
    d, p, q = _closest_pair(g, astar.mask, bstar.mask)
    if d == 1:
        return [(astar.mask, bstar.mask)], False
    path = _lex_shortest_path(g, p, q)
    out = []
    dead_all = True
    for i in range(len(path) - 1):
        seed_a = VertexSet(g.n, astar.mask | (1 << path[i]))
        seed_b = VertexSet(g.n, bstar.mask | (1 << path[i + 1]))
        closed = shadow_closure(g, tag, seed_a, seed_b)
        if closed is None:
            continue
        dead_all = False
        out.append((closed[0].mask, closed[1].mask))
    return out, dead_all


def _mono_boundary_edges(g, amask, bmask):
    return [(u, v) for u, v in g.edges if
            ((amask >> u) & 1 and (bmask >> v) & 1)
            or ((amask >> v) & 1 and (bmask >> u) & 1)]


def _mono_branch(g, amask, bmask):
    """Exact separation of an osculating shadow-closed monophonic pair.

    Vertices outside both sides must join one of them; the forced block S_x
    of every outsider x (the outside neighbors of the pair lying in a common
    monophonic interval from x to the two ends of a crossing edge) pins x to
    whichever side S_x joins, and non-adjacent outside neighbors of the pair
    must part ways.  These constraints form a 2-SAT instance whose solutions
    are exactly the separating halfspace pairs extending (A, B).
    """
    full = g.full_mask()
    vplus = full & ~(amask | bmask)
    covered = amask | bmask
    vp0 = [x for x in _bits(vplus) if g.nbr[x] & covered]
    edges_ab = _mono_boundary_edges(g, amask, bmask)
    vlist = list(_bits(vplus))
    var = {x: i + 1 for i, x in enumerate(vlist)}

    sx = {}
    for x in vlist:
        block = []
        for x0 in vp0:
            for u, v in edges_ab:
                ua = (amask >> u) & 1
                au = u if ua else v
                bv = v if ua else u
                mu = _hull_mask_by_kind(g, (1 << x) | (1 << au), "monophonic")
                mv = _hull_mask_by_kind(g, (1 << x) | (1 << bv), "monophonic")
                if (mu >> x0) & 1 and (mv >> x0) & 1:
                    block.append(x0)
                    break
        sx[x] = block
        for i, x0 in enumerate(block):
            for y0 in block[i + 1:]:
                if not g.adjacent(x0, y0):
                    return SeparationResult(
                        NOT_SEPARABLE,
                        reason="forced block of %d holds the non-adjacent "
                        "pair (%d, %d)" % (x, x0, y0),
                    )

    clauses = []
    for x in vlist:
        for x0 in sx[x]:
            if x0 == x:
                continue
            clauses.append((var[x], -var[x0]))
            clauses.append((-var[x], var[x0]))
    for i, x0 in enumerate(vp0):
        for y0 in vp0[i + 1:]:
            if not g.adjacent(x0, y0):
                clauses.append((var[x0], var[y0]))
                clauses.append((-var[x0], -var[y0]))

    inst = TwoSatInstance(len(vlist), tuple(clauses))
    assignment = two_sat_solve(inst)
    if assignment is None:
        return SeparationResult(
            NOT_SEPARABLE, reason="side-assignment constraints are unsatisfiable"
        )
    h1, h2 = amask, bmask
    for x in vlist:
        if assignment[var[x] - 1]:
            h2 |= 1 << x
        else:
            h1 |= 1 << x
    return _found(g, h1, h2, "monophonic")


def _geodesic_branch(g, amask, bmask, max_n):
    if g.n > max_n:
        return SeparationResult(
            UNKNOWN,
            reason="geodesic residue case needs enumeration; n=%d exceeds "
            "the guard %d" % (g.n, max_n),
        )
    for m1, m2 in enumerate_halfspace_masks(g, "geodesic", max_n):
        if amask & ~m1 == 0 and bmask & ~m2 == 0:
            return _found(g, m1, m2, "geodesic")
        if amask & ~m2 == 0 and bmask & ~m1 == 0:
            return _found(g, m2, m1, "geodesic")
    return SeparationResult(
        NOT_SEPARABLE, reason="no halfspace pair extends the closed pair"
    )


def _branch_verdict(g, tag, amask, bmask, max_n):
    if amask | bmask == g.full_mask():
        return _found(g, amask, bmask, tag)
    if tag == "gated":
        # an osculating shadow-closed gated pair with leftover vertices is
        # never separable: the leftovers span a metric triangle with the pair
        return SeparationResult(
            NOT_SEPARABLE,
            reason="shadow-closed gated pair leaves vertices uncovered",
        )
    if tag == "monophonic":
        return _mono_branch(g, amask, bmask)
    return _geodesic_branch(g, amask, bmask, max_n)


def _orient(g, result, a):
    """Put the side containing a first."""
    if not result.separable:
        return result
    pair = result.pair
    if a.mask & ~pair.h1.mask == 0:
        return result
    return SeparationResult(
        SEPARABLE, HalfspacePair(pair.h2, pair.h1, pair.kind)
    )


def three_step_separation(g, kind, a, b, max_n=18):
    """Shadow-close the inputs, branch over the edges of one shortest path
    between the closed sides, then decide each osculating branch exactly
    (gated and monophonic) or by guarded enumeration (geodesic).
    """
    tag = _check_kind(kind)
    closed = shadow_closure(g, tag, a, b)
    if closed is None:
        return SeparationResult(
            NOT_SEPARABLE, reason="the shadow closures intersect"
        )
    astar, bstar = closed
    if astar.mask | bstar.mask == g.full_mask():
        return _orient(g, _found(g, astar.mask, bstar.mask, tag), a)
    branches, dead_all = _branch_pairs(g, tag, astar, bstar)
    if dead_all:
        return SeparationResult(
            NOT_SEPARABLE,
            reason="every crossing-edge branch has intersecting closures",
        )
    saw_unknown = False
    for amask, bmask in branches:
        verdict = _branch_verdict(g, tag, amask, bmask, max_n)
        if verdict.separable:
            return _orient(g, verdict, a)
        if verdict.status == UNKNOWN:
            saw_unknown = True
    if saw_unknown:
        return SeparationResult(
            UNKNOWN, reason="some branches exceeded the enumeration guard"
        )
    return SeparationResult(NOT_SEPARABLE, reason="all branches exhausted")


def separate_gated(g, a, b):
    """Exact halfspace separation under gated convexity."""
    return three_step_separation(g, "gated", a, b)


def separate_monophonic(g, a, b):
    """Exact halfspace separation under monophonic convexity (polynomial)."""
    return three_step_separation(g, "monophonic", a, b)


# ---------------------------------------------------------------------------
# 2-SAT


def two_sat_solve(inst):
    """Satisfying assignment as a list of booleans, or None.

    Implication graph + Kosaraju: with reverse-pass component ids in
    topological order, a variable is true exactly when its positive literal's
    component comes later than its negative literal's.
    """
    n = inst.nvars
    size = 2 * n

    def node(lit):
        if lit == 0 or abs(lit) > n:
            raise ValueError("literal %r out of range" % (lit,))
        return 2 * (lit - 1) if lit > 0 else 2 * (-lit - 1) + 1

    graph = [[] for _ in range(size)]
    rgraph = [[] for _ in range(size)]
    for l1, l2 in inst.clauses:
        a, b = node(l1), node(l2)
        graph[a ^ 1].append(b)
        graph[b ^ 1].append(a)
        rgraph[b].append(a ^ 1)
        rgraph[a].append(b ^ 1)

    order = []
    seen = [False] * size
    for start in range(size):
        if seen[start]:
            continue
        stack = [(start, 0)]
        seen[start] = True
        while stack:
            v, i = stack.pop()
            if i < len(graph[v]):
                stack.append((v, i + 1))
                w = graph[v][i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
            else:
                order.append(v)

    comp = [-1] * size
    label = 0
    for start in reversed(order):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = label
        while stack:
            v = stack.pop()
            for w in rgraph[v]:
                if comp[w] < 0:
                    comp[w] = label
                    stack.append(w)
        label += 1

    out = []
    for v in range(n):
        pos, neg = comp[2 * v], comp[2 * v + 1]
        if pos == neg:
            return None
        out.append(pos > neg)
    return out
