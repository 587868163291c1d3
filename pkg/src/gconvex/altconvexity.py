"""Monophonic and gated convexity: hulls, convexity tests, gates, and
Delta-closedness, plus the kind dispatch shared by separation and the
brute-force oracles.
"""

from collections import deque
from dataclasses import dataclass

from .graph import VertexSet, _bits
from .convexity import EmptyInput, hull_mask, imprint, is_convex, _induced_connected

KINDS = ("geodesic", "monophonic", "gated")


@dataclass(frozen=True)
class ConvexityKind:
    """Tag selecting one of the three convexities."""

    tag: str

    def __post_init__(self):
        if self.tag not in KINDS:
            raise ValueError("unknown convexity kind %r" % (self.tag,))


def _check_kind(kind):
    tag = kind.tag if isinstance(kind, ConvexityKind) else kind
    if tag not in KINDS:
        raise ValueError("unknown convexity kind %r" % (kind,))
    return tag


# ---------------------------------------------------------------------------
# monophonic convexity


def _outside_path(g, cur, u, v):
    """Shortest u-v path whose interior avoids cur, or None.

    BFS in the subgraph induced by (V minus cur) plus u and v; such a path
    has no chords, hence is an induced path of g.
    """
    allowed = ~cur | (1 << u) | (1 << v)
    prev = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in _bits(g.nbr[a] & allowed):
            if b in prev:
                continue
            prev[b] = a
            if b == v:
                path = [v]
                while path[-1] != u:
                    path.append(prev[path[-1]])
                return path
            queue.append(b)
    return None


def monophonic_hull(g, s):
    """Closure under induced paths.

    Loop: geodesic hull; if two non-adjacent members are joined by a path
    outside the current set, absorb a shortest such path and re-close.
    """
    if not s.mask:
        raise EmptyInput("monophonic_hull needs a non-empty set")
    cur = hull_mask(g, s.mask)
    grew = True
    while grew:
        grew = False
        mem = list(_bits(cur))
        for i, u in enumerate(mem):
            for v in mem[i + 1:]:
                if g.adjacent(u, v):
                    continue
                path = _outside_path(g, cur, u, v)
                if path is None:
                    continue
                add = cur
                for p in path:
                    add |= 1 << p
                cur = hull_mask(g, add)
                grew = True
                break
            if grew:
                break
    return VertexSet(g.n, cur)


def is_monophonic_convex(g, s):
    if not s.mask:
        return True
    return monophonic_hull(g, s).mask == s.mask


# ---------------------------------------------------------------------------
# gated convexity


def gate(g, x, h):
    """The vertex of h lying on a shortest path from x to every member of h,
    or None when no such vertex exists.
    """
    mem = list(_bits(h.mask))
    dx = g.dist[x]
    for cand in mem:
        dc = g.dist[cand]
        if all(dx[cand] + dc[y] == dx[y] for y in mem):
            return cand
    return None


def is_gated(g, s):
    """Every outside vertex has a gate in s."""
    if not s.mask:
        return False
    return all(
        gate(g, x, s) is not None for x in _bits(~s.mask & g.full_mask())
    )


def is_delta_closed(g, s):
    """Induced subgraph connected and every vertex adjacent to two distinct
    members is itself a member.
    """
    if not _induced_connected(g, s.mask):
        return False
    outside = ~s.mask & g.full_mask()
    return all((g.nbr[z] & s.mask).bit_count() < 2 for z in _bits(outside))


def _apex(g, x, u, v):
    """Furthest-from-x vertex of [x,u] and [x,v]; ties broken by min id."""
    both = g.interval_mask(x, u) & g.interval_mask(x, v)
    dx = g.dist[x]
    best, bestd = -1, -1
    for w in _bits(both):
        if dx[w] > bestd:
            best, bestd = w, dx[w]
    return best


def gated_hull(g, s):
    """Smallest gated superset.

    Loop: geodesic hull; while some outside vertex x has an imprint with two
    or more vertices, add the apex of the metric triangle it spans with the
    two smallest imprint members (the apex lies in every gated superset) and
    re-close.  Smallest-id x is processed first, for reproducible traces.
    """
    if not s.mask:
        raise EmptyInput("gated_hull needs a non-empty set")
    cur = hull_mask(g, s.mask)
    while True:
        grew = False
        for x in _bits(~cur & g.full_mask()):
            imp = imprint(g, x, VertexSet(g.n, cur))
            if len(imp) < 2:
                continue
            u, v = imp.members()[:2]
            cur = hull_mask(g, cur | (1 << _apex(g, x, u, v)))
            grew = True
            break
        if not grew:
            return VertexSet(g.n, cur)


# ---------------------------------------------------------------------------
# kind dispatch


def hull_by_kind(g, s, kind):
    tag = _check_kind(kind)
    if tag == "geodesic":
        if not s.mask:
            raise EmptyInput("convex_hull needs a non-empty set")
        return VertexSet(g.n, hull_mask(g, s.mask))
    if tag == "monophonic":
        return monophonic_hull(g, s)
    return gated_hull(g, s)


def is_convex_by_kind(g, s, kind):
    tag = _check_kind(kind)
    if tag == "geodesic":
        return is_convex(g, s)
    if tag == "monophonic":
        return is_monophonic_convex(g, s)
    return is_gated(g, s)
