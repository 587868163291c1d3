"""Proximal sets, the orders they form, pointed maximal cliques, semispace
recognition, and the output-polynomial semispace enumeration for graphs that
are S3 and satisfy the triangle condition.

A set K is proximal at x0 when K equals its own imprint from x0 and the hull
of K avoids x0.  K <= K' means K is inside the shadow K'/x0.  Maximal
proximal sets generate the semispaces attached to x0.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import TooLarge, VertexSet, _bits, clique_masks
from .convexity import (
    hull_mask,
    imprint,
    is_convex,
    pair_hull_mask,
    vertex_shadow_mask,
)


class ModeRequiresS3(ValueError):
    """P3-mode maximality was requested on a graph known not to be S3."""


class PreconditionViolated(ValueError):
    """The fast semispace enumeration produced a non-semispace: the input
    graph is not S3 together with the triangle condition.
    """


@dataclass(frozen=True)
class PointedClique:
    """A maximal clique with a distinguished pole: k + x0 is a maximal
    clique and x0 is outside k.
    """

    x0: int
    k: VertexSet


@dataclass(frozen=True)
class Semispace:
    """A maximal convex set avoiding its attaching vertex."""

    attaching_vertex: int
    members: VertexSet


def is_proximal(g, x0, k):
    """K equals its imprint from x0 and conv(K) avoids x0."""
    if not k.mask or (k.mask >> x0) & 1:
        return False
    if imprint(g, x0, k).mask != k.mask:
        return False
    return (hull_mask(g, k.mask) >> x0) & 1 == 0


def proximal_leq(g, x0, k, kp):
    """K <= K' in the proximal order: K inside the shadow K'/x0."""
    return k.mask & ~vertex_shadow_mask(g, kp.mask, x0) == 0


def _proximal_masks(g, x0):
    """All proximal masks at x0 (exponential scan; callers guard size)."""
    verts = [v for v in range(g.n) if v != x0]
    out = []
    for r in range(1, len(verts) + 1):
        for combo in combinations(verts, r):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_proximal(g, x0, VertexSet(g.n, mask)):
                out.append(mask)
    return out


def max_proximal_sets(g, x0, adjacent_only=False, max_n=20):
    """Maximal proximal sets at x0 by full enumeration, as VertexSets.

    adjacent_only keeps only sets with a member adjacent to x0 before taking
    maxima.  Exponential; guarded.
    """
    if g.n > max_n:
        raise TooLarge("max_proximal_sets is exhaustive; n=%d > %d" % (g.n, max_n))
    masks = _proximal_masks(g, x0)
    if adjacent_only:
        masks = [m for m in masks if m & g.nbr[x0]]
    shadows = {m: vertex_shadow_mask(g, m, x0) for m in masks}
    out = []
    for m in masks:
        if not any(mp != m and m & ~shadows[mp] == 0 for mp in masks):
            out.append(VertexSet(g.n, m))
    return out


def _r_part(g, x0, y, kmask):
    """R = (y/x0) intersect K: the members a of K with y in conv(x0,a)."""
    r = 0
    for a in _bits(kmask):
        if (pair_hull_mask(g, x0, a) >> y) & 1:
            r |= 1 << a
    return r


def _exchange_targets(g, x0, mask):
    """Proximal sets one move away from mask: the imprint-of-hull climb,
    single-vertex additions, and the swap of an outside vertex y for
    R = (y/x0) intersect K followed by the imprint-of-hull climb.
    """
    n = g.n
    out = []
    base = imprint(g, x0, VertexSet(n, hull_mask(g, mask))).mask
    if base != mask and is_proximal(g, x0, VertexSet(n, base)):
        out.append(base)
    for y in range(n):
        if y == x0 or (mask >> y) & 1:
            continue
        grown = mask | (1 << y)
        if is_proximal(g, x0, VertexSet(n, grown)):
            out.append(grown)
            continue
        r = _r_part(g, x0, y, mask)
        if r == 0:
            continue
        swapped = (mask & ~r) | (1 << y)
        hswap = hull_mask(g, swapped)
        if (hswap >> x0) & 1:
            continue
        target = imprint(g, x0, VertexSet(n, hswap)).mask
        if target != mask and is_proximal(g, x0, VertexSet(n, target)):
            out.append(target)
    return out


def is_max_proximal(g, x0, k, mode="definitional"):
    """Is k maximal among proximal sets at x0 under the shadow order?

    definitional mode searches for a strictly dominating proximal set by a
    breadth-first closure over single-vertex exchanges (add a vertex, or swap
    an outside vertex y for the part of k inside y/x0 and climb to the
    imprint of the hull); the reachable space can be exponential, so it is
    size-guarded.  P3 mode uses the facet + replacement criterion, which
    certifies maximality only on S3 graphs.
    """
    if not is_proximal(g, x0, k):
        return False
    if mode == "definitional":
        if g.n > 20:
            raise TooLarge("definitional mode is exhaustive; n=%d > 20" % g.n)
        seen = {k.mask}
        queue = [k.mask]
        while queue:
            cur = queue.pop()
            for t in _exchange_targets(g, x0, cur):
                if t in seen:
                    continue
                seen.add(t)
                if t != k.mask and proximal_leq(g, x0, k, VertexSet(g.n, t)):
                    return False
                queue.append(t)
        return True
    if mode == "P3":
        if g._s3_cache is False:
            raise ModeRequiresS3("P3 maximality is a certificate only on S3 graphs")
        n = g.n
        for y in range(n):
            if y == x0 or (k.mask >> y) & 1:
                continue
            if is_proximal(g, x0, VertexSet(n, k.mask | (1 << y))):
                return False  # not a facet of the proximal complex
            r = _r_part(g, x0, y, k.mask)
            if r == 0:
                continue
            replaced = (k.mask & ~r) | (1 << y)
            if (hull_mask(g, replaced) >> x0) & 1 == 0:
                return False  # replacement criterion fails
        return True
    raise ValueError("unknown mode %r" % mode)


def pointed_maximal_cliques(g):
    """All (x0, K) with K + x0 a maximal clique; clique-lex, then pole order."""
    out = []
    for cmask in clique_masks(g):
        for x0 in _bits(cmask):
            out.append(PointedClique(x0, VertexSet(g.n, cmask & ~(1 << x0))))
    return out


def is_semispace(g, s, x0):
    """s is convex, avoids x0, and adjoining any other outside vertex pulls
    x0 into the hull (maximality among convex sets avoiding x0).
    """
    if not s.mask or (s.mask >> x0) & 1:
        return False
    if not is_convex(g, s):
        return False
    outside = ~s.mask & g.full_mask() & ~(1 << x0)
    for y in _bits(outside):
        if (hull_mask(g, s.mask | (1 << y)) >> x0) & 1 == 0:
            return False
    return True


def enumerate_semispaces_tc(g):
    """All semispaces of an S3 graph satisfying the triangle condition, in
    output-polynomial time.

    Walk the lex-sorted maximal cliques; each pointed clique (x0,K) carries a
    flag.  An unflagged (x0,K) emits the shadow S = K/x0; then every outside
    vertex y0 adjacent to S such that L = N(y0) cap S forms a maximal clique
    with y0 and L/y0 = S gets its flag set, so S is emitted exactly once.
    Every emission is verified with is_semispace; a failure means the
    precondition did not hold and raises PreconditionViolated.

    Returns a list of (Semispace, generating PointedCliques) pairs.
    """
    n = g.n
    if n == 1:
        return []
    cliques = clique_masks(g)
    index = {c: i for i, c in enumerate(cliques)}
    flagged = set()
    by_members = {}
    order = []
    for cmask in cliques:
        for x0 in _bits(cmask):
            kmask = cmask & ~(1 << x0)
            if (x0, kmask) in flagged:
                continue
            flagged.add((x0, kmask))
            smask = vertex_shadow_mask(g, kmask, x0)
            s = VertexSet(n, smask)
            if not is_semispace(g, s, x0):
                raise PreconditionViolated(
                    "shadow of (%d, %r) is not a semispace; the graph is "
                    "not S3 with the triangle condition"
                    % (x0, sorted(_bits(kmask)))
                )
            gens = []
            for y0 in range(n):
                if (smask >> y0) & 1 or g.nbr[y0] & smask == 0:
                    continue
                lmask = g.nbr[y0] & smask
                if lmask | (1 << y0) not in index:
                    continue
                if vertex_shadow_mask(g, lmask, y0) == smask:
                    flagged.add((y0, lmask))
                    gens.append(PointedClique(y0, VertexSet(n, lmask)))
            key = tuple(_bits(smask))
            if key in by_members:
                known = by_members[key][1]
                known.extend(pc for pc in gens if pc not in known)
            else:
                entry = (Semispace(x0, s), gens)
                by_members[key] = entry
                order.append(key)
    return [by_members[k] for k in order]
