"""Exhaustive oracles: every convex set, every semispace, every halfspace
split, and brute-force Helly / Radon / Caratheodory numbers.  Everything the
fast paths are validated against lives here; nothing here is clever.
"""

from itertools import combinations

from .graph import TooLarge, VertexSet, _bits
from .altconvexity import hull_by_kind, _check_kind
from .convexity import hull_mask
from .proximal import Semispace


def _hull_mask_by_kind(g, mask, tag):
    """Raw-mask hull with a per-graph memo keyed by (kind, seed mask)."""
    if mask == 0:
        return 0
    key = (tag, mask)
    got = g._aux.get(key)
    if got is None:
        if tag == "geodesic":
            got = hull_mask(g, mask)
        else:
            got = hull_by_kind(g, VertexSet(g.n, mask), tag).mask
        g._aux[key] = got
    return got


def enumerate_convex_sets(g, kind="geodesic", max_n=18):
    """Every kind-convex set exactly once, including the empty set and V.

    Walks the closure system: start from the closures of singletons and
    repeatedly close current sets extended by one vertex.  Ordered by size,
    then members.  The empty set is a member of every convexity by
    convention even for the gated family.
    """
    tag = _check_kind(kind)
    if g.n > max_n:
        raise TooLarge(
            "convex-set enumeration is exhaustive; n=%d > max_n=%d" % (g.n, max_n)
        )
    full = g.full_mask()
    seen = {0}
    stack = []
    for v in range(g.n):
        c = _hull_mask_by_kind(g, 1 << v, tag)
        if c not in seen:
            seen.add(c)
            stack.append(c)
    while stack:
        cur = stack.pop()
        for v in _bits(full & ~cur):
            c = _hull_mask_by_kind(g, cur | (1 << v), tag)
            if c not in seen:
                seen.add(c)
                stack.append(c)
    out = sorted(seen, key=lambda m: (m.bit_count(), tuple(_bits(m))))
    return [VertexSet(g.n, m) for m in out]


def enumerate_semispaces_bruteforce(g, kind="geodesic", max_n=18):
    """All (attaching vertex, members) pairs with members maximal convex
    avoiding the vertex, sorted by member list then vertex (so equal member
    sets are adjacent in the output).
    """
    sets = [s.mask for s in enumerate_convex_sets(g, kind, max_n) if s.mask]
    sets.sort(key=lambda m: -m.bit_count())
    out = []
    for x0 in range(g.n):
        bit = 1 << x0
        # descending size: a non-maximal set is inside some already-kept one
        kept = []
        for m in sets:
            if m & bit == 0 and not any(m & ~a == 0 for a in kept):
                kept.append(m)
        out.extend(Semispace(x0, VertexSet(g.n, m)) for m in kept)
    out.sort(key=lambda s: (tuple(_bits(s.members.mask)), s.attaching_vertex))
    return out


def enumerate_halfspace_masks(g, kind="geodesic", max_n=18):
    """All unordered complementary convex splits as (mask, complement) with
    the side containing vertex 0 first.
    """
    sets = {s.mask for s in enumerate_convex_sets(g, kind, max_n)}
    full = g.full_mask()
    out = []
    for m in sets:
        comp = full & ~m
        if m and comp and comp in sets and m & 1:
            out.append((m, comp))
    out.sort(key=lambda pair: (pair[0].bit_count(), tuple(_bits(pair[0]))))
    return out


# ---------------------------------------------------------------------------
# Helly / Radon / Caratheodory


def _subset_hull(g, members, tag):
    mask = 0
    for v in members:
        mask |= 1 << v
    return _hull_mask_by_kind(g, mask, tag)


def helly_number(g, kind="geodesic", max_n=16):
    """Largest size of a set A whose peeled hulls have empty intersection:
    the intersection over a in A of conv(A minus a) is empty.
    """
    tag = _check_kind(kind)
    if g.n > max_n:
        raise TooLarge("helly_number is exhaustive; n=%d > %d" % (g.n, max_n))
    full = g.full_mask()
    best = 0
    for r in range(1, g.n + 1):
        for combo in combinations(range(g.n), r):
            inter = full
            for a in combo:
                inter &= _subset_hull(g, (v for v in combo if v != a), tag)
                if inter == 0:
                    break
            if inter == 0:
                best = r
                break
    return best


def radon_number(g, kind="geodesic", max_n=16):
    """Largest size of a set with no Radon partition (no split into two
    parts with intersecting hulls).  Independence is inherited by subsets,
    so the scan stops at the first size with no independent set.
    """
    tag = _check_kind(kind)
    if g.n > max_n:
        raise TooLarge("radon_number is exhaustive; n=%d > %d" % (g.n, max_n))
    best = 0
    for r in range(1, g.n + 1):
        found = False
        for combo in combinations(range(g.n), r):
            if not _has_radon_partition(g, combo, tag):
                found = True
                break
        if found:
            best = r
        else:
            break
    return best


def _has_radon_partition(g, combo, tag):
    r = len(combo)
    for split in range(1, 1 << (r - 1)):
        part1 = [combo[i] for i in range(r) if (split >> i) & 1]
        part2 = [combo[i] for i in range(r) if not (split >> i) & 1]
        if _subset_hull(g, part1, tag) & _subset_hull(g, part2, tag):
            return True
    return False


def caratheodory_number(g, kind="geodesic", max_n=16):
    """Largest size of a set in which every element is essential: dropping
    any single element strictly shrinks the hull.
    """
    tag = _check_kind(kind)
    if g.n > max_n:
        raise TooLarge("caratheodory_number is exhaustive; n=%d > %d" % (g.n, max_n))
    best = 0
    for r in range(1, g.n + 1):
        for combo in combinations(range(g.n), r):
            whole = _subset_hull(g, combo, tag)
            if all(
                _subset_hull(g, (v for v in combo if v != a), tag) != whole
                for a in combo
            ):
                best = r
                break
    return best
