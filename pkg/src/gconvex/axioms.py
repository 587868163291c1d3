"""Separation-axiom verdicts.

S2 (point/point separation, by halfspace enumeration), S3 (point/convex-set
separation, with four methods: Djokovic partial-cube test for bipartite
graphs, forbidden induced subgraphs for meshed graphs, pointed-clique shadow
convexity under the triangle condition, and semispace brute force), and the
S4 verdict, which for geodesic convexity is exactly the Pasch axiom.
"""

from dataclasses import dataclass

from .graph import (
    ConditionWitness,
    VertexSet,
    _bits,
    check_metric_condition,
    find_induced,
    is_bipartite,
    is_meshed,
)
from .convexity import (
    check_pasch,
    extended_shadow,
    is_convex,
    vertex_shadow_mask,
    w_partition,
)
from .proximal import pointed_maximal_cliques
from .oracles import enumerate_semispaces_bruteforce
from .families import forbidden
from .separation import StrategyInapplicable, enumerate_halfspaces

S3_METHODS = ("bipartite_partial_cube", "meshed_forbidden", "tc_shadows", "bruteforce")


@dataclass(frozen=True)
class S3Verdict:
    """S3 answer: holds is True, False, or None when undecided.

    The witness replays the failure: a non-convex edge side for the partial
    cube test, a forbidden-pattern embedding, a pointed clique with a
    non-convex (extended) shadow, or a semispace with non-convex complement.
    """

    holds: bool
    method: str
    witness: tuple = None
    reason: str = None


def _s3_bipartite(g):
    for u, v in g.edges:
        wu, wv, _ = w_partition(g, u, v)
        for side in (wu, wv):
            if not is_convex(g, side):
                return S3Verdict(
                    False, "bipartite_partial_cube", (u, v, tuple(side.members()))
                )
    return S3Verdict(True, "bipartite_partial_cube")


def _s3_meshed(g):
    for i in range(1, 6):
        emb = find_induced(g, forbidden(i))
        if emb is not None:
            return S3Verdict(False, "meshed_forbidden", (i, emb))
    return S3Verdict(True, "meshed_forbidden")


def _s3_tc(g):
    for pc in pointed_maximal_cliques(g):
        smask = vertex_shadow_mask(g, pc.k.mask, pc.x0)
        if not is_convex(g, VertexSet(g.n, smask)):
            return S3Verdict(
                False,
                "tc_shadows",
                (pc.x0, tuple(pc.k.members()), "shadow",
                 tuple(_bits(smask))),
            )
        ext = extended_shadow(g, pc.x0, pc.k)
        if not is_convex(g, ext):
            return S3Verdict(
                False,
                "tc_shadows",
                (pc.x0, tuple(pc.k.members()), "extended",
                 tuple(ext.members())),
            )
    return S3Verdict(True, "tc_shadows")


def _s3_bruteforce(g, max_n):
    if g.n > max_n:
        return S3Verdict(
            None,
            "bruteforce",
            reason="n=%d exceeds the brute-force guard %d" % (g.n, max_n),
        )
    full = g.full_mask()
    for ss in enumerate_semispaces_bruteforce(g, max_n=max_n):
        comp = VertexSet(g.n, full & ~ss.members.mask)
        if not is_convex(g, comp):
            return S3Verdict(
                False,
                "bruteforce",
                (ss.attaching_vertex, tuple(ss.members.members())),
            )
    return S3Verdict(True, "bruteforce")


def check_s3(g, strategy="auto", max_n=14):
    """Can every vertex be separated from every convex set avoiding it?

    auto dispatches: bipartite graphs get the partial-cube test, meshed ones
    the forbidden-subgraph scan, triangle-condition ones the pointed-clique
    shadow test, everything else semispace brute force under the guard.
    Forcing a method raises StrategyInapplicable when its precondition fails.
    A definite answer is cached on the graph for later certificate use.
    """
    if strategy == "auto":
        if is_bipartite(g):
            verdict = _s3_bipartite(g)
        elif is_meshed(g):
            verdict = _s3_meshed(g)
        elif check_metric_condition(g, "tc"):
            verdict = _s3_tc(g)
        else:
            verdict = _s3_bruteforce(g, max_n)
    elif strategy == "bipartite_partial_cube":
        if not is_bipartite(g):
            raise StrategyInapplicable("partial-cube test needs a bipartite graph")
        verdict = _s3_bipartite(g)
    elif strategy == "meshed_forbidden":
        if not is_meshed(g):
            raise StrategyInapplicable("forbidden-subgraph test needs a meshed graph")
        verdict = _s3_meshed(g)
    elif strategy == "tc_shadows":
        if not check_metric_condition(g, "tc"):
            raise StrategyInapplicable(
                "shadow test needs the triangle condition"
            )
        verdict = _s3_tc(g)
    elif strategy == "bruteforce":
        verdict = _s3_bruteforce(g, max_n)
    else:
        raise ValueError("unknown strategy %r" % strategy)
    if verdict.holds is not None:
        g._s3_cache = verdict.holds
    return verdict


def check_s2(g, max_n=18):
    """Can every vertex pair be separated by complementary halfspaces?

    Decided exactly by halfspace enumeration; the witness is the first
    unseparable pair.
    """
    pairs = enumerate_halfspaces(g, "geodesic", "bruteforce", max_n=max_n)
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if not any(
                ((p.h1.mask >> u) & 1 and (p.h2.mask >> v) & 1)
                or ((p.h2.mask >> u) & 1 and (p.h1.mask >> v) & 1)
                for p in pairs
            ):
                return ConditionWitness("S2", (u, v))
    return ConditionWitness("S2")


def check_s4(g):
    """S4 for geodesic convexity is the Pasch axiom."""
    pasch = check_pasch(g)
    return ConditionWitness("S4", pasch.witness)


def check_convex_clique_shadows(g):
    """Is the shadow K/x0 convex for every pointed maximal clique (x0, K)?"""
    for pc in pointed_maximal_cliques(g):
        smask = vertex_shadow_mask(g, pc.k.mask, pc.x0)
        if not is_convex(g, VertexSet(g.n, smask)):
            return ConditionWitness(
                "convex_clique_shadows",
                (pc.x0, tuple(pc.k.members()), tuple(_bits(smask))),
            )
    return ConditionWitness("convex_clique_shadows")


def is_partial_cube(g):
    """Djokovic criterion: bipartite and every edge's distance partition is
    a pair of convex complementary halves.
    """
    if not is_bipartite(g):
        return ConditionWitness("partial_cube", ("not_bipartite",))
    verdict = _s3_bipartite(g)
    if verdict.holds:
        return ConditionWitness("partial_cube")
    return ConditionWitness("partial_cube", verdict.witness)
