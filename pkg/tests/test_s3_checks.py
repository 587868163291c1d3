"""Separation axiom verdicts: S2, S3 via four methods, S4, partial cubes."""

import pytest

from gconvex import families as fam
from gconvex.axioms import (
    S3_METHODS,
    S3Verdict,
    StrategyInapplicable,
    check_convex_clique_shadows,
    check_s2,
    check_s3,
    check_s4,
    is_partial_cube,
)
from gconvex.convexity import is_convex
from gconvex.graph import VertexSet


def test_methods_constant():
    assert set(S3_METHODS) == {
        "bipartite_partial_cube", "meshed_forbidden", "tc_shadows", "bruteforce"}


def test_forbidden_graphs_fail_s3():
    for i in range(1, 6):
        g = fam.forbidden(i)
        v = check_s3(g)
        assert v.holds is False, i
    # the K_{2,3} is bipartite, the others meshed and not bipartite
    assert check_s3(fam.forbidden(1)).method == "bipartite_partial_cube"
    for i in range(2, 6):
        assert check_s3(fam.forbidden(i)).method == "meshed_forbidden"


def test_forbidden_graph_is_its_own_witness():
    for i in range(1, 6):
        g = fam.forbidden(i)
        v = check_s3(g, strategy="meshed_forbidden")
        assert v.holds is False
        pattern, embedding = v.witness
        assert pattern == i
        assert embedding == tuple(range(g.n))


def test_meshed_corpus_is_s3(meshed_corpus):
    for name, g in meshed_corpus:
        v = check_s3(g, strategy="meshed_forbidden")
        assert v.holds is True, name


def test_auto_dispatch_methods():
    assert check_s3(fam.hypercube(3)).method == "bipartite_partial_cube"
    assert check_s3(fam.gamma()).method == "meshed_forbidden"
    # C5 is neither bipartite, meshed, nor TC; brute force decides it
    v = check_s3(fam.cycle(5))
    assert v.holds is True and v.method == "bruteforce"


def test_petersen_fails_s3_with_claw_witness():
    pt = fam.petersen()
    v = check_s3(pt)
    assert v.holds is False and v.method == "bruteforce"
    x0, members = v.witness
    claw = VertexSet.of(pt.n, list(members))
    assert is_convex(pt, claw)
    assert not is_convex(pt, claw.complement())
    assert x0 not in claw


def test_dodecahedron_needs_a_bigger_guard():
    d = fam.dodecahedron()
    v = check_s3(d)
    assert v.holds is None and "guard" in v.reason
    v = check_s3(d, max_n=20)
    assert v.holds is True and v.method == "bruteforce"


def test_forced_strategy_preconditions():
    with pytest.raises(StrategyInapplicable):
        check_s3(fam.cycle(5), strategy="tc_shadows")
    with pytest.raises(StrategyInapplicable):
        check_s3(fam.cycle(6), strategy="meshed_forbidden")
    with pytest.raises(StrategyInapplicable):
        check_s3(fam.cycle(5), strategy="bipartite_partial_cube")
    with pytest.raises(ValueError):
        check_s3(fam.cycle(5), strategy="oracle_of_delphi")


def test_s2():
    assert check_s2(fam.cycle(5)).holds
    # the Petersen graph separates points but not points from convex sets
    assert check_s2(fam.petersen()).holds
    w = check_s2(fam.forbidden(1))
    assert not w.holds and w.witness == (0, 1)


def test_s4_is_pasch():
    assert check_s4(fam.hypercube(3)).holds
    w = check_s4(fam.gamma())
    assert not w.holds and w.witness == (1, 3, 7, 5, 6)


def test_partial_cube():
    assert is_partial_cube(fam.cycle(6)).holds
    assert is_partial_cube(fam.hypercube(4)).holds
    w = is_partial_cube(fam.forbidden(1))
    assert not w.holds
    w = is_partial_cube(fam.cycle(5))
    assert not w.holds and w.witness == ("not_bipartite",)


def test_convex_clique_shadows():
    assert check_convex_clique_shadows(fam.gamma()).holds
    assert check_convex_clique_shadows(fam.hypercube(3)).holds
    w = check_convex_clique_shadows(fam.forbidden(1))
    assert not w.holds
    x0, clique, shadow_members = w.witness
    assert (x0, clique, shadow_members) == (0, (1,), (1, 3, 4))


def test_verdict_is_cached_on_graph():
    pt = fam.petersen()
    assert pt._s3_cache is None
    check_s3(pt)
    assert pt._s3_cache is False
    ga = fam.gamma()
    check_s3(ga)
    assert ga._s3_cache is True


def test_s3_true_means_all_semispace_complements_convex():
    from gconvex.oracles import enumerate_semispaces_bruteforce
    for g in (fam.cycle(5), fam.gamma(), fam.icosahedron()):
        assert check_s3(g).holds is True
        for s in enumerate_semispaces_bruteforce(g):
            assert is_convex(g, s.members.complement())
