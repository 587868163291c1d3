"""Shared fixtures: the named graph corpus and a seeded random-graph helper."""

import random

import pytest

from gconvex import families as fam
from gconvex.graph import build_graph


def rand_connected(n, seed, extra=0):
    """Random connected graph: a random tree plus up to `extra` chords."""
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    seen = set(edges)
    extra = min(extra, n * (n - 1) // 2 - (n - 1))
    misses = 0
    while extra > 0 and misses < 200:
        u, w = rng.randrange(n), rng.randrange(n)
        if u == w:
            misses += 1
            continue
        e = (min(u, w), max(u, w))
        if e in seen:
            misses += 1
            continue
        seen.add(e)
        edges.append(e)
        extra -= 1
    return build_graph(n, edges)


def _corpus():
    return [
        ("P5", fam.path(5)),
        ("C4", fam.cycle(4)),
        ("C5", fam.cycle(5)),
        ("C6", fam.cycle(6)),
        ("C7", fam.cycle(7)),
        ("K4", fam.complete(4)),
        ("K5", fam.complete(5)),
        ("K23", fam.forbidden(1)),
        ("star3", fam.star(3)),
        ("H2", fam.hypercube(2)),
        ("H3", fam.hypercube(3)),
        ("O3", fam.hyperoctahedron(3)),
        ("petersen", fam.petersen()),
        ("gamma", fam.gamma()),
        ("tg1", fam.triangular_grid(1)),
        ("king33", fam.king_grid(3, 3)),
        ("tree10", fam.random_tree(10, 7)),
        ("johnson52", fam.johnson(5, 2)),
        ("ico", fam.icosahedron()),
        ("half_cube4", fam.half_cube(4)),
        ("hamming33", fam.hamming([3, 3])),
        ("basisK4", fam.basis_graph_graphic(fam.complete(4))),
    ]


def _meshed_corpus():
    return [
        ("O2", fam.hyperoctahedron(2)),
        ("O3", fam.hyperoctahedron(3)),
        ("ico", fam.icosahedron()),
        ("tg1", fam.triangular_grid(1)),
        ("king33", fam.king_grid(3, 3)),
        ("K5", fam.complete(5)),
        ("gamma", fam.gamma()),
        ("basisK4", fam.basis_graph_graphic(fam.complete(4))),
    ]


@pytest.fixture(scope="session")
def corpus():
    return _corpus()


@pytest.fixture(scope="session")
def meshed_corpus():
    return _meshed_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    # graphs small enough for fully exhaustive cross-checks
    return [(name, g) for name, g in corpus if g.n <= 12]
