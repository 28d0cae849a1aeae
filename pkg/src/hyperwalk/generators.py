"""Seeded random structures and walks for property checks."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .state import random_unitary
from .structures import Graph, Hypergraph, Tessellation, graph_from_tessellations
from .walks import (
    WalkInstance,
    build_coined_line,
    build_hyperwalk,
    build_staggered,
    build_szegedy,
    coin_groups,
    arc_basis,
    coined_walk,
)


def _rand_int(rng: np.random.Generator, lo: int, hi: int) -> int:
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    return int(rng.integers(lo, hi + 1))


def random_graph(rng: np.random.Generator, max_vertices: int, max_edges: int, min_vertices: int = 2) -> Graph:
    """Graph with at least one edge, ``<= max_vertices`` vertices, ``<= max_edges`` edges."""
    if max_vertices < 2 or max_edges < 1 or min_vertices > max_vertices:
        raise ValueError("graph bounds need at least 2 vertices and 1 edge")
    n = _rand_int(rng, max(2, min_vertices), max_vertices)
    pairs = list(combinations(range(n), 2))
    m = _rand_int(rng, 1, min(max_edges, len(pairs)))
    pick = rng.choice(len(pairs), size=m, replace=False)
    return Graph.from_edges(n, [pairs[k] for k in pick])


def random_hypergraph(
    rng: np.random.Generator, max_vertices: int, max_edges: int, directed: bool = False
) -> Hypergraph:
    if max_vertices < 1 or max_edges < 1:
        raise ValueError("hypergraph bounds need at least 1 vertex and 1 edge")
    n = _rand_int(rng, 1, max_vertices)
    m = _rand_int(rng, 1, max_edges)
    edges = []
    for _ in range(m):
        size = _rand_int(rng, 1, n)
        members = rng.choice(n, size=size, replace=False)
        edges.append(tuple(int(v) for v in members))
    return Hypergraph(n, tuple(edges), directed=directed)


def random_regular_hypergraph(rng: np.random.Generator, n: int, m: int, k: int) -> Hypergraph:
    edges = [tuple(int(v) for v in rng.choice(n, size=k, replace=False)) for _ in range(m)]
    return Hypergraph(n, tuple(edges))


def random_partition(rng: np.random.Generator, n: int) -> Tessellation:
    labels = rng.integers(0, _rand_int(rng, 1, n), size=n)
    polys = [tuple(int(v) for v in np.flatnonzero(labels == b)) for b in np.unique(labels)]
    return Tessellation(tuple(polys), n)


def clique_tessellation(rng: np.random.Generator, g: Graph) -> Tessellation:
    """Greedy tessellation whose polygons are cliques of ``g`` or singletons."""
    order = [int(v) for v in rng.permutation(g.vertex_count)]
    free = set(order)
    polys = []
    for v in order:
        if v not in free:
            continue
        poly = [v]
        free.discard(v)
        cands = [u for u in g.neighbors(v) if u in free]
        rng.shuffle(cands)
        for u in cands:
            if all(g.adjacent(u, p) for p in poly):
                poly.append(u)
                free.discard(u)
        polys.append(tuple(poly))
    return Tessellation(tuple(polys), g.vertex_count)


def random_coined(
    rng: np.random.Generator, max_vertices: int, max_edges: int, coins: int = 1, coin_axis: int | None = None
) -> WalkInstance:
    """Coined walk with Haar-random coin blocks; ``coins > 1`` gives a generalized walk."""
    g = random_graph(rng, max_vertices, max_edges)
    axis = int(rng.integers(0, 2)) if coin_axis is None else coin_axis
    basis = arc_basis(g)
    mats = []
    for _ in range(coins):
        c = np.zeros((len(basis), len(basis)), dtype=complex)
        for _, arcs in coin_groups(g, axis):
            idx = basis.indices(arcs)
            c[np.ix_(idx, idx)] = random_unitary(len(arcs), rng)
        mats.append(c)
    return coined_walk(g, mats, axis)


def random_szegedy(rng: np.random.Generator, max_vertices: int, max_edges: int) -> WalkInstance:
    g = random_graph(rng, max_vertices, max_edges)
    amps = {}
    for v in range(g.vertex_count):
        d = g.degree(v)
        if d:
            z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            amps[v] = z / np.linalg.norm(z)
    return build_szegedy(g, amps)


def random_staggered(
    rng: np.random.Generator, max_vertices: int, max_tessellations: int, min_vertices: int = 1
) -> WalkInstance:
    """Random partitions, the graph they induce, and Haar-random polygon unitaries."""
    if max_vertices < 1 or max_tessellations < 1:
        raise ValueError("staggered bounds need at least 1 vertex and 1 tessellation")
    n = _rand_int(rng, min_vertices, max_vertices)
    k = _rand_int(rng, 1, max_tessellations)
    tess = [random_partition(rng, n) for _ in range(k)]
    g = graph_from_tessellations(n, tess)
    unitaries = [[random_unitary(len(p), rng) for p in t.polygons] for t in tess]
    return build_staggered(g, tess, unitaries=unitaries)


def random_hyperwalk(
    rng: np.random.Generator, max_vertices: int, max_edges: int, schedule: int = 1
) -> WalkInstance:
    """Hyperwalk with Haar-random coins and shifts; ``schedule`` steps per cycle."""
    h = random_hypergraph(rng, max_vertices, max_edges)
    stages = []
    for _ in range(schedule):
        coins = {v: random_unitary(h.degree(v), rng) for v in range(h.vertex_count) if h.degree(v)}
        shifts = {e: random_unitary(len(h.edges[e]), rng) for e in range(h.edge_count)}
        stages.append((coins, shifts))
    return build_hyperwalk(h, schedule=stages)


def random_line(rng: np.random.Generator, max_positions: int) -> WalkInstance:
    return build_coined_line(random_unitary(2, rng), _rand_int(rng, 2, max_positions))


def example_hypergraph() -> Hypergraph:
    """Four vertices A..D with edges a = {A, B, C}, b = {A, B}, c = {C, D}."""
    return Hypergraph(4, ((0, 1, 2), (0, 1), (2, 3)), labels=("A", "B", "C", "D"), edge_labels=("a", "b", "c"))
