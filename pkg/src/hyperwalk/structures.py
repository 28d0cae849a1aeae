"""Graphs, hypergraphs and tessellations.

Vertices are dense integers ``0 .. N-1``; optional textual names live in a
separate label table. Edges of a hypergraph are identified by their position
in the edge list, which fixes the order of every basis built on top of them.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class StructureError(ValueError):
    """Malformed graph, hypergraph or tessellation input."""


class TessellationError(StructureError):
    """A tessellation that is not a partition, or has a non-clique polygon."""


def _check_vertex(v: int, n: int) -> int:
    if isinstance(v, bool):
        raise StructureError(f"vertex {v!r} is not an integer")
    try:
        v = operator.index(v)
    except TypeError:
        raise StructureError(f"vertex {v!r} is not an integer") from None
    if not 0 <= v < n:
        raise StructureError(f"vertex {v} out of range [0, {n})")
    return v


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0 .. vertex_count-1``.

    Undirected edges are stored as ``(min, max)`` pairs. Self-loops are
    rejected.
    """

    vertex_count: int
    edges: frozenset = frozenset()
    directed: bool = False
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = int(self.vertex_count)
        if n < 0:
            raise StructureError("vertex_count must be nonnegative")
        canon = set()
        for edge in self.edges:
            if len(edge) != 2:
                raise StructureError(f"graph edge {edge!r} is not a pair")
            i, j = (_check_vertex(x, n) for x in edge)
            if i == j:
                raise StructureError(f"self-loop at vertex {i}")
            canon.add((i, j) if self.directed else (min(i, j), max(i, j)))
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", frozenset(canon))
        if self.labels is not None:
            if len(self.labels) != n:
                raise StructureError("label table length differs from vertex_count")
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for i, j in canon:
            nbrs[i].add(j)
            nbrs[j].add(i)
        object.__setattr__(self, "_nbrs", tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], directed=False, labels=None):
        return cls(n, frozenset(tuple(e) for e in edges), directed, labels)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``; direction is ignored for directed graphs."""
        return self._nbrs[_check_vertex(v, self.vertex_count)]

    def adjacent(self, i: int, j: int) -> bool:
        return j in self.neighbors(i)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def arcs(self) -> list[tuple[int, int]]:
        """All ordered pairs ``(i, j)`` with ``i ~ j``, sorted lexicographically."""
        return [(i, j) for i in range(self.vertex_count) for j in self._nbrs[i]]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph whose edges are vertex subsets, or ordered cycles if directed.

    Undirected edges are stored as sorted tuples. Directed edges keep their
    order, which is the order of the cyclic shift along the edge. Two edges
    may coincide as sets; they are told apart by their index.
    """

    vertex_count: int
    edges: tuple[tuple[int, ...], ...] = ()
    directed: bool = False
    labels: tuple[str, ...] | None = None
    edge_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = int(self.vertex_count)
        if n < 0:
            raise StructureError("vertex_count must be nonnegative")
        out = []
        for k, edge in enumerate(self.edges):
            members = tuple(_check_vertex(v, n) for v in edge)
            if not members:
                raise StructureError(f"edge {k} is empty")
            if len(set(members)) != len(members):
                raise StructureError(f"edge {k} repeats a vertex: {members}")
            out.append(members if self.directed else tuple(sorted(members)))
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(out))
        if self.labels is not None:
            if len(self.labels) != n:
                raise StructureError("label table length differs from vertex_count")
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if self.edge_labels is not None:
            if len(self.edge_labels) != len(out):
                raise StructureError("edge label table length differs from edge count")
            object.__setattr__(self, "edge_labels", tuple(str(s) for s in self.edge_labels))
        incident: list[list[int]] = [[] for _ in range(n)]
        for k, edge in enumerate(out):
            for v in edge:
                incident[v].append(k)
        object.__setattr__(self, "_incident", tuple(tuple(x) for x in incident))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def members(self, e: int) -> tuple[int, ...]:
        """Vertices of edge ``e`` in ascending order."""
        return tuple(sorted(self.edges[e]))

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[_check_vertex(v, self.vertex_count)]

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def is_regular(self, k: int) -> bool:
        return all(len(e) == k for e in self.edges)

    def edge_name(self, e: int) -> str:
        return self.edge_labels[e] if self.edge_labels else f"e{e}"

    def to_graph(self) -> Graph:
        """The ordinary graph of a 2-regular hypergraph."""
        if not self.is_regular(2):
            raise StructureError("only 2-regular hypergraphs are ordinary graphs")
        if len({frozenset(e) for e in self.edges}) != len(self.edges):
            raise StructureError("repeated edges have no simple-graph equivalent")
        return Graph.from_edges(self.vertex_count, self.edges, self.directed, self.labels)

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(g.vertex_count, tuple(g.sorted_edges()), g.directed, g.labels)


def incidence_pairs(h: Hypergraph) -> list[tuple[int, int]]:
    """Enumerate ``(vertex, edge)`` pairs with ``vertex in edge``.

    Edge-major, vertex-ascending within an edge. This is the basis order of
    every hyperwalk.
    """
    return [(v, e) for e in range(h.edge_count) for v in h.members(e)]


@dataclass(frozen=True)
class Tessellation:
    """Partition of ``range(covered_set_size)`` into polygons."""

    polygons: tuple[tuple[int, ...], ...]
    covered_set_size: int = field(default=-1)

    def __post_init__(self):
        polys = tuple(tuple(sorted(int(v) for v in p)) for p in self.polygons)
        size = self.covered_set_size
        if size < 0:
            size = sum(len(p) for p in polys)
        object.__setattr__(self, "polygons", polys)
        object.__setattr__(self, "covered_set_size", int(size))

    def __len__(self) -> int:
        return len(self.polygons)

    def polygon_of(self) -> dict[int, int]:
        """Map from element to the index of its (first) polygon."""
        where: dict[int, int] = {}
        for k, p in enumerate(self.polygons):
            for v in p:
                where.setdefault(v, k)
        return where


def clique_check(g: Graph, subset: Iterable[int]) -> bool:
    """True iff every two distinct vertices of ``subset`` are adjacent."""
    vs = sorted({_check_vertex(v, g.vertex_count) for v in subset})
    return all(g.adjacent(i, j) for i, j in combinations(vs, 2))


@dataclass
class ValidationReport:
    valid: bool
    out_of_range: list[int] = field(default_factory=list)
    overlapping: list[int] = field(default_factory=list)
    uncovered: list[int] = field(default_factory=list)
    empty_polygons: list[int] = field(default_factory=list)
    non_clique: list[int] = field(default_factory=list)

    @property
    def violating_polygons(self) -> list[int]:
        return sorted(set(self.overlapping) | set(self.empty_polygons) | set(self.non_clique))

    def __bool__(self) -> bool:
        return self.valid

    def raise_if_invalid(self):
        if self.out_of_range:
            raise StructureError(f"polygon vertices out of range: {self.out_of_range}")
        if self.overlapping or self.uncovered or self.empty_polygons:
            raise TessellationError(
                "not a partition: "
                f"overlapping polygons {self.overlapping}, uncovered {self.uncovered}, "
                f"empty polygons {self.empty_polygons}"
            )
        if self.non_clique:
            raise TessellationError(f"polygons {self.non_clique} are not cliques")


def validate_tessellation(t: Tessellation, g: Graph | None = None) -> ValidationReport:
    """Check that ``t`` partitions the vertex set and, given ``g``, that
    every polygon is a clique or a single vertex."""
    n = t.covered_set_size
    if g is not None and g.vertex_count != n:
        raise StructureError(
            f"tessellation covers {n} elements but the graph has {g.vertex_count} vertices"
        )
    rep = ValidationReport(valid=True)
    seen: dict[int, int] = {}
    for k, poly in enumerate(t.polygons):
        if not poly:
            rep.empty_polygons.append(k)
        for v in poly:
            if not 0 <= v < n:
                rep.out_of_range.append(v)
                continue
            if v in seen:
                if seen[v] not in rep.overlapping:
                    rep.overlapping.append(seen[v])
                if k not in rep.overlapping:
                    rep.overlapping.append(k)
            else:
                seen[v] = k
    rep.uncovered = [v for v in range(n) if v not in seen]
    if g is not None and not rep.out_of_range:
        rep.non_clique = [k for k, p in enumerate(t.polygons) if len(p) > 1 and not clique_check(g, p)]
    rep.overlapping.sort()
    rep.valid = not (
        rep.out_of_range or rep.overlapping or rep.uncovered or rep.empty_polygons or rep.non_clique
    )
    return rep


def graph_from_tessellations(n: int, tessellations: Sequence[Tessellation]) -> Graph:
    """Smallest graph on which every polygon of every tessellation is a clique."""
    edges = set()
    for t in tessellations:
        for p in t.polygons:
            edges.update(combinations(p, 2))
    return Graph.from_edges(n, edges)
