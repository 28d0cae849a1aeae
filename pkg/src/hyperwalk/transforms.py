"""Cross-model constructions.

Each transform takes a source :class:`~hyperwalk.walks.WalkInstance` and
returns a :class:`TransformResult` holding the target walk together with

* ``state_map``: source basis label -> target basis label (an injection, so
  it carries normalised states to normalised states),
* ``measurements``: target basis index -> source vertex, indexed by the
  target step count modulo their number,
* ``step_map``: ``n_target = a * n_source + b``.

The source distribution after ``n`` steps equals the target distribution
after ``step_map(n)`` steps, measured through ``measurements``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Callable, Mapping, Sequence

import numpy as np

from .state import BasisMap, MeasurementMap, StateVector, get_tolerance, measure_vertices
from .structures import Graph, Hypergraph, Tessellation, graph_from_tessellations, incidence_pairs
from .walks import (
    WalkError,
    WalkInstance,
    build_szegedy,
    coined_walk,
    hyperwalk_from_matrices,
    staggered_walk,
    swap_shift,
)


class TransformError(ValueError):
    """The transform does not apply to the given walk."""


@dataclass(frozen=True)
class StepMap:
    scale: int = 1
    offset: int = 0

    def __post_init__(self):
        if self.scale < 1 or self.offset < 0:
            raise ValueError("a step map must be strictly increasing and nonnegative")

    def __call__(self, n: int) -> int:
        return self.scale * n + self.offset

    def then(self, other: "StepMap") -> "StepMap":
        """``other`` applied after ``self``."""
        return StepMap(other.scale * self.scale, other.scale * self.offset + other.offset)

    @property
    def is_identity(self) -> bool:
        return self.scale == 1 and self.offset == 0

    def to_dict(self) -> dict:
        return {"a": self.scale, "b": self.offset}


@dataclass(frozen=True)
class SizeReport:
    model: str
    vertices: int
    basis_size: int
    operators: int

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "vertices": self.vertices,
            "basis_size": self.basis_size,
            "operators": self.operators,
        }


def size_of(w: WalkInstance) -> SizeReport:
    """Vertex count of the underlying structure, basis size, schedule length."""
    if w.model == "szegedy":
        vertices = 2 * w.structure.vertex_count
    elif w.model == "coined-line":
        vertices = w.params["positions"]
    else:
        vertices = w.structure.vertex_count
    return SizeReport(w.model, vertices, w.dim, w.cycle_length)


@dataclass(frozen=True, eq=False)
class TransformResult:
    name: str
    source_basis: BasisMap
    source_vertex_count: int
    target: WalkInstance
    state_map: Mapping
    measurements: tuple[MeasurementMap, ...]
    step_map: StepMap
    vertex_map: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "state_map", MappingProxyType(dict(self.state_map)))
        object.__setattr__(self, "vertex_map", MappingProxyType(dict(self.vertex_map)))
        object.__setattr__(self, "measurements", tuple(self.measurements))
        images = list(self.state_map.values())
        if len(set(images)) != len(images):
            raise TransformError("state map is not injective")

    @property
    def size(self) -> SizeReport:
        return size_of(self.target)

    def map_state(self, psi: StateVector) -> StateVector:
        """Carry a source state to the target basis."""
        if psi.basis != self.source_basis:
            raise TransformError("state is not on the transform's source basis")
        amps = np.zeros(self.target.dim, dtype=complex)
        tb = self.target.basis
        for k, lab in enumerate(psi.basis):
            a = psi.amplitudes[k]
            if a == 0:
                continue
            if lab not in self.state_map:
                raise TransformError(f"state map is undefined on basis label {lab!r}")
            amps[tb.index(self.state_map[lab])] = a
        return StateVector(amps, tb)

    def measurement(self, target_step: int) -> MeasurementMap:
        return self.measurements[target_step % len(self.measurements)]

    def measure(self, state: StateVector, target_step: int) -> np.ndarray:
        return measure_vertices(state, self.measurement(target_step))


def _result(name, source: WalkInstance, target, state_map, measurements, step_map, vertex_map=None):
    return TransformResult(
        name,
        source.basis,
        source.vertex_count,
        target,
        state_map,
        tuple(measurements),
        step_map,
        vertex_map or {},
    )


def _require(w: WalkInstance, model: str, name: str):
    if w.model != model:
        raise TransformError(f"{name} needs a {model} walk, got {w.model}")


def identity_transform(w: WalkInstance) -> TransformResult:
    return _result(
        "identity",
        w,
        w,
        {lab: lab for lab in w.basis},
        w.measurements,
        StepMap(),
        {v: v for v in range(w.vertex_count)},
    )


# ----------------------------------------------------------- Szegedy <-> coined


def szegedy_from_coined(w: WalkInstance) -> TransformResult:
    """Szegedy walk with ``U_1 = C`` and ``U_2 = S C S`` on the same arc labels."""
    _require(w, "scattering-coined", "szegedy_from_coined")
    if w.cycle_length != 1:
        raise TransformError("szegedy_from_coined needs a single (time-independent) coin")
    c = w.params["coins"][0].matrix
    s = w.params["shift"].matrix
    target = build_szegedy(w.structure, reflections=(c, s @ c @ s), axis=w.params["coin_axis"])
    n = w.structure.vertex_count
    return _result(
        "szegedy_from_coined",
        w,
        target,
        {lab: lab for lab in w.basis},
        target.measurements,
        StepMap(1, 0),
        {v: v for v in range(n)},
    )


def coined_from_szegedy(w: WalkInstance) -> TransformResult:
    """Coined walk with ``C = U_1``.

    When ``U_2 = S U_1 S`` (every Szegedy walk built from amplitudes) the
    result has a single coin. Otherwise it is a generalized coined walk with
    coins ``U_1, S U_2 S``, which reproduces the same alternation.
    """
    _require(w, "szegedy", "coined_from_szegedy")
    axis = w.params["axis"]
    s = swap_shift(w.basis).matrix
    u1 = w.stages[0].operator.matrix
    u2 = w.stages[1].operator.matrix
    coins = [u1]
    if np.max(np.abs(u2 - s @ u1 @ s)) > get_tolerance():
        coins.append(s @ u2 @ s)
    try:
        target = coined_walk(w.structure, coins, axis)
    except WalkError as exc:
        raise TransformError(f"U_1 is not a coin on the graph: {exc}") from None
    n = w.structure.vertex_count
    return _result(
        "coined_from_szegedy",
        w,
        target,
        {lab: lab for lab in w.basis},
        target.measurements,
        StepMap(1, 0),
        {v: v for v in range(n)},
    )


# ------------------------------------------------------------ hyperwalk -> coined


def coined_from_hyperwalk(w: WalkInstance) -> TransformResult:
    """Coined walk on the vertex/edge incidence (bipartite) graph.

    Edge ``e`` becomes vertex ``N + e``. The coin is ``U^V`` on arcs
    ``|v, e>`` and ``U^E`` on arcs ``|e, v>``, so ``(S C)^2`` reproduces one
    hyperwalk step. A generalized hyperwalk gives the coin schedule
    ``C_1, C_1, C_2, C_2, ...``.
    """
    _require(w, "hyperwalk", "coined_from_hyperwalk")
    h: Hypergraph = w.structure
    n = h.vertex_count
    g = Graph.from_edges(
        n + h.edge_count,
        [(v, n + e) for v, e in incidence_pairs(h)],
        labels=[h.labels[v] if h.labels else str(v) for v in range(n)]
        + [h.edge_name(e) for e in range(h.edge_count)],
    )
    tb = BasisMap(g.arcs())
    fwd = tb.indices([(v, n + e) for v, e in w.basis])
    back = tb.indices([(n + e, v) for v, e in w.basis])
    coins = []
    for st in w.stages:
        uv, ue = (f.matrix for f in st.factors)
        c = np.zeros((len(tb), len(tb)), dtype=complex)
        c[np.ix_(fwd, fwd)] = uv
        c[np.ix_(back, back)] = ue
        coins += [c, c]
    target = coined_walk(g, coins, 0)
    meas = MeasurementMap.from_labels(tb, lambda a: a[0] if a[0] < n else None, n)
    return _result(
        "coined_from_hyperwalk",
        w,
        target,
        {(v, e): (v, n + e) for v, e in w.basis},
        (meas,),
        StepMap(2, 0),
        {v: v for v in range(n)},
    )


# --------------------------------------------------- hyperwalk -> staggered


def hyperwalk_tessellations(h: Hypergraph) -> tuple[Tessellation, Tessellation]:
    """Group incidence-pair indices by vertex and by edge."""
    pairs = incidence_pairs(h)
    index = {p: k for k, p in enumerate(pairs)}
    by_vertex = [
        tuple(index[(v, e)] for e in h.incident_edges(v)) for v in range(h.vertex_count) if h.degree(v)
    ]
    by_edge = [tuple(index[(v, e)] for v in h.members(e)) for e in range(h.edge_count)]
    return Tessellation(tuple(by_vertex), len(pairs)), Tessellation(tuple(by_edge), len(pairs))


def staggered_from_generalized_hyperwalk(w: WalkInstance) -> TransformResult:
    """Staggered walk whose vertices are the incidence pairs.

    Every hyperwalk step ``U^E_k U^V_k`` becomes two staggered stages, one
    over the vertex-grouping tessellation and one over the edge-grouping one.
    """
    _require(w, "hyperwalk", "staggered_from_generalized_hyperwalk")
    h: Hypergraph = w.structure
    pairs = list(w.basis)
    tv, te = hyperwalk_tessellations(h)
    g = graph_from_tessellations(len(pairs), [tv, te])
    g = Graph(g.vertex_count, g.edges, labels=[f"({v},{h.edge_name(e)})" for v, e in pairs])
    tess, mats = [], []
    for st in w.stages:
        uv, ue = st.factors
        tess += [tv, te]
        mats += [uv.matrix, ue.matrix]
    target = staggered_walk(g, tess, mats)
    meas = MeasurementMap(np.array([v for v, _ in pairs], dtype=int), h.vertex_count)
    return _result(
        "staggered_from_generalized_hyperwalk",
        w,
        target,
        {p: k for k, p in enumerate(pairs)},
        (meas,),
        StepMap(2, 0),
    )


# ---------------------------------------------------- staggered -> coined


def generalized_coined_from_staggered(w: WalkInstance) -> TransformResult:
    """Generalized coined walk with one extra vertex per polygon.

    Vertex ``t_{i,j}`` (polygon ``j`` of tessellation ``i``) is joined to
    the members of that polygon. The coin schedule is
    ``C_0, C, C_1, C, ..., C_{k-1}, C`` where ``C_i`` applies ``U_{i+1}`` on
    the arcs leaving ``t_i`` and ``C`` moves ``|v, t_i>`` to ``|v, t_{i+1}>``.
    Two coined steps reproduce one staggered stage.
    """
    _require(w, "staggered", "generalized_coined_from_staggered")
    tess: Sequence[Tessellation] = w.params["tessellations"]
    k = len(tess)
    if k != w.cycle_length:
        raise TransformError("staggered walk has a tessellation/stage count mismatch")
    n = w.structure.vertex_count
    offsets = np.cumsum([0] + [len(t) for t in tess])
    owner = []
    for i, t in enumerate(tess):
        where = t.polygon_of()
        if sorted(where) != list(range(n)) or sum(len(p) for p in t.polygons) != n:
            raise TransformError(f"tessellation {i} is not a partition of the vertex set")
        owner.append([n + int(offsets[i]) + where[v] for v in range(n)])
    names = [w.structure.name(v) for v in range(n)]
    names += [f"t{i},{j}" for i, t in enumerate(tess) for j in range(len(t))]
    g = Graph.from_edges(
        n + int(offsets[-1]),
        [(v, owner[i][v]) for i in range(k) for v in range(n)],
        labels=names,
    )
    tb = BasisMap(g.arcs())
    dim = len(tb)
    base = np.eye(dim, dtype=complex)
    hop = np.eye(dim, dtype=complex)
    for i in range(k):
        for v in range(n):
            a, b = tb.index((v, owner[i][v])), tb.index((v, owner[(i + 1) % k][v]))
            hop[a, a] = 0.0
            hop[b, a] = 1.0
    coins = []
    for i in range(k):
        u = w.stages[i].operator.matrix
        ci = base.copy()
        idx = [tb.index((owner[i][v], v)) for v in range(n)]
        ci[np.ix_(idx, idx)] = u
        coins += [ci, hop]
    try:
        target = coined_walk(g, coins, 0)
    except WalkError as exc:
        raise TransformError(f"stage unitaries do not respect the polygons: {exc}") from None
    meas = MeasurementMap.from_labels(tb, lambda a: a[1] if a[0] >= n else None, n)
    return _result(
        "generalized_coined_from_staggered",
        w,
        target,
        {v: (owner[0][v], v) for v in range(n)},
        (meas,),
        StepMap(2, 0),
        {v: v for v in range(n)},
    )


# ---------------------------------------- generalized coined -> coined


def _first_axis(w: WalkInstance) -> tuple[WalkInstance, dict]:
    """Rewrite a coined walk so its coins act on arcs grouped by the first index.

    Conjugating every step by ``S`` turns ``S C`` into ``S (S C S)``; the
    state is relabelled ``(i, j) -> (j, i)``.
    """
    if w.params["coin_axis"] == 0:
        return w, {lab: lab for lab in w.basis}
    s = w.params["shift"].matrix
    coins = [s @ c.matrix @ s for c in w.params["coins"]]
    return coined_walk(w.structure, coins, 0), {(i, j): (j, i) for i, j in w.basis}


def coined_from_generalized_coined(w: WalkInstance) -> TransformResult:
    """Static coined walk on ``k`` layered copies of the graph.

    Vertex ``v`` in layer ``i`` is ``i * N + v`` and is joined to ``w`` in
    layer ``i + 1 (mod k)`` whenever ``v ~ w``. Amplitude arriving at layer
    ``i`` from layer ``i - 1`` is mixed by ``C_i`` and sent on to layer
    ``i + 1``; the reverse arcs are mapped back by a fixed permutation so the
    coin stays unitary. For ``k = 1`` the walk is returned unchanged.
    """
    _require(w, "scattering-coined", "coined_from_generalized_coined")
    if w.cycle_length == 1:
        res = identity_transform(w)
        return replace(res, name="coined_from_generalized_coined")
    norm, relabel = _first_axis(w)
    g: Graph = w.structure
    n, k = g.vertex_count, w.cycle_length

    def lay(v, i):
        return (i % k) * n + v

    edges = {(lay(v, i), lay(u, i + 1)) for v, u in g.arcs() for i in range(k)}
    names = [f"{g.name(v)}^{i}" for i in range(k) for v in range(n)]
    big = Graph.from_edges(k * n, edges, labels=names)
    tb = BasisMap(big.arcs())
    sb = norm.basis
    c = np.zeros((len(tb), len(tb)), dtype=complex)
    for i in range(k):
        ci = norm.params["coins"][i].matrix
        for v in range(n):
            nb = g.neighbors(v)
            src_in = [sb.index((v, u)) for u in nb]
            t_in = [tb.index((lay(v, i), lay(u, i - 1))) for u in nb]
            t_out = [tb.index((lay(v, i), lay(u, i + 1))) for u in nb]
            c[np.ix_(t_out, t_in)] = ci[np.ix_(src_in, src_in)]
            if k > 2:
                c[t_in, t_out] = 1.0
    target = coined_walk(big, [c], 0)
    meas = MeasurementMap.from_labels(
        tb, lambda a: a[0] % n if (a[1] // n) == (a[0] // n - 1) % k else None, n
    )
    state_map = {}
    for lab in w.basis:
        v, u = relabel[lab]
        state_map[lab] = (lay(v, 0), lay(u, k - 1))
    return _result(
        "coined_from_generalized_coined",
        w,
        target,
        state_map,
        (meas,),
        StepMap(1, 0),
        {v: v for v in range(n)},
    )


# ---------------------------------------- staggered -> generalized hyperwalk


def generalized_hyperwalk_from_staggered(w: WalkInstance) -> TransformResult:
    """Hyperwalk with one hyperedge holding every vertex.

    All coins are 1x1 identities and the shift at step ``k`` is ``U_k``,
    so the basis and step count are unchanged.
    """
    _require(w, "staggered", "generalized_hyperwalk_from_staggered")
    n = w.structure.vertex_count
    if n == 0:
        raise TransformError("cannot build a hyperedge on an empty vertex set")
    h = Hypergraph(n, (tuple(range(n)),), labels=w.structure.labels)
    eye = np.eye(n, dtype=complex)
    target = hyperwalk_from_matrices(h, [(eye, st.operator.matrix) for st in w.stages])
    return _result(
        "generalized_hyperwalk_from_staggered",
        w,
        target,
        {v: (v, 0) for v in range(n)},
        target.measurements,
        StepMap(1, 0),
        {v: v for v in range(n)},
    )


TRANSFORMS: dict[str, Callable[[WalkInstance], TransformResult]] = {
    "identity": identity_transform,
    "szegedy_from_coined": szegedy_from_coined,
    "coined_from_szegedy": coined_from_szegedy,
    "coined_from_hyperwalk": coined_from_hyperwalk,
    "staggered_from_generalized_hyperwalk": staggered_from_generalized_hyperwalk,
    "generalized_coined_from_staggered": generalized_coined_from_staggered,
    "coined_from_generalized_coined": coined_from_generalized_coined,
    "generalized_hyperwalk_from_staggered": generalized_hyperwalk_from_staggered,
}


def transform(w: WalkInstance, name: str) -> TransformResult:
    try:
        fn = TRANSFORMS[name]
    except KeyError:
        raise TransformError(f"unknown transform {name!r}; choose from {sorted(TRANSFORMS)}") from None
    return fn(w)


# ---------------------------------------------------------- size accounting


@dataclass(frozen=True)
class _Shape:
    """What the counting formulas need to know about a walk, without matrices."""

    model: str
    n: int  # vertices of the underlying graph / hypergraph
    basis: int
    ops: int
    polygons: tuple[int, ...] = ()
    edges: int = 0
    active: int = 0
    symmetric: bool = True

    def report(self) -> SizeReport:
        vertices = 2 * self.n if self.model == "szegedy" else self.n
        return SizeReport(self.model, vertices, self.basis, self.ops)


def _shape(w: WalkInstance) -> _Shape:
    m = w.model
    if m == "hyperwalk":
        h = w.structure
        active = sum(1 for v in range(h.vertex_count) if h.degree(v))
        return _Shape(m, h.vertex_count, w.dim, w.cycle_length, edges=h.edge_count, active=active)
    if m == "staggered":
        return _Shape(m, w.structure.vertex_count, w.dim, w.cycle_length, tuple(len(t) for t in w.params["tessellations"]))
    if m == "scattering-coined":
        return _Shape(m, w.structure.vertex_count, w.dim, w.cycle_length)
    if m == "szegedy":
        s = swap_shift(w.basis).matrix
        u1, u2 = (st.operator.matrix for st in w.stages)
        sym = bool(np.max(np.abs(u2 - s @ u1 @ s)) <= get_tolerance()) if w.dim else True
        return _Shape(m, w.structure.vertex_count, w.dim, 2, symmetric=sym)
    return _Shape(m, size_of(w).vertices, w.dim, w.cycle_length)


def _need(sh: _Shape, model: str, name: str):
    if sh.model != model:
        raise TransformError(f"{name} cannot follow a {sh.model} walk")


def _count(sh: _Shape, name: str) -> _Shape:
    if name == "identity":
        return sh
    if name == "staggered_from_generalized_hyperwalk":
        _need(sh, "hyperwalk", name)
        return _Shape("staggered", sh.basis, sh.basis, 2 * sh.ops, (sh.active, sh.edges) * sh.ops)
    if name == "generalized_coined_from_staggered":
        _need(sh, "staggered", name)
        k = len(sh.polygons)
        return _Shape("scattering-coined", sh.n + sum(sh.polygons), 2 * k * sh.n, 2 * k)
    if name == "coined_from_generalized_coined":
        _need(sh, "scattering-coined", name)
        k = sh.ops
        if k == 1:
            return sh
        return _Shape("scattering-coined", k * sh.n, (1 if k == 2 else 2) * k * sh.basis, 1)
    if name == "szegedy_from_coined":
        _need(sh, "scattering-coined", name)
        if sh.ops != 1:
            raise TransformError("szegedy_from_coined needs a single coin")
        return _Shape("szegedy", sh.n, sh.basis, 2)
    if name == "coined_from_szegedy":
        _need(sh, "szegedy", name)
        return _Shape("scattering-coined", sh.n, sh.basis, 1 if sh.symmetric else 2)
    if name == "coined_from_hyperwalk":
        _need(sh, "hyperwalk", name)
        return _Shape("scattering-coined", sh.n + sh.edges, 2 * sh.basis, 2 * sh.ops)
    if name == "generalized_hyperwalk_from_staggered":
        _need(sh, "staggered", name)
        return _Shape("hyperwalk", sh.n, sh.n, sh.ops, edges=1, active=sh.n)
    raise TransformError(f"unknown transform {name!r}")


def transform_chain_size(source: WalkInstance, chain: Sequence[str]) -> list[SizeReport]:
    """Sizes after each link of ``chain``, from counting formulas only.

    The first entry describes the source itself.
    """
    sh = _shape(source)
    out = [sh.report()]
    for name in chain:
        sh = _count(sh, name)
        out.append(sh.report())
    return out


def apply_chain(source: WalkInstance, chain: Sequence[str]) -> list[TransformResult]:
    """Materialise every link of ``chain``; each result feeds the next."""
    results = []
    w = source
    for name in chain:
        r = transform(w, name)
        results.append(r)
        w = r.target
    return results


HYPERWALK_TO_SZEGEDY = (
    "staggered_from_generalized_hyperwalk",
    "generalized_coined_from_staggered",
    "coined_from_generalized_coined",
    "szegedy_from_coined",
)
