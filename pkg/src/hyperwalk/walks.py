"""Evolution operators for the five walk models and a multi-step runner.

Every builder returns a :class:`WalkInstance`: a basis, a cyclic schedule of
step operators and the model's native vertex measurement. One call to the
schedule advances the walk by one step; generalized (time-dependent) models
simply have more than one entry in the schedule.

Basis labels per model:

* coined line: ``(c, n)`` with coin state ``c`` and position ``n``
* scattering / coined on a graph: arcs ``(i, j)`` with ``i ~ j``
* Szegedy: ``(x, y)`` standing for ``|x, y'>``
* staggered: the vertices themselves
* hyperwalk: incidence pairs ``(v, e)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping, Sequence

import numpy as np

from . import operators as ops
from .state import (
    BasisMap,
    BasisMismatch,
    MeasurementMap,
    NormalizationError,
    StateVector,
    UnitarityError,
    UnitaryOperator,
    apply,
    get_tolerance,
    measure_vertices,
    unitarity_deviation,
)
from .structures import (
    Graph,
    Hypergraph,
    StructureError,
    Tessellation,
    incidence_pairs,
    validate_tessellation,
)

MODELS = ("coined-line", "scattering-coined", "szegedy", "staggered", "hyperwalk")


class WalkError(ValueError):
    """Inconsistent walk parameters (dimensions, normalisation, unitarity)."""


@dataclass(frozen=True, eq=False)
class Stage:
    """One entry of the schedule.

    ``factors`` are the operators whose product (first factor applied first)
    is ``operator``, e.g. ``(C, S)`` for a coined step ``S C``.
    """

    operator: UnitaryOperator
    factors: tuple[UnitaryOperator, ...] = ()


@dataclass(frozen=True, eq=False)
class WalkInstance:
    model: str
    structure: Graph | Hypergraph | None
    basis: BasisMap
    stages: tuple[Stage, ...]
    measurements: tuple[MeasurementMap, ...]
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.stages:
            raise WalkError("a walk needs at least one stage")
        for st in self.stages:
            for op in (st.operator, *st.factors):
                if op.basis != self.basis:
                    raise BasisMismatch("all stage operators must act on the walk basis")
        if not self.measurements:
            raise WalkError("a walk needs a measurement")
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "measurements", tuple(self.measurements))
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @property
    def cycle_length(self) -> int:
        return len(self.stages)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        """Number of vertices the native measurement reports on."""
        return self.measurements[0].vertex_count

    def step_operator(self, step: int) -> UnitaryOperator:
        """Operator taking the state after ``step`` steps to the next one."""
        return self.stages[step % self.cycle_length].operator

    def measurement(self, step: int) -> MeasurementMap:
        return self.measurements[step % len(self.measurements)]

    def distribution(self, state: StateVector, step: int) -> np.ndarray:
        return measure_vertices(state, self.measurement(step))

    def cycle_operator(self) -> np.ndarray:
        """Product of one full pass over the schedule."""
        m = np.eye(self.dim, dtype=complex)
        for st in self.stages:
            m = st.operator.matrix @ m
        return m

    def basis_state(self, label) -> StateVector:
        return StateVector.basis_state(self.basis, label)

    def __repr__(self) -> str:
        return f"WalkInstance(model={self.model!r}, dim={self.dim}, cycle_length={self.cycle_length})"


def _certify_block(m: np.ndarray, what: str) -> np.ndarray:
    dev = unitarity_deviation(m)
    if not dev <= get_tolerance():
        raise UnitarityError(f"{what} is not unitary (max deviation {dev:.3e})", dev)
    return m


def _assemble(basis: BasisMap, groups: Sequence[Sequence], blocks: Sequence[np.ndarray]) -> UnitaryOperator:
    """Block-diagonal operator with ``blocks[k]`` acting on the labels ``groups[k]``."""
    n = len(basis)
    m = np.zeros((n, n), dtype=complex)
    idx_blocks = []
    covered = np.zeros(n, dtype=bool)
    for labels, b in zip(groups, blocks):
        idx = basis.indices(labels)
        m[np.ix_(idx, idx)] = b
        covered[idx] = True
        idx_blocks.append(idx)
    for k in np.flatnonzero(~covered):
        m[k, k] = 1.0
    return UnitaryOperator(m, basis, idx_blocks)


def _lookup(spec, keys: Sequence, what: str):
    if isinstance(spec, Mapping):
        for k in keys:
            if k in spec:
                return spec[k]
        if "default" in spec:
            return spec["default"]
        raise WalkError(f"no operator given for {what} and no default")
    return spec


def _vertex_keys(struct, v: int) -> list:
    keys = [v, str(v)]
    if getattr(struct, "labels", None):
        keys.append(struct.labels[v])
    return keys


def _edge_keys(h: Hypergraph, e: int) -> list:
    keys = [e, str(e), f"e{e}"]
    if h.edge_labels:
        keys.append(h.edge_labels[e])
    return keys


def _resolve(spec, d: int, what: str) -> np.ndarray:
    try:
        m = ops.resolve(spec, d)
    except ValueError as exc:
        raise WalkError(f"{what}: {exc}") from None
    return _certify_block(m, what)


# ---------------------------------------------------------------- coined line


def build_coined_line(coin="hadamard", positions: int = 2) -> WalkInstance:
    """Coined walk on a cycle of ``positions`` sites, one step ``S (C x I)``.

    Coin state 0 moves to ``n - 1`` and coin state 1 to ``n + 1`` (mod N).
    """
    if positions < 2:
        raise WalkError("a line walk needs at least two positions")
    c = _resolve(coin, 2, "line coin")
    n = positions
    basis = BasisMap((cs, p) for cs in (0, 1) for p in range(n))
    coin_op = UnitaryOperator(np.kron(c, np.eye(n)), basis)
    shift = np.zeros((2 * n, 2 * n), dtype=complex)
    for p in range(n):
        shift[(p - 1) % n, p] = 1.0
        shift[n + (p + 1) % n, n + p] = 1.0
    shift_op = UnitaryOperator(shift, basis)
    stage = Stage(UnitaryOperator(shift @ coin_op.matrix, basis), (coin_op, shift_op))
    meas = MeasurementMap.from_labels(basis, lambda lab: lab[1], n)
    return WalkInstance("coined-line", None, basis, (stage,), (meas,), {"coin": c, "positions": n})


# ------------------------------------------------------- coined walk on graph


def arc_basis(graph: Graph) -> BasisMap:
    return BasisMap(graph.arcs())


def coin_groups(graph: Graph, coin_axis: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """Per vertex ``v`` the arcs its coin acts on, ordered by the other endpoint."""
    out = []
    for v in range(graph.vertex_count):
        nb = graph.neighbors(v)
        if nb:
            arcs = [(v, w) for w in nb] if coin_axis == 0 else [(w, v) for w in nb]
            out.append((v, arcs))
    return out


def swap_shift(basis: BasisMap) -> UnitaryOperator:
    """``S|i, j> = |j, i>`` on an arc basis."""
    n = len(basis)
    m = np.zeros((n, n), dtype=complex)
    for k, (i, j) in enumerate(basis):
        m[basis.index((j, i)), k] = 1.0
    return UnitaryOperator(m, basis)


def coined_walk(
    graph: Graph,
    coins: Sequence[np.ndarray | UnitaryOperator],
    coin_axis: int = 0,
    measurement: MeasurementMap | None = None,
    params: Mapping | None = None,
) -> WalkInstance:
    """Coined walk from full coin matrices on the arc basis; step ``k`` is ``S C_k``.

    The coins must be block diagonal over the arcs grouped by
    ``arc[coin_axis]``; the native measurement reports that same vertex.
    """
    if coin_axis not in (0, 1):
        raise WalkError("coin_axis must be 0 or 1")
    basis = arc_basis(graph)
    groups = [basis.indices(arcs) for _, arcs in coin_groups(graph, coin_axis)]
    shift = swap_shift(basis)
    coin_ops, stages = [], []
    for k, c in enumerate(coins):
        m = c.matrix if isinstance(c, UnitaryOperator) else np.asarray(c, dtype=complex)
        try:
            cop = UnitaryOperator(m, basis, groups)
        except UnitarityError as exc:
            raise UnitarityError(f"coin {k}: {exc}", exc.deviation) from None
        except ValueError as exc:
            raise WalkError(f"coin {k} does not respect the graph: {exc}") from None
        coin_ops.append(cop)
        stages.append(Stage(UnitaryOperator(shift.matrix @ cop.matrix, basis), (cop, shift)))
    if not stages:
        raise WalkError("at least one coin is required")
    if measurement is None:
        measurement = MeasurementMap.from_labels(basis, lambda a: a[coin_axis], graph.vertex_count)
    p = {"coins": tuple(coin_ops), "shift": shift, "coin_axis": coin_axis}
    p.update(params or {})
    return WalkInstance("scattering-coined", graph, basis, tuple(stages), (measurement,), p)


def _coin_matrix(graph: Graph, basis: BasisMap, spec, coin_axis: int) -> np.ndarray:
    n = len(basis)
    m = np.eye(n, dtype=complex)
    for v, arcs in coin_groups(graph, coin_axis):
        block = _resolve(_lookup(spec, _vertex_keys(graph, v), f"vertex {v}"), len(arcs), f"coin at vertex {v}")
        idx = basis.indices(arcs)
        m[np.ix_(idx, idx)] = block
    return m


def scattering_coins(graph: Graph, rt) -> dict[int, np.ndarray]:
    """Per-vertex coins from reflection/transmission pairs ``(r, t)``.

    ``rt`` is a single pair or a mapping vertex -> pair (``"default"``
    allowed). Each induced block is checked for full unitarity, which is
    stronger than ``|r|^2 + (deg-1)|t|^2 = 1`` once the degree exceeds two.
    """
    out = {}
    for v in range(graph.vertex_count):
        d = graph.degree(v)
        if not d:
            continue
        pair = _lookup(rt, _vertex_keys(graph, v), f"vertex {v}") if isinstance(rt, Mapping) else rt
        r, t = complex(pair[0]), complex(pair[1])
        out[v] = _certify_block(ops.scattering_coin(r, t, d), f"(r, t) = ({r}, {t}) at vertex {v}")
    return out


def build_scattering(
    graph: Graph,
    coins="grover",
    *,
    rt=None,
    schedule: Sequence | None = None,
    coin_axis: int = 1,
) -> WalkInstance:
    """Scattering (coined) walk on an arbitrary graph, step ``U = S C``.

    With the default ``coin_axis=1`` the coin at ``j`` acts on the arcs
    ``|i, j>`` entering ``j`` and ``S|i, j> = |j, i>``, so that
    ``U|i, j> = r|j, i> + t sum_{v ~ j, v != i} |j, v>`` for the ``(r, t)``
    form. The walker's position is the vertex whose coin acts next.

    ``schedule`` lists one coin specification per step of a generalized
    coined walk and overrides ``coins``/``rt``.
    """
    basis = arc_basis(graph)
    if schedule is not None:
        specs = list(schedule)
    elif rt is not None:
        specs = [scattering_coins(graph, rt)]
    else:
        specs = [coins]
    mats = [_coin_matrix(graph, basis, s, coin_axis) for s in specs]
    return coined_walk(graph, mats, coin_axis)


# ---------------------------------------------------------------- Szegedy


def _amplitude_rows(graph: Graph, amplitudes) -> dict[int, np.ndarray]:
    n = graph.vertex_count
    rows = {}
    if isinstance(amplitudes, str):
        if amplitudes != "uniform":
            raise WalkError(f"unknown amplitude preset {amplitudes!r}")
        for v in range(n):
            d = graph.degree(v)
            if d:
                rows[v] = np.full(d, 1 / np.sqrt(d), dtype=complex)
        return rows
    if isinstance(amplitudes, Mapping):
        for v in range(n):
            nb = graph.neighbors(v)
            if not nb:
                continue
            row = _lookup(amplitudes, _vertex_keys(graph, v), f"vertex {v}")
            if isinstance(row, Mapping):
                for w in row:
                    if int(w) not in nb:
                        raise WalkError(f"amplitude on non-adjacent pair ({v}, {w})")
                rows[v] = np.array([complex(row.get(w, row.get(str(w), 0))) for w in nb])
            else:
                rows[v] = np.array(row, dtype=complex).reshape(-1)
                if rows[v].size != len(nb):
                    raise WalkError(f"vertex {v} needs {len(nb)} amplitudes")
        return rows
    a = np.array(amplitudes, dtype=complex)
    if a.shape != (n, n):
        raise WalkError(f"amplitude matrix must be {n}x{n}")
    for v in range(n):
        nb = graph.neighbors(v)
        off = [w for w in range(n) if w not in nb and a[v, w] != 0]
        if off:
            raise WalkError(f"amplitude on non-adjacent pair ({v}, {off[0]})")
        if nb:
            rows[v] = a[v, list(nb)]
    return rows


def build_szegedy(graph: Graph, amplitudes="uniform", *, reflections=None, axis: int = 0) -> WalkInstance:
    """Szegedy walk on the bipartite double cover, stages ``U_1, U_2``.

    ``U_1 = 2 sum_v |d_v><d_v| - I`` with ``|d_v> = |v> (x) sum_w a_{v,w} |w'>``
    and ``U_2`` the same with the registers swapped. Running the walk yields
    ``U_1, U_2 U_1, U_1 U_2 U_1, ...``.

    ``reflections=(U1, U2)`` accepts arbitrary unitaries on the arc basis
    instead. The walker sits in register ``axis`` after an even number of
    stages and in the other register after an odd number; ``v`` and ``v'``
    are both reported as vertex ``v``.
    """
    basis = arc_basis(graph)
    if reflections is not None:
        u1, u2 = (np.asarray(r, dtype=complex) for r in reflections)
        stages = []
        for k, u in enumerate((u1, u2)):
            try:
                stages.append(Stage(UnitaryOperator(u, basis)))
            except UnitarityError as exc:
                raise UnitarityError(f"U_{k + 1}: {exc}", exc.deviation) from None
        params = {}
    else:
        rows = _amplitude_rows(graph, amplitudes)
        tol = get_tolerance()
        groups1, groups2, blocks = [], [], []
        for v, row in rows.items():
            nrm = np.linalg.norm(row)
            if abs(nrm - 1) > tol:
                raise NormalizationError(f"|d_{v}> has norm {nrm:.12g}")
            nb = graph.neighbors(v)
            groups1.append([(v, w) for w in nb])
            groups2.append([(w, v) for w in nb])
            blocks.append(ops.reflection(row))
        if axis == 1:
            groups1, groups2 = groups2, groups1
        stages = [Stage(_assemble(basis, groups1, blocks)), Stage(_assemble(basis, groups2, blocks))]
        params = {"amplitudes": MappingProxyType(rows)}
    n = graph.vertex_count
    meas = (
        MeasurementMap.from_labels(basis, lambda a: a[axis], n),
        MeasurementMap.from_labels(basis, lambda a: a[1 - axis], n),
    )
    params.update(axis=axis, bipartite_vertices=2 * n)
    return WalkInstance("szegedy", graph, basis, tuple(stages), meas, params)


def bipartite_double(graph: Graph) -> Graph:
    """The graph on ``V u V'`` (``v' = v + N``) with ``(i, j') in F`` iff ``i ~ j``."""
    n = graph.vertex_count
    return Graph.from_edges(2 * n, [(i, n + j) for i, j in graph.arcs()])


# ---------------------------------------------------------------- staggered


def build_staggered(
    graph: Graph,
    tessellations: Sequence[Tessellation],
    amplitudes="uniform",
    *,
    unitaries: Sequence | None = None,
) -> WalkInstance:
    """Staggered walk; stage ``k`` is ``U_k = 2 sum_i |d_{k,i}><d_{k,i}| - I``.

    ``amplitudes`` is ``"uniform"`` or one entry per tessellation, each
    ``"uniform"`` or a length-N vector of ``a_{k,j}``. Alternatively
    ``unitaries[k][i]`` gives an arbitrary unitary (or preset name) for
    polygon ``i`` of tessellation ``k``, in ascending vertex order.
    """
    if graph.directed:
        raise WalkError("staggered walks are defined on undirected graphs")
    if not tessellations:
        raise WalkError("a staggered walk needs at least one tessellation")
    n = graph.vertex_count
    basis = BasisMap(range(n))
    tol = get_tolerance()
    tess = []
    stages = []
    for k, t in enumerate(tessellations):
        if not isinstance(t, Tessellation):
            t = Tessellation(tuple(tuple(p) for p in t), n)
        validate_tessellation(t, graph).raise_if_invalid()
        tess.append(t)
        blocks = []
        for i, poly in enumerate(t.polygons):
            if unitaries is not None:
                spec = unitaries[k][i]
                blocks.append(_resolve(spec, len(poly), f"polygon {i} of tessellation {k}"))
                continue
            a_k = amplitudes if isinstance(amplitudes, str) else amplitudes[k]
            if isinstance(a_k, str):
                if a_k != "uniform":
                    raise WalkError(f"unknown amplitude preset {a_k!r}")
                d = np.full(len(poly), 1 / np.sqrt(len(poly)), dtype=complex)
            else:
                d = np.asarray(a_k, dtype=complex)[list(poly)]
            nrm = np.linalg.norm(d)
            if abs(nrm - 1) > tol:
                raise NormalizationError(f"|d_{{{k},{i}}}> has norm {nrm:.12g}")
            blocks.append(ops.reflection(d))
        stages.append(Stage(_assemble(basis, [list(p) for p in t.polygons], blocks)))
    meas = MeasurementMap(np.arange(n), n)
    return WalkInstance("staggered", graph, basis, tuple(stages), (meas,), {"tessellations": tuple(tess)})


def staggered_walk(graph: Graph, tessellations: Sequence[Tessellation], matrices: Sequence[np.ndarray]) -> WalkInstance:
    """Staggered walk from full stage matrices, each block diagonal over its tessellation."""
    n = graph.vertex_count
    basis = BasisMap(range(n))
    stages = []
    for k, (t, m) in enumerate(zip(tessellations, matrices, strict=True)):
        validate_tessellation(t, graph).raise_if_invalid()
        try:
            stages.append(Stage(UnitaryOperator(m, basis, [list(p) for p in t.polygons])))
        except UnitarityError:
            raise
        except ValueError as exc:
            raise WalkError(f"stage {k} is not block diagonal over its tessellation") from exc
    meas = MeasurementMap(np.arange(n), n)
    return WalkInstance("staggered", graph, basis, tuple(stages), (meas,), {"tessellations": tuple(tessellations)})


# ---------------------------------------------------------------- hyperwalk


def build_directed_shift(h: Hypergraph) -> dict[int, np.ndarray]:
    """Cyclic shift blocks ``|v_i, e> -> |v_{i+1}, e>`` for every ordered edge."""
    return {e: ops.directed_shift(edge) for e, edge in enumerate(h.edges)}


def vertex_groups(h: Hypergraph) -> list[tuple[int, list[tuple[int, int]]]]:
    return [(v, [(v, e) for e in h.incident_edges(v)]) for v in range(h.vertex_count) if h.degree(v)]


def edge_groups(h: Hypergraph) -> list[tuple[int, list[tuple[int, int]]]]:
    return [(e, [(v, e) for v in h.members(e)]) for e in range(h.edge_count)]


def _edge_block(h: Hypergraph, e: int, spec) -> np.ndarray:
    what = f"shift on edge {h.edge_name(e)}"
    if isinstance(spec, str) and spec.lower() == "directed":
        return ops.directed_shift(h.edges[e])
    return _resolve(spec, len(h.edges[e]), what)


def build_hyperwalk(h: Hypergraph, coins="grover", shifts="grover", *, schedule: Sequence | None = None) -> WalkInstance:
    """Hyperwalk ``U^E U^V`` on the incidence pairs of ``h``.

    ``U^V`` applies the coin ``C_v`` on ``span{|v, e>}_{e ∋ v}`` (edges in
    ascending order), ``U^E`` applies ``S_e`` on ``span{|v, e>}_{v ∈ e}``
    (vertices ascending). Specifications are a preset name, a matrix, or a
    mapping keyed by vertex / edge with an optional ``"default"``; shifts also
    accept ``"directed"`` for the cyclic shift along ordered edges.

    ``schedule`` is a list of ``(coins, shifts)`` pairs for a generalized
    hyperwalk; step ``k`` then applies ``U^E_k U^V_k``.
    """
    pairs = incidence_pairs(h)
    basis = BasisMap(pairs)
    vgroups, egroups = vertex_groups(h), edge_groups(h)
    specs = list(schedule) if schedule is not None else [(coins, shifts)]
    if not specs:
        raise WalkError("empty hyperwalk schedule")
    stages = []
    for c_spec, s_spec in specs:
        cblocks = [
            _resolve(_lookup(c_spec, _vertex_keys(h, v), f"vertex {v}"), len(g), f"coin at vertex {v}")
            for v, g in vgroups
        ]
        sblocks = [
            _certify_block(_edge_block(h, e, _lookup(s_spec, _edge_keys(h, e), f"edge {e}")), f"shift on edge {e}")
            for e, g in egroups
        ]
        uv = _assemble(basis, [g for _, g in vgroups], cblocks)
        ue = _assemble(basis, [g for _, g in egroups], sblocks)
        stages.append(Stage(UnitaryOperator(ue.matrix @ uv.matrix, basis), (uv, ue)))
    meas = MeasurementMap.from_labels(basis, lambda lab: lab[0], h.vertex_count)
    return WalkInstance("hyperwalk", h, basis, tuple(stages), (meas,))


def hyperwalk_from_matrices(h: Hypergraph, stages: Sequence[tuple[np.ndarray, np.ndarray]]) -> WalkInstance:
    """Generalized hyperwalk from full ``(U^V_k, U^E_k)`` matrices on the incidence basis."""
    basis = BasisMap(incidence_pairs(h))
    vg = [basis.indices(g) for _, g in vertex_groups(h)]
    eg = [basis.indices(g) for _, g in edge_groups(h)]
    out = []
    for uv, ue in stages:
        try:
            uv_op = UnitaryOperator(uv, basis, vg)
            ue_op = UnitaryOperator(ue, basis, eg)
        except UnitarityError:
            raise
        except ValueError as exc:
            raise WalkError(f"hyperwalk operator breaks the vertex/edge block structure: {exc}") from None
        out.append(Stage(UnitaryOperator(ue_op.matrix @ uv_op.matrix, basis), (uv_op, ue_op)))
    meas = MeasurementMap.from_labels(basis, lambda lab: lab[0], h.vertex_count)
    return WalkInstance("hyperwalk", h, basis, tuple(out), (meas,))


# ---------------------------------------------------------------- running


@dataclass(frozen=True, eq=False)
class Trajectory:
    walk: WalkInstance
    states: tuple[StateVector, ...]

    @property
    def steps(self) -> int:
        return len(self.states) - 1

    @property
    def cycle_boundaries(self) -> list[int]:
        k = self.walk.cycle_length
        return [n for n in range(len(self.states)) if n % k == 0]

    def distributions(self) -> np.ndarray:
        """Row ``n`` is the vertex distribution after ``n`` steps."""
        return np.array([self.walk.distribution(s, n) for n, s in enumerate(self.states)])

    def __getitem__(self, n: int) -> StateVector:
        return self.states[n]

    def __len__(self) -> int:
        return len(self.states)


def run(w: WalkInstance, psi0: StateVector, steps: int) -> Trajectory:
    """States ``psi_0 .. psi_steps``, step ``t`` applying the schedule entry ``t mod K``."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if psi0.basis != w.basis:
        raise BasisMismatch("initial state is not on the walk basis")
    states = [psi0]
    psi = psi0
    for t in range(steps):
        psi = apply(w.step_operator(t), psi)
        states.append(psi)
    return Trajectory(w, tuple(states))


def simulate_distributions(w: WalkInstance, psi0: StateVector, steps: int) -> np.ndarray:
    return run(w, psi0, steps).distributions()


__all__ = [
    "MODELS",
    "Stage",
    "StructureError",
    "Trajectory",
    "WalkError",
    "WalkInstance",
    "arc_basis",
    "bipartite_double",
    "build_coined_line",
    "build_directed_shift",
    "build_hyperwalk",
    "build_scattering",
    "build_staggered",
    "build_szegedy",
    "coin_groups",
    "coined_walk",
    "edge_groups",
    "hyperwalk_from_matrices",
    "run",
    "scattering_coins",
    "simulate_distributions",
    "staggered_walk",
    "swap_shift",
    "vertex_groups",
]
