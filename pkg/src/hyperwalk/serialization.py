"""JSON documents for structures, walk specifications, states and results.

Complex numbers are written as ``[re, im]`` pairs; on input a plain number
is accepted as well. Matrices are nested row lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

import numpy as np

from .state import BasisMap, MeasurementMap, StateVector
from .structures import Graph, Hypergraph, StructureError, Tessellation
from .transforms import StepMap, TransformResult, size_of
from .walks import (
    MODELS,
    WalkError,
    WalkInstance,
    arc_basis,
    build_coined_line,
    build_hyperwalk,
    build_scattering,
    build_staggered,
    build_szegedy,
    coin_groups,
    edge_groups,
    vertex_groups,
)


class SpecError(ValueError):
    """A document that cannot be parsed into the requested object."""


# ---------------------------------------------------------------- numbers


def encode_complex(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def encode_vector(v) -> list:
    return [encode_complex(z) for z in np.asarray(v).reshape(-1)]


def encode_matrix(m) -> list:
    return [[encode_complex(z) for z in row] for row in np.asarray(m)]


def _scalar(x) -> complex:
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise SpecError(f"complex number must be [re, im], got {x!r}")
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, str):
        return complex(x.replace(" ", ""))
    return complex(x)


def decode_vector(obj) -> np.ndarray:
    if not isinstance(obj, (list, tuple)):
        raise SpecError("vector must be a list")
    return np.array([_scalar(x) for x in obj], dtype=complex)


def decode_matrix(obj) -> np.ndarray:
    if not isinstance(obj, (list, tuple)) or not all(isinstance(r, (list, tuple)) for r in obj):
        raise SpecError("matrix must be a list of rows")
    rows = [[_scalar(x) for x in r] for r in obj]
    if len({len(r) for r in rows}) > 1:
        raise SpecError("matrix rows differ in length")
    return np.array(rows, dtype=complex).reshape(len(rows), -1)


def _operator_spec(obj):
    """Preset names pass through; lists become matrices; mappings recurse."""
    if isinstance(obj, str):
        return obj
    if isinstance(obj, Mapping):
        return {k: _operator_spec(v) for k, v in obj.items()}
    return decode_matrix(obj)


# ---------------------------------------------------------------- structures


def graph_to_doc(g: Graph) -> dict:
    doc: dict[str, Any] = {"vertices": g.vertex_count}
    if g.labels:
        doc["labels"] = list(g.labels)
    doc["edges"] = [list(e) for e in g.sorted_edges()]
    doc["directed"] = g.directed
    return doc


def graph_from_doc(doc: Mapping) -> Graph:
    try:
        return Graph.from_edges(int(doc["vertices"]), doc.get("edges", []), bool(doc.get("directed", False)), doc.get("labels"))
    except (KeyError, TypeError) as exc:
        raise SpecError(f"bad graph document: {exc}") from None


def hypergraph_to_doc(h: Hypergraph) -> dict:
    doc: dict[str, Any] = {"vertices": h.vertex_count}
    if h.labels:
        doc["labels"] = list(h.labels)
    doc["edges"] = [list(e) for e in h.edges]
    if h.edge_labels:
        doc["edge_labels"] = list(h.edge_labels)
    doc["directed"] = h.directed
    return doc


def hypergraph_from_doc(doc: Mapping) -> Hypergraph:
    try:
        labels = doc.get("labels")
        index = {name: k for k, name in enumerate(labels)} if labels else {}
        edges = tuple(tuple(index.get(v, v) if isinstance(v, str) else v for v in e) for e in doc.get("edges", []))
        return Hypergraph(
            int(doc["vertices"]), edges, bool(doc.get("directed", False)), labels, doc.get("edge_labels")
        )
    except (KeyError, TypeError) as exc:
        raise SpecError(f"bad hypergraph document: {exc}") from None


def tessellation_to_doc(t: Tessellation) -> dict:
    return {"polygons": [list(p) for p in t.polygons]}


def tessellation_from_doc(doc: Mapping, n: int | None = None) -> Tessellation:
    try:
        polys = tuple(tuple(int(v) for v in p) for p in doc["polygons"])
    except (KeyError, TypeError) as exc:
        raise SpecError(f"bad tessellation document: {exc}") from None
    return Tessellation(polys, -1 if n is None else n)


# ---------------------------------------------------------------- walk specs


@dataclass
class WalkSpec:
    """Model tag, structure, operator parameters and an optional schedule."""

    model: str
    structure: Graph | Hypergraph | None = None
    params: dict = field(default_factory=dict)
    schedule: list | None = None

    @classmethod
    def from_dict(cls, doc: Mapping) -> "WalkSpec":
        if not isinstance(doc, Mapping) or "model" not in doc:
            raise SpecError("walk spec needs a 'model' field")
        model = doc["model"]
        if model not in MODELS:
            raise SpecError(f"unknown model {model!r}; expected one of {MODELS}")
        struct = None
        if "structure" in doc:
            struct = (hypergraph_from_doc if model == "hyperwalk" else graph_from_doc)(doc["structure"])
        params = {k: v for k, v in doc.items() if k not in ("model", "structure", "schedule")}
        return cls(model, struct, params, doc.get("schedule"))

    def to_dict(self) -> dict:
        doc: dict[str, Any] = {"model": self.model}
        if self.structure is not None:
            doc["structure"] = (
                hypergraph_to_doc(self.structure) if isinstance(self.structure, Hypergraph) else graph_to_doc(self.structure)
            )
        doc.update(self.params)
        if self.schedule is not None:
            doc["schedule"] = self.schedule
        return doc

    def build(self) -> WalkInstance:
        builder = _BUILDERS[self.model]
        if self.model != "coined-line" and self.structure is None:
            raise SpecError(f"a {self.model} spec needs a structure")
        return builder(self)


def _build_line(s: WalkSpec) -> WalkInstance:
    coin = s.params.get("coin", "hadamard")
    return build_coined_line(_operator_spec(coin), int(s.params.get("positions", 2)))


def _build_scattering(s: WalkSpec) -> WalkInstance:
    axis = int(s.params.get("coin_axis", 1))
    if s.schedule is not None:
        specs = [_operator_spec(st["coins"] if isinstance(st, Mapping) and "coins" in st else st) for st in s.schedule]
        return build_scattering(s.structure, schedule=specs, coin_axis=axis)
    if "rt" in s.params:
        rt = s.params["rt"]
        if isinstance(rt, Mapping):
            rt = {k: (_scalar(v[0]), _scalar(v[1])) for k, v in rt.items()}
        else:
            rt = (_scalar(rt[0]), _scalar(rt[1]))
        return build_scattering(s.structure, rt=rt, coin_axis=axis)
    return build_scattering(s.structure, _operator_spec(s.params.get("coins", "grover")), coin_axis=axis)


def _blocks_to_matrix(g: Graph, basis: BasisMap, blocks: Mapping, axis: int) -> np.ndarray:
    m = np.eye(len(basis), dtype=complex)
    for v, arcs in coin_groups(g, axis):
        key = str(v) if str(v) in blocks else v
        if key not in blocks:
            continue
        idx = basis.indices(arcs)
        m[np.ix_(idx, idx)] = decode_matrix(blocks[key])
    return m


def _build_szegedy(s: WalkSpec) -> WalkInstance:
    g = s.structure
    axis = int(s.params.get("axis", 0))
    if "reflections" in s.params:
        basis = arc_basis(g)
        mats = [_blocks_to_matrix(g, basis, r["blocks"], int(r["axis"])) for r in s.params["reflections"]]
        return build_szegedy(g, reflections=mats, axis=axis)
    if "stages" in s.params:
        return build_szegedy(g, reflections=[decode_matrix(m) for m in s.params["stages"]], axis=axis)
    amps = s.params.get("amplitudes", "uniform")
    if isinstance(amps, Mapping):
        amps = {
            k: ({w: _scalar(a) for w, a in row.items()} if isinstance(row, Mapping) else decode_vector(row))
            for k, row in amps.items()
        }
    elif not isinstance(amps, str):
        amps = decode_matrix(amps)
    return build_szegedy(g, amps, axis=axis)


def _build_staggered(s: WalkSpec) -> WalkInstance:
    g = s.structure
    entries = s.params.get("tessellations")
    if not entries:
        raise SpecError("staggered spec needs 'tessellations'")
    tess = [tessellation_from_doc(t, g.vertex_count) for t in entries]
    if all("unitaries" in t for t in entries):
        unitaries = [[_operator_spec(u) for u in t["unitaries"]] for t in entries]
        return build_staggered(g, tess, unitaries=unitaries)
    amps = []
    for t in entries:
        a = t.get("amplitudes", "uniform")
        amps.append(a if isinstance(a, str) else decode_vector(a))
    return build_staggered(g, tess, amps)


def _build_hyperwalk(s: WalkSpec) -> WalkInstance:
    h = s.structure
    coins = _operator_spec(s.params.get("coins", "grover"))
    shifts = _operator_spec(s.params.get("shifts", "grover"))
    if s.schedule is None:
        return build_hyperwalk(h, coins, shifts)
    stages = []
    for st in s.schedule:
        c = _operator_spec(st["coins"]) if "coins" in st else coins
        sh = _operator_spec(st["shifts"]) if "shifts" in st else shifts
        stages.append((c, sh))
    return build_hyperwalk(h, schedule=stages)


_BUILDERS = {
    "coined-line": _build_line,
    "scattering-coined": _build_scattering,
    "szegedy": _build_szegedy,
    "staggered": _build_staggered,
    "hyperwalk": _build_hyperwalk,
}


def walk_from_spec(doc: Mapping | WalkSpec) -> WalkInstance:
    spec = doc if isinstance(doc, WalkSpec) else WalkSpec.from_dict(doc)
    try:
        return spec.build()
    except (KeyError, TypeError) as exc:
        raise SpecError(f"bad {spec.model} spec: {exc}") from None


def _blocks_of(m: np.ndarray, basis: BasisMap, groups) -> dict:
    out = {}
    for key, labels in groups:
        idx = basis.indices(labels)
        out[str(key)] = encode_matrix(m[np.ix_(idx, idx)])
    return out


def _is_block_diagonal(m: np.ndarray, basis: BasisMap, groups) -> bool:
    ids = np.arange(len(basis))
    owner = np.full(len(basis), -1)
    for b, (_, labels) in enumerate(groups):
        owner[basis.indices(labels)] = b
    loose = owner == -1
    owner[loose] = len(groups) + ids[loose]
    return not np.any(m[owner[:, None] != owner[None, :]])


def walk_to_spec(w: WalkInstance) -> WalkSpec:
    """Explicit specification that rebuilds ``w``'s operators."""
    if w.model == "coined-line":
        return WalkSpec("coined-line", None, {"positions": w.params["positions"], "coin": encode_matrix(w.params["coin"])})
    if w.model == "scattering-coined":
        axis = w.params["coin_axis"]
        groups = coin_groups(w.structure, axis)
        if not all(_is_block_diagonal(c.matrix, w.basis, groups) for c in w.params["coins"]):
            raise SpecError("coin is not block diagonal over its vertex groups")
        sched = [{"coins": _blocks_of(c.matrix, w.basis, groups)} for c in w.params["coins"]]
        return WalkSpec("scattering-coined", w.structure, {"coin_axis": axis}, sched)
    if w.model == "szegedy":
        axis = w.params["axis"]
        u1, u2 = (st.operator.matrix for st in w.stages)
        g1, g2 = coin_groups(w.structure, axis), coin_groups(w.structure, 1 - axis)
        if _is_block_diagonal(u1, w.basis, g1) and _is_block_diagonal(u2, w.basis, g2):
            refl = [
                {"axis": axis, "blocks": _blocks_of(u1, w.basis, g1)},
                {"axis": 1 - axis, "blocks": _blocks_of(u2, w.basis, g2)},
            ]
            return WalkSpec("szegedy", w.structure, {"axis": axis, "reflections": refl})
        return WalkSpec("szegedy", w.structure, {"axis": axis, "stages": [encode_matrix(u1), encode_matrix(u2)]})
    if w.model == "staggered":
        entries = []
        for t, st in zip(w.params["tessellations"], w.stages):
            m = st.operator.matrix
            entries.append(
                {
                    "polygons": [list(p) for p in t.polygons],
                    "unitaries": [encode_matrix(m[np.ix_(p, p)]) for p in t.polygons],
                }
            )
        return WalkSpec("staggered", w.structure, {"tessellations": entries})
    if w.model == "hyperwalk":
        h = w.structure
        vg = [(v, g) for v, g in vertex_groups(h)]
        eg = [(f"e{e}", g) for e, g in edge_groups(h)]
        sched = []
        for st in w.stages:
            uv, ue = (f.matrix for f in st.factors)
            sched.append({"coins": _blocks_of(uv, w.basis, vg), "shifts": _blocks_of(ue, w.basis, eg)})
        return WalkSpec("hyperwalk", h, {}, sched)
    raise SpecError(f"cannot serialise model {w.model!r}")


# ---------------------------------------------------------------- states


def _label(obj):
    if isinstance(obj, list):
        return tuple(_label(x) for x in obj)
    return obj


def _jsonable_label(lab):
    if isinstance(lab, tuple):
        return [_jsonable_label(x) for x in lab]
    if isinstance(lab, np.integer):
        return int(lab)
    return lab


def state_from_doc(doc, w: WalkInstance) -> StateVector:
    """``{"amplitudes": [...]}``, ``{"label": [...]}``, ``{"vertex": v, "edge": e}``,
    ``{"coin": c, "position": n}`` or ``{"vertex": v}`` for a staggered walk."""
    if isinstance(doc, Mapping):
        if "amplitudes" in doc:
            return StateVector(decode_vector(doc["amplitudes"]), w.basis)
        if "label" in doc:
            lab = _label(doc["label"])
        elif "edge" in doc:
            lab = (int(doc["vertex"]), int(doc["edge"]))
        elif "position" in doc:
            lab = (int(doc.get("coin", 0)), int(doc["position"]))
        elif "vertex" in doc and "to" in doc:
            lab = (int(doc["vertex"]), int(doc["to"]))
        elif "vertex" in doc:
            lab = int(doc["vertex"])
        else:
            raise SpecError(f"cannot read a state from {dict(doc)!r}")
    elif isinstance(doc, list):
        lab = _label(doc)
    else:
        lab = doc
    try:
        return StateVector.basis_state(w.basis, lab)
    except KeyError as exc:
        raise SpecError(str(exc)) from None


def state_to_doc(s: StateVector) -> dict:
    return {"amplitudes": encode_vector(s.amplitudes)}


# ---------------------------------------------------------------- results


def result_to_doc(r: TransformResult, source: WalkInstance | None = None) -> dict:
    doc: dict[str, Any] = {
        "transform": r.name,
        "target": walk_to_spec(r.target).to_dict(),
        "step_map": r.step_map.to_dict(),
        "sizes": {"target": r.size.to_dict()},
        "source_vertex_count": r.source_vertex_count,
        "state_map": [[_jsonable_label(a), _jsonable_label(b)] for a, b in r.state_map.items()],
        "measurements": [[int(x) for x in m.assignment] for m in r.measurements],
        "vertex_map": [[int(a), int(b)] for a, b in r.vertex_map.items()],
    }
    if source is not None:
        doc["sizes"]["source"] = size_of(source).to_dict()
    return doc


def result_from_doc(doc: Mapping, source: WalkInstance) -> TransformResult:
    try:
        target = walk_from_spec(doc["target"])
        state_map = {_label(a): _label(b) for a, b in doc["state_map"]}
        n = int(doc.get("source_vertex_count", source.vertex_count))
        meas = tuple(MeasurementMap(np.array(m, dtype=int), n) for m in doc["measurements"])
        step = StepMap(int(doc["step_map"]["a"]), int(doc["step_map"].get("b", 0)))
        vmap = {int(a): int(b) for a, b in doc.get("vertex_map", [])}
        return TransformResult(doc.get("transform", "document"), source.basis, n, target, state_map, meas, step, vmap)
    except (KeyError, TypeError) as exc:
        raise SpecError(f"bad transform document: {exc}") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


__all__ = [
    "SpecError",
    "StructureError",
    "WalkError",
    "WalkSpec",
    "decode_matrix",
    "decode_vector",
    "encode_matrix",
    "graph_from_doc",
    "graph_to_doc",
    "hypergraph_from_doc",
    "hypergraph_to_doc",
    "result_from_doc",
    "result_to_doc",
    "state_from_doc",
    "state_to_doc",
    "tessellation_from_doc",
    "tessellation_to_doc",
    "walk_from_spec",
    "walk_to_spec",
]
