"""Instance checks between a walk and the result of transforming it.

A check runs both walks, maps the source state into the target, and compares
vertex distributions at the step pairs ``(n, step_map(n))`` by their largest
absolute difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .generators import random_coined, random_hyperwalk, random_staggered, random_szegedy
from .state import StateVector, get_tolerance, random_state
from .transforms import (
    StepMap,
    TransformError,
    TransformResult,
    identity_transform,
    transform,
)
from .walks import WalkInstance, run


@dataclass
class EquivalenceReport:
    transform: str
    passed: bool
    max_deviation: float
    tolerance: float
    checked_steps: list[tuple[int, int]]
    basis_sizes: tuple[int, int]
    strong: bool
    strong_required: bool = False
    deviations: list[float] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.passed:
            return "fail"
        if self.strong_required:
            return "strong-pass" if self.strong else "fail"
        return "strong-pass" if self.strong else "pass"

    @property
    def ok(self) -> bool:
        return self.verdict != "fail"

    def to_dict(self) -> dict:
        return {
            "transform": self.transform,
            "verdict": self.verdict,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "checked_steps": [list(p) for p in self.checked_steps],
            "basis_sizes": {"source": self.basis_sizes[0], "target": self.basis_sizes[1]},
            "strong": self.strong,
            "strong_required": self.strong_required,
        }


def check_instance(
    source: WalkInstance,
    psi: StateVector,
    result: TransformResult,
    n_max: int,
    tol: float | None = None,
    *,
    _strong_required: bool = False,
) -> EquivalenceReport:
    """Compare ``source`` after ``n`` steps with the target after ``step_map(n)``, ``n <= n_max``."""
    tol = get_tolerance() if tol is None else tol
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    phi = result.map_state(psi)
    step = result.step_map
    src = run(source, psi, n_max)
    tgt = run(result.target, phi, step(n_max))
    pairs, devs = [], []
    for n in range(n_max + 1):
        m = step(n)
        p = source.distribution(src[n], n)
        q = result.measure(tgt[m], m)
        pairs.append((n, m))
        devs.append(float(np.max(np.abs(p - q))) if p.size else 0.0)
    worst = max(devs)
    strong = len(result.target.basis) <= len(source.basis) and step.is_identity
    return EquivalenceReport(
        result.name,
        worst <= tol,
        worst,
        tol,
        pairs,
        (len(source.basis), len(result.target.basis)),
        strong,
        _strong_required,
        devs,
    )


def check_strong_instance(
    source: WalkInstance, psi: StateVector, result: TransformResult, n_max: int, tol: float | None = None
) -> EquivalenceReport:
    """As :func:`check_instance`, but only a size-preserving, step-preserving match passes."""
    return check_instance(source, psi, result, n_max, tol, _strong_required=True)


# ------------------------------------------------------------- random suites

_PAIR_ALIASES = {
    ("hyperwalk", "coined"): "coined_from_hyperwalk",
    ("generalized-hyperwalk", "staggered"): "staggered_from_generalized_hyperwalk",
    ("hyperwalk", "staggered"): "staggered_from_generalized_hyperwalk",
    ("staggered", "generalized-coined"): "generalized_coined_from_staggered",
    ("generalized-coined", "coined"): "coined_from_generalized_coined",
    ("staggered", "generalized-hyperwalk"): "generalized_hyperwalk_from_staggered",
    ("coined", "szegedy"): "szegedy_from_coined",
    ("szegedy", "coined"): "coined_from_szegedy",
}

_DEFAULT_BOUNDS = {"vertices": 6, "edges": 4, "coins": 3, "tessellations": 3, "schedule": 2}
_STRONG = {"generalized_hyperwalk_from_staggered"}


def _source(name: str, rng: np.random.Generator, b: Mapping[str, int]) -> WalkInstance:
    nv, ne = b["vertices"], b["edges"]
    if name == "coined_from_hyperwalk":
        return random_hyperwalk(rng, nv, ne, int(rng.integers(1, b.get("schedule", 1) + 1)))
    if name == "staggered_from_generalized_hyperwalk":
        return random_hyperwalk(rng, nv, ne, int(rng.integers(1, b["schedule"] + 1)))
    if name in ("generalized_coined_from_staggered", "generalized_hyperwalk_from_staggered"):
        return random_staggered(rng, nv, b["tessellations"])
    if name == "coined_from_generalized_coined":
        return random_coined(rng, nv, ne, int(rng.integers(1, b["coins"] + 1)))
    if name in ("szegedy_from_coined", "szegedy_round_trip"):
        return random_coined(rng, nv, ne, 1)
    if name in ("coined_from_szegedy", "coined_round_trip"):
        return random_szegedy(rng, nv, ne)
    raise TransformError(f"no random source for {name!r}")


def _check_bounds(name: str, b: Mapping[str, int]):
    needs_graph = name in (
        "coined_from_generalized_coined",
        "szegedy_from_coined",
        "coined_from_szegedy",
        "szegedy_round_trip",
        "coined_round_trip",
    )
    if b["vertices"] < (2 if needs_graph else 1):
        raise ValueError(f"size bounds allow too few vertices for {name}")
    if "staggered" not in name.split("_from_")[-1] and b["edges"] < 1:
        raise ValueError(f"size bounds allow no edges for {name}")
    for key in ("coins", "tessellations", "schedule"):
        if b[key] < 1:
            raise ValueError(f"size bound {key!r} must be at least 1")


def round_trip(w: WalkInstance, first: str, second: str) -> TransformResult:
    """Compose two transforms whose intermediate measurement is the native one.

    Holds for the Szegedy/coined pair, where the intermediate walk is
    measured exactly as its builder measures it and vertices are unchanged.
    """
    r1 = transform(w, first)
    r2 = transform(r1.target, second)
    native = r1.target.measurements
    same = len(native) == len(r1.measurements) and all(
        np.array_equal(a.assignment, b.assignment) for a, b in zip(native, r1.measurements)
    )
    if not same or any(k != v for k, v in r1.vertex_map.items()):
        raise TransformError(f"{first} followed by {second} does not compose")
    if r1.step_map.offset or r1.step_map.scale != 1:
        raise TransformError("round trips need a unit step map on the first link")
    state_map = {lab: r2.state_map[r1.state_map[lab]] for lab in w.basis}
    return TransformResult(
        f"{first}+{second}",
        w.basis,
        w.vertex_count,
        r2.target,
        state_map,
        r2.measurements,
        r1.step_map.then(r2.step_map),
        dict(r2.vertex_map),
    )


_ROUND_TRIPS = {
    "szegedy_round_trip": ("szegedy_from_coined", "coined_from_szegedy"),
    "coined_round_trip": ("coined_from_szegedy", "szegedy_from_coined"),
}


@dataclass
class SuiteReport:
    model_pair: str
    seed: int
    instance_count: int
    passed: int
    failed: int
    worst_deviation: float
    tolerance: float
    strong: bool
    reports: list[EquivalenceReport] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "model_pair": self.model_pair,
            "seed": self.seed,
            "instances": self.instance_count,
            "passed": self.passed,
            "failed": self.failed,
            "worst_deviation": self.worst_deviation,
            "tolerance": self.tolerance,
            "strong": self.strong,
            "verdict": "pass" if self.all_passed else "fail",
        }


def randomized_suite(
    model_pair: str | Sequence[str],
    instance_count: int,
    size_bounds: Mapping[str, int] | None = None,
    seed: int = 0,
    n_max: int = 10,
    tol: float | None = None,
    cycles: int | None = None,
) -> SuiteReport:
    """Run ``instance_count`` seeded random instances of one construction.

    ``model_pair`` is a transform name, a ``(source, target)`` pair such as
    ``("hyperwalk", "coined")``, or ``"szegedy_round_trip"`` /
    ``"coined_round_trip"``. With ``cycles`` set, ``n_max`` becomes that
    many full source cycles per instance. Each instance draws its structure,
    unitaries and initial state from its own child of ``seed``.
    """
    name = _PAIR_ALIASES.get(tuple(model_pair), None) if not isinstance(model_pair, str) else model_pair
    if name is None:
        raise TransformError(f"unknown model pair {model_pair!r}")
    bounds = dict(_DEFAULT_BOUNDS)
    bounds.update(size_bounds or {})
    _check_bounds(name, bounds)
    tol = get_tolerance() if tol is None else tol
    strong = name in _STRONG
    reports = []
    children = np.random.SeedSequence(seed).spawn(instance_count)
    for child in children:
        rng = np.random.default_rng(child)
        w = _source(name, rng, bounds)
        psi = random_state(w.basis, rng)
        result = round_trip(w, *_ROUND_TRIPS[name]) if name in _ROUND_TRIPS else transform(w, name)
        steps = n_max if cycles is None else cycles * w.cycle_length
        check = check_strong_instance if strong else check_instance
        reports.append(check(w, psi, result, steps, tol))
    passed = sum(r.ok for r in reports)
    worst = max((r.max_deviation for r in reports), default=0.0)
    return SuiteReport(name, seed, instance_count, passed, instance_count - passed, worst, tol, strong, reports)


__all__ = [
    "EquivalenceReport",
    "StepMap",
    "SuiteReport",
    "check_instance",
    "check_strong_instance",
    "identity_transform",
    "randomized_suite",
    "round_trip",
]
