"""Discrete-time quantum walks on graphs and hypergraphs, and the transforms between them."""

from .equivalence import (
    EquivalenceReport,
    SuiteReport,
    check_instance,
    check_strong_instance,
    randomized_suite,
    round_trip,
)
from .generators import example_hypergraph
from .state import (
    BasisMap,
    BasisMismatch,
    MeasurementMap,
    NormalizationError,
    StateVector,
    UnitarityError,
    UnitaryOperator,
    apply,
    certify_unitary,
    get_tolerance,
    measure_vertices,
    random_state,
    random_unitary,
    set_tolerance,
)
from .structures import (
    Graph,
    Hypergraph,
    StructureError,
    Tessellation,
    TessellationError,
    ValidationReport,
    clique_check,
    incidence_pairs,
    validate_tessellation,
)
from .transforms import (
    HYPERWALK_TO_SZEGEDY,
    TRANSFORMS,
    SizeReport,
    StepMap,
    TransformError,
    TransformResult,
    apply_chain,
    size_of,
    transform,
    transform_chain_size,
)
from .walks import (
    Stage,
    Trajectory,
    WalkError,
    WalkInstance,
    build_coined_line,
    build_directed_shift,
    build_hyperwalk,
    build_scattering,
    build_staggered,
    build_szegedy,
    run,
    simulate_distributions,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMap",
    "BasisMismatch",
    "EquivalenceReport",
    "Graph",
    "HYPERWALK_TO_SZEGEDY",
    "Hypergraph",
    "MeasurementMap",
    "NormalizationError",
    "SizeReport",
    "Stage",
    "StateVector",
    "StepMap",
    "StructureError",
    "SuiteReport",
    "TRANSFORMS",
    "Tessellation",
    "TessellationError",
    "Trajectory",
    "TransformError",
    "TransformResult",
    "UnitarityError",
    "UnitaryOperator",
    "ValidationReport",
    "WalkError",
    "WalkInstance",
    "apply",
    "apply_chain",
    "build_coined_line",
    "build_directed_shift",
    "build_hyperwalk",
    "build_scattering",
    "build_staggered",
    "build_szegedy",
    "certify_unitary",
    "check_instance",
    "check_strong_instance",
    "clique_check",
    "example_hypergraph",
    "get_tolerance",
    "incidence_pairs",
    "measure_vertices",
    "random_state",
    "random_unitary",
    "randomized_suite",
    "round_trip",
    "run",
    "set_tolerance",
    "simulate_distributions",
    "size_of",
    "transform",
    "transform_chain_size",
    "validate_tessellation",
]
