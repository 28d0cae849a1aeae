"""Basis bookkeeping, state vectors, certified unitaries and vertex measurement."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

_DEFAULT_TOL = 1e-10
_tolerance = float(os.environ.get("HYPERWALK_TOL", _DEFAULT_TOL))


def get_tolerance() -> float:
    """Unitarity / normalisation tolerance (max-entry norm)."""
    return _tolerance


def set_tolerance(tol: float) -> float:
    """Set the global tolerance and return the previous value."""
    global _tolerance
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    old, _tolerance = _tolerance, float(tol)
    return old


class BasisMismatch(ValueError):
    pass


class UnitarityError(ValueError):
    def __init__(self, message: str, deviation: float = float("nan")):
        super().__init__(message)
        self.deviation = deviation


class NormalizationError(ValueError):
    pass


class BasisMap:
    """Ordered, duplicate-free list of basis labels with reverse lookup."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[Hashable]):
        self.labels = tuple(labels)
        self._index = {lab: k for k, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("basis labels must be unique")

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisMap) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"BasisMap(<{len(self)} labels>)"

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} is not in the basis") from None

    def label(self, k: int):
        return self.labels[k]

    def indices(self, labels: Iterable[Hashable]) -> list[int]:
        return [self.index(lab) for lab in labels]


def _same_basis(a: BasisMap, b: BasisMap) -> bool:
    return a is b or a == b


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray
    basis: BasisMap

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != len(self.basis):
            raise BasisMismatch(
                f"state has {amps.shape[0]} amplitudes but the basis has {len(self.basis)} labels"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis_state(cls, basis: BasisMap, label) -> "StateVector":
        amps = np.zeros(len(basis), dtype=complex)
        amps[basis.index(label)] = 1.0
        return cls(amps, basis)

    @classmethod
    def from_labels(cls, basis: BasisMap, weights: dict) -> "StateVector":
        """Normalised superposition ``sum weights[label] |label>``."""
        amps = np.zeros(len(basis), dtype=complex)
        for lab, w in weights.items():
            amps[basis.index(lab)] += w
        nrm = np.linalg.norm(amps)
        if nrm == 0:
            raise NormalizationError("zero vector cannot be normalised")
        return cls(amps / nrm, basis)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol: float | None = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return abs(self.norm() - 1.0) <= tol

    def amplitude(self, label) -> complex:
        return complex(self.amplitudes[self.basis.index(label)])

    def __len__(self) -> int:
        return len(self.amplitudes)


def unitarity_deviation(matrix: np.ndarray) -> float:
    """``max |(U^dagger U - I)_ij|``."""
    m = np.asarray(matrix)
    gram = m.conj().T @ m
    gram[np.diag_indices_from(gram)] -= 1.0
    return float(np.max(np.abs(gram))) if gram.size else 0.0


def _block_ids(n: int, blocks: Sequence[Sequence[int]]) -> np.ndarray:
    ids = np.full(n, -1, dtype=int)
    for b, members in enumerate(blocks):
        for k in members:
            if ids[k] != -1:
                raise ValueError(f"index {k} appears in two blocks")
            ids[k] = b
    loose = np.flatnonzero(ids == -1)
    ids[loose] = len(blocks) + np.arange(loose.size)
    return ids


class UnitaryOperator:
    """Dense unitary matrix on a basis, certified at construction.

    ``blocks`` optionally lists index sets on which the operator is block
    diagonal; any nonzero entry coupling two blocks is rejected.
    """

    __slots__ = ("matrix", "basis", "blocks", "deviation")

    def __init__(self, matrix, basis: BasisMap | None = None, blocks=None, tol: float | None = None):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator must be a square matrix, got shape {m.shape}")
        if basis is None:
            basis = BasisMap(range(m.shape[0]))
        if len(basis) != m.shape[0]:
            raise BasisMismatch(f"{m.shape[0]}x{m.shape[0]} operator on a basis of {len(basis)}")
        tol = get_tolerance() if tol is None else tol
        dev = unitarity_deviation(m)
        if not dev <= tol:
            raise UnitarityError(f"matrix is not unitary: max |U^dagger U - I| = {dev:.3e}", dev)
        if blocks is not None:
            blocks = tuple(tuple(int(k) for k in b) for b in blocks)
            ids = _block_ids(m.shape[0], blocks)
            coupling = ids[:, None] != ids[None, :]
            if np.any(m[coupling] != 0):
                raise ValueError("operator couples distinct blocks")
        m.setflags(write=False)
        self.matrix = m
        self.basis = basis
        self.blocks = blocks
        self.deviation = dev

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other: "UnitaryOperator") -> "UnitaryOperator":
        if not isinstance(other, UnitaryOperator):
            return NotImplemented
        if not _same_basis(self.basis, other.basis):
            raise BasisMismatch("cannot compose operators on different bases")
        return UnitaryOperator(self.matrix @ other.matrix, self.basis, tol=10 * get_tolerance())

    def dagger(self) -> "UnitaryOperator":
        return UnitaryOperator(self.matrix.conj().T, self.basis, self.blocks)

    def __repr__(self) -> str:
        return f"UnitaryOperator(dim={self.dim}, deviation={self.deviation:.1e})"


def certify_unitary(matrix, basis: BasisMap | None = None, blocks=None, tol=None) -> UnitaryOperator:
    """Wrap ``matrix`` as a :class:`UnitaryOperator` or raise :class:`UnitarityError`."""
    return UnitaryOperator(matrix, basis, blocks, tol)


def apply(u: UnitaryOperator, s: StateVector) -> StateVector:
    if not _same_basis(u.basis, s.basis):
        raise BasisMismatch("operator and state live on different bases")
    return StateVector(u.matrix @ s.amplitudes, s.basis)


@dataclass(frozen=True, eq=False)
class MeasurementMap:
    """Assignment of basis indices to vertices; ``-1`` marks an unassigned index."""

    assignment: np.ndarray
    vertex_count: int

    def __post_init__(self):
        a = np.array(self.assignment, dtype=int).reshape(-1)
        if a.size and (a.min() < -1 or a.max() >= self.vertex_count):
            raise ValueError("measurement assigns an index to a nonexistent vertex")
        a.setflags(write=False)
        object.__setattr__(self, "assignment", a)

    @classmethod
    def from_labels(
        cls, basis: BasisMap, vertex_of: Callable[[Hashable], int | None], vertex_count: int
    ) -> "MeasurementMap":
        """Build from a label -> vertex function; ``None`` leaves a label unassigned."""
        out = []
        for lab in basis:
            v = vertex_of(lab)
            out.append(-1 if v is None else v)
        return cls(np.array(out, dtype=int), vertex_count)

    @property
    def is_total(self) -> bool:
        return bool(np.all(self.assignment >= 0))

    def __len__(self) -> int:
        return len(self.assignment)


def measure_vertices(s: StateVector, m: MeasurementMap, strict: bool = False) -> np.ndarray:
    """Probability of each vertex: squared amplitudes summed over assigned indices."""
    if len(m) != len(s):
        raise BasisMismatch("measurement map and state differ in dimension")
    if strict and not s.is_normalized():
        raise NormalizationError(f"state norm {s.norm():.3e} differs from 1")
    mask = m.assignment >= 0
    probs = np.abs(s.amplitudes[mask]) ** 2
    return np.bincount(m.assignment[mask], weights=probs, minlength=m.vertex_count)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factors of a complex Gaussian matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_state(basis: BasisMap, rng: np.random.Generator) -> StateVector:
    n = len(basis)
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return StateVector(z / np.linalg.norm(z), basis)
