"""Small unitary building blocks: coin presets, reflections, cyclic shifts."""

from __future__ import annotations

from typing import Sequence

import numpy as np

PRESETS = ("grover", "hadamard", "dft", "identity")


def identity(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex)


def grover(d: int) -> np.ndarray:
    """``I - 2|u><u|`` with ``u`` the uniform unit vector.

    This is the sign used for the hypergraph Grover walk; it is the negative
    of the more common ``2|u><u| - I``.
    """
    return np.eye(d, dtype=complex) - 2.0 / d * np.ones((d, d), dtype=complex)


def hadamard(d: int = 2) -> np.ndarray:
    if d != 2:
        raise ValueError("the Hadamard coin is two-dimensional")
    return np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def dft(d: int) -> np.ndarray:
    k = np.arange(d)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


def reflection(vec) -> np.ndarray:
    """``2|d><d| - I`` for a unit vector ``d``."""
    d = np.asarray(vec, dtype=complex).reshape(-1)
    return 2.0 * np.outer(d, d.conj()) - np.eye(d.size, dtype=complex)


def scattering_coin(r: complex, t: complex, d: int) -> np.ndarray:
    """Coin with reflection amplitude ``r`` on the diagonal and ``t`` elsewhere.

    Grover scattering is ``r = 2/d - 1``, ``t = 2/d``.
    """
    return (r - t) * np.eye(d, dtype=complex) + t * np.ones((d, d), dtype=complex)


def directed_shift(sequence: Sequence[int]) -> np.ndarray:
    """Cyclic shift ``|v_i> -> |v_{i+1}>`` along an ordered edge.

    Rows and columns follow ascending vertex order, the order of the edge's
    incidence pairs in a hyperwalk basis.
    """
    seq = [int(v) for v in sequence]
    if len(set(seq)) != len(seq):
        raise ValueError(f"ordered edge {seq} repeats a vertex")
    pos = {v: k for k, v in enumerate(sorted(seq))}
    n = len(seq)
    m = np.zeros((n, n), dtype=complex)
    for i, v in enumerate(seq):
        m[pos[seq[(i + 1) % n]], pos[v]] = 1.0
    return m


def resolve(spec, d: int) -> np.ndarray:
    """Turn a preset name or explicit matrix into a ``d x d`` complex array."""
    if isinstance(spec, str):
        name = spec.lower()
        if name == "grover":
            return grover(d)
        if name == "hadamard":
            return hadamard(d)
        if name in ("dft", "fourier"):
            return dft(d)
        if name == "identity":
            return identity(d)
        raise ValueError(f"unknown operator preset {spec!r}; expected one of {PRESETS}")
    m = np.array(spec, dtype=complex)
    if m.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} matrix, got shape {m.shape}")
    return m
