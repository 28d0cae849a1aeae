from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hyperwalk.equivalence import check_instance
from hyperwalk.generators import random_coined, random_staggered, random_szegedy
from hyperwalk.state import random_state
from hyperwalk.structures import Graph, Tessellation, validate_tessellation
from hyperwalk.transforms import (
    HYPERWALK_TO_SZEGEDY,
    StepMap,
    TransformError,
    apply_chain,
    coined_from_generalized_coined,
    coined_from_hyperwalk,
    coined_from_szegedy,
    generalized_coined_from_staggered,
    generalized_hyperwalk_from_staggered,
    hyperwalk_tessellations,
    size_of,
    staggered_from_generalized_hyperwalk,
    szegedy_from_coined,
    transform,
    transform_chain_size,
)
from hyperwalk.walks import build_coined_line, build_scattering, build_staggered, build_szegedy, coined_walk


def test_step_map_composition():
    a, b = StepMap(2, 1), StepMap(3, 0)
    for n in range(5):
        assert a.then(b)(n) == b(a(n))
    assert StepMap().is_identity
    with pytest.raises(ValueError):
        StepMap(0)


def test_chain_counts_from_formulas(grover_example):
    sizes = transform_chain_size(grover_example, HYPERWALK_TO_SZEGEDY)
    assert [s.vertices for s in sizes] == [4, 7, 21, 168, 336]
    assert sizes[2].operators == 8
    assert [s.model for s in sizes[1:]] == ["staggered", "scattering-coined", "scattering-coined", "szegedy"]


def test_chain_counts_match_materialized_chain(grover_example):
    predicted = transform_chain_size(grover_example, HYPERWALK_TO_SZEGEDY)[1:]
    built = [r.size for r in apply_chain(grover_example, HYPERWALK_TO_SZEGEDY)]
    assert built == predicted


def test_every_chain_link_is_equivalent(grover_example, rng):
    w = grover_example
    for r in apply_chain(w, HYPERWALK_TO_SZEGEDY):
        psi = random_state(w.basis, rng)
        assert check_instance(w, psi, r, 6).passed
        w = r.target


def test_chain_counts_reject_wrong_order(grover_example):
    with pytest.raises(TransformError):
        transform_chain_size(grover_example, ["szegedy_from_coined"])


def test_coined_from_hyperwalk_shape(example_h, grover_example):
    r = coined_from_hyperwalk(grover_example)
    # 4 vertices + 3 edges, every incidence pair twice
    assert r.target.structure.vertex_count == 7
    assert r.target.dim == 14
    assert r.step_map == StepMap(2, 0)
    assert r.target.cycle_length == 4


def test_hyperwalk_tessellations_are_valid(example_h):
    tv, te = hyperwalk_tessellations(example_h)
    assert tv.polygons == ((0, 3), (1, 4), (2, 5), (6,))
    assert te.polygons == ((0, 1, 2), (3, 4), (5, 6))
    assert validate_tessellation(tv).valid and validate_tessellation(te).valid


def test_staggered_from_hyperwalk_keeps_basis(grover_example):
    r = staggered_from_generalized_hyperwalk(grover_example)
    assert r.target.dim == grover_example.dim == 7
    assert r.target.cycle_length == 4


def test_generalized_coined_from_staggered_shape(rng):
    w = random_staggered(rng, 6, 3, min_vertices=3)
    r = generalized_coined_from_staggered(w)
    k = w.cycle_length
    polys = sum(len(t) for t in w.params["tessellations"])
    assert r.target.structure.vertex_count == w.dim + polys
    assert r.target.cycle_length == 2 * k
    assert r.target.dim == 2 * k * w.dim


def test_layered_coined_shape(rng):
    w = random_coined(rng, 5, 6, coins=3)
    r = coined_from_generalized_coined(w)
    assert r.target.cycle_length == 1
    assert r.target.structure.vertex_count == 3 * w.structure.vertex_count
    assert r.target.dim == 2 * 3 * w.dim


def test_layered_coined_single_coin_is_identity(rng):
    w = random_coined(rng, 5, 6, coins=1)
    r = coined_from_generalized_coined(w)
    assert r.target is w


def test_staggered_to_hyperwalk_target_is_one_hyperedge(rng):
    w = random_staggered(rng, 7, 3)
    r = generalized_hyperwalk_from_staggered(w)
    assert r.target.structure.edges == (tuple(range(w.dim)),)
    assert r.target.dim == w.dim
    assert r.step_map.is_identity


def test_szegedy_from_coined_reflections(rng):
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    w = build_scattering(g)
    r = szegedy_from_coined(w)
    c = w.params["coins"][0].matrix
    s = w.params["shift"].matrix
    assert_allclose(r.target.stages[0].operator.matrix, c)
    assert_allclose(r.target.stages[1].operator.matrix, s @ c @ s)


def test_coined_from_uniform_szegedy_has_one_coin(rng):
    w = random_szegedy(rng, 6, 7)
    r = coined_from_szegedy(w)
    assert r.target.cycle_length == 1


def test_coined_from_asymmetric_szegedy_is_generalized(rng):
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    base = build_szegedy(g)
    u1 = base.stages[0].operator.matrix
    u2 = base.stages[1].operator.matrix.copy()
    idx = base.basis.indices([(0, 1), (2, 1)])
    u2[np.ix_(idx, idx)] = u2[np.ix_(idx, idx)] @ np.diag([1, 1j])
    w = build_szegedy(g, reflections=(u1, u2))
    r = coined_from_szegedy(w)
    assert r.target.cycle_length == 2
    assert check_instance(w, random_state(w.basis, rng), r, 8).passed


def test_inapplicable_transforms():
    line = build_coined_line("hadamard", 4)
    with pytest.raises(TransformError):
        transform(line, "szegedy_from_coined")
    with pytest.raises(TransformError):
        transform(line, "no_such_transform")
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(TransformError):
        szegedy_from_coined(build_scattering(g, schedule=["grover", "identity"]))


def test_corrupted_target_fails(grover_example, rng):
    w = grover_example
    r = coined_from_hyperwalk(w)
    g = r.target.structure
    coins = [c.matrix.copy() for c in r.target.params["coins"]]
    # replace the coin at vertex A (degree 2) with the identity
    idx = r.target.basis.indices([(0, u) for u in g.neighbors(0)])
    coins[0][np.ix_(idx, idx)] = np.eye(len(idx))
    broken = replace(r, target=coined_walk(g, coins, 0))
    psi = random_state(w.basis, rng)
    assert check_instance(w, psi, r, 6).passed
    assert not check_instance(w, psi, broken, 6).passed


def test_size_of_models(grover_example):
    assert size_of(grover_example).vertices == 4
    assert size_of(build_coined_line("hadamard", 6)).vertices == 6
    g = Graph.from_edges(3, [(0, 1)])
    assert size_of(build_szegedy(g)).vertices == 6


def test_partition_with_missing_vertex_is_rejected():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    w = build_staggered(g, [Tessellation(((0, 1), (2,)), 3)])
    assert generalized_coined_from_staggered(w).target.cycle_length == 2
