import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from hyperwalk import operators as ops
from hyperwalk.generators import clique_tessellation, random_graph, random_hyperwalk
from hyperwalk.state import NormalizationError, StateVector, UnitarityError, random_state, random_unitary
from hyperwalk.structures import Graph, Hypergraph, Tessellation, TessellationError
from hyperwalk.walks import (
    WalkError,
    bipartite_double,
    build_coined_line,
    build_directed_shift,
    build_hyperwalk,
    build_scattering,
    build_staggered,
    build_szegedy,
    run,
    simulate_distributions,
)


# ------------------------------------------------------------------ line


def line_oracle(coin, n, psi, steps):
    """Dictionary simulation of |c, x> -> sum_c' C[c', c] |c', x -/+ 1>."""
    amp = {(c, x): psi[c * n + x] for c in (0, 1) for x in range(n)}
    out = [amp]
    for _ in range(steps):
        nxt = {k: 0j for k in amp}
        for (c, x), a in amp.items():
            for c2 in (0, 1):
                x2 = (x - 1) % n if c2 == 0 else (x + 1) % n
                nxt[(c2, x2)] += coin[c2, c] * a
        amp = nxt
        out.append(amp)
    return [np.array([abs(a[(0, x)]) ** 2 + abs(a[(1, x)]) ** 2 for x in range(n)]) for a in out]


def test_identity_line_is_deterministic():
    w = build_coined_line("identity", 7)
    dist = simulate_distributions(w, w.basis_state((0, 5)), 3)
    assert_array_equal(np.argmax(dist, axis=1), [5, 4, 3, 2])
    assert_array_equal(dist.max(axis=1), np.ones(4))


def test_hadamard_line_one_step():
    w = build_coined_line("hadamard", 5)
    dist = simulate_distributions(w, w.basis_state((1, 2)), 1)
    assert_allclose(dist[1], [0, 0.5, 0, 0.5, 0], atol=1e-15)


def test_line_matches_oracle(rng):
    for n in (2, 3, 6):
        coin = random_unitary(2, rng)
        w = build_coined_line(coin, n)
        psi = random_state(w.basis, rng)
        got = simulate_distributions(w, psi, 12)
        assert_allclose(got, line_oracle(coin, n, psi.amplitudes, 12), atol=1e-13)


def test_line_needs_two_positions():
    with pytest.raises(WalkError):
        build_coined_line("hadamard", 1)


# ------------------------------------------------------------------ scattering


def scattering_oracle(g, r, t):
    """U|i,j> = r|j,i> + t sum_{v ~ j, v != i} |j,v> on the sorted arc basis."""
    arcs = g.arcs()
    idx = {a: k for k, a in enumerate(arcs)}
    u = np.zeros((len(arcs), len(arcs)), dtype=complex)
    for i, j in arcs:
        u[idx[(j, i)], idx[(i, j)]] += r
        for v in g.neighbors(j):
            if v != i:
                u[idx[(j, v)], idx[(i, j)]] += t
    return u


def test_scattering_grover_matches_formula(rng):
    for _ in range(20):
        g = random_graph(rng, 7, 10)
        degs = {g.degree(v) for v in range(g.vertex_count) if g.degree(v)}
        if len(degs) != 1:
            continue
        d = degs.pop()
        r, t = 2 / d - 1, 2 / d
        w = build_scattering(g, rt=(r, t))
        assert_allclose(w.stages[0].operator.matrix, scattering_oracle(g, r, t), atol=1e-14)


def test_scattering_per_vertex_rt():
    # path 0 - 1 - 2 - 3 plus 1 - 3 chord; degrees 1, 3, 2, 2
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    rt = {d: (2 / d - 1, 2 / d) for d in (1, 2, 3)}
    w = build_scattering(g, rt={v: rt[g.degree(v)] for v in range(4)})
    u = w.stages[0].operator.matrix
    arcs = g.arcs()
    idx = {a: k for k, a in enumerate(arcs)}
    for i, j in arcs:
        d = g.degree(j)
        col = u[:, idx[(i, j)]]
        assert col[idx[(j, i)]] == pytest.approx(2 / d - 1)
        for v in g.neighbors(j):
            if v != i:
                assert col[idx[(j, v)]] == pytest.approx(2 / d)


def test_three_regular_grover_block():
    # K4 is 3-regular: coin block at every vertex is (r - t) I + t J with r = -1/3, t = 2/3
    g = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    w = build_scattering(g, rt=(-1 / 3, 2 / 3))
    c = w.params["coins"][0].matrix
    expected = np.array([[-1, 2, 2], [2, -1, 2], [2, 2, -1]]) / 3
    for v in range(4):
        idx = w.basis.indices([(u, v) for u in g.neighbors(v)])
        assert_allclose(c[np.ix_(idx, idx)], expected, atol=1e-15)


def test_regular_coin_is_c0_tensor_identity(rng):
    # on a cycle, grouping arcs by coin vertex turns C into C0 (x) I_N
    n = 5
    g = Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])
    c0 = random_unitary(2, rng)
    w = build_scattering(g, c0)
    order = [(u, v) for v in range(n) for u in g.neighbors(v)]
    idx = w.basis.indices(order)
    c = w.params["coins"][0].matrix[np.ix_(idx, idx)]
    assert_allclose(c, np.kron(np.eye(n), c0), atol=1e-15)


def test_r_one_acts_as_sigma_x():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    w = build_scattering(g, rt=(1, 0))
    u = w.stages[0].operator.matrix
    for i, j in g.sorted_edges():
        idx = w.basis.indices([(i, j), (j, i)])
        assert_array_equal(u[np.ix_(idx, idx)], [[0, 1], [1, 0]])
    assert_array_equal(u @ u, np.eye(len(w.basis)))


def test_scattering_rejects_non_unitary_rt():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(UnitarityError):
        build_scattering(g, rt=(0.5, 0.5))


def test_generalized_coined_cycles_through_schedule():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    w = build_scattering(g, schedule=["grover", "identity"])
    assert w.cycle_length == 2
    assert w.step_operator(3) is w.stages[1].operator


# ------------------------------------------------------------------ Szegedy


def szegedy_oracle(g, amps):
    """U1, U2 in the full N^2 space from |d_v>, then restricted to arcs."""
    n = g.vertex_count
    u1 = -np.eye(n * n, dtype=complex)
    u2 = -np.eye(n * n, dtype=complex)
    for v in range(n):
        if not g.degree(v):
            continue
        phi = np.zeros(n, dtype=complex)
        phi[list(g.neighbors(v))] = amps[v]
        ev = np.eye(n)[v]
        d1, d2 = np.kron(ev, phi), np.kron(phi, ev)
        u1 += 2 * np.outer(d1, d1.conj())
        u2 += 2 * np.outer(d2, d2.conj())
    keep = [x * n + y for x, y in g.arcs()]
    return u1[np.ix_(keep, keep)], u2[np.ix_(keep, keep)]


def test_szegedy_matches_full_space_oracle(rng):
    for _ in range(10):
        g = random_graph(rng, 6, 8)
        amps = {}
        for v in range(g.vertex_count):
            if g.degree(v):
                z = rng.standard_normal(g.degree(v)) + 1j * rng.standard_normal(g.degree(v))
                amps[v] = z / np.linalg.norm(z)
        w = build_szegedy(g, amps)
        o1, o2 = szegedy_oracle(g, amps)
        assert_allclose(w.stages[0].operator.matrix, o1, atol=1e-14)
        assert_allclose(w.stages[1].operator.matrix, o2, atol=1e-14)


def test_szegedy_reflection_spectra():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    w = build_szegedy(g)
    for st in w.stages:
        u = st.operator.matrix
        assert_allclose(u @ u, np.eye(len(w.basis)), atol=1e-14)
        assert_allclose(u, u.conj().T, atol=1e-15)
        # one +1 eigenvector per vertex of positive degree
        assert np.sum(np.linalg.eigvalsh(u) > 0) == 4


def test_szegedy_measurement_alternates_registers():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    w = build_szegedy(g)
    psi = w.basis_state((0, 1))
    assert_array_equal(w.distribution(psi, 0), [1, 0, 0])
    assert_array_equal(w.distribution(psi, 1), [0, 1, 0])
    assert w.params["bipartite_vertices"] == 6


def test_szegedy_rejects_unnormalized_amplitudes():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(NormalizationError):
        build_szegedy(g, {0: [0.5], 1: [1.0]})


def test_bipartite_double():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    b = bipartite_double(g)
    assert b.vertex_count == 6
    assert b.sorted_edges() == [(0, 4), (1, 3), (1, 5), (2, 4)]


# ------------------------------------------------------------------ staggered


def test_staggered_blocks_match_definition():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    t = Tessellation(((0, 1, 2), (3,)), 4)
    a = np.array([0.6, 0.8j, 0.0, 1.0])
    w = build_staggered(g, [t], [a])
    expected = -np.eye(4, dtype=complex)
    for poly in t.polygons:
        d = np.zeros(4, dtype=complex)
        d[list(poly)] = a[list(poly)]
        expected += 2 * np.outer(d, d.conj())
    assert_allclose(w.stages[0].operator.matrix, expected, atol=1e-15)


def test_staggered_rejects_bad_tessellation():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(TessellationError):
        build_staggered(g, [Tessellation(((0, 1, 2),), 3)])


def test_staggered_singletons_give_identity(rng):
    g = random_graph(rng, 6, 6)
    t = Tessellation(tuple((v,) for v in range(g.vertex_count)), g.vertex_count)
    w = build_staggered(g, [t])
    # each singleton contributes 2|v><v| - |v><v|
    assert_allclose(w.stages[0].operator.matrix, np.eye(g.vertex_count))


def test_staggered_custom_unitaries(rng):
    g = random_graph(rng, 8, 10)
    tess = [clique_tessellation(rng, g) for _ in range(2)]
    us = [[random_unitary(len(p), rng) for p in t.polygons] for t in tess]
    w = build_staggered(g, tess, unitaries=us)
    for st, t, blocks in zip(w.stages, tess, us):
        m = st.operator.matrix
        for p, b in zip(t.polygons, blocks):
            assert_allclose(m[np.ix_(p, p)], b)


# ------------------------------------------------------------------ hyperwalk


def hyperwalk_oracle(h):
    """Grover U^E U^V written straight from the incidence pairs."""
    pairs = [(v, e) for e in range(h.edge_count) for v in sorted(h.edges[e])]
    n = len(pairs)
    uv = np.eye(n, dtype=complex)
    ue = np.eye(n, dtype=complex)
    for a, (v, e) in enumerate(pairs):
        for b, (w, f) in enumerate(pairs):
            if v == w:
                uv[a, b] -= 2 / sum(1 for x in pairs if x[0] == v)
            if e == f:
                ue[a, b] -= 2 / len(h.edges[e])
    return ue @ uv


def test_grover_hyperwalk_matches_oracle(example_h, rng):
    w = build_hyperwalk(example_h)
    assert len(w.basis) == 7
    assert_allclose(w.stages[0].operator.matrix, hyperwalk_oracle(example_h), atol=1e-15)


def test_hyperwalk_superposition_on_one_vertex(example_h):
    # (|A,a> + |A,b>) / sqrt 2 puts all mass on A
    w = build_hyperwalk(example_h)
    psi = StateVector.from_labels(w.basis, {(0, 0): 1, (0, 1): 1})
    assert_allclose(w.distribution(psi, 0), [1, 0, 0, 0])


def test_two_regular_grover_block_is_negative_sigma_x():
    h = Hypergraph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    w = build_hyperwalk(h)
    assert len(w.basis) == 2 * h.edge_count
    ue = w.stages[0].factors[1].matrix
    for e in range(h.edge_count):
        idx = w.basis.indices([(v, e) for v in h.members(e)])
        assert np.max(np.abs(ue[np.ix_(idx, idx)] - [[0, -1], [-1, 0]])) <= 1e-15


def test_directed_shift_on_hyperwalk():
    h = Hypergraph(3, ((0, 1, 2),), directed=True)
    w = build_hyperwalk(h, coins="identity", shifts="directed")
    psi = w.basis_state((0, 0))
    traj = run(w, psi, 3)
    assert [int(np.argmax(traj.distributions()[k])) for k in range(4)] == [0, 1, 2, 0]
    assert_array_equal(build_directed_shift(h)[0], ops.directed_shift((0, 1, 2)))


def test_hyperwalk_key_lookup_by_label(example_h):
    w = build_hyperwalk(example_h, coins={"D": "identity", "default": "grover"}, shifts={"c": "identity", "default": "grover"})
    uv, ue = (f.matrix for f in w.stages[0].factors)
    k = w.basis.index((3, 2))
    assert uv[k, k] == 1
    idx = w.basis.indices([(2, 2), (3, 2)])
    assert_array_equal(ue[np.ix_(idx, idx)], np.eye(2))


def test_hyperwalk_missing_operator():
    h = Hypergraph(2, ((0, 1),))
    with pytest.raises(WalkError):
        build_hyperwalk(h, coins={0: "grover"})


# ------------------------------------------------------------------ running


def test_run_matches_matrix_power(rng):
    for _ in range(10):
        w = random_hyperwalk(rng, 5, 3)
        psi = random_state(w.basis, rng)
        traj = run(w, psi, 17)
        u = w.stages[0].operator.matrix
        assert_allclose(traj[17].amplitudes, np.linalg.matrix_power(u, 17) @ psi.amplitudes, atol=1e-12)


def test_run_schedule_and_boundaries(rng):
    w = random_hyperwalk(rng, 4, 3, schedule=3)
    psi = random_state(w.basis, rng)
    traj = run(w, psi, 7)
    assert traj.cycle_boundaries == [0, 3, 6]
    assert_allclose(traj[6].amplitudes, np.linalg.matrix_power(w.cycle_operator(), 2) @ psi.amplitudes, atol=1e-12)


def test_run_preserves_norm_and_total_probability(rng):
    w = random_hyperwalk(rng, 6, 4, schedule=2)
    traj = run(w, random_state(w.basis, rng), 25)
    for s in traj.states:
        assert s.is_normalized()
    assert_allclose(traj.distributions().sum(axis=1), 1, atol=1e-12)


def test_run_zero_steps_and_errors(rng):
    w = build_coined_line("hadamard", 3)
    psi = w.basis_state((0, 0))
    assert len(run(w, psi, 0)) == 1
    with pytest.raises(ValueError):
        run(w, psi, -1)


def test_norm_drift_over_long_runs(rng):
    w = random_hyperwalk(rng, 6, 4, schedule=2)
    traj = run(w, random_state(w.basis, rng), 1000)
    drift = [abs(s.norm() - 1) for s in traj.states]
    assert all(d <= max(n, 1) * 1e-12 for n, d in enumerate(drift))
