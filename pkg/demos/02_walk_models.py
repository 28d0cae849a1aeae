"""The four classical walk models side by side.

Each builder returns a WalkInstance: a basis, a cyclic schedule of step
operators, and the vertex measurement of the model.
"""

import numpy as np

from hyperwalk import Graph, StateVector, Tessellation, build_coined_line, build_scattering, build_staggered, build_szegedy, run

np.set_printoptions(precision=3, suppress=True)

# coined walk on a cycle of 9 sites with the Hadamard coin
line = build_coined_line("hadamard", 9)
psi = (line.basis_state((0, 4)).amplitudes + 1j * line.basis_state((1, 4)).amplitudes) / np.sqrt(2)
traj = run(line, StateVector(psi, line.basis), 4)
print("Hadamard line, symmetric start at 4, after 4 steps:")
print(traj.distributions()[-1])

# scattering walk on a non-regular graph: per-vertex (r, t) with Grover values
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
rt = {v: (2 / g.degree(v) - 1, 2 / g.degree(v)) for v in range(5)}
scat = build_scattering(g, rt=rt)
traj = run(scat, scat.basis_state((3, 4)), 6)
print("\nscattering walk from arc (3,4):")
print(traj.distributions())

# Szegedy walk: two reflections on the bipartite double cover
sz = build_szegedy(g)
traj = run(sz, sz.basis_state((0, 1)), 4)
print("\nSzegedy walk, 2N =", sz.params["bipartite_vertices"], "bipartite vertices")
print(traj.distributions())

# staggered walk with two tessellations of the same graph
t1 = Tessellation(((0, 1, 2), (3, 4)), 5)
t2 = Tessellation(((0,), (1,), (2, 3), (4,)), 5)
st = build_staggered(g, [t1, t2])
traj = run(st, st.basis_state(0), 6)
print("\nstaggered walk, cycle length", st.cycle_length, "- boundaries at", traj.cycle_boundaries)
print(traj.distributions())
