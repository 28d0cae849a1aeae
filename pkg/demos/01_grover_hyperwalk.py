"""Grover walk on a small hypergraph.

Four vertices A, B, C, D and three hyperedges a = {A, B, C}, b = {A, B},
c = {C, D}. The walker lives on incidence pairs |v, e>, so the state space
has one dimension per (vertex, edge) membership: 3 + 2 + 2 = 7.
"""

import numpy as np

from hyperwalk import StateVector, build_hyperwalk, example_hypergraph, run

h = example_hypergraph()
w = build_hyperwalk(h)  # Grover coin at every vertex, Grover shift on every edge
print("basis:", [f"|{h.labels[v]},{h.edge_name(e)}>" for v, e in w.basis])

# start in an equal superposition of A's two incidence pairs; all mass sits on A
psi0 = StateVector.from_labels(w.basis, {(0, 0): 1, (0, 1): 1})
traj = run(w, psi0, 8)

np.set_printoptions(precision=4, suppress=True)
print("\nstep   P(A)    P(B)    P(C)    P(D)")
for n, p in enumerate(traj.distributions()):
    print(f"{n:>4}  " + "  ".join(f"{x:.4f}" for x in p))

# the step operator is U^E U^V; both factors are block diagonal
uv, ue = w.stages[0].factors
print("\nU^V blocks (one per vertex):", [len(b) for b in uv.blocks])
print("U^E blocks (one per edge):  ", [len(b) for b in ue.blocks])
print("unitarity deviation of U:", w.stages[0].operator.deviation)
