"""Directed hyperedges: the shift cycles amplitude around each ordered edge.

With identity coins a basis state just rotates around its edge and returns
after as many steps as the edge has vertices.
"""

import numpy as np

from hyperwalk import Hypergraph, build_directed_shift, build_hyperwalk, run

h = Hypergraph(5, ((0, 2, 4, 1), (3, 1)), directed=True)
for e, s in build_directed_shift(h).items():
    order = len(h.edges[e])
    print(f"edge {h.edges[e]}: S^{order} = I ->", np.array_equal(np.linalg.matrix_power(s, order), np.eye(order)))

w = build_hyperwalk(h, coins="identity", shifts="directed")
traj = run(w, w.basis_state((0, 0)), 4)
print("\nposition of the walker started at |0, e0>:", [int(np.argmax(p)) for p in traj.distributions()])

# with Grover coins the two edges exchange amplitude at vertex 1
w = build_hyperwalk(h, coins="grover", shifts="directed")
np.set_printoptions(precision=3, suppress=True)
print("\nGrover coins:")
print(run(w, w.basis_state((0, 0)), 6).distributions())
