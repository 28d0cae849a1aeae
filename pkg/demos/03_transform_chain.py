"""Carry a generalized hyperwalk all the way to a Szegedy walk.

hyperwalk -> staggered -> generalized coined -> coined -> Szegedy.
Every link preserves the vertex distribution at matching step counts, at
the cost of a bigger graph. The counting formulas predict each size
without building any matrix; materializing the chain confirms them.
"""

import numpy as np

from hyperwalk import HYPERWALK_TO_SZEGEDY, apply_chain, build_hyperwalk, check_instance, example_hypergraph, random_state, transform_chain_size

h = example_hypergraph()
w = build_hyperwalk(h, schedule=[("grover", "grover"), ("dft", "grover")])

print("predicted sizes:")
for s in transform_chain_size(w, HYPERWALK_TO_SZEGEDY):
    print(f"  {s.model:<18} vertices {s.vertices:>4}  basis {s.basis_size:>4}  operators {s.operators}")

rng = np.random.default_rng(1)
print("\nlink-by-link check, 8 source steps each:")
src = w
for r in apply_chain(w, HYPERWALK_TO_SZEGEDY):
    rep = check_instance(src, random_state(src.basis, rng), r, 8)
    print(f"  {r.name:<38} step map n -> {r.step_map.scale}n   max deviation {rep.max_deviation:.1e}  {rep.verdict}")
    src = r.target
