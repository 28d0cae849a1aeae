"""Seeded randomized equivalence suites for every construction.

Each instance draws its structure, unitaries and initial state from its own
child of the suite seed, so a failing instance can be replayed alone.
"""

from hyperwalk import randomized_suite

suites = [
    ("coined_from_hyperwalk", {}),
    ("staggered_from_generalized_hyperwalk", {}),
    ("generalized_coined_from_staggered", {"cycles": 5}),
    ("coined_from_generalized_coined", {"n_max": 12}),
    ("generalized_hyperwalk_from_staggered", {"tol": 1e-12}),
    ("szegedy_round_trip", {}),
    ("coined_round_trip", {}),
]

for name, kw in suites:
    rep = randomized_suite(name, 20, seed=2024, **kw)
    d = rep.to_dict()
    print(f"{name:<40} {d['passed']:>2}/{d['instances']}  worst {d['worst_deviation']:.1e}  strong={d['strong']}")
