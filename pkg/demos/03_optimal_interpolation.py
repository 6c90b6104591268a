"""How the strongest outer bound distributes insertions between segments.

For a deletion rate strictly between two multiples of 1/q, the adversary
splits each codeword in two, reduces the alphabet by d symbols on the
first segment and d+1 on the second, and routes the insertion budget
between them.  Every split yields a valid bound; the optimiser finds the
one that minimises it.

Run:  python demos/03_optimal_interpolation.py
"""

import insdel_bounds as ib

q, gamma, delta = 5, 0.5, 0.3

setup = ib.interpolation_setup(q, delta)
print(f"band decomposition at q={q}, delta={delta}:")
print(f"  d={setup.d}, alpha={setup.alpha}")
print(f"  segment weights n0={setup.n0_weight}, n1={setup.n1_weight}")

# ---------------------------------------------------------------------------
# Sweep the admissible splits by hand: a shallow valley whose minimum the
# optimiser must locate.
print(f"\nbound value as the first segment's share gamma0 varies (gamma={gamma}):")
hi = gamma / setup.n0_weight
for k in range(0, 11):
    g0 = k / 10 * hi
    value = ib.interpolated_bound_at_split(q, gamma, delta, g0)
    print(f"  gamma0={g0:.4f}  bound={value:.6f}")

split = ib.optimal_gamma0(q, gamma, delta)
print(f"\noptimal split (method: {split.method}):")
print(f"  gamma0={split.gamma0:.12f}, gamma1={split.gamma1:.12f}")
print(f"  bound={split.objective:.12f}")

# The optimum balances the two segments' marginal costs:
lhs = (1 + 1 / split.gamma1) * (1 - 1 / (q - setup.d - 1))
rhs = (1 + 1 / split.gamma0) * (1 - 1 / (q - setup.d))
print(f"  stationarity residual = {abs(lhs - rhs):.2e}")

# ---------------------------------------------------------------------------
# The combined bound takes the minimum of everything applicable and
# remembers which bound won where.
print("\nwhich outer bound is tightest where (q=5):")
for g, d in ((0.5, 0.0), (0.0, 0.3), (0.5, 0.3), (2.0, 0.1), (1.5, 0.45)):
    parts = ib.outer_bound_breakdown(q, g, d)
    best = ib.combined_outer_bound(q, g, d)
    detail = ", ".join(f"{name}={v.rate:.4f}" for name, v in parts.items())
    print(f"  ({g:.1f}, {d:.2f}): winner {best.source} at {best.rate:.4f}   [{detail}]")
