"""The resilience polygon and the ray-scaling outer bound.

The set of error-rate pairs (gamma, delta) at which ANY positive-rate
list-decodable q-ary code family exists is a concave polygon.  Geometry
on it runs in exact rational arithmetic, so edge cases are decided
exactly rather than by floating-point luck.

Run:  python demos/02_resilience_polygon.py
"""

import insdel_bounds as ib

q = 5
poly = ib.build_polygon(q)

print(f"resilience polygon for q={q} ({len(poly.vertices)} vertices):")
for g, d in poly.vertices:
    print(f"  (gamma, delta) = ({g}, {d})")

# ---------------------------------------------------------------------------
# Membership follows a half-open convention: the interior and the two axis
# segments at the origin are resilient, the outer chain itself is not.
print("\nmembership:")
for point in ((0.0, 0.0), (0.5, 0.3), (0.4, 0.6), (4.0, 0.0), (3.0, 0.5)):
    print(f"  {point}: {'resilient' if poly.contains(point) else 'not resilient'}")

# ---------------------------------------------------------------------------
# Scaling a point radially until it exits the polygon measures how much
# "room" is left; the scale factor alpha caps the rate at 1 - 1/alpha.
print("\nray scaling and the linear outer bound:")
for point in ((0.2, 0.12), (0.5, 0.3), (1.0, 0.45)):
    result = poly.scaling_alpha(point)
    bound = ib.linear_outer_bound(q, *point)
    print(
        f"  {point}: alpha={result.alpha:.4f}, exits at "
        f"({result.boundary_point[0]:.4f}, {result.boundary_point[1]:.4f}), "
        f"rate <= {bound.rate:.4f}"
    )

# ---------------------------------------------------------------------------
# The strongest outer bound in this package vanishes exactly on the chain.
print("\ninterpolated bound along the chain (should all be ~0):")
for (g1, d1), (g2, d2) in poly.chain_segments():
    mid = (float(g1 + g2) / 2, float(d1 + d2) / 2)
    rate = ib.interpolated_outer_bound(q, *mid).rate
    print(f"  chain midpoint ({mid[0]:.3f}, {mid[1]:.3f}): rate = {rate:.2e}")
