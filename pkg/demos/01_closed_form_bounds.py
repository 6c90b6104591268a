"""Tour of the closed-form rate bounds.

Every bound answers the same question: over a q-ary alphabet, what
communication rate can a code still achieve when an adversary may insert
``gamma * n`` symbols and delete ``delta * n`` symbols from every
length-n codeword, if we only ask the decoder for a short list?

Run:  python demos/01_closed_form_bounds.py
"""

import insdel_bounds as ib

q = 5

# ---------------------------------------------------------------------------
# The q-ary entropy function drives every counting exponent.  It peaks at
# exactly 1 when x = 1 - 1/q, the fraction of positions a uniform random
# word "wastes" on its most frequent symbol.
print("q-ary entropy H_5:")
for x in (0.0, 0.2, 1 - 1 / q, 1.0):
    print(f"  H_5({x:.2f}) = {ib.q_ary_entropy(x, q):.6f}")

# ---------------------------------------------------------------------------
# Insertion-only adversary: rate dies exactly at gamma = q - 1.
print("\ninsertion-only bound, q=5:")
for gamma in (0.0, 1.0, 2.0, 4.0):
    v = ib.insertion_only_bound(q, gamma)
    print(f"  gamma={gamma:.1f}  rate<={v.rate:.6f}  feasible={v.feasible}")

# ---------------------------------------------------------------------------
# Deletion-only adversary: at delta = d/q the adversary erases the d least
# frequent symbols, collapsing codewords onto a (q-d)-ary alphabet; between
# those breakpoints the bound time-shares linearly.
print("\ndeletion-only piecewise bound, q=5:")
for delta in (0.0, 0.2, 0.3, 0.4, 0.8):
    v = ib.deletion_only_piecewise_bound(q, delta)
    print(f"  delta={delta:.1f}  rate<={v.rate:.6f}  feasible={v.feasible}")

# ---------------------------------------------------------------------------
# One "spoke" = the bound at deletion rate exactly d/q, as a function of
# the insertion rate rescaled to the shortened block.
print("\nspoke d=1 (delta=0.2), q=5:")
for gp in (0.0, 1.0, 2.0, 3.0):
    v = ib.spoke_bound(q, 1, gp)
    print(f"  gamma'={gp:.1f}  rate<={v.rate:.6f}")
print("  the spoke hits zero at gamma' = q - q*delta - 1 = 3, a polygon vertex")

# ---------------------------------------------------------------------------
# The spokes extend to a convex surface in (gamma, delta); its Hessian is
# positive semidefinite, which is what licenses interpolating between
# neighbouring spokes.
mat = ib.spoke_surface_hessian(q, 0.5, 0.2)
trace = mat[0, 0] + mat[1, 1]
det = mat[0, 0] * mat[1, 1] - mat[0, 1] ** 2
print("\nconvexity certificate at (gamma, delta) = (0.5, 0.2):")
print(f"  trace={trace:.4f} >= 0, det={det:.4f} >= 0")

# ---------------------------------------------------------------------------
# The random-coding inner bound: rates below it are achievable with high
# probability, so it must run under every outer bound.
print("\ninner vs combined outer, q=5:")
for gamma, delta in ((0.0, 0.2), (0.4, 0.2), (1.0, 0.3)):
    lo = ib.inner_bound(q, gamma, delta).rate
    hi = ib.combined_outer_bound(q, gamma, delta).rate
    print(f"  ({gamma:.1f}, {delta:.1f})  achievable>={lo:.4f}  impossible>{hi:.4f}")
