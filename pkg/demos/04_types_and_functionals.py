"""
Tame types, weights, and transporting Breuil-Mezard functionals
===============================================================

For each tame discrete-series type the check below confirms that JL carries
the quaternionic type (twisted by a weight) to the GL2 side: to sigma - sigma^cr
for scalar types and to sigma for cuspidal ones.  A functional iota on the
GL2 side is then transported to iota_D = iota o JL.
"""

from modpjl import (
    CuspidalType,
    IotaFunctional,
    ScalarType,
    Weight,
    field_ctx,
    iota_transport,
    serre_weights,
    sigma_tame,
    span_rank,
    verify_thm42,
)
from modpjl.chars import weight_box

ctx = field_ctx(5, 1)

# %% the tame data attached to a scalar and a cuspidal type
print(sigma_tame(ctx, ScalarType(1)))
print(sigma_tame(ctx, CuspidalType(1)))

# %% check the compatibility for every weight in the box 0 <= a2 <= a1 <= p-1
for tau in (ScalarType(1), CuspidalType(1)):
    reports = [verify_thm42(ctx, tau, lam) for lam in weight_box(ctx)]
    print(tau, "all weights pass:", all(r.passed for r in reports), f"({len(reports)} weights)")
print("twisted example:", verify_thm42(ctx, CuspidalType(7), Weight(((0, 3, 1),))).passed)

# %% non-scalar tame types span the class functions at q = 5 (20 = q(q-1))
print("span rank at q=5:", span_rank(ctx))
print("span rank at q=3:", span_rank(field_ctx(3, 1)), "(every generator vanishes at diag(1,-1))")

# %% transport a functional that is 1 on the trivial representation
ctx3 = field_ctx(3, 1)
iota = IotaFunctional(ctx3, "GL2", [1, 0, 0, 0, 0, 0])
iota_d = iota_transport(ctx3, iota)
print("iota_D =", iota_d.values.tolist())
print("predicted weights on the quaternion side:", serre_weights(iota_d))
