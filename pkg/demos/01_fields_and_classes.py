"""
Finite fields, Teichmuller lifts and the classes of GL2(F_q)
============================================================

Everything is exact: field elements are discrete logs to a fixed generator
of F_{q^2}^x, and characteristic-zero values live in Z[zeta_{q^2-1}].
"""

from modpjl import class_of, enumerate_ss_classes, field_ctx, teich
from modpjl.scalars import FlElem, fl_add, norm

# %% the field F_9 = F_3[x]/(x^2 + 1), generated by gamma = x + 1
ctx = field_ctx(3, 1)
print("q =", ctx.q, " n = q^2 - 1 =", ctx.n, " modulus coefficients:", ctx.modulus)
print("norm(gamma) =", norm(ctx, FlElem(1)), "= generator of F_3^x")
print("1 + 2 =", fl_add(ctx, ctx.from_int(1), ctx.from_int(2)))

# %% Teichmuller lifts are multiplicative and land on roots of unity
print("teich(-1) =", teich(ctx, ctx.from_int(2)))
print("teich(gamma) =", teich(ctx, FlElem(1)), "(coefficients of 1, zeta, zeta^2, zeta^3)")

# %% the six semisimple classes of GL2(F_3)
for c in enumerate_ss_classes(ctx):
    print(" ", c)

# %% classifying an explicit matrix: [[0, -1], [1, 0]] has eigenvalues +-i in F_9
zero, one, minus = FlElem(None), ctx.from_int(1), ctx.from_int(2)
print("[[0,-1],[1,0]] lies in", class_of(ctx, ((zero, minus), (one, zero))))
