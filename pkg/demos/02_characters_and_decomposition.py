"""
Ordinary characters and their reductions mod p
==============================================

A representation's reduction is modelled by its Brauer character, i.e. the
restriction to semisimple classes; ``decompose`` writes it exactly in the
basis of irreducible Brauer characters Sym^r (x) det^m.
"""

from modpjl import Cuspidal, PrincipalSeries, SteinbergTwist, decompose, field_ctx, ordinary_char

ctx = field_ctx(3, 1)

# %% the cuspidal character of exponent 1, class by class
cusp = ordinary_char(ctx, Cuspidal(1))
for label, value in cusp.items():
    print(f"  {label!s:<22} {value}")

# %% its reduction is irreducible: Sym^1 (x) det
print("Theta(psi) mod 3 =", decompose(ctx, cusp))

# %% Steinberg reduces to Sym^{p-1}; principal series split into two pieces
print("St mod 3 =", decompose(ctx, ordinary_char(ctx, SteinbergTwist(0))))
print("PS(1, sgn) mod 3 =", decompose(ctx, ordinary_char(ctx, PrincipalSeries(0, 1))))

# %% the same over F_9, where the Brauer irreducibles are twisted tensor products
ctx9 = field_ctx(3, 2)
print("Theta(psi) mod 3, q = 9:", decompose(ctx9, ordinary_char(ctx9, Cuspidal(1))))
