"""
The mod-p Jacquet-Langlands map and its adjoint
===============================================

JL sends a character of F_{q^2}^x to a virtual Brauer character of GL2(F_q).
It can be applied on the basis or directly to class functions; the two agree,
and on class functions JL is minus Deligne-Lusztig induction from the
non-split torus.
"""

import numpy as np

from modpjl import GL2, LX, BrauerIrredLabel, GrothElt, dl_character, field_ctx, jl_basis, jl_classfn, jl_star, l_character
from modpjl.jl import jl_matrix

ctx = field_ctx(3, 1)

# %% JL of the trivial character and of a character not factoring through the norm
for m in (0, 1):
    print(f"JL([{m}]) =", jl_basis(ctx, GrothElt.unit(ctx, LX, m)))

# %% the class-function rule gives the same answer, and equals -R_{T,theta}
chi = l_character(ctx, 1)
print("basis route == rule:", jl_basis(ctx, GrothElt.unit(ctx, LX, 1)).class_function() == jl_classfn(ctx, chi))
print("JL == -R_T,theta:   ", jl_classfn(ctx, chi) == -dl_character(ctx, 1))

# %% the whole map as an integer matrix (rows: Brauer irreducibles, columns: characters of F_9^x)
print(jl_matrix(ctx))

# %% JL* is the transpose; the columns are invariant under psi -> psi^q
frob = np.arange(ctx.n) * ctx.q % ctx.n
print("Frobenius invariant:", np.array_equal(jl_matrix(ctx), jl_matrix(ctx)[:, frob]))
print("JL*(Sym^1 (x) det) =", jl_star(ctx, GrothElt.unit(ctx, GL2, BrauerIrredLabel((1,), 1))))
