import numpy as np
import pytest

from modpjl.chars import BrauerIrredLabel, CharError, GrothElt, brauer_labels, l_character
from modpjl.classfn import GL2, LX, ClassFn, enumerate_ss_classes
from modpjl.jl import (
    dl_character,
    jl_basis,
    jl_classfn,
    jl_image,
    jl_matrix,
    jl_star,
    jl_star_closed_form,
    norm_factor,
    pairing,
    steinberg_label,
)
from modpjl.scalars import field_ctx

L = BrauerIrredLabel


def test_jl_trivial_q3(ctx3):
    assert jl_image(ctx3, 0) == GrothElt.unit(ctx3, GL2, L((2,), 0)) - GrothElt.unit(ctx3, GL2, L((0,), 0))
    assert jl_image(ctx3, 1) == GrothElt.unit(ctx3, GL2, L((1,), 1))
    assert jl_image(ctx3, 3) == jl_image(ctx3, 1)


def test_jl_classfn_trivial_q3(ctx3):
    # diag(x,x) -> (q-1), split -> 0, elliptic -> -2
    out = jl_classfn(ctx3, l_character(ctx3, 0))
    assert [int(v) for _, v in out.items()] == [2, 2, 0, -2, -2, -2]


def test_norm_factor(ctx3):
    assert [norm_factor(ctx3, m) for m in range(8)] == [0, None, None, None, 1, None, None, None]


def test_jl_matrix_is_readonly(ctx3):
    with pytest.raises(ValueError):
        jl_matrix(ctx3)[0, 0] = 5


def test_definition_agrees_with_rule(ctx):
    for m in range(ctx.n):
        assert jl_basis(ctx, GrothElt.unit(ctx, LX, m)).class_function() == jl_classfn(ctx, l_character(ctx, m))


def test_rule_on_arbitrary_class_function(small_ctx):
    """Linearity: the rule agrees with the basis route on random virtual characters."""
    ctx = small_ctx
    rng = np.random.default_rng(ctx.q)
    for _ in range(10):
        v = GrothElt(ctx, LX, rng.integers(-4, 5, ctx.n))
        assert jl_basis(ctx, v).class_function() == jl_classfn(ctx, v.class_function())


def test_frobenius_invariance(ctx):
    mat = jl_matrix(ctx)
    frob = np.arange(ctx.n) * ctx.q % ctx.n
    assert np.array_equal(mat, mat[:, frob])


def test_sign_identity(ctx):
    for theta in range(ctx.n):
        assert jl_classfn(ctx, l_character(ctx, theta)) == -dl_character(ctx, theta)


def test_dl_character_degree(ctx):
    # R_{T,theta}(1) = 1 - q for the non-split torus
    assert all(int(dl_character(ctx, t).identity_value()) == 1 - ctx.q for t in range(ctx.n))


def test_steinberg_labels(ctx):
    for chi in range(ctx.q - 1):
        assert steinberg_label(ctx, chi) == L((ctx.p - 1,) * ctx.f, chi)


def test_jl_star_examples_q3(ctx3):
    star = jl_star(ctx3, GrothElt.unit(ctx3, GL2, L((1,), 1)))
    assert star.support() == {1: 1, 3: 1}
    assert jl_star(ctx3, GrothElt.unit(ctx3, GL2, L((2,), 0))).support() == {0: 1}
    # Cuspidal(2) = [2, 2, 0, 0, 2, 0] = trivial + det, so the trivial irreducible
    # also occurs in the reduction of Theta(psi^2) (exponents 2 and 6)
    assert jl_star(ctx3, GrothElt.unit(ctx3, GL2, L((0,), 0))).support() == {0: -1, 2: 1, 6: 1}


def test_closed_form_and_adjointness(small_ctx):
    ctx = small_ctx
    for lab in brauer_labels(ctx):
        w = GrothElt.unit(ctx, GL2, lab)
        star = jl_star(ctx, w)
        assert star == jl_star_closed_form(ctx, lab)
        for m in range(ctx.n):
            v = GrothElt.unit(ctx, LX, m)
            assert pairing(jl_basis(ctx, v), w) == pairing(v, star)
            if norm_factor(ctx, m) is None:
                assert star[m] in (0, 1)


def test_type_errors(ctx3):
    with pytest.raises(CharError):
        jl_basis(ctx3, GrothElt.unit(ctx3, GL2, L((0,), 0)))
    with pytest.raises(CharError):
        jl_star(ctx3, GrothElt.unit(ctx3, LX, 0))
    with pytest.raises(CharError):
        jl_classfn(ctx3, ClassFn.constant(ctx3, GL2))
    with pytest.raises(CharError):
        jl_basis(field_ctx(5, 1), GrothElt.unit(ctx3, LX, 0))
