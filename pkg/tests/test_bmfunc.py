import numpy as np
import pytest

from modpjl.bmfunc import (
    CuspidalType,
    IotaFunctional,
    PSType,
    ScalarType,
    TameTypeError,
    common_zero_classes,
    discrete_series_types,
    iota_transport,
    normalize_type,
    serre_weights,
    sigma_tame,
    span_rank,
    tame_types,
    type_dimensions,
    type_from_args,
    type_to_json,
    verify_thm42,
)
from modpjl.chars import BrauerIrredLabel, Cuspidal, DetTwist, GrothElt, PrincipalSeries, SteinbergTwist, Weight, weight_box
from modpjl.classfn import GL2, LX, Split
from modpjl.jl import jl_image, jl_star
from modpjl.scalars import field_ctx

L = BrauerIrredLabel


def test_sigma_tame_examples(ctx3):
    d = sigma_tame(ctx3, ScalarType(1))
    assert (d.sigma, d.sigma_cr, d.sigma_D) == (SteinbergTwist(1), DetTwist(1), (4,))
    d = sigma_tame(ctx3, CuspidalType(3))
    assert (d.tau, d.sigma, d.sigma_D) == (CuspidalType(1), Cuspidal(1), (1, 3))
    d = sigma_tame(ctx3, PSType(1, 0))
    assert (d.sigma, d.sigma_D) == (PrincipalSeries(0, 1), ())


def test_type_validation(ctx3):
    with pytest.raises(TameTypeError):
        normalize_type(ctx3, CuspidalType(4))
    with pytest.raises(TameTypeError):
        normalize_type(ctx3, PSType(1, 1))
    with pytest.raises(TameTypeError):
        verify_thm42(ctx3, PSType(0, 1))
    with pytest.raises(TameTypeError):
        type_from_args("ps", [1])
    assert type_from_args("cuspidal", [5]) == CuspidalType(5)
    assert type_to_json(CuspidalType(1)) == {"type": "cuspidal", "exp": [1]}


def test_type_counts(ctx):
    q = ctx.q
    assert len(tame_types(ctx, ("scalar",))) == q - 1
    assert len(tame_types(ctx, ("ps",))) == (q - 1) * (q - 2) // 2
    assert len(tame_types(ctx, ("cuspidal",))) == q * (q - 1) // 2
    assert len(discrete_series_types(ctx)) == (q - 1) + q * (q - 1) // 2


def test_thm42_examples_q3(ctx3):
    rep = verify_thm42(ctx3, ScalarType(0))
    assert rep.passed and [c.sigma_D_exp for c in rep.choices] == [0]
    rep = verify_thm42(ctx3, CuspidalType(1), Weight(((0, 2, 1),)))
    assert rep.passed and [c.sigma_D_exp for c in rep.choices] == [1, 3]


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_thm42_all(p, f):
    ctx = field_ctx(p, f)
    for tau in discrete_series_types(ctx):
        for lam in weight_box(ctx):
            assert verify_thm42(ctx, tau, lam).passed


def test_thm42_detects_wrong_target(ctx3):
    """Sanity: the checker is not vacuous; the scalar identity fails without the -sigma^cr term."""
    from modpjl.bmfunc import sigma_bar_lambda
    from modpjl.jl import jl_classfn

    sb = sigma_bar_lambda(ctx3, ScalarType(0))
    assert jl_classfn(ctx3, sb.sigma_D[0]) != sb.sigma


def test_dimensions(ctx):
    for tau in tame_types(ctx, ("cuspidal",)):
        assert type_dimensions(ctx, tau) == (ctx.q - 1, (1, 1))
    assert type_dimensions(ctx, ScalarType(0)) == (ctx.q, (1,))


def test_span_rank_q5():
    assert span_rank(field_ctx(5, 1)) == 20


def test_span_rank_q3_deficient():
    """At q=3 there is one tame principal series type, PS(1, sgn), and its
    character is 4 - 4 = 0 at diag(1, -1); cuspidal characters vanish on split
    classes.  So every generator vanishes at Split(0, 1) and the rank is 5."""
    ctx = field_ctx(3, 1)
    assert common_zero_classes(ctx) == [Split(0, 1)]
    assert span_rank(ctx) == 5


def test_iota_transport_is_jl_star(small_ctx):
    ctx = small_ctx
    rng = np.random.default_rng(7)
    frob = np.arange(ctx.n) * ctx.q % ctx.n
    for _ in range(10):
        iota = IotaFunctional(ctx, GL2, rng.integers(-3, 4, ctx.q * (ctx.q - 1)))
        iota_d = iota_transport(ctx, iota)
        assert iota_d.as_element() == jl_star(ctx, iota.as_element())
        assert np.array_equal(iota_d.values, iota_d.values[frob])
        for m in range(ctx.n):
            assert iota_d.values[m] == iota(jl_image(ctx, m))


def test_iota_unit_at_trivial_q3(ctx3):
    iota = IotaFunctional(ctx3, GL2, GrothElt.unit(ctx3, GL2, L((0,), 0)).coeffs)
    iota_d = iota_transport(ctx3, iota)
    # -1 from the trivial character; +1 from the cuspidal pair {2, 6}, whose
    # reduction is trivial + det
    assert iota_d.values.tolist() == [-1, 0, 1, 0, 0, 0, 1, 0]
    assert serre_weights(iota_d) == [2, 6]
    assert serre_weights(iota) == [L((0,), 0)]


def test_serre_weights_positive_only(ctx3):
    iota = IotaFunctional(ctx3, LX, [0, 2, -1, 1, 0, 0, 0, 0])
    assert serre_weights(iota) == [1, 3]


def test_iota_json_roundtrip(ctx3):
    iota = IotaFunctional(ctx3, GL2, [0, 1, 0, 0, -2, 0])
    obj = iota.to_json()
    assert obj["entries"] == [
        {"label": {"r": [0], "m": 1}, "value": 1},
        {"label": {"r": [2], "m": 0}, "value": -2},
    ]
    assert IotaFunctional.from_json(ctx3, obj) == iota
    bad = dict(obj, entries=[{"label": {"r": [0], "m": 1}, "value": 1.5}])
    with pytest.raises(TameTypeError.__mro__[1]):
        IotaFunctional.from_json(ctx3, bad)


def test_iota_unit_at_det_twist(small_ctx):
    ctx = small_ctx
    for chi in range(ctx.q - 1):
        iota = IotaFunctional(ctx, GL2, GrothElt.unit(ctx, GL2, L((0,) * ctx.f, chi)).coeffs)
        iota_d = iota_transport(ctx, iota)
        for m in range(0, ctx.n, ctx.q + 1):
            assert iota_d.values[m] == (-1 if m == chi * (ctx.q + 1) % ctx.n else 0)


def test_serre_weights_trivial_cases(ctx3):
    assert serre_weights(IotaFunctional(ctx3, GL2, [0] * 6)) == []
    assert serre_weights(iota_transport(ctx3, IotaFunctional(ctx3, GL2, [0] * 6))) == []
    assert serre_weights(IotaFunctional(ctx3, GL2, [0, 0, 0, 1, 0, 0])) == [L((1,), 1)]


@pytest.mark.parametrize("seed", range(5))
def test_serre_weights_composite(small_ctx, seed):
    """Against direct evaluation of iota on each JL image."""
    ctx = small_ctx
    rng = np.random.default_rng(seed)
    iota = IotaFunctional(ctx, GL2, rng.integers(0, 3, ctx.q * (ctx.q - 1)))
    direct = [m for m in range(ctx.n) if int(iota.values @ jl_image(ctx, m).coeffs) > 0]
    assert serre_weights(iota_transport(ctx, iota)) == direct
