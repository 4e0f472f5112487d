import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modpjl.chars import (
    BrauerIrredLabel,
    CharError,
    Cuspidal,
    DetTwist,
    GrothElt,
    NotInLatticeError,
    PrincipalSeries,
    SteinbergTwist,
    Weight,
    brauer_irred,
    brauer_labels,
    decompose,
    f_lambda,
    f_lambda_D,
    l_character,
    normalize_ord,
    ordinary_char,
    ordinary_chars,
    recombine,
    weight_box,
)
from modpjl.classfn import GL2, LX, ClassFn, Elliptic, enumerate_ss_classes
from modpjl.scalars import field_ctx

from conftest import to_complex

L = BrauerIrredLabel


def _values(chi):
    return [v for _, v in chi.items()]


def test_cuspidal_example_q3(ctx3):
    ring = ctx3.ring
    z, z3 = ring.zeta_power(1), ring.zeta_power(3)
    expected = [2, -2, 0, -(z + z3), 0, z + z3]
    cusp = ordinary_char(ctx3, Cuspidal(1))
    assert _values(cusp) == expected
    assert _values(brauer_irred(ctx3, L((1,), 1))) == expected
    assert decompose(ctx3, cusp) == GrothElt.unit(ctx3, GL2, L((1,), 1))


def test_small_examples_q3(ctx3):
    st0 = ordinary_char(ctx3, SteinbergTwist(0))
    assert _values(st0) == [3, 3, 1, -1, -1, -1]
    assert decompose(ctx3, st0) == GrothElt.unit(ctx3, GL2, L((2,), 0))
    assert brauer_irred(ctx3, L((2,), 0))[Elliptic(1)] == -1
    assert _values(ordinary_char(ctx3, PrincipalSeries(0, 1))) == [4, -4, 0, 0, 0, 0]
    # PS(1, sgn) reduces to (r=1, m=0) + (r=1, m=1)
    ps = decompose(ctx3, ordinary_char(ctx3, PrincipalSeries(0, 1)))
    assert ps.support() == {L((1,), 0): 1, L((1,), 1): 1}


def test_normalize_ord(ctx3):
    assert normalize_ord(ctx3, PrincipalSeries(1, 0)) == PrincipalSeries(0, 1)
    assert normalize_ord(ctx3, Cuspidal(3)) == Cuspidal(1)
    assert normalize_ord(ctx3, DetTwist(5)) == DetTwist(1)
    with pytest.raises(CharError, match="distinct"):
        normalize_ord(ctx3, PrincipalSeries(1, 1))
    with pytest.raises(CharError, match="norm"):
        normalize_ord(ctx3, Cuspidal(4))


def test_ordinary_count_and_degrees(ctx):
    q = ctx.q
    chars = ordinary_chars(ctx)
    assert len(chars) == q * q - 1
    degrees = sorted(int(ordinary_char(ctx, c).identity_value()) for c in chars)
    assert sum(d * d for d in degrees) == (q * q - 1) * (q * q - q)
    assert set(degrees) <= {1, q - 1, q, q + 1}


def test_brauer_labels_and_dimensions(ctx):
    labels = brauer_labels(ctx)
    assert len(labels) == ctx.q * (ctx.q - 1)
    for lab in labels:
        assert int(brauer_irred(ctx, lab).identity_value()) == int(np.prod([r + 1 for r in lab.r]))


def test_brauer_basis_independent(ctx):
    # decompose inverts recombination on the basis itself, so the table is invertible
    for lab in brauer_labels(ctx):
        assert decompose(ctx, brauer_irred(ctx, lab)) == GrothElt.unit(ctx, GL2, lab)
    for m in range(0, ctx.n, max(1, ctx.n // 10)):
        assert decompose(ctx, l_character(ctx, m)) == GrothElt.unit(ctx, LX, m)


def test_reductions_are_effective(ctx):
    """Every ordinary irreducible reduces to a non-negative sum of Brauer irreducibles."""
    for c in ordinary_chars(ctx):
        elt = decompose(ctx, ordinary_char(ctx, c))
        assert (elt.coeffs >= 0).all()
        if isinstance(c, PrincipalSeries):
            assert 2 <= elt.coeffs.sum() <= 2**ctx.f


def test_brauer_values_are_eigenvalue_sums(ctx3):
    """Numerical check at one elliptic class: Sym^2 (x) det at eigenvalues (w, w^3)."""
    import cmath

    w = cmath.exp(2j * cmath.pi / 8)
    a, b = w, w**3
    expected = (a * a + a * b + b * b) * (a * b)
    assert abs(to_complex(brauer_irred(ctx3, L((2,), 1))[Elliptic(1)]) - expected) < 1e-12


def test_f_lambda_examples(ctx3):
    ring = ctx3.ring
    z = ring.zeta_power(1)
    lam = Weight(((0, 1, 0),))
    assert _values(f_lambda(ctx3, Weight())) == [1] * 6
    assert f_lambda(ctx3, lam) == brauer_irred(ctx3, L((1,), 0))
    assert f_lambda_D(ctx3, lam)[1] == z + ring.zeta_power(3)
    assert len(weight_box(ctx3)) == 6
    assert len(weight_box(field_ctx(3, 2))) == 36
    with pytest.raises(CharError):
        Weight(((0, 0, 1),))
    with pytest.raises(CharError):
        f_lambda(ctx3, Weight(((1, 1, 0),)))


@pytest.mark.parametrize("bound", [None, 3])
def test_f_lambda_restricts_to_f_lambda_D(small_ctx, bound):
    """On central and elliptic classes F_lambda agrees with F_lambda^D at the eigenvalue."""
    ctx = small_ctx
    for lam in weight_box(ctx, bound):
        f, fd = f_lambda(ctx, lam), f_lambda_D(ctx, lam)
        for c in enumerate_ss_classes(ctx):
            if c.kind != "split":
                assert f[c] == fd[c.eigen_dlogs(ctx)[0]]


def test_f_lambda_decomposes(small_ctx):
    for lam in weight_box(small_ctx, small_ctx.p):
        elt = decompose(small_ctx, f_lambda(small_ctx, lam))
        assert (elt.coeffs >= 0).all()
        assert elt.class_function() == f_lambda(small_ctx, lam)


def test_decompose_rejects_non_lattice(ctx3):
    with pytest.raises(NotInLatticeError):
        decompose(ctx3, ClassFn.from_values(ctx3, GL2, [1, 0, 0, 0, 0, 0]))
    with pytest.raises(CharError):
        decompose(field_ctx(5, 1), ordinary_char(ctx3, DetTwist(0)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]), st.sampled_from([GL2, LX]), st.data())
def test_decompose_inverts_recombine(pf, group, data):
    ctx = field_ctx(*pf)
    size = len(GrothElt.zero(ctx, group).coeffs)
    coeffs = data.draw(st.lists(st.integers(-20, 20), min_size=size, max_size=size))
    assert decompose(ctx, recombine(ctx, group, coeffs)) == GrothElt(ctx, group, coeffs)


def test_grothelt_json_roundtrip(ctx3):
    v = 2 * GrothElt.unit(ctx3, GL2, L((2,), 0)) - GrothElt.unit(ctx3, GL2, L((0,), 0))
    obj = v.to_json()
    assert obj == {
        "group": "GL2",
        "q": 3,
        "basis": "brauer-irred",
        "coeffs": [{"label": {"r": [0], "m": 0}, "value": -1}, {"label": {"r": [2], "m": 0}, "value": 2}],
    }
    assert GrothElt.from_json(ctx3, obj) == v
    w = GrothElt.unit(ctx3, LX, 5)
    assert GrothElt.from_json(ctx3, w.to_json()) == w
    with pytest.raises(CharError):
        GrothElt.from_json(ctx3, {"group": "GL2", "q": 3, "coeffs": [{"label": {"r": [3], "m": 0}, "value": 1}]})
