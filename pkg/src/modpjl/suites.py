"""Named verification suites, shared by the command line and the test-suite.

Each suite runs against one field context and returns a ``SuiteResult``
whose ``details`` are deterministic strings (no timings), so output can be
compared byte for byte across runs and thread counts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bmfunc import (
    IotaFunctional,
    common_zero_classes,
    discrete_series_types,
    iota_transport,
    span_rank,
    tame_types,
    type_dimensions,
    type_to_json,
    verify_thm42,
)
from .chars import (
    BrauerIrredLabel,
    DetTwist,
    GrothElt,
    PrincipalSeries,
    SteinbergTwist,
    brauer_labels,
    decompose,
    l_character,
    ordinary_char,
    weight_box,
)
from .classfn import GL2, LX, class_size, enumerate_full_classes, group_order
from .jl import dl_character, jl_basis, jl_classfn, jl_matrix, jl_star, jl_star_closed_form, norm_factor, steinberg_label
from .oracles import ORACLE_MAX_Q, oracle_frobenius_ps, oracle_orthogonality
from .scalars import FieldCtx

SUITES = ("jl-agreement", "thm42", "sign", "dimension", "span", "adjoint", "orthogonality", "roundtrip")


@dataclass
class SuiteResult:
    name: str
    q: int
    passed: bool = True
    checked: int = 0
    details: list = field(default_factory=list)

    def fail(self, msg: str):
        self.passed = False
        self.details.append(msg)

    def to_json(self) -> dict:
        return {"suite": self.name, "q": self.q, "passed": self.passed, "checked": self.checked, "details": self.details}


def suite_jl_agreement(ctx: FieldCtx, **_) -> SuiteResult:
    res = SuiteResult("jl-agreement", ctx.q)
    for m in range(ctx.n):
        via_basis = jl_basis(ctx, GrothElt.unit(ctx, LX, m)).class_function()
        bad = jl_classfn(ctx, l_character(ctx, m)).mismatches(via_basis)
        res.checked += 1
        if bad:
            res.fail(f"psi exponent {m}: presentations differ at {bad}")
    return res


def suite_thm42(ctx: FieldCtx, bound=None, threads=1, types=None, **_) -> SuiteResult:
    res = SuiteResult("thm42", ctx.q)
    cells = [(tau, lam) for tau in (types or discrete_series_types(ctx)) for lam in weight_box(ctx, bound)]

    def run(cell):
        return verify_thm42(ctx, *cell)

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            reports = list(pool.map(run, cells))
    else:
        reports = [run(c) for c in cells]
    for rep in reports:
        for ch in rep.choices:
            res.checked += 1
            if not ch.passed:
                res.fail(
                    f"tau={type_to_json(rep.tau)} lambda={rep.weight} sigma_D exp {ch.sigma_D_exp}: "
                    f"residual at {ch.residual_classes or ch.rule_residual_classes}"
                )
    return res


def suite_sign(ctx: FieldCtx, **_) -> SuiteResult:
    res = SuiteResult("sign", ctx.q)
    for theta in range(ctx.n):
        res.checked += 1
        bad = jl_classfn(ctx, l_character(ctx, theta)).mismatches(-dl_character(ctx, theta))
        if bad:
            res.fail(f"theta exponent {theta}: JL != -R_T,theta at {bad}")
    return res


def suite_dimension(ctx: FieldCtx, **_) -> SuiteResult:
    res = SuiteResult("dimension", ctx.q)
    for tau in tame_types(ctx, ("cuspidal",)):
        dim, dims_d = type_dimensions(ctx, tau)
        for dd in dims_d:
            res.checked += 1
            if dim != ctx.q - 1 or (ctx.q - 1) * dd != dim:
                res.fail(f"tau={type_to_json(tau)}: dim sigma={dim}, dim sigma_D={dd}")
    return res


def suite_span(ctx: FieldCtx, bound=None, **_) -> SuiteResult:
    res = SuiteResult("span", ctx.q, checked=1)
    rank = span_rank(ctx, bound)
    target = ctx.q * (ctx.q - 1)
    res.details.append(f"rank {rank} of {target}")
    if rank != target:
        res.fail(f"span deficient; every non-scalar tame sigma(tau) vanishes on {common_zero_classes(ctx)}")
    return res


def suite_adjoint(ctx: FieldCtx, **_) -> SuiteResult:
    res = SuiteResult("adjoint", ctx.q)
    mat = jl_matrix(ctx)
    for chi in range(ctx.q - 1):
        expected = BrauerIrredLabel((ctx.p - 1,) * ctx.f, chi)
        if steinberg_label(ctx, chi) != expected:
            res.fail(f"reduction of sp_{chi} is {steinberg_label(ctx, chi)}, expected {expected}")
    for lab in brauer_labels(ctx):
        res.checked += 1
        star = jl_star(ctx, GrothElt.unit(ctx, GL2, lab))
        closed = jl_star_closed_form(ctx, lab)
        if star != closed:
            res.fail(f"JL*({lab}) = {star} but closed form gives {closed}")
        for m in range(ctx.n):
            if norm_factor(ctx, m) is None and star.coeffs[m] not in (0, 1):
                res.fail(f"m_xi({lab}) = {star.coeffs[m]} for xi exponent {m}")
    # <JL e_m, e_sigma> = <e_m, JL* e_sigma> on every basis pair
    star_mat = np.stack([jl_star(ctx, GrothElt.unit(ctx, GL2, lab)).coeffs for lab in brauer_labels(ctx)])
    res.checked += mat.size
    if not np.array_equal(star_mat, mat):
        res.fail("adjointness fails on some basis pair")
    return res


def suite_orthogonality(ctx: FieldCtx, **_) -> SuiteResult:
    res = SuiteResult("orthogonality", ctx.q)
    if ctx.q > ORACLE_MAX_Q:
        res.details.append(f"skipped: brute-force oracles need q <= {ORACLE_MAX_Q}")
        return res
    rep = oracle_orthogonality(ctx)
    res.checked += rep.checked
    for a, b in rep.failures:
        res.fail(f"<{a}, {b}> wrong")
    sizes = sum(class_size(ctx, c) for c in enumerate_full_classes(ctx))
    res.checked += 1
    if sizes != group_order(ctx):
        res.fail(f"class sizes sum to {sizes}, |G| = {group_order(ctx)}")
    for m1 in range(ctx.q - 1):
        for m2 in range(ctx.q - 1):
            res.checked += 1
            if m1 != m2:
                expected = ordinary_char(ctx, PrincipalSeries(m1, m2))
            else:
                expected = ordinary_char(ctx, DetTwist(m1)) + ordinary_char(ctx, SteinbergTwist(m1))
            bad = oracle_frobenius_ps(ctx, m1, m2).mismatches(expected)
            if bad:
                res.fail(f"induced character ({m1}, {m2}) differs at {bad}")
    return res


def suite_roundtrip(ctx: FieldCtx, seed=0, samples=100, **_) -> SuiteResult:
    res = SuiteResult("roundtrip", ctx.q)
    rng = np.random.default_rng(seed)
    for group in (GL2, LX):
        size = len(GrothElt.zero(ctx, group).coeffs)
        for _ in range(samples):
            v = GrothElt(ctx, group, rng.integers(-5, 6, size))
            res.checked += 1
            if decompose(ctx, v.class_function()) != v:
                res.fail(f"decompose does not invert recombination on {v}")
    nl = len(brauer_labels(ctx))
    frob = np.arange(ctx.n) * ctx.q % ctx.n
    for _ in range(samples):
        iota = IotaFunctional(ctx, GL2, rng.integers(-3, 4, nl))
        iota_d = iota_transport(ctx, iota)
        res.checked += 1
        if not np.array_equal(iota_d.values, iota_d.values[frob]):
            res.fail(f"iota_D not Frobenius invariant for {iota.values.tolist()}")
    return res


_RUNNERS = {
    "jl-agreement": suite_jl_agreement,
    "thm42": suite_thm42,
    "sign": suite_sign,
    "dimension": suite_dimension,
    "span": suite_span,
    "adjoint": suite_adjoint,
    "orthogonality": suite_orthogonality,
    "roundtrip": suite_roundtrip,
}


def run_suite(ctx: FieldCtx, name: str, **options) -> list[SuiteResult]:
    if name == "all":
        return [_RUNNERS[s](ctx, **options) for s in SUITES]
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [_RUNNERS[name](ctx, **options)]


__all__ = ["SUITES", "SuiteResult", "run_suite"]
