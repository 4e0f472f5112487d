"""The mod-p Jacquet-Langlands map R(l^x) -> R(GL2(k)), its adjoint, and R_{T,theta}."""

from __future__ import annotations

import functools

import numpy as np

from .chars import (
    BrauerIrredLabel,
    CharError,
    Cuspidal,
    DetTwist,
    GrothElt,
    SteinbergTwist,
    decompose,
    ordinary_char,
)
from .classfn import GL2, LX, ClassFn, eigen_arrays
from .scalars import FieldCtx

__all__ = [
    "GrothElt",
    "dl_character",
    "jl_basis",
    "jl_classfn",
    "jl_image",
    "jl_matrix",
    "jl_star",
    "jl_star_closed_form",
    "norm_factor",
    "pairing",
    "steinberg_label",
]


def norm_factor(ctx: FieldCtx, m: int) -> int | None:
    """The k^x-exponent chi with [m] = [chi o N], or None if m does not factor through the norm."""
    m %= ctx.n
    if m % (ctx.q + 1):
        return None
    return (m // (ctx.q + 1)) % (ctx.q - 1)


@functools.lru_cache(maxsize=None)
def _theta_bar(ctx: FieldCtx, m: int) -> GrothElt:
    return decompose(ctx, ordinary_char(ctx, Cuspidal(m)))


@functools.lru_cache(maxsize=None)
def jl_image(ctx: FieldCtx, m: int) -> GrothElt:
    """JL of the single l^x-character of exponent m."""
    chi = norm_factor(ctx, m)
    if chi is None:
        return decompose(ctx, ordinary_char(ctx, Cuspidal(m)))
    sp = decompose(ctx, ordinary_char(ctx, SteinbergTwist(chi)))
    return sp - decompose(ctx, ordinary_char(ctx, DetTwist(chi)))


@functools.lru_cache(maxsize=None)
def jl_matrix(ctx: FieldCtx) -> np.ndarray:
    """Integer matrix whose column m is JL([m]) in the Brauer basis."""
    cols = [jl_image(ctx, m).coeffs for m in range(ctx.n)]
    mat = np.stack(cols, axis=1)
    mat.setflags(write=False)
    return mat


def jl_basis(ctx: FieldCtx, v: GrothElt) -> GrothElt:
    if v.group != LX or v.ctx is not ctx:
        raise CharError("jl_basis expects an element of R(l^x) for this context")
    return GrothElt(ctx, GL2, jl_matrix(ctx) @ v.coeffs)


def jl_star(ctx: FieldCtx, w: GrothElt) -> GrothElt:
    """Adjoint of JL under the pairings making irreducibles orthonormal."""
    if w.group != GL2 or w.ctx is not ctx:
        raise CharError("jl_star expects an element of R(GL2(k)) for this context")
    return GrothElt(ctx, LX, jl_matrix(ctx).T @ w.coeffs)


def jl_classfn(ctx: FieldCtx, chi: ClassFn) -> ClassFn:
    """JL on class functions:

    i(z) -> -chi(z) - chi(z^q),  diag(x, x) -> (q-1) chi(x),  diag(x, y) -> 0.
    """
    if chi.group != LX or chi.ctx is not ctx:
        raise CharError("jl_classfn expects a class function on l^x for this context")
    a, b = eigen_arrays(ctx, GL2)
    out = np.zeros((a.shape[0], ctx.ring.degree), dtype=np.int64)
    central = a == b
    split = (a != b) & (a % (ctx.q + 1) == 0)
    elliptic = ~(central | split)
    out[central] = (ctx.q - 1) * chi.values[a[central]]
    out[elliptic] = -chi.values[a[elliptic]] - chi.values[b[elliptic]]
    return ClassFn(ctx, GL2, out)


def dl_character(ctx: FieldCtx, theta: int) -> ClassFn:
    """R_{T,theta} on semisimple classes for the non-split torus T = l^x.

    diag(x, x) -> (1-q) theta(x),  diag(x, y) -> 0,  i(z) -> theta(z) + theta(z^q).
    """
    q = ctx.q
    a, b = eigen_arrays(ctx, GL2)
    central = a == b
    split = (a != b) & (a % (q + 1) == 0)
    kinds = np.where(central, 0, np.where(split, 1, 2))
    exps = np.stack([theta * a, theta * b], axis=1)
    w = np.array([[1 - q, 0], [0, 0], [1, 1]])[kinds]
    return ClassFn(ctx, GL2, ctx.ring.from_exponents(exps, w))


def pairing(v: GrothElt, w: GrothElt) -> int:
    v._check(w)
    return int(v.coeffs @ w.coeffs)


@functools.lru_cache(maxsize=None)
def steinberg_label(ctx: FieldCtx, chi: int) -> BrauerIrredLabel:
    """The irreducible that is the reduction of the Steinberg twist sp_chi."""
    elt = decompose(ctx, ordinary_char(ctx, SteinbergTwist(chi)))
    support = elt.support()
    if len(support) != 1 or next(iter(support.values())) != 1:
        raise CharError(f"reduction of sp_{chi} is not irreducible: {elt}")
    return next(iter(support))


def jl_star_closed_form(ctx: FieldCtx, label: BrauerIrredLabel) -> GrothElt:
    """JL*(sigma) from multiplicities: sum_xi m_xi [xi] + sum_chi m_chi [chi o N].

    m_xi is the multiplicity of sigma in the reduction of Theta(xi); m_chi is
    +1 when sigma is the reduction of sp_chi, -1 when sigma = chi o det.
    """
    coeffs = np.zeros(ctx.n, dtype=np.int64)
    for m in range(ctx.n):
        chi = norm_factor(ctx, m)
        if chi is None:
            coeffs[m] = _theta_bar(ctx, m)[label]
        elif label == steinberg_label(ctx, chi):
            coeffs[m] = 1
        elif label == BrauerIrredLabel((0,) * ctx.f, chi):
            coeffs[m] = -1
    return GrothElt(ctx, LX, coeffs)
