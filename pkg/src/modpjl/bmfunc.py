"""Tame inertial types, their types sigma / sigma^cr / sigma_D, and BM functionals.

Only depth-zero (tame) types are built.  A Breuil-Mezard functional iota is
user input; everything downstream of it (iota_D = iota o JL, predicted
weights) is computed here.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from ._modlin import rank_mod
from .chars import (
    CharError,
    Cuspidal,
    DetTwist,
    GrothElt,
    OrdChar,
    PrincipalSeries,
    SteinbergTwist,
    Weight,
    basis_labels,
    decompose,
    f_lambda,
    f_lambda_D,
    l_character,
    label_from_json,
    label_to_json,
    normalize_ord,
    ordinary_char,
    weight_box,
)
from .classfn import GL2, LX, ClassFn
from .jl import jl_basis, jl_classfn, jl_image
from .scalars import FieldCtx, evaluation_primes


class TameTypeError(CharError):
    pass


@dataclass(frozen=True)
class ScalarType:
    eta: int


@dataclass(frozen=True)
class PSType:
    eta1: int
    eta2: int


@dataclass(frozen=True)
class CuspidalType:
    eta: int


TameType = Union[ScalarType, PSType, CuspidalType]


def normalize_type(ctx: FieldCtx, tau: TameType) -> TameType:
    qm = ctx.q - 1
    if isinstance(tau, ScalarType):
        return ScalarType(tau.eta % qm)
    if isinstance(tau, PSType):
        a, b = sorted((tau.eta1 % qm, tau.eta2 % qm))
        if a == b:
            raise TameTypeError("principal series type needs eta1 != eta2")
        return PSType(a, b)
    if isinstance(tau, CuspidalType):
        m = tau.eta % ctx.n
        if m % (ctx.q + 1) == 0:
            raise TameTypeError(f"cuspidal type character {tau.eta} equals its Frobenius conjugate")
        # eta and eta^q give the same type
        return CuspidalType(min(m, m * ctx.q % ctx.n))
    raise TameTypeError(f"not a tame type: {tau!r}")


def type_to_json(tau: TameType) -> dict:
    if isinstance(tau, ScalarType):
        return {"type": "scalar", "exp": [tau.eta]}
    if isinstance(tau, PSType):
        return {"type": "ps", "exp": [tau.eta1, tau.eta2]}
    return {"type": "cuspidal", "exp": [tau.eta]}


def type_from_args(kind: str, exps) -> TameType:
    exps = [int(e) for e in exps]
    need = {"scalar": 1, "ps": 2, "cuspidal": 1}.get(kind)
    if need is None:
        raise TameTypeError(f"unknown type kind {kind!r}")
    if len(exps) != need:
        raise TameTypeError(f"{kind} type takes {need} character exponent(s), got {len(exps)}")
    if kind == "scalar":
        return ScalarType(exps[0])
    if kind == "ps":
        return PSType(*exps)
    return CuspidalType(exps[0])


def tame_types(ctx: FieldCtx, kinds=("scalar", "ps", "cuspidal")) -> list[TameType]:
    qm = ctx.q - 1
    out: list[TameType] = []
    if "scalar" in kinds:
        out += [ScalarType(e) for e in range(qm)]
    if "ps" in kinds:
        out += [PSType(a, b) for a in range(qm) for b in range(a + 1, qm)]
    if "cuspidal" in kinds:
        reps = sorted({normalize_type(ctx, CuspidalType(m)).eta for m in range(ctx.n) if m % (ctx.q + 1)})
        out += [CuspidalType(m) for m in reps]
    return out


def discrete_series_types(ctx: FieldCtx) -> list[TameType]:
    return tame_types(ctx, ("scalar", "cuspidal"))


@dataclass(frozen=True)
class TypeData:
    tau: TameType
    sigma: OrdChar
    sigma_cr: OrdChar
    sigma_D: tuple[int, ...]  # l^x-character exponents, one per allowed choice


def sigma_tame(ctx: FieldCtx, tau: TameType) -> TypeData:
    tau = normalize_type(ctx, tau)
    if isinstance(tau, ScalarType):
        return TypeData(tau, SteinbergTwist(tau.eta), DetTwist(tau.eta), (tau.eta * (ctx.q + 1) % ctx.n,))
    if isinstance(tau, PSType):
        ps = normalize_ord(ctx, PrincipalSeries(tau.eta1, tau.eta2))
        return TypeData(tau, ps, ps, ())
    m = tau.eta
    return TypeData(tau, Cuspidal(m), Cuspidal(m), (m, m * ctx.q % ctx.n))


@dataclass(frozen=True)
class SigmaBar:
    sigma: ClassFn
    sigma_cr: ClassFn
    sigma_D: tuple[ClassFn, ...]


@functools.lru_cache(maxsize=None)
def _sigma_bar0(ctx: FieldCtx, tau: TameType) -> SigmaBar:
    data = sigma_tame(ctx, tau)
    return SigmaBar(
        ordinary_char(ctx, data.sigma),
        ordinary_char(ctx, data.sigma_cr),
        tuple(l_character(ctx, m) for m in data.sigma_D),
    )


@functools.lru_cache(maxsize=None)
def _f_pair(ctx: FieldCtx, lam: Weight) -> tuple[ClassFn, ClassFn]:
    return f_lambda(ctx, lam), f_lambda_D(ctx, lam)


def sigma_bar_lambda(ctx: FieldCtx, tau: TameType, lam: Weight = Weight()) -> SigmaBar:
    """Brauer characters of the reductions of sigma(tau) (x) W_lambda and friends."""
    base = _sigma_bar0(ctx, normalize_type(ctx, tau))
    if not lam.entries:
        return base
    f, fd = _f_pair(ctx, lam)
    return SigmaBar(base.sigma * f, base.sigma_cr * f, tuple(s * fd for s in base.sigma_D))


# ---------------------------------------------------------------------------
# compatibility of JL with reduction mod p


@dataclass
class Thm42Choice:
    sigma_D_exp: int
    residual_classes: list  # classes where JL(sigma_D) (via R(l^x)) differs from the target
    rule_residual_classes: list  # same, with JL applied by the class-function rule

    @property
    def passed(self) -> bool:
        return not self.residual_classes and not self.rule_residual_classes


@dataclass
class Thm42Report:
    tau: TameType
    weight: Weight
    choices: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.choices)


def verify_thm42(ctx: FieldCtx, tau: TameType, lam: Weight = Weight()) -> Thm42Report:
    """Check JL(sigma_D(tau, lam)) = sigma(tau, lam) - sigma^cr(tau, lam) (scalar tau)
    or = sigma(tau, lam) (cuspidal tau), for every choice of sigma_D."""
    tau = normalize_type(ctx, tau)
    if isinstance(tau, PSType):
        raise TameTypeError("principal series types are not discrete series")
    sb = sigma_bar_lambda(ctx, tau, lam)
    target = sb.sigma - sb.sigma_cr if isinstance(tau, ScalarType) else sb.sigma
    report = Thm42Report(tau, lam)
    for m, sd in zip(sigma_tame(ctx, tau).sigma_D, sb.sigma_D):
        via_basis = jl_basis(ctx, decompose(ctx, sd)).class_function()
        via_rule = jl_classfn(ctx, sd)
        report.choices.append(Thm42Choice(m, via_basis.mismatches(target), via_rule.mismatches(target)))
    return report


def type_dimensions(ctx: FieldCtx, tau: TameType) -> tuple[int, tuple[int, ...]]:
    """(dim sigma(tau), dims of each sigma_D(tau) choice), read off at the identity."""
    # built directly rather than through the cache, which would hold every type's characters
    data = sigma_tame(ctx, tau)
    dim = int(ordinary_char(ctx, data.sigma).identity_value())
    return dim, tuple(int(l_character(ctx, m).identity_value()) for m in data.sigma_D)


def span_rank(ctx: FieldCtx, bound: int | None = None) -> int:
    """Rank of {sigma(tau) * F_lambda : tau tame non-scalar, lambda in the box} in C(GL2(k)).

    Ranks are taken after reduction zeta -> r modulo several primes; each is a
    lower bound for the true rank and at least two must attain the reported value.
    """
    weights = weight_box(ctx, bound)
    rows = []
    for tau in tame_types(ctx, ("ps", "cuspidal")):
        s = _sigma_bar0(ctx, tau).sigma
        rows += [(s * _f_pair(ctx, lam)[0]).values for lam in weights]
    if not rows:
        return 0
    mat = np.stack(rows)
    ranks = [rank_mod(ctx.ring.eval_mod(mat, ell, r), ell) for ell, r in evaluation_primes(ctx.n, 3)]
    best = max(ranks)
    if ranks.count(best) < 2:
        raise ArithmeticError(f"modular ranks disagree: {ranks}")
    return best


# ---------------------------------------------------------------------------
# Breuil-Mezard functionals


class IotaFunctional:
    """Integer-valued linear functional on R(GL2(k)) or R(l^x), one value per irreducible."""

    __slots__ = ("ctx", "group", "values")

    def __init__(self, ctx: FieldCtx, group: str, values):
        values = np.array(values, dtype=np.int64)
        if values.shape != (len(basis_labels(ctx, group)),):
            raise CharError(f"bad functional shape {values.shape} for {group}")
        values.setflags(write=False)
        self.ctx = ctx
        self.group = group
        self.values = values

    def __call__(self, v: GrothElt) -> int:
        if v.group != self.group:
            raise CharError("functional applied to the wrong group")
        return int(self.values @ v.coeffs)

    def as_element(self) -> GrothElt:
        """The element sum_sigma iota(sigma) [sigma] under the orthonormal pairing."""
        return GrothElt(self.ctx, self.group, self.values)

    def __eq__(self, other):
        if not isinstance(other, IotaFunctional):
            return NotImplemented
        return other.ctx is self.ctx and other.group == self.group and bool(np.array_equal(self.values, other.values))

    __hash__ = None

    def to_json(self) -> dict:
        labels = basis_labels(self.ctx, self.group)
        return {
            "group": self.group,
            "q": self.ctx.q,
            "entries": [
                {"label": label_to_json(self.group, lab), "value": int(v)} for lab, v in zip(labels, self.values) if v
            ],
        }

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> IotaFunctional:
        group = obj.get("group")
        if group not in (GL2, LX):
            raise CharError(f"unknown group {group!r}")
        if obj.get("q", ctx.q) != ctx.q:
            raise CharError(f"functional is for q={obj.get('q')}, context has q={ctx.q}")
        index = {lab: i for i, lab in enumerate(basis_labels(ctx, group))}
        v = np.zeros(len(index), dtype=np.int64)
        for entry in obj.get("entries", []):
            value = entry["value"]
            if not isinstance(value, int):
                raise CharError(f"functional value {value!r} is not an integer")
            v[index[label_from_json(ctx, group, entry["label"])]] = value
        return cls(ctx, group, v)

    def __repr__(self):
        return f"IotaFunctional({self.group}, q={self.ctx.q}, nonzero={int(np.count_nonzero(self.values))})"


def iota_transport(ctx: FieldCtx, iota: IotaFunctional) -> IotaFunctional:
    """iota_D := iota o JL, evaluated on each character of l^x."""
    if iota.group != GL2:
        raise CharError("iota_transport expects a functional on R(GL2(k))")
    return IotaFunctional(ctx, LX, [iota(jl_image(ctx, m)) for m in range(ctx.n)])


def serre_weights(iota: IotaFunctional) -> list:
    """Basis labels at which the functional is positive."""
    labels = basis_labels(iota.ctx, iota.group)
    return [lab for lab, v in zip(labels, iota.values) if v > 0]


def common_zero_classes(ctx: FieldCtx) -> list:
    """Semisimple classes on which sigma(tau) vanishes for every tame non-scalar tau.

    The span measured by ``span_rank`` is the ideal generated by these
    characters, so its rank is at most q(q-1) minus the length of this list.
    """
    sigmas = [_sigma_bar0(ctx, tau).sigma.values for tau in tame_types(ctx, ("ps", "cuspidal"))]
    labels = _sigma_bar0(ctx, ScalarType(0)).sigma.labels
    if not sigmas:
        return list(labels)
    nonzero = np.any(np.stack(sigmas).any(axis=2), axis=0)
    return [lab for lab, nz in zip(labels, nonzero) if not nz]
