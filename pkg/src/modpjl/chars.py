"""Ordinary and Brauer characters of GL2(k) and l^x, and exact decomposition.

Characters of k^x are encoded by an exponent m mod q-1 and characters of l^x
by an exponent m mod n; in both cases the value at gamma^t (t an l-dlog) is
zeta^(m t).  A reduction mod p is modelled by restricting the ordinary
character to the semisimple classes, so every representation here is a
class function.

Worked example, q = 3 (n = 8), classes in canonical order
Central(0), Central(1), Split(0,1), Elliptic(1), Elliptic(2), Elliptic(5):
the cuspidal character of exponent 1 takes the values

    2, -2, 0, -zeta - zeta^3, 0, zeta + zeta^3

and so does Sym^1 (x) det^1, i.e. the Brauer irreducible (r=1, m=1).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Union

import numpy as np

from ._modlin import SingularModError, inv_mod, symmetric_crt
from .classfn import GL2, LX, ClassFn, ClassFnError, class_labels, eigen_arrays
from .scalars import FieldCtx, evaluation_primes


class CharError(ValueError):
    pass


class NotInLatticeError(CharError):
    pass


# ---------------------------------------------------------------------------
# ordinary characters of GL2(k)


@dataclass(frozen=True)
class DetTwist:
    m: int


@dataclass(frozen=True)
class SteinbergTwist:
    m: int


@dataclass(frozen=True)
class PrincipalSeries:
    m1: int
    m2: int


@dataclass(frozen=True)
class Cuspidal:
    m: int


OrdChar = Union[DetTwist, SteinbergTwist, PrincipalSeries, Cuspidal]


def normalize_ord(ctx: FieldCtx, c: OrdChar) -> OrdChar:
    """Reduce exponents and validate; PrincipalSeries and Cuspidal get canonical order."""
    qm = ctx.q - 1
    if isinstance(c, DetTwist):
        return DetTwist(c.m % qm)
    if isinstance(c, SteinbergTwist):
        return SteinbergTwist(c.m % qm)
    if isinstance(c, PrincipalSeries):
        a, b = sorted((c.m1 % qm, c.m2 % qm))
        if a == b:
            raise CharError("principal series needs two distinct characters")
        return PrincipalSeries(a, b)
    if isinstance(c, Cuspidal):
        m = c.m % ctx.n
        if m % (ctx.q + 1) == 0:
            raise CharError(f"cuspidal character exponent {c.m} factors through norm")
        return Cuspidal(min(m, m * ctx.q % ctx.n))
    raise CharError(f"not an ordinary character: {c!r}")


# weights per class kind: central, split, elliptic, nonsemisimple
def _kind_codes(ctx: FieldCtx, full: bool) -> np.ndarray:
    labels = class_labels(ctx, GL2)
    codes = [{"central": 0, "split": 1, "elliptic": 2}[c.kind] for c in labels]
    if full:
        codes += [3] * (ctx.q - 1)
    return np.array(codes, dtype=np.int64)


def _ordinary_values(ctx: FieldCtx, c: OrdChar, full: bool = False) -> np.ndarray:
    c = normalize_ord(ctx, c)
    q = ctx.q
    a, b = eigen_arrays(ctx, GL2, full)
    kinds = _kind_codes(ctx, full)
    if isinstance(c, DetTwist):
        exps = (c.m * (a + b))[:, None]
        w = np.ones_like(exps)
    elif isinstance(c, SteinbergTwist):
        exps = (c.m * (a + b))[:, None]
        w = np.array([q, 1, -1, 0])[kinds][:, None]
    elif isinstance(c, PrincipalSeries):
        exps = np.stack([c.m1 * a + c.m2 * b, c.m1 * b + c.m2 * a], axis=1)
        w = np.array([[q + 1, 0], [1, 1], [0, 0], [1, 0]])[kinds]
    else:
        exps = np.stack([c.m * a, c.m * b], axis=1)
        w = np.array([[q - 1, 0], [0, 0], [-1, -1], [-1, 0]])[kinds]
    return ctx.ring.from_exponents(exps, w)


def ordinary_char(ctx: FieldCtx, c: OrdChar) -> ClassFn:
    """Ordinary irreducible character restricted to the semisimple classes."""
    return ClassFn(ctx, GL2, _ordinary_values(ctx, c))


def ordinary_chars(ctx: FieldCtx) -> list[OrdChar]:
    """All q^2 - 1 ordinary irreducibles, one per isomorphism class."""
    qm = ctx.q - 1
    out: list[OrdChar] = [DetTwist(m) for m in range(qm)]
    out += [SteinbergTwist(m) for m in range(qm)]
    out += [PrincipalSeries(a, b) for a in range(qm) for b in range(a + 1, qm)]
    seen = set()
    for m in range(ctx.n):
        if m % (ctx.q + 1):
            c = normalize_ord(ctx, Cuspidal(m))
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def ord_char_to_json(c: OrdChar) -> dict:
    if isinstance(c, PrincipalSeries):
        return {"kind": "ps", "m1": c.m1, "m2": c.m2}
    name = {DetTwist: "det", SteinbergTwist: "steinberg", Cuspidal: "cuspidal"}[type(c)]
    return {"kind": name, "m": c.m}


# ---------------------------------------------------------------------------
# irreducible Brauer characters


@dataclass(frozen=True, order=True)
class BrauerIrredLabel:
    """Tensor product over j of Sym^{r_j} twisted by Frobenius^j, times det^m."""

    r: tuple[int, ...]
    m: int

    def to_json(self) -> dict:
        return {"r": list(self.r), "m": self.m}

    @classmethod
    def from_json(cls, obj) -> BrauerIrredLabel:
        return cls(tuple(int(v) for v in obj["r"]), int(obj["m"]))

    def __str__(self):
        return f"(r={','.join(map(str, self.r))}, m={self.m})"


def check_label(ctx: FieldCtx, label: BrauerIrredLabel) -> BrauerIrredLabel:
    if len(label.r) != ctx.f or any(not 0 <= r < ctx.p for r in label.r):
        raise CharError(f"label {label} out of range for q={ctx.q}")
    if not 0 <= label.m < ctx.q - 1:
        raise CharError(f"twist exponent {label.m} out of range [0, {ctx.q - 2}]")
    return label


def det_twist_digits(ctx: FieldCtx, m: int) -> tuple[int, ...]:
    """Digits s_j with sum s_j p^j = m, realising det^m as a product of twisted det^{s_j}."""
    m %= ctx.q - 1
    return tuple((m // ctx.p**j) % ctx.p for j in range(ctx.f))


@functools.lru_cache(maxsize=None)
def brauer_labels(ctx: FieldCtx) -> tuple[BrauerIrredLabel, ...]:
    return tuple(
        BrauerIrredLabel(tuple(r), m)
        for r in itertools.product(range(ctx.p), repeat=ctx.f)
        for m in range(ctx.q - 1)
    )


def _sym_exponents(ctx: FieldCtx, a, b, factors) -> np.ndarray:
    """Exponents of every eigenvalue monomial of prod_j Sym^{d_j}, twisted by p^j.

    ``factors`` is a sequence of (j, d, det_power); returns an (N, T) array.
    """
    n, p = ctx.n, ctx.p
    exps = np.zeros((a.shape[0], 1), dtype=np.int64)
    for j, d, s in factors:
        pj = p**j
        i = np.arange(d + 1, dtype=np.int64)
        e = pj * (i[None, :] * a[:, None] + (d - i)[None, :] * b[:, None] + s * (a + b)[:, None])
        exps = ((exps[:, :, None] + e[:, None, :]) % n).reshape(a.shape[0], -1)
    return exps


def _brauer_exponents(ctx: FieldCtx, label: BrauerIrredLabel, a, b) -> np.ndarray:
    factors = [(j, r, 0) for j, r in enumerate(label.r)]
    exps = _sym_exponents(ctx, a, b, factors)
    return (exps + (label.m * (a + b))[:, None]) % ctx.n


def brauer_irred(ctx: FieldCtx, label: BrauerIrredLabel) -> ClassFn:
    check_label(ctx, label)
    a, b = eigen_arrays(ctx, GL2)
    return ClassFn(ctx, GL2, ctx.ring.from_exponents(_brauer_exponents(ctx, label, a, b)))


def l_character(ctx: FieldCtx, m: int) -> ClassFn:
    """The character gamma^t -> zeta^(m t) of l^x."""
    t = np.arange(ctx.n, dtype=np.int64)
    return ClassFn(ctx, LX, ctx.ring.from_exponents(m * t))


# ---------------------------------------------------------------------------
# algebraic weights


@dataclass(frozen=True)
class Weight:
    """Highest weight: entries (j, a1, a2) with a1 >= a2, j an embedding index."""

    entries: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(tuple(int(v) for v in e) for e in self.entries)))
        for j, a1, a2 in self.entries:
            if a1 < a2:
                raise CharError(f"weight entry ({j}, {a1}, {a2}) has a1 < a2")

    def check(self, ctx: FieldCtx) -> Weight:
        for j, _, _ in self.entries:
            if not 0 <= j < ctx.f:
                raise CharError(f"embedding index {j} out of range for f={ctx.f}")
        return self

    def to_json(self) -> list:
        return [list(e) for e in self.entries]

    @classmethod
    def from_json(cls, obj) -> Weight:
        try:
            return cls(tuple(tuple(e) for e in obj))
        except (TypeError, ValueError) as exc:
            raise CharError(f"malformed weight {obj!r}") from exc

    def __str__(self):
        return "[" + ", ".join(f"{j}:({a1},{a2})" for j, a1, a2 in self.entries) + "]"


def weight_box(ctx: FieldCtx, bound: int | None = None) -> list[Weight]:
    """Weights with one pair a1 >= a2 in [0, bound] per embedding (default bound p-1)."""
    if bound is None:
        bound = ctx.p - 1
    pairs = [(a1, a2) for a1 in range(bound + 1) for a2 in range(a1 + 1)]
    return [
        Weight(tuple((j, a1, a2) for j, (a1, a2) in enumerate(choice)))
        for choice in itertools.product(pairs, repeat=ctx.f)
    ]


def _weight_values(ctx: FieldCtx, lam: Weight, a, b) -> np.ndarray:
    lam.check(ctx)
    factors = [(j, a1 - a2, a2) for j, a1, a2 in lam.entries]
    return ctx.ring.from_exponents(_sym_exponents(ctx, a, b, factors))


def f_lambda(ctx: FieldCtx, lam: Weight) -> ClassFn:
    return ClassFn(ctx, GL2, _weight_values(ctx, lam, *eigen_arrays(ctx, GL2)))


def f_lambda_D(ctx: FieldCtx, lam: Weight) -> ClassFn:
    return ClassFn(ctx, LX, _weight_values(ctx, lam, *eigen_arrays(ctx, LX)))


# ---------------------------------------------------------------------------
# Grothendieck group elements


def basis_labels(ctx: FieldCtx, group: str) -> tuple:
    if group == GL2:
        return brauer_labels(ctx)
    if group == LX:
        return tuple(range(ctx.n))
    raise ClassFnError(f"unknown group {group!r}")


def _basis_name(group: str) -> str:
    return "brauer-irred" if group == GL2 else "l-characters"


def label_to_json(group: str, label):
    return label.to_json() if group == GL2 else {"exp": label}


def label_from_json(ctx: FieldCtx, group: str, obj):
    if group == GL2:
        return check_label(ctx, BrauerIrredLabel.from_json(obj))
    m = obj["exp"] if isinstance(obj, dict) else obj
    return int(m) % ctx.n


class GrothElt:
    """Integer combination of irreducible mod-p representations of GL2(k) or l^x."""

    __slots__ = ("ctx", "group", "coeffs")

    def __init__(self, ctx: FieldCtx, group: str, coeffs):
        coeffs = np.array(coeffs, dtype=np.int64)
        if coeffs.shape != (len(basis_labels(ctx, group)),):
            raise CharError(f"bad coefficient vector shape {coeffs.shape} for {group}")
        coeffs.setflags(write=False)
        self.ctx = ctx
        self.group = group
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx: FieldCtx, group: str) -> GrothElt:
        return cls(ctx, group, np.zeros(len(basis_labels(ctx, group)), dtype=np.int64))

    @classmethod
    def unit(cls, ctx: FieldCtx, group: str, label) -> GrothElt:
        v = np.zeros(len(basis_labels(ctx, group)), dtype=np.int64)
        v[_basis_index(ctx, group)[label]] = 1
        return cls(ctx, group, v)

    @property
    def labels(self) -> tuple:
        return basis_labels(self.ctx, self.group)

    def __getitem__(self, label) -> int:
        return int(self.coeffs[_basis_index(self.ctx, self.group)[label]])

    def support(self) -> dict:
        return {lab: int(c) for lab, c in zip(self.labels, self.coeffs) if c}

    def _check(self, other):
        if not isinstance(other, GrothElt) or other.ctx is not self.ctx or other.group != self.group:
            raise CharError("mixed Grothendieck groups")

    def __add__(self, other):
        self._check(other)
        return GrothElt(self.ctx, self.group, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return GrothElt(self.ctx, self.group, self.coeffs - other.coeffs)

    def __neg__(self):
        return GrothElt(self.ctx, self.group, -self.coeffs)

    def __rmul__(self, c: int):
        return GrothElt(self.ctx, self.group, int(c) * self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GrothElt):
            return NotImplemented
        return other.ctx is self.ctx and other.group == self.group and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def class_function(self) -> ClassFn:
        return recombine(self.ctx, self.group, self.coeffs)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "q": self.ctx.q,
            "basis": _basis_name(self.group),
            "coeffs": [{"label": label_to_json(self.group, lab), "value": v} for lab, v in self.support().items()],
        }

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> GrothElt:
        group = obj.get("group")
        if group not in (GL2, LX):
            raise CharError(f"unknown group {group!r}")
        if obj.get("basis", _basis_name(group)) != _basis_name(group):
            raise CharError(f"basis {obj.get('basis')!r} does not match group {group}")
        if obj.get("q", ctx.q) != ctx.q:
            raise CharError(f"element is for q={obj.get('q')}, context has q={ctx.q}")
        v = np.zeros(len(basis_labels(ctx, group)), dtype=np.int64)
        index = _basis_index(ctx, group)
        for entry in obj.get("coeffs", []):
            v[index[label_from_json(ctx, group, entry["label"])]] += int(entry["value"])
        return cls(ctx, group, v)

    def __repr__(self):
        terms = " + ".join(f"{c}*{lab}" for lab, c in self.support().items())
        return f"GrothElt[{self.group}]({terms or '0'})"


@functools.lru_cache(maxsize=None)
def _basis_index(ctx: FieldCtx, group: str) -> dict:
    return {lab: i for i, lab in enumerate(basis_labels(ctx, group))}


def _basis_exponents(ctx: FieldCtx, group: str, label) -> np.ndarray:
    a, b = eigen_arrays(ctx, group)
    if group == GL2:
        return _brauer_exponents(ctx, label, a, b)
    return (label * a % ctx.n)[:, None]


def recombine(ctx: FieldCtx, group: str, coeffs) -> ClassFn:
    """Class function of sum_sigma coeffs[sigma] * (irreducible sigma)."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    nclasses = len(class_labels(ctx, group))
    counts = np.zeros((nclasses, ctx.n), dtype=np.int64)
    rows = np.arange(nclasses)[:, None]
    for lab, c in zip(basis_labels(ctx, group), coeffs):
        if c:
            e = _basis_exponents(ctx, group, lab)
            np.add.at(counts, (np.broadcast_to(rows, e.shape), e), int(c))
    return ClassFn(ctx, group, counts @ ctx.ring.powers)


class _ModularBasis:
    """Basis character table reduced modulo a few primes, with inverses."""

    def __init__(self, ctx: FieldCtx, group: str, wanted: int = 3):
        self.primes = []
        self.inverses = []
        labels = basis_labels(ctx, group)
        for ell, r in evaluation_primes(ctx.n, 8):
            rpow = np.array([pow(r, e, ell) for e in range(ctx.n)], dtype=np.int64)
            cols = [rpow[_basis_exponents(ctx, group, lab)].sum(axis=1) % ell for lab in labels]
            try:
                inv = inv_mod(np.stack(cols, axis=1), ell)
            except SingularModError:
                continue
            self.primes.append((ell, r))
            self.inverses.append(inv)
            if len(self.primes) == wanted:
                break
        if len(self.primes) < 2:
            raise CharError(f"basis of {group} is singular modulo every trial prime")


@functools.lru_cache(maxsize=None)
def _modular_basis(ctx: FieldCtx, group: str) -> _ModularBasis:
    return _ModularBasis(ctx, group)


def decompose(ctx: FieldCtx, chi: ClassFn) -> GrothElt:
    """Integer coordinates of ``chi`` over the irreducible basis of its group.

    Solves modulo each evaluation prime, lifts by CRT from the first two and
    checks the rest for consistency, then verifies exactly in Z[zeta].
    """
    if chi.ctx is not ctx:
        raise CharError("class function belongs to a different context")
    mb = _modular_basis(ctx, chi.group)
    sols = []
    for (ell, r), inv in zip(mb.primes, mb.inverses):
        vals = ctx.ring.eval_mod(chi.values, ell, r)
        sols.append(inv @ vals % ell)
    moduli = [ell for ell, _ in mb.primes]
    lifted, _ = symmetric_crt(sols[:2], moduli[:2])
    for sol, ell in zip(sols[2:], moduli[2:]):
        if not np.array_equal(lifted % ell, sol):
            raise NotInLatticeError("class function is not an integer combination of irreducibles")
    elt = GrothElt(ctx, chi.group, lifted)
    if elt.class_function() != chi:
        raise NotInLatticeError("class function is not an integer combination of irreducibles")
    return elt
