"""Semisimple conjugacy classes of GL2(k), classes of l^x, and class functions on them.

k-side labels (``Central.x``, ``Split.x``, ``Split.y``, ``NonSemisimple.x``)
are discrete logs relative to ``gamma_k = gamma^(q+1)``; ``Elliptic.z`` is a
discrete log relative to ``gamma``, canonicalised as min(t, tq mod n).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Union

import numpy as np

from .scalars import CycInt, FieldCtx, FlElem, fl_add, fl_inv, fl_mul, fl_neg, frobenius

GL2 = "GL2"
LX = "LX"


class ClassFnError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Central:
    x: int

    kind = "central"

    def eigen_dlogs(self, ctx: FieldCtx) -> tuple[int, int]:
        t = self.x * (ctx.q + 1) % ctx.n
        return t, t

    def to_json(self) -> dict:
        return {"kind": "central", "x": self.x}


@dataclass(frozen=True, order=True)
class Split:
    x: int
    y: int

    kind = "split"

    def __post_init__(self):
        if not self.x < self.y:
            raise ClassFnError(f"split class needs x < y, got {self.x}, {self.y}")

    def eigen_dlogs(self, ctx: FieldCtx) -> tuple[int, int]:
        return self.x * (ctx.q + 1) % ctx.n, self.y * (ctx.q + 1) % ctx.n

    def to_json(self) -> dict:
        return {"kind": "split", "x": self.x, "y": self.y}


@dataclass(frozen=True, order=True)
class Elliptic:
    z: int

    kind = "elliptic"

    def eigen_dlogs(self, ctx: FieldCtx) -> tuple[int, int]:
        return self.z, self.z * ctx.q % ctx.n

    def to_json(self) -> dict:
        return {"kind": "elliptic", "z": self.z}


@dataclass(frozen=True, order=True)
class NonSemisimple:
    """Class of x times a nontrivial unipotent; oracle use only."""

    x: int

    kind = "nonsemisimple"

    def eigen_dlogs(self, ctx: FieldCtx) -> tuple[int, int]:
        t = self.x * (ctx.q + 1) % ctx.n
        return t, t

    def to_json(self) -> dict:
        return {"kind": "nonsemisimple", "x": self.x}


SsClass = Union[Central, Split, Elliptic]
FullClass = Union[Central, Split, Elliptic, NonSemisimple]


def elliptic_rep(ctx: FieldCtx, t: int) -> int:
    t %= ctx.n
    if t % (ctx.q + 1) == 0:
        raise ClassFnError(f"gamma^{t} lies in k, not an elliptic eigenvalue")
    return min(t, t * ctx.q % ctx.n)


def class_from_json(obj: dict) -> FullClass:
    kind = obj.get("kind")
    try:
        if kind == "central":
            return Central(int(obj["x"]))
        if kind == "split":
            x, y = sorted((int(obj["x"]), int(obj["y"])))
            return Split(x, y)
        if kind == "elliptic":
            return Elliptic(int(obj["z"]))
        if kind == "nonsemisimple":
            return NonSemisimple(int(obj["x"]))
    except KeyError as exc:
        raise ClassFnError(f"class label {obj!r} is missing {exc}") from None
    raise ClassFnError(f"unknown class kind {kind!r}")


@functools.lru_cache(maxsize=None)
def enumerate_ss_classes(ctx: FieldCtx) -> tuple[SsClass, ...]:
    m = ctx.q - 1
    central = [Central(x) for x in range(m)]
    split = [Split(x, y) for x in range(m) for y in range(x + 1, m)]
    reps = sorted({elliptic_rep(ctx, t) for t in range(ctx.n) if t % (ctx.q + 1)})
    return tuple(central + split + [Elliptic(z) for z in reps])


@functools.lru_cache(maxsize=None)
def enumerate_l_classes(ctx: FieldCtx) -> tuple[FlElem, ...]:
    return tuple(FlElem(t) for t in range(ctx.n))


def class_size(ctx: FieldCtx, c: FullClass) -> int:
    q = ctx.q
    if isinstance(c, Central):
        return 1
    if isinstance(c, NonSemisimple):
        return q * q - 1
    if isinstance(c, Split):
        return q * (q + 1)
    if isinstance(c, Elliptic):
        return q * q - q
    raise ClassFnError(f"not a class: {c!r}")


@functools.lru_cache(maxsize=None)
def enumerate_full_classes(ctx: FieldCtx) -> tuple[FullClass, ...]:
    ss = enumerate_ss_classes(ctx)
    m = ctx.q - 1
    return ss + tuple(NonSemisimple(x) for x in range(m))


def group_order(ctx: FieldCtx) -> int:
    q = ctx.q
    return (q * q - 1) * (q * q - q)


@functools.lru_cache(maxsize=None)
def eigen_arrays(ctx: FieldCtx, group: str, full: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """l-dlogs of the two eigenvalues at every class of ``group``."""
    if group == LX:
        t = np.arange(ctx.n, dtype=np.int64)
        return t, t * ctx.q % ctx.n
    classes = enumerate_full_classes(ctx) if full else enumerate_ss_classes(ctx)
    ab = np.array([c.eigen_dlogs(ctx) for c in classes], dtype=np.int64)
    return ab[:, 0], ab[:, 1]


# ---------------------------------------------------------------------------
# classification of explicit matrices


@functools.lru_cache(maxsize=None)
def _charpoly_table(ctx: FieldCtx) -> dict:
    """(trace, det) as dlog pairs -> semisimple class with that char poly."""
    table = {}
    for c in enumerate_ss_classes(ctx):
        a, b = c.eigen_dlogs(ctx)
        tr = fl_add(ctx, FlElem(a), FlElem(b))
        det = fl_mul(ctx, FlElem(a), FlElem(b))
        table[(tr.dlog, det.dlog)] = c
    return table


def class_of(ctx: FieldCtx, g) -> FullClass:
    """Conjugacy class of an invertible 2x2 matrix ``g`` with entries FlElem in k."""
    (a, b), (c, d) = g
    for e in (a, b, c, d):
        if not ctx.in_k(e):
            raise ClassFnError(f"matrix entry {e} is not in k")
    det = fl_add(ctx, fl_mul(ctx, a, d), fl_neg(ctx, fl_mul(ctx, b, c)))
    if det.is_zero:
        raise ClassFnError("singular matrix")
    tr = fl_add(ctx, a, d)
    # every char poly over k is realised by a semisimple class; a repeated
    # root lies in k, so a non-scalar matrix with it is x * unipotent
    cls = _charpoly_table(ctx)[(tr.dlog, det.dlog)]
    if isinstance(cls, Central) and not (b.is_zero and c.is_zero and a == d):
        return NonSemisimple(cls.x)
    return cls


def class_representative(ctx: FieldCtx, c: FullClass):
    """An explicit matrix (entries FlElem in k) in the class ``c``."""
    zero, one = FlElem(None), FlElem(0)
    if isinstance(c, Central):
        x = ctx.k_element(c.x)
        return ((x, zero), (zero, x))
    if isinstance(c, NonSemisimple):
        x = ctx.k_element(c.x)
        return ((x, one), (zero, x))
    if isinstance(c, Split):
        return ((ctx.k_element(c.x), zero), (zero, ctx.k_element(c.y)))
    if isinstance(c, Elliptic):
        z = FlElem(c.z)
        zq = frobenius(ctx, z)
        tr = fl_add(ctx, z, zq)
        det = fl_mul(ctx, z, zq)
        return ((zero, fl_neg(ctx, det)), (one, tr))
    raise ClassFnError(f"not a class: {c!r}")


def conjugate(ctx: FieldCtx, h, g):
    """h g h^-1 for 2x2 matrices over l given by FlElem entries."""

    def mm(u, v):
        return tuple(
            tuple(fl_add(ctx, fl_mul(ctx, u[i][0], v[0][j]), fl_mul(ctx, u[i][1], v[1][j])) for j in range(2))
            for i in range(2)
        )

    (a, b), (c, d) = h
    det = fl_add(ctx, fl_mul(ctx, a, d), fl_neg(ctx, fl_mul(ctx, b, c)))
    di = fl_inv(ctx, det)
    hinv = ((fl_mul(ctx, d, di), fl_neg(ctx, fl_mul(ctx, b, di))), (fl_neg(ctx, fl_mul(ctx, c, di)), fl_mul(ctx, a, di)))
    return mm(mm(h, g), hinv)


# ---------------------------------------------------------------------------
# class functions


def class_labels(ctx: FieldCtx, group: str) -> tuple:
    if group == GL2:
        return enumerate_ss_classes(ctx)
    if group == LX:
        return enumerate_l_classes(ctx)
    raise ClassFnError(f"unknown group {group!r}")


class ClassFn:
    """An exact class function; ``values[i]`` is the power-basis vector at class i."""

    __slots__ = ("ctx", "group", "values")

    def __init__(self, ctx: FieldCtx, group: str, values):
        values = np.array(values, dtype=np.int64)
        expected = (len(class_labels(ctx, group)), ctx.ring.degree)
        if values.shape != expected:
            raise ClassFnError(f"class function on {group} needs shape {expected}, got {values.shape}")
        values.setflags(write=False)
        self.ctx = ctx
        self.group = group
        self.values = values

    @classmethod
    def constant(cls, ctx: FieldCtx, group: str, c: int = 1) -> ClassFn:
        v = np.zeros((len(class_labels(ctx, group)), ctx.ring.degree), dtype=np.int64)
        v[:, 0] = c
        return cls(ctx, group, v)

    @classmethod
    def from_values(cls, ctx: FieldCtx, group: str, values) -> ClassFn:
        """Build from a sequence of CycInt (or ints), one per class in canonical order."""
        ring = ctx.ring
        rows = [ring.integer(v).array if isinstance(v, int) else v.array for v in values]
        return cls(ctx, group, np.stack(rows))

    @property
    def labels(self) -> tuple:
        return class_labels(self.ctx, self.group)

    def __len__(self):
        return self.values.shape[0]

    def __getitem__(self, label) -> CycInt:
        if isinstance(label, int):
            i = label
        else:
            i = self._index()[label]
        return CycInt(self.ctx.ring, self.values[i])

    def _index(self):
        return _label_index(self.ctx, self.group)

    def items(self):
        for i, lab in enumerate(self.labels):
            yield lab, CycInt(self.ctx.ring, self.values[i])

    def _check(self, other: ClassFn):
        if not isinstance(other, ClassFn):
            raise ClassFnError(f"expected ClassFn, got {type(other).__name__}")
        if other.ctx is not self.ctx or other.group != self.group:
            raise ClassFnError(f"mixed class functions: {self.group}/q={self.ctx.q} vs {other.group}/q={other.ctx.q}")

    def __add__(self, other):
        self._check(other)
        return ClassFn(self.ctx, self.group, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return ClassFn(self.ctx, self.group, self.values - other.values)

    def __neg__(self):
        return ClassFn(self.ctx, self.group, -self.values)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return ClassFn(self.ctx, self.group, self.ctx.ring.mul_many(self.values, other.values))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> ClassFn:
        if isinstance(c, CycInt):
            return ClassFn(self.ctx, self.group, self.ctx.ring.mul_many(self.values, c.array[None, :]))
        return ClassFn(self.ctx, self.group, self.values * int(c))

    def conj(self) -> ClassFn:
        return ClassFn(self.ctx, self.group, self.ctx.ring.conj_many(self.values))

    def __eq__(self, other):
        if not isinstance(other, ClassFn):
            return NotImplemented
        return (
            other.ctx is self.ctx
            and other.group == self.group
            and bool(np.array_equal(self.values, other.values))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.values.any()

    def mismatches(self, other: ClassFn) -> list:
        """Class labels where ``self`` and ``other`` differ."""
        self._check(other)
        bad = np.nonzero((self.values != other.values).any(axis=1))[0]
        return [self.labels[i] for i in bad]

    def identity_value(self) -> CycInt:
        """Value at the identity (the dimension, for a character)."""
        return self[0]

    def to_json(self) -> dict:
        vals = []
        for lab, v in self.items():
            label = lab.to_json() if self.group == GL2 else lab.dlog
            vals.append({"class": label, "value": v.to_json()})
        return {"group": self.group, "q": self.ctx.q, "values": vals}

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> ClassFn:
        group = obj.get("group")
        if group not in (GL2, LX):
            raise ClassFnError(f"unknown group {group!r}")
        if obj.get("q", ctx.q) != ctx.q:
            raise ClassFnError(f"class function is for q={obj.get('q')}, context has q={ctx.q}")
        index = _label_index(ctx, group)
        d = ctx.ring.degree
        values = np.zeros((len(index), d), dtype=np.int64)
        seen = set()
        for entry in obj.get("values", []):
            raw = entry["class"]
            lab = class_from_json(raw) if group == GL2 else FlElem(int(raw) % ctx.n)
            if isinstance(lab, Elliptic):
                lab = Elliptic(elliptic_rep(ctx, lab.z))
            if lab not in index:
                raise ClassFnError(f"unknown class {raw!r}")
            v = entry["value"]
            if isinstance(v, int):
                v = [v]
            if len(v) > d:
                raise ClassFnError(f"value {v!r} has more than {d} coefficients")
            row = np.zeros(d, dtype=np.int64)
            row[: len(v)] = v
            values[index[lab]] = row
            seen.add(lab)
        if len(seen) != len(index):
            raise ClassFnError(f"class function is not total: {len(index) - len(seen)} classes missing")
        return cls(ctx, group, values)

    def __repr__(self):
        return f"ClassFn({self.group}, q={self.ctx.q})"


@functools.lru_cache(maxsize=None)
def _label_index(ctx: FieldCtx, group: str) -> dict:
    return {lab: i for i, lab in enumerate(class_labels(ctx, group))}


def cf_arith(op: str, *args, scalar=None):
    if op == "add":
        return functools.reduce(lambda a, b: a + b, args)
    if op == "mul":
        return functools.reduce(lambda a, b: a * b, args)
    if op == "scale":
        (a,) = args
        return a.scale(scalar)
    if op == "eq":
        a, b = args
        a._check(b)
        return a == b
    raise ValueError(f"unknown operation {op!r}")
