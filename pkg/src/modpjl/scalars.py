"""Exact scalars: the fields k = F_q, l = F_{q^2} and the ring Z[zeta_n], n = q^2 - 1.

Elements of l are stored by discrete logarithm with respect to a fixed
generator ``gamma``; addition goes through a Zech logarithm table.  The
Teichmuller lift of ``gamma`` is identified with ``zeta``, so Brauer
character values are exact elements of Z[zeta_n] in the power basis of
length phi(n).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

import numpy as np
from sympy import GF, Poly, Symbol, cyclotomic_poly, factorint, isprime

DEFAULT_MAX_Q = 32

_X = Symbol("x")


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Z[zeta_n]


class CyclotomicRing:
    """Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    def __init__(self, n: int):
        if n < 1:
            raise FieldError(f"bad cyclotomic order {n}")
        self.n = n
        phi_poly = Poly(cyclotomic_poly(n, _X), _X)
        # constant term first
        self.phi_n = tuple(int(c) for c in reversed(phi_poly.all_coeffs()))
        self.degree = d = len(self.phi_n) - 1
        # powers[k] = zeta^k reduced, for 0 <= k < n
        powers = np.zeros((n, d), dtype=np.int64)
        tail = -np.array(self.phi_n[:-1], dtype=np.int64)
        cur = np.zeros(d, dtype=np.int64)
        cur[0] = 1
        for k in range(n):
            powers[k] = cur
            top = cur[-1]
            cur = np.concatenate(([0], cur[:-1])) + top * tail
        self.powers = powers
        self.powers.setflags(write=False)
        self._conj = powers[(-np.arange(d)) % n]

    def __repr__(self):
        return f"CyclotomicRing(n={self.n})"

    # -- array-level kernels; rows are elements --------------------------

    def reduce(self, coeffs) -> np.ndarray:
        """Reduce integer polynomial coefficients (last axis) modulo Phi_n."""
        coeffs = np.asarray(coeffs, dtype=np.int64)
        k = coeffs.shape[-1]
        return coeffs @ self.powers[np.arange(k) % self.n]

    def mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        shape = np.broadcast_shapes(a.shape, b.shape)
        d = self.degree
        out = np.zeros(shape[:-1] + (2 * d - 1,), dtype=np.int64)
        for i in range(d):
            out[..., i:i + d] += a[..., i:i + 1] * b
        return self.reduce(out)

    def conj_many(self, a: np.ndarray) -> np.ndarray:
        return np.asarray(a, dtype=np.int64) @ self._conj

    def from_exponents(self, exps: np.ndarray, weights=None) -> np.ndarray:
        """Rows of sums  sum_j weights[i, j] * zeta^exps[i, j]."""
        exps = np.asarray(exps, dtype=np.int64) % self.n
        if exps.ndim == 1:
            exps = exps[:, None]
        rows = exps.shape[0]
        if weights is None:
            weights = np.ones_like(exps)
        weights = np.broadcast_to(np.asarray(weights, dtype=np.int64), exps.shape)
        if 4 * exps.shape[1] < self.n:
            # few terms per row: gather rows of the power table directly
            return np.einsum("rt,rtd->rd", weights, self.powers[exps])
        counts = np.zeros((rows, self.n), dtype=np.int64)
        r = np.broadcast_to(np.arange(rows)[:, None], exps.shape)
        np.add.at(counts, (r, exps), weights)
        return counts @ self.powers

    def eval_mod(self, a: np.ndarray, ell: int, r: int) -> np.ndarray:
        """Image of rows of ``a`` under zeta -> r in Z/ell (ell < 2**26)."""
        pw = np.array([pow(r, i, ell) for i in range(self.degree)], dtype=np.int64)
        return (np.asarray(a, dtype=np.int64) % ell) @ pw % ell

    # -- scalar constructors ---------------------------------------------

    def element(self, coeffs) -> CycInt:
        return CycInt(self, self.reduce(coeffs))

    def zeta_power(self, k: int) -> CycInt:
        return CycInt(self, self.powers[k % self.n])

    def integer(self, c: int) -> CycInt:
        v = np.zeros(self.degree, dtype=np.int64)
        v[0] = c
        return CycInt(self, v)

    def zero(self) -> CycInt:
        return self.integer(0)

    def one(self) -> CycInt:
        return self.integer(1)


class CycInt:
    """An element of Z[zeta_n] held in canonical (reduced) form."""

    __slots__ = ("ring", "_c")

    def __init__(self, ring: CyclotomicRing, coeffs):
        c = np.array(coeffs, dtype=np.int64)
        if c.shape != (ring.degree,):
            raise FieldError(f"expected {ring.degree} coefficients, got shape {c.shape}")
        c.setflags(write=False)
        self.ring = ring
        self._c = c

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self._c)

    @property
    def array(self) -> np.ndarray:
        return self._c

    def _check(self, other) -> CycInt:
        if isinstance(other, int):
            return self.ring.integer(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.ring.n != self.ring.n:
            raise FieldError(f"mismatched cyclotomic rings: n={self.ring.n} vs n={other.ring.n}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ring, self._c + other._c)

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.ring, -self._c)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ring, self._c - other._c)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ring, self.ring.mul_many(self._c, other._c))

    __rmul__ = __mul__

    def conj(self) -> CycInt:
        """Complex conjugation, zeta -> zeta^(n-1)."""
        return CycInt(self.ring, self.ring.conj_many(self._c))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.integer(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.ring.n == other.ring.n and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.ring.n, self.coeffs))

    def is_rational(self) -> bool:
        return not self._c[1:].any()

    def __int__(self):
        if not self.is_rational():
            raise FieldError(f"{self!r} is not a rational integer")
        return int(self._c[0])

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"CycInt[{self.ring.n}]({' + '.join(terms) or '0'})"


def cyc_arith(op: str, *args: CycInt) -> CycInt:
    if not args:
        raise ValueError("no operands")
    for a in args[1:]:
        if a.ring.n != args[0].ring.n:
            raise FieldError("mismatched cyclotomic rings")
    if op == "add":
        return functools.reduce(lambda x, y: x + y, args)
    if op == "mul":
        return functools.reduce(lambda x, y: x * y, args)
    if op == "neg":
        (a,) = args
        return -a
    if op == "conj":
        (a,) = args
        return a.conj()
    raise ValueError(f"unknown operation {op!r}")


def element_order_mod(r: int, ell: int) -> int:
    m = ell - 1
    for prime, e in factorint(m).items():
        for _ in range(e):
            if pow(r, m // prime, ell) == 1:
                m //= prime
            else:
                break
    return m


def cyc_eval_mod(x: CycInt, ell: int, r: int) -> int:
    n = x.ring.n
    if not isprime(ell) or (ell - 1) % n:
        raise FieldError(f"{ell} is not a prime congruent to 1 mod {n}")
    if element_order_mod(r % ell, ell) != n:
        raise FieldError(f"{r} does not have order {n} modulo {ell}")
    return int(x.ring.eval_mod(x.array, ell, r))


@functools.lru_cache(maxsize=None)
def evaluation_primes(n: int, count: int = 3, below: int = 1 << 26) -> tuple[tuple[int, int], ...]:
    """Primes ell = 1 mod n just below ``below``, each with an element r of order n."""
    out = []
    ell = below - 1 - (below - 2) % n
    while len(out) < count:
        if ell < 3:
            raise FieldError(f"ran out of primes = 1 mod {n}")
        if isprime(ell):
            for a in itertools.count(2):
                r = pow(a, (ell - 1) // n, ell)
                if element_order_mod(r, ell) == n:
                    out.append((ell, r))
                    break
        ell -= n
    return tuple(out)


# ---------------------------------------------------------------------------
# Finite fields by discrete log


@dataclass(frozen=True)
class FlElem:
    """Element of l: ``dlog`` is None for zero, else t with value gamma^t."""

    dlog: int | None

    @property
    def is_zero(self) -> bool:
        return self.dlog is None

    def to_json(self):
        return "0" if self.dlog is None else self.dlog

    @classmethod
    def from_json(cls, obj) -> FlElem:
        return cls(None) if obj == "0" else cls(int(obj))


ZERO = FlElem(None)


def _poly_mulmod(a, b, mod, p):
    """Product of coefficient lists (constant first) over F_p, reduced by monic ``mod``."""
    d = len(mod) - 1
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * mod[i]) % p
    return prod[:d]


def _encode(vec, p) -> int:
    return sum(c * p**i for i, c in enumerate(vec))


def _decode(code, p, d):
    out = []
    for _ in range(d):
        code, c = divmod(code, p)
        out.append(c)
    return out


def _first_irreducible(p: int, d: int) -> tuple[int, ...]:
    # monic degree-d polynomials, in increasing integer encoding of the
    # lower coefficients (constant term least significant)
    for code in range(p**d):
        low = _decode(code, p, d)
        coeffs = low + [1]
        poly = Poly(list(reversed(coeffs)), _X, domain=GF(p))
        if poly.is_irreducible:
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {d} over F_{p}")


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Arithmetic universe for one q = p^f.

    ``exp_table[t]`` is the integer encoding (coordinates over F_p, constant
    term least significant) of gamma^t; ``zech[t]`` is the dlog of
    1 + gamma^t, or -1 when that sum is zero.
    """

    p: int
    f: int
    q: int
    n: int
    modulus: tuple[int, ...]
    gamma: int
    exp_table: tuple[int, ...] = field(repr=False)
    log_table: dict = field(repr=False)
    zech: tuple[int, ...] = field(repr=False)
    ring: CyclotomicRing = field(repr=False)

    @property
    def phi_n(self) -> tuple[int, ...]:
        return self.ring.phi_n

    @property
    def gamma_k(self) -> FlElem:
        return FlElem((self.q + 1) % self.n)

    def element(self, dlog: int | None) -> FlElem:
        return ZERO if dlog is None else FlElem(dlog % self.n)

    def k_element(self, s: int) -> FlElem:
        """gamma_k^s as an element of l."""
        return FlElem(s * (self.q + 1) % self.n)

    def in_k(self, z: FlElem) -> bool:
        return z.is_zero or z.dlog % (self.q + 1) == 0

    def k_dlog(self, x: FlElem) -> int:
        if x.is_zero or not self.in_k(x):
            raise FieldError(f"{x} is not in k^x")
        return x.dlog // (self.q + 1)

    def coords(self, z: FlElem) -> tuple[int, ...]:
        code = 0 if z.is_zero else self.exp_table[z.dlog]
        return tuple(_decode(code, self.p, 2 * self.f))

    def from_coords(self, vec) -> FlElem:
        code = _encode([c % self.p for c in vec], self.p)
        return ZERO if code == 0 else FlElem(self.log_table[code])

    def from_int(self, a: int) -> FlElem:
        """Image of the integer a in the prime field."""
        return self.from_coords([a % self.p] + [0] * (2 * self.f - 1))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, f={self.f}, q={self.q}, n={self.n})"


@functools.lru_cache(maxsize=None)
def field_ctx(p: int, f: int, max_q: int = DEFAULT_MAX_Q) -> FieldCtx:
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"p={p} is not prime")
    if not isinstance(f, int) or f < 1:
        raise FieldError(f"f={f} must be a positive integer")
    q = p**f
    if q > max_q:
        raise FieldError(f"q={q} exceeds the bound {max_q}")
    n = q * q - 1
    d = 2 * f
    mod = _first_irreducible(p, d)

    def powers_of(code):
        vec = _decode(code, p, d)
        table = [1]
        cur = [1] + [0] * (d - 1)
        for _ in range(n - 1):
            cur = _poly_mulmod(cur, vec, mod, p)
            c = _encode(cur, p)
            if c == 1:
                return None
            table.append(c)
        return table

    for code in range(2, p**d):
        exp = powers_of(code)
        if exp is not None:
            gamma = code
            break
    else:  # pragma: no cover - unreachable for a field
        raise FieldError("no generator found")
    log = {c: t for t, c in enumerate(exp)}
    zech = []
    for t in range(n):
        vec = _decode(exp[t], p, d)
        vec[0] = (vec[0] + 1) % p
        s = _encode(vec, p)
        zech.append(log[s] if s else -1)
    return FieldCtx(p, f, q, n, mod, gamma, tuple(exp), log, tuple(zech), CyclotomicRing(n))


# ---------------------------------------------------------------------------
# arithmetic in l


def fl_mul(ctx: FieldCtx, a: FlElem, b: FlElem) -> FlElem:
    if a.is_zero or b.is_zero:
        return ZERO
    return FlElem((a.dlog + b.dlog) % ctx.n)


def fl_add(ctx: FieldCtx, a: FlElem, b: FlElem) -> FlElem:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    z = ctx.zech[(b.dlog - a.dlog) % ctx.n]
    return ZERO if z < 0 else FlElem((a.dlog + z) % ctx.n)


def fl_neg(ctx: FieldCtx, a: FlElem) -> FlElem:
    if a.is_zero or ctx.p == 2:
        return a
    return FlElem((a.dlog + ctx.n // 2) % ctx.n)


def fl_inv(ctx: FieldCtx, a: FlElem) -> FlElem:
    if a.is_zero:
        raise ZeroDivisionError("inverse of zero in l")
    return FlElem(-a.dlog % ctx.n)


def fl_pow(ctx: FieldCtx, a: FlElem, e: int) -> FlElem:
    if a.is_zero:
        if e < 0:
            raise ZeroDivisionError("negative power of zero")
        return FlElem(0) if e == 0 else ZERO
    return FlElem(a.dlog * e % ctx.n)


def frobenius(ctx: FieldCtx, a: FlElem) -> FlElem:
    return fl_pow(ctx, a, ctx.q)


def norm(ctx: FieldCtx, a: FlElem) -> FlElem:
    """N_{l/k}(z) = z^(q+1)."""
    return fl_pow(ctx, a, ctx.q + 1)


def fl_arith(ctx: FieldCtx, op: str, *args, exponent: int | None = None) -> FlElem:
    if op == "add":
        return functools.reduce(lambda x, y: fl_add(ctx, x, y), args)
    if op == "mul":
        return functools.reduce(lambda x, y: fl_mul(ctx, x, y), args, FlElem(0))
    if op == "inv":
        (a,) = args
        return fl_inv(ctx, a)
    if op == "pow":
        if exponent is None:
            a, exponent = args
        else:
            (a,) = args
        return fl_pow(ctx, a, exponent)
    if op == "frobenius":
        (a,) = args
        return frobenius(ctx, a)
    if op == "norm":
        (a,) = args
        return norm(ctx, a)
    raise ValueError(f"unknown operation {op!r}")


def teich(ctx: FieldCtx, z: FlElem) -> CycInt:
    """Teichmuller lift of a nonzero z = gamma^t, namely zeta^t."""
    if z.is_zero:
        raise FieldError("Teichmuller lift of zero")
    return ctx.ring.zeta_power(z.dlog)
