"""Independent brute-force checks of the character formulas in ``chars``.

Nothing here calls the closed-form character constructors: the principal
series is recomputed by summing over the whole group, and orthogonality is
checked on the full class list including the non-semisimple classes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from .chars import _ordinary_values, ordinary_chars, ord_char_to_json
from .classfn import (
    GL2,
    ClassFn,
    class_representative,
    class_size,
    enumerate_full_classes,
    enumerate_ss_classes,
    group_order,
)
from .scalars import FieldCtx, fl_add, fl_inv, fl_mul, fl_neg

ORACLE_MAX_Q = 9


class OracleError(ValueError):
    pass


def _check_size(ctx: FieldCtx):
    if ctx.q > ORACLE_MAX_Q:
        raise OracleError(f"group GL2(F_{ctx.q}) too large for brute force (q <= {ORACLE_MAX_Q})")


@functools.lru_cache(maxsize=None)
def _k_tables(ctx: FieldCtx):
    """Addition/multiplication/negation/inverse tables of k on codes 0..q-1.

    Code 0 is zero and code i >= 1 is gamma_k^(i-1).
    """
    q = ctx.q
    elems = [ctx.element(None)] + [ctx.k_element(i) for i in range(q - 1)]
    code = {e: i for i, e in enumerate(elems)}
    add = np.array([[code[fl_add(ctx, x, y)] for y in elems] for x in elems], dtype=np.int64)
    mul = np.array([[code[fl_mul(ctx, x, y)] for y in elems] for x in elems], dtype=np.int64)
    neg = np.array([code[fl_neg(ctx, x)] for x in elems], dtype=np.int64)
    inv = np.array([0] + [code[fl_inv(ctx, x)] for x in elems[1:]], dtype=np.int64)
    return add, mul, neg, inv, code


@functools.lru_cache(maxsize=None)
def _group_elements(ctx: FieldCtx):
    add, mul, neg, inv, _ = _k_tables(ctx)
    q = ctx.q
    a, b, c, d = (x.ravel() for x in np.meshgrid(*[np.arange(q)] * 4, indexing="ij"))
    det = add[mul[a, d], neg[mul[b, c]]]
    keep = det != 0
    return a[keep], b[keep], c[keep], d[keep], det[keep]


@functools.lru_cache(maxsize=None)
def _borel_diagonal_counts(ctx: FieldCtx) -> tuple[dict, ...]:
    """Per semisimple class g: counts of (alpha, delta) over h with h g h^-1 upper triangular."""
    add, mul, neg, inv, code = _k_tables(ctx)
    a, b, c, d, det = _group_elements(ctx)
    dinv = inv[det]
    out = []
    for cls in enumerate_ss_classes(ctx):
        (g11, g12), (g21, g22) = (tuple(code[e] for e in row) for row in class_representative(ctx, cls))
        u11 = add[mul[a, g11], mul[b, g21]]
        u12 = add[mul[a, g12], mul[b, g22]]
        u21 = add[mul[c, g11], mul[d, g21]]
        u22 = add[mul[c, g12], mul[d, g22]]
        lower = add[mul[u21, d], neg[mul[u22, c]]]
        top = mul[add[mul[u11, d], neg[mul[u12, c]]], dinv]
        bottom = mul[add[neg[mul[u21, b]], mul[u22, a]], dinv]
        hit = lower == 0
        pairs, counts = np.unique(np.stack([top[hit], bottom[hit]], axis=1), axis=0, return_counts=True)
        out.append({(int(x) - 1, int(y) - 1): int(k) for (x, y), k in zip(pairs, counts)})
    return tuple(out)


def oracle_frobenius_ps(ctx: FieldCtx, m1: int, m2: int) -> ClassFn:
    """Ind_B^G of the Borel character diag(alpha, delta) -> psi1(alpha) psi2(delta).

    Computed as (1/|B|) sum_{h in G} chi(h g h^-1), summed over the whole group.
    """
    _check_size(ctx)
    q = ctx.q
    borel = (q - 1) ** 2 * q
    rows = []
    for counts in _borel_diagonal_counts(ctx):
        exps = np.array([(q + 1) * (m1 * s + m2 * t) for (s, t) in counts], dtype=np.int64)
        w = np.array(list(counts.values()), dtype=np.int64)
        total = ctx.ring.from_exponents(exps[None, :], w[None, :])[0] if len(w) else np.zeros(ctx.ring.degree, np.int64)
        if (total % borel).any():
            raise OracleError("induced character sum not divisible by |B|")  # pragma: no cover
        rows.append(total // borel)
    return ClassFn(ctx, GL2, np.stack(rows))


@dataclass
class OrthogonalityReport:
    q: int
    checked: int
    class_size_total: int
    group_order: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.class_size_total == self.group_order


def oracle_orthogonality(ctx: FieldCtx) -> OrthogonalityReport:
    """Row orthogonality sum_C |C| chi(C) conj(chi'(C)) = delta |G| on the full table."""
    _check_size(ctx)
    ring = ctx.ring
    classes = enumerate_full_classes(ctx)
    sizes = np.array([class_size(ctx, c) for c in classes], dtype=np.int64)
    chars = ordinary_chars(ctx)
    table = np.stack([_ordinary_values(ctx, c, full=True) for c in chars])
    conj = ring.conj_many(table)
    order = group_order(ctx)
    failures = []
    for i, c in enumerate(chars):
        prods = ring.mul_many(table[i][None, :, :], conj)
        gram = np.einsum("xcd,c->xd", prods, sizes)
        expected = np.zeros_like(gram)
        expected[i, 0] = order
        for j in np.nonzero((gram != expected).any(axis=1))[0]:
            failures.append((ord_char_to_json(c), ord_char_to_json(chars[j])))
    return OrthogonalityReport(ctx.q, len(chars) ** 2, int(sizes.sum()), order, failures)
