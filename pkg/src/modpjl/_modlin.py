"""Dense linear algebra over Z/ell for primes ell < 2**26 (int64-safe products)."""

from __future__ import annotations

import numpy as np


class SingularModError(ArithmeticError):
    pass


def _row_echelon(a: np.ndarray, ell: int, augment: np.ndarray | None = None):
    a = np.array(a, dtype=np.int64) % ell
    rows, cols = a.shape
    if augment is not None:
        a = np.concatenate([a, np.array(augment, dtype=np.int64) % ell], axis=1)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, ell) % ell
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - col[mask, None] * a[r]) % ell
        pivots.append(c)
        r += 1
    return a, pivots


def rank_mod(a: np.ndarray, ell: int) -> int:
    if a.size == 0:
        return 0
    _, pivots = _row_echelon(a, ell)
    return len(pivots)


def inv_mod(a: np.ndarray, ell: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    red, pivots = _row_echelon(a, ell, augment=np.eye(n, dtype=np.int64))
    if len(pivots) < n:
        raise SingularModError(f"matrix is singular modulo {ell}")
    return red[:, n:]


def symmetric_crt(residues, moduli) -> tuple[np.ndarray, int]:
    """Combine residue vectors into the symmetric lift modulo prod(moduli)."""
    x = [int(v) for v in residues[0]]
    m = moduli[0]
    for res, ell in zip(residues[1:], moduli[1:]):
        inv = pow(m, -1, ell)
        x = [xi + m * (((int(ri) - xi) * inv) % ell) for xi, ri in zip(x, res)]
        m *= ell
    half = m // 2
    lifted = [xi - m if xi > half else xi for xi in x]
    return np.array(lifted, dtype=np.int64), m
