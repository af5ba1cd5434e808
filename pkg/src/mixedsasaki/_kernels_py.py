"""Pure-Python/numpy implementations of the exterior-algebra hot kernels.

These are the reference implementations; the compiled module ``_kernels_c``
must agree with them to rounding. Object-dtype inputs (e.g. Fractions) are
supported here and only here.
"""

from itertools import permutations

import numpy as np

from . import _tables

NAME = "python"


def _perm_sign(perm):
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _det_leibniz(mat):
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        term = _perm_sign(perm)
        for r in range(n):
            term = term * mat[r][perm[r]]
        total = total + term
    return total


def wedge(m, p, q, a, b):
    ia, ib, ic, sg = _tables.wedge_table(m, p, q)
    size = len(_tables.combos(m, p + q)) if p + q <= m else 0
    if a.dtype == object or b.dtype == object:
        out = np.zeros(size, dtype=object)
        out[:] = 0
        for i, j, k, s in zip(ia.tolist(), ib.tolist(), ic.tolist(), sg.tolist()):
            out[k] = out[k] + int(s) * a[i] * b[j]
        return out
    return np.bincount(ic, weights=sg * a[ia] * b[ib], minlength=size).astype(np.float64)


def evaluate(m, p, coeffs, vecs):
    """Sum over increasing tuples I of coeffs[I] * det(vecs[b, :, I]) for each b."""
    nb = vecs.shape[0]
    if p == 0:
        return np.full(nb, coeffs[0], dtype=coeffs.dtype)
    if p == 1:
        return vecs[:, 0, :] @ coeffs
    nz = np.flatnonzero(coeffs != 0)
    c = _tables.combos(m, p)[nz]
    if vecs.dtype == object or coeffs.dtype == object:
        out = np.zeros(nb, dtype=object)
        for bi in range(nb):
            total = 0
            for row, k in zip(c.tolist(), nz.tolist()):
                sub = [[vecs[bi, r, col] for col in row] for r in range(p)]
                total = total + coeffs[k] * _det_leibniz(sub)
            out[bi] = total
        return out
    if len(nz) == 0:
        return np.zeros(nb)
    sub = vecs[:, :, c].transpose(0, 2, 1, 3)  # (B, K, p, p)
    return np.linalg.det(sub) @ coeffs[nz]
