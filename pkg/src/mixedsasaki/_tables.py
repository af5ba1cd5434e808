"""Cached index tables for alternating forms stored on increasing index tuples.

A rank-p coefficient array over an m-dimensional space has one entry per
strictly increasing tuple ``i_1 < ... < i_p``, in lexicographic order
(the order produced by :func:`itertools.combinations`).
"""

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

MAX_DIM = 20


def _check(m, p):
    if m < 0 or m > MAX_DIM:
        raise ValueError(f"dimension {m} outside supported range 0..{MAX_DIM}")
    if p < 0:
        raise ValueError(f"negative rank {p}")


@lru_cache(maxsize=None)
def combos(m, p):
    """(C(m,p), p) int64 array of increasing index tuples."""
    _check(m, p)
    if p > m:
        return np.zeros((0, p), dtype=np.int64)
    out = np.array(list(combinations(range(m), p)), dtype=np.int64)
    return out.reshape(comb(m, p), p)


@lru_cache(maxsize=None)
def masks(m, p):
    """Bitmask of each increasing tuple, aligned with :func:`combos`."""
    c = combos(m, p)
    return np.left_shift(np.int64(1), c).sum(axis=1).astype(np.int64)


@lru_cache(maxsize=None)
def position(m, p):
    """Lookup ``mask -> row in combos(m, p)``; -1 for masks of other popcount."""
    pos = np.full(1 << m, -1, dtype=np.int64)
    pos[masks(m, p)] = np.arange(comb(m, p) if p <= m else 0, dtype=np.int64)
    return pos


def _inversions(ma, mb):
    """Number of pairs (a in A, b in B) with a > b, for disjoint bitsets."""
    inv = 0
    t = mb
    while t:
        low = t & -t
        inv += bin(ma & ~((low << 1) - 1)).count("1")
        t ^= low
    return inv


@lru_cache(maxsize=None)
def wedge_table(m, p, q):
    """Flat tables (ia, ib, ic, sign) covering every disjoint basis pair."""
    ma_all = masks(m, p)
    mb_all = masks(m, q)
    pos_c = position(m, p + q) if p + q <= m else None
    ia, ib, ic, sg = [], [], [], []
    if pos_c is not None:
        for i, ma in enumerate(ma_all.tolist()):
            for j, mb in enumerate(mb_all.tolist()):
                if ma & mb:
                    continue
                ia.append(i)
                ib.append(j)
                ic.append(int(pos_c[ma | mb]))
                sg.append(-1.0 if _inversions(ma, mb) % 2 else 1.0)
    as_int = lambda v: np.asarray(v, dtype=np.int64)
    return as_int(ia), as_int(ib), as_int(ic), np.asarray(sg, dtype=np.float64)


@lru_cache(maxsize=None)
def interior_table(m, p):
    """Tables (i_src, slot_index, i_dst, sign) for contracting the first slot.

    For every increasing p-tuple I and every position r in it, the p-1 tuple
    I minus I[r] receives ``(-1)**r * X[I[r]] * omega_I``.
    """
    c = combos(m, p)
    pos = position(m, p - 1)
    src, idx, dst, sg = [], [], [], []
    for row, tup in enumerate(c.tolist()):
        mask = sum(1 << t for t in tup)
        for r, t in enumerate(tup):
            src.append(row)
            idx.append(t)
            dst.append(int(pos[mask ^ (1 << t)]))
            sg.append(-1.0 if r % 2 else 1.0)
    as_int = lambda v: np.asarray(v, dtype=np.int64)
    return as_int(src), as_int(idx), as_int(dst), np.asarray(sg, dtype=np.float64)
