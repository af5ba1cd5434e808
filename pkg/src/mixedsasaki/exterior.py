"""Pointwise exterior algebra over a diagonal (possibly indefinite) inner product.

Conventions: determinant convention throughout, no 1/p! factors. A rank-p
form stores its coefficients on increasing index tuples, and

    omega(X_1, ..., X_p) = sum_I omega_I * det[X_r^{I_c}]

so e^1 ^ e^2 (e_1, e_2) = 1 and (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X).
"""

from math import comb

import numpy as np

from . import _tables, kernels


class AlternatingForm:
    """A rank-p alternating form on R^dim.

    A form of rank > dim is the zero object of that rank: it has no
    coefficients and evaluates to 0.
    """

    __slots__ = ("dim", "rank", "coeffs")

    def __init__(self, dim, rank, coeffs=None):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        size = comb(dim, rank) if rank <= dim else 0
        if coeffs is None:
            coeffs = np.zeros(size)
        coeffs = np.asarray(coeffs)
        if coeffs.dtype.kind in "iub":
            coeffs = coeffs.astype(np.float64)
        if coeffs.shape != (size,):
            raise ValueError(f"rank-{rank} form on R^{dim} needs {size} coefficients, got {coeffs.shape}")
        self.dim = dim
        self.rank = rank
        self.coeffs = coeffs

    # construction -----------------------------------------------------------

    @classmethod
    def scalar(cls, dim, value):
        return cls(dim, 0, np.array([value]))

    @classmethod
    def basis(cls, dim, indices):
        """e^{i_1} ^ ... ^ e^{i_p} for 0-based indices in any order."""
        indices = list(indices)
        p = len(indices)
        if p > dim:
            return cls(dim, p)
        out = cls(dim, p)
        if len(set(indices)) < p:
            return out
        sign = float(_perm_parity(indices))
        mask = sum(1 << i for i in indices)
        out.coeffs[_tables.position(dim, p)[mask]] = sign
        return out

    @classmethod
    def from_covector(cls, v):
        v = np.asarray(v)
        return cls(len(v), 1, v.copy())

    @classmethod
    def from_matrix(cls, w):
        """2-form with omega(X, Y) = X^T W Y; W is antisymmetrized first."""
        w = np.asarray(w, dtype=float)
        w = 0.5 * (w - w.T)
        c = _tables.combos(len(w), 2)
        return cls(len(w), 2, w[c[:, 0], c[:, 1]])

    @classmethod
    def from_tensor(cls, t):
        """From a fully antisymmetric dense array (reads the increasing-index entries)."""
        t = np.asarray(t)
        p = t.ndim
        dim = t.shape[0] if p else 0
        c = _tables.combos(dim, p)
        return cls(dim, p, t[tuple(c.T)] if p else t.reshape(1))

    # algebra ----------------------------------------------------------------

    @property
    def is_zero(self):
        return not np.any(self.coeffs != 0)

    def _like(self, other):
        if not isinstance(other, AlternatingForm):
            return NotImplemented
        if (self.dim, self.rank) != (other.dim, other.rank):
            raise ValueError(f"rank/dim mismatch: ({self.rank},{self.dim}) vs ({other.rank},{other.dim})")
        return True

    def __add__(self, other):
        if self._like(other) is NotImplemented:
            return NotImplemented
        return AlternatingForm(self.dim, self.rank, self.coeffs + other.coeffs)

    def __sub__(self, other):
        if self._like(other) is NotImplemented:
            return NotImplemented
        return AlternatingForm(self.dim, self.rank, self.coeffs - other.coeffs)

    def __neg__(self):
        return AlternatingForm(self.dim, self.rank, -self.coeffs)

    def __mul__(self, scalar):
        return AlternatingForm(self.dim, self.rank, self.coeffs * scalar)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __call__(self, *vectors):
        return evaluate(self, *vectors)

    def __repr__(self):
        return f"AlternatingForm(dim={self.dim}, rank={self.rank}, nnz={np.count_nonzero(self.coeffs)})"

    def norm(self):
        """Euclidean norm of the stored coefficients."""
        return float(np.sqrt(np.sum(np.abs(self.coeffs.astype(float)) ** 2))) if self.coeffs.size else 0.0

    def evaluate_batch(self, vecs):
        """Values on a batch of p-tuples, vecs shaped (B, p, dim)."""
        vecs = np.asarray(vecs)
        if vecs.ndim != 3 or vecs.shape[1:] != (self.rank, self.dim):
            raise ValueError(f"expected (B, {self.rank}, {self.dim}) batch, got {vecs.shape}")
        if self.rank > self.dim:
            return np.zeros(vecs.shape[0])
        return kernels.evaluate(self.dim, self.rank, self.coeffs, vecs)

    def pullback(self, frame):
        """Form on R^d whose coefficients are the values on rows of ``frame`` (d, dim)."""
        frame = np.asarray(frame)
        d = frame.shape[0]
        if self.rank > d:
            return AlternatingForm(d, self.rank)
        if self.rank == 0:
            return AlternatingForm(d, 0, self.coeffs.copy())
        c = _tables.combos(d, self.rank)
        return AlternatingForm(d, self.rank, self.evaluate_batch(frame[c]))

    def to_tensor(self):
        """Dense fully antisymmetric array of shape (dim,) * rank."""
        p, m = self.rank, self.dim
        out = np.zeros((m,) * p, dtype=self.coeffs.dtype)
        if p == 0:
            return self.coeffs.reshape(())
        if p > m:
            return out
        from itertools import permutations
        for perm in permutations(range(p)):
            sign = _perm_parity(perm)
            cols = _tables.combos(m, p)[:, perm]
            out[tuple(cols.T)] = sign * self.coeffs
        return out


def _perm_parity(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def evaluate(omega, *vectors):
    """omega(X_1, ..., X_p) under the determinant convention."""
    if len(vectors) != omega.rank:
        raise ValueError(f"rank-{omega.rank} form takes {omega.rank} vectors, got {len(vectors)}")
    if omega.rank == 0:
        return omega.coeffs[0]
    vecs = np.asarray(vectors)
    if vecs.shape[1] != omega.dim:
        raise ValueError(f"vectors of length {vecs.shape[1]} for a form on R^{omega.dim}")
    return omega.evaluate_batch(vecs[None])[0]


def wedge(alpha, beta):
    """alpha ^ beta; the zero object when the rank exceeds the dimension."""
    if alpha.dim != beta.dim:
        raise ValueError(f"dimension mismatch {alpha.dim} vs {beta.dim}")
    m, p, q = alpha.dim, alpha.rank, beta.rank
    if p + q > m:
        return AlternatingForm(m, p + q)
    if p == 0:
        return AlternatingForm(m, q, alpha.coeffs[0] * beta.coeffs)
    if q == 0:
        return AlternatingForm(m, p, beta.coeffs[0] * alpha.coeffs)
    return AlternatingForm(m, p + q, kernels.wedge(m, p, q, alpha.coeffs, beta.coeffs))


def wedge_power(alpha, k):
    """alpha ^ ... ^ alpha (k factors); k = 0 gives the constant 1."""
    out = AlternatingForm.scalar(alpha.dim, 1.0)
    for _ in range(k):
        out = wedge(out, alpha)
    return out


def interior(x, omega):
    """Contraction into the first slot: (x _| omega)(Y...) = omega(x, Y...)."""
    if omega.rank == 0:
        raise ValueError("interior product of a 0-form is undefined")
    x = np.asarray(x)
    if x.shape != (omega.dim,):
        raise ValueError(f"vector of length {x.shape} for a form on R^{omega.dim}")
    m, p = omega.dim, omega.rank
    if p > m:
        return AlternatingForm(m, p - 1)
    src, idx, dst, sg = _tables.interior_table(m, p)
    size = comb(m, p - 1)
    if omega.coeffs.dtype == object or x.dtype == object:
        out = np.zeros(size, dtype=object)
        out[:] = 0
        np.add.at(out, dst, sg.astype(int).astype(object) * x[idx] * omega.coeffs[src])
        return AlternatingForm(m, p - 1, out)
    vals = sg * x[idx] * omega.coeffs[src]
    return AlternatingForm(m, p - 1, np.bincount(dst, weights=vals, minlength=size))


def flat(space, x):
    """The 1-form Y -> <x, Y>."""
    x = np.asarray(x)
    if x.shape != (space.dim,):
        raise ValueError(f"vector of length {x.shape} in a space of dimension {space.dim}")
    return AlternatingForm(space.dim, 1, space.eps * x)


def sharp(space, alpha):
    """Inverse of :func:`flat`."""
    if alpha.rank != 1 or alpha.dim != space.dim:
        raise ValueError("sharp needs a 1-form of matching dimension")
    return space.eps * alpha.coeffs
