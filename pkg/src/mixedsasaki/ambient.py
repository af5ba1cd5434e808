"""Flat semi-Euclidean spaces and the canonical para-hypercomplex operators.

Coordinates carrying a minus sign come first: R^m_nu has metric
diag(-1, ..., -1, +1, ..., +1) with nu negative entries. The operators
J_1 (complex type) and J_2, J_3 (product type) are integer matrices, and
the algebraic checks here run in exact integer arithmetic.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .report import CheckResult

#: eps_alpha for alpha = 1, 2, 3 (index 0, 1, 2).
EPSILON = (1, -1, -1)


@dataclass(frozen=True)
class SemiEuclideanSpace:
    """R^dim with a diagonal metric of the given signs."""

    dim: int
    index: int
    signs: tuple = field(repr=False)

    @classmethod
    def from_signs(cls, signs):
        signs = tuple(int(s) for s in signs)
        if any(s not in (-1, 1) for s in signs):
            raise ValueError("metric signs must be +1 or -1")
        return cls(len(signs), signs.count(-1), signs)

    @cached_property
    def metric(self):
        m = np.diag(np.array(self.signs, dtype=float))
        m.setflags(write=False)
        return m

    @cached_property
    def eps(self):
        e = np.array(self.signs)
        e.setflags(write=False)
        return e

    def inner(self, u, v):
        return inner(self, u, v)


def make_space(m, nu):
    """R^m_nu with the nu negative signs on the first coordinates."""
    if m < 1:
        raise ValueError(f"dimension must be positive, got {m}")
    if not 0 <= nu <= m:
        raise ValueError(f"index {nu} outside 0..{m}")
    return SemiEuclideanSpace(m, nu, (-1,) * nu + (1,) * (m - nu))


def inner(space, u, v):
    """sum_i eps_i u_i v_i; broadcasts over leading axes."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape[-1] != space.dim or v.shape[-1] != space.dim:
        raise ValueError(
            f"vectors of length {u.shape[-1]}, {v.shape[-1]} in a space of dimension {space.dim}"
        )
    if u.ndim == 1 and v.ndim == 1:
        return np.dot(space.eps * u, v)
    return np.sum(space.eps * u * v, axis=-1)


@dataclass(frozen=True)
class StructureOperator:
    """An integer matrix together with its type: 'complex' (J^2 = -I) or 'product' (J^2 = I)."""

    matrix: np.ndarray
    kind: str

    def __post_init__(self):
        if self.kind not in ("complex", "product"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        self.matrix.setflags(write=False)

    @property
    def epsilon(self):
        return 1 if self.kind == "complex" else -1

    def __matmul__(self, other):
        return self.matrix @ other


def canonical_para_hypercomplex(m):
    """J_1, J_2, J_3 on R^m, m a positive multiple of 4.

    J_1 rotates consecutive coordinate pairs, J_2 sends pair k to the reversed
    pair m/2 - 1 - k with a sign, J_3 reverses all coordinates.
    """
    if m < 4 or m % 4:
        raise ValueError(f"dimension must be a positive multiple of 4, got {m}")
    j1 = np.zeros((m, m), dtype=np.int64)
    j2 = np.zeros((m, m), dtype=np.int64)
    j3 = np.zeros((m, m), dtype=np.int64)
    for k in range(m // 2):
        # (Jx)_{2k} = -x_{2k+1}, (Jx)_{2k+1} = x_{2k}   (0-based)
        j1[2 * k, 2 * k + 1] = -1
        j1[2 * k + 1, 2 * k] = 1
        j2[2 * k, m - 2 * k - 2] = -1
        j2[2 * k + 1, m - 2 * k - 1] = 1
    j3[np.arange(m), m - 1 - np.arange(m)] = 1
    return (
        StructureOperator(j1, "complex"),
        StructureOperator(j2, "product"),
        StructureOperator(j3, "product"),
    )


def _as_int(op):
    return np.asarray(op.matrix if isinstance(op, StructureOperator) else op, dtype=np.int64)


def check_para_hypercomplex(space, j1, j2, j3):
    """Verify the para-hypercomplex algebra and para-hyperhermitian compatibility.

    Everything is integer arithmetic, so a passing check has residual exactly 0.
    The result notes record each relation's residual separately.
    """
    js = [_as_int(j) for j in (j1, j2, j3)]
    m = space.dim
    if any(j.shape != (m, m) for j in js):
        raise ValueError("operator shape does not match the space")
    eye = np.eye(m, dtype=np.int64)
    g = np.diag(np.asarray(space.signs, dtype=np.int64))

    def res(a):
        return int(np.abs(a).max()) if a.size else 0

    rel = {
        "J1^2=-I": res(js[0] @ js[0] + eye),
        "J2^2=I": res(js[1] @ js[1] - eye),
        "J3^2=I": res(js[2] @ js[2] - eye),
        "J1J2J3=-I": res(js[0] @ js[1] @ js[2] + eye),
        "J2J1=J3": res(js[1] @ js[0] - js[2]),
        "J1J2=-J3": res(js[0] @ js[1] + js[2]),
    }
    for a in range(3):
        for b in range(a + 1, 3):
            rel[f"J{a+1}J{b+1}+J{b+1}J{a+1}=0"] = res(js[a] @ js[b] + js[b] @ js[a])
    for a, eps in enumerate(EPSILON):
        # Gram matrix over all basis pairs: J^T G J = eps G
        rel[f"g(J{a+1}.,J{a+1}.)={eps:+d}g"] = res(js[a].T @ g @ js[a] - eps * g)
        rel[f"g(J{a+1}.,.)=-g(.,J{a+1}.)"] = res(js[a].T @ g + g @ js[a])
    worst = max(rel.values())
    failed = [k for k, v in rel.items() if v != 0]
    notes = {"relations": rel}
    if failed:
        notes["failed"] = failed
    return CheckResult(
        check_id=f"flat_examples.para_hypercomplex.m{m}",
        paper_anchor="para-hypercomplex-structure",
        n=max((m - 4) // 4, 0),
        samples=m * m,
        max_residual=float(worst),
        mean_residual=float(np.mean(list(rel.values()))),
        tolerance=0.0,
        notes=notes,
    )
