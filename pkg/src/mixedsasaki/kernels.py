"""Backend selection for the exterior-algebra kernels.

The compiled module is used when it imports; otherwise the numpy fallback.
Set ``MIXEDSASAKI_PURE_PYTHON=1`` to force the fallback.
"""

import os

import numpy as np

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels_c
except ImportError:  # extension not built
    _kernels_c = None
else:
    BACKENDS["cython"] = _kernels_c

if os.environ.get("MIXEDSASAKI_PURE_PYTHON") or _kernels_c is None:
    _active = _kernels_py
else:
    _active = _kernels_c


def backend_name():
    return _active.NAME


def set_backend(name):
    """Switch the process-wide backend; returns the previous name."""
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}")
    prev = _active.NAME
    _active = BACKENDS[name]
    return prev


def _pick(*arrays):
    if any(np.asarray(x).dtype == object for x in arrays):
        return _kernels_py
    return _active


def wedge(m, p, q, a, b):
    """Coefficients of the wedge of a rank-p and a rank-q coefficient array."""
    return _pick(a, b).wedge(m, p, q, a, b)


def evaluate(m, p, coeffs, vecs):
    """Evaluate a rank-p form on a batch of p-tuples, ``vecs`` shaped (B, p, m)."""
    return _pick(coeffs, vecs).evaluate(m, p, coeffs, vecs)


__all__ = ["BACKENDS", "backend_name", "set_backend", "wedge", "evaluate"]
