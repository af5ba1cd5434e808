"""Field containers shared by the hypersurface, structure and symmetry code."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class VectorField:
    """An ambient vector field, given by its smooth extension to a neighborhood.

    ``linear`` is set when the field is q -> A q for a constant matrix A; brackets
    of such fields are then computed exactly.
    """

    evaluator: object
    linear: np.ndarray = None
    name: str = ""

    def __call__(self, q):
        return np.asarray(self.evaluator(np.asarray(q, dtype=float)), dtype=float)

    def __add__(self, other):
        lin = None
        if self.linear is not None and other.linear is not None:
            lin = self.linear + other.linear
        return VectorField(lambda q: self(q) + other(q), lin, f"{self.name}+{other.name}")

    def __rmul__(self, c):
        lin = None if self.linear is None else c * self.linear
        return VectorField(lambda q: c * self(q), lin, f"{c}*{self.name}")

    @classmethod
    def constant(cls, v, name="const"):
        v = np.asarray(v, dtype=float)
        return cls(lambda q: v, None, name)

    @classmethod
    def from_matrix(cls, a, name="linear"):
        a = np.asarray(a, dtype=float)
        return cls(lambda q: a @ q, a, name)


@dataclass(frozen=True)
class MixedTriple:
    """(phi, xi, eta, epsilon): phi(q) an operator matrix, eta(q) a covector.

    ``eta_linear`` is an optional matrix A with eta(q) = A q on the surface;
    the exterior derivative of eta is then available in closed form.
    """

    phi: object
    xi: VectorField
    eta: object
    epsilon: int
    eta_linear: np.ndarray = None

    def phi_at(self, q):
        return np.asarray(self.phi(q), dtype=float)

    def eta_at(self, q):
        return np.asarray(self.eta(q), dtype=float)


@dataclass(frozen=True)
class MixedSystem:
    """Three triples with epsilon = (+1, -1, -1) and their metric context.

    ``context`` is a SemiEuclideanSpace, a LevelSetHypersurface, or None
    when no metric is declared.
    """

    triples: tuple
    context: object = None
    exact: bool = False

    def __post_init__(self):
        if len(self.triples) != 3:
            raise ValueError("a mixed system has exactly three triples")
        if tuple(t.epsilon for t in self.triples) != (1, -1, -1):
            raise ValueError("epsilon pattern must be (+1, -1, -1)")

    def __getitem__(self, alpha):
        """1-based access, matching alpha = 1, 2, 3."""
        return self.triples[alpha - 1]

    @property
    def xis(self):
        return [t.xi for t in self.triples]
