"""The metric cone C(M) = M x R_+ with metric dr^2 + r^2 g.

The cone is never embedded. A cone vector is a pair (X, a): a tangent
vector X of M plus the coefficient a of d/dr. Cone vector fields are finite
sums of terms c r^k W(q) (horizontal, W a field on M) and c r^k h(q) d/dr
(radial), so every radial derivative is taken in closed form and only the
M-directions are differentiated numerically, using

    nabla_X Y (cone) = nabla_X Y - r g(X, Y) d/dr
    nabla_{d/dr} X = nabla_X d/dr = X / r,    nabla_{d/dr} d/dr = 0
"""

from dataclasses import dataclass

import numpy as np

from .hypersurface import (ambient_derivative, directional_derivative, extend_canonical,
                           project_tangent, random_tangents)
from .fields import VectorField
from .report import summarize

RADII = (0.5, 1.0, 2.0)


@dataclass(frozen=True)
class ConePoint:
    base: np.ndarray
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("cone points need r > 0")


@dataclass(frozen=True)
class ConeTangent:
    base: ConePoint
    horizontal: np.ndarray
    radial: float

    def __add__(self, other):
        _same_base(self, other)
        return ConeTangent(self.base, self.horizontal + other.horizontal, self.radial + other.radial)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rmul__(self, c):
        return ConeTangent(self.base, c * np.asarray(self.horizontal), c * self.radial)

    def norm(self):
        """Euclidean size of the components, for residuals."""
        return float(np.sqrt(np.sum(np.asarray(self.horizontal) ** 2) + self.radial ** 2))


def _same_base(u, v):
    if u.base.r != v.base.r or not np.array_equal(u.base.base, v.base.base):
        raise ValueError("cone vectors are attached to different points")


def cone_metric(H, u, v):
    """a_u a_v + r^2 g(X_u, X_v)."""
    _same_base(u, v)
    return u.radial * v.radial + u.base.r ** 2 * float(H.g(u.horizontal, v.horizontal))


# -- fields --------------------------------------------------------------------------

def _scalar(h, q):
    return float(h(q)) if callable(h) else float(h)


@dataclass(frozen=True)
class ConeField:
    """sum c r^k W(q) + sum c r^k h(q) d/dr; terms are (c, k, W) and (c, k, h)."""

    horizontal: tuple = ()
    radial: tuple = ()

    def __call__(self, point):
        q, r = np.asarray(point.base, dtype=float), point.r
        X = sum((c * r ** k * W(q) for c, k, W in self.horizontal), np.zeros(len(q)))
        a = sum((c * r ** k * _scalar(h, q) for c, k, h in self.radial), 0.0)
        return ConeTangent(point, X, a)

    def __add__(self, other):
        return ConeField(self.horizontal + other.horizontal, self.radial + other.radial)

    @classmethod
    def lift(cls, W):
        """An r-independent field of M."""
        return cls(((1.0, 0, W),), ())

    @classmethod
    def radial_unit(cls):
        return cls((), ((1.0, 0, 1.0),))

    @classmethod
    def euler(cls):
        """Phi = r d/dr."""
        return cls((), ((1.0, 1, 1.0),))

    @classmethod
    def extend(cls, H, u):
        """Canonical extension of a cone vector: lifted E_X plus the constant radial part."""
        E = extend_canonical(H, u.base.base, u.horizontal)
        return cls(((1.0, 0, E),), ((float(u.radial), 0, 1.0),))


def _nabla_m(H, p, X, W):
    return project_tangent(H, p, ambient_derivative(H, p, X, W))


def cone_connection(H, U, V):
    """nabla_U V for a cone vector U = (X, a) and a cone field V, at U.base."""
    p, r = np.asarray(U.base.base, dtype=float), U.base.r
    X, a = np.asarray(U.horizontal, dtype=float), U.radial
    hor = np.zeros(len(p))
    rad = 0.0
    for c, k, W in V.horizontal:
        f, df = c * r ** k, c * k * r ** (k - 1) if k else 0.0
        Wp = W(p)
        # U(f) W + f (nabla_X W - r g(X, W) d/dr + (a / r) W)
        hor = hor + a * df * Wp + f * (_nabla_m(H, p, X, W) + (a / r) * Wp)
        rad -= f * r * float(H.g(X, Wp))
    for c, k, h in V.radial:
        f, df = c * r ** k, c * k * r ** (k - 1) if k else 0.0
        hp = _scalar(h, p)
        dh = float(directional_derivative(H, h, p, X)) if callable(h) else 0.0
        # U(f h) d/dr + f h X / r
        rad += a * df * hp + f * dh
        hor = hor + (f * hp / r) * X
    return ConeTangent(U.base, hor, rad)


# -- para-hypercomplex structure ------------------------------------------------------

@dataclass(frozen=True)
class ConeOperator:
    """J X = phi X - eta(X) Phi, J Phi = xi, extended linearly.

    On a cone vector: J(X, a) = (phi X + (a / r) xi, -r eta(X)). With
    ``sign = -1`` the operator is built from (phi, -xi, -eta) instead, which
    is the restriction of the flat ambient operator to the cone.
    """

    H: object
    triple: object
    sign: int = 1

    @property
    def epsilon(self):
        return self.triple.epsilon

    def __call__(self, u):
        q, r = np.asarray(u.base.base, dtype=float), u.base.r
        t, s = self.triple, self.sign
        X = np.asarray(u.horizontal, dtype=float)
        return ConeTangent(u.base, t.phi_at(q) @ X + s * (u.radial / r) * t.xi(q),
                           -s * r * float(t.eta_at(q) @ X))

    def apply_field(self, V):
        """J V as a cone field (powers of r shift by the Phi = r d/dr bookkeeping)."""
        t, s = self.triple, self.sign
        hor, rad = [], []
        for c, k, W in V.horizontal:
            hor.append((c, k, VectorField(lambda q, W=W: t.phi_at(q) @ W(q))))
            rad.append((-s * c, k + 1, lambda q, W=W: float(t.eta_at(q) @ W(q))))
        for c, k, h in V.radial:
            hor.append((s * c, k - 1, VectorField(lambda q, h=h: _scalar(h, q) * t.xi(q))))
        return ConeField(tuple(hor), tuple(rad))


def cone_structure(sys, sign=1):
    """The three cone operators J_1, J_2, J_3."""
    return tuple(ConeOperator(sys.context, sys[a], sign) for a in (1, 2, 3))


def parallel_residual(H, J, U, V):
    """(nabla_U J) V = nabla_U (J V) - J (nabla_U V), V a cone field."""
    return cone_connection(H, U, J.apply_field(V)) - J(cone_connection(H, U, V))


# -- restriction to r = 1 -----------------------------------------------------------

def restrict(J, p, X):
    """(xi, eta(X), phi X) read back from the cone at r = 1.

    xi = J(d/dr), eta(X) = g(xi, X), and phi X is the horizontal part of J(X, 0).
    """
    at = ConePoint(np.asarray(p, dtype=float), 1.0)
    xi = J(ConeTangent(at, np.zeros(len(at.base)), 1.0)).horizontal
    eta = float(J.H.g(xi, X))
    phi = J(ConeTangent(at, np.asarray(X, dtype=float), 0.0)).horizontal
    return xi, eta, phi


def restricted_xi_field(J):
    def field(q):
        return restrict(J, q, np.zeros(len(q)))[0]
    return VectorField(field, None, "xi from cone")


# -- the check ------------------------------------------------------------------------

def _random_cone_vectors(H, p, r, rng, count):
    at = ConePoint(np.asarray(p, dtype=float), r)
    Xs = random_tangents(H, p, rng, count)
    return [ConeTangent(at, X, float(a)) for X, a in zip(Xs, rng.standard_normal(count))]


def unit_scale_norm(v):
    """Size of a cone vector after dilating its base point back to r = 1.

    The dilation (q, r) -> (q, r / lam) is a homothety; it sends (X, a) to
    (X, a / lam), so residuals measured this way are comparable across radii.
    """
    return float(np.sqrt(np.sum(np.asarray(v.horizontal) ** 2) + (v.radial / v.base.r) ** 2))


def parallel_pairs(probes):
    """Vector pairs per point for the (finite-difference heavy) parallelism check."""
    return max(4, probes // 4)


def _parallel_samples(H, J, p, pairs, radii):
    """Parallelism residuals of the homothety images of r = 1 vector pairs."""
    out = {r: [] for r in radii}
    p = np.asarray(p, dtype=float)
    for U1, V1 in pairs:
        for r in radii:
            at = ConePoint(p, r)
            U = ConeTangent(at, U1.horizontal, r * U1.radial)
            V = ConeField.extend(H, ConeTangent(at, V1.horizontal, r * V1.radial))
            out[r].append(max(unit_scale_norm(parallel_residual(H, Ja, U, V)) for Ja in J))
    return out


def check_cone_para_hyper_kahler(sys, points, probes=20, seed=0, radii=RADII):
    """Algebra, compatibility and parallelism of the cone structure, plus the
    Euler field identity and the restriction round trip.

    The asserted operators are J X = phi X - eta(X) Phi, J Phi = xi. The
    parallelism of the sign-flipped operators (``sign = -1``) is reported
    alongside.
    """
    H = sys.context
    J = cone_structure(sys)
    Jflip = cone_structure(sys, sign=-1)
    rng = np.random.default_rng(seed)
    algebra, compat, euler = [], [], []
    parallel = {r: [] for r in radii}
    flipped = {r: [] for r in radii}
    for p in points:
        for r in radii:
            Us = _random_cone_vectors(H, p, r, rng, probes)
            Vs = _random_cone_vectors(H, p, r, rng, probes)
            for U, V in zip(Us, Vs):
                j1, j2, j3 = (Ja(U) for Ja in J)
                # J1^2 = -I, J2^2 = J3^2 = I, J1 J2 J3 = -I, J2 J1 = -J1 J2 = J3
                algebra += [(J[0](j1) + U).norm(), (J[1](j2) - U).norm(), (J[2](j3) - U).norm(),
                            (J[0](J[1](j3)) + U).norm(), (J[1](j1) - j3).norm(),
                            (J[0](j2) + j3).norm()]
                for Ja in J:
                    compat.append(cone_metric(H, Ja(U), Ja(V)) - Ja.epsilon * cone_metric(H, U, V))
                euler.append((cone_connection(H, U, ConeField.euler()) - U).norm())
        k = parallel_pairs(probes)
        pairs = list(zip(_random_cone_vectors(H, p, 1.0, rng, k),
                         _random_cone_vectors(H, p, 1.0, rng, k)))
        for r, vals in _parallel_samples(H, J, p, pairs, radii).items():
            parallel[r].extend(vals)
        for r, vals in _parallel_samples(H, Jflip, p, pairs, radii).items():
            flipped[r].extend(vals)
    n = H.n
    results = [
        summarize("cone.j_algebra", "cone-para-hyper-kahler", n, algebra, 1e-9),
        summarize("cone.compatibility", "cone-para-hyper-kahler", n, compat, 1e-9),
        summarize("cone.euler_field", "cone-para-hyper-kahler", n, euler, 1e-8),
    ]
    for r in radii:
        results.append(summarize(f"cone.parallel.r{r:g}", "cone-para-hyper-kahler", n,
                                 parallel[r], 1e-5, notes={"r": r, "operator": "J Phi = xi"}))
        results.append(summarize(f"cone.parallel.flipped.r{r:g}", "cone-para-hyper-kahler", n,
                                 flipped[r], 1e-5, status="reported",
                                 notes={"r": r, "operator": "J X = phi X + eta(X) Phi, J Phi = -xi",
                                        "holds": bool(max(flipped[r]) <= 1e-5)}))
    spread = np.ptp(np.array([parallel[r] for r in radii]), axis=0)
    results.append(summarize("cone.r_independence", "cone-para-hyper-kahler", n, spread, 1e-6,
                             notes={"radii": list(radii)}))
    results.extend(check_restriction(sys, points, probes, rng))
    return results


def check_restriction(sys, points, probes, rng):
    """Structure -> cone -> restriction at r = 1 -> structure.

    The asserted round trip reads xi = J(d/dr), eta = g(xi, .) and phi X as
    the horizontal part of J(X, 0). The derivative formulas for phi,
    -eps nabla xi (as displayed) and -nabla xi (the measured structure
    branch), are reported per alpha.
    """
    H = sys.context
    J = cone_structure(sys)
    trip = []
    displayed = {a: [] for a in (1, 2, 3)}
    measured = {a: [] for a in (1, 2, 3)}
    for p in points:
        p = np.asarray(p, dtype=float)
        for X in random_tangents(H, p, rng, probes):
            for a, Ja in zip((1, 2, 3), J):
                t = sys[a]
                xi, eta, phi = restrict(Ja, p, X)
                target = t.phi_at(p) @ X
                trip += [np.abs(xi - t.xi(p)).max(), abs(eta - float(t.eta_at(p) @ X)),
                         np.abs(phi - target).max()]
                nabla_xi = project_tangent(H, p, ambient_derivative(H, p, X, restricted_xi_field(Ja)))
                displayed[a].append(np.abs(-t.epsilon * nabla_xi - target).max())
                measured[a].append(np.abs(-nabla_xi - target).max())
    n = H.n
    out = [summarize("cone.round_trip", "cone-restriction", n, trip, 1e-10)]
    for a in (1, 2, 3):
        for tag, vals, formula in (("displayed_phi", displayed[a], "phi X = -eps nabla_X xi"),
                                   ("measured_phi", measured[a], "phi X = -nabla_X xi")):
            out.append(summarize(f"cone.round_trip.{tag}.alpha{a}", "cone-restriction", n,
                                 vals, 1e-6, status="reported",
                                 notes={"formula": formula, "holds": bool(max(vals) <= 1e-6)}))
    return out


__all__ = ["ConePoint", "ConeTangent", "ConeField", "ConeOperator", "cone_metric",
           "cone_connection", "cone_structure", "parallel_residual", "restrict", "unit_scale_norm",
           "check_cone_para_hyper_kahler", "check_restriction", "parallel_pairs", "RADII"]
