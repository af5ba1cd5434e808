"""Non-degenerate level-set hypersurfaces M = f^{-1}(c) in a flat semi-Euclidean space.

Everything is extrinsic: points and tangent vectors are ambient coordinate
arrays, the Levi-Civita connection is the tangential part of the ambient
derivative, and derivatives along M are taken on explicit curves through
the base point whose velocity at t = 0 is the given tangent vector.

The pseudo-sphere flavor is the unit level set of <x, x> in R^{4n+4}_{2n+2};
there N(p) = p and the differentiation curve is the normalized straight line
(p + tX) / sqrt(<p + tX, p + tX>).
"""

from dataclasses import dataclass, field

import numpy as np

from .ambient import EPSILON, canonical_para_hypercomplex, inner, make_space
from .errors import (ChartExit, DegeneratePlane, FrameConstructionFailure,
                     NullGradient, SamplingExhausted)
from .fields import MixedSystem, MixedTriple, VectorField

DELTA_NULL = 1e-8
DELTA_SAMPLE = 0.1
DELTA_PLANE = 1e-8
FD_STEP = 1e-4
ON_SURFACE_TOL = 1e-12
TANGENT_TOL = 1e-10
FRAME_TOL = 1e-9
MAX_REJECTIONS = 100_000
MAX_FRAME_DRAWS = 100
TANGENT_DRAW_MIN = 1e-6


@dataclass(frozen=True)
class LevelSetHypersurface:
    """M = {f = level} with spacelike unit normal grad f / |grad f|.

    ``gradient`` returns the coordinate partial derivatives of f; the metric
    gradient is obtained by flipping the signs of the first ``index`` entries.
    """

    ambient: object
    level_function: object
    gradient: object
    level: float
    flavor: str = "generic"
    n: int = None
    fd_step: float = FD_STEP
    sampler: object = field(default=None, compare=False)

    @property
    def dim(self):
        return self.ambient.dim - 1

    def g(self, u, v):
        return inner(self.ambient, u, v)

    def residual(self, x):
        return abs(float(self.level_function(np.asarray(x, dtype=float))) - self.level)


def pseudo_sphere(n, fd_step=FD_STEP):
    """S^{4n+3}_{2n+1} = {<x, x> = 1} in R^{4n+4}_{2n+2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    space = make_space(4 * n + 4, 2 * n + 2)
    eps = space.eps

    def f(x):
        return np.sum(eps * x * x)

    def df(x):
        return 2.0 * eps * x

    return LevelSetHypersurface(space, f, df, 1.0, "pseudo_sphere", n, fd_step)


def level_set(ambient, f, df, level, sampler=None, fd_step=FD_STEP):
    """A generic level set; ``sampler(rng, count)`` must return points on it."""
    return LevelSetHypersurface(ambient, f, df, float(level), "generic", None, fd_step, sampler)


# -- validated wrappers ------------------------------------------------------

@dataclass(frozen=True)
class SurfacePoint:
    coords: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coords, dtype=dtype)


@dataclass(frozen=True)
class TangentVector:
    base: SurfacePoint
    components: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.components, dtype=dtype)


def as_point(H, x, tol=ON_SURFACE_TOL):
    x = np.asarray(x, dtype=float)
    if H.residual(x) > tol:
        raise ValueError(f"point is off the surface (residual {H.residual(x):.3e})")
    return SurfacePoint(x)


def as_tangent(H, p, v, tol=TANGENT_TOL):
    p = np.asarray(p, dtype=float)
    v = np.asarray(v, dtype=float)
    off = abs(float(H.g(v, unit_normal(H, p))))
    if off > tol:
        raise ValueError(f"vector is not tangent (normal component {off:.3e})")
    return TangentVector(SurfacePoint(p), v)


# -- normal, projection, sampling --------------------------------------------

def unit_normal(H, p):
    """grad f / |grad f|; raises NullGradient unless <grad f, grad f> > DELTA_NULL."""
    p = np.asarray(p, dtype=float)
    grad = H.ambient.eps * np.asarray(H.gradient(p), dtype=float)
    s = float(H.g(grad, grad))
    if s <= DELTA_NULL:
        raise NullGradient(f"<grad f, grad f> = {s:.3e} at the point; need a spacelike normal")
    return grad / np.sqrt(s)


def project_tangent(H, p, v, normal=None):
    """v - <v, N> N."""
    N = unit_normal(H, p) if normal is None else normal
    v = np.asarray(v, dtype=float)
    return v - np.multiply.outer(H.g(v, N), N) if v.ndim > 1 else v - H.g(v, N) * N


def sample_points(H, seed, count):
    """Deterministic points on H; pseudo-sphere draws come from the box [-1, 1]^m."""
    rng = np.random.default_rng(seed)
    if H.flavor != "pseudo_sphere":
        if H.sampler is None:
            raise ValueError("generic hypersurfaces need a user-supplied sampler")
        return np.asarray(H.sampler(rng, count), dtype=float)
    m = H.ambient.dim
    out = []
    misses = 0
    while len(out) < count:
        x = rng.uniform(-1.0, 1.0, m)
        s = float(H.g(x, x))
        if s <= DELTA_SAMPLE:
            misses += 1
            if misses >= MAX_REJECTIONS:
                raise SamplingExhausted(f"{misses} consecutive rejections")
            continue
        misses = 0
        out.append(x / np.sqrt(s))
    return np.array(out).reshape(count, m)


def random_tangents(H, p, rng, count):
    """Tangent vectors at p: projected Gaussian draws scaled to unit Euclidean length."""
    p = np.asarray(p, dtype=float)
    N = unit_normal(H, p)
    w = project_tangent(H, p, rng.standard_normal((count, H.ambient.dim)), N)
    size = np.linalg.norm(w, axis=1)
    for i in np.flatnonzero(size <= TANGENT_DRAW_MIN):
        # draw (nearly) along the normal: redraw rather than normalize round-off
        for _ in range(MAX_FRAME_DRAWS):
            v = project_tangent(H, p, rng.standard_normal(H.ambient.dim), N)
            if np.linalg.norm(v) > TANGENT_DRAW_MIN:
                w[i], size[i] = v, np.linalg.norm(v)
                break
        else:
            raise SamplingExhausted("no tangent direction found")
    return w / size[:, None]


# -- curves and derivatives ---------------------------------------------------

def curve_point(H, p, X, t, normal=None):
    """Point at parameter t of the differentiation curve through p with velocity X."""
    p = np.asarray(p, dtype=float)
    X = np.asarray(X, dtype=float)
    q = p + t * X
    if H.flavor == "pseudo_sphere":
        s = float(H.g(q, q))
        if s <= DELTA_NULL:
            raise ChartExit(f"normalized line leaves the pseudo-sphere chart at t={t:g}")
        return q / np.sqrt(s)
    # q + s N_p with f(q + s N_p) = c, solved by Newton in s
    N = unit_normal(H, p) if normal is None else normal
    s = 0.0
    for _ in range(60):
        x = q + s * N
        slope = float(np.dot(H.gradient(x), N))
        if abs(slope) <= DELTA_NULL:
            raise ChartExit("level function is flat along the normal line")
        step = (float(H.level_function(x)) - H.level) / slope
        s -= step
        if abs(step) <= 1e-16 * max(1.0, abs(s)):
            break
    return q + s * N


def directional_derivative(H, s, p, X, h=None):
    """d/dt s(c(t)) at t = 0 along the curve through p with velocity X.

    Fourth-order central differences at steps h and h/2 combined by one
    Richardson step. ``s`` may return a scalar or any array.
    """
    h = H.fd_step if h is None else h
    p = np.asarray(p, dtype=float)
    X = np.asarray(X, dtype=float)
    N = None if H.flavor == "pseudo_sphere" else unit_normal(H, p)
    val = {t: np.asarray(s(curve_point(H, p, X, t, N)), dtype=float)
           for t in (-2 * h, -h, -h / 2, h / 2, h, 2 * h)}

    def d4(k):
        return (val[-2 * k] - 8 * val[-k] + 8 * val[k] - val[2 * k]) / (12 * k)

    return (16 * d4(h / 2) - d4(h)) / 15


def ambient_derivative(H, p, X, Y):
    """D_X Y for an ambient-extended field Y (exact for linear fields)."""
    if getattr(Y, "linear", None) is not None:
        return Y.linear @ np.asarray(X, dtype=float)
    return directional_derivative(H, Y, p, X)


def covariant_derivative(H, p, X, Y):
    """nabla_X Y = tangential part of the finite-difference ambient derivative."""
    return project_tangent(H, p, directional_derivative(H, Y, p, X))


def extend_canonical(H, p, v):
    """E_v(q) = tangential projection of the constant field v; nabla E_v = 0 at p."""
    v = np.asarray(v, dtype=float)
    if H.flavor == "pseudo_sphere":
        def field(q):
            s = float(H.g(q, q))
            if s <= DELTA_NULL:
                raise ChartExit("canonical extension evaluated near the null cone")
            return v - (float(H.g(v, q)) / s) * q
    else:
        def field(q):
            N = unit_normal(H, q)
            return v - float(H.g(v, N)) * N
    return VectorField(field, None, "E_v")


def lie_bracket(H, p, U, V):
    """[U, V] at p; exact when both fields are linear."""
    if U.linear is not None and V.linear is not None:
        p = np.asarray(p, dtype=float)
        return (V.linear @ U.linear - U.linear @ V.linear) @ p
    return ambient_derivative(H, p, U(p), V) - ambient_derivative(H, p, V(p), U)


# -- curvature ------------------------------------------------------------------

def shape_operator(H, p, X):
    """A X = -tangential part of D_X N, differentiated numerically."""
    return -project_tangent(H, p, directional_derivative(H, lambda q: unit_normal(H, q), p, X))


def curvature(H, p, X, Y, Z):
    """R(X, Y) Z from the Gauss equation (flat ambient, spacelike unit normal).

    Convention R(X, Y) = [nabla_X, nabla_Y] - nabla_[X, Y]; the round/pseudo
    sphere gets R(X, Y) Z = g(Y, Z) X - g(X, Z) Y.
    """
    AX = shape_operator(H, p, X)
    AY = shape_operator(H, p, Y)
    return H.g(AY, Z) * AX - H.g(AX, Z) * AY


def curvature_via_derivatives(H, p, X, Y, Z):
    """nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z with canonical extensions."""
    p = np.asarray(p, dtype=float)
    EX, EY, EZ = (extend_canonical(H, p, v) for v in (X, Y, Z))

    def inner_derivative(E):
        return VectorField(lambda q: covariant_derivative(H, q, E(q), EZ))

    first = covariant_derivative(H, p, X, inner_derivative(EY))
    second = covariant_derivative(H, p, Y, inner_derivative(EX))
    bracket = lie_bracket(H, p, EX, EY)
    return first - second - covariant_derivative(H, p, bracket, EZ)


def ricci(H, p, X, Y, frame=None):
    """sum_i eps_i g(R(e_i, X) Y, e_i) over a pseudo-orthonormal frame."""
    frame = build_frame(H, p) if frame is None else frame
    return sum(s * H.g(curvature(H, p, e, X, Y), e) for e, s in zip(frame.vectors, frame.signs))


def scalar_curvature(H, p, frame=None):
    frame = build_frame(H, p) if frame is None else frame
    return sum(s * ricci(H, p, e, e, frame) for e, s in zip(frame.vectors, frame.signs))


def sectional_curvature(H, p, X, Y):
    """g(R(X, Y) Y, X) / (g(X, X) g(Y, Y) - g(X, Y)^2); DegeneratePlane for null planes."""
    den = H.g(X, X) * H.g(Y, Y) - H.g(X, Y) ** 2
    if not abs(den) > DELTA_PLANE:
        raise DegeneratePlane(f"plane determinant {den:.3e} below {DELTA_PLANE:g}")
    return H.g(curvature(H, p, X, Y, Y), X) / den


# -- frames -----------------------------------------------------------------

@dataclass(frozen=True)
class Frame:
    """Pseudo-orthonormal tangent frame; ``vectors`` has one row per frame vector."""

    base: np.ndarray
    vectors: np.ndarray
    signs: np.ndarray

    @property
    def size(self):
        return len(self.signs)

    def gram(self, space):
        return self.vectors @ np.diag(space.signs) @ self.vectors.T

    def components(self, space, x):
        """x^k = eps_k g(x, e_k), so x = sum_k x^k e_k for tangent x."""
        x = np.asarray(x, dtype=float)
        return (x * space.eps) @ self.vectors.T * self.signs


def _orthogonalize(H, w, placed, signs):
    for e, s in zip(placed, signs):
        w = w - s * H.g(w, e) * e
    return w


def _normalized(H, w):
    nn = float(H.g(w, w))
    return w / np.sqrt(abs(nn)), (1 if nn > 0 else -1)


def build_frame(H, p, structure=None, seed=0):
    """Pseudo-orthonormal frame at p.

    With a mixed system: xi_1, xi_2, xi_3 followed by quadruples
    (E, phi_1 E, phi_2 E, phi_3 E) for random E orthogonal to everything placed.
    Without: indefinite Gram-Schmidt on the projected coordinate vectors,
    greedily taking the candidate with the largest |g(w, w)|.
    """
    p = np.asarray(p, dtype=float)
    rng = np.random.default_rng(seed)
    N = unit_normal(H, p)
    d = H.dim
    placed, signs = [], []

    def draw():
        for _ in range(MAX_FRAME_DRAWS):
            w = _orthogonalize(H, project_tangent(H, p, rng.standard_normal(H.ambient.dim), N),
                               placed, signs)
            if abs(float(H.g(w, w))) > DELTA_NULL:
                return w
        raise FrameConstructionFailure(f"no non-null candidate after {MAX_FRAME_DRAWS} draws")

    if structure is not None:
        for t in structure.triples:
            e, s = _normalized(H, t.xi(p))
            placed.append(e)
            signs.append(s)
        phis = [t.phi_at(p) for t in structure.triples]
        while len(placed) + 4 <= d:
            e, s = _normalized(H, draw())
            block = [e] + [project_tangent(H, p, ph @ e, N) for ph in phis]
            for v, sv in zip(block, (s, s, -s, -s)):
                placed.append(v)
                signs.append(sv)
        while len(placed) < d:  # dimension not of the form 4n+3
            e, s = _normalized(H, draw())
            placed.append(e)
            signs.append(s)
    else:
        cands = list(project_tangent(H, p, np.eye(H.ambient.dim), N))
        while len(placed) < d:
            cands = [_orthogonalize(H, w, placed[-1:], signs[-1:]) for w in cands] if placed else cands
            norms = [abs(float(H.g(w, w))) for w in cands]
            k = int(np.argmax(norms))
            w = cands.pop(k) if norms[k] > DELTA_NULL else draw()
            e, s = _normalized(H, w)
            placed.append(e)
            signs.append(s)
    frame = Frame(p, np.array(placed), np.array(signs, dtype=int))
    err = np.abs(frame.gram(H.ambient) - np.diag(frame.signs)).max()
    if err > FRAME_TOL:
        raise FrameConstructionFailure(f"frame Gram residual {err:.3e}")
    return frame


def transported_frame(H, frame, q):
    """Smooth frame field near frame.base: canonical extensions, then Gram-Schmidt in order."""
    q = np.asarray(q, dtype=float)
    placed, signs = [], list(frame.signs)
    for i, v in enumerate(frame.vectors):
        w = extend_canonical(H, frame.base, v)(q)
        w = _orthogonalize(H, w, placed, signs[:i])
        placed.append(w / np.sqrt(abs(float(H.g(w, w)))))
    return Frame(q, np.array(placed), frame.signs)


# -- geodesics ----------------------------------------------------------------

def geodesic(H, p, v, t):
    """Closed-form pseudo-sphere geodesic with c(0) = p, c'(0) = v; returns (c(t), c'(t)).

    sigma = <v, v> selects the type: cos/sin for spacelike, cosh/sinh for
    timelike, straight line for null.
    """
    if H.flavor != "pseudo_sphere":
        raise NotImplementedError("closed-form geodesics exist only on the pseudo-sphere")
    p = np.asarray(p, dtype=float)
    v = np.asarray(v, dtype=float)
    scale = float(np.dot(v, v))
    if scale == 0.0:
        raise ValueError("geodesic needs a nonzero velocity")
    sigma = float(H.g(v, v))
    if abs(sigma) <= 1e-12 * scale:
        return p + t * v, v.copy()
    w = np.sqrt(abs(sigma))
    if sigma > 0:
        c, s = np.cos(w * t), np.sin(w * t)
        return c * p + (s / w) * v, -w * s * p + c * v
    c, s = np.cosh(w * t), np.sinh(w * t)
    return c * p + (s / w) * v, w * s * p + c * v


def geodesic_acceleration(H, p, v, t):
    """c''(t), differentiated analytically from the closed form."""
    c, _ = geodesic(H, p, v, t)
    sigma = float(H.g(v, v))
    if abs(sigma) <= 1e-12 * float(np.dot(v, v)):
        return np.zeros_like(c)
    return -sigma * c


# -- induced mixed structure -------------------------------------------------------

def induced_mixed_structure(H, j1=None, j2=None, j3=None):
    """xi = -J N, eta(X) = <J X, N>, phi X = J X - eta(X) N for each J_alpha.

    Defaults to the canonical para-hypercomplex operators of the ambient space.
    """
    if j1 is None:
        j1, j2, j3 = canonical_para_hypercomplex(H.ambient.dim)
    G = H.ambient.metric
    triples = []
    for J, eps in zip((j1, j2, j3), EPSILON):
        J = np.asarray(getattr(J, "matrix", J), dtype=float)
        if J.shape != (H.ambient.dim,) * 2:
            raise ValueError("operator dimension does not match the ambient space")
        if H.flavor == "pseudo_sphere":
            xi = VectorField.from_matrix(-J, name=f"xi{len(triples) + 1}")
        else:
            xi = VectorField(lambda q, J=J: -J @ unit_normal(H, q), None, f"xi{len(triples) + 1}")

        def eta(q, J=J):
            return J.T @ G @ unit_normal(H, q)

        def phi(q, J=J, eta=eta):
            return J - np.outer(unit_normal(H, q), eta(q))

        lin = J.T @ G if H.flavor == "pseudo_sphere" else None
        triples.append(MixedTriple(phi, xi, eta, eps, lin))
    return MixedSystem(tuple(triples), H)
