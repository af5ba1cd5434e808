"""Killing vectors, Killing tensors and (conformal) Killing-Yano forms.

Forms on a hypersurface are differentiated through *jets*. At a base point
p with pseudo-orthonormal frame e_1..e_d, the jet stores the frame
coefficients of omega and of every nabla_{e_k} omega; the latter come from
differentiating q -> omega_q(E_I(q)) along e_k, where E_i is the canonical
extension of e_i (nabla E_i = 0 at p). From one jet:

    d omega  =  sum_k e^k ^ nabla_{e_k} omega
    d* omega = -sum_k eps_k  e_k _| nabla_{e_k} omega

The literal single-call operators (``exterior_derivative``,
``covariant_derivative_form``) differentiate the evaluator directly and are
kept as an independent cross-check of the jet path.
"""

from dataclasses import dataclass

import numpy as np

from . import _tables
from .ambient import SemiEuclideanSpace
from .errors import DegeneratePlane, SamplingExhausted
from .exterior import AlternatingForm, interior, wedge, wedge_power
from .fields import VectorField
from .hypersurface import (ambient_derivative, build_frame, directional_derivative,
                           extend_canonical, geodesic, lie_bracket, project_tangent,
                           random_tangents, sectional_curvature, transported_frame)
from .report import summarize
from .structures import structure_derivative

WITNESS_GAP = 0.1
FRAME_TOL = 1e-9
MAX_WITNESS_DRAWS = 1000


# -- field types -----------------------------------------------------------------

@dataclass(frozen=True)
class FormField:
    """A p-form field on a hypersurface, known through its ambient extension.

    Exactly one source is needed: ``coefficients(q)`` returning an ambient
    AlternatingForm, ``matrix(q)`` for a 2-form X^T W Y, or
    ``evaluator(q, *vectors)``. ``pullback_map(q, rows)`` is an optional
    fast path returning the frame form directly.
    """

    rank: int
    coefficients: object = None
    evaluator: object = None
    matrix: object = None
    pullback_map: object = None
    name: str = ""

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if self.coefficients is None and self.evaluator is None and self.matrix is None:
            raise ValueError("a form field needs coefficients, a matrix or an evaluator")
        if self.matrix is not None and self.rank != 2:
            raise ValueError("matrix-valued form fields are 2-forms")

    def __call__(self, q, *vectors):
        if len(vectors) != self.rank:
            raise ValueError(f"rank-{self.rank} form takes {self.rank} vectors")
        q = np.asarray(q, dtype=float)
        if self.evaluator is not None:
            return float(self.evaluator(q, *vectors))
        if self.matrix is not None:
            W = np.asarray(self.matrix(q), dtype=float)
            X, Y = (np.asarray(v, dtype=float) for v in vectors)
            return 0.5 * float(X @ W @ Y - Y @ W @ X)
        return float(self.coefficients(q)(*vectors))

    def pullback(self, q, rows):
        """AlternatingForm on R^d whose coefficients are the values on ``rows`` (d, m)."""
        q = np.asarray(q, dtype=float)
        rows = np.asarray(rows, dtype=float)
        if self.pullback_map is not None:
            return self.pullback_map(q, rows)
        if self.matrix is not None:
            return AlternatingForm.from_matrix(rows @ np.asarray(self.matrix(q), dtype=float) @ rows.T)
        if self.coefficients is not None:
            return self.coefficients(q).pullback(rows)
        d, p = len(rows), self.rank
        if p > d:
            return AlternatingForm(d, p)
        vals = [self.evaluator(q, *rows[list(I)]) for I in _tables.combos(d, p)]
        return AlternatingForm(d, p, np.array(vals, dtype=float).reshape(-1))


@dataclass(frozen=True)
class SymmetricTensorField:
    """A symmetric 2-tensor field: ``matrix(q)`` (rho(X, Y) = X^T M Y) or ``gram_map(q, rows)``."""

    rank: int = 2
    matrix: object = None
    gram_map: object = None
    name: str = ""

    def __post_init__(self):
        if self.rank != 2:
            raise ValueError("only rank-2 symmetric tensors are supported")
        if self.matrix is None and self.gram_map is None:
            raise ValueError("a tensor field needs a matrix or a gram map")

    def gram(self, q, rows):
        q = np.asarray(q, dtype=float)
        rows = np.atleast_2d(np.asarray(rows, dtype=float))
        if self.gram_map is not None:
            return self.gram_map(q, rows)
        M = np.asarray(self.matrix(q), dtype=float)
        return rows @ (0.5 * (M + M.T)) @ rows.T

    def __call__(self, q, X, Y):
        return float(self.gram(q, np.array([X, Y], dtype=float))[0, 1])


@dataclass(frozen=True)
class GeodesicInvariantRecord:
    """K(t) = rho(c'(t), c'(t)) sampled along the closed-form geodesic through (p, v)."""

    p: np.ndarray
    v: np.ndarray
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("sample times must be strictly increasing")

    @property
    def drift(self):
        return float(np.max(np.abs(self.values - self.values[0])))


# -- constructors -----------------------------------------------------------------

def eta_form(triple):
    """eta as a 1-form field."""
    return FormField(1, coefficients=lambda q: AlternatingForm.from_covector(triple.eta_at(q)),
                     pullback_map=lambda q, rows: AlternatingForm(len(rows), 1, rows @ triple.eta_at(q)),
                     name="eta")


def _ambient_jacobian(H, f, q, h=None):
    """M[i, j] = d f_j / d x^i by central differences along the ambient axes."""
    h = H.fd_step if h is None else h
    q = np.asarray(q, dtype=float)
    out = []
    for i in range(len(q)):
        e = np.zeros_like(q)
        e[i] = 1.0
        val = {t: np.asarray(f(q + t * e)) for t in (-2 * h, -h, h, 2 * h)}
        out.append((val[-2 * h] - 8 * val[-h] + 8 * val[h] - val[2 * h]) / (12 * h))
    return np.array(out)


def d_eta_matrix(H, triple, q=None):
    """W with d eta(X, Y) = X^T W Y on tangent vectors.

    d commutes with restriction, so the ambient exterior derivative of any
    extension of eta will do. For eta(q) = A q this is A^T - A exactly.
    """
    if triple.eta_linear is not None:
        A = np.asarray(triple.eta_linear, dtype=float)
        return A.T - A
    M = _ambient_jacobian(H, triple.eta_at, q)
    return M - M.T


def d_eta_form(H, triple):
    """d eta as a 2-form field (determinant convention)."""
    if triple.eta_linear is not None:
        W = d_eta_matrix(H, triple)
        return FormField(2, matrix=lambda q: W, name="d eta")
    return FormField(2, matrix=lambda q: d_eta_matrix(H, triple, q), name="d eta")


def ky_family(sys, alpha, k):
    """eta_alpha ^ (d eta_alpha)^k, a (2k+1)-form field."""
    H = sys.context
    n = H.n
    if n is None or not 0 <= k <= 2 * n + 1:
        raise ValueError(f"k must lie in 0..{2 * n + 1 if n is not None else '?'}")
    t = sys[alpha]
    if k == 0:
        return eta_form(t)
    deta = d_eta_form(H, t)
    eta = eta_form(t)

    def pullback_map(q, rows):
        return wedge(eta.pullback(q, rows), wedge_power(deta.pullback(q, rows), k))

    def coefficients(q):
        return wedge(AlternatingForm.from_covector(t.eta_at(q)),
                     wedge_power(AlternatingForm.from_matrix(deta.matrix(q)), k))

    return FormField(2 * k + 1, coefficients=coefficients, pullback_map=pullback_map,
                     name=f"eta{alpha}^(d eta{alpha})^{k}")


def phi_form(H, triple):
    """Omega_alpha(X, Y) = g(phi_alpha X, Y): phi_alpha seen as a 2-form."""
    G = H.ambient.metric
    return FormField(2, matrix=lambda q: triple.phi_at(q).T @ G, name="Omega")


def constant_form(W, modulation=None):
    """Restriction of the ambient 2-form X^T W Y, optionally scaled by 1 + <c, q>^2.

    Unmodulated constant forms restrict to closed conformal Killing-Yano
    forms on the pseudo-sphere, so negative controls need the modulation.
    """
    W = np.asarray(W, dtype=float)
    if modulation is None:
        return FormField(2, matrix=lambda q: W, name="constant")
    c = np.asarray(modulation, dtype=float)
    return FormField(2, matrix=lambda q: (1.0 + float(c @ q) ** 2) * W, name="modulated")


def projected_field(H, a):
    """X(q) = tangential part of the constant vector a."""
    a = np.asarray(a, dtype=float)
    return VectorField(lambda q: project_tangent(H, q, a), None, "projected")


# -- jets -------------------------------------------------------------------------------

def frame_space(frame):
    return SemiEuclideanSpace.from_signs(frame.signs)


def extension_rows(H, frame, q):
    """Rows E_{e_i}(q): canonical extensions of the frame vectors evaluated at q."""
    q = np.asarray(q, dtype=float)
    if H.flavor == "pseudo_sphere":
        V = frame.vectors
        return V - np.outer(H.g(V, q) / H.g(q, q), q)
    return np.array([extend_canonical(H, frame.base, v)(q) for v in frame.vectors])


@dataclass(frozen=True)
class FormJet:
    """Frame coefficients of omega and of nabla_{e_k} omega (one row per k) at a point."""

    frame: object
    value: AlternatingForm
    derivative: np.ndarray

    @property
    def rank(self):
        return self.value.rank

    @property
    def dim(self):
        return self.value.dim

    def nabla(self, x):
        """nabla_X omega for X with frame components x."""
        return AlternatingForm(self.dim, self.rank, np.asarray(x, dtype=float) @ self.derivative)

    def d(self):
        d, p = self.dim, self.rank
        out = AlternatingForm(d, p + 1)
        for k in range(d):
            out = out + wedge(AlternatingForm.basis(d, [k]), AlternatingForm(d, p, self.derivative[k]))
        return out

    def codifferential(self):
        d, p = self.dim, self.rank
        if p == 0:
            raise ValueError("the codifferential of a 0-form is undefined")
        out = AlternatingForm(d, p - 1)
        eye = np.eye(d)
        for k, s in enumerate(self.frame.signs):
            out = out - s * interior(eye[k], AlternatingForm(d, p, self.derivative[k]))
        return out

    def residual_rows(self, kind, manifold_dim):
        """Rows R[k] = residual form of the CKY/KY equation at X = e_k."""
        d, p = self.dim, self.rank
        eye = np.eye(d)
        dw = self.d()
        cod = self.codifferential() if kind == "cky" else None
        rows = []
        for k in range(d):
            r = self.nabla(eye[k]) - interior(eye[k], dw) * (1.0 / (p + 1))
            if kind == "cky":
                xf = AlternatingForm(d, 1, self.frame.signs[k] * eye[k])
                r = r + wedge(xf, cod) * (1.0 / (manifold_dim - p + 1))
            rows.append(r.coeffs)
        return np.array(rows)


def form_jet(H, omega, p, frame, h=None):
    """Jet of ``omega`` at p in ``frame``."""
    p = np.asarray(p, dtype=float)

    def pulled(q):
        return omega.pullback(q, extension_rows(H, frame, q)).coeffs

    T = np.array([directional_derivative(H, pulled, p, e, h) for e in frame.vectors])
    value = omega.pullback(p, frame.vectors)
    return FormJet(frame, value, T.reshape(len(frame.vectors), -1))


def frame_to_ambient(H, frame, form):
    """Ambient form agreeing with a frame-coefficient form on tangent vectors."""
    C = (frame.vectors * H.ambient.eps) * frame.signs[:, None]
    return form.pullback(C.T)


def _probe_values(rows, xs, ys, rank):
    """Residual forms x @ rows evaluated on probe tuples ys (B, rank, d)."""
    d = rows.shape[0]
    out = []
    for x, y in zip(xs, ys):
        form = AlternatingForm(d, rank, x @ rows)
        out.append(abs(float(form.evaluate_batch(y[None])[0])) if rank else abs(form.coeffs[0]))
    return np.array(out)


def probe_components(H, frame, p, rng, count, rank):
    """Frame components of random probe vectors: X (count, d) and Y tuples (count, rank, d)."""
    space = H.ambient
    X = frame.components(space, random_tangents(H, p, rng, count))
    if rank == 0:
        return X, np.zeros((count, 0, len(frame.signs)))
    Y = frame.components(space, random_tangents(H, p, rng, count * rank))
    return X, Y.reshape(count, rank, -1)


# -- literal operators ----------------------------------------------------------

def exterior_derivative(H, omega, p, *vectors):
    """d omega(X_0..X_p) = sum_i (-1)^i X_i(omega(E_0, .., hat E_i, .., E_p))."""
    if len(vectors) != omega.rank + 1:
        raise ValueError(f"d of a rank-{omega.rank} form takes {omega.rank + 1} vectors")
    p = np.asarray(p, dtype=float)
    exts = [extend_canonical(H, p, v) for v in vectors]
    total = 0.0
    for i, X in enumerate(vectors):
        others = exts[:i] + exts[i + 1:]
        total += (-1) ** i * float(directional_derivative(
            H, lambda q, others=others: omega(q, *[E(q) for E in others]), p, X))
    return total


def covariant_derivative_form(H, omega, p, X, *vectors):
    """(nabla_X omega)(Y_1..Y_p) = X(omega(E_1..E_p)) with canonical extensions."""
    if len(vectors) != omega.rank:
        raise ValueError(f"rank-{omega.rank} form takes {omega.rank} vectors")
    p = np.asarray(p, dtype=float)
    exts = [extend_canonical(H, p, v) for v in vectors]
    return float(directional_derivative(H, lambda q: omega(q, *[E(q) for E in exts]), p, X))


def codifferential(H, omega, p, frame):
    """d* omega = -sum_i eps_i e_i _| nabla_{e_i} omega, as an ambient (p-1)-form."""
    if omega.rank == 0:
        raise ValueError("the codifferential of a 0-form is undefined")
    return frame_to_ambient(H, frame, form_jet(H, omega, p, frame).codifferential())


def _residual(H, omega, p, X, kind, probes, rng, frame):
    p = np.asarray(p, dtype=float)
    frame = build_frame(H, p) if frame is None else frame
    rng = np.random.default_rng(0) if rng is None else rng
    jet = form_jet(H, omega, p, frame)
    rows = jet.residual_rows(kind, H.dim)
    x = frame.components(H.ambient, X)
    _, Y = probe_components(H, frame, p, rng, probes, omega.rank)
    return float(_probe_values(rows, [x] * probes, Y, omega.rank).max()), jet


def cky_residual(H, omega, p, X, probes=20, rng=None, frame=None):
    """max |(nabla_X w - 1/(p+1) X _| dw + 1/(dim-p+1) X* ^ d*w)(Y..)| over random Y tuples."""
    return _residual(H, omega, p, X, "cky", probes, rng, frame)[0]


def ky_residual(H, omega, p, X, probes=20, rng=None, frame=None):
    """(residual of nabla_X w - 1/(p+1) X _| dw, |d* w|)."""
    r, jet = _residual(H, omega, p, X, "ky", probes, rng, frame)
    return r, jet.codifferential().norm()


# -- Killing vectors -----------------------------------------------------------------

def nabla_field(H, p, Y, X):
    """nabla_Y X; exact for linear fields."""
    return project_tangent(H, p, ambient_derivative(H, p, Y, X))


def killing_residual(H, X, p, probes):
    """max |g(nabla_Y X, Z) + g(Y, nabla_Z X)| over probe pairs (Y, Z)."""
    p = np.asarray(p, dtype=float)
    worst = 0.0
    for Y, Z in probes:
        r = H.g(nabla_field(H, p, Y, X), Z) + H.g(Y, nabla_field(H, p, Z, X))
        worst = max(worst, abs(float(r)))
    return worst


def lie_metric_terms(H, sys, X, p, alpha):
    """Pieces of (L_X g)(xi, xi) = 2 g(nabla_xi X, xi) - 2 g(nabla_X xi, xi).

    ``dropped`` is 2 xi(g(X, xi)), the term that vanishes only when X is
    orthogonal to xi along the xi-line; ``kept`` is what remains after it is
    removed. Their sum is the Lie derivative.
    """
    p = np.asarray(p, dtype=float)
    xi = sys[alpha].xi
    x = xi(p)
    first = 2 * float(H.g(nabla_field(H, p, x, X), x))
    second = 2 * float(H.g(nabla_field(H, p, X(p), xi), x))
    dropped = 2 * float(directional_derivative(H, lambda q: H.g(X(q), xi(q)), p, x))
    kept = -2 * float(H.g(X(p), nabla_field(H, p, x, xi))) - second
    return {"lie": first - second, "first": first, "second": second,
            "dropped": dropped, "kept": kept}


def lie_metric_xi_check(H, sys, X, p, alpha):
    """|(L_X g)(xi_alpha, xi_alpha)| = |2 g(nabla_xi X, xi) - 2 g(nabla_X xi, xi)|."""
    return abs(lie_metric_terms(H, sys, X, p, alpha)["lie"])


def conformal_factor(H, X, p, probes):
    """Fit (L_X g)(Y, Z) = f g(Y, Z) over probe pairs; returns (f, fit residual)."""
    p = np.asarray(p, dtype=float)
    lie, gg = [], []
    for Y, Z in probes:
        lie.append(H.g(nabla_field(H, p, Y, X), Z) + H.g(Y, nabla_field(H, p, Z, X)))
        gg.append(H.g(Y, Z))
    lie, gg = np.array(lie), np.array(gg)
    f = float(lie @ gg / (gg @ gg))
    return f, float(np.abs(lie - f * gg).max())


# -- Killing tensors -----------------------------------------------------------------

def killing_tensor_residual(H, rho, p, frame):
    """max over frame triples of |Sym(nabla rho)_{kij}| (averaged symmetrization)."""
    p = np.asarray(p, dtype=float)
    T = np.array([directional_derivative(H, lambda q: rho.gram(q, extension_rows(H, frame, q)), p, e)
                  for e in frame.vectors])
    S = (T + T.transpose(1, 2, 0) + T.transpose(2, 0, 1)) / 3.0
    return float(np.abs(S).max())


def metric_tensor(H):
    G = H.ambient.metric
    return SymmetricTensorField(matrix=lambda q: G, name="g")


def eta_squared(triple):
    """eta (x) eta."""
    def gram(q, rows):
        v = rows @ triple.eta_at(q)
        return np.outer(v, v)
    return SymmetricTensorField(gram_map=gram, name="eta(x)eta")


def associated_tensor(H, omega, frame):
    """rho(X, Y) = sum_I eps_I omega(X, e_I) omega(Y, e_I) over increasing (p-1)-tuples I.

    At points other than frame.base the frame is transported (canonical
    extensions, then Gram-Schmidt), so rho is a smooth field near the base.
    """
    p = omega.rank
    if p < 1:
        raise ValueError("associated tensors need rank >= 1")
    d = len(frame.signs)
    eye = np.eye(d)

    def in_frame(q):
        fq = frame if np.array_equal(q, frame.base) else transported_frame(H, frame, q)
        if np.abs(fq.gram(H.ambient) - np.diag(fq.signs)).max() > FRAME_TOL:
            # far from the base the transported frame degenerates; rho does not
            # depend on the frame, so a fresh one serves for evaluation
            fq = build_frame(H, q)
        weights = np.prod(fq.signs[_tables.combos(d, p - 1)], axis=1) if p > 1 else np.ones(1)
        w = omega.pullback(q, fq.vectors)
        if p == 1:
            inner_rows = w.coeffs[:, None]
        else:
            inner_rows = np.array([interior(eye[a], w).coeffs for a in range(d)])
        return fq, (inner_rows * weights) @ inner_rows.T

    def gram(q, rows):
        fq, rho = in_frame(q)
        comps = fq.components(H.ambient, rows)
        return comps @ rho @ comps.T

    return SymmetricTensorField(gram_map=gram, name=f"assoc({omega.name})")


def geodesic_invariant_check(H, rho, p, v, times):
    """Sample K(t) = rho(c'(t), c'(t)) on the closed-form geodesic."""
    times = np.asarray(times, dtype=float)
    p = np.asarray(p, dtype=float)
    v = np.asarray(v, dtype=float)
    vals = []
    for t in times:
        c, dc = geodesic(H, p, v, t)
        vals.append(rho(c, dc, dc))
    return GeodesicInvariantRecord(p, v, times, np.array(vals))


# -- Reeb brackets and foliation ------------------------------------------------------

@dataclass(frozen=True)
class BracketTable:
    """[xi_a, xi_b] (vectors[a, b]), fitted constants[a, b, c] on xi_c, and fit residuals."""

    vectors: np.ndarray
    constants: np.ndarray
    residuals: np.ndarray


def _span_fit(basis, v):
    c, *_ = np.linalg.lstsq(np.asarray(basis).T, v, rcond=None)
    return c, float(np.abs(np.asarray(basis).T @ c - v).max())


def bracket_table(sys, p):
    H = sys.context
    p = np.asarray(p, dtype=float)
    xis = sys.xis
    basis = [x(p) for x in xis]
    m = len(p)
    vec = np.zeros((3, 3, m))
    const = np.zeros((3, 3, 3))
    res = np.zeros((3, 3))
    for a in range(3):
        for b in range(3):
            vec[a, b] = lie_bracket(H, p, xis[a], xis[b])
            const[a, b], res[a, b] = _span_fit(basis, vec[a, b])
    return BracketTable(vec, const, res)


def foliation_checks(sys, points, rng=None, planes=10):
    """Involutivity, total geodesy and leaf curvature of the span of the xi's."""
    H = sys.context
    rng = np.random.default_rng(0) if rng is None else rng
    inv, geo, curv = [], [], []
    skipped = 0
    for p in points:
        tab = bracket_table(sys, p)
        inv.extend(tab.residuals.ravel())
        xs = [x(p) for x in sys.xis]
        for a in range(3):
            for b in range(3):
                geo.append(_span_fit(xs, nabla_field(H, p, xs[a], sys.xis[b]))[1])
        pairs = [(xs[0], xs[1]), (xs[0], xs[2]), (xs[1], xs[2])]
        pairs += [tuple(rng.standard_normal((2, 3)) @ np.array(xs)) for _ in range(planes)]
        for u, w in pairs:
            try:
                curv.append(sectional_curvature(H, p, u, w) - 1.0)
            except DegeneratePlane:
                skipped += 1
    n = H.n
    return [
        summarize("foliation.involutive", "foliation-leaves", n, inv, 1e-9),
        summarize("foliation.totally_geodesic", "foliation-leaves", n, geo, 1e-6),
        summarize("foliation.leaf_curvature", "foliation-leaves", n, curv, 1e-6,
                  notes={"degenerate_planes_skipped": skipped}),
    ]


# -- non-Killing-Yano witness ------------------------------------------------------------

def _witness_vector(H, sys, p, rng, frame=None):
    """Non-null X orthogonal to every xi: a unit combination of the frame vectors past the xi's."""
    frame = build_frame(H, p, sys) if frame is None else frame
    rest = frame.vectors[3:]
    if len(rest) == 0:
        raise SamplingExhausted("no directions orthogonal to the xi's (dimension 3)")
    for _ in range(MAX_WITNESS_DRAWS):
        c = rng.standard_normal(len(rest))
        X = (c / np.linalg.norm(c)) @ rest
        if abs(float(H.g(X, X))) > WITNESS_GAP:
            return X
    raise SamplingExhausted(f"no non-null witness after {MAX_WITNESS_DRAWS} draws")


def phi_not_ky_witness(sys, p, alpha, rng=None, count=10, frame=None):
    """min over witnesses X (orthogonal to every xi) of |(nabla_X phi)X| / |g(X, X)|."""
    H = sys.context
    rng = np.random.default_rng(0) if rng is None else rng
    p = np.asarray(p, dtype=float)
    frame = build_frame(H, p, sys) if frame is None else frame
    ratios = []
    for _ in range(count):
        X = _witness_vector(H, sys, p, rng, frame)
        v = structure_derivative(H, sys[alpha], p, X, X)
        ratios.append(np.sqrt(abs(float(H.g(v, v)))) / abs(float(H.g(X, X))))
    return float(min(ratios))


__all__ = [
    "FormField", "SymmetricTensorField", "GeodesicInvariantRecord", "FormJet", "BracketTable",
    "eta_form", "d_eta_form", "d_eta_matrix", "phi_form", "constant_form", "ky_family",
    "projected_field", "form_jet", "frame_to_ambient", "extension_rows",
    "exterior_derivative", "covariant_derivative_form", "codifferential",
    "cky_residual", "ky_residual", "killing_residual", "lie_metric_xi_check", "lie_metric_terms",
    "conformal_factor", "killing_tensor_residual", "metric_tensor", "eta_squared",
    "associated_tensor", "geodesic_invariant_check", "bracket_table", "foliation_checks",
    "phi_not_ky_witness", "nabla_field",
]
