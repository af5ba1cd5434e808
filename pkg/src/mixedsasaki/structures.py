"""Mixed 3-structures: axioms, compatible metrics, structure equations.

Also the two flat matrix examples (on R^3 and R^{4n+3}) and the Nijenhuis
tensor / fundamental 2-form diagnostics.
"""

import numpy as np

from .ambient import EPSILON, canonical_para_hypercomplex
from .fields import MixedSystem, MixedTriple, VectorField
from .hypersurface import (covariant_derivative, extend_canonical, lie_bracket,
                           project_tangent, random_tangents, unit_normal)
from .report import CheckResult, summarize

#: even permutations (alpha, beta, gamma) of (1, 2, 3)
EVEN_PERMUTATIONS = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

__all__ = [
    "MixedTriple", "MixedSystem", "EVEN_PERMUTATIONS", "example_r3", "example_flat",
    "check_definition1", "check_metric_compatibility", "check_structure_equations",
    "nijenhuis", "fundamental_two_form", "structure_derivative",
]

# -- flat examples -----------------------------------------------------------

_R3_PHI = (
    [[0, 0, 1], [0, 0, 0], [-1, 0, 0]],
    [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, -1, 0], [-1, 0, 0], [0, 0, 0]],
)
_R3_XI = ([0, 1, 0], [1, 0, 0], [0, 0, 1])
_R3_ETA = ([0, 1, 0], [-1, 0, 0], [0, 0, -1])


def _constant_triple(phi, xi, eta, eps):
    phi = np.array(phi, dtype=np.int64)
    xi = np.array(xi, dtype=np.int64)
    eta = np.array(eta, dtype=np.int64)
    for a in (phi, xi, eta):
        a.setflags(write=False)
    field = VectorField(lambda q, xi=xi: xi, None, "xi")
    return MixedTriple(lambda q, phi=phi: phi, field, lambda q, eta=eta: eta, eps)


def example_r3():
    """The constant mixed 3-structure on R^3 (no metric declared)."""
    return MixedSystem(tuple(_constant_triple(*args, eps) for *args, eps in
                             zip(_R3_PHI, _R3_XI, _R3_ETA, EPSILON)), None, exact=True)


def example_flat(n):
    """Block structure on R^{4n+3}: (phi_alpha, xi_alpha, eta_alpha) on R^3 plus J_alpha on R^{4n}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    js = canonical_para_hypercomplex(4 * n)
    m = 4 * n + 3
    triples = []
    for phi, xi, eta, J, eps in zip(_R3_PHI, _R3_XI, _R3_ETA, js, EPSILON):
        big = np.zeros((m, m), dtype=np.int64)
        big[:3, :3] = phi
        big[3:, 3:] = J.matrix
        triples.append(_constant_triple(big, list(xi) + [0] * (4 * n), list(eta) + [0] * (4 * n), eps))
    return MixedSystem(tuple(triples), None, exact=True)


# -- axioms --------------------------------------------------------------------

def _relations(sys, q, X):
    """Residual arrays for every relation, with X an (m, k) matrix of column vectors.

    For exact systems X is the identity, so each residual is a matrix identity.
    """
    phi = {a: sys[a].phi_at(q) if not sys.exact else np.asarray(sys[a].phi(q)) for a in (1, 2, 3)}
    xi = {a: np.asarray(sys[a].xi.evaluator(q)) for a in (1, 2, 3)}
    eta = {a: np.asarray(sys[a].eta(q)) for a in (1, 2, 3)}
    eps = {a: sys[a].epsilon for a in (1, 2, 3)}
    rel = {}
    for a in (1, 2, 3):
        rel[f"eta{a}(xi{a})=eps"] = np.array([eta[a] @ xi[a] - eps[a]])
        rel[f"phi{a}^2=-eps+eta(x)xi"] = (phi[a] @ phi[a] @ X + eps[a] * X
                                          - np.outer(xi[a], eta[a] @ X))
        rel[f"phi{a}(xi{a})=0"] = phi[a] @ xi[a]
        rel[f"eta{a}.phi{a}=0"] = eta[a] @ phi[a] @ X
    for a, b, c in EVEN_PERMUTATIONS:
        rel[f"eta{a}(xi{b})=0"] = np.array([eta[a] @ xi[b]])
        rel[f"eta{b}(xi{a})=0"] = np.array([eta[b] @ xi[a]])
        rel[f"phi{a}(xi{b})=eps{c}xi{c}"] = phi[a] @ xi[b] - eps[c] * xi[c]
        rel[f"phi{b}(xi{a})=-eps{c}xi{c}"] = phi[b] @ xi[a] + eps[c] * xi[c]
        rel[f"eta{a}.phi{b}=eps{c}eta{c}"] = (eta[a] @ phi[b] - eps[c] * eta[c]) @ X
        rel[f"eta{b}.phi{a}=-eps{c}eta{c}"] = (eta[b] @ phi[a] + eps[c] * eta[c]) @ X
        target = eps[c] * phi[c] @ X
        rel[f"phi{a}phi{b}-eta{b}(x)xi{a}=eps{c}phi{c}"] = (
            phi[a] @ phi[b] @ X - np.outer(xi[a], eta[b] @ X) - target)
        rel[f"-phi{b}phi{a}+eta{a}(x)xi{b}=eps{c}phi{c}"] = (
            -phi[b] @ phi[a] @ X + np.outer(xi[b], eta[a] @ X) - target)
    return rel


def _tangent_columns(H, p, rng, probes):
    return random_tangents(H, p, rng, probes).T


def check_definition1(sys, points=None, probes=20, seed=0, n=None, tol=1e-9):
    """Residuals of the mixed 3-structure axioms (and each triple's own axioms).

    Exact (integer) systems are checked as matrix identities; hypersurface
    systems on random tangent vectors at each point.
    """
    worst = {}
    samples = []
    if sys.exact:
        m = len(np.asarray(sys[1].xi.evaluator(None)))
        rel = _relations(sys, None, np.eye(m, dtype=np.int64))
        worst = {k: int(np.abs(v).max()) for k, v in rel.items()}
        samples = list(worst.values())
        tol = 0.0
        n = (m - 3) // 4 if n is None else n
        tag = f"flat_examples.definition.R{m}"
        anchor = "flat-mixed-examples"
    else:
        H = sys.context
        rng = np.random.default_rng(seed)
        for p in points:
            rel = _relations(sys, p, _tangent_columns(H, p, rng, probes))
            for k, v in rel.items():
                r = float(np.abs(v).max())
                worst[k] = max(worst.get(k, 0.0), r)
                samples.append(r)
        n = H.n if n is None else n
        tag = "axioms.definition"
        anchor = "mixed-3-structure-axioms"
    return summarize(tag, anchor, n, samples, tol, notes={"relations": worst})


def check_metric_compatibility(sys, points, probes=20, seed=0, tol=1e-9, perturb=None):
    """g(phi X, phi Y) = eps g(X, Y) - eta(X) eta(Y) and g(X, xi) = eta(X).

    ``perturb`` (a covector) is added to every eta; used for fault injection.
    Returns None for systems with no declared metric.
    """
    H = sys.context
    if H is None or not hasattr(H, "ambient"):
        return None
    rng = np.random.default_rng(seed)
    worst = {}
    samples = []
    for p in points:
        Xs = random_tangents(H, p, rng, probes)
        Ys = random_tangents(H, p, rng, probes)
        for a in (1, 2, 3):
            t = sys[a]
            phi = t.phi_at(p)
            eta = t.eta_at(p) if perturb is None else t.eta_at(p) + perturb
            xi = t.xi(p)
            ex, ey = Xs @ eta, Ys @ eta
            r1 = np.abs(H.g(Xs @ phi.T, Ys @ phi.T) - t.epsilon * H.g(Xs, Ys) + ex * ey)
            r2 = np.abs(H.g(Xs, xi) - ex)
            for key, r in ((f"g(phi{a}X,phi{a}Y)", r1), (f"g(X,xi{a})=eta{a}", r2)):
                worst[key] = max(worst.get(key, 0.0), float(r.max()))
                samples.extend(r.tolist())
    return summarize("axioms.compatible_metric", "compatible-metric", H.n, samples, tol,
                     notes={"relations": worst})


def _phi_field(H, triple, E):
    return VectorField(lambda q: triple.phi_at(q) @ E(q), None, "phiE")


def structure_derivative(H, triple, p, X, Y):
    """(nabla_X phi) Y, using the canonical extension of Y (nabla Y = 0 at p)."""
    E = extend_canonical(H, p, Y)
    return covariant_derivative(H, p, X, _phi_field(H, triple, E))


def check_structure_equations(sys, points, probes=20, seed=0, tol=1e-6):
    """Both sign branches of the structure equation for each alpha.

    plus:  (nabla_X phi) Y = g(X, Y) xi - eta(Y) X
    minus: (nabla_X phi) Y = g(phi X, phi Y) xi + eta(Y) phi^2 X
    They coincide for alpha = 1. Returns, per alpha, an asserted plus-branch
    result, and for alpha = 2, 3 also a reported result naming the measured
    branch.
    """
    H = sys.context
    rng = np.random.default_rng(seed)
    results = []
    for a in (1, 2, 3):
        t = sys[a]
        rp, rm = [], []
        for p in points:
            phi, xi, eta = t.phi_at(p), t.xi(p), t.eta_at(p)
            for X, Y in zip(random_tangents(H, p, rng, probes), random_tangents(H, p, rng, probes)):
                lhs = structure_derivative(H, t, p, X, Y)
                plus = H.g(X, Y) * xi - (eta @ Y) * X
                minus = H.g(phi @ X, phi @ Y) * xi + (eta @ Y) * project_tangent(H, p, phi @ phi @ X)
                rp.append(np.abs(lhs - plus).max())
                rm.append(np.abs(lhs - minus).max())
        rp, rm = np.array(rp), np.array(rm)
        ok_p, ok_m = rp.max() <= tol, rm.max() <= tol
        branch = {(True, True): "both", (True, False): "plus",
                  (False, True): "minus", (False, False): "neither"}[(ok_p, ok_m)]
        anchor = "sasakian-structure-equation" if a == 1 else "lp-sasakian-structure-equation"
        notes = {"plus_max": rp.max(), "minus_max": rm.max(), "measured_branch": branch}
        results.append(summarize(f"axioms.structure_equation.alpha{a}", anchor, H.n, rp, tol,
                                 notes=notes))
        if a != 1:
            notes = dict(notes, displayed_branch="minus")
            results.append(summarize(f"axioms.structure_equation.branch.alpha{a}", anchor, H.n,
                                     rm, tol, notes=notes, status="reported"))
    return results


# -- Nijenhuis tensor and fundamental form -------------------------------------------

def nijenhuis(H, phi, p, X, Y):
    """phi^2 [X,Y] + [phi X, phi Y] - phi [phi X, Y] - phi [X, phi Y] via canonical extensions.

    ``phi`` maps a point to the operator matrix there.
    """
    p = np.asarray(p, dtype=float)
    EX, EY = extend_canonical(H, p, X), extend_canonical(H, p, Y)
    fX = VectorField(lambda q: phi(q) @ EX(q))
    fY = VectorField(lambda q: phi(q) @ EY(q))
    P = phi(p)

    def tangential(v):
        return project_tangent(H, p, v)

    out = (P @ P @ lie_bracket(H, p, EX, EY) + lie_bracket(H, p, fX, fY)
           - P @ lie_bracket(H, p, fX, EY) - P @ lie_bracket(H, p, EX, fY))
    return tangential(out)


def fundamental_two_form(H, phi, p, X, Y):
    """Omega(X, Y) = g(phi X, Y)."""
    return H.g(phi(p) @ np.asarray(X, dtype=float), Y)
