import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsasaki.errors import SamplingExhausted
from mixedsasaki.hypersurface import (build_frame, induced_mixed_structure, pseudo_sphere,
                                      random_tangents, sample_points)
from mixedsasaki.symmetry import (FormField, GeodesicInvariantRecord, SymmetricTensorField,
                                  associated_tensor, bracket_table, cky_residual, codifferential,
                                  conformal_factor, constant_form, covariant_derivative_form,
                                  d_eta_form, d_eta_matrix, eta_form, eta_squared,
                                  exterior_derivative, foliation_checks, form_jet,
                                  geodesic_invariant_check, killing_residual,
                                  killing_tensor_residual, ky_family, ky_residual,
                                  lie_metric_terms, metric_tensor, phi_form, phi_not_ky_witness,
                                  projected_field)


def probe_pairs(H, p, seed, count=4):
    rng = np.random.default_rng(seed)
    return list(zip(random_tangents(H, p, rng, count), random_tangents(H, p, rng, count)))


def test_d_eta_matrix_oracle():
    H = pseudo_sphere(0)
    S = induced_mixed_structure(H)
    W = d_eta_matrix(H, S[1])
    assert np.array_equal(W, [[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, -2], [0, 0, 2, 0]])


def test_d_eta_numeric_fallback_agrees(sphere):
    H, S, pts = sphere
    t = S[2]
    exact = d_eta_matrix(H, t)
    numeric = d_eta_matrix(H, type(t)(t.phi, t.xi, t.eta, t.epsilon), pts[0])
    # the extensions differ off the surface; only the restriction must agree
    T = random_tangents(H, pts[0], np.random.default_rng(0), 4)
    assert np.allclose(T @ exact @ T.T, T @ numeric @ T.T, atol=1e-8)


def test_d_eta_matches_literal_derivative(sphere):
    H, S, pts = sphere
    p = pts[0]
    X, Y = random_tangents(H, p, np.random.default_rng(0), 2)
    for a in (1, 2, 3):
        lit = exterior_derivative(H, eta_form(S[a]), p, X, Y)
        assert lit == pytest.approx(d_eta_form(H, S[a])(p, X, Y), abs=1e-7)


def test_ky_family_oracle():
    # (eta_1 ^ d eta_1)(xi_1, E, phi_1 E) = -2 g(E, E)
    H = pseudo_sphere(1)
    S = induced_mixed_structure(H)
    p = np.zeros(8)
    p[4] = 1.0
    f = build_frame(H, p, S)
    for E in f.vectors[3:5]:
        val = ky_family(S, 1, 1)(p, S[1].xi(p), E, S[1].phi_at(p) @ E)
        assert val == pytest.approx(-2 * H.g(E, E), abs=1e-12)


@pytest.mark.parametrize("n, k", [(0, 2), (0, -1), (1, 4)])
def test_ky_family_range(n, k):
    H = pseudo_sphere(n)
    with pytest.raises(ValueError):
        ky_family(induced_mixed_structure(H), 1, k)


def test_ky_family_top_rank():
    H = pseudo_sphere(0)
    S = induced_mixed_structure(H)
    top = ky_family(S, 1, 1)
    assert top.rank == 3
    p = sample_points(H, 0, 1)[0]
    f = build_frame(H, p, S)
    assert top.pullback(p, f.vectors).coeffs.shape == (1,)


def test_eta_is_killing_yano(sphere):
    H, S, pts = sphere
    p = pts[0]
    f = build_frame(H, p, S)
    X = random_tangents(H, p, np.random.default_rng(1), 1)[0]
    for a in (1, 2, 3):
        r, cod = ky_residual(H, eta_form(S[a]), p, X, probes=6, frame=f)
        assert r < 1e-7 and cod < 1e-7


@pytest.mark.parametrize("n, c", [(0, 4), (1, 12)])
def test_codifferential_of_d_eta(n, c):
    H = pseudo_sphere(n)
    S = induced_mixed_structure(H)
    p = sample_points(H, 3, 1)[0]
    f = build_frame(H, p, S)
    X = random_tangents(H, p, np.random.default_rng(3), 3)
    for a in (1, 2, 3):
        cod = codifferential(H, d_eta_form(H, S[a]), p, f)
        assert np.allclose([cod(x) for x in X], [c * S[a].eta_at(p) @ x for x in X], atol=1e-6)
        assert cky_residual(H, d_eta_form(H, S[a]), p, X[0], probes=6, frame=f) < 1e-6


def test_covariant_derivative_of_eta(sphere):
    # (nabla_X eta)(Y) = g(nabla_X xi, Y) = -g(phi X, Y)
    H, S, pts = sphere
    p = pts[1]
    X, Y = random_tangents(H, p, np.random.default_rng(4), 2)
    for a in (1, 2, 3):
        val = covariant_derivative_form(H, eta_form(S[a]), p, X, Y)
        assert val == pytest.approx(-H.g(S[a].phi_at(p) @ X, Y), abs=1e-7)


def test_phi_form_is_not_killing_yano(sphere):
    H, S, pts = sphere
    p = pts[2]
    f = build_frame(H, p, S)
    X = random_tangents(H, p, np.random.default_rng(5), 1)[0]
    jet = form_jet(H, phi_form(H, S[1]), p, f)
    assert np.abs(jet.residual_rows("ky", H.dim)).max() > 1e-2
    assert np.abs(jet.value.coeffs - d_eta_form(H, S[1]).pullback(p, f.vectors).coeffs / -2).max() < 1e-12
    assert cky_residual(H, phi_form(H, S[1]), p, X, probes=6, frame=f) < 1e-6


def test_codifferential_rejects_functions(sphere):
    H, S, pts = sphere
    zero = FormField(0, evaluator=lambda q: 1.0)
    with pytest.raises(ValueError):
        codifferential(H, zero, pts[0], build_frame(H, pts[0]))


def test_modulated_form_is_not_cky():
    H = pseudo_sphere(1)
    p = sample_points(H, 2, 1)[0]
    rng = np.random.default_rng(0)
    A = rng.standard_normal((8, 8))
    plain = constant_form(A - A.T)
    bent = constant_form(A - A.T, rng.standard_normal(8))
    X = random_tangents(H, p, rng, 1)[0]
    f = build_frame(H, p)
    assert cky_residual(H, plain, p, X, 6, frame=f) < 1e-6
    assert cky_residual(H, bent, p, X, 6, frame=f) > 1e-2


def test_xi_killing_and_lie_terms(sphere):
    H, S, pts = sphere
    p = pts[0]
    pairs = probe_pairs(H, p, 0)
    for X in list(S.xis) + [S.xis[0] + S.xis[1]]:
        assert killing_residual(H, X, p, pairs) < 1e-9
    terms = lie_metric_terms(H, S, S.xis[1], p, 1)
    assert terms["lie"] == pytest.approx(terms["dropped"] + terms["kept"], abs=1e-8)
    assert abs(terms["lie"]) < 1e-9


def test_projected_constant_is_conformal_not_killing(sphere):
    # the tangential part of a constant a is conformal with f = -2 <a, p>
    H, S, pts = sphere
    p = pts[3]
    a = np.random.default_rng(6).standard_normal(H.ambient.dim)
    X = projected_field(H, a)
    f, fit = conformal_factor(H, X, p, probe_pairs(H, p, 6, 8))
    assert f == pytest.approx(-2 * H.g(a, p), abs=1e-7)
    assert fit < 1e-7
    assert killing_residual(H, X, p, probe_pairs(H, p, 7)) > 1e-3
    terms = lie_metric_terms(H, S, X, p, 1)
    assert abs(terms["kept"]) < 1e-8
    assert terms["lie"] == pytest.approx(terms["dropped"], abs=1e-7)


def test_killing_tensors(sphere):
    H, S, pts = sphere
    p = pts[4]
    f = build_frame(H, p, S)
    assert killing_tensor_residual(H, metric_tensor(H), p, f) < 1e-9
    for a in (1, 2, 3):
        assert killing_tensor_residual(H, eta_squared(S[a]), p, f) < 1e-7
    rho = associated_tensor(H, ky_family(S, 1, 1 if H.n else 0), f)
    assert killing_tensor_residual(H, rho, p, f) < 1e-5


def test_geodesic_first_integral(sphere):
    H, S, pts = sphere
    p = pts[5]
    f = build_frame(H, p, S)
    v = f.vectors[3] + f.vectors[4] if H.n else f.vectors[0] + f.vectors[1]
    rec = geodesic_invariant_check(H, eta_squared(S[1]), p, v, np.linspace(0, 1, 11))
    assert rec.drift < 1e-10
    assert len(rec.values) == 11


def test_geodesic_record_times():
    with pytest.raises(ValueError):
        GeodesicInvariantRecord(np.zeros(4), np.zeros(4), np.array([0.0, 0.0]), np.zeros(2))


def test_bracket_constants():
    H = pseudo_sphere(0)
    S = induced_mixed_structure(H)
    table = bracket_table(S, sample_points(H, 1, 1)[0])
    assert np.allclose(table.constants[0, 1], [0, 0, -2], atol=1e-12)
    assert np.allclose(table.constants[1, 2], [2, 0, 0], atol=1e-12)
    assert np.allclose(table.constants[2, 0], [0, -2, 0], atol=1e-12)
    assert table.residuals.max() < 1e-12


def test_foliation_checks_pass(sphere):
    H, S, pts = sphere
    res = foliation_checks(S, pts[:2], np.random.default_rng(0), planes=4)
    assert [r.check_id for r in res] == ["foliation.involutive", "foliation.totally_geodesic",
                                         "foliation.leaf_curvature"]
    assert all(r.status == "pass" for r in res)


def test_witness():
    H = pseudo_sphere(1)
    S = induced_mixed_structure(H)
    p = sample_points(H, 42, 1)[0]
    for a in (1, 2, 3):
        assert phi_not_ky_witness(S, p, a, np.random.default_rng(a)) >= 0.5
    H0 = pseudo_sphere(0)
    with pytest.raises(SamplingExhausted):
        phi_not_ky_witness(induced_mixed_structure(H0), sample_points(H0, 1, 1)[0], 1)


@pytest.mark.parametrize("kwargs", [dict(rank=-1, evaluator=len), dict(rank=1),
                                    dict(rank=3, matrix=np.eye)])
def test_form_field_validation(kwargs):
    with pytest.raises(ValueError):
        FormField(**kwargs)


def test_tensor_field_validation():
    with pytest.raises(ValueError):
        SymmetricTensorField()
    with pytest.raises(ValueError):
        SymmetricTensorField(rank=3, matrix=np.eye)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 31), st.sampled_from([1, 2, 3]))
def test_fundamental_form_skew(seed, a):
    H = pseudo_sphere(1)
    S = induced_mixed_structure(H)
    p = sample_points(H, seed, 1)[0]
    X, Y = random_tangents(H, p, np.random.default_rng(seed), 2)
    om = phi_form(H, S[a])
    assert om(p, X, Y) == pytest.approx(-om(p, Y, X), abs=1e-12)
    assert om(p, X, Y) == pytest.approx(H.g(S[a].phi_at(p) @ X, Y), abs=1e-12)
