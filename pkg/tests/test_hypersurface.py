import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsasaki.ambient import make_space
from mixedsasaki.errors import DegeneratePlane, NullGradient
from mixedsasaki.hypersurface import (as_point, build_frame, covariant_derivative, curvature,
                                      curvature_via_derivatives, extend_canonical, geodesic,
                                      geodesic_acceleration, induced_mixed_structure, level_set,
                                      lie_bracket, project_tangent, pseudo_sphere, random_tangents,
                                      ricci, sample_points, scalar_curvature, sectional_curvature,
                                      shape_operator, transported_frame, unit_normal)
from mixedsasaki.fields import VectorField


def euclidean_sphere():
    def sampler(rng, count):
        x = rng.standard_normal((count, 3))
        return x / np.linalg.norm(x, axis=1, keepdims=True)
    return level_set(make_space(3, 0), lambda x: x @ x, lambda x: 2 * x, 1.0, sampler)


def test_pseudo_sphere_shape():
    H = pseudo_sphere(1)
    assert (H.ambient.dim, H.ambient.index, H.dim) == (8, 4, 7)
    assert H.ambient.signs[:4] == (-1,) * 4


@pytest.mark.parametrize("n", [0, 1, 2])
def test_samples_on_surface(n):
    H = pseudo_sphere(n)
    pts = sample_points(H, 42, 25)
    assert pts.shape == (25, 4 * n + 4)
    assert np.abs(H.g(pts, pts) - 1).max() < 1e-12
    assert np.array_equal(pts, sample_points(H, 42, 25))


def test_normal_is_position(sphere):
    H, _, pts = sphere
    for p in pts:
        assert np.allclose(unit_normal(H, p), p)


def test_null_gradient_raises():
    H = level_set(make_space(2, 1), lambda x: -x[0] ** 2 + x[1] ** 2, lambda x: np.array([-2 * x[0], 2 * x[1]]),
                  -1.0, None)
    with pytest.raises(NullGradient):
        unit_normal(H, [1.0, 0.0])


def test_as_point_rejects_off_surface():
    with pytest.raises(ValueError):
        as_point(pseudo_sphere(0), [0, 0, 2.0, 0])


def test_projection(sphere):
    H, _, pts = sphere
    rng = np.random.default_rng(0)
    p = pts[0]
    v = rng.standard_normal(H.ambient.dim)
    w = project_tangent(H, p, v)
    assert abs(H.g(w, p)) < 1e-12
    assert np.allclose(project_tangent(H, p, w), w)
    X = random_tangents(H, p, rng, 5)
    assert np.abs(H.g(X, p)).max() < 1e-12
    assert np.allclose(np.linalg.norm(X, axis=1), 1)


def test_shape_operator_is_minus_identity(sphere):
    H, _, pts = sphere
    X = random_tangents(H, pts[1], np.random.default_rng(1), 3)
    for x in X:
        assert np.allclose(shape_operator(H, pts[1], x), -x, atol=1e-8)


def test_canonical_extension_is_parallel(sphere):
    H, _, pts = sphere
    p = pts[2]
    v = random_tangents(H, p, np.random.default_rng(2), 2)
    E = extend_canonical(H, p, v[0])
    assert np.allclose(E(p), v[0])
    assert np.abs(covariant_derivative(H, p, v[1], E)).max() < 1e-8


def test_bracket_of_coordinate_like_fields():
    # [A x, B x] = (B A - A B) x for linear fields; projected fields on the sphere
    H = pseudo_sphere(0)
    rng = np.random.default_rng(3)
    p = sample_points(H, 1, 1)[0]
    G = np.diag(H.ambient.signs).astype(float)
    A = rng.standard_normal((4, 4))
    A = A - G @ A.T @ G  # g-skew: tangent to the pseudo-sphere
    B = rng.standard_normal((4, 4))
    B = B - G @ B.T @ G
    U = VectorField(lambda q: A @ q)
    V = VectorField(lambda q: B @ q)
    assert np.allclose(lie_bracket(H, p, U, V), (B @ A - A @ B) @ p, atol=1e-7)


@pytest.mark.parametrize("n", [0, 1])
def test_constant_curvature(n):
    H = pseudo_sphere(n)
    p = sample_points(H, 7, 1)[0]
    X, Y, Z = random_tangents(H, p, np.random.default_rng(n), 3)
    expected = H.g(Y, Z) * X - H.g(X, Z) * Y
    assert np.allclose(curvature(H, p, X, Y, Z), expected, atol=1e-8)
    assert np.allclose(curvature_via_derivatives(H, p, X, Y, Z), expected, atol=1e-5)
    assert sectional_curvature(H, p, X, Y) == pytest.approx(1, abs=1e-8)


@pytest.mark.parametrize("n, lam", [(0, 2), (1, 6)])
def test_einstein_constant(n, lam):
    H = pseudo_sphere(n)
    p = sample_points(H, 5, 1)[0]
    X, Y = random_tangents(H, p, np.random.default_rng(5), 2)
    assert ricci(H, p, X, Y) == pytest.approx(lam * H.g(X, Y), abs=1e-8)
    assert scalar_curvature(H, p) == pytest.approx(lam * H.dim, abs=1e-7)


def test_degenerate_plane_raises():
    H = pseudo_sphere(0)
    S = induced_mixed_structure(H)
    p = sample_points(H, 0, 1)[0]
    null = S[1].xi(p) + S[2].xi(p)
    assert abs(H.g(null, null)) < 1e-12
    with pytest.raises(DegeneratePlane):
        sectional_curvature(H, p, null, S[3].xi(p))
    with pytest.raises(DegeneratePlane):
        sectional_curvature(H, p, S[3].xi(p), 2 * S[3].xi(p))


def test_euclidean_sphere_generic_path():
    H = euclidean_sphere()
    p = sample_points(H, 0, 1)[0]
    X, Y = random_tangents(H, p, np.random.default_rng(0), 2)
    assert sectional_curvature(H, p, X, Y) == pytest.approx(1, abs=1e-6)
    with pytest.raises(NotImplementedError):
        geodesic(H, p, X, 1.0)


def test_frame_signature(sphere):
    H, S, pts = sphere
    f = build_frame(H, pts[0], S)
    assert f.size == H.dim
    assert np.allclose(f.gram(H.ambient), np.diag(f.signs), atol=1e-10)
    # signature (2n+1, 2n+2): plus count, minus count
    assert (f.signs > 0).sum() == 2 * H.n + 1
    assert np.allclose(f.vectors[:3], [S[a].xi(pts[0]) for a in (1, 2, 3)])
    plain = build_frame(H, pts[0])
    assert sorted(plain.signs) == sorted(f.signs)
    x = random_tangents(H, pts[0], np.random.default_rng(0), 1)[0]
    assert np.allclose(f.components(H.ambient, x) @ f.vectors, x)


def test_transported_frame_continuous(sphere):
    H, S, pts = sphere
    f = build_frame(H, pts[0], S)
    g = transported_frame(H, f, pts[0])
    assert np.allclose(g.vectors, f.vectors, atol=1e-10)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.floats(-1.5, 1.5), st.sampled_from(["space", "time", "null"]))
def test_geodesic_closed_form(seed, t, kind):
    H = pseudo_sphere(1)
    rng = np.random.default_rng(seed)
    p = sample_points(H, seed, 1)[0]
    f = build_frame(H, p, induced_mixed_structure(H))
    pos, neg = f.vectors[f.signs > 0][0], f.vectors[f.signs < 0][0]
    v = {"space": pos, "time": neg, "null": pos + neg}[kind] * rng.uniform(0.5, 2)
    c, dc = geodesic(H, p, v, t)
    assert abs(H.g(c, c) - 1) < 1e-10
    assert abs(H.g(dc, dc) - H.g(v, v)) < 1e-9 * max(1, abs(H.g(v, v)))
    # acceleration is normal: covariant acceleration vanishes
    acc = geodesic_acceleration(H, p, v, t)
    assert np.abs(project_tangent(H, c, acc)).max() < 1e-9 * max(1, np.abs(acc).max())


def test_geodesic_zero_velocity():
    with pytest.raises(ValueError):
        geodesic(pseudo_sphere(0), [0, 0, 1.0, 0], np.zeros(4), 1.0)


def test_induced_xi_oracle():
    # p = e_3 on S^3_1: xi_1 = -e_4, xi_2 = e_1, xi_3 = -e_2
    H = pseudo_sphere(0)
    S = induced_mixed_structure(H)
    p = np.array([0.0, 0.0, 1.0, 0.0])
    assert np.array_equal(S[1].xi(p), [0, 0, 0, -1])
    assert np.array_equal(S[2].xi(p), [1, 0, 0, 0])
    assert np.array_equal(S[3].xi(p), [0, -1, 0, 0])
    assert np.array_equal(S[1].eta_at(p), [0, 0, 0, -1])
    assert np.array_equal(S[2].eta_at(p), [-1, 0, 0, 0])
    assert [S[a].epsilon for a in (1, 2, 3)] == [1, -1, -1]
