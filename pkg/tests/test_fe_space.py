import numpy as np
import pytest

from oseenbench.fe_space import (boundary_dofs, eval_basis_p2,
                                 eval_fe_function, interpolate_velocity,
                                 map_reference, pressure_space,
                                 project_pressure, push_derivatives,
                                 velocity_space)
from oseenbench.mesh import (build_facets, generate_unit_square_mesh,
                             refine_barycentric, refine_uniform)
from oseenbench.quadrature import triangle_rule

NODES = np.array([
    [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0],
    [0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5],
])


def bary_mesh(n=2, jitter=0.2):
    mesh = refine_barycentric(generate_unit_square_mesh(n, jitter))
    facets = build_facets(mesh)
    return mesh, facets


def test_lagrange_property():
    vals, _, _ = eval_basis_p2(NODES)
    assert np.allclose(vals, np.eye(6), atol=1e-15)


def test_partition_of_unity():
    rng = np.random.default_rng(3)
    pts = rng.dirichlet((1.0, 1.0, 1.0), size=40)
    vals, grads, hess = eval_basis_p2(pts)
    assert np.allclose(vals.sum(axis=-1), 1.0, atol=1e-14)
    assert np.allclose(grads.sum(axis=-2), 0.0, atol=1e-14)
    assert np.allclose(hess.sum(axis=-3), 0.0, atol=1e-14)


def test_map_reference_identity():
    tri = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    pt, jac, det = map_reference(tri, (1 / 3, 1 / 3, 1 / 3))
    assert np.allclose(jac, np.eye(2))
    assert det == pytest.approx(1.0)
    assert np.allclose(pt, (1 / 3, 1 / 3))


def test_map_reference_det_is_twice_area():
    tri = np.array([[0.2, 0.1], [0.7, 0.3], [0.25, 0.9]])
    _, _, det = map_reference(tri, (1.0, 0.0, 0.0))
    d1 = tri[1] - tri[0]
    d2 = tri[2] - tri[0]
    assert det == pytest.approx(d1[0] * d2[1] - d1[1] * d2[0])


def test_map_reference_rejects_degenerate():
    tri = np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])
    with pytest.raises(ValueError):
        map_reference(tri, (1 / 3, 1 / 3, 1 / 3))


def test_push_derivatives_scaling():
    _, grads, hess = eval_basis_p2(np.array([0.2, 0.5, 0.3]))
    jac = 2.0 * np.eye(2)
    g, h = push_derivatives(grads, hess, jac)
    assert np.allclose(g, grads / 2.0)
    assert np.allclose(h, hess / 4.0)


def test_velocity_dof_count():
    mesh, facets = bary_mesh(2, 0.15)
    space = velocity_space(mesh, facets)
    assert space.ndof == 2 * (mesh.num_vertices + facets.num_facets)


def test_pressure_dof_count_matches_level1_table():
    mesh, _ = bary_mesh(2, 0.0)
    space = pressure_space(mesh)
    assert space.ndof == 3 * mesh.num_triangles
    assert space.measure == pytest.approx(1.0, abs=1e-12)


def test_interpolation_reproduces_quadratics():
    mesh, facets = bary_mesh(2, 0.2)
    space = velocity_space(mesh, facets)
    rng = np.random.default_rng(11)
    coef = rng.standard_normal((2, 6))

    def g(x, y):
        mono = np.stack([np.ones_like(x), x, y, x * x, x * y, y * y])
        return np.stack([np.tensordot(coef[0], mono, axes=1),
                         np.tensordot(coef[1], mono, axes=1)], axis=-1)

    fn = interpolate_velocity(g, space)
    pts = rng.dirichlet((1, 1, 1), size=20)
    tris = rng.integers(0, mesh.num_triangles, size=20)
    worst = 0.0
    for tri, lam in zip(tris, pts):
        got = eval_fe_function(fn, space, int(tri), lam)
        xy = lam @ mesh.vertices[mesh.triangles[tri]]
        worst = max(worst, np.max(np.abs(got - g(xy[0], xy[1]))))
    assert worst <= 1e-13


def test_interpolation_constant_and_trig_nodes():
    mesh, facets = bary_mesh(1, 0.0)
    space = velocity_space(mesh, facets)

    def ones(x, y):
        return np.stack([np.ones_like(x), np.ones_like(x)], axis=-1)

    assert np.all(interpolate_velocity(ones, space).coeffs == 1.0)

    def trig(x, y):
        return np.stack([np.sin(2 * np.pi * x) * np.sin(2 * np.pi * y),
                         np.cos(2 * np.pi * x) * np.cos(2 * np.pi * y)],
                        axis=-1)

    got = trig(np.array([0.25]), np.array([0.25]))[0]
    assert got == pytest.approx([1.0, 0.0], abs=1e-15)


def test_project_pressure_reproduces_linears():
    mesh, _ = bary_mesh(2, 0.2)
    space = pressure_space(mesh)
    fn = project_pressure(lambda x, y: 2.0 * x - 3.0 * y + 0.5, space)
    coords = mesh.vertices[mesh.triangles].reshape(-1, 2)
    want = 2.0 * coords[:, 0] - 3.0 * coords[:, 1] + 0.5
    assert np.max(np.abs(fn.coeffs - want)) <= 1e-13


def test_project_pressure_x2_reference_triangle():
    from oseenbench.mesh import Triangulation

    mesh = Triangulation(vertices=np.array([[0.0, 0.0], [1.0, 0.0],
                                            [0.0, 1.0]]),
                         triangles=np.array([[0, 1, 2]]),
                         boundary_vertex_flags=np.ones(3, bool))
    space = pressure_space(mesh)
    fn = project_pressure(lambda x, y: x * x, space)
    # analytic projection of x^2 onto linears over the reference
    # triangle: -1/10 + (4/5) x, so nodal values (-0.1, 0.7, -0.1)
    assert fn.coeffs == pytest.approx([-0.1, 0.7, -0.1], abs=1e-14)

    # dense normal-equations oracle on a subdivision point cloud
    n = 400
    j, i = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    keep = (i + j) < n
    x = (i[keep] + 1 / 3) / n
    y = (j[keep] + 1 / 3) / n
    basis = np.stack([1.0 - x - y, x, y], axis=1)
    lhs = basis.T @ basis
    rhs = basis.T @ (x * x)
    oracle = np.linalg.solve(lhs, rhs)
    assert fn.coeffs == pytest.approx(oracle, abs=1e-5)


def test_projection_orthogonal_to_constants():
    mesh, _ = bary_mesh(2, 0.1)
    space = pressure_space(mesh)
    fn = project_pressure(lambda x, y: np.sin(3 * x + y), space)
    rule = triangle_rule(10)
    from oseenbench.fe_space import element_geometry, physical_points

    geom = element_geometry(mesh)
    pts = physical_points(geom, rule.points)
    pv = np.sin(3 * pts[..., 0] + pts[..., 1])
    ph = np.einsum("tp,qp->tq", fn.coeffs.reshape(-1, 3), rule.points)
    per_tri = np.einsum("q,tq->t", rule.weights, pv - ph) * geom.det
    assert np.max(np.abs(per_tri)) <= 1e-13


def test_boundary_dofs_smallest_mesh():
    mesh, facets = bary_mesh(1, 0.0)
    space = velocity_space(mesh, facets)
    dofs = boundary_dofs(space, mesh)
    nb_vertices = int(mesh.boundary_vertex_flags.sum())
    nb_edges = int((~facets.interior).sum())
    assert nb_vertices == 4 and nb_edges == 4
    assert len(dofs) == 2 * (nb_vertices + nb_edges)
    # barycenters (vertices 4, 5 of the split) are interior
    assert 4 not in space.boundary_nodes
    assert 5 not in space.boundary_nodes
    coords = space.node_coords[space.boundary_nodes]
    on_edge = (np.isclose(coords, 0.0) | np.isclose(coords, 1.0)).any(axis=1)
    assert on_edge.all()


def test_eval_fe_function_curl_and_div():
    mesh, facets = bary_mesh(2, 0.2)
    space = velocity_space(mesh, facets)

    def rot(x, y):
        return np.stack([-y, x], axis=-1)

    def stretch(x, y):
        return np.stack([x, -y], axis=-1)

    f_rot = interpolate_velocity(rot, space)
    f_str = interpolate_velocity(stretch, space)
    rng = np.random.default_rng(5)
    for _ in range(10):
        tri = int(rng.integers(0, mesh.num_triangles))
        lam = rng.dirichlet((1, 1, 1))
        _, _, div, curl = eval_fe_function(f_rot, space, tri, lam,
                                           derivatives=True)
        assert curl == pytest.approx(2.0, abs=1e-12)
        assert div == pytest.approx(0.0, abs=1e-12)
        _, _, div, _ = eval_fe_function(f_str, space, tri, lam,
                                        derivatives=True)
        assert div == pytest.approx(0.0, abs=1e-12)


def test_velocity_mass_matrix_row_sums():
    # consistency of the local-to-global map: the mass matrix is
    # symmetric and its row sums reproduce the basis integrals
    from oseenbench.assembly import SystemSpec, assemble_a, assemble_rhs

    mesh, facets = bary_mesh(2, 0.2)
    space = velocity_space(mesh, facets)

    def zero_vec(x, y):
        z = np.zeros_like(x)
        return np.stack([z, z], axis=-1)

    def ones_vec(x, y):
        o = np.ones_like(x)
        return np.stack([o, o], axis=-1)

    def zero_jac(x, y):
        z = np.zeros_like(x)
        return np.stack([np.stack([z, z], -1), np.stack([z, z], -1)], -2)

    spec = SystemSpec(mu=0.0, sigma=1.0, delta0=0.0, method="sv",
                      beta=zero_vec, grad_beta=zero_jac, beta_inf=1.0,
                      f=ones_vec, curl_f=None, g=zero_vec)
    mass = assemble_a(mesh, space, spec).to_scipy()
    asym = abs(mass - mass.T).max()
    assert asym <= 1e-13 * abs(mass).max()
    rows = np.asarray(mass.sum(axis=1)).ravel()
    integrals = assemble_rhs(mesh, space, spec)
    assert np.max(np.abs(rows - integrals)) <= 1e-13
