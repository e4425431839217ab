import numpy as np
import pytest

from oseenbench.mesh import (MeshFormatError, build_facets,
                             generate_unit_square_mesh, read_mesh,
                             refine_barycentric, refine_uniform,
                             validate_mesh, write_mesh)


def two_triangle_square():
    return read_mesh("""vertices 4
0.0 0.0
1.0 0.0
1.0 1.0
0.0 1.0
triangles 2
0 1 2
0 2 3
boundary 4
0
1
2
3
""")


def strip_mesh(nx, ny):
    """nx x ny grid of cells, each split along its diagonal."""
    verts = [(i / nx, j / ny) for j in range(ny + 1) for i in range(nx + 1)]
    tris = []
    m = nx + 1
    for j in range(ny):
        for i in range(nx):
            v00, v10 = j * m + i, j * m + i + 1
            v01, v11 = (j + 1) * m + i, (j + 1) * m + i + 1
            tris.append((v00, v10, v11))
            tris.append((v00, v11, v01))
    flags = [i == 0 or i == nx or j == 0 or j == ny
             for j in range(ny + 1) for i in range(nx + 1)]
    from oseenbench.mesh import Triangulation
    return Triangulation(vertices=np.array(verts),
                         triangles=np.array(tris),
                         boundary_vertex_flags=np.array(flags))


def test_smallest_crisscross():
    mesh = generate_unit_square_mesh(1)
    facets = validate_mesh(mesh)
    assert mesh.num_triangles == 2
    assert mesh.num_vertices == 4
    assert facets.num_facets == 5


def test_crisscross_counts_n2():
    mesh = generate_unit_square_mesh(2)
    assert mesh.num_triangles == 8
    assert mesh.num_vertices == 9
    validate_mesh(mesh)


def test_jittered_mesh_quality():
    mesh = generate_unit_square_mesh(4, jitter=0.2)
    assert mesh.num_triangles == 32
    areas = mesh.signed_areas()
    assert np.all(areas > 0.0)
    # brute-force minimum angle over all corners
    p = mesh.vertices[mesh.triangles]
    min_angle = np.inf
    for k in range(3):
        a = p[:, (k + 1) % 3] - p[:, k]
        b = p[:, (k + 2) % 3] - p[:, k]
        cosang = np.sum(a * b, axis=1) / (
            np.linalg.norm(a, axis=1) * np.linalg.norm(b, axis=1))
        min_angle = min(min_angle, np.degrees(np.arccos(cosang)).min())
    assert min_angle >= 15.0


def test_jitter_rejected_out_of_range():
    with pytest.raises(ValueError):
        generate_unit_square_mesh(4, jitter=0.31)
    with pytest.raises(ValueError):
        generate_unit_square_mesh(4, jitter=-0.1)


def test_jitter_bounded_and_boundary_fixed():
    n = 5
    plain = generate_unit_square_mesh(n, jitter=0.0)
    moved = generate_unit_square_mesh(n, jitter=0.3)
    d = np.linalg.norm(moved.vertices - plain.vertices, axis=1)
    assert np.all(d <= 0.3 / n + 1e-15)
    assert np.all(d[moved.boundary_vertex_flags] == 0.0)
    assert d[~moved.boundary_vertex_flags].max() > 0.0


def test_jitter_deterministic():
    a = generate_unit_square_mesh(6, jitter=0.25)
    b = generate_unit_square_mesh(6, jitter=0.25)
    assert np.array_equal(a.vertices, b.vertices)


def test_refine_uniform_counts():
    mesh = generate_unit_square_mesh(1)
    fine = refine_uniform(mesh)
    assert fine.num_triangles == 8
    assert fine.num_vertices == 9
    validate_mesh(fine)
    finer = refine_uniform(fine)
    assert finer.num_triangles == 4 * fine.num_triangles
    validate_mesh(finer)


def test_refine_uniform_halves_h():
    mesh = generate_unit_square_mesh(4)     # dyadic coordinates
    fine = refine_uniform(mesh)
    assert fine.h_max == mesh.h_max / 2.0
    assert np.all(np.repeat(mesh.h_per_triangle, 4)
                  == 2.0 * fine.h_per_triangle)


def test_barycentric_counts():
    mesh = generate_unit_square_mesh(1)
    one = refine_barycentric(
        read_mesh(write_mesh(mesh)))            # fresh copy
    assert one.num_triangles == 6
    split = refine_barycentric(mesh)
    assert split.num_triangles == 3 * mesh.num_triangles
    assert split.num_vertices == mesh.num_vertices + mesh.num_triangles
    validate_mesh(split)


def test_single_triangle_alfeld():
    text = """vertices 3
0.0 0.0
1.0 0.0
0.0 1.0
triangles 1
0 1 2
boundary 3
0
1
2
"""
    mesh = read_mesh(text)
    facets = build_facets(mesh)
    assert facets.num_facets == 3
    assert not facets.interior.any()
    split = refine_barycentric(mesh)
    f2 = build_facets(split)
    assert split.num_triangles == 3
    assert split.num_vertices == 4
    assert f2.num_facets == 6


def test_double_barycentric_rejected():
    mesh = refine_barycentric(generate_unit_square_mesh(2))
    with pytest.raises(ValueError):
        refine_barycentric(mesh)


def test_paper_level1_pressure_dof_count():
    # a 28-triangle base mesh (7 x 2 cells, diagonal split) splits into
    # 84 triangles, i.e. 252 discontinuous-P1 pressure dofs
    base = strip_mesh(7, 2)
    validate_mesh(base)
    assert base.num_triangles == 28
    split = refine_barycentric(base)
    assert split.num_triangles == 84
    assert 3 * split.num_triangles == 252


def test_refinement_commute_counts():
    base = generate_unit_square_mesh(3, jitter=0.15)
    mesh = refine_barycentric(refine_uniform(base))
    assert mesh.num_triangles == 12 * base.num_triangles


def test_euler_formula_through_pipeline():
    mesh = generate_unit_square_mesh(3, jitter=0.2)
    for _ in range(2):
        facets = build_facets(mesh)
        assert (mesh.num_vertices - facets.num_facets
                + mesh.num_triangles) == 1
        mesh = refine_uniform(mesh)
    mesh = refine_barycentric(mesh)
    facets = validate_mesh(mesh)
    assert (mesh.num_vertices - facets.num_facets
            + mesh.num_triangles) == 1


def test_facet_handshake():
    mesh = refine_barycentric(generate_unit_square_mesh(3, jitter=0.1))
    facets = build_facets(mesh)
    n_int = int(facets.interior.sum())
    n_bnd = facets.num_facets - n_int
    assert 3 * mesh.num_triangles == 2 * n_int + n_bnd


def test_two_triangle_facets():
    mesh = two_triangle_square()
    facets = build_facets(mesh)
    assert facets.num_facets == 5
    assert int(facets.interior.sum()) == 1
    diag = np.flatnonzero(facets.interior)[0]
    assert facets.lengths[diag] == pytest.approx(np.sqrt(2.0))
    assert tuple(facets.facets[diag]) == (0, 2)


def test_facet_normals_unit_and_outward():
    mesh = refine_barycentric(generate_unit_square_mesh(2, jitter=0.2))
    facets = build_facets(mesh)
    assert np.allclose(np.linalg.norm(facets.normals, axis=1), 1.0)
    # outward from the lower adjacent triangle: the normal points away
    # from that triangle's centroid
    centers = mesh.vertices[mesh.triangles].mean(axis=1)
    mids = 0.5 * (mesh.vertices[facets.facets[:, 0]]
                  + mesh.vertices[facets.facets[:, 1]])
    lo = facets.adjacent[:, 0]
    assert np.all(np.sum((mids - centers[lo]) * facets.normals,
                         axis=1) > 0.0)


def test_swap_symmetry_without_jitter():
    for n in (2, 4):
        mesh = refine_barycentric(refine_uniform(
            generate_unit_square_mesh(n, jitter=0.0)))
        swapped = mesh.vertices[:, ::-1]
        orig = {tuple(v) for v in mesh.vertices}
        assert {tuple(v) for v in swapped} == orig


def test_mesh_roundtrip():
    mesh = refine_barycentric(generate_unit_square_mesh(3, jitter=0.23))
    back = read_mesh(write_mesh(mesh))
    assert np.array_equal(back.vertices, mesh.vertices)
    assert np.array_equal(back.triangles, mesh.triangles)
    assert np.array_equal(back.boundary_vertex_flags,
                          mesh.boundary_vertex_flags)


def test_read_repairs_clockwise_triangle():
    text = """vertices 3
0.0 0.0
1.0 0.0
0.0 1.0
triangles 1
0 2 1
boundary 3
0
1
2
"""
    with pytest.warns(UserWarning, match="clockwise"):
        mesh = read_mesh(text)
    assert mesh.signed_areas()[0] > 0.0


def test_read_reports_bad_vertex_index():
    text = """vertices 3
0.0 0.0
1.0 0.0
0.0 1.0
triangles 1
0 1 7
boundary 0
"""
    with pytest.raises(MeshFormatError, match="line 6"):
        read_mesh(text)


def test_read_reports_malformed_header():
    with pytest.raises(MeshFormatError, match="line 1"):
        read_mesh("vortices 3\n")


def test_read_allows_comments():
    text = """# a comment
vertices 3
0.0 0.0   # trailing comment
1.0 0.0
0.0 1.0
triangles 1
0 1 2
boundary 3
0 1 2
"""
    mesh = read_mesh(text)
    assert mesh.num_triangles == 1
    assert mesh.boundary_vertex_flags.all()
