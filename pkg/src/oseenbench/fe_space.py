"""Reference bases, geometry mapping and degrees of freedom for the
velocity/pressure pair: continuous quadratic vector velocities and
discontinuous linear pressures.

Local velocity node order on the reference triangle is
[v0, v1, v2, m01, m12, m20] (vertices, then edge midpoints); globally the
scalar nodes are all mesh vertices followed by all edges.  Vector dofs
are component-major: the full x-component block precedes the full
y-component block, which keeps the divergence coupling block simple.
"""

from dataclasses import dataclass

import numpy as np

# reference gradients of the barycentric coordinates
_DL = np.array([[-1.0, -1.0],
                [1.0, 0.0],
                [0.0, 1.0]])
_EDGE_PAIRS = ((0, 1), (1, 2), (2, 0))


def eval_basis_p2(points):
    """Quadratic Lagrange basis on the reference triangle.

    Parameters
    ----------
    points : array_like, shape (..., 3)
        Barycentric coordinates.

    Returns
    -------
    values : ndarray, shape (..., 6)
    gradients : ndarray, shape (..., 6, 2)
        With respect to the reference coordinates.
    hessians : ndarray, shape (..., 6, 2, 2)
        Constant in the element; third derivatives vanish identically.
    """
    lam = np.asarray(points, dtype=float)
    base = lam.shape[:-1]
    vals = np.empty(base + (6,))
    grads = np.empty(base + (6, 2))
    hess = np.empty(base + (6, 2, 2))

    for i in range(3):
        li = lam[..., i]
        vals[..., i] = li * (2.0 * li - 1.0)
        grads[..., i, :] = (4.0 * li - 1.0)[..., None] * _DL[i]
        hess[..., i, :, :] = 4.0 * np.outer(_DL[i], _DL[i])
    for k, (a, b) in enumerate(_EDGE_PAIRS):
        la, lb = lam[..., a], lam[..., b]
        vals[..., 3 + k] = 4.0 * la * lb
        grads[..., 3 + k, :] = 4.0 * (la[..., None] * _DL[b]
                                      + lb[..., None] * _DL[a])
        hess[..., 3 + k, :, :] = 4.0 * (np.outer(_DL[a], _DL[b])
                                        + np.outer(_DL[b], _DL[a]))
    return vals, grads, hess


def eval_basis_p1(points):
    """Linear nodal basis on the reference triangle: the barycentric
    coordinates themselves."""
    return np.asarray(points, dtype=float)


def map_reference(triangle, ref_point):
    """Affine map of a barycentric reference point into a triangle.

    Parameters
    ----------
    triangle : array_like, shape (3, 2)
        Vertex coordinates, counterclockwise.
    ref_point : array_like, shape (3,)
        Barycentric coordinates.

    Returns
    -------
    (physical point (2,), Jacobian (2, 2), det J)

    det J equals twice the triangle area.
    """
    p = np.asarray(triangle, dtype=float)
    lam = np.asarray(ref_point, dtype=float)
    jac = np.column_stack([p[1] - p[0], p[2] - p[0]])
    det = jac[0, 0] * jac[1, 1] - jac[0, 1] * jac[1, 0]
    h2 = max(np.sum((p[1] - p[0]) ** 2), np.sum((p[2] - p[0]) ** 2),
             np.sum((p[2] - p[1]) ** 2))
    if abs(det) < 1e-14 * h2:
        raise ValueError("degenerate triangle (|det J| < 1e-14 h^2)")
    return lam @ p, jac, det


def push_derivatives(gradients, hessians, jac):
    """Map reference derivatives to physical space for an affine element.

    gradient: J^{-T} grad;  hessian: J^{-T} H J^{-1}.  The map has no
    curvature, so no first-derivative terms enter the Hessian.
    """
    inv = np.linalg.inv(jac)
    g = np.asarray(gradients) @ inv
    h = np.einsum("ba,...bc,cd->...ad", inv, np.asarray(hessians), inv)
    return g, h


@dataclass
class ElementGeometry:
    """Per-triangle affine map data (vectorized over the mesh)."""

    jac: np.ndarray        # (T, 2, 2)
    det: np.ndarray        # (T,)  = 2 * area, positive
    inv: np.ndarray        # (T, 2, 2) inverse Jacobian
    origin: np.ndarray     # (T, 2)  first vertex


def element_geometry(mesh):
    """Affine map data for every triangle of a mesh."""
    p = mesh.vertices[mesh.triangles]
    jac = np.stack([p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]], axis=-1)
    det = jac[:, 0, 0] * jac[:, 1, 1] - jac[:, 0, 1] * jac[:, 1, 0]
    if np.any(det <= 0.0):
        raise ValueError("mesh contains non-CCW or degenerate triangles")
    inv = np.empty_like(jac)
    inv[:, 0, 0] = jac[:, 1, 1]
    inv[:, 0, 1] = -jac[:, 0, 1]
    inv[:, 1, 0] = -jac[:, 1, 0]
    inv[:, 1, 1] = jac[:, 0, 0]
    inv /= det[:, None, None]
    return ElementGeometry(jac=jac, det=det, inv=inv, origin=p[:, 0])


def physical_points(geom, rule_points):
    """Map barycentric rule points into every triangle: (T, nq, 2)."""
    xy = np.asarray(rule_points)[:, 1:]
    return geom.origin[:, None, :] + np.einsum(
        "tab,qb->tqa", geom.jac, xy)


def physical_gradients(geom, ref_grads):
    """Push P2 reference gradients (nq, 6, 2) to all triangles:
    (T, nq, 6, 2)."""
    return np.einsum("qib,tba->tqia", ref_grads, geom.inv)


def physical_hessians(geom, ref_hess):
    """Push P2 reference Hessians (nq, 6, 2, 2) to all triangles:
    (T, nq, 6, 2, 2)."""
    return np.einsum("tba,qibc,tcd->tqiad", geom.inv, ref_hess, geom.inv)


@dataclass
class VelocitySpace:
    """Continuous quadratic vector space on a triangulation.

    Scalar node n < V is mesh vertex n; node V + e is the midpoint of
    facet e.  Vector dof (node, component) = component * n_scalar + node.
    """

    mesh: object
    facets: object
    cell_nodes: np.ndarray          # (T, 6) scalar node ids
    node_coords: np.ndarray         # (n_scalar, 2)
    n_scalar: int
    ndof: int
    boundary_nodes: np.ndarray      # scalar node ids on the boundary
    cell_dofs: np.ndarray           # (T, 12) vector dof ids

    @property
    def boundary_dof_ids(self):
        return np.concatenate([self.boundary_nodes,
                               self.boundary_nodes + self.n_scalar])


def velocity_space(mesh, facets):
    """Build the quadratic vector space; ndof = 2 (V + E)."""
    from .mesh import _edge_table

    nv = mesh.num_vertices
    ne = facets.num_facets
    uniq, cell_edges, _ = _edge_table(mesh.triangles)
    if not np.array_equal(uniq, facets.facets):
        raise ValueError("facet list does not belong to this mesh")

    cell_nodes = np.empty((mesh.num_triangles, 6), dtype=np.int64)
    cell_nodes[:, :3] = mesh.triangles
    cell_nodes[:, 3:] = nv + cell_edges

    mids = 0.5 * (mesh.vertices[facets.facets[:, 0]]
                  + mesh.vertices[facets.facets[:, 1]])
    node_coords = np.vstack([mesh.vertices, mids])

    bverts = np.flatnonzero(mesh.boundary_vertex_flags)
    bedges = nv + np.flatnonzero(~facets.interior)
    boundary_nodes = np.sort(np.concatenate([bverts, bedges]))

    n_scalar = nv + ne
    cell_dofs = np.concatenate([cell_nodes, cell_nodes + n_scalar], axis=1)
    return VelocitySpace(mesh=mesh, facets=facets, cell_nodes=cell_nodes,
                         node_coords=node_coords, n_scalar=n_scalar,
                         ndof=2 * n_scalar, boundary_nodes=boundary_nodes,
                         cell_dofs=cell_dofs)


@dataclass
class PressureSpace:
    """Discontinuous linear pressure space: 3 nodal dofs per triangle.

    The mass matrix is block diagonal with exact 3x3 blocks
    (area/12) [[2,1,1],[1,2,1],[1,1,2]].  The zero-mean constraint is
    enforced at the solver level via ``mean_vector``.
    """

    mesh: object
    ndof: int
    cell_dofs: np.ndarray       # (T, 3)
    areas: np.ndarray           # (T,)
    mean_vector: np.ndarray     # (ndof,) integrals of the nodal basis
    measure: float              # |Omega|


def pressure_space(mesh):
    nt = mesh.num_triangles
    areas = mesh.signed_areas()
    cell_dofs = np.arange(3 * nt, dtype=np.int64).reshape(nt, 3)
    mean = np.repeat(areas / 3.0, 3)
    return PressureSpace(mesh=mesh, ndof=3 * nt, cell_dofs=cell_dofs,
                         areas=areas, mean_vector=mean,
                         measure=float(areas.sum()))


@dataclass
class FeFunction:
    """A coefficient vector tagged with its space."""

    space: str      # 'velocity' | 'pressure'
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)


def interpolate_velocity(g, space):
    """Nodal interpolation of a vector field at vertices and edge
    midpoints.

    ``g(x, y)`` must accept coordinate arrays and return shape (..., 2).
    Quadratic fields are reproduced exactly.
    """
    xy = space.node_coords
    vals = np.asarray(g(xy[:, 0], xy[:, 1]), dtype=float)
    if vals.shape != (space.n_scalar, 2):
        raise ValueError(f"velocity callback returned shape {vals.shape}, "
                         f"expected {(space.n_scalar, 2)}")
    coeffs = np.concatenate([vals[:, 0], vals[:, 1]])
    return FeFunction(space="velocity", coeffs=coeffs)


def project_pressure(p, space, degree=10):
    """Elementwise L2 projection onto the discontinuous linear space.

    Solves the local 3x3 mass systems so that (p - p_h, q)_K = 0 for all
    local linear q; the right-hand moments use a quadrature rule of the
    given degree.
    """
    from .quadrature import triangle_rule

    rule = triangle_rule(degree)
    geom = element_geometry(space.mesh)
    pts = physical_points(geom, rule.points)
    pv = np.asarray(p(pts[..., 0], pts[..., 1]), dtype=float)
    lam = rule.points                      # P1 values at the rule points
    rhs = np.einsum("q,tq,qp->tp", rule.weights, pv, lam) * \
        geom.det[:, None]
    dinv = 0.25 * np.array([[3.0, -1.0, -1.0],
                            [-1.0, 3.0, -1.0],
                            [-1.0, -1.0, 3.0]])
    coeffs = np.einsum("pq,tq->tp", dinv, rhs) * (6.0 / geom.det[:, None])
    return FeFunction(space="pressure", coeffs=coeffs.ravel())


def boundary_dofs(space, mesh):
    """All velocity dofs whose node lies on the domain boundary."""
    if mesh is not space.mesh:
        raise ValueError("space was built for a different mesh")
    return space.boundary_dof_ids


def eval_fe_function(f, space, tri, ref_point, derivatives=False):
    """Evaluate a finite element function inside one triangle.

    Parameters
    ----------
    f : FeFunction
    space : VelocitySpace or PressureSpace
    tri : int
        Triangle index.
    ref_point : array_like, shape (3,)
        Barycentric coordinates.
    derivatives : bool
        For velocity functions, also return (gradient, divergence, curl);
        the 2D curl is the scalar d(u2)/dx - d(u1)/dy.
    """
    mesh = space.mesh
    pts = np.asarray(ref_point, dtype=float)
    _, jac, _ = map_reference(mesh.vertices[mesh.triangles[tri]], pts)

    if f.space == "pressure":
        local = f.coeffs[space.cell_dofs[tri]]
        return float(local @ pts)

    vals, grads, _ = eval_basis_p2(pts)
    inv = np.linalg.inv(jac)
    gphys = grads @ inv
    local = f.coeffs[space.cell_dofs[tri]]
    u = np.array([local[:6] @ vals, local[6:] @ vals])
    if not derivatives:
        return u
    grad = np.vstack([local[:6] @ gphys, local[6:] @ gphys])
    div = grad[0, 0] + grad[1, 1]
    curl = grad[1, 0] - grad[0, 1]
    return u, grad, div, curl
