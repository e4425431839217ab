"""Assembly of the stabilized saddle-point system.

The momentum operator is L u = sigma u + (beta . grad) u - mu Lap u with
a divergence-free advecting field beta.  Three discrete methods share
the Galerkin forms

    a(u, v) = (sigma u + (beta.grad) u, v) + mu (grad u, grad v)
    b(p, v) = (p, div v)

and differ in the stabilization:

* ``sv``    -- none (plain Galerkin on the divergence-free pair);
* ``supg``  -- delta0 sum_K h_K^2 (L u, beta.grad v)_K with the matching
  right-hand side term delta0 sum_K h_K^2 (f, beta.grad v)_K;
* ``lsvs``  -- least-squares stabilization of the vorticity equation,
  delta0 [ (tau curl L u, curl L v)_K + <h_F^2 [[(beta.grad)u x n]],
  [[(beta.grad)v x n]]>_{interior facets} ], with right-hand side term
  delta0 (tau curl f, curl L v)_K.

The 2D curl of a vector field w is the scalar dx w2 - dy w1 and
w x n = w1 n2 - w2 n1.  For quadratic velocities the viscous part of
curl(L v), namely -mu Lap(curl v), involves third derivatives and
vanishes identically on each element.

Stabilization terms are assembled on all dofs, boundary rows included;
Dirichlet elimination afterwards overrides the boundary rows.  Triplets
accumulate in fixed order (ascending element index, then ascending facet
index) so the CSR conversion is bit-deterministic.
"""

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
import scipy.sparse as sp

from .fe_space import (ElementGeometry, element_geometry, eval_basis_p2,
                       interpolate_velocity, physical_gradients,
                       physical_points)
from .linsolve import CsrMatrix, triplets_to_csr
from .quadrature import edge_rule, triangle_rule

METHODS = ("sv", "supg", "lsvs")

#: Stabilization weight used when none is given explicitly.
DEFAULT_DELTA0 = {"sv": 0.0, "supg": 0.25, "lsvs": 0.006}

# interior sample points for the startup consistency checks of the
# analytic callbacks (golden-ratio lattice, fixed once)
_CHECK_POINTS = np.array(
    [[0.1 + 0.8 * ((k * 0.6180339887498949) % 1.0),
      0.1 + 0.8 * ((k * 0.3819660112501051 + 0.17) % 1.0)]
     for k in range(10)])


class SpecError(ValueError):
    """A problem description failed its consistency checks."""


@dataclass
class SystemSpec:
    """Full description of one Oseen run.

    Vector callbacks take coordinate arrays (x, y) and return shape
    (..., 2); ``grad_beta`` returns the Jacobian (..., 2, 2) with
    J[i, j] = d beta_i / d x_j; ``curl_f`` returns a scalar array.
    ``beta_inf`` is the analytic supremum of |beta| over the closed
    domain and only enters the stabilization parameter tau.
    """

    mu: float
    sigma: float
    delta0: float
    method: str
    beta: Callable
    grad_beta: Callable
    beta_inf: float
    f: Callable
    curl_f: Optional[Callable]
    g: Callable

    def validate(self):
        """Check parameter ranges and the analytic callbacks.

        grad_beta and curl_f are compared against central finite
        differences of beta and f at 10 fixed sample points
        (componentwise relative error <= 1e-6) and beta must be
        divergence-free there (trace of grad_beta <= 1e-12).
        """
        if self.mu <= 0.0:
            raise SpecError(f"viscosity must be positive, got {self.mu}")
        if self.sigma < 0.0:
            raise SpecError(f"reaction must be >= 0, got {self.sigma}")
        if self.delta0 < 0.0:
            raise SpecError(f"delta0 must be >= 0, got {self.delta0}")
        if self.method not in METHODS:
            raise SpecError(f"unknown method {self.method!r}; "
                            f"expected one of {METHODS}")
        if self.method == "lsvs" and self.curl_f is None:
            raise SpecError("method 'lsvs' needs the curl of the forcing")

        x, y = _CHECK_POINTS[:, 0], _CHECK_POINTS[:, 1]
        step = 1e-5
        jac = np.asarray(self.grad_beta(x, y), dtype=float)
        fd = np.empty_like(jac)
        fd[..., 0] = (np.asarray(self.beta(x + step, y))
                      - np.asarray(self.beta(x - step, y))) / (2 * step)
        fd[..., 1] = (np.asarray(self.beta(x, y + step))
                      - np.asarray(self.beta(x, y - step))) / (2 * step)
        rel = np.abs(fd - jac) / np.maximum(1.0, np.abs(jac))
        if rel.max() > 1e-6:
            raise SpecError(
                f"grad_beta disagrees with finite differences of beta "
                f"(max relative error {rel.max():.2e})")
        div = jac[..., 0, 0] + jac[..., 1, 1]
        if np.abs(div).max() > 1e-12:
            raise SpecError(
                f"beta is not divergence-free at the sample points "
                f"(max |div beta| = {np.abs(div).max():.2e})")

        if self.curl_f is not None:
            cf = np.asarray(self.curl_f(x, y), dtype=float)
            fd_curl = ((np.asarray(self.f(x + step, y))[..., 1]
                        - np.asarray(self.f(x - step, y))[..., 1])
                       - (np.asarray(self.f(x, y + step))[..., 0]
                          - np.asarray(self.f(x, y - step))[..., 0])) \
                / (2 * step)
            rel = np.abs(fd_curl - cf) / np.maximum(1.0, np.abs(cf))
            if rel.max() > 1e-6:
                raise SpecError(
                    f"curl_f disagrees with finite differences of f "
                    f"(max relative error {rel.max():.2e})")
        return self


def tau(h_k, mu, beta_inf):
    """Stabilization parameter
    min(1, |beta|_inf h_K / mu) * h_K^3 / |beta|_inf."""
    if beta_inf <= 0.0:
        raise ValueError("tau is undefined for beta_inf = 0; "
                         "use the unstabilized method instead")
    if mu <= 0.0:
        raise ValueError("viscosity must be positive")
    h_k = np.asarray(h_k, dtype=float)
    return np.minimum(1.0, beta_inf * h_k / mu) * h_k ** 3 / beta_inf


@lru_cache(maxsize=8)
def _p2_tables(degree):
    rule = triangle_rule(degree)
    vals, grads, hess = eval_basis_p2(rule.points)
    return rule, vals, grads, hess


def _quad_weights(geom, rule):
    """Physical quadrature weights (T, nq)."""
    return geom.det[:, None] * rule.weights[None, :]


def _beta_at(spec, pts):
    b = np.asarray(spec.beta(pts[..., 0], pts[..., 1]), dtype=float)
    if b.shape != pts.shape:
        raise SpecError(f"beta returned shape {b.shape}, "
                        f"expected {pts.shape}")
    return b


def _curl_l_values(geom, grads_phys, hess_ref, beta, grad_beta, spec):
    """curl(L phi) for all 12 local vector basis functions: (T, nq, 12).

    curl L phi = sigma curl phi + beta . grad(curl phi)
                 + dx(beta) . grad(phi_2) - dy(beta) . grad(phi_1);
    the viscous contribution -mu Lap(curl phi) needs third derivatives
    and is identically zero for quadratic elements.
    """
    # beta . grad of the physical Hessian columns without materializing
    # the full Hessian: bH[t,q,i,d] = sum_a beta_a H[t,q,i,a,d]
    binv = np.einsum("tqa,tba->tqb", beta, geom.inv)
    tmp = np.einsum("tqb,qibc->tqic", binv, hess_ref)
    bh = np.einsum("tqic,tcd->tqid", tmp, geom.inv)

    nt, nq = grads_phys.shape[:2]
    out = np.empty((nt, nq, 12))
    jb = grad_beta
    # x-component basis (phi, 0): -(sigma dphi/dy + beta.H[:,y] + dyb.grad)
    out[..., :6] = -(spec.sigma * grads_phys[..., 1]
                     + bh[..., 1]
                     + np.einsum("tqa,tqia->tqi", jb[..., 1], grads_phys))
    # y-component basis (0, phi): +(sigma dphi/dx + beta.H[:,x] + dxb.grad)
    out[..., 6:] = (spec.sigma * grads_phys[..., 0]
                    + bh[..., 0]
                    + np.einsum("tqa,tqia->tqi", jb[..., 0], grads_phys))
    return out


def _weighted_gram(left, weights, right):
    """sum_q w[t,q] left[t,q,i] right[t,q,j] -> (T, i, j) via batched
    matmul (the element loop is the BLAS batch dimension)."""
    lw = left * weights[:, :, None]
    return np.matmul(lw.transpose(0, 2, 1), right)


def curl_l_basis(triangle, ref_point, basis_index, spec):
    """curl(L phi_k) at one barycentric point of one physical triangle.

    ``basis_index`` runs over the 12 local vector dofs (6 x-component
    scalar bases, then 6 y-component ones).
    """
    from .mesh import Triangulation

    tri = np.asarray(triangle, dtype=float).reshape(1, 3, 2)
    mesh_like = Triangulation(vertices=tri[0],
                              triangles=np.array([[0, 1, 2]]),
                              boundary_vertex_flags=np.zeros(3, dtype=bool))
    geom = element_geometry(mesh_like)
    lam = np.asarray(ref_point, dtype=float).reshape(1, 3)
    _, grads, hess = eval_basis_p2(lam)
    gphys = physical_gradients(geom, grads)
    pts = physical_points(geom, lam)
    beta = _beta_at(spec, pts)
    jb = np.asarray(spec.grad_beta(pts[..., 0], pts[..., 1]), dtype=float)
    vals = _curl_l_values(geom, gphys, hess, beta, jb, spec)
    return float(vals[0, 0, basis_index])


def _scatter_square(local, dofs):
    """(T, k, k) local blocks + (T, k) dofs -> triplet arrays,
    element-major order."""
    nt, k = dofs.shape
    rows = np.repeat(dofs[:, :, None], k, axis=2).ravel()
    cols = np.repeat(dofs[:, None, :], k, axis=1).ravel()
    return rows, cols, local.ravel()


def _a_local(geom, rule, vals, grads, spec):
    """Scalar 6x6 Galerkin blocks (mass + convection + viscous)."""
    w = _quad_weights(geom, rule)
    gphys = physical_gradients(geom, grads)
    pts = physical_points(geom, rule.points)
    beta = _beta_at(spec, pts)

    nt, nq = w.shape
    flat = gphys.transpose(0, 2, 1, 3).reshape(nt, 6, 2 * nq)
    wg = (gphys * (spec.mu * w)[:, :, None, None]) \
        .transpose(0, 2, 1, 3).reshape(nt, 6, 2 * nq)
    local = np.matmul(wg, flat.transpose(0, 2, 1))
    if spec.sigma != 0.0:
        vv = vals[:, :, None] * vals[:, None, :]
        local += spec.sigma * np.tensordot(w, vv, axes=(1, 0))
    conv = np.einsum("tqa,tqja->tqj", beta, gphys)
    local += _weighted_gram(np.broadcast_to(vals, (nt, nq, 6)), w, conv)
    return local


def _expand_vector_block(local6):
    """Place a scalar 6x6 block on both components of the 12x12 local."""
    nt = local6.shape[0]
    out = np.zeros((nt, 12, 12))
    out[:, :6, :6] = local6
    out[:, 6:, 6:] = local6
    return out


def _a_triplets(mesh, vspace, spec, degree=8):
    geom = element_geometry(mesh)
    rule, vals, grads, _ = _p2_tables(degree)
    local = _expand_vector_block(_a_local(geom, rule, vals, grads, spec))
    return _scatter_square(local, vspace.cell_dofs)


def assemble_a(mesh, vspace, spec, degree=8):
    """Galerkin block A with A_ij = a(phi_j, phi_i) on the vector dofs
    (the two velocity components decouple)."""
    return triplets_to_csr(_a_triplets(mesh, vspace, spec, degree=degree),
                           vspace.ndof)


def _b_triplets(mesh, vspace, pspace, degree=8):
    geom = element_geometry(mesh)
    rule, vals, grads, _ = _p2_tables(degree)
    w = _quad_weights(geom, rule)
    gphys = physical_gradients(geom, grads)
    lam = rule.points                      # P1 values at the rule points

    nt, nq = w.shape
    lam_b = np.broadcast_to(lam, (nt, nq, 3))
    local = np.empty((nt, 3, 12))
    local[:, :, :6] = _weighted_gram(lam_b, w, gphys[..., 0])
    local[:, :, 6:] = _weighted_gram(lam_b, w, gphys[..., 1])

    rows = np.repeat(pspace.cell_dofs[:, :, None], 12, axis=2).ravel()
    cols = np.repeat(vspace.cell_dofs[:, None, :], 3, axis=1).ravel()
    return rows, cols, local.ravel()


def assemble_b(mesh, vspace, pspace, degree=8):
    """Divergence coupling B_qj = (q, div phi_j) as a rectangular
    scipy CSR matrix of shape (pressure dofs, velocity dofs)."""
    rows, cols, vals = _b_triplets(mesh, vspace, pspace, degree=degree)
    return sp.coo_matrix((vals, (rows, cols)),
                         shape=(pspace.ndof, vspace.ndof)).tocsr()


def _lsvs_triplets(mesh, facets, vspace, spec, degree=8, edge_degree=7):
    geom = element_geometry(mesh)
    rule, _, grads, hess = _p2_tables(degree)
    w = _quad_weights(geom, rule)
    gphys = physical_gradients(geom, grads)
    pts = physical_points(geom, rule.points)
    beta = _beta_at(spec, pts)
    jb = np.asarray(spec.grad_beta(pts[..., 0], pts[..., 1]), dtype=float)

    curl_l = _curl_l_values(geom, gphys, hess, beta, jb, spec)
    tau_k = tau(mesh.h_per_triangle, spec.mu, spec.beta_inf)
    local = _weighted_gram(curl_l, (spec.delta0 * tau_k)[:, None] * w,
                           curl_l)
    vol = _scatter_square(local, vspace.cell_dofs)

    fac = _lsvs_facet_triplets(mesh, facets, vspace, spec, edge_degree)
    rows = np.concatenate([vol[0], fac[0]])
    cols = np.concatenate([vol[1], fac[1]])
    vals = np.concatenate([vol[2], fac[2]])
    return rows, cols, vals


def assemble_lsvs(mesh, facets, vspace, spec, degree=8, edge_degree=7):
    """Vorticity least-squares stabilization block (volume +
    interior-facet penalty); symmetric positive semidefinite."""
    return triplets_to_csr(
        _lsvs_triplets(mesh, facets, vspace, spec, degree=degree,
                       edge_degree=edge_degree), vspace.ndof)


def _lsvs_facet_triplets(mesh, facets, vspace, spec, edge_degree):
    """Penalty on tangential jumps of the convective derivative over
    interior facets; couples the dofs of both adjacent triangles."""
    geom = element_geometry(mesh)
    rule = edge_rule(edge_degree)
    idx = np.flatnonzero(facets.interior)
    if idx.size == 0:
        empty = np.empty(0)
        return empty.astype(np.int64), empty.astype(np.int64), empty

    t_lo = facets.adjacent[idx, 0]
    t_hi = facets.adjacent[idx, 1]
    pa = mesh.vertices[facets.facets[idx, 0]]
    pb = mesh.vertices[facets.facets[idx, 1]]
    h_f = facets.lengths[idx]
    nrm = facets.normals[idx]

    s = rule.points
    pts = pa[:, None, :] + s[None, :, None] * (pb - pa)[:, None, :]
    beta = np.asarray(spec.beta(pts[..., 0], pts[..., 1]), dtype=float)

    def side_derivative(tri_ids):
        loc = np.einsum("fab,fqb->fqa", geom.inv[tri_ids],
                        pts - geom.origin[tri_ids][:, None, :])
        lam = np.concatenate([1.0 - loc.sum(axis=-1, keepdims=True), loc],
                             axis=-1)
        _, grads, _ = eval_basis_p2(lam)
        gphys = np.einsum("fqib,fba->fqia", grads, geom.inv[tri_ids])
        return np.einsum("fqa,fqia->fqi", beta, gphys)

    d_lo = side_derivative(t_lo)
    d_hi = side_derivative(t_hi)

    nf, nq = d_lo.shape[:2]
    jump = np.empty((nf, nq, 24))
    jump[..., 0:6] = d_lo * nrm[:, None, None, 1]
    jump[..., 6:12] = -d_lo * nrm[:, None, None, 0]
    jump[..., 12:18] = -d_hi * nrm[:, None, None, 1]
    jump[..., 18:24] = d_hi * nrm[:, None, None, 0]

    scale = spec.delta0 * h_f ** 3        # h_F^2 weight, h_F arc length
    local = _weighted_gram(jump, scale[:, None] * rule.weights[None, :],
                           jump)
    dofs = np.concatenate([vspace.cell_dofs[t_lo],
                           vspace.cell_dofs[t_hi]], axis=1)
    return _scatter_square(local, dofs)


def _supg_triplets(mesh, vspace, spec, degree=8):
    geom = element_geometry(mesh)
    rule, vals, grads, hess = _p2_tables(degree)
    w = _quad_weights(geom, rule)
    gphys = physical_gradients(geom, grads)
    pts = physical_points(geom, rule.points)
    beta = _beta_at(spec, pts)

    conv = np.einsum("tqa,tqia->tqi", beta, gphys)
    # elementwise Laplacian through the metric inv inv^T
    metric = np.einsum("tbd,tcd->tbc", geom.inv, geom.inv)
    lap = np.einsum("qibc,tbc->tqi", hess, metric)
    l_op = conv - spec.mu * lap
    if spec.sigma != 0.0:
        l_op = l_op + spec.sigma * vals[None, :, :]

    scale = spec.delta0 * mesh.h_per_triangle ** 2
    local6 = _weighted_gram(conv, scale[:, None] * w, l_op)
    local = _expand_vector_block(local6)
    return _scatter_square(local, vspace.cell_dofs)


def assemble_supg(mesh, vspace, spec, degree=8):
    """Streamline stabilization block
    delta0 sum_K h_K^2 (L u, beta.grad v)_K; nonsymmetric in general,
    diagonal over the two velocity components."""
    return triplets_to_csr(_supg_triplets(mesh, vspace, spec,
                                          degree=degree), vspace.ndof)


def assemble_rhs(mesh, vspace, spec, degree=8):
    """Method-dependent load vector on the velocity dofs."""
    geom = element_geometry(mesh)
    rule, vals, grads, hess = _p2_tables(degree)
    w = _quad_weights(geom, rule)
    pts = physical_points(geom, rule.points)
    fv = np.asarray(spec.f(pts[..., 0], pts[..., 1]), dtype=float)

    nt = mesh.num_triangles
    local = np.empty((nt, 12))
    local[:, :6] = np.einsum("tq,qi->ti", w * fv[..., 0], vals)
    local[:, 6:] = np.einsum("tq,qi->ti", w * fv[..., 1], vals)

    if spec.method == "lsvs" and spec.delta0 != 0.0:
        if spec.curl_f is None:
            raise SpecError("method 'lsvs' needs the curl of the forcing")
        gphys = physical_gradients(geom, grads)
        beta = _beta_at(spec, pts)
        jb = np.asarray(spec.grad_beta(pts[..., 0], pts[..., 1]),
                        dtype=float)
        curl_l = _curl_l_values(geom, gphys, hess, beta, jb, spec)
        cf = np.asarray(spec.curl_f(pts[..., 0], pts[..., 1]), dtype=float)
        tau_k = tau(mesh.h_per_triangle, spec.mu, spec.beta_inf)
        sc = (spec.delta0 * tau_k)[:, None] * w * cf
        local += np.einsum("tq,tqi->ti", sc, curl_l)
    elif spec.method == "supg" and spec.delta0 != 0.0:
        gphys = physical_gradients(geom, grads)
        beta = _beta_at(spec, pts)
        conv = np.einsum("tqa,tqia->tqi", beta, gphys)
        sc = (spec.delta0 * mesh.h_per_triangle ** 2)[:, None] * w
        local[:, :6] += np.einsum("tq,tqi->ti", sc * fv[..., 0], conv)
        local[:, 6:] += np.einsum("tq,tqi->ti", sc * fv[..., 1], conv)

    return np.bincount(vspace.cell_dofs.ravel(), weights=local.ravel(),
                       minlength=vspace.ndof)


@dataclass
class SparseSystem:
    """Assembled saddle system
    [[A+S, B^T, 0], [B, 0, m], [0, m^T, 0]] with load [L, 0, 0].

    The unknown ordering is velocity dofs, pressure dofs, then the
    scalar mean multiplier.  ``dirichlet_dofs``/``dirichlet_values`` are
    filled by ``apply_dirichlet``; afterwards the constrained rows are
    identity rows and their columns have been folded into the load.
    """

    matrix: CsrMatrix
    rhs: np.ndarray
    n_velocity: int
    n_pressure: int
    mean_vector: np.ndarray
    vspace: object
    pspace: object
    dirichlet_dofs: Optional[np.ndarray] = None
    dirichlet_values: Optional[np.ndarray] = None
    # stabilization block on the unconstrained velocity dofs, kept for
    # the |.|_S diagnostic (None for the plain Galerkin method)
    stab_matrix: Optional[CsrMatrix] = None

    @property
    def dim(self):
        return self.n_velocity + self.n_pressure + 1

    @property
    def constrained(self):
        return self.dirichlet_dofs is not None


def assemble_system(mesh, facets, vspace, pspace, spec,
                    degree=8, edge_degree=7, validate=True,
                    keep_stabilization=False):
    """Assemble the unconstrained saddle system for the chosen method.

    With ``keep_stabilization`` the stabilization block is additionally
    returned as its own matrix on the system (for seminorm reporting).
    """
    if validate:
        spec.validate()
    nu = vspace.ndof
    npr = pspace.ndof
    dim = nu + npr + 1

    ar, ac, av = _a_triplets(mesh, vspace, spec, degree=degree)
    parts_r, parts_c, parts_v = [ar], [ac], [av]

    stab = None
    if spec.method == "lsvs":
        sr, sc, sv = _lsvs_triplets(mesh, facets, vspace, spec,
                                    degree=degree, edge_degree=edge_degree)
        parts_r.append(sr)
        parts_c.append(sc)
        parts_v.append(sv)
    elif spec.method == "supg":
        sr, sc, sv = _supg_triplets(mesh, vspace, spec, degree=degree)
        parts_r.append(sr)
        parts_c.append(sc)
        parts_v.append(sv)
    if keep_stabilization and spec.method in ("lsvs", "supg"):
        stab = triplets_to_csr((sr, sc, sv), nu)

    br, bc, bv = _b_triplets(mesh, vspace, pspace, degree=degree)
    parts_r += [bc, br + nu]              # B^T block, then B block
    parts_c += [br + nu, bc]
    parts_v += [bv, bv]

    m = pspace.mean_vector
    pdofs = nu + np.arange(npr, dtype=np.int64)
    last = np.full(npr, dim - 1, dtype=np.int64)
    parts_r += [pdofs, last]
    parts_c += [last, pdofs]
    parts_v += [m, m]

    rows = np.concatenate(parts_r)
    cols = np.concatenate(parts_c)
    vals = np.concatenate(parts_v)
    matrix = triplets_to_csr((rows, cols, vals), dim)

    rhs = np.zeros(dim)
    rhs[:nu] = assemble_rhs(mesh, vspace, spec, degree=degree)

    return SparseSystem(matrix=matrix, rhs=rhs, n_velocity=nu,
                        n_pressure=npr, mean_vector=m.copy(),
                        vspace=vspace, pspace=pspace, stab_matrix=stab)


def apply_dirichlet(system, g):
    """Symmetric elimination of the boundary velocity dofs.

    Boundary dofs are fixed to the nodal values of ``g``; their columns
    move to the right-hand side, their rows become identity rows.
    """
    if system.constrained:
        raise ValueError("system is already constrained")
    vspace = system.vspace
    bdofs = vspace.boundary_dof_ids
    gvals = interpolate_velocity(g, vspace).coeffs[bdofs]

    dim = system.dim
    fixed = np.zeros(dim, dtype=bool)
    fixed[bdofs] = True
    xb = np.zeros(dim)
    xb[bdofs] = gvals

    coo = system.matrix.to_scipy().tocoo()
    rows, cols, vals = coo.row.astype(np.int64), coo.col.astype(np.int64), \
        coo.data
    row_fixed = fixed[rows]
    col_fixed = fixed[cols]

    rhs = system.rhs.copy()
    move = ~row_fixed & col_fixed
    rhs -= np.bincount(rows[move], weights=vals[move] * xb[cols[move]],
                       minlength=dim)
    rhs[bdofs] = gvals

    keep = ~row_fixed & ~col_fixed
    rows = np.concatenate([rows[keep], bdofs])
    cols = np.concatenate([cols[keep], bdofs])
    vals = np.concatenate([vals[keep], np.ones(len(bdofs))])
    matrix = triplets_to_csr((rows, cols, vals), dim)

    return replace(system, matrix=matrix, rhs=rhs,
                   dirichlet_dofs=np.asarray(bdofs, dtype=np.int64),
                   dirichlet_values=gvals)


def build_system(mesh, facets, vspace, pspace, spec,
                 degree=8, edge_degree=7, validate=True,
                 keep_stabilization=False):
    """Assemble and constrain the saddle system in one call."""
    system = assemble_system(mesh, facets, vspace, pspace, spec,
                             degree=degree, edge_degree=edge_degree,
                             validate=validate,
                             keep_stabilization=keep_stabilization)
    return apply_dirichlet(system, spec.g)


def system_residual(system, u_coeffs, p_coeffs):
    """Residual of a constrained system at a candidate pair.

    ``p_coeffs`` follows the PDE sign convention; the stored saddle
    unknown is its negative (see linsolve.solve_saddle).  Returns the
    full residual vector M x - rhs.
    """
    x = np.concatenate([u_coeffs, -np.asarray(p_coeffs), [0.0]])
    return system.matrix.to_scipy() @ x - system.rhs
