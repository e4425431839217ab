"""Manufactured Oseen benchmarks, error norms and convergence studies.

Four cases on the unit square, all with inhomogeneous Dirichlet data
g = u and an advecting field beta that is divergence-free:

1. potential flow u = grad(x^3 - 3 x y^2), beta = u, f = 0: the forcing
   and the whole convective term are gradients, so a pressure-robust
   method must reproduce the (quadratic) velocity exactly;
2. planar lattice flow u = (sin sin, cos cos)(2 pi .), beta = u,
   f = sigma u - mu Lap u: the convective term is a gradient only in
   the limit u_h -> u;
3. the same velocity with beta = (0, 1), p = 0: the convective
   derivative is divergence-free (the friendliest case for streamline
   stabilization);
4. superposition beta = u + (0, 1) with the Example-2 pressure: the
   convective forcing has both an irrotational and a divergence-free
   part.

Error shorthands follow the usual convention: L2(u) = |u - u_h|_0,
H1(u) = |grad(u - u_h)|_0, L2(p) = |p - p_h|_0 with both pressures
shifted to zero mean.
"""

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .assembly import (DEFAULT_DELTA0, SystemSpec, assemble_lsvs,
                       assemble_supg, build_system)
from .fe_space import (element_geometry, eval_basis_p2, interpolate_velocity,
                       physical_gradients, physical_points, pressure_space,
                       project_pressure, velocity_space)
from .linsolve import shift_pressure_mean, solve_saddle
from .mesh import build_facets, generate_unit_square_mesh, refine_barycentric, \
    refine_uniform
from .quadrature import triangle_rule

_2PI = 2.0 * np.pi
_4PI = 4.0 * np.pi
_SQ2 = np.sqrt(2.0)


@dataclass
class BenchmarkCase:
    """Exact data of one manufactured problem."""

    id: int
    sigma: float
    mu: float
    u: Callable
    grad_u: Callable
    p: Callable
    beta: Callable
    grad_beta: Callable
    beta_inf: float
    f: Callable
    curl_f: Callable
    g: Callable = None

    def __post_init__(self):
        if self.g is None:
            self.g = self.u

    def validate(self, npoints=20, seed=20260809, tol=1e-8):
        """Check the momentum balance f = sigma u + (beta.grad) u
        - mu Lap u + grad p at random interior points, with Lap u and
        grad p from central differences of the exact fields, and check
        div u = 0."""
        rng = np.random.default_rng(seed)
        x = 0.05 + 0.9 * rng.random(npoints)
        y = 0.05 + 0.9 * rng.random(npoints)
        h = 7e-6

        u = np.asarray(self.u(x, y))
        gu = np.asarray(self.grad_u(x, y))
        beta = np.asarray(self.beta(x, y))
        f = np.asarray(self.f(x, y))

        div = gu[..., 0, 0] + gu[..., 1, 1]
        if np.abs(div).max() > 1e-10:
            raise ValueError(
                f"example {self.id}: div u = {np.abs(div).max():.2e} "
                "at sample points")

        lap = ((np.asarray(self.grad_u(x + h, y))[..., 0]
                - np.asarray(self.grad_u(x - h, y))[..., 0])
               + (np.asarray(self.grad_u(x, y + h))[..., 1]
                  - np.asarray(self.grad_u(x, y - h))[..., 1])) / (2 * h)
        gp = np.stack(
            [(np.asarray(self.p(x + h, y)) - np.asarray(self.p(x - h, y))),
             (np.asarray(self.p(x, y + h)) - np.asarray(self.p(x, y - h)))],
            axis=-1) / (2 * h)
        conv = np.einsum("...j,...ij->...i", beta, gu)

        resid = f - (self.sigma * u + conv - self.mu * lap + gp)
        scale = np.maximum(1.0, np.abs(f))
        worst = float(np.max(np.abs(resid) / scale))
        if worst > tol:
            raise ValueError(
                f"example {self.id}: momentum residual {worst:.2e} "
                f"exceeds {tol:.0e}")
        return self


def _vec(c1, c2):
    return np.stack([c1, c2], axis=-1)


def _jac(j11, j12, j21, j22):
    return np.stack([np.stack([j11, j12], axis=-1),
                     np.stack([j21, j22], axis=-1)], axis=-2)


def _lattice_u(x, y):
    return _vec(np.sin(_2PI * x) * np.sin(_2PI * y),
                np.cos(_2PI * x) * np.cos(_2PI * y))


def _lattice_grad_u(x, y):
    sx, cx = np.sin(_2PI * x), np.cos(_2PI * x)
    sy, cy = np.sin(_2PI * y), np.cos(_2PI * y)
    return _jac(_2PI * cx * sy, _2PI * sx * cy,
                -_2PI * sx * cy, -_2PI * cx * sy)


def _lattice_dy_u(x, y):
    sx, cx = np.sin(_2PI * x), np.cos(_2PI * x)
    sy, cy = np.sin(_2PI * y), np.cos(_2PI * y)
    return _vec(_2PI * sx * cy, -_2PI * cx * sy)


def _lattice_curl_u(x, y):
    return -_4PI * np.sin(_2PI * x) * np.cos(_2PI * y)


def make_example(ex_id, sigma, mu):
    """Construct one of the four benchmark cases.

    Parameters
    ----------
    ex_id : int in {1, 2, 3, 4}
    sigma : float >= 0
    mu : float > 0
    """
    if mu <= 0.0:
        raise ValueError(f"viscosity must be positive, got {mu}")
    if sigma < 0.0:
        raise ValueError(f"reaction must be >= 0, got {sigma}")

    if ex_id == 1:
        def u(x, y):
            return _vec(3.0 * (x * x - y * y), -6.0 * x * y)

        def grad_u(x, y):
            return _jac(6.0 * x, -6.0 * y, -6.0 * y, -6.0 * x)

        def p(x, y):
            # sigma u is itself a gradient (of sigma (x^3 - 3 x y^2)),
            # so with f = 0 the pressure absorbs it
            r2 = x * x + y * y
            return (-sigma * (x ** 3 - 3.0 * x * y * y)
                    - 4.5 * r2 * r2 + 2.8)

        def zero_vec(x, y):
            z = np.zeros_like(np.asarray(x, dtype=float))
            return _vec(z, z)

        def zero_scalar(x, y):
            return np.zeros_like(np.asarray(x, dtype=float))

        return BenchmarkCase(id=1, sigma=sigma, mu=mu, u=u, grad_u=grad_u,
                             p=p, beta=u, grad_beta=grad_u, beta_inf=6.0,
                             f=zero_vec, curl_f=zero_scalar)

    if ex_id == 2:
        amp = sigma + 8.0 * np.pi ** 2 * mu

        def p(x, y):
            return 0.25 * (np.cos(_4PI * x) - np.cos(_4PI * y))

        def f(x, y):
            return amp * _lattice_u(x, y)

        def curl_f(x, y):
            return amp * _lattice_curl_u(x, y)

        return BenchmarkCase(id=2, sigma=sigma, mu=mu, u=_lattice_u,
                             grad_u=_lattice_grad_u, p=p, beta=_lattice_u,
                             grad_beta=_lattice_grad_u, beta_inf=_SQ2,
                             f=f, curl_f=curl_f)

    if ex_id in (3, 4):
        amp = sigma + 8.0 * np.pi ** 2 * mu

        def f(x, y):
            return amp * _lattice_u(x, y) + _lattice_dy_u(x, y)

        def curl_f(x, y):
            return (amp * _lattice_curl_u(x, y)
                    + 8.0 * np.pi ** 2 * np.sin(_2PI * x) * np.sin(_2PI * y))

        if ex_id == 3:
            def p(x, y):
                return np.zeros_like(np.asarray(x, dtype=float))

            def beta(x, y):
                z = np.zeros_like(np.asarray(x, dtype=float))
                return _vec(z, z + 1.0)

            def grad_beta(x, y):
                z = np.zeros_like(np.asarray(x, dtype=float))
                return _jac(z, z, z, z)

            return BenchmarkCase(id=3, sigma=sigma, mu=mu, u=_lattice_u,
                                 grad_u=_lattice_grad_u, p=p, beta=beta,
                                 grad_beta=grad_beta, beta_inf=1.0,
                                 f=f, curl_f=curl_f)

        def p(x, y):
            return 0.25 * (np.cos(_4PI * x) - np.cos(_4PI * y))

        def beta(x, y):
            b = _lattice_u(x, y).copy()
            b[..., 1] += 1.0
            return b

        return BenchmarkCase(id=4, sigma=sigma, mu=mu, u=_lattice_u,
                             grad_u=_lattice_grad_u, p=p, beta=beta,
                             grad_beta=_lattice_grad_u,
                             beta_inf=1.0 + _SQ2, f=f, curl_f=curl_f)

    raise ValueError(f"unknown example id {ex_id}; expected 1..4")


def to_system_spec(case, method, delta0=None):
    """Turn a benchmark case into a solver problem description."""
    if delta0 is None:
        delta0 = DEFAULT_DELTA0[method]
    if method == "sv":
        delta0 = 0.0
    return SystemSpec(mu=case.mu, sigma=case.sigma, delta0=delta0,
                      method=method, beta=case.beta,
                      grad_beta=case.grad_beta, beta_inf=case.beta_inf,
                      f=case.f, curl_f=case.curl_f, g=case.g)


# ---------------------------------------------------------------------------
# error measures


def _velocity_at_quad(coeffs, vspace, geom, rule, tables):
    vals, grads, _ = tables
    local = coeffs[vspace.cell_dofs]                      # (T, 12)
    gphys = physical_gradients(geom, grads)
    uh = np.stack([np.einsum("ti,qi->tq", local[:, :6], vals),
                   np.einsum("ti,qi->tq", local[:, 6:], vals)], axis=-1)
    guh = np.stack([np.einsum("ti,tqia->tqa", local[:, :6], gphys),
                    np.einsum("ti,tqia->tqa", local[:, 6:], gphys)],
                   axis=-2)                               # (T, nq, 2, 2)
    return uh, guh


def error_norms(case, solution, mesh, vspace, pspace, degree=10):
    """(L2(u), H1(u) seminorm, L2(p)); both pressures mean-shifted."""
    rule = triangle_rule(degree)
    tables = eval_basis_p2(rule.points)
    geom = element_geometry(mesh)
    w = geom.det[:, None] * rule.weights[None, :]
    pts = physical_points(geom, rule.points)

    uh, guh = _velocity_at_quad(solution.velocity, vspace, geom, rule,
                                tables)
    ue = np.asarray(case.u(pts[..., 0], pts[..., 1]))
    gue = np.asarray(case.grad_u(pts[..., 0], pts[..., 1]))
    l2u = np.sqrt(np.sum(w * np.sum((ue - uh) ** 2, axis=-1)))
    h1u = np.sqrt(np.sum(w * np.sum((gue - guh) ** 2, axis=(-2, -1))))

    lam = rule.points
    ph = np.einsum("tp,qp->tq", solution.pressure[pspace.cell_dofs], lam)
    pe = np.asarray(case.p(pts[..., 0], pts[..., 1]))
    measure = pspace.measure
    pe = pe - np.sum(w * pe) / measure
    ph = ph - float(pspace.mean_vector @ solution.pressure) / measure
    l2p = np.sqrt(np.sum(w * (pe - ph) ** 2))
    return float(l2u), float(h1u), float(l2p)


def divergence_norm(u_coeffs, mesh, vspace, degree=10):
    """|div u_h|_0; exactly zero (to roundoff) for the divergence-free
    pair on barycentrically refined meshes."""
    rule = triangle_rule(degree)
    tables = eval_basis_p2(rule.points)
    geom = element_geometry(mesh)
    w = geom.det[:, None] * rule.weights[None, :]
    _, guh = _velocity_at_quad(np.asarray(u_coeffs), vspace, geom, rule,
                               tables)
    div = guh[..., 0, 0] + guh[..., 1, 1]
    return float(np.sqrt(np.sum(w * div ** 2)))


def velocity_gradient_norm(u_coeffs, mesh, vspace, degree=10):
    """|grad u_h|_0 (used to scale the divergence check)."""
    rule = triangle_rule(degree)
    tables = eval_basis_p2(rule.points)
    geom = element_geometry(mesh)
    w = geom.det[:, None] * rule.weights[None, :]
    _, guh = _velocity_at_quad(np.asarray(u_coeffs), vspace, geom, rule,
                               tables)
    return float(np.sqrt(np.sum(w * np.sum(guh ** 2, axis=(-2, -1)))))


def s_seminorm(err_coeffs, s_matrix):
    """Stabilization seminorm sqrt(x^T S x) of a discrete velocity
    coefficient vector; 0 without stabilization.  Roundoff-negative
    quadratic forms are clipped."""
    if s_matrix is None:
        return 0.0
    x = np.asarray(err_coeffs, dtype=float)
    q = float(x @ (s_matrix.to_scipy() @ x))
    return float(np.sqrt(max(q, 0.0)))


def supercloseness_probe(case, solution, mesh, pspace, degree=10):
    """|pi_h p - p_h|_0 with pi_h the elementwise L2 projection of the
    exact pressure; both fields mean-shifted."""
    pi_p = project_pressure(case.p, pspace, degree=degree).coeffs
    pi_p = shift_pressure_mean(pi_p, pspace.mean_vector)
    ph = shift_pressure_mean(solution.pressure, pspace.mean_vector)
    d = (pi_p - ph).reshape(-1, 3)
    s = d.sum(axis=1)
    quad = (pspace.areas / 12.0) * (s * s + np.sum(d * d, axis=1))
    return float(np.sqrt(np.sum(quad)))


def eoc(errors, hs):
    """Experimental orders of convergence between consecutive levels.

    rate_l = ln(e_{l-1}/e_l) / ln(h_{l-1}/h_l).  Nonpositive errors mark
    an exactly reproduced solution; those pairs are excluded and their
    rate reported as None ('exact').

    Returns
    -------
    (rates, average) : (list of float or None, float or None)
    """
    errors = list(errors)
    hs = list(hs)
    if len(errors) != len(hs) or len(errors) < 2:
        raise ValueError("need matching error/h sequences of length >= 2")
    rates = []
    for e0, e1, h0, h1 in zip(errors, errors[1:], hs, hs[1:]):
        if e0 <= 0.0 or e1 <= 0.0:
            rates.append(None)
        else:
            rates.append(float(np.log(e0 / e1) / np.log(h0 / h1)))
    valid = [r for r in rates if r is not None]
    avg = float(np.mean(valid)) if valid else None
    return rates, avg


# ---------------------------------------------------------------------------
# study runner


@dataclass
class LevelStats:
    level: int
    h_max: float
    ndof_u: int
    ndof_p: int
    l2u: float
    h1u: float
    l2p: float
    div_norm: float
    s_seminorm: float
    picl2: float
    wall_ms: float
    # not part of the CSV schema; used by the --check self-test
    grad_norm: float = 0.0
    residual: float = 0.0


@dataclass
class RunReport:
    """Per-level errors and rates of one (example, method, sigma, mu,
    delta0) study."""

    example_id: int
    method: str
    sigma: float
    mu: float
    delta0: float
    rows: list = field(default_factory=list)

    def column(self, name):
        return [getattr(r, name) for r in self.rows]

    def eoc(self, name):
        """(rates, average) for one error column against h_max."""
        return eoc(self.column(name), self.column("h_max"))


def build_level(level, n=4, jitter=0.2, base_mesh=None):
    """Mesh hierarchy: red-refine the base mesh (level - 1) times, then
    apply the Alfeld split once."""
    if level < 1:
        raise ValueError("levels are 1-based")
    mesh = base_mesh if base_mesh is not None \
        else generate_unit_square_mesh(n, jitter)
    for _ in range(level - 1):
        mesh = refine_uniform(mesh)
    mesh = refine_barycentric(mesh)
    facets = build_facets(mesh)
    return mesh, facets


class LevelCache:
    """Shares meshes and spaces between runs of one study."""

    def __init__(self, n=4, jitter=0.2, base_mesh=None):
        self.n = n
        self.jitter = jitter
        self.base_mesh = base_mesh
        self._levels = {}

    def get(self, level):
        if level not in self._levels:
            mesh, facets = build_level(level, n=self.n, jitter=self.jitter,
                                       base_mesh=self.base_mesh)
            vspace = velocity_space(mesh, facets)
            pspace = pressure_space(mesh)
            self._levels[level] = (mesh, facets, vspace, pspace)
        return self._levels[level]


def stabilization_matrix(mesh, facets, vspace, spec, degree=8,
                         edge_degree=7):
    """The stabilization block of the chosen method, or None for the
    plain Galerkin method."""
    if spec.method == "lsvs":
        return assemble_lsvs(mesh, facets, vspace, spec, degree=degree,
                             edge_degree=edge_degree)
    if spec.method == "supg":
        return assemble_supg(mesh, vspace, spec, degree=degree)
    return None


def solve_on_level(case, method, level, cache, delta0=None,
                   volume_degree=8, edge_degree=7, error_degree=10,
                   tol=1e-10, with_stats=True):
    """Assemble, solve and measure one run; returns
    (LevelStats, SaddleSolution)."""
    mesh, facets, vspace, pspace = cache.get(level)
    spec = to_system_spec(case, method, delta0)

    t0 = time.perf_counter()
    system = build_system(mesh, facets, vspace, pspace, spec,
                          degree=volume_degree, edge_degree=edge_degree,
                          keep_stabilization=with_stats)
    sol = solve_saddle(system, tol=tol)
    wall_ms = 1e3 * (time.perf_counter() - t0)
    if not with_stats:
        return None, sol

    l2u, h1u, l2p = error_norms(case, sol, mesh, vspace, pspace,
                                degree=error_degree)
    div = divergence_norm(sol.velocity, mesh, vspace, degree=error_degree)
    grad = velocity_gradient_norm(sol.velocity, mesh, vspace,
                                  degree=error_degree)
    s_mat = system.stab_matrix
    err = interpolate_velocity(case.u, vspace).coeffs - sol.velocity
    s_semi = s_seminorm(err, s_mat)
    picl2 = supercloseness_probe(case, sol, mesh, pspace,
                                 degree=error_degree)

    stats = LevelStats(level=level, h_max=mesh.h_max, ndof_u=vspace.ndof,
                       ndof_p=pspace.ndof, l2u=l2u, h1u=h1u, l2p=l2p,
                       div_norm=div, s_seminorm=s_semi, picl2=picl2,
                       wall_ms=wall_ms, grad_norm=grad,
                       residual=sol.residual)
    return stats, sol


def run_convergence(case, method, levels, cache=None, delta0=None,
                    n=4, jitter=0.2, volume_degree=8, edge_degree=7,
                    error_degree=10, tol=1e-10):
    """Solve one case with one method on a level hierarchy."""
    if cache is None:
        cache = LevelCache(n=n, jitter=jitter)
    if delta0 is None:
        delta0 = DEFAULT_DELTA0[method]
    report = RunReport(example_id=case.id, method=method, sigma=case.sigma,
                       mu=case.mu, delta0=delta0 if method != "sv" else 0.0)
    for level in levels:
        stats, _ = solve_on_level(case, method, level, cache,
                                  delta0=delta0,
                                  volume_degree=volume_degree,
                                  edge_degree=edge_degree,
                                  error_degree=error_degree, tol=tol)
        report.rows.append(stats)
    return report


def _default_grad_phi(x, y):
    # phi = x^3 y^2
    return _vec(3.0 * x * x * y * y, 2.0 * x ** 3 * y)


def gradient_shift_test(case, method, level=2, cache=None, delta0=None,
                        grad_phi=_default_grad_phi, volume_degree=8,
                        edge_degree=7, tol=1e-10):
    """Pressure-robustness probe: solve with f, then with f + grad(phi).

    Adding a gradient to the forcing must leave the discrete velocity of
    a pressure-robust method unchanged (the change is absorbed by the
    pressure); phi defaults to x^3 y^2.  curl f is unchanged since
    curl grad phi = 0.

    Returns
    -------
    (relative velocity delta, pressure field delta) :
        max-norm change of the velocity coefficients relative to their
        magnitude, and the L2 norm of the pressure field change.
    """
    if cache is None:
        cache = LevelCache()
    mesh, facets, vspace, pspace = cache.get(level)

    _, sol0 = solve_on_level(case, method, level, cache, delta0=delta0,
                             volume_degree=volume_degree,
                             edge_degree=edge_degree, tol=tol,
                             with_stats=False)

    base_f = case.f

    def shifted_f(x, y):
        return np.asarray(base_f(x, y)) + np.asarray(grad_phi(x, y))

    shifted = BenchmarkCase(id=case.id, sigma=case.sigma, mu=case.mu,
                            u=case.u, grad_u=case.grad_u, p=case.p,
                            beta=case.beta, grad_beta=case.grad_beta,
                            beta_inf=case.beta_inf, f=shifted_f,
                            curl_f=case.curl_f, g=case.g)
    spec = to_system_spec(shifted, method, delta0)
    system = build_system(mesh, facets, vspace, pspace, spec,
                          degree=volume_degree, edge_degree=edge_degree,
                          validate=False)
    sol1 = solve_saddle(system, tol=tol)

    du = np.max(np.abs(sol1.velocity - sol0.velocity))
    rel = du / max(np.max(np.abs(sol0.velocity)), 1e-30)
    dp = (sol1.pressure - sol0.pressure).reshape(-1, 3)
    s = dp.sum(axis=1)
    dp_norm = float(np.sqrt(np.sum((pspace.areas / 12.0)
                                   * (s * s + np.sum(dp * dp, axis=1)))))
    return float(rel), dp_norm
