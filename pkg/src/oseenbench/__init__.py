"""Scott-Vogelius Oseen solver with vorticity-based convection
stabilization, plus the benchmark harness around it."""

from .assembly import (DEFAULT_DELTA0, SparseSystem, SpecError, SystemSpec,
                       apply_dirichlet, assemble_a, assemble_b,
                       assemble_lsvs, assemble_rhs, assemble_supg,
                       assemble_system, build_system, curl_l_basis,
                       system_residual, tau)
from .benchmarks import (BenchmarkCase, LevelCache, LevelStats, RunReport,
                         build_level, divergence_norm, eoc, error_norms,
                         gradient_shift_test, make_example, run_convergence,
                         s_seminorm, solve_on_level, supercloseness_probe,
                         to_system_spec, velocity_gradient_norm)
from .fe_space import (FeFunction, PressureSpace, VelocitySpace,
                       boundary_dofs, eval_basis_p2, eval_fe_function,
                       interpolate_velocity, map_reference, pressure_space,
                       project_pressure, push_derivatives, velocity_space)
from .linsolve import (CsrMatrix, SaddleSolution, SolverError,
                       build_mean_constraint, shift_pressure_mean,
                       solve_direct, solve_saddle, triplets_to_csr)
from .mesh import (FacetList, MeshFormatError, Triangulation, build_facets,
                   generate_unit_square_mesh, read_mesh, refine_barycentric,
                   refine_uniform, validate_mesh, write_mesh)
from .quadrature import QuadRule, edge_rule, triangle_rule

__version__ = "0.1.0"
