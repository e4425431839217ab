"""Sparse storage and the saddle-point solve.

The saddle matrix carries an explicit scalar Lagrange multiplier for the
pressure mean (one extra row/column holding the integrals of the
pressure basis functions) instead of pinning a dof; this keeps the
conditioning uniform across meshes and the multiplier vanishes for
compatible data.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla


class SolverError(RuntimeError):
    """Factorization or residual failure."""


@dataclass
class CsrMatrix:
    """Compressed sparse row matrix (square).

    Column indices are strictly increasing within each row and the row
    offsets are nondecreasing; ``validate`` enforces both.
    """

    indptr: np.ndarray
    indices: np.ndarray
    data: np.ndarray
    dim: int

    def validate(self):
        if self.indptr.shape != (self.dim + 1,):
            raise ValueError("row offset array has wrong length")
        if self.indptr[0] != 0 or self.indptr[-1] != len(self.indices):
            raise ValueError("row offsets inconsistent with index count")
        if np.any(np.diff(self.indptr) < 0):
            raise ValueError("row offsets must be nondecreasing")
        if len(self.indices) != len(self.data):
            raise ValueError("index/data length mismatch")
        for r in range(self.dim):
            cols = self.indices[self.indptr[r]:self.indptr[r + 1]]
            if cols.size and (np.any(np.diff(cols) <= 0)
                              or cols[0] < 0 or cols[-1] >= self.dim):
                raise ValueError(f"row {r}: bad column indices")
        return self

    def to_scipy(self):
        return sp.csr_matrix((self.data, self.indices, self.indptr),
                             shape=(self.dim, self.dim))

    def matvec(self, x):
        return self.to_scipy() @ x

    @property
    def nnz(self):
        return len(self.data)


def triplets_to_csr(triplets, dim):
    """Convert (row, col, value) triplets to CSR, summing duplicates.

    Accepts a sequence of triples or a tuple of three arrays.  The
    result is independent of the input ordering: entries are grouped by
    (row, col) with a stable sort and duplicate values are accumulated
    left to right within each group.
    """
    if isinstance(triplets, tuple) and len(triplets) == 3:
        rows, cols, vals = (np.asarray(a) for a in triplets)
    else:
        arr = np.asarray(list(triplets), dtype=float)
        if arr.size == 0:
            arr = arr.reshape(0, 3)
        rows = arr[:, 0].astype(np.int64)
        cols = arr[:, 1].astype(np.int64)
        vals = arr[:, 2]
    rows = rows.astype(np.int64, copy=False)
    cols = cols.astype(np.int64, copy=False)
    vals = np.asarray(vals, dtype=float)

    if rows.size and (rows.min() < 0 or rows.max() >= dim
                      or cols.min() < 0 or cols.max() >= dim):
        raise ValueError("triplet index out of range")

    order = np.lexsort((cols, rows))
    rows, cols, vals = rows[order], cols[order], vals[order]
    if rows.size:
        new = np.empty(rows.size, dtype=bool)
        new[0] = True
        new[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
        starts = np.flatnonzero(new)
        data = np.add.reduceat(vals, starts)
        urows = rows[starts]
        ucols = cols[starts]
    else:
        data = vals
        urows = rows
        ucols = cols

    indptr = np.zeros(dim + 1, dtype=np.int64)
    np.add.at(indptr, urows + 1, 1)
    np.cumsum(indptr, out=indptr)
    return CsrMatrix(indptr=indptr, indices=ucols, data=data,
                     dim=dim).validate()


def solve_direct(matrix, b, tol=1e-10):
    """Sparse LU solve with a residual guarantee.

    Uses SuperLU (partial pivoting, COLAMD ordering).  One iterative
    refinement step is always applied for forward-error headroom; if
    the relative residual still exceeds ``tol`` a second refinement is
    attempted before giving up.
    """
    A = matrix.to_scipy().tocsc()
    b = np.asarray(b, dtype=float)

    empty_rows = np.flatnonzero(np.diff(matrix.indptr) == 0)
    if empty_rows.size:
        raise SolverError(
            f"singular system: dof {int(empty_rows[0])} has an empty row")
    try:
        lu = spla.splu(A)
    except RuntimeError as exc:
        raise SolverError(f"singular pivot during factorization: {exc}")

    x = lu.solve(b)
    bscale = max(float(np.linalg.norm(b)), 1e-30)
    for attempt in range(2):
        r = b - A @ x
        if np.linalg.norm(r) / bscale <= tol and attempt > 0:
            break
        x = x + lu.solve(r)
    rel = float(np.linalg.norm(b - A @ x) / bscale)
    if not np.isfinite(rel) or rel > tol:
        raise SolverError(
            f"residual {rel:.3e} exceeds tolerance {tol:.1e} "
            "after iterative refinement")
    return x, rel


def build_mean_constraint(pspace, mesh):
    """Integrals of the pressure basis functions: area/3 per local dof."""
    if mesh is not pspace.mesh:
        raise ValueError("pressure space was built for a different mesh")
    return pspace.mean_vector.copy()


def shift_pressure_mean(p, m):
    """Shift a pressure coefficient vector to zero mean.

    m is the mean-constraint vector; sum(m) equals |Omega|.  Idempotent.
    """
    measure = float(np.sum(m))
    return p - (float(m @ p) / measure)


@dataclass
class SaddleSolution:
    """Solution of a constrained saddle system.

    ``pressure`` follows the PDE sign convention (momentum residual
    f - L u - grad p) and has zero mean; ``multiplier`` is the
    mean-constraint multiplier, zero for compatible data up to roundoff.
    """

    velocity: np.ndarray
    pressure: np.ndarray
    multiplier: float
    residual: float


def solve_saddle(system, tol=1e-10):
    """Solve a constrained SparseSystem (see assembly.build_system).

    The stored saddle block layout [[A+S, B^T], [B, 0]] pairs the
    pressure unknown with +(q, div v), which is the negative of the PDE
    pressure; the returned field is negated back and mean-shifted.
    """
    x, rel = solve_direct(system.matrix, system.rhs, tol=tol)
    nu = system.n_velocity
    npr = system.n_pressure
    u = x[:nu]
    p = -x[nu:nu + npr]
    lam = float(x[nu + npr])
    p = shift_pressure_mean(p, system.mean_vector)
    return SaddleSolution(velocity=u, pressure=p, multiplier=lam,
                          residual=rel)
