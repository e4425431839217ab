"""Fixed-degree quadrature rules on the reference triangle and edge.

The reference triangle is {(x, y): x, y >= 0, x + y <= 1}; triangle rule
points are stored as barycentric triples (l0, l1, l2) with
l0 = 1 - x - y, l1 = x, l2 = y, and the weights sum to the reference
area 1/2.  Edge rules live on the parameter interval [0, 1] with weights
summing to 1.

Rules are tabulated constants (see ``_quad_tables``), not computed at
runtime, so integrals are bit-reproducible across platforms.
"""

from dataclasses import dataclass

import numpy as np

from ._quad_tables import EDGE_TABLES, TRI_TABLES

#: Tabulated triangle-rule degrees, ascending.
TRI_DEGREES = tuple(sorted(TRI_TABLES))

#: Largest supported degrees.
MAX_TRIANGLE_DEGREE = TRI_DEGREES[-1]
MAX_EDGE_DEGREE = 2 * max(EDGE_TABLES) - 1


@dataclass(frozen=True)
class QuadRule:
    """A quadrature rule: points, weights and the degree it integrates.

    For triangle rules ``points`` has shape (n, 3) (barycentric
    coordinates); for edge rules shape (n,) (parameters in [0, 1]).
    """

    points: np.ndarray
    weights: np.ndarray
    degree: int

    @property
    def xy(self):
        """Reference-coordinate view (n, 2) of a triangle rule."""
        return self.points[:, 1:]


def triangle_rule(degree):
    """Return the smallest tabulated symmetric triangle rule of at least
    the requested polynomial degree.

    Parameters
    ----------
    degree : int
        Requested exactness degree, 1 <= degree <= 12.

    Returns
    -------
    QuadRule
    """
    if not 1 <= degree <= MAX_TRIANGLE_DEGREE:
        raise ValueError(
            f"triangle rules support degrees 1..{MAX_TRIANGLE_DEGREE}, "
            f"got {degree}")
    for avail in TRI_DEGREES:
        if avail >= degree:
            pts, wts = TRI_TABLES[avail]
            return QuadRule(points=np.array(pts, dtype=float),
                            weights=np.array(wts, dtype=float),
                            degree=avail)
    raise AssertionError("unreachable")


def edge_rule(degree):
    """Return the Gauss-Legendre rule on [0, 1] with ceil((degree+1)/2)
    points, exact for polynomials of the requested degree.

    Parameters
    ----------
    degree : int
        Requested exactness degree, 1 <= degree <= 11.

    Returns
    -------
    QuadRule
    """
    if not 1 <= degree <= MAX_EDGE_DEGREE:
        raise ValueError(
            f"edge rules support degrees 1..{MAX_EDGE_DEGREE}, got {degree}")
    npts = (degree + 2) // 2
    pts, wts = EDGE_TABLES[npts]
    return QuadRule(points=np.array(pts, dtype=float),
                    weights=np.array(wts, dtype=float),
                    degree=2 * npts - 1)


def integrate_reference(rule, f):
    """Apply a triangle rule to ``f(x, y)`` on the reference triangle."""
    x, y = rule.points[:, 1], rule.points[:, 2]
    return float(np.dot(rule.weights, f(x, y)))


def integrate_edge(rule, f):
    """Apply an edge rule to ``f(t)`` on [0, 1]."""
    return float(np.dot(rule.weights, f(rule.points)))
