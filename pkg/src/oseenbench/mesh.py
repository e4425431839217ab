"""Conforming triangulations of the unit square.

Provides the jittered criss-cross generator, red (uniform) refinement,
the barycentric (Alfeld) split required for inf-sup stability of the
divergence-free velocity/pressure pair, facet tables, and a plain-text
mesh format.

All triangles are stored counterclockwise.  ``h_K`` is the longest edge
of a triangle, ``h_F`` the facet length.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

_MASK64 = (1 << 64) - 1


class MeshFormatError(ValueError):
    """Raised for malformed mesh files; the message names the line."""


@dataclass
class Triangulation:
    """A conforming triangle mesh.

    Attributes
    ----------
    vertices : ndarray, shape (V, 2)
        Vertex coordinates.
    triangles : ndarray, shape (T, 3)
        Vertex indices per triangle, counterclockwise.
    boundary_vertex_flags : ndarray of bool, shape (V,)
        True for vertices on the domain boundary.
    h_per_triangle : ndarray, shape (T,)
        Longest edge length per triangle.
    h_max : float
        Maximal triangle diameter.
    barycentric : bool
        True once the mesh is the Alfeld split of a parent mesh; a second
        split is rejected because the element pair is only analysed on a
        single split of a shape-regular mesh.
    """

    vertices: np.ndarray
    triangles: np.ndarray
    boundary_vertex_flags: np.ndarray
    h_per_triangle: np.ndarray = field(default=None)
    h_max: float = field(default=None)
    barycentric: bool = False

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=float)
        self.triangles = np.asarray(self.triangles, dtype=np.int64)
        self.boundary_vertex_flags = np.asarray(
            self.boundary_vertex_flags, dtype=bool)
        if self.h_per_triangle is None:
            self.h_per_triangle = _triangle_diameters(
                self.vertices, self.triangles)
        if self.h_max is None:
            self.h_max = float(self.h_per_triangle.max())

    @property
    def num_vertices(self):
        return self.vertices.shape[0]

    @property
    def num_triangles(self):
        return self.triangles.shape[0]

    def signed_areas(self):
        """Signed triangle areas (positive for counterclockwise)."""
        p = self.vertices[self.triangles]
        d1 = p[:, 1] - p[:, 0]
        d2 = p[:, 2] - p[:, 0]
        return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])


@dataclass
class FacetList:
    """All facets (edges) of a triangulation.

    Attributes
    ----------
    facets : ndarray, shape (E, 2)
        Vertex pairs, lower index first; rows sorted lexicographically.
    adjacent : ndarray, shape (E, 2)
        Adjacent triangle indices, ascending; -1 in the second slot for
        boundary facets.
    interior : ndarray of bool, shape (E,)
    lengths : ndarray, shape (E,)
        Facet length h_F.
    normals : ndarray, shape (E, 2)
        Unit normal, oriented outward from the lower-indexed adjacent
        triangle.  Jump terms are quadratic in the jump so the results do
        not depend on this convention, but fixing it keeps assembly
        deterministic.
    """

    facets: np.ndarray
    adjacent: np.ndarray
    interior: np.ndarray
    lengths: np.ndarray
    normals: np.ndarray

    @property
    def num_facets(self):
        return self.facets.shape[0]

    def index_map(self):
        """Dict mapping sorted vertex pairs to facet indices."""
        return {(int(a), int(b)): i
                for i, (a, b) in enumerate(self.facets)}


def _triangle_diameters(vertices, triangles):
    p = vertices[triangles]
    e0 = np.linalg.norm(p[:, 1] - p[:, 0], axis=1)
    e1 = np.linalg.norm(p[:, 2] - p[:, 1], axis=1)
    e2 = np.linalg.norm(p[:, 0] - p[:, 2], axis=1)
    return np.maximum(e0, np.maximum(e1, e2))


def _splitmix64(k):
    """SplitMix64 finalizer; deterministic, seed-free vertex hash."""
    z = (int(k) + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _hash_unit(k):
    """Map an integer key to a float in [0, 1)."""
    return (_splitmix64(k) >> 11) / float(1 << 53)


def generate_unit_square_mesh(n, jitter=0.0):
    """Criss-cross right-triangle mesh of the unit square.

    Each of the n x n cells is split along its lower-left to upper-right
    diagonal, giving 2 n^2 triangles.  Interior vertices are displaced by
    a deterministic hash of their lattice index; the displacement
    magnitude is at most jitter/n, so jitter <= 0.3 cannot invert a
    triangle.  Boundary vertices stay put and the domain remains exactly
    the unit square.

    Parameters
    ----------
    n : int
        Subdivision count per side, n >= 1.
    jitter : float
        Relative interior-vertex displacement, in [0, 0.3].

    Returns
    -------
    Triangulation
    """
    if n < 1:
        raise ValueError(f"subdivision count must be >= 1, got {n}")
    if not 0.0 <= jitter <= 0.3:
        raise ValueError(
            f"jitter must lie in [0, 0.3], got {jitter} "
            "(larger values can invert triangles)")

    m = n + 1
    jj, ii = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    ii = ii.ravel()
    jj = jj.ravel()
    verts = np.column_stack([ii / n, jj / n]).astype(float)
    boundary = (ii == 0) | (ii == n) | (jj == 0) | (jj == n)

    if jitter > 0.0:
        # unit-square hash offsets, rescaled so the Euclidean magnitude
        # is bounded by jitter/n
        scale = jitter / (n * np.sqrt(2.0))
        interior = np.flatnonzero(~boundary)
        for v in interior:
            dx = 2.0 * _hash_unit(2 * int(v)) - 1.0
            dy = 2.0 * _hash_unit(2 * int(v) + 1) - 1.0
            verts[v, 0] += scale * dx
            verts[v, 1] += scale * dy

    tris = []
    for j in range(n):
        for i in range(n):
            v00 = j * m + i
            v10 = j * m + i + 1
            v01 = (j + 1) * m + i
            v11 = (j + 1) * m + i + 1
            tris.append((v00, v10, v11))
            tris.append((v00, v11, v01))
    return Triangulation(vertices=verts,
                         triangles=np.array(tris, dtype=np.int64),
                         boundary_vertex_flags=boundary)


def _edge_table(triangles):
    """Undirected edges of a triangle array.

    Returns (unique sorted edge pairs in lexicographic order, the edge
    index of each triangle's local edges (T, 3) in the order
    (v0,v1), (v1,v2), (v2,v0), and the directed local edges (3T, 2)).
    """
    nt = triangles.shape[0]
    directed = np.concatenate([triangles[:, [0, 1]],
                               triangles[:, [1, 2]],
                               triangles[:, [2, 0]]])
    uniq, inverse = np.unique(np.sort(directed, axis=1), axis=0,
                              return_inverse=True)
    return uniq, inverse.reshape(3, nt).T, directed


def refine_uniform(mesh):
    """Red refinement: split each triangle into four via edge midpoints.

    Children are similar to the parent with ratio 1/2, so h_K exactly
    halves (up to roundoff of the midpoint coordinates) and conformity
    is preserved.
    """
    verts = mesh.vertices
    tris = mesh.triangles
    uniq, cell_edges, _ = _edge_table(tris)
    nv = verts.shape[0]

    mid = 0.5 * (verts[uniq[:, 0]] + verts[uniq[:, 1]])
    new_verts = np.vstack([verts, mid])
    mid_boundary = (mesh.boundary_vertex_flags[uniq[:, 0]]
                    & mesh.boundary_vertex_flags[uniq[:, 1]])
    new_flags = np.concatenate([mesh.boundary_vertex_flags, mid_boundary])

    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    mab = nv + cell_edges[:, 0]
    mbc = nv + cell_edges[:, 1]
    mca = nv + cell_edges[:, 2]
    new_tris = np.empty((4 * tris.shape[0], 3), dtype=np.int64)
    new_tris[0::4] = np.column_stack([a, mab, mca])
    new_tris[1::4] = np.column_stack([mab, b, mbc])
    new_tris[2::4] = np.column_stack([mca, mbc, c])
    new_tris[3::4] = np.column_stack([mab, mbc, mca])
    return Triangulation(vertices=new_verts, triangles=new_tris,
                         boundary_vertex_flags=new_flags,
                         barycentric=mesh.barycentric)


def refine_barycentric(mesh):
    """Alfeld split: replace each triangle by three sharing its
    barycenter.

    Applying it twice is rejected: the inf-sup argument for the element
    pair holds for a single split of a shape-regular mesh.
    """
    if mesh.barycentric:
        raise ValueError("mesh is already barycentrically refined; "
                         "a second Alfeld split is not permitted")
    verts = mesh.vertices
    tris = mesh.triangles
    nv = verts.shape[0]
    nt = tris.shape[0]

    centers = verts[tris].sum(axis=1) / 3.0
    new_verts = np.vstack([verts, centers])
    new_flags = np.concatenate([mesh.boundary_vertex_flags,
                                np.zeros(nt, dtype=bool)])

    z = nv + np.arange(nt, dtype=np.int64)
    a, b, c = tris[:, 0], tris[:, 1], tris[:, 2]
    new_tris = np.empty((3 * nt, 3), dtype=np.int64)
    new_tris[0::3] = np.column_stack([a, b, z])
    new_tris[1::3] = np.column_stack([b, c, z])
    new_tris[2::3] = np.column_stack([c, a, z])
    return Triangulation(vertices=new_verts, triangles=new_tris,
                         boundary_vertex_flags=new_flags,
                         barycentric=True)


def build_facets(mesh):
    """Construct the facet table with adjacency, lengths and normals."""
    tris = mesh.triangles
    nt = tris.shape[0]
    uniq, cell_edges, directed = _edge_table(tris)
    ne = uniq.shape[0]

    edge_ids = cell_edges.T.ravel()               # matches `directed` rows
    owners = np.tile(np.arange(nt, dtype=np.int64), 3)
    order = np.lexsort((owners, edge_ids))
    sorted_ids = edge_ids[order]
    first = np.ones(len(order), dtype=bool)
    first[1:] = sorted_ids[1:] != sorted_ids[:-1]
    starts = np.flatnonzero(first)
    counts = np.diff(np.append(starts, len(order)))
    if counts.max() > 2:
        bad = int(sorted_ids[starts[np.argmax(counts)]])
        raise ValueError(
            f"facet {tuple(uniq[bad])} is shared by more than two triangles")

    adjacent = np.full((ne, 2), -1, dtype=np.int64)
    adjacent[sorted_ids[starts], 0] = owners[order[starts]]
    second = starts[counts == 2] + 1
    adjacent[sorted_ids[second], 1] = owners[order[second]]
    interior = adjacent[:, 1] >= 0

    pa = mesh.vertices[uniq[:, 0]]
    pb = mesh.vertices[uniq[:, 1]]
    lengths = np.linalg.norm(pb - pa, axis=1)

    # outward normal of the lower-indexed adjacent triangle: take the
    # facet as the directed edge (p -> q) of that triangle's CCW winding
    # and rotate it clockwise
    lower_occurrence = order[starts]              # owner == adjacent[:, 0]
    d = (mesh.vertices[directed[lower_occurrence, 1]]
         - mesh.vertices[directed[lower_occurrence, 0]])
    normals = np.empty((ne, 2))
    normals[sorted_ids[starts], 0] = d[:, 1]
    normals[sorted_ids[starts], 1] = -d[:, 0]
    normals /= np.linalg.norm(normals, axis=1, keepdims=True)

    return FacetList(facets=uniq, adjacent=adjacent, interior=interior,
                     lengths=lengths, normals=normals)


def validate_mesh(mesh):
    """Check the structural invariants; raises ValueError on violation.

    Verifies positive (CCW) areas, edge-conformity (each facet shared by
    at most two triangles, with opposite directed orientations), absence
    of dangling vertices, and Euler's formula V - E + T = 1 for simply
    connected meshes.
    """
    areas = mesh.signed_areas()
    if not np.all(areas > 0.0):
        bad = int(np.argmin(areas))
        raise ValueError(f"triangle {bad} is not counterclockwise "
                         f"(signed area {areas[bad]:g})")
    used = np.zeros(mesh.num_vertices, dtype=bool)
    used[mesh.triangles.ravel()] = True
    if not used.all():
        raise ValueError(f"dangling vertex {int(np.argmin(used))}")

    directed = {}
    for t, (a, b, c) in enumerate(mesh.triangles):
        for u, v in ((a, b), (b, c), (c, a)):
            key = (int(u), int(v))
            if key in directed:
                raise ValueError(
                    f"directed edge {key} appears twice "
                    f"(triangles {directed[key]} and {t}); mesh is "
                    "non-conforming or has inverted elements")
            directed[key] = t
    # uniqueness of directed edges already forces shared edges to appear
    # with opposite orientations

    facets = build_facets(mesh)
    v, e, t = mesh.num_vertices, facets.num_facets, mesh.num_triangles
    if v - e + t != 1:
        raise ValueError(
            f"Euler formula violated: V-E+T = {v}-{e}+{t} = {v - e + t}")
    n_int = int(facets.interior.sum())
    n_bnd = e - n_int
    if 3 * t != 2 * n_int + n_bnd:
        raise ValueError("facet/triangle handshake identity violated")
    return facets


def write_mesh(mesh):
    """Serialize to the plain-text format (full printed precision)."""
    lines = [f"vertices {mesh.num_vertices}"]
    for x, y in mesh.vertices:
        lines.append(f"{float(x)!r} {float(y)!r}")
    lines.append(f"triangles {mesh.num_triangles}")
    for a, b, c in mesh.triangles:
        lines.append(f"{a} {b} {c}")
    bnd = np.flatnonzero(mesh.boundary_vertex_flags)
    lines.append(f"boundary {len(bnd)}")
    for v in bnd:
        lines.append(str(int(v)))
    return "\n".join(lines) + "\n"


def _content_lines(text):
    """Yield (line_number, tokens) skipping blanks and # comments."""
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield ln, body.split()


def read_mesh(text):
    """Parse the plain-text mesh format.

    Clockwise triangles are repaired (two indices swapped) with a
    warning; malformed headers and out-of-range vertex indices raise
    MeshFormatError naming the offending line.
    """
    stream = _content_lines(text)

    def next_tokens(what):
        try:
            return next(stream)
        except StopIteration:
            raise MeshFormatError(f"unexpected end of file: missing {what}")

    def header(name):
        ln, toks = next_tokens(f"'{name}' header")
        if len(toks) != 2 or toks[0] != name:
            raise MeshFormatError(
                f"line {ln}: expected '{name} <count>', got {' '.join(toks)!r}")
        try:
            count = int(toks[1])
        except ValueError:
            raise MeshFormatError(f"line {ln}: bad count {toks[1]!r}")
        if count < 0:
            raise MeshFormatError(f"line {ln}: negative count")
        return count

    nv = header("vertices")
    verts = np.empty((nv, 2))
    for k in range(nv):
        ln, toks = next_tokens("vertex line")
        if len(toks) != 2:
            raise MeshFormatError(f"line {ln}: expected 'x y'")
        try:
            verts[k] = (float(toks[0]), float(toks[1]))
        except ValueError:
            raise MeshFormatError(f"line {ln}: bad coordinate")

    nt = header("triangles")
    tris = np.empty((nt, 3), dtype=np.int64)
    for k in range(nt):
        ln, toks = next_tokens("triangle line")
        if len(toks) != 3:
            raise MeshFormatError(f"line {ln}: expected 'i j k'")
        try:
            ijk = [int(s) for s in toks]
        except ValueError:
            raise MeshFormatError(f"line {ln}: bad vertex index")
        for idx in ijk:
            if not 0 <= idx < nv:
                raise MeshFormatError(
                    f"line {ln}: vertex index {idx} out of range 0..{nv - 1}")
        a, b, c = ijk
        d1 = verts[b] - verts[a]
        d2 = verts[c] - verts[a]
        area2 = d1[0] * d2[1] - d1[1] * d2[0]
        if area2 == 0.0:
            raise MeshFormatError(f"line {ln}: degenerate triangle {ijk}")
        if area2 < 0.0:
            warnings.warn(f"line {ln}: clockwise triangle {ijk} repaired")
            b, c = c, b
        tris[k] = (a, b, c)

    nb = header("boundary")
    flags = np.zeros(nv, dtype=bool)
    got = 0
    while got < nb:
        ln, toks = next_tokens("boundary vertex index")
        for s in toks:
            try:
                idx = int(s)
            except ValueError:
                raise MeshFormatError(f"line {ln}: bad boundary index {s!r}")
            if not 0 <= idx < nv:
                raise MeshFormatError(
                    f"line {ln}: boundary index {idx} out of range")
            flags[idx] = True
            got += 1
            if got > nb:
                raise MeshFormatError(
                    f"line {ln}: more boundary indices than declared")

    return Triangulation(vertices=verts, triangles=tris,
                         boundary_vertex_flags=flags)
