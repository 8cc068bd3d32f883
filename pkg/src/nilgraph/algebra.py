"""The metric 2-step nilpotent algebra of a labeled digraph.

The underlying vector space is spanned by the graph's vertices (the block
``V``) together with its edge labels (the block ``W``); that union is
declared orthonormal.  Every bracket of two vertex generators is the signed
sum, over labels, of (edges one way) minus (edges the other way), and
brackets involving the label block vanish, which makes the algebra 2-step
nilpotent by construction.

Structure constants live in {-1, 0, 1} and all derived quantities (derived
algebra, center, abelian factor, skew operator matrices) are computed over
exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BasisMismatchError
from .polynomials import Poly
from .rational import (
    Subspace,
    char_poly,
    det,
    frac_rows,
    gram_schmidt,
    mat_vec,
    nullspace,
)


class NilAlgebra:
    """Structure tensor plus basis bookkeeping for one graph."""

    def __init__(self, graph):
        self.graph = graph
        self.vertices = graph.vertices
        self.labels = graph.labels
        self.nv = len(self.vertices)
        self.nl = len(self.labels)
        table = {}
        for e in graph.edges:
            i = graph.vertex_index[e.tail]
            j = graph.vertex_index[e.head]
            if i == j:
                continue  # a loop brackets a vertex with itself
            l = graph.label_index[e.label]
            _bump(table, i, j, l, 1)
            _bump(table, j, i, l, -1)
        self._table = table
        self._cache = {}

    def structure(self, i, j):
        """Label-coefficient dict of the bracket of basis vertices i, j."""
        return self._table.get((i, j), {})

    def __repr__(self):
        return f"NilAlgebra(|V|={self.nv}, |C|={self.nl})"


def _bump(table, i, j, l, delta):
    row = table.setdefault((i, j), {})
    new = row.get(l, 0) + delta
    if new:
        row[l] = new
    else:
        row.pop(l, None)
        if not row:
            table.pop((i, j))


def build_algebra(graph):
    return NilAlgebra(graph)


def _cached(alg, key, builder):
    """Memoize derived data on the (immutable) algebra.

    Cached objects are shared; callers must treat them as read-only.
    """
    try:
        return alg._cache[key]
    except KeyError:
        value = builder()
        alg._cache[key] = value
        return value


# -- vectors over the named basis ----------------------------------------


def split_named(alg, vec):
    """Split a {basis name: coefficient} dict into (V coords, W coords)."""
    v = [Fraction(0)] * alg.nv
    w = [Fraction(0)] * alg.nl
    for name, c in vec.items():
        if name in alg.graph.vertex_index:
            v[alg.graph.vertex_index[name]] += Fraction(c)
        elif name in alg.graph.label_index:
            w[alg.graph.label_index[name]] += Fraction(c)
        else:
            raise BasisMismatchError(f"{name!r} is not a basis element")
    return v, w


def named_vector(names, coords):
    """Inverse of a coordinate split: drop zeros, attach names."""
    return {n: c for n, c in zip(names, coords) if c != 0}


def bracket(alg, x, y):
    """Bracket of two named vectors; the result lives in the label span.

    Bilinear and skew-symmetric; any label components of the inputs are
    ignored since they bracket to zero with everything.
    """
    xv, _ = split_named(alg, x)
    yv, _ = split_named(alg, y)
    out = [Fraction(0)] * alg.nl
    for (i, j), row in alg._table.items():
        ci = xv[i]
        if ci == 0:
            continue
        cj = yv[j]
        if cj == 0:
            continue
        f = ci * cj
        for l, s in row.items():
            out[l] += f * s
    return named_vector(alg.labels, out)


# -- skew operators -------------------------------------------------------


@dataclass(frozen=True)
class JOperator:
    """Matrix on the vertex block of the label pairing <Z, [., .]>.

    Column i holds the image of basis vertex i; entry (k, i) is the
    coefficient pairing of Z against the bracket of vertices i and k.
    """

    coeffs: tuple
    matrix: tuple

    def rows(self):
        return [list(r) for r in self.matrix]


def label_coeffs(alg, z):
    """Normalize a label combination (dict or sequence) to a coeff list."""
    if isinstance(z, dict):
        _, w = split_named(alg, z)
        return w
    z = list(z)
    if len(z) != alg.nl:
        raise BasisMismatchError(
            f"expected {alg.nl} label coefficients, got {len(z)}")
    return [Fraction(c) for c in z]


def j_matrix(alg, z):
    a = label_coeffs(alg, z)
    n = alg.nv
    mat = [[Fraction(0)] * n for _ in range(n)]
    for (i, k), row in alg._table.items():
        val = Fraction(0)
        for l, s in row.items():
            c = a[l]
            if c:
                val += c if s == 1 else -c if s == -1 else c * s
        if val:
            mat[k][i] = val
    return JOperator(coeffs=tuple(a),
                     matrix=tuple(tuple(r) for r in mat))


def j_basis_matrices(alg):
    """One plain matrix per label, in label order.  Cached; read-only."""
    def build():
        out = []
        for l in range(alg.nl):
            unit = [Fraction(0)] * alg.nl
            unit[l] = Fraction(1)
            out.append(j_matrix(alg, unit).rows())
        return out
    return _cached(alg, "j_basis", build)


def j_symbolic(alg):
    """Matrix of linear forms: entry (k, i) as a Poly in the label weights."""
    n = alg.nv
    zero = Poly.zero(alg.nl)
    mat = [[zero] * n for _ in range(n)]
    for (i, k), row in alg._table.items():
        mat[k][i] = Poly(alg.nl, {_unit_exp(alg.nl, l): s
                                  for l, s in row.items()})
    return mat


def _unit_exp(n, l):
    e = [0] * n
    e[l] = 1
    return tuple(e)


# -- subspaces ------------------------------------------------------------


def derived_algebra(alg):
    """Span of all brackets of basis vertices, inside the label block.

    For a simple graph this is the whole label span; opposite parallel
    edges in non-simple graphs can make it a proper subspace, which the
    report surfaces as a warning.
    """
    def build():
        rows = []
        for (i, j), row in alg._table.items():
            if i < j:
                rows.append([Fraction(row.get(l, 0)) for l in range(alg.nl)])
        return Subspace(alg.nl, rows, ambient="W")
    return _cached(alg, "derived", build)


def abelian_factor(alg):
    """Common kernel of the per-label skew operators, inside ``V``.

    Stacks the label matrices and takes the exact nullspace; the result is
    the canonical complement of the derived algebra in the center.
    """
    def build():
        stacked = []
        seen = set()
        for mat in j_basis_matrices(alg):
            for row in mat:
                key = tuple(row)
                if any(row) and key not in seen:
                    seen.add(key)
                    stacked.append(row)
        return Subspace(alg.nv, nullspace(stacked, alg.nv), ambient="V")
    return _cached(alg, "abelian", build)


def oracle_abelian_factor(alg):
    """Independent route to the abelian factor.

    Solves [X, v_j] = 0 for every basis vertex directly from the structure
    tensor, one linear equation per (vertex, label) pair, never forming the
    skew operator matrices.
    """
    def build():
        rows = []
        for j in range(alg.nv):
            for l in range(alg.nl):
                row = [Fraction(0)] * alg.nv
                nonzero = False
                for i in range(alg.nv):
                    s = alg.structure(i, j).get(l, 0)
                    if s:
                        row[i] = Fraction(s)
                        nonzero = True
                if nonzero:
                    rows.append(row)
        return Subspace(alg.nv, nullspace(rows, alg.nv), ambient="V")
    return _cached(alg, "oracle_abelian", build)


def center(alg):
    """The center as a subspace of the full basis: the label block plus the
    abelian factor embedded in the vertex block."""
    total = alg.nv + alg.nl
    rows = []
    for vec in abelian_factor(alg).basis():
        rows.append(list(vec) + [Fraction(0)] * alg.nl)
    for l in range(alg.nl):
        row = [Fraction(0)] * total
        row[alg.nv + l] = Fraction(1)
        rows.append(row)
    return Subspace(total, rows, ambient="full")


def center_direct(alg):
    """Center recomputed from scratch as {x : [x, v_j] = 0 for all j}."""
    total = alg.nv + alg.nl
    rows = []
    for j in range(alg.nv):
        for l in range(alg.nl):
            row = [Fraction(0)] * total
            nonzero = False
            for i in range(alg.nv):
                s = alg.structure(i, j).get(l, 0)
                if s:
                    row[i] = Fraction(s)
                    nonzero = True
            if nonzero:
                rows.append(row)
    return Subspace(total, nullspace(rows, total), ambient="full")


def center_perp(alg):
    """Orthogonal basis of the complement of the abelian factor in ``V``.

    Returns (vector, squared norm) pairs: vectors are primitive integer,
    pairwise orthogonal and orthogonal to the abelian factor.  Norms stay
    as exact squares because normalizing could leave the rationals.
    """
    def build():
        ab = abelian_factor(alg)
        if ab.dim == 0:
            ident = []
            for i in range(alg.nv):
                row = [Fraction(0)] * alg.nv
                row[i] = Fraction(1)
                ident.append(row)
            return [(row, Fraction(1)) for row in ident]
        complement = nullspace(ab.basis(), alg.nv)
        ortho, norms = gram_schmidt(complement)
        return list(zip(ortho, norms))
    return _cached(alg, "center_perp", build)


@dataclass(frozen=True)
class RestrictedJ:
    """Skew operator restricted to the complement of the center in ``V``.

    Held as the pair (gram, norms): ``gram[r][c]`` pairs basis vector r
    against the image of basis vector c, and ``norms`` carries the squared
    lengths.  All similarity-invariant data (characteristic polynomial,
    determinant up to a positive factor) is rational in this form even
    though the orthonormal basis itself may have irrational entries.
    """

    gram: tuple
    norms: tuple

    @property
    def dim(self):
        return len(self.norms)

    def propagator(self):
        """The rational matrix similar to the orthonormal-basis matrix."""
        return [[g / n for g in row]
                for row, n in zip(frac_rows(self.gram), self.norms)]

    def char_poly(self):
        """Monic characteristic polynomial, leading coefficient first."""
        if self.dim == 0:
            return [Fraction(1)]
        return char_poly(self.propagator())

    def determinant(self):
        if self.dim == 0:
            return Fraction(1)
        return det(self.propagator())


def restricted_j(alg, z, basis=None):
    if basis is None:
        basis = center_perp(alg)
    vecs = [v for v, _ in basis]
    norms = [n for _, n in basis]
    jz = j_matrix(alg, z).rows()
    images = [mat_vec(jz, u) for u in vecs]
    gram = [[sum((ur[k] * images[c][k] for k in range(alg.nv)), Fraction(0))
             for c in range(len(vecs))] for ur in vecs]
    return RestrictedJ(gram=tuple(tuple(r) for r in gram),
                       norms=tuple(norms))


def restricted_symbolic(alg, basis=None):
    """Restricted operator with symbolic label weights.

    Returns (matrix of Poly linear forms, norms).
    """
    if basis is None:
        basis = center_perp(alg)
    vecs = [v for v, _ in basis]
    norms = [n for _, n in basis]
    d = len(vecs)
    grams = []
    for jz in j_basis_matrices(alg):
        images = [mat_vec(jz, u) for u in vecs]
        grams.append([[sum((ur[k] * images[c][k] for k in range(alg.nv)),
                           Fraction(0))
                       for c in range(d)] for ur in vecs])
    mat = []
    for r in range(d):
        row = []
        for c in range(d):
            terms = {}
            for l in range(alg.nl):
                v = grams[l][r][c]
                if v != 0:
                    terms[_unit_exp(alg.nl, l)] = v
            row.append(Poly(alg.nl, terms))
        mat.append(row)
    return mat, norms


# -- reporting ------------------------------------------------------------


def format_fraction(x):
    return str(Fraction(x))


def named_pairs(names, coords):
    return [[format_fraction(c), n] for n, c in zip(names, coords) if c != 0]


def report(alg):
    """JSON-ready summary of the algebra's invariants."""
    derived = derived_algebra(alg)
    ab = abelian_factor(alg)
    perp = center_perp(alg)
    warnings = []
    if derived.dim < alg.nl:
        warnings.append(
            "derived algebra is a proper subspace of the label span; "
            "the center exceeds derived + abelian factor")
    return {
        "dims": {
            "V": alg.nv,
            "C": alg.nl,
            "derived": derived.dim,
            "center": alg.nl + ab.dim,
            "abelian_factor": ab.dim,
        },
        "abelian_factor_basis": [named_pairs(alg.vertices, row)
                                 for row in ab.basis()],
        "center_perp": [
            {"vector": named_pairs(alg.vertices, vec),
             "norm_sq": format_fraction(n)}
            for vec, n in perp
        ],
        "warnings": warnings,
    }
