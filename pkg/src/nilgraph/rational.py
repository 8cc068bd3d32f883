"""Exact linear algebra over arbitrary-precision rationals.

Matrices are lists of rows, rows are lists of Fraction (plain ints are
accepted and coerced).  No floating point enters any computation here, so
rank, kernels and characteristic polynomials are exact and subspace
comparisons are decidable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def frac_rows(rows):
    """Copy `rows` coercing every entry to Fraction."""
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_cols) with zero rows dropped.  The RREF is
    canonical, so two row sets span the same subspace iff their RREFs are
    equal row for row.
    """
    mat = frac_rows(rows)
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv_row = mat[r]
        piv = piv_row[c]
        if piv != 1:
            inv = 1 / piv
            for idx in range(ncols):
                if piv_row[idx]:
                    piv_row[idx] *= inv
        for i in range(len(mat)):
            row = mat[i]
            if i != r and row[c] != 0:
                f = row[c]
                for idx in range(ncols):
                    b = piv_row[idx]
                    if b:
                        row[idx] -= f * b
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows, ncols):
    """Basis of {x : rows @ x = 0}, one vector per free column.

    Vectors are returned in free-column order and scaled to primitive
    integer coordinates with a positive leading entry.
    """
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][free]
        basis.append(primitive(vec))
    return basis


def primitive(vec):
    """Scale to integer entries with gcd 1 and positive leading coefficient."""
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]


class Subspace:
    """A subspace of Q^n held as canonical RREF rows.

    `ambient` is a free-form tag ("V", "W" or "full") recording which block
    of the algebra's basis the coordinates refer to.
    """

    def __init__(self, ambient_dim, rows=(), ambient="V"):
        self.ambient_dim = ambient_dim
        self.ambient = ambient
        reduced, pivots = rref(rows, ambient_dim)
        self.rows = tuple(tuple(r) for r in reduced)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec):
        """Exact membership test by elimination against the RREF rows."""
        res = [Fraction(x) for x in vec]
        for row, pc in zip(self.rows, self.pivots):
            if res[pc] != 0:
                f = res[pc]
                res = [a - f * b for a, b in zip(res, row)]
        return all(x == 0 for x in res)

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.rows)

    def basis(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.ambient == other.ambient
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient!r})"


def mat_vec(mat, vec):
    return [sum((row[j] * vec[j] for j in range(len(vec))), Fraction(0))
            for row in mat]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for t in range(k):
            x = a[i][t]
            if x == 0:
                continue
            brow = b[t]
            orow = out[i]
            for j in range(m):
                orow[j] += x * brow[j]
    return out


def transpose(mat):
    return [list(col) for col in zip(*mat)] if mat else []


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def det(rows):
    """Determinant by rational Gaussian elimination."""
    mat = frac_rows(rows)
    n = len(mat)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            mat[c], mat[pr] = mat[pr], mat[c]
            sign = -sign
        piv = mat[c][c]
        result *= piv
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] / piv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return result * sign


def char_poly(mat):
    """Monic characteristic polynomial det(x*I - mat) by the
    Faddeev-LeVerrier recurrence.

    Returns coefficients [c_n, ..., c_1, c_0] from the leading power down,
    with c_n = 1.
    """
    n = len(mat)
    mat = frac_rows(mat)
    coeffs = [Fraction(1)]
    m = identity(n)
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                m[i][i] += coeffs[-1]
            m = mat_mul(mat, m)
        else:
            m = [row[:] for row in mat]
        tr = sum((m[i][i] for i in range(n)), Fraction(0))
        coeffs.append(-tr / k)
    return coeffs


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def gram_schmidt(rows):
    """Orthogonalize without normalizing; irrational norms never appear.

    Returns (vectors, squared_norms); each vector is primitive-integer with
    positive leading coefficient, pairwise orthogonal, spanning the input.
    Input rows must be linearly independent.
    """
    ortho = []
    norms = []
    for row in frac_rows(rows):
        vec = row[:]
        for u, n2 in zip(ortho, norms):
            f = dot(vec, u) / n2
            if f != 0:
                vec = [a - f * b for a, b in zip(vec, u)]
        vec = primitive(vec)
        n2 = dot(vec, vec)
        if n2 == 0:
            raise ValueError("gram_schmidt: dependent input rows")
        ortho.append(vec)
        norms.append(n2)
    return ortho, norms
