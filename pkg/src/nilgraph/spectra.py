"""Spectra and singularity classification of the restricted skew operator.

Singularity is judged on the operator restricted to the orthogonal
complement of the center inside the vertex span.  A symbolic determinant
over the label weights decides "singular for every combination" exactly;
rational witnesses certify "almost nonsingular"; plain nonsingularity is
never certified, only sampled, because deciding that a multivariate
polynomial has no nonzero real root is out of scope.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .algebra import (
    build_algebra,
    center_perp,
    j_matrix,
    restricted_j,
    restricted_symbolic,
)
from .errors import (
    DegreeMismatchError,
    DimensionTooLargeError,
    GraphValidationError,
    NotUniformError,
)
from .graphs import Edge, LabeledDigraph, uniform_coloring_check
from .polynomials import Poly, poly_det

SINGULAR_CERTIFIED = "SingularCertified"
ALMOST_NONSINGULAR_CERTIFIED = "AlmostNonsingularCertified"
NONSINGULAR_SAMPLED = "NonsingularSampled"
SINGULARITY_SAMPLED_INCONCLUSIVE = "SingularitySampledInconclusive"

DEFAULT_SAMPLES = 200
DEFAULT_SEED = 0
DEFAULT_EXPANSION_BOUND = 10


def char_poly_at(alg, z, basis=None):
    """Monic characteristic polynomial of the restricted operator at one
    rational label combination; coefficients from the leading power down."""
    return restricted_j(alg, z, basis=basis).char_poly()


def char_poly_symbolic(alg, basis=None):
    """Characteristic polynomial with the label weights left symbolic.

    Variable 0 is the eigenvalue, variables 1..p the label weights; the
    polynomial is det(x0*I - B) for the similarity-invariant rational form
    of the restricted operator, hence monic in x0.
    """
    mat, norms = restricted_symbolic(alg, basis=basis)
    d = len(norms)
    p = alg.nl
    nvars = p + 1
    lam = Poly.variable(0, nvars)
    shifted = []
    for r in range(d):
        row = []
        for c in range(d):
            entry = -_lift(mat[r][c], nvars).scale(Fraction(1, 1) / norms[r])
            if r == c:
                entry = entry + lam
            row.append(entry)
        shifted.append(row)
    if d == 0:
        return Poly.constant(1, nvars)
    return poly_det(shifted)


def _lift(poly, nvars):
    """Reindex a p-variable Poly to nvars = p+1 with variable 0 fresh."""
    return Poly(nvars, {(0,) + exp: c for exp, c in poly.terms.items()})


def symbolic_det(alg, expansion_bound=DEFAULT_EXPANSION_BOUND, basis=None):
    """Determinant of the restricted operator as a polynomial in the label
    weights.

    Evaluating it at any rational point gives exactly the determinant of
    the restricted operator there.  Odd restricted dimension short-circuits
    to the zero polynomial (skew symmetry); a single label reduces to one
    numeric determinant.  Anything else above the expansion bound raises
    DimensionTooLargeError.
    """
    if basis is None:
        basis = center_perp(alg)
    d = len(basis)
    p = alg.nl
    if d == 0:
        return Poly.constant(1, p)
    if d % 2 == 1:
        return Poly.zero(p)
    if p == 1:
        scale = restricted_j(alg, [Fraction(1)], basis=basis).determinant()
        return Poly(p, {(d,): scale})
    if d > expansion_bound:
        raise DimensionTooLargeError(
            f"restricted dimension {d} exceeds expansion bound "
            f"{expansion_bound}")
    mat, norms = restricted_symbolic(alg, basis=basis)
    poly = poly_det(mat)
    denom = Fraction(1)
    for n in norms:
        denom *= n
    return poly.scale(1 / denom)


@dataclass(frozen=True)
class SingularityVerdict:
    status: str
    witnesses: tuple  # (coefficient tuple, determinant) pairs
    samples: int
    seed: int

    def to_json(self):
        return {
            "status": self.status,
            "witnesses": [
                {"coeffs": [str(c) for c in coeffs], "det": str(d)}
                for coeffs, d in self.witnesses
            ],
            "samples": self.samples,
            "seed": self.seed,
        }


def witness_candidates(p, seed, count):
    """Deterministic search points: coordinate directions, pairwise sums,
    pairwise differences, then seeded small random rationals."""
    if p == 0:
        return []
    points = []
    for i in range(p):
        e = [Fraction(0)] * p
        e[i] = Fraction(1)
        points.append(tuple(e))
    for i, j in combinations(range(p), 2):
        e = [Fraction(0)] * p
        e[i] = e[j] = Fraction(1)
        points.append(tuple(e))
    for i, j in combinations(range(p), 2):
        e = [Fraction(0)] * p
        e[i], e[j] = Fraction(1), Fraction(-1)
        points.append(tuple(e))
    rng = random.Random(seed)
    drawn = 0
    while drawn < count:
        vec = tuple(Fraction(rng.randint(-10, 10), rng.randint(1, 10))
                    for _ in range(p))
        if any(vec):
            points.append(vec)
            drawn += 1
    return points


def _grid_nonzero_point(poly):
    """A rational point where a nonzero polynomial provably does not
    vanish: scan the integer grid up to the degree in each variable."""
    deg = poly.degree()
    for point in product(range(deg + 1), repeat=poly.nvars):
        if any(point) and poly.evaluate(point) != 0:
            return tuple(Fraction(x) for x in point)
    raise AssertionError("nonzero polynomial vanished on the whole grid")


def classify(alg, sample_count=DEFAULT_SAMPLES, seed=DEFAULT_SEED,
             expansion_bound=DEFAULT_EXPANSION_BOUND):
    """Singularity verdict for the algebra.

    Certified singular when the symbolic determinant vanishes identically;
    certified almost nonsingular from a (zero det, nonzero det) witness
    pair or from a nontrivial abelian factor plus a nonzero det; otherwise
    sampled-only verdicts.
    """
    basis = center_perp(alg)
    ab_dim = alg.nv - len(basis)
    candidates = witness_candidates(alg.nl, seed, sample_count)

    if len(basis) == 0:
        # everything is central: the restricted operator acts on the zero
        # space, so no label combination is singular there
        witnesses = ((_unit(alg.nl), Fraction(1)),) if alg.nl else ()
        status = (ALMOST_NONSINGULAR_CERTIFIED if ab_dim > 0
                  else NONSINGULAR_SAMPLED)
        return SingularityVerdict(status=status, witnesses=witnesses,
                                  samples=0, seed=seed)

    try:
        poly = symbolic_det(alg, expansion_bound=expansion_bound,
                            basis=basis)
    except DimensionTooLargeError:
        return _classify_sampled(alg, basis, ab_dim, candidates, seed)

    if poly.is_zero:
        return SingularityVerdict(
            status=SINGULAR_CERTIFIED,
            witnesses=((_unit(alg.nl), Fraction(0)),),
            samples=0, seed=seed)

    zero_w = None
    nonzero_w = None
    tested = 0
    for point in candidates:
        val = poly.evaluate(point)
        tested += 1
        if val == 0 and zero_w is None:
            zero_w = (point, Fraction(0))
        elif val != 0 and nonzero_w is None:
            nonzero_w = (point, val)
        if zero_w and nonzero_w:
            break
    if nonzero_w is None:
        point = _grid_nonzero_point(poly)
        nonzero_w = (point, poly.evaluate(point))

    if zero_w is not None:
        return SingularityVerdict(
            status=ALMOST_NONSINGULAR_CERTIFIED,
            witnesses=(zero_w, nonzero_w),
            samples=tested, seed=seed)
    if ab_dim > 0:
        return SingularityVerdict(
            status=ALMOST_NONSINGULAR_CERTIFIED,
            witnesses=(nonzero_w,),
            samples=tested, seed=seed)
    return SingularityVerdict(
        status=NONSINGULAR_SAMPLED,
        witnesses=(nonzero_w,),
        samples=tested, seed=seed)


def _classify_sampled(alg, basis, ab_dim, candidates, seed):
    """Fallback when the symbolic determinant is out of reach: evaluate the
    determinant point by point."""
    zero_w = None
    nonzero_w = None
    tested = 0
    for point in candidates:
        val = restricted_j(alg, list(point), basis=basis).determinant()
        tested += 1
        if val == 0 and zero_w is None:
            zero_w = (point, Fraction(0))
        elif val != 0 and nonzero_w is None:
            nonzero_w = (point, val)
        if zero_w and nonzero_w:
            break
    if zero_w and nonzero_w:
        return SingularityVerdict(ALMOST_NONSINGULAR_CERTIFIED,
                                  (zero_w, nonzero_w), tested, seed)
    if zero_w:
        return SingularityVerdict(SINGULARITY_SAMPLED_INCONCLUSIVE,
                                  (zero_w,), tested, seed)
    if ab_dim > 0 and nonzero_w:
        return SingularityVerdict(ALMOST_NONSINGULAR_CERTIFIED,
                                  (nonzero_w,), tested, seed)
    return SingularityVerdict(NONSINGULAR_SAMPLED,
                              (nonzero_w,) if nonzero_w else (),
                              tested, seed)


def _unit(p):
    e = [Fraction(0)] * p
    if p:
        e[0] = Fraction(1)
    return tuple(e)


# -- uniform colorings ----------------------------------------------------


@dataclass(frozen=True)
class UniformBlockCertificate:
    params: tuple  # (p, q, r, s)
    matchings: dict  # label -> ordered (tail, head) pairs
    orders: dict  # label -> vertex ordering exhibiting the block form

    @property
    def block_count(self):
        return self.params.r


_ROT = ((Fraction(0), Fraction(-1)), (Fraction(1), Fraction(0)))


def uniform_blocks(g):
    """Per-label perfect matchings and the orderings that put each label's
    skew operator into block-diagonal rotation form.

    Requires a uniform coloring whose common degree equals the number of
    labels: then each label's edges form a perfect matching, every block is
    the 2x2 rotation, and every per-label operator is certifiably
    nonsingular with eigenvalues +-i.
    """
    params = uniform_coloring_check(g)
    if params is None:
        raise NotUniformError("graph is not uniformly colored")
    if params.s != params.p:
        raise DegreeMismatchError(
            f"degree {params.s} differs from label count {params.p}")
    if params.q != 2 * params.r:
        raise NotUniformError(
            f"{params.q} vertices cannot be covered by {params.r} disjoint "
            "edges per label")
    alg = build_algebra(g)
    matchings = {}
    orders = {}
    for z in g.labels:
        pairs = [(e.tail, e.head) for e in g.edges if e.label == z]
        covered = [v for pair in pairs for v in pair]
        if sorted(covered) != sorted(g.vertices):
            raise NotUniformError(
                f"label {z!r} does not induce a perfect matching")
        unit = [Fraction(0)] * alg.nl
        unit[g.label_index[z]] = Fraction(1)
        mat = j_matrix(alg, unit).rows()
        idx = [g.vertex_index[v] for v in covered]
        for a in range(len(idx)):
            for b in range(len(idx)):
                expected = Fraction(0)
                if a // 2 == b // 2:
                    expected = _ROT[a % 2][b % 2]
                if mat[idx[a]][idx[b]] != expected:
                    raise AssertionError(
                        f"label {z!r} failed block verification")
        matchings[z] = tuple(pairs)
        orders[z] = tuple(covered)
    return UniformBlockCertificate(params=params, matchings=matchings,
                                   orders=orders)


def random_uniform_graph(rng, p, r, max_tries=2000):
    """Random connected simple graph carrying a uniform coloring with
    degree equal to label count: p pairwise edge-disjoint perfect
    matchings on 2r vertices."""
    q = 2 * r
    vertices = [f"v{i}" for i in range(1, q + 1)]
    labels = [f"Z{i}" for i in range(1, p + 1)]
    for _ in range(max_tries):
        used = set()
        edges = []
        ok = True
        for z in labels:
            order = vertices[:]
            rng.shuffle(order)
            for t in range(r):
                a, b = order[2 * t], order[2 * t + 1]
                key = frozenset((a, b))
                if key in used:
                    ok = False
                    break
                used.add(key)
                edges.append(Edge(a, b, z))
            if not ok:
                break
        if not ok:
            continue
        try:
            return LabeledDigraph(edges, vertices=vertices)
        except GraphValidationError:
            continue  # disconnected; draw again
    raise RuntimeError("could not sample a uniform graph")
