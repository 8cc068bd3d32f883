"""Generators and closed-form predictions for structured graph families.

Each ``make_*`` builds a LabeledDigraph; the matching ``predict_*`` states
what the abelian factor (and for stars, the center complement and spectrum)
must come out to, so the generic exact computation can be cross-checked
family by family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Edge, LabeledDigraph
from .polynomials import Poly

_SIGNS = (-1, 1)


def _check_sign(x, what):
    if x not in _SIGNS:
        raise ValueError(f"{what} must be +1 or -1, got {x!r}")


@dataclass(frozen=True)
class StarSpec:
    """One central vertex joined to sum(multiplicities) ends.

    ``multiplicities[i-1]`` ends carry label ``labels[i-1]``; the sign
    ``delta[i-1][j-1]`` is +1 when the edge points from the center out to
    end (i, j) and -1 when it points back in.
    """

    multiplicities: tuple
    delta: tuple = None
    labels: tuple = None
    prefix: str = "v"

    def __post_init__(self):
        mults = tuple(int(m) for m in self.multiplicities)
        if not mults or any(m < 1 for m in mults):
            raise ValueError("multiplicities must be a nonempty list of "
                             "positive counts")
        object.__setattr__(self, "multiplicities", mults)
        delta = self.delta
        if delta is None:
            delta = tuple((1,) * m for m in mults)
        else:
            delta = tuple(tuple(row) for row in delta)
            if tuple(len(row) for row in delta) != mults:
                raise ValueError("delta shape must match multiplicities")
            for row in delta:
                for s in row:
                    _check_sign(s, "delta")
        object.__setattr__(self, "delta", delta)
        labels = self.labels
        if labels is None:
            labels = tuple(f"Z{i}" for i in range(1, len(mults) + 1))
        else:
            labels = tuple(labels)
            if len(labels) != len(mults) or len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct, one per "
                                 "multiplicity")
        object.__setattr__(self, "labels", labels)

    @property
    def k(self):
        return len(self.multiplicities)

    @property
    def n(self):
        return sum(self.multiplicities)

    def center_name(self):
        return f"{self.prefix}0"

    def end_name(self, i, j):
        return f"{self.prefix}{i}_{j}"


def make_star(spec):
    center = spec.center_name()
    vertices = [center]
    edges = []
    for i, (m, z) in enumerate(zip(spec.multiplicities, spec.labels), 1):
        for j in range(1, m + 1):
            end = spec.end_name(i, j)
            vertices.append(end)
            if spec.delta[i - 1][j - 1] == 1:
                edges.append(Edge(center, end, z))
            else:
                edges.append(Edge(end, center, z))
    return LabeledDigraph(edges, vertices=vertices)


@dataclass(frozen=True)
class StarPrediction:
    abelian_dim: int
    abelian_basis: list
    center_perp: list  # (named vector, squared norm) pairs


def predict_star(spec):
    """Closed-form abelian factor and center complement of a star.

    The abelian factor has dimension (ends - labels).  Basis vectors pair
    each end against the last end of the same label; complement vectors are
    the signed sums over each label's ends (normalized to a positive
    coefficient on the first end) plus the central vertex, with squared
    norm equal to the label multiplicity.
    """
    basis = []
    complement = [({spec.center_name(): Fraction(1)}, Fraction(1))]
    for i, m in enumerate(spec.multiplicities, 1):
        drow = spec.delta[i - 1]
        last = spec.end_name(i, m)
        for j in range(1, m):
            basis.append({
                spec.end_name(i, j): Fraction(drow[m - 1]),
                last: Fraction(-drow[j - 1]),
            })
        sign = drow[0]
        vec = {spec.end_name(i, j): Fraction(sign * drow[j - 1])
               for j in range(1, m + 1)}
        complement.append((vec, Fraction(m)))
    return StarPrediction(abelian_dim=spec.n - spec.k,
                          abelian_basis=basis,
                          center_perp=complement)


def make_double_star(spec1, spec2, bridge_label="Z1", bridge_dir=1):
    """Two stars whose central vertices are joined by one labeled edge."""
    _check_sign(bridge_dir, "bridge_dir")
    if spec1.prefix == spec2.prefix:
        spec2 = StarSpec(spec2.multiplicities, spec2.delta, spec2.labels,
                         prefix="w")
    g1 = make_star(spec1)
    g2 = make_star(spec2)
    vertices = list(g1.vertices) + list(g2.vertices)
    if bridge_dir == 1:
        bridge = Edge(spec1.center_name(), spec2.center_name(), bridge_label)
    else:
        bridge = Edge(spec2.center_name(), spec1.center_name(), bridge_label)
    edges = list(g1.edges) + [bridge] + list(g2.edges)
    return LabeledDigraph(edges, vertices=vertices)


@dataclass(frozen=True)
class DoubleStarPrediction:
    abelian_dim: int
    abelian_basis: list


def predict_double_star(spec1, spec2):
    """The double star's abelian factor is the span of the two stars' own
    factors, so its dimension is (n + m) - (k1 + k2)."""
    if spec1.prefix == spec2.prefix:
        spec2 = StarSpec(spec2.multiplicities, spec2.delta, spec2.labels,
                         prefix="w")
    p1 = predict_star(spec1)
    p2 = predict_star(spec2)
    return DoubleStarPrediction(
        abelian_dim=p1.abelian_dim + p2.abelian_dim,
        abelian_basis=p1.abelian_basis + p2.abelian_basis,
    )


@dataclass(frozen=True)
class CycleSpec:
    """Cycle on n vertices; edge i joins v_{i+1} to v_{i+2} (wrapping).

    ``orientations[i]`` is +1 for the forward direction around the cycle
    and -1 for the reversed edge; ``labels[i]`` is edge i's label.
    """

    n: int
    orientations: tuple = None
    labels: tuple = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("cycles need at least 3 vertices")
        orientations = self.orientations
        if orientations is None:
            orientations = (1,) * self.n
        else:
            orientations = tuple(orientations)
            if len(orientations) != self.n:
                raise ValueError("need one orientation per edge")
            for s in orientations:
                _check_sign(s, "orientation")
        object.__setattr__(self, "orientations", orientations)
        labels = self.labels
        if labels is None:
            labels = ("Z1",) * self.n
        else:
            labels = tuple(labels)
            if len(labels) != self.n:
                raise ValueError("need one label per edge")
        object.__setattr__(self, "labels", labels)

    @property
    def opposite_count(self):
        return sum(1 for s in self.orientations if s == -1)

    def vertex(self, i):
        return f"v{i % self.n + 1}"


def make_cycle(spec):
    edges = []
    for i in range(spec.n):
        a, b = spec.vertex(i), spec.vertex(i + 1)
        if spec.orientations[i] == 1:
            edges.append(Edge(a, b, spec.labels[i]))
        else:
            edges.append(Edge(b, a, spec.labels[i]))
    vertices = [spec.vertex(i) for i in range(spec.n)]
    return LabeledDigraph(edges, vertices=vertices)


def make_path(n, label="Z"):
    if n < 2:
        raise ValueError("paths need at least 2 vertices")
    edges = [Edge(f"v{i}", f"v{i + 1}", label) for i in range(1, n)]
    return LabeledDigraph(edges)


@dataclass(frozen=True)
class CyclePrediction:
    abelian_dim: int
    abelian_basis: list


def _propagate_signs(spec, start):
    """Iterate a_{i+2} = o_i * o_{i+1} * a_i from a_start = 1.

    Returns (sign dict over visited indices, wrap factor): the chain is
    consistent iff the wrap factor is +1.
    """
    n = spec.n
    o = spec.orientations
    signs = {start: 1}
    i = start
    while True:
        step = o[i] * o[(i + 1) % n]
        j = (i + 2) % n
        if j == start:
            return signs, step * signs[i]
        signs[j] = step * signs[i]
        i = j


def predict_cycle_single_label(spec):
    """Abelian factor of a one-label cycle from the orientation pattern.

    Even length with an odd number of reversed edges kills the factor;
    even/even gives dimension 2 (one signed sum per parity class); odd
    length always gives dimension 1.
    """
    if len(set(spec.labels)) != 1:
        raise ValueError("spec must use a single label")
    n = spec.n
    if n % 2 == 0:
        evens, wrap = _propagate_signs(spec, 0)
        if wrap != 1:
            return CyclePrediction(0, [])
        odds, _ = _propagate_signs(spec, 1)
        basis = [
            {spec.vertex(i): Fraction(s) for i, s in sorted(evens.items())},
            {spec.vertex(i): Fraction(s) for i, s in sorted(odds.items())},
        ]
        return CyclePrediction(2, basis)
    signs, wrap = _propagate_signs(spec, 0)
    assert wrap == 1, "odd cycle sign chain must close"
    basis = [{spec.vertex(i): Fraction(s) for i, s in sorted(signs.items())}]
    return CyclePrediction(1, basis)


@dataclass(frozen=True)
class MultiLabelCyclePrediction:
    nontrivial: bool
    witness: dict | None
    at_most_one_long_run: bool
    run_lengths: tuple


def _label_runs(labels):
    """Cyclic maximal runs of equal consecutive labels.

    Returns (list of (start index, length), boundary starts).  Assumes at
    least two distinct labels, so at least two runs exist.
    """
    n = len(labels)
    starts = [i for i in range(n) if labels[i - 1] != labels[i]]
    runs = []
    for a, b in zip(starts, starts[1:] + [starts[0] + n]):
        runs.append((a % n, b - a))
    return runs


def predict_cycle_multi_label(spec):
    """Standard-orientation multi-label cycle: nontrivial abelian factor
    iff every label's induced subgraph splits into even-length paths.

    When nontrivial, the witness sums every other vertex starting at a run
    boundary.  Also reports the cheap sufficient condition for triviality:
    at most one monochromatic run of length >= 2.
    """
    if any(s != 1 for s in spec.orientations):
        raise ValueError("prediction requires standard orientation")
    if len(set(spec.labels)) < 2:
        raise ValueError("prediction requires at least two distinct labels")
    runs = _label_runs(spec.labels)
    lengths = tuple(length for _, length in runs)
    nontrivial = all(length % 2 == 0 for length in lengths)
    witness = None
    if nontrivial:
        start = runs[0][0]
        witness = {spec.vertex(start + t): Fraction(1)
                   for t in range(0, spec.n, 2)}
    long_runs = sum(1 for length in lengths if length >= 2)
    return MultiLabelCyclePrediction(
        nontrivial=nontrivial,
        witness=witness,
        at_most_one_long_run=long_runs <= 1,
        run_lengths=lengths,
    )


def _signs_from(value, count, what):
    """Accept a sign list ([1, -1, ...]) or a +/- string."""
    if value is None:
        return None
    if isinstance(value, str):
        value = [1 if ch == "+" else -1 if ch == "-" else ch
                 for ch in value]
    signs = list(value)
    if len(signs) != count:
        raise ValueError(f"{what} needs exactly {count} signs")
    for s in signs:
        _check_sign(s, what)
    return signs


def _star_from_doc(doc, prefix="v"):
    mults = tuple(doc["multiplicities"])
    delta = doc.get("delta")
    if isinstance(delta, str):
        flat = _signs_from(delta, sum(mults), "delta")
        delta, at = [], 0
        for m in mults:
            delta.append(tuple(flat[at:at + m]))
            at += m
    elif delta is not None:
        delta = tuple(tuple(row) for row in delta)
    labels = doc.get("labels")
    return StarSpec(mults, delta=delta,
                    labels=tuple(labels) if labels else None,
                    prefix=doc.get("prefix", prefix))


def family_from_json(doc):
    """Build a family graph from a {"family": ..., ...} document.

    Stars take multiplicities plus an optional delta (nested sign lists or
    one flat +/- string); cycles take n with optional orientations and
    labels; double stars take star1/star2 sub-documents with a bridge;
    paths take n and a label.
    """
    kind = doc.get("family")
    if kind == "star":
        return make_star(_star_from_doc(doc))
    if kind in ("double_star", "double-star"):
        spec1 = _star_from_doc(doc["star1"], prefix="v")
        spec2 = _star_from_doc(doc["star2"], prefix="w")
        return make_double_star(spec1, spec2,
                                bridge_label=doc.get("bridge_label", "Z1"),
                                bridge_dir=doc.get("bridge_dir", 1))
    if kind == "cycle":
        n = doc["n"]
        orientations = _signs_from(doc.get("orientations"), n,
                                   "orientations")
        labels = doc.get("labels")
        if labels is None and "label" in doc:
            labels = (doc["label"],) * n
        return make_cycle(CycleSpec(n, orientations=orientations,
                                    labels=tuple(labels) if labels
                                    else None))
    if kind == "path":
        return make_path(doc["n"], label=doc.get("label", "Z"))
    raise ValueError(f"unknown family {kind!r}")


@dataclass(frozen=True)
class WeightedStar:
    """Star on k edges with pairwise-distinct labels, edge i carrying the
    square root of ``weights[i]`` as its weight."""

    k: int
    weights: tuple


@dataclass(frozen=True)
class StarReduction:
    weighted: WeightedStar
    char_poly: Poly  # variables: x0 = eigenvalue, x1..xk = label weights


def reduce_star(spec):
    """Collapse a star's abelian factor: one weighted edge per label.

    The characteristic polynomial of the restricted skew operator for the
    combination sum(a_i Z_i) is x^(k-1) * (x^2 + sum m_i a_i^2), returned
    monic with the eigenvalue as variable 0.
    """
    k = spec.k
    nvars = k + 1
    lam = Poly.variable(0, nvars)
    lam_sq = lam * lam
    quad = Poly.zero(nvars)
    for i, m in enumerate(spec.multiplicities, 1):
        ai = Poly.variable(i, nvars)
        quad = quad + (ai * ai).scale(m)
    poly = lam_sq + quad
    for _ in range(k - 1):
        poly = poly * lam
    weighted = WeightedStar(k=k, weights=tuple(Fraction(m) for m in
                                               spec.multiplicities))
    return StarReduction(weighted=weighted, char_poly=poly)
