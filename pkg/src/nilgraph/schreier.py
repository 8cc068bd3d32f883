"""Group action machinery for graphs with one in- and out-edge per label.

Each label acts on the vertex set as the permutation "follow my out-edge";
words in the labels act by composition.  Orbits of the squared generators
give the vertex partition whose class sums form a basis of the abelian
factor, and the skew operator itself is the difference between a label's
action and its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GraphValidationError, NotSchreierError
from .graphs import Edge, LabeledDigraph, diagnostics


def _require_schreier(g):
    if not diagnostics(g).schreier:
        raise NotSchreierError(
            "every vertex needs exactly one in- and one out-edge per label")


def label_permutation(g, z):
    """The permutation v -> head of the unique z-edge out of v."""
    _require_schreier(g)
    g._check_label(z)
    return {v: g._out_by_label[(v, z)][0] for v in g.vertices}


def act(g, z, v, exponent=1):
    """Apply one label (or its inverse) to a vertex."""
    _require_schreier(g)
    g._check_label(z)
    g._check_vertex(v)
    if exponent == 1:
        return g._out_by_label[(v, z)][0]
    if exponent == -1:
        return g._in_by_label[(v, z)][0]
    raise ValueError("exponent must be +1 or -1")


def act_word(g, word):
    """Permutation of a word of (label, exponent) letters.

    The letter written last acts first, matching composition of maps:
    acting by the word (A, B) sends v to A(B(v)).
    """
    _require_schreier(g)
    perm = {v: v for v in g.vertices}
    for z, e in reversed(list(word)):
        step = {v: act(g, z, v, e) for v in g.vertices}
        perm = {v: step[perm[v]] for v in g.vertices}
    return perm


def expand_squares(squares):
    """Flatten ((label, sign), ...) square factors into a letter word.

    The factors are listed left to right as written, each contributing its
    letter twice.
    """
    word = []
    for z, e in squares:
        word.extend([(z, e), (z, e)])
    return word


@dataclass(frozen=True)
class VertexPartition:
    classes: tuple  # tuple of vertex tuples, canonically ordered
    representatives: tuple

    def class_of(self, v):
        for cls in self.classes:
            if v in cls:
                return cls
        raise KeyError(v)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def two_path_classes(g):
    """Orbits of the group generated by all squared label actions.

    Walking any product of squared letters (with either sign) reaches
    exactly the orbit of the group generated by the squares, since the
    inverse square of a permutation generates the same subgroup.
    """
    _require_schreier(g)
    uf = _UnionFind(g.vertices)
    for z in g.labels:
        perm = label_permutation(g, z)
        for v in g.vertices:
            uf.union(v, perm[perm[v]])
    buckets = {}
    for v in g.vertices:
        buckets.setdefault(uf.find(v), []).append(v)
    order = g.vertex_index
    classes = sorted((sorted(c, key=order.get) for c in buckets.values()),
                     key=lambda c: order[c[0]])
    return VertexPartition(
        classes=tuple(tuple(c) for c in classes),
        representatives=tuple(c[0] for c in classes),
    )


def class_sums(g):
    """One vector per class: the sum of its vertices.

    These span the abelian factor of the graph's algebra, in
    representative order.
    """
    partition = two_path_classes(g)
    return [{v: Fraction(1) for v in cls} for cls in partition.classes]


def j_via_action(g, z):
    """Skew operator of one label straight from the action.

    Column v is the coordinate vector of (z applied to v) minus (z inverse
    applied to v); agrees entrywise with the structure-tensor matrix.
    """
    _require_schreier(g)
    g._check_label(z)
    n = len(g.vertices)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for v in g.vertices:
        c = g.vertex_index[v]
        fwd = g.vertex_index[act(g, z, v, 1)]
        bwd = g.vertex_index[act(g, z, v, -1)]
        mat[fwd][c] += 1
        mat[bwd][c] -= 1
    return mat


def schreier_from_permutations(vertices, perms):
    """Build the graph whose z-edges realize the permutation perms[z].

    ``perms`` maps each label to a dict sending every vertex to its image;
    each permutation contributes one edge per vertex, so the result always
    satisfies the one-in-one-out condition.
    """
    vertices = list(vertices)
    edges = []
    for z, perm in perms.items():
        if sorted(perm) != sorted(vertices) or \
                sorted(perm.values()) != sorted(vertices):
            raise ValueError(f"perms[{z!r}] is not a permutation of the "
                             "vertex set")
        for v in vertices:
            edges.append(Edge(v, perm[v], z))
    return LabeledDigraph(edges, vertices=vertices, nonsimple=True)


def random_schreier_graph(rng, nv, nlabels, max_tries=200):
    """Random connected graph from one random permutation per label."""
    vertices = [f"v{i}" for i in range(1, nv + 1)]
    labels = [f"Z{i}" for i in range(1, nlabels + 1)]
    for _ in range(max_tries):
        perms = {}
        for z in labels:
            images = vertices[:]
            rng.shuffle(images)
            perms[z] = dict(zip(vertices, images))
        try:
            return schreier_from_permutations(vertices, perms)
        except GraphValidationError:
            continue  # disconnected sample; draw again
    raise RuntimeError("could not sample a connected graph")
