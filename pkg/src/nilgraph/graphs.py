"""Directed edge-labeled graphs and the purely combinatorial queries on them.

The text format is line oriented: optional ``#nonsimple`` /
``#allow-disconnected`` header lines, ``%`` comments, ``vertex NAME`` lines
for isolated vertices, and one ``TAIL HEAD LABEL`` line per edge.  Vertex
order is declaration order (first appearance), label order is first
appearance on an edge; every matrix and basis downstream uses these
orderings, so parsing the same file always reproduces the same algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    AmbiguousPathError,
    GraphFormatError,
    GraphValidationError,
    NonSimpleGraphError,
)

_TOKEN = re.compile(r"[A-Za-z0-9_.,-]+\Z")


class Edge(NamedTuple):
    tail: str
    head: str
    label: str


class UniformColoring(NamedTuple):
    p: int  # number of labels
    q: int  # number of vertices
    r: int  # uses of each label
    s: int  # common degree


@dataclass(frozen=True)
class GraphDiagnostics:
    connected: bool
    simple: bool
    schreier: bool
    max_degree: int
    degree_map: dict


@dataclass(frozen=True)
class SameLabeledPath:
    label: str
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices) - 1


class LabeledDigraph:
    """Immutable connected directed graph with labeled edges.

    Loops are admitted only under the ``nonsimple`` flag; parallel edges
    (distinct (tail, head, label) triples between the same pair) are always
    admitted and simply make the graph non-simple.
    """

    def __init__(self, edges, vertices=None, nonsimple=False,
                 allow_disconnected=False):
        edges = [Edge(*e) for e in edges]
        if vertices is None:
            vertices = []
            seen = set()
            for e in edges:
                for v in (e.tail, e.head):
                    if v not in seen:
                        seen.add(v)
                        vertices.append(v)
        vertices = list(vertices)
        if not vertices:
            raise GraphValidationError("graph has no vertices")

        for name in vertices:
            if not _TOKEN.match(name):
                raise GraphValidationError(f"invalid vertex name {name!r}")
        if len(set(vertices)) != len(vertices):
            raise GraphValidationError("duplicate vertex declaration")
        vset = set(vertices)

        seen_triples = set()
        labels = []
        label_seen = set()
        for e in edges:
            if e.tail not in vset:
                raise GraphValidationError(f"undeclared vertex {e.tail!r}")
            if e.head not in vset:
                raise GraphValidationError(f"undeclared vertex {e.head!r}")
            if not _TOKEN.match(e.label):
                raise GraphValidationError(f"invalid label {e.label!r}")
            if e in seen_triples:
                raise GraphValidationError(f"duplicate edge {e}")
            seen_triples.add(e)
            if e.tail == e.head and not nonsimple:
                raise GraphValidationError(
                    f"loop at {e.tail!r} requires the #nonsimple flag")
            if e.label not in label_seen:
                label_seen.add(e.label)
                labels.append(e.label)

        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.labels = tuple(labels)
        self.nonsimple = nonsimple
        self.allow_disconnected = allow_disconnected
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.label_index = {z: i for i, z in enumerate(self.labels)}

        adj = {v: set() for v in self.vertices}
        incident = {v: [] for v in self.vertices}
        degree = {v: 0 for v in self.vertices}
        out_by_label = {}
        in_by_label = {}
        for e in self.edges:
            degree[e.tail] += 1
            degree[e.head] += 1
            incident[e.tail].append(e)
            if e.tail != e.head:
                incident[e.head].append(e)
                adj[e.tail].add(e.head)
                adj[e.head].add(e.tail)
            out_by_label.setdefault((e.tail, e.label), []).append(e.head)
            in_by_label.setdefault((e.head, e.label), []).append(e.tail)
        self._adj = adj
        self._incident = incident
        self._degree = degree
        self._out_by_label = out_by_label
        self._in_by_label = in_by_label

        if not allow_disconnected and not self.is_connected():
            raise GraphValidationError("graph is disconnected")

    # -- basic structure ------------------------------------------------

    def is_connected(self):
        start = self.vertices[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_simple(self):
        """No loops and at most one edge between any unordered pair."""
        pairs = set()
        for e in self.edges:
            if e.tail == e.head:
                return False
            key = frozenset((e.tail, e.head))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def degree(self, v):
        """Undirected degree; a loop counts twice."""
        self._check_vertex(v)
        return self._degree[v]

    def _check_vertex(self, v):
        if v not in self.vertex_index:
            raise GraphValidationError(f"unknown vertex {v!r}")

    def _check_label(self, z):
        if z not in self.label_index:
            raise GraphValidationError(f"unknown label {z!r}")

    def __eq__(self, other):
        """Structural equality: same vertices in the same order, same edge
        list.  Header flags are parse permissions, not structure."""
        if not isinstance(other, LabeledDigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return (f"LabeledDigraph({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.labels)} labels)")


# -- parsing and serialization ------------------------------------------


def parse_graph(text):
    """Parse the line-oriented format into a LabeledDigraph."""
    nonsimple = False
    allow_disconnected = False
    vertices = []
    vseen = set()
    edges = []

    def declare(name):
        if name not in vseen:
            vseen.add(name)
            vertices.append(name)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        if line.startswith("#"):
            if edges or vertices:
                raise GraphFormatError("header after first declaration",
                                       lineno)
            if line == "#nonsimple":
                nonsimple = True
            elif line == "#allow-disconnected":
                allow_disconnected = True
            else:
                raise GraphFormatError(f"unknown header {line!r}", lineno)
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphFormatError("expected 'vertex NAME'", lineno)
            if not _TOKEN.match(parts[1]):
                raise GraphFormatError(f"invalid vertex name {parts[1]!r}",
                                       lineno)
            declare(parts[1])
            continue
        if len(parts) != 3:
            raise GraphFormatError(
                f"expected 'TAIL HEAD LABEL', got {line!r}", lineno)
        tail, head, label = parts
        for tok in parts:
            if not _TOKEN.match(tok):
                raise GraphFormatError(f"invalid token {tok!r}", lineno)
        declare(tail)
        declare(head)
        edges.append(Edge(tail, head, label))

    return LabeledDigraph(edges, vertices=vertices, nonsimple=nonsimple,
                          allow_disconnected=allow_disconnected)


def serialize_graph(g):
    """Canonical text form; parse_graph round-trips it exactly."""
    lines = []
    if g.nonsimple:
        lines.append("#nonsimple")
    if g.allow_disconnected:
        lines.append("#allow-disconnected")
    for v in g.vertices:
        lines.append(f"vertex {v}")
    for e in g.edges:
        lines.append(f"{e.tail} {e.head} {e.label}")
    return "\n".join(lines) + "\n"


def to_dot(g):
    """GraphViz export, for visualization only."""
    lines = ["digraph G {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in g.edges:
        lines.append(f'  "{e.tail}" -> "{e.head}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- diagnostics and neighborhoods ---------------------------------------


def diagnostics(g):
    degree_map = {v: g.degree(v) for v in g.vertices}
    schreier = all(
        len(g._out_by_label.get((v, z), ())) == 1
        and len(g._in_by_label.get((v, z), ())) == 1
        for v in g.vertices for z in g.labels)
    return GraphDiagnostics(
        connected=g.is_connected(),
        simple=g.is_simple(),
        schreier=schreier,
        max_degree=max(degree_map.values()),
        degree_map=degree_map,
    )


def neighborhood(g, v):
    """Vertices adjacent to v in either direction; loops do not count."""
    g._check_vertex(v)
    return set(g._adj[v])


def z_neighborhood(g, v, z):
    """Neighbors of v joined to it by at least one edge labeled z."""
    g._check_vertex(v)
    g._check_label(z)
    out = set()
    for e in g._incident[v]:
        if e.label != z or e.tail == e.head:
            continue
        out.add(e.head if e.tail == v else e.tail)
    return out


def edge_label_degree(g, v, z):
    return len(z_neighborhood(g, v, z))


def _require_simple(g):
    if not g.is_simple():
        raise NonSimpleGraphError(
            "operation is defined for simple graphs only")


def _incident_label(g, v, w):
    """Label of the unique edge between v and w in a simple graph."""
    for e in g._incident[v]:
        if w in (e.tail, e.head):
            return e.label
    raise GraphValidationError(f"no edge between {v!r} and {w!r}")


def abelian_support(g):
    """Vertices every one of whose neighbors sees the shared edge label at
    least twice.

    Only such vertices can carry a nonzero coefficient in the abelian
    factor of the associated algebra.
    """
    _require_simple(g)
    out = set()
    for v in g.vertices:
        ok = True
        for y in g._adj[v]:
            if edge_label_degree(g, y, _incident_label(g, v, y)) <= 1:
                ok = False
                break
        if ok:
            out.add(v)
    return out


def is_proper_coloring(g):
    """True iff no vertex has two incident edges with the same label."""
    _require_simple(g)
    for v in g.vertices:
        labels = [e.label for e in g._incident[v]]
        if len(labels) != len(set(labels)):
            return False
    return True


def uniform_coloring_check(g):
    """(p, q, r, s) when g is s-regular and properly colored with p labels
    each used exactly r times; None otherwise."""
    if not g.is_simple():
        return None
    degrees = {g.degree(v) for v in g.vertices}
    if len(degrees) != 1:
        return None
    s = degrees.pop()
    if s == 0 or not is_proper_coloring(g):
        return None
    counts = {}
    for e in g.edges:
        counts[e.label] = counts.get(e.label, 0) + 1
    uses = set(counts.values())
    if len(uses) != 1:
        return None
    return UniformColoring(p=len(g.labels), q=len(g.vertices),
                           r=uses.pop(), s=s)


def induced_label_subgraph(g, z):
    """Subgraph on the edges labeled z and their endpoints.

    The result may be disconnected; the connectivity check is suppressed.
    """
    g._check_label(z)
    edges = [e for e in g.edges if e.label == z]
    touched = {v for e in edges for v in (e.tail, e.head)}
    vertices = [v for v in g.vertices if v in touched]
    return LabeledDigraph(edges, vertices=vertices, nonsimple=g.nonsimple,
                          allow_disconnected=True)


def same_labeled_paths(g):
    """Maximal single-label paths, each reported once.

    Every label-induced subgraph must be a disjoint union of paths; a
    vertex of label-degree >= 3 or a monochromatic cycle makes the notion
    undefined and raises AmbiguousPathError.
    """
    _require_simple(g)
    paths = []
    for z in g.labels:
        adj = {}
        nedges = 0
        for e in g.edges:
            if e.label != z:
                continue
            nedges += 1
            adj.setdefault(e.tail, set()).add(e.head)
            adj.setdefault(e.head, set()).add(e.tail)
        for v, nbrs in adj.items():
            if len(nbrs) >= 3:
                raise AmbiguousPathError(
                    f"label {z!r} branches at vertex {v!r}")
        seen = set()
        for start in g.vertices:
            if start not in adj or start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comp_edges = sum(len(adj[v] & comp) for v in comp) // 2
            ends = [v for v in g.vertices if v in comp and len(adj[v]) == 1]
            if comp_edges == len(comp) or len(ends) != 2:
                raise AmbiguousPathError(
                    f"label {z!r} closes a cycle through {start!r}")
            walk = [ends[0]]
            prev = None
            while len(walk) <= comp_edges:
                nxt = next(w for w in adj[walk[-1]] if w != prev)
                prev = walk[-1]
                walk.append(nxt)
            paths.append(SameLabeledPath(label=z, vertices=tuple(walk)))
    return paths
