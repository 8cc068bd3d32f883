import pytest

from nilgraph.families import CycleSpec, StarSpec, make_cycle, make_star
from nilgraph.graphs import parse_graph


@pytest.fixture
def triangle_mixed():
    """Triangle with a doubled pair: two labels, one pair joined both ways."""
    return parse_graph("v1 v2 Z1\nv2 v3 Z1\nv3 v2 Z2\nv1 v3 Z2")


@pytest.fixture
def four_cycle():
    """Directed 4-cycle, single label, all edges forward."""
    return parse_graph("v1 v2 Z1\nv2 v3 Z1\nv3 v4 Z1\nv4 v1 Z1")


@pytest.fixture
def four_cycle_flipped():
    """Same 4-cycle but with the last edge reversed."""
    return parse_graph("v1 v2 Z1\nv2 v3 Z1\nv3 v4 Z1\nv1 v4 Z1")


@pytest.fixture
def claw_pair():
    """Two degree-3 vertices sharing a path, labels repeating on one side."""
    return parse_graph(
        "vertex v1\nvertex v2\nvertex v3\nvertex v4\nvertex v5\nvertex v6\n"
        "v1 v3 Z1\nv2 v3 Z2\nv3 v4 Z1\nv4 v5 Z1\nv4 v6 Z2")


@pytest.fixture
def sample_star_spec():
    """Star with multiplicities (3, 2, 1) and mixed orientations."""
    return StarSpec((3, 2, 1), delta=((1, -1, 1), (1, -1), (1,)))


@pytest.fixture
def sample_star(sample_star_spec):
    return make_star(sample_star_spec)


@pytest.fixture
def bridged_tree():
    """Tree with two hubs whose label stars overlap on the middle vertex."""
    return parse_graph(
        "v0 v1 Z1\nv0 v2 Z1\nv0 w0 Z1\nu0 w0 Z2\nu0 u1 Z2\nu0 u2 Z2")


@pytest.fixture
def sample_schreier():
    """5-vertex graph with one loop; one in- and out-edge per label at
    every vertex."""
    return parse_graph(
        "#nonsimple\n"
        "v1 v2 Z2\nv1 v1 Z1\nv2 v3 Z1\nv2 v5 Z2\nv3 v4 Z2\nv3 v5 Z1\n"
        "v4 v3 Z2\nv4 v2 Z1\nv5 v1 Z2\nv5 v4 Z1")


@pytest.fixture
def k33_uniform():
    """K_{3,3} with a proper 3-coloring, each color a perfect matching."""
    return parse_graph(
        "vertex v1\nvertex v2\nvertex v3\nvertex v4\nvertex v5\nvertex v6\n"
        "v1 v2 Z1\nv1 v6 Z2\nv1 v4 Z3\nv2 v5 Z2\nv2 v3 Z3\n"
        "v3 v6 Z1\nv3 v4 Z2\nv4 v5 Z1\nv5 v6 Z3")


@pytest.fixture
def c8_uniform_spec():
    return CycleSpec(8, labels=("Z1", "Z2", "Z3", "Z4") * 2)


@pytest.fixture
def c8_uniform(c8_uniform_spec):
    return make_cycle(c8_uniform_spec)
