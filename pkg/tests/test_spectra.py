import random
from fractions import Fraction

import pytest

from nilgraph.algebra import build_algebra, restricted_j
from nilgraph.errors import (
    DegreeMismatchError,
    DimensionTooLargeError,
    NotUniformError,
)
from nilgraph.families import CycleSpec, StarSpec, make_cycle, make_star
from nilgraph.graphs import parse_graph, uniform_coloring_check
from nilgraph.polynomials import Poly
from nilgraph.rational import det as numeric_det
from nilgraph.spectra import (
    ALMOST_NONSINGULAR_CERTIFIED,
    NONSINGULAR_SAMPLED,
    SINGULAR_CERTIFIED,
    char_poly_at,
    char_poly_symbolic,
    classify,
    random_uniform_graph,
    symbolic_det,
    uniform_blocks,
    witness_candidates,
)

F = Fraction


# -- characteristic polynomials -----------------------------------------------


def test_char_poly_zero_combination(sample_star):
    alg = build_algebra(sample_star)
    d = 4  # complement of a 3-dim factor in 7 vertices
    assert char_poly_at(alg, [0, 0, 0]) == [F(1)] + [F(0)] * d


def test_char_poly_multiplicity_one_star():
    alg = build_algebra(make_star(StarSpec((1, 1, 1))))
    # roots 0, 0, +-i*sqrt(1 + 4 + 4)
    assert char_poly_at(alg, [1, 2, 2]) == [F(1), 0, F(9), 0, 0]


def test_char_poly_even_odd_structure(sample_star, k33_uniform):
    """Skew symmetry forces alternating zero coefficients."""
    for g, combo in ((sample_star, [1, 2, 3]), (k33_uniform, [2, 1, 1])):
        alg = build_algebra(g)
        coeffs = char_poly_at(alg, combo)
        assert coeffs[0] == 1
        assert all(c == 0 for c in coeffs[1::2])


def test_char_poly_matches_determinant_at_points(k33_uniform):
    alg = build_algebra(k33_uniform)
    res = restricted_j(alg, [F(1), F(2), F(-1)])
    coeffs = res.char_poly()
    d = res.dim
    prop = res.propagator()
    for lam in (F(0), F(1), F(-2), F(1, 3), F(7)):
        direct = numeric_det([[lam * (1 if i == j else 0) - prop[i][j]
                               for j in range(d)] for i in range(d)])
        via = sum(c * lam ** (d - k) for k, c in enumerate(coeffs))
        assert via == direct


def test_char_poly_symbolic_star_shape():
    alg = build_algebra(make_star(StarSpec((2, 2))))
    lam = Poly.variable(0, 3)
    a1, a2 = Poly.variable(1, 3), Poly.variable(2, 3)
    expected = (lam * lam + (a1 * a1 + a2 * a2).scale(2)) * lam
    assert char_poly_symbolic(alg) == expected


# -- symbolic determinants ----------------------------------------------------


def test_symbolic_det_odd_dimension_vanishes():
    g = make_cycle(CycleSpec(3, labels=("Z1", "Z2", "Z3")))
    assert symbolic_det(build_algebra(g)).is_zero


def test_symbolic_det_star_vanishes_for_two_labels():
    for mults in ((2, 1), (3, 2, 1), (1, 1)):
        alg = build_algebra(make_star(StarSpec(mults)))
        if len(mults) >= 2:
            assert symbolic_det(alg).is_zero


def test_symbolic_det_k33(k33_uniform):
    alg = build_algebra(k33_uniform)
    a, b, c = (Poly.variable(i, 3) for i in range(3))
    cubic = a * a * a + b * b * b + c * c * c + a * b * c
    assert symbolic_det(alg) == cubic * cubic


def test_symbolic_det_single_label_shortcut_consistent():
    g = make_cycle(CycleSpec(4))
    alg = build_algebra(g)
    poly = symbolic_det(alg)
    for a in (F(1), F(2), F(-3, 2)):
        assert poly.evaluate([a]) == restricted_j(alg, [a]).determinant()


def test_symbolic_det_matches_pointwise(k33_uniform, c8_uniform):
    rng = random.Random(3)
    for g in (k33_uniform, c8_uniform):
        alg = build_algebra(g)
        poly = symbolic_det(alg)
        for _ in range(5):
            pt = [F(rng.randint(-5, 5), rng.randint(1, 4))
                  for _ in range(alg.nl)]
            assert poly.evaluate(pt) == restricted_j(alg, pt).determinant()


def test_symbolic_det_dimension_bound(c8_uniform):
    alg = build_algebra(c8_uniform)
    with pytest.raises(DimensionTooLargeError):
        symbolic_det(alg, expansion_bound=4)


# -- classification -----------------------------------------------------------


def test_stars_with_two_or_more_labels_certified_singular():
    for mults in ((2, 1), (1, 1), (3, 2, 1), (5, 5, 1, 1)):
        alg = build_algebra(make_star(StarSpec(mults)))
        assert classify(alg).status == SINGULAR_CERTIFIED


def test_single_edge_is_nonsingular_sampled():
    # the 3-dimensional Heisenberg algebra: no singular direction exists
    alg = build_algebra(make_star(StarSpec((1,))))
    verdict = classify(alg)
    assert verdict.status == NONSINGULAR_SAMPLED
    assert verdict.witnesses[0][1] != 0


def test_single_label_star_with_factor_is_almost_nonsingular():
    alg = build_algebra(make_star(StarSpec((2,))))
    verdict = classify(alg)
    assert verdict.status == ALMOST_NONSINGULAR_CERTIFIED


def test_k33_classification(k33_uniform):
    verdict = classify(build_algebra(k33_uniform))
    assert verdict.status == ALMOST_NONSINGULAR_CERTIFIED
    zero_w, nonzero_w = verdict.witnesses
    assert zero_w == ((F(1), F(-1), F(0)), F(0))
    assert nonzero_w == ((F(1), F(0), F(0)), F(1))


def test_c8_classification(c8_uniform):
    verdict = classify(build_algebra(c8_uniform))
    assert verdict.status == ALMOST_NONSINGULAR_CERTIFIED
    zero_w, nonzero_w = verdict.witnesses
    assert zero_w[0] == (F(1), F(0), F(0), F(0))
    assert nonzero_w[0] == (F(1), F(0), F(1), F(0))
    assert nonzero_w[1] == 1


def test_c8_classification_without_expansion(c8_uniform):
    verdict = classify(build_algebra(c8_uniform), expansion_bound=4)
    assert verdict.status == ALMOST_NONSINGULAR_CERTIFIED
    assert verdict.witnesses[0][0] == (F(1), F(0), F(0), F(0))


def test_nontrivial_factor_never_sampled_nonsingular(bridged_tree,
                                                     four_cycle):
    for g in (bridged_tree, four_cycle):
        alg = build_algebra(g)
        verdict = classify(alg)
        assert verdict.status != NONSINGULAR_SAMPLED


def test_classify_fully_central_graphs():
    # opposite same-label pair: every bracket cancels, the restricted
    # operator lives on the zero space
    g = parse_graph("#nonsimple\nv w Z\nw v Z")
    verdict = classify(build_algebra(g))
    assert verdict.status == ALMOST_NONSINGULAR_CERTIFIED
    assert verdict.witnesses == (((F(1),), F(1)),)
    # single vertex, no edges, no labels at all
    lonely = parse_graph("vertex v")
    assert classify(build_algebra(lonely)).status == \
        ALMOST_NONSINGULAR_CERTIFIED


def test_classify_deterministic(k33_uniform):
    alg1 = build_algebra(k33_uniform)
    alg2 = build_algebra(k33_uniform)
    assert classify(alg1, seed=5) == classify(alg2, seed=5)


def test_verdict_json(c8_uniform):
    out = classify(build_algebra(c8_uniform)).to_json()
    assert out["status"] == ALMOST_NONSINGULAR_CERTIFIED
    assert out["witnesses"][0]["coeffs"] == ["1", "0", "0", "0"]
    assert out["seed"] == 0


def test_witness_candidates_layout():
    pts = witness_candidates(3, seed=0, count=5)
    assert pts[0] == (1, 0, 0)
    assert pts[3] == (1, 1, 0)  # pair sums after coordinates
    assert pts[6] == (1, -1, 0)  # then pair differences
    assert len(pts) == 3 + 3 + 3 + 5
    assert all(any(x != 0 for x in p) for p in pts)


# -- uniform block structure --------------------------------------------------


def test_uniform_blocks_k33(k33_uniform):
    cert = uniform_blocks(k33_uniform)
    assert cert.params == (3, 6, 3, 3)
    assert cert.block_count == 3
    for z, pairs in cert.matchings.items():
        assert len(pairs) == 3
        covered = [v for pair in pairs for v in pair]
        assert sorted(covered) == sorted(k33_uniform.vertices)


def test_uniform_blocks_single_edge():
    g = parse_graph("a b Z")
    cert = uniform_blocks(g)
    assert cert.params == (1, 2, 1, 1)
    assert cert.matchings["Z"] == (("a", "b"),)


def test_uniform_blocks_degree_mismatch(c8_uniform):
    with pytest.raises(DegreeMismatchError):
        uniform_blocks(c8_uniform)


def test_uniform_blocks_not_uniform(sample_star):
    with pytest.raises(NotUniformError):
        uniform_blocks(sample_star)


def test_uniform_blocks_certify_block_form(k33_uniform):
    from nilgraph.algebra import j_matrix

    g = k33_uniform
    alg = build_algebra(g)
    cert = uniform_blocks(g)
    rot = [[F(0), F(-1)], [F(1), F(0)]]
    for z, order in cert.orders.items():
        unit = [1 if i == g.label_index[z] else 0 for i in range(alg.nl)]
        mat = j_matrix(alg, unit).rows()
        idx = [g.vertex_index[v] for v in order]
        for a in range(6):
            for b in range(6):
                want = rot[a % 2][b % 2] if a // 2 == b // 2 else F(0)
                assert mat[idx[a]][idx[b]] == want


def test_random_uniform_graphs_well_formed():
    rng = random.Random(0)
    for _ in range(5):
        p = rng.randint(2, 3)
        r = rng.randint(max(2, p - 1), 4)
        g = random_uniform_graph(rng, p, r)
        params = uniform_coloring_check(g)
        assert params == (p, 2 * r, r, p)
        cert = uniform_blocks(g)
        assert cert.block_count == r
