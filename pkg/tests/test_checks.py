from nilgraph.algebra import build_algebra
from nilgraph.checks import run_checks


def all_names(results):
    return {r.name for r in results}


def test_suite_passes_on_fixtures(triangle_mixed, four_cycle, claw_pair,
                                  bridged_tree, sample_star, k33_uniform):
    for g in (triangle_mixed, four_cycle, claw_pair, bridged_tree,
              sample_star, k33_uniform):
        results = run_checks(g)
        assert all(r.passed for r in results), [r for r in results
                                                if not r.passed]


def test_simple_graphs_get_support_checks(four_cycle):
    names = all_names(run_checks(four_cycle))
    assert "support_span" in names
    assert "odd_single_label" in names


def test_nonsimple_graphs_skip_support_checks(triangle_mixed):
    names = all_names(run_checks(triangle_mixed))
    assert "support_span" not in names


def test_schreier_graphs_get_action_checks(sample_schreier):
    results = run_checks(sample_schreier)
    names = all_names(results)
    assert {"class_sums_span", "action_matrix", "action_inverse"} <= names
    assert all(r.passed for r in results)


def test_corrupted_tensor_fails_by_name(four_cycle):
    """Negative control: damaging one structure constant must trip a
    named invariant, not pass silently."""
    alg = build_algebra(four_cycle)
    (i, j), row = next(iter(alg._table.items()))
    label, value = next(iter(row.items()))
    alg._table[(i, j)][label] = value + 1  # breaks antisymmetry
    results = run_checks(four_cycle, alg)
    failed = [r.name for r in results if not r.passed]
    assert "skew_symmetry" in failed


def test_corrupted_both_sides_fails_consistency(four_cycle):
    """Damaging the tensor antisymmetrically slips past the skew check but
    must still break a route-comparison check."""
    alg = build_algebra(four_cycle)
    keys = sorted(alg._table)
    (i, j) = keys[0]
    label = next(iter(alg._table[(i, j)]))
    alg._table[(i, j)][label] += 2
    alg._table[(j, i)][label] -= 2
    results = run_checks(four_cycle, alg)
    failed = [r.name for r in results if not r.passed]
    assert failed
