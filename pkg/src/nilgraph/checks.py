"""Cross-checks tying every computation route to every other.

Each check returns a named result so a failure can point at the exact
broken identity.  These run on demand (CLI ``verify``) and over the whole
census in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    abelian_factor,
    bracket,
    build_algebra,
    center,
    center_direct,
    derived_algebra,
    j_basis_matrices,
    j_matrix,
    oracle_abelian_factor,
    split_named,
)
from .graphs import abelian_support, diagnostics
from .rational import Subspace
from .schreier import act, class_sums, j_via_action


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name, passed, detail=""):
    return CheckResult(name, bool(passed), "" if passed else detail)


def check_skew_symmetry(alg):
    for (i, j), row in alg._table.items():
        mirror = alg.structure(j, i)
        if i == j or any(mirror.get(l, 0) != -s for l, s in row.items()):
            return _result("skew_symmetry", False,
                           f"tensor not antisymmetric at ({i}, {j})")
    for l, mat in enumerate(j_basis_matrices(alg)):
        n = len(mat)
        for r in range(n):
            for c in range(r, n):
                if mat[r][c] != -mat[c][r]:
                    return _result(
                        "skew_symmetry", False,
                        f"label {alg.labels[l]} matrix not skew at "
                        f"({r}, {c})")
    return _result("skew_symmetry", True)


def check_two_step(alg):
    names = alg.vertices[:3]
    for x in names:
        for y in names:
            for z in names:
                inner = bracket(alg, {y: 1}, {z: 1})
                if inner and bracket(alg, {x: 1}, inner):
                    return _result("two_step", False,
                                   f"[[{y},{z}],{x}] is nonzero")
    return _result("two_step", True)


def check_pairing_identity(alg):
    """Matrix entry (k, i) of each label operator must equal that label's
    coefficient in the bracket of vertices i and k."""
    mats = j_basis_matrices(alg)
    for l, z in enumerate(alg.labels):
        mat = mats[l]
        for i in range(alg.nv):
            for k in range(alg.nv):
                expected = alg.structure(i, k).get(l, 0)
                if mat[k][i] != expected:
                    return _result(
                        "pairing_identity", False,
                        f"entry ({alg.vertices[k]}, {alg.vertices[i]}) of "
                        f"label {z} disagrees with the tensor")
    # spot-check the bilinear bracket route on a few basis pairs
    for vi in alg.vertices[:3]:
        for vk in alg.vertices[:3]:
            br = bracket(alg, {vi: 1}, {vk: 1})
            i = alg.graph.vertex_index[vi]
            k = alg.graph.vertex_index[vk]
            for l, z in enumerate(alg.labels):
                if mats[l][k][i] != br.get(z, 0):
                    return _result(
                        "pairing_identity", False,
                        f"bracket of ({vi}, {vk}) disagrees with label {z}")
    return _result("pairing_identity", True)


def check_j_linearity(alg):
    l1, l2 = (0, 0) if alg.nl == 1 else (0, alg.nl - 1)
    a, b = Fraction(2), Fraction(-3, 7)
    combo = [Fraction(0)] * alg.nl
    combo[l1] += a
    combo[l2] += b
    left = j_matrix(alg, combo).rows()
    mats = j_basis_matrices(alg)
    m1, m2 = mats[l1], mats[l2]
    for r in range(alg.nv):
        for c in range(alg.nv):
            if left[r][c] != a * m1[r][c] + b * m2[r][c]:
                return _result("j_linearity", False,
                               f"linearity broken at ({r}, {c})")
    return _result("j_linearity", True)


def check_oracle_equivalence(alg):
    direct = abelian_factor(alg)
    oracle = oracle_abelian_factor(alg)
    return _result("oracle_equivalence", direct == oracle,
                   f"kernel route dim {direct.dim} != bracket route dim "
                   f"{oracle.dim}")


def check_center_decomposition(alg):
    derived = derived_algebra(alg)
    assembled = center(alg)
    direct = center_direct(alg)
    if assembled != direct:
        return _result("center_decomposition", False,
                       "assembled center differs from the direct kernel")
    if derived.dim == alg.nl:
        expected = alg.nl + abelian_factor(alg).dim
        if assembled.dim != expected:
            return _result("center_decomposition", False,
                           "center dimension bookkeeping failed")
    return _result("center_decomposition", True)


def check_support_span(g, alg):
    support = abelian_support(g)
    cols = {alg.graph.vertex_index[v] for v in support}
    for row in abelian_factor(alg).basis():
        for i, x in enumerate(row):
            if x != 0 and i not in cols:
                return _result(
                    "support_span", False,
                    f"abelian factor touches {alg.vertices[i]} outside the "
                    "support set")
    if len(support) <= 1 and abelian_factor(alg).dim != 0:
        return _result("support_span", False,
                       "tiny support set must force a trivial factor")
    return _result("support_span", True)


def check_odd_single_label(g, alg):
    if len(g.vertices) % 2 == 1 and len(g.labels) == 1:
        if abelian_factor(alg).dim < 1:
            return _result("odd_single_label", False,
                           "odd vertex count with one label must give a "
                           "nontrivial factor")
    return _result("odd_single_label", True)


def check_class_sums(g, alg):
    sums = class_sums(g)
    rows = [split_named(alg, vec)[0] for vec in sums]
    spanned = Subspace(alg.nv, rows, ambient="V")
    ok = spanned == abelian_factor(alg)
    return _result("class_sums_span", ok,
                   "class sums do not span the abelian factor")


def check_action_matrix(g, alg):
    for z in g.labels:
        unit = [Fraction(0)] * alg.nl
        unit[g.label_index[z]] = Fraction(1)
        if j_via_action(g, z) != j_matrix(alg, unit).rows():
            return _result("action_matrix", False,
                           f"action route disagrees for label {z}")
    return _result("action_matrix", True)


def check_action_inverse(g):
    for z in g.labels:
        for v in g.vertices:
            if act(g, z, act(g, z, v, 1), -1) != v:
                return _result("action_inverse", False,
                               f"inverse action failed at ({z}, {v})")
    return _result("action_inverse", True)


def run_checks(g, alg=None):
    """Full suite for one graph; Schreier and simple-only checks are
    included when applicable."""
    if alg is None:
        alg = build_algebra(g)
    diag = diagnostics(g)
    results = [
        check_skew_symmetry(alg),
        check_two_step(alg),
        check_pairing_identity(alg),
        check_j_linearity(alg),
        check_oracle_equivalence(alg),
        check_center_decomposition(alg),
    ]
    if diag.simple:
        results.append(check_support_span(g, alg))
        results.append(check_odd_single_label(g, alg))
    if diag.schreier:
        results.append(check_class_sums(g, alg))
        results.append(check_action_matrix(g, alg))
        results.append(check_action_inverse(g))
    return results
