"""Exhaustive and randomized enumeration of family specs, with every row
checked prediction-against-oracle.

Rows carry an agreement flag instead of raising so a census run can report
all disagreements; callers (CLI, acceptance tests) fail when any flag is
false.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import abelian_factor, build_algebra, center_perp, split_named
from .checks import run_checks
from .families import (
    CycleSpec,
    StarSpec,
    make_cycle,
    make_double_star,
    make_star,
    predict_cycle_multi_label,
    predict_cycle_single_label,
    predict_double_star,
    predict_star,
)
from .graphs import abelian_support
from .rational import Subspace, primitive
from .spectra import classify


@dataclass(frozen=True)
class CensusRow:
    descriptor: str
    abelian_dim: int
    status: str | None
    support_size: int | None
    agree: bool
    detail: str = ""

    def to_json(self):
        out = {
            "spec": self.descriptor,
            "abelian_dim": self.abelian_dim,
            "agree": self.agree,
        }
        if self.status is not None:
            out["status"] = self.status
        if self.support_size is not None:
            out["support_size"] = self.support_size
        if self.detail:
            out["detail"] = self.detail
        return out


def subspace_from_named(alg, vectors):
    rows = [split_named(alg, vec)[0] for vec in vectors]
    return Subspace(alg.nv, rows, ambient="V")


def _row(g, alg, ab, descriptor, agree, detail, status_wanted, invariants):
    problems = [] if agree else [detail]
    if invariants:
        for res in run_checks(g, alg):
            if not res.passed:
                problems.append(f"{res.name}: {res.detail}")
    support = None
    if g.is_simple():
        support = len(abelian_support(g))
    status = classify(alg).status if status_wanted else None
    return CensusRow(
        descriptor=descriptor,
        abelian_dim=ab.dim,
        status=status,
        support_size=support,
        agree=not problems,
        detail="; ".join(problems),
    )


# -- stars ----------------------------------------------------------------


def multiplicity_lists(max_k, max_m):
    """All nonincreasing multiplicity tuples with at most max_k entries."""
    out = []

    def grow(prefix, cap):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_k:
            return
        for m in range(min(cap, max_m), 0, -1):
            grow(prefix + [m], m)

    grow([], max_m)
    out.sort(key=lambda t: (len(t), t))
    return out


def random_delta(rng, mults):
    return tuple(tuple(rng.choice((1, -1)) for _ in range(m))
                 for m in mults)


def star_specs(max_k, max_m, count, seed):
    """At least ``count`` specs covering every multiplicity list, with
    seeded random orientations."""
    rng = random.Random(seed)
    lists = multiplicity_lists(max_k, max_m)
    specs = []
    while len(specs) < count:
        for mults in lists:
            specs.append(StarSpec(mults, delta=random_delta(rng, mults)))
    return specs


def _delta_str(delta):
    return "".join("+" if s == 1 else "-" for row in delta for s in row)


def check_star_spec(spec):
    """(graph, algebra, factor, agree, detail) for one star spec."""
    g = make_star(spec)
    alg = build_algebra(g)
    pred = predict_star(spec)
    ab = abelian_factor(alg)
    problems = []
    if ab.dim != pred.abelian_dim:
        problems.append(f"dim {ab.dim} != predicted {pred.abelian_dim}")
    predicted_span = subspace_from_named(alg, pred.abelian_basis)
    if predicted_span != ab:
        problems.append("predicted basis does not span the factor")
    for vec in pred.abelian_basis:
        if not ab.contains(split_named(alg, vec)[0]):
            problems.append("predicted basis vector outside the factor")
            break
    perp = center_perp(alg)
    expected = [(primitive(split_named(alg, vec)[0]), norm)
                for vec, norm in pred.center_perp]
    actual = [(list(v), n) for v, n in perp]
    if expected != actual:
        problems.append("center complement mismatch")
    return g, alg, ab, not problems, "; ".join(problems)


def census_stars(max_k=3, max_m=3, count=None, seed=0, classify_rows=False,
                 invariants=False):
    if count is None:
        count = len(multiplicity_lists(max_k, max_m))
    for spec in star_specs(max_k, max_m, count, seed):
        g, alg, ab, agree, detail = check_star_spec(spec)
        descriptor = (f"star m={spec.multiplicities} "
                      f"delta={_delta_str(spec.delta)}")
        yield _row(g, alg, ab, descriptor, agree, detail,
                   classify_rows, invariants)


# -- double stars ----------------------------------------------------------


def double_star_cases(max_k, max_m, seed):
    rng = random.Random(seed)
    lists = multiplicity_lists(max_k, max_m)
    for m1 in lists:
        for m2 in lists:
            s1 = StarSpec(m1, delta=random_delta(rng, m1))
            s2 = StarSpec(m2, delta=random_delta(rng, m2), prefix="w")
            bridge = f"Z{rng.randint(1, max(len(m1), len(m2)))}"
            yield s1, s2, bridge, rng.choice((1, -1))


def check_double_star(spec1, spec2, bridge_label, bridge_dir):
    g = make_double_star(spec1, spec2, bridge_label, bridge_dir)
    alg = build_algebra(g)
    pred = predict_double_star(spec1, spec2)
    ab = abelian_factor(alg)
    problems = []
    if ab.dim != pred.abelian_dim:
        problems.append(f"dim {ab.dim} != predicted {pred.abelian_dim}")
    if subspace_from_named(alg, pred.abelian_basis) != ab:
        problems.append("predicted span mismatch")
    return g, alg, ab, not problems, "; ".join(problems)


def census_double_stars(max_k=3, max_m=3, seed=0, classify_rows=False,
                        invariants=False):
    for s1, s2, bridge, direction in double_star_cases(max_k, max_m, seed):
        g, alg, ab, agree, detail = check_double_star(s1, s2, bridge,
                                                      direction)
        descriptor = (f"double-star m1={s1.multiplicities} "
                      f"m2={s2.multiplicities} bridge={bridge}"
                      f"{'+' if direction == 1 else '-'}")
        yield _row(g, alg, ab, descriptor, agree, detail,
                   classify_rows, invariants)


# -- cycles ----------------------------------------------------------------


def orientation_tuples(n):
    return product((1, -1), repeat=n)


def check_single_label_cycle(spec):
    g = make_cycle(spec)
    alg = build_algebra(g)
    pred = predict_cycle_single_label(spec)
    ab = abelian_factor(alg)
    problems = []
    if ab.dim != pred.abelian_dim:
        problems.append(f"dim {ab.dim} != predicted {pred.abelian_dim}")
    if subspace_from_named(alg, pred.abelian_basis) != ab:
        problems.append("signed basis mismatch")
    m = spec.opposite_count
    expected_dim = (1 if spec.n % 2 else (0 if m % 2 else 2))
    if pred.abelian_dim != expected_dim:
        problems.append("parity rule violated by the prediction itself")
    return g, alg, ab, not problems, "; ".join(problems)


def census_single_label_cycles(max_n=8, min_n=3, classify_rows=False,
                               invariants=False):
    for n in range(min_n, max_n + 1):
        for orient in orientation_tuples(n):
            spec = CycleSpec(n, orientations=orient)
            g, alg, ab, agree, detail = check_single_label_cycle(spec)
            descriptor = (f"cycle n={n} "
                          f"orient={_delta_str((orient,))} labels=Z1")
            yield _row(g, alg, ab, descriptor, agree, detail,
                       classify_rows, invariants)


def label_sequences_up_to_rotation(n, max_labels):
    """Canonical representatives (lexicographically least rotation) of all
    label sequences of length n over Z1..Zp."""
    alphabet = [f"Z{i}" for i in range(1, max_labels + 1)]
    seen = set()
    for seq in product(alphabet, repeat=n):
        canon = min(seq[i:] + seq[:i] for i in range(n))
        if canon not in seen:
            seen.add(canon)
            yield canon


def check_multi_label_cycle(spec):
    g = make_cycle(spec)
    alg = build_algebra(g)
    pred = predict_cycle_multi_label(spec)
    ab = abelian_factor(alg)
    problems = []
    if pred.nontrivial != (ab.dim > 0):
        problems.append(
            f"even-run criterion says {pred.nontrivial}, oracle dim "
            f"{ab.dim}")
    if pred.witness is not None:
        if not ab.contains(split_named(alg, pred.witness)[0]):
            problems.append("witness not in the abelian factor")
    if pred.at_most_one_long_run and ab.dim > 0:
        problems.append("single-long-run shortcut contradicts the oracle")
    if spec.n % 2 == 1 and ab.dim > 0:
        problems.append("odd multi-label cycle must be trivial")
    return g, alg, ab, not problems, "; ".join(problems)


def census_multi_label_cycles(max_n=8, min_n=3, max_labels=3,
                              classify_rows=False, invariants=False):
    for n in range(min_n, max_n + 1):
        for seq in label_sequences_up_to_rotation(n, max_labels):
            if len(set(seq)) < 2:
                continue
            spec = CycleSpec(n, labels=seq)
            g, alg, ab, agree, detail = check_multi_label_cycle(spec)
            descriptor = f"cycle n={n} labels={''.join(seq)} standard"
            yield _row(g, alg, ab, descriptor, agree, detail,
                       classify_rows, invariants)


FAMILIES = {
    "star": census_stars,
    "double-star": census_double_stars,
    "cycle": census_single_label_cycles,
    "cycle-labels": census_multi_label_cycles,
}


def estimate_size(family, **kwargs):
    if family == "star":
        return kwargs.get("count") or len(multiplicity_lists(
            kwargs.get("max_k", 3), kwargs.get("max_m", 3)))
    if family == "double-star":
        return len(multiplicity_lists(kwargs.get("max_k", 3),
                                      kwargs.get("max_m", 3))) ** 2
    if family == "cycle":
        return sum(2 ** n for n in range(kwargs.get("min_n", 3),
                                         kwargs.get("max_n", 8) + 1))
    if family == "cycle-labels":
        p = kwargs.get("max_labels", 3)
        return sum(p ** n // max(n, 1) + p
                   for n in range(kwargs.get("min_n", 3),
                                  kwargs.get("max_n", 8) + 1))
    raise ValueError(f"unknown family {family!r}")
