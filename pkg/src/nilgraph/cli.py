"""Command-line interface.

Exit codes form a stable contract: 0 success, 1 invariant disagreement,
2 input error.  All machine output is JSON (one object, or one object per
line for census rows); ``--pretty`` switches to human-readable tables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import census as census_mod
from .algebra import build_algebra, report
from .checks import run_checks
from .errors import GraphError, NilgraphError
from .families import (
    CycleSpec,
    StarSpec,
    family_from_json,
    make_cycle,
    make_double_star,
    make_path,
    make_star,
)
from .graphs import (
    abelian_support,
    diagnostics,
    parse_graph,
    serialize_graph,
    to_dot,
)
from .schreier import class_sums, two_path_classes
from .spectra import (
    DEFAULT_EXPANSION_BOUND,
    DEFAULT_SAMPLES,
    char_poly_at,
    classify,
)

CENSUS_ROW_CAP = 200_000


def _default_seed():
    env = os.environ.get("NILGRAPH_SEED")
    return int(env) if env else 0


def _load_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}")
    return parse_graph(text)


def _input_error(message):
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(obj, pretty):
    if pretty:
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def cmd_info(args):
    g = _load_graph(args.file)
    alg = build_algebra(g)
    out = report(alg)
    diag = diagnostics(g)
    out["diagnostics"] = {
        "connected": diag.connected,
        "simple": diag.simple,
        "schreier": diag.schreier,
        "max_degree": diag.max_degree,
    }
    if diag.simple:
        order = g.vertex_index
        out["abelian_support"] = sorted(abelian_support(g), key=order.get)
    _emit(out, args.pretty)
    return 0


def cmd_classify(args):
    g = _load_graph(args.file)
    alg = build_algebra(g)
    verdict = classify(alg, sample_count=args.samples, seed=args.seed,
                       expansion_bound=args.expansion_bound)
    out = verdict.to_json()
    probe = None
    for coeffs, value in verdict.witnesses:
        if value != 0:
            probe = coeffs
    if probe is None:
        probe = tuple(Fraction(1) if i == 0 else Fraction(0)
                      for i in range(alg.nl))
    out["char_poly"] = [str(c) for c in char_poly_at(alg, list(probe))]
    _emit(out, args.pretty)
    return 0


def cmd_family(args):
    try:
        g = _build_family(args)
    except (ValueError, NilgraphError) as exc:
        return _input_error(str(exc))
    text = to_dot(g) if args.emit_dot else serialize_graph(g)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_signs(text, what):
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ValueError(f"{what} must be a string of + and -")
    return signs


def _star_spec(mult_text, delta_text, prefix="v"):
    mults = tuple(int(x) for x in mult_text.split(","))
    delta = None
    if delta_text:
        flat = _parse_signs(delta_text, "--delta")
        if len(flat) != sum(mults):
            raise ValueError("--delta needs one sign per end vertex")
        delta = []
        at = 0
        for m in mults:
            delta.append(tuple(flat[at:at + m]))
            at += m
    return StarSpec(mults, delta=delta, prefix=prefix)


def _build_family(args):
    if args.spec_json:
        with open(args.spec_json, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        declared = str(doc.get("family", "")).replace("_", "-")
        if declared != args.family:
            raise ValueError(
                f"spec document is for family {declared!r}, "
                f"not {args.family!r}")
        return family_from_json(doc)
    if args.family == "star":
        return make_star(_star_spec(args.m, args.delta))
    if args.family == "double-star":
        s1 = _star_spec(args.m1, args.delta1)
        s2 = _star_spec(args.m2, args.delta2, prefix="w")
        direction = 1 if args.bridge_dir == "+" else -1
        return make_double_star(s1, s2, bridge_label=args.bridge_label,
                                bridge_dir=direction)
    if args.family == "cycle":
        if args.labels:
            labels = tuple(args.labels.split(","))
        else:
            labels = (args.label,) * args.n
        orient = None
        if args.orient:
            orient = tuple(_parse_signs(args.orient, "--orient"))
        return make_cycle(CycleSpec(args.n, orientations=orient,
                                    labels=labels))
    if args.family == "path":
        return make_path(args.n, label=args.label)
    raise ValueError(f"unknown family {args.family!r}")


def cmd_schreier(args):
    g = _load_graph(args.file)
    partition = two_path_classes(g)
    out = {"classes": [list(c) for c in partition.classes]}
    if args.what == "xi":
        out["xi"] = [[[str(c), v] for v, c in vec.items()]
                     for vec in class_sums(g)]
    _emit(out, args.pretty)
    return 0


def cmd_census(args):
    kwargs = {"classify_rows": args.classify, "invariants": args.invariants}
    if args.family == "star":
        kwargs.update(max_k=args.max_k, max_m=args.max_m, seed=args.seed)
        if args.count:
            kwargs.update(count=args.count)
    elif args.family == "double-star":
        kwargs.update(max_k=args.max_k, max_m=args.max_m, seed=args.seed)
    elif args.family == "cycle":
        kwargs.update(max_n=args.max_n, min_n=args.min_n)
    elif args.family == "cycle-labels":
        kwargs.update(max_n=args.max_n, min_n=args.min_n,
                      max_labels=args.max_labels)
    size = census_mod.estimate_size(args.family, **{
        k: v for k, v in kwargs.items()
        if k in ("max_k", "max_m", "max_n", "min_n", "max_labels", "count")})
    if size > CENSUS_ROW_CAP and not args.force:
        return _input_error(
            f"census would emit about {size} rows (cap {CENSUS_ROW_CAP}); "
            "narrow the range or pass --force")
    runner = census_mod.FAMILIES[args.family]
    failures = 0
    for row in runner(**kwargs):
        if not row.agree:
            failures += 1
        if args.pretty:
            mark = "ok " if row.agree else "FAIL"
            status = f" {row.status}" if row.status else ""
            print(f"{mark} dim={row.abelian_dim}{status} {row.descriptor}"
                  + (f"  [{row.detail}]" if row.detail else ""))
        else:
            print(json.dumps(row.to_json(), separators=(",", ":")))
    return 1 if failures else 0


def cmd_verify(args):
    g = _load_graph(args.file)
    results = run_checks(g)
    out = {
        "checks": [
            {"name": r.name, "passed": r.passed,
             **({"detail": r.detail} if r.detail else {})}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    _emit(out, args.pretty)
    return 0 if out["passed"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilgraph",
        description="Nilpotent algebra invariants of edge-labeled digraphs",
    )
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of compact JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dimensions, abelian factor, center "
                                    "complement of one graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="singularity verdict")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--expansion-bound", type=int,
                   default=DEFAULT_EXPANSION_BOUND)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("family", help="emit a family graph in text form")
    p.add_argument("family",
                   choices=["star", "cycle", "double-star", "path"])
    p.add_argument("--m", default="1", help="star multiplicities, e.g. 3,2,1")
    p.add_argument("--delta", default="", help="star orientations as +/-")
    p.add_argument("--m1", default="1")
    p.add_argument("--delta1", default="")
    p.add_argument("--m2", default="1")
    p.add_argument("--delta2", default="")
    p.add_argument("--bridge-label", default="Z1")
    p.add_argument("--bridge-dir", choices=["+", "-"], default="+")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--label", default="Z1")
    p.add_argument("--labels", default="",
                   help="cycle labels, comma separated, one per edge")
    p.add_argument("--orient", default="", help="cycle orientations as +/-")
    p.add_argument("--spec-json", default="",
                   help="read the family spec from a JSON document")
    p.add_argument("--emit", default="", help="write to a file")
    p.add_argument("--emit-dot", action="store_true",
                   help="GraphViz output instead of the text format")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("schreier", help="two-path classes and the class-sum "
                                        "basis")
    p.add_argument("what", choices=["classes", "xi"])
    p.add_argument("file")
    p.set_defaults(func=cmd_schreier)

    p = sub.add_parser("census", help="enumerate a family and check "
                                      "predictions against the oracle")
    p.add_argument("--family", required=True,
                   choices=sorted(census_mod.FAMILIES))
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-labels", type=int, default=3)
    p.add_argument("--count", type=int, default=0,
                   help="minimum number of star specs")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--classify", action="store_true",
                   help="add a singularity verdict to each row")
    p.add_argument("--invariants", action="store_true",
                   help="run the full invariant suite on each graph")
    p.add_argument("--force", action="store_true",
                   help="ignore the census size cap")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run every applicable invariant check")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NilgraphError as exc:
        return _input_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
