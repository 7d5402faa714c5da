"""Command-line front end.

Exit codes: 0 pass, 1 violation or cross-check mismatch, 2 usage error,
3 instance skipped because it exceeds an oracle limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from idealgraph.errors import NotAModuleError, OracleLimitError
from idealgraph.families import (
    CHI_ORACLE_LIMIT,
    FAMILY_LIMIT,
    OMEGA_ORACLE_LIMIT,
    chi_oracle,
    chi_via_pairing,
    closed_form_odd_exponents,
    family_to_json,
    omega_lower_bound,
    omega_oracle,
    omega_via_families,
    weakly_perfect_condition,
)
from idealgraph.graph import (
    build_graph,
    build_truncated_z_graph,
    encode_extended,
    graph_to_dict,
    isolated_indices,
    to_dot,
    to_json,
)
from idealgraph.perfect import DEFAULT_HOLE_LIMIT, perfectness_report
from idealgraph.verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SKIP = 0, 1, 2, 3


def _emit(doc: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(doc))
    else:
        print(text)


def cmd_graph(args) -> int:
    g = build_graph(args.m, args.n)
    sys.stdout.write(to_dot(g) if args.format == "dot" else to_json(g) + "\n")
    return EXIT_OK


def cmd_zgraph(args) -> int:
    g = build_truncated_z_graph(args.n, args.bound)
    sys.stdout.write(to_dot(g) if args.format == "dot" else to_json(g) + "\n")
    return EXIT_OK


def cmd_stats(args) -> int:
    g = build_graph(args.m, args.n)
    st = g.stats
    doc = {"m": args.m, "n": args.n, **st.to_json(), "isolated": g.values(isolated_indices(g))}
    diam = {None: "empty"}.get(st.diameter, encode_extended(st.diameter))
    text = (
        f"G_{args.n}(Z_{args.m}): {st.vertex_count} vertices, {st.edge_count} edges, "
        f"{st.component_count} components, diameter {diam}, girth {encode_extended(st.girth)}, "
        f"regular={st.is_regular}, complete={st.is_complete}, isolated={doc['isolated']}"
    )
    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_omega(args) -> int:
    g = build_graph(args.m, args.n)
    pair = g.pair
    doc = {"m": args.m, "n": args.n, "method": args.method, "omega": {}}
    if args.method in ("families", "both"):
        fam = omega_via_families(pair, args.family_limit)
        doc["omega"]["families"] = fam.value
        doc["witness_family"] = family_to_json(pair, fam.family)
        doc["clique"] = g.values(fam.clique.vertices)
    if args.method in ("oracle", "both"):
        value, cert = omega_oracle(g, args.omega_limit)
        doc["omega"]["oracle"] = value
        doc.setdefault("clique", g.values(cert.vertices))
    doc["lower_bound"] = omega_lower_bound(pair)
    doc["closed_form"] = closed_form_odd_exponents(pair)
    values = set(doc["omega"].values())
    if doc["closed_form"] is not None:
        values.add(doc["closed_form"])
    doc["match"] = len(values) == 1
    parts = " ".join(f"{k}={v}" for k, v in doc["omega"].items())
    text = f"omega {parts}" + (" match" if doc["match"] else " MISMATCH")
    text += f"\nclique: {doc['clique']}"
    if "witness_family" in doc:
        text += f"\nfamily: {doc['witness_family']}"
    _emit(doc, args.format, text)
    return EXIT_OK if doc["match"] else EXIT_FAIL


def cmd_chi(args) -> int:
    g = build_graph(args.m, args.n)
    pair = g.pair
    exact_regime = weakly_perfect_condition(pair)
    doc = {"m": args.m, "n": args.n, "method": args.method, "chi": {}}
    if args.method in ("pairing", "both"):
        cert = chi_via_pairing(pair, g, args.family_limit)
        doc["chi"]["pairing"] = cert.count
        doc["pairing_complete"] = cert.pairing_complete
        doc["coloring"] = list(cert.colors)
    if args.method in ("oracle", "both"):
        value, ocert = chi_oracle(g, args.chi_limit)
        doc["chi"]["oracle"] = value
        doc.setdefault("coloring", list(ocert.colors))
    doc["closed_form"] = closed_form_odd_exponents(pair)
    doc["pairing_exact"] = exact_regime
    exact = dict(doc["chi"])
    if not exact_regime:
        # outside the sufficient condition the pairing count is only an upper bound
        exact.pop("pairing", None)
        if "pairing" in doc["chi"] and "oracle" in doc["chi"] and doc["chi"]["pairing"] < doc["chi"]["oracle"]:
            exact["pairing"] = doc["chi"]["pairing"]
    values = set(exact.values())
    if doc["closed_form"] is not None:
        values.add(doc["closed_form"])
    doc["match"] = len(values) <= 1
    parts = " ".join(f"{k}={v}" for k, v in doc["chi"].items())
    text = f"chi {parts}" + (" match" if doc["match"] else " MISMATCH")
    if not exact_regime and "pairing" in doc["chi"]:
        text += " (pairing is an upper bound here)"
    text += f"\ncoloring: {doc['coloring']}"
    _emit(doc, args.format, text)
    return EXIT_OK if doc["match"] else EXIT_FAIL


def cmd_perfect(args) -> int:
    g = build_graph(args.m, args.n)
    rep = perfectness_report(g, args.hole_limit)
    doc = {
        "m": args.m,
        "n": args.n,
        "s_prime": g.pair.s_prime,
        "closed_form": rep.closed_form,
        "hole_limit": args.hole_limit,
        "hole_found": rep.hole_found,
        "antihole_found": rep.antihole_found,
        "hole": g.values(rep.hole) if rep.hole else None,
        "antihole": g.values(rep.antihole) if rep.antihole else None,
        "consistent": rep.consistent,
    }
    verdict = "perfect" if rep.closed_form else "not perfect"
    lines = [f"G_{args.n}(Z_{args.m}): {verdict} (s'={g.pair.s_prime})"]
    if rep.hole:
        lines.append(f"odd hole C{len(rep.hole)}: " + " -- ".join(g.name_of(i) for i in rep.hole))
    if rep.antihole:
        lines.append(f"odd antihole C{len(rep.antihole)}: " + " -- ".join(g.name_of(i) for i in rep.antihole))
    if not rep.hole and not rep.antihole:
        lines.append(f"no odd hole or antihole up to length {args.hole_limit}")
    lines.append("consistent" if rep.consistent else "INCONSISTENT")
    _emit(doc, args.format, "\n".join(lines))
    return EXIT_OK if rep.consistent else EXIT_FAIL


def cmd_verify(args) -> int:
    reports = run_suite(
        args.suite,
        args.max_m,
        jobs=args.jobs,
        hole_limit=args.hole_limit,
        family_limit=args.family_limit,
        omega_limit=args.omega_limit,
        chi_limit=args.chi_limit,
    )
    for rep in reports:
        if args.format == "jsonl":
            sys.stdout.write(rep.to_jsonl())
        else:
            print(rep.to_text())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _odd(text: str) -> int:
    k = int(text)
    if k < 5 or k % 2 == 0:
        raise argparse.ArgumentTypeError("hole limit must be an odd integer >= 5")
    return k


def _at_least_two(text: str) -> int:
    k = int(text)
    if k < 2:
        raise argparse.ArgumentTypeError("value must be an integer >= 2")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealgraph",
        description="Z_n-intersection graphs of ideals of Z_m: construction, invariants, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("--m", type=_at_least_two, required=True)
        p.add_argument("--n", type=_at_least_two, required=True)

    def limits(p):
        p.add_argument("--family-limit", type=int, default=FAMILY_LIMIT)
        p.add_argument("--omega-limit", type=int, default=OMEGA_ORACLE_LIMIT)
        p.add_argument("--chi-limit", type=int, default=CHI_ORACLE_LIMIT)

    p = sub.add_parser("graph", help="serialize G_n(Z_m)")
    pair_args(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("zgraph", help="serialize a finite window of G_{Z_n}(Z)")
    p.add_argument("--n", type=_at_least_two, required=True)
    p.add_argument("--bound", type=_at_least_two, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_zgraph)

    p = sub.add_parser("stats", help="metric invariants")
    pair_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("omega", help="clique number")
    pair_args(p)
    p.add_argument("--method", choices=("families", "oracle", "both"), default="families")
    p.add_argument("--format", choices=("text", "json"), default="text")
    limits(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("chi", help="chromatic number")
    pair_args(p)
    p.add_argument("--method", choices=("pairing", "oracle", "both"), default="pairing")
    p.add_argument("--format", choices=("text", "json"), default="text")
    limits(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("perfect", help="perfectness: closed form and odd hole search")
    pair_args(p)
    p.add_argument("--hole-limit", type=_odd, default=DEFAULT_HOLE_LIMIT)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("verify", help="run theorem sweeps")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-m", type=_at_least_two, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--hole-limit", type=_odd, default=DEFAULT_HOLE_LIMIT)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    limits(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAModuleError:
        print("error: n must divide m", file=sys.stderr)
        return EXIT_USAGE
    except OracleLimitError as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_SKIP


if __name__ == "__main__":
    sys.exit(main())
