"""Command-line interface: every verification as a reproducible run.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 all assertions
passed, 1 a verified claim failed, 2 usage or domain error.  The only
environment knob is KNESER_ORDER_CAP, which overrides the group-closure cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .autgroup import automorphism_group
from .connectivity import menger_certificate, vertex_connectivity
from .dihedral import explicit_iso_Hn1, left_regular_subgroup
from .errors import (
    BKneserError,
    DomainError,
    NeedEnumerationError,
    OrderCapExceeded,
    VerificationError,
)
from .kneser import build_bipartite_kneser, verify_family_counts
from .perms import (
    DEFAULT_ORDER_CAP,
    PermutationGroup,
    group_closure,
    is_regular_action,
    known_generators,
)
from .subsets import binomial
from .symmetry import (
    explore_question1,
    explore_question2,
    question2_table,
    transitivity_report,
)


def _order_cap() -> int:
    raw = os.environ.get("KNESER_ORDER_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise DomainError(f"KNESER_ORDER_CAP must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise DomainError(f"KNESER_ORDER_CAP must be positive, got {cap}")
    return cap


def _emit(payload: dict, out: Optional[str]) -> None:
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_build(args: argparse.Namespace) -> int:
    kg = build_bipartite_kneser(args.n, args.k, allow_null=args.allow_null)
    if args.format == "dot":
        text = kg.graph.to_dot()
        if args.out is None:
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
    else:
        _emit(kg.graph.to_json_dict(), args.out)
    return 0


def cmd_props(args: argparse.Namespace) -> int:
    kg = build_bipartite_kneser(args.n, args.k)
    report = verify_family_counts(kg)
    payload = {
        "vertices": report.vertices,
        "edges": report.edges,
        "degree": report.degree,
        "bipartition": list(report.part_sizes),
        "diameter": kg.graph.diameter(),
    }
    _emit(payload, None)
    return 0


def _known_group(kg) -> PermutationGroup:
    gens = known_generators(kg)
    return PermutationGroup(generators=gens, degree=kg.vertex_count)


def cmd_aut(args: argparse.Namespace) -> int:
    cap = _order_cap()
    kg = build_bipartite_kneser(args.n, args.k)
    payload: dict = {}
    if args.method in ("engine", "both"):
        engine_group = automorphism_group(kg.graph, order_cap=cap)
    if args.method in ("generators", "both"):
        generator_group = group_closure(known_generators(kg), order_cap=cap)

    if args.method == "engine":
        payload["order"] = engine_group.order
        payload["generators"] = [str(g) for g in engine_group.generators]
    elif args.method == "generators":
        payload["order"] = generator_group.order
        payload["generators"] = [str(g) for g in generator_group.generators]
    else:
        agree = set(engine_group.elements) == set(generator_group.elements)
        if not agree:
            raise VerificationError(
                f"engine group (order {engine_group.order}) differs from the "
                f"closure of the known generators (order {generator_group.order})"
            )
        payload["order"] = engine_group.order
        payload["agree"] = True
        payload["generators"] = [str(g) for g in engine_group.generators]
    _emit(payload, None)
    return 0


def cmd_transitivity(args: argparse.Namespace) -> int:
    kg = build_bipartite_kneser(args.n, args.k)
    report = transitivity_report(kg.graph, _known_group(kg))
    full = report.as_dict()
    if args.level == "all":
        payload = full
    else:
        orbit_key = {
            "vertex": "vertices",
            "edge": "edges",
            "arc": "arcs",
            "distance": "ordered_pairs",
        }[args.level]
        payload = {
            args.level: full[args.level],
            "orbits": {orbit_key: full["orbits"][orbit_key]},
        }
    _emit(payload, None)
    return 0


def cmd_connectivity(args: argparse.Namespace) -> int:
    kg = build_bipartite_kneser(args.n, args.k)
    kappa = vertex_connectivity(kg.graph)
    expected = binomial(args.n - args.k, args.k)
    payload: dict = {"kappa": kappa, "expected": expected, "match": kappa == expected}
    if args.certificate:
        # Vertex 0 and its complement partner are never adjacent when n > 2k.
        u, v = 0, kg.side_size
        payload["certificate"] = menger_certificate(kg.graph, u, v)
    if kappa != expected:
        _emit(payload, None)
        raise VerificationError(
            f"connectivity {kappa} does not match the degree bound {expected}"
        )
    _emit(payload, None)
    return 0


def cmd_cayley_check(args: argparse.Namespace) -> int:
    iso = explicit_iso_Hn1(args.n)
    subgroup = left_regular_subgroup(args.n, iso)
    regular = is_regular_action(subgroup, iso.kneser.vertex_count)
    if not regular:
        raise VerificationError("transported left-regular action is not regular")
    payload = {
        "n": args.n,
        "vertices": iso.kneser.vertex_count,
        "edges": iso.kneser.graph.edge_count,
        "isomorphic": True,
        "left_regular_order": subgroup.order,
        "regular_action": True,
    }
    _emit(payload, None)
    return 0


def cmd_explore(args: argparse.Namespace) -> int:
    cap = _order_cap()
    if args.question == 2:
        nmax = args.nmax if args.nmax is not None else 6
        rows = explore_question2(nmax, args.kmax, order_cap=cap)
        if args.format == "text":
            sys.stdout.write(question2_table(rows))
        else:
            payload = {
                "question": 2,
                "nmax": nmax,
                "rows": [r.as_dict() for r in rows],
                "note": "evidence only: equality on these instances proves nothing "
                        "about unlisted (n, k)",
            }
            _emit(payload, None)
    else:
        nmax = args.nmax if args.nmax is not None else 5
        rows = explore_question1(nmax, args.kmax, order_cap=cap)
        payload = {
            "question": 1,
            "nmax": nmax,
            "generator_bound": 2,
            "rows": [r.as_dict() for r in rows],
            "caveat": "only subgroups generated by at most 2 elements were searched; "
                      "a miss is not a proof of non-Cayley-ness",
        }
        if args.format == "text":
            for row in rows:
                sys.stdout.write(
                    f"H({row.n},{row.k}): |Aut|={row.aut_order} {row.verdict}\n"
                )
            sys.stdout.write(payload["caveat"] + "\n")
        else:
            _emit(payload, None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkneser",
        description="Build bipartite Kneser graphs and verify their algebraic properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit H(n,k) as JSON or DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--allow-null", action="store_true")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("props", help="counts, degree, bipartition, diameter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("aut", help="automorphism group order and generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["engine", "generators", "both"], default="both")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("transitivity", help="transitivity booleans and orbit counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--level", choices=["vertex", "edge", "arc", "distance", "all"], default="all"
    )
    p.set_defaults(func=cmd_transitivity)

    p = sub.add_parser("connectivity", help="vertex connectivity against the degree bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("cayley-check", help="H(n,1) vs the dihedral Cayley graph")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cayley_check)

    p = sub.add_parser("explore", help="bounded searches for the two open questions")
    p.add_argument("--question", type=int, choices=[1, 2], required=True)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_explore)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"claim failed: {exc}", file=sys.stderr)
        return 1
    except (DomainError, OrderCapExceeded, NeedEnumerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BKneserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
