"""Command-line surface: enumeration, polynomials, graphs, projections, verification.

Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
4 verification failure.  Output is deterministic: identical invocations
produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import desing, geometry, momentgraph, projections, verify
from .core import InstanceError, ParahoricData, VerificationError, make_parahoric
from .fixedpoints import (
    all_patterns,
    energy_table,
    enumerate_fixed_points,
    stratum_key,
)
from .oracle import BudgetExceededError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _parse_vertex_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InstanceError(f"cannot parse vertex set {text!r}") from exc


def _instance(args) -> ParahoricData:
    return make_parahoric(args.n, args.k, args.omega, _parse_vertex_set(args.s))


def _pattern_str(J) -> str:
    return "(" + ",".join("{" + ",".join(map(str, comp)) + "}" for comp in J) + ")"


def _lvector_json(ell) -> dict:
    return {str(label): l for label, l in enumerate(ell, start=1)}


def _instance_json(P: ParahoricData) -> dict:
    return {"n": P.n, "k": P.k, "omega": P.omega, "S": list(P.S)}


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_enumerate(args) -> int:
    P = _instance(args)
    pairs = enumerate_fixed_points(P)
    table = energy_table(P)
    if args.format == "json":
        doc = {
            "instance": _instance_json(P),
            "patterns": [
                {
                    "J": [list(comp) for comp in J],
                    "lvector": _lvector_json(ell),
                    "energy": table[J],
                    "stratum_key": [list(pair) for pair in stratum_key(P, J)],
                }
                for ell, J in pairs
            ],
        }
        sys.stdout.write(_dump(doc))
    else:
        for ell, J in pairs:
            key = stratum_key(P, J)
            sys.stdout.write(
                f"J={_pattern_str(J)} l={ell} e={table[J]} stratum={list(key)}\n"
            )
    return EXIT_OK


def cmd_poincare(args) -> int:
    P = _instance(args)
    sys.stdout.write(geometry.poly_to_string(geometry.poincare(P)) + "\n")
    return EXIT_OK


def _graph_json(P: ParahoricData, G) -> dict:
    table = energy_table(P)
    return {
        "instance": _instance_json(P),
        "graph": {
            "vertices": [
                {
                    "lvector": _lvector_json(ell),
                    "J": [list(comp) for comp in J],
                    "energy": table[J],
                }
                for ell, J in zip(G.vertices, G.patterns)
            ],
            "edges": [
                {
                    "source": _lvector_json(G.vertices[e.source]),
                    "target": _lvector_json(G.vertices[e.target]),
                    "move": {
                        "donor": e.move.donor,
                        "recipient": e.move.recipient,
                        "amount": e.move.amount,
                    },
                    "character": {
                        "eps": {
                            str(i): c
                            for i, c in enumerate(e.character.eps, start=1)
                            if c
                        },
                        "delta": e.character.delta,
                    },
                }
                for e in G.edges
            ],
        },
    }


def _graph_dot(P: ParahoricData, G) -> str:
    table = energy_table(P)
    lines = ["digraph moment_graph {"]
    for ell, J in zip(G.vertices, G.patterns):
        name = _pattern_str(J)
        lines.append(f'  "{name}" [label="{name}\\nl={ell} e={table[J]}"];')
    for e in G.edges:
        src = _pattern_str(G.patterns[e.source])
        tgt = _pattern_str(G.patterns[e.target])
        lines.append(f'  "{src}" -> "{tgt}" [label="{e.character.render()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_moment_graph(args) -> int:
    P = _instance(args)
    G = momentgraph.build_graph(P)
    if args.format == "json":
        sys.stdout.write(_dump(_graph_json(P, G)))
    else:
        sys.stdout.write(_graph_dot(P, G))
    return EXIT_OK


def cmd_components(args) -> int:
    P = _instance(args)
    comps = geometry.irr_components(P)
    if args.format == "json":
        doc = {
            "instance": _instance_json(P),
            "components": [
                {"I": list(c.I), "top": [list(comp) for comp in c.top]} for c in comps
            ],
        }
        sys.stdout.write(_dump(doc))
    else:
        for c in comps:
            sys.stdout.write(f"I={list(c.I)} top={_pattern_str(c.top)}\n")
    return EXIT_OK


def cmd_project(args) -> int:
    P = _instance(args)
    S2 = _parse_vertex_set(args.to)
    for J in all_patterns(P):
        sys.stdout.write(
            f"{_pattern_str(J)} -> {_pattern_str(projections.project_pattern(P, S2, J))}\n"
        )
    return EXIT_OK


def cmd_lift(args) -> int:
    P = _instance(args)
    target = _parse_vertex_set(args.to)
    for J in all_patterns(P):
        sys.stdout.write(
            f"{_pattern_str(J)} -> {_pattern_str(projections.lift_pattern(P, target, J))}\n"
        )
    return EXIT_OK


def cmd_autdim(args) -> int:
    P = _instance(args)
    formula = geometry.aut_dim_formula(P)
    if args.verify:
        exact = geometry.aut_dim_oracle(P)
        status = "OK" if formula == exact else "MISMATCH"
        sys.stdout.write(f"formula {formula}, oracle {exact}, {status}\n")
        return EXIT_OK if formula == exact else EXIT_VERIFY
    sys.stdout.write(f"formula {formula}\n")
    return EXIT_OK


def cmd_desing(args) -> int:
    P = _instance(args)
    expected = P.omega * P.k * (P.n - P.k)
    code = EXIT_OK
    for comp in geometry.irr_components(P):
        points = desing.hat_fixed_points(P, comp.I, budget=args.budget)
        dims = sorted(
            {desing.hat_point_tangent_dim(P, pt) for pt in points}
        )
        images = sorted({desing.restrict_point(P, pt) for pt in points})
        sys.stdout.write(
            f"I={list(comp.I)} top={_pattern_str(comp.top)} "
            f"hat_fixed_points={len(points)} tangent_dims={dims} "
            f"smooth={'yes' if dims in ([], [expected]) else 'NO'}\n"
        )
        for J in images:
            sys.stdout.write(f"  image {_pattern_str(J)}\n")
        if dims not in ([], [expected]):
            code = EXIT_VERIFY
    hat_aut = desing.hat_aut_dim_oracle(P)
    base_aut = geometry.aut_dim_oracle(P)
    sys.stdout.write(f"hat_aut={hat_aut} base_aut={base_aut}\n")
    if hat_aut != base_aut:
        code = EXIT_VERIFY
    return code


def cmd_verify(args) -> int:
    config = verify.VerifyConfig(
        max_n=args.max_n,
        max_omega=args.max_omega,
        oracle_max_n=min(args.oracle_max_n, args.max_n),
        desing_max_n=min(args.desing_max_n, args.max_n),
    )
    results, notes = verify.run_all(config)
    sys.stdout.write(verify.render_report(results, notes))
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--s", type=str, required=True, help="comma-separated vertex set, e.g. 1,3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivergrass",
        description="Fixed points, moment graphs and desingularizations of cyclic-quiver Grassmannians",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list fixed points with energies and strata")
    _add_instance_args(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poincare", help="print the Poincare polynomial")
    _add_instance_args(p)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("moment-graph", help="emit the moment graph as DOT or JSON")
    _add_instance_args(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_moment_graph)

    p = sub.add_parser("components", help="list irreducible components")
    _add_instance_args(p)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("project", help="project every fixed point to a smaller vertex set")
    _add_instance_args(p)
    p.add_argument("--to", type=str, required=True, help="target vertex set, subset of S")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("lift", help="lift every fixed point to a larger vertex set")
    _add_instance_args(p)
    p.add_argument("--to", type=str, required=True, help="target vertex set containing S")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("autdim", help="automorphism-group dimension")
    _add_instance_args(p)
    p.add_argument("--verify", action="store_true", help="compare with the exact oracle")
    p.set_defaults(func=cmd_autdim)

    p = sub.add_parser("desing", help="desingularization survey per component")
    _add_instance_args(p)
    p.add_argument("--budget", type=int, default=desing.DEFAULT_HAT_BUDGET)
    p.set_defaults(func=cmd_desing)

    p = sub.add_parser("verify", help="run every invariant on a grid of instances")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-omega", type=int, default=2)
    p.add_argument("--oracle-max-n", type=int, default=4)
    p.add_argument("--desing-max-n", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except VerificationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
