"""Command line front end.

Subcommands: analyze (component census), classify (ring properties),
witness (sample a stratum point and certify smoothness where the bound
applies), lss (graph orthogonality certificates from an edge list),
poset (degeneration order between strata), certify-grid (run the smooth
witness construction over every componentwise-maximal stratum).

Exit codes: 0 on success, 2 when a requested certificate fails, 1 for
usage or input errors.  Output is plain text by default; --format json
emits a deterministic envelope (sorted keys, field elements as decimal
strings), and the poset subcommand also renders graphviz with
--format dot.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .exactfield import DEFAULT_PRIME, frame_invariants, make_context
from .strata import (
    FrameSpaceParams,
    PosetRelation,
    StratumIndex,
    boundary,
    boundary_set,
    component_report,
    enumerate_domain,
    in_domain,
    maximal_strata,
    maximize_dimension,
    poset_compare,
    stratum_dimension,
)
from .thresholds import certify_lss, classify_ring, threshold_triple
from .witness import (
    SearchExhaustedError,
    boundary_smooth_witness,
    certify_smooth,
    jacobian_rank,
    sample_stratum_point,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; reserve 2 for failed
    # certificates and report usage problems with 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _resolve_prime(args) -> int:
    if args.prime is not None:
        return args.prime
    env = os.environ.get("FRAMES_PRIME")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("FRAMES_PRIME must be an integer, got %r" % env)
    return DEFAULT_PRIME


def _emit(args, envelope: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _stratum_list(strata) -> list[list[int]]:
    return [[s[0], s[1]] for s in sorted(strata)]


def _frame_payload(a) -> list[list[str]]:
    return [[str(x) for x in row] for row in a.entries]


def _frame_lines(a) -> list[str]:
    width = max((len(str(x)) for row in a.entries for x in row), default=1)
    return ["  [ " + "  ".join(str(x).rjust(width) for x in row) + " ]" for row in a.entries]


def _invariants_payload(inv) -> dict:
    return {
        "in_variety": inv.in_variety,
        "rank": inv.rank,
        "anisotropic_rank": inv.anisotropic_rank,
        "isotropic_rank": inv.isotropic_rank,
    }


def cmd_analyze(args) -> int:
    params = FrameSpaceParams(args.d, args.n)
    report = component_report(params)
    best = maximize_dimension(params)
    seg1, seg2 = boundary(params)
    envelope = {
        "command": "analyze",
        "parameters": {"d": params.d, "n": params.n},
        "report": {
            "variety_dimension": report.variety_dimension,
            "principal_dimension": report.principal_dimension,
            "is_irreducible": report.is_irreducible,
            "total_components": report.total_count,
            "maximal_dimension": best.max_value,
            "maximal_dimension_strata": _stratum_list(best.argmax),
            "components": [
                {"p": r.stratum.p, "q": r.stratum.q, "dimension": r.dimension, "count": r.count}
                for r in report.components
            ],
            "boundary": {
                seg1.kind.value: _stratum_list(seg1.points),
                seg2.kind.value: _stratum_list(seg2.points),
            },
        },
    }
    lines = [f"d={params.d} n={params.n}"]
    lines.append(f"variety dimension: {report.variety_dimension}")
    if report.principal_dimension is None:
        lines.append("principal stratum: empty (d < n)")
    else:
        lines.append(f"principal dimension: {report.principal_dimension}")
    lines.append("irreducible: %s" % ("yes" if report.is_irreducible else "no"))
    lines.append(f"components ({report.total_count} total):")
    for r in report.components:
        lines.append(
            f"  ({r.stratum.p},{r.stratum.q})  dim {r.dimension}  count {r.count}"
        )
    argmax = ", ".join("(%d,%d)" % (s[0], s[1]) for s in sorted(best.argmax))
    lines.append(f"largest stratum dimension: {best.max_value} at {argmax}")
    _emit(args, envelope, lines)
    return 0


def cmd_classify(args) -> int:
    params = FrameSpaceParams(args.d, args.n)
    report = classify_ring(params)
    triple = threshold_triple(params.n)
    envelope = {
        "command": "classify",
        "parameters": {"d": params.d, "n": params.n},
        "report": {
            "complete_intersection": report.complete_intersection,
            "gorenstein": report.gorenstein,
            "cohen_macaulay": report.cohen_macaulay,
            "equidimensional": report.equidimensional,
            "domain": report.domain,
            "normal_domain": report.normal_domain,
            "ufd": report.ufd.value,
            "reduced": report.reduced.value,
            "justifications": list(report.justifications),
            "thresholds": {
                "n": triple.n,
                "d_ci": triple.d_ci,
                "d_prime": triple.d_prime,
                "d_ufd": triple.d_ufd,
            },
        },
    }

    def yesno(flag: bool) -> str:
        return "yes" if flag else "no"

    lines = [f"d={params.d} n={params.n}"]
    lines.append("complete intersection: " + yesno(report.complete_intersection))
    lines.append("gorenstein: " + yesno(report.gorenstein))
    lines.append("cohen-macaulay: " + yesno(report.cohen_macaulay))
    lines.append("equidimensional: " + yesno(report.equidimensional))
    lines.append("domain: " + yesno(report.domain))
    lines.append("normal domain: " + yesno(report.normal_domain))
    lines.append("ufd: " + report.ufd.value)
    lines.append("reduced: " + report.reduced.value)
    lines.append(
        "thresholds for n=%d: ci >= %d, domain/normal >= %d, ufd >= %d"
        % (triple.n, triple.d_ci, triple.d_prime, triple.d_ufd)
    )
    if report.justifications:
        lines.append("notes:")
        lines.extend("  - " + j for j in report.justifications)
    _emit(args, envelope, lines)
    return 0


def cmd_witness(args) -> int:
    params = FrameSpaceParams(args.d, args.n)
    prime = _resolve_prime(args)
    ctx = make_context(prime)
    s = StratumIndex(args.p, args.q)
    if not in_domain(params, s.p, s.q):
        raise ValueError(
            "stratum (%d, %d) outside the domain for d=%d, n=%d"
            % (s.p, s.q, params.d, params.n)
        )
    on_boundary = s in boundary_set(params)
    full_rank = comb(params.n, 2)
    if on_boundary:
        a = sample_stratum_point(params, s, ctx, args.seed)
        cert = certify_smooth(params, a)
        if not cert.passed and s.q > 0:
            cert = boundary_smooth_witness(params, s, ctx, args.seed, args.trials)
        a = cert.point
        rank = cert.jacobian_rank
        cert_payload = {
            "jacobian_rank": cert.jacobian_rank,
            "required_bound": cert.required_bound,
            "passed": cert.passed,
            "trials_used": cert.trials_used,
        }
        status = 0 if cert.passed else 2
    else:
        a = sample_stratum_point(params, s, ctx, args.seed)
        rank = jacobian_rank(params, a)
        cert_payload = None
        status = 0
    inv = frame_invariants(a)
    envelope = {
        "command": "witness",
        "parameters": {"d": params.d, "n": params.n, "p": s.p, "q": s.q},
        "prime": str(prime),
        "seed": args.seed,
        "report": {
            "stratum": [s.p, s.q],
            "on_boundary": on_boundary,
            "frame": _frame_payload(a),
            "invariants": _invariants_payload(inv),
            "jacobian_rank": rank,
            "full_row_rank": full_rank,
            "smooth_by_full_rank": rank == full_rank,
            "certificate": cert_payload,
        },
    }
    lines = [
        f"d={params.d} n={params.n} stratum ({s.p},{s.q}) prime={prime} seed={args.seed}"
    ]
    lines.append("frame:")
    lines.extend(_frame_lines(a))
    lines.append(
        "invariants: %s, rank %d, anisotropic %d, isotropic %d"
        % (
            "in variety" if inv.in_variety else "NOT in variety",
            inv.rank,
            inv.anisotropic_rank,
            inv.isotropic_rank,
        )
    )
    if cert_payload is not None:
        lines.append(
            "jacobian rank %d, required %d -> certificate %s"
            % (rank, cert_payload["required_bound"], "PASSED" if cert_payload["passed"] else "FAILED")
        )
    else:
        lines.append(
            "stratum is not componentwise-maximal; the dimension bound does not certify here"
        )
        lines.append(
            "jacobian rank %d of %d%s"
            % (rank, full_rank, " -> smooth by full row rank" if rank == full_rank else "")
        )
    _emit(args, envelope, lines)
    return status


def _read_edge_file(path: str) -> list[tuple[int, int]]:
    edges = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(
                    "%s:%d: expected two vertex labels, got %r" % (path, lineno, raw.strip())
                )
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(
                    "%s:%d: vertex labels must be integers" % (path, lineno)
                )
            edges.append((u, v))
    return edges


def cmd_lss(args) -> int:
    edges = _read_edge_file(args.edges)
    if args.vertices is not None:
        vertex_count = args.vertices
    elif edges:
        vertex_count = max(max(u, v) for u, v in edges)
    else:
        raise ValueError("empty edge list; pass --vertices to set the graph size")
    if args.d is not None:
        cert = certify_lss(vertex_count, edges, args.d)
        triple = cert.minimal_d
        cert_payload = {
            "d": cert.d,
            "radical_ci": cert.radical_ci,
            "normal_domain": cert.normal_domain,
            "ufd": cert.ufd,
        }
        edge_count = cert.edge_count
    else:
        # threshold report only; still validate the edge list
        cert = certify_lss(vertex_count, edges, max(2, vertex_count))
        triple = cert.minimal_d
        cert_payload = None
        edge_count = cert.edge_count
    envelope = {
        "command": "lss",
        "parameters": {
            "vertices": vertex_count,
            "edges": edge_count,
            "d": args.d,
        },
        "report": {
            "certificate": cert_payload,
            "minimal_d": {
                "radical_ci": triple.d_ci,
                "normal_domain": triple.d_prime,
                "ufd": triple.d_ufd,
            },
        },
    }
    lines = [f"graph: {vertex_count} vertices, {edge_count} distinct edges"]
    if cert_payload is not None:
        lines.append(f"ambient dimension d={args.d}:")
        lines.append("  radical complete intersection: %s" % ("yes" if cert.radical_ci else "not certified"))
        lines.append("  normal domain: %s" % ("yes" if cert.normal_domain else "not certified"))
        lines.append("  ufd: %s" % ("yes" if cert.ufd else "not certified"))
    lines.append(
        "minimal certified d: radical ci %d, normal domain %d, ufd %d"
        % (triple.d_ci, triple.d_prime, triple.d_ufd)
    )
    _emit(args, envelope, lines)
    return 0


def _transitive_reduction(edges: set[tuple]) -> set[tuple]:
    out = set()
    successors: dict = {}
    for a, b in edges:
        successors.setdefault(a, set()).add(b)
    for a, b in edges:
        redundant = any(
            (a, c) in edges and (c, b) in edges for c in successors.get(a, ())
            if c != b
        )
        if not redundant:
            out.add((a, b))
    return out


def cmd_poset(args) -> int:
    params = FrameSpaceParams(args.d, args.n)
    strata = enumerate_domain(params)
    maximals = set(maximal_strata(params))
    verdicts = []
    for lower in strata:
        for upper in strata:
            if lower == upper:
                continue
            verdicts.append(poset_compare(params, lower, upper))
    below = {
        (v.lower, v.upper) for v in verdicts if v.relation is PosetRelation.BELOW
    }
    unknown = [
        (v.lower, v.upper) for v in verdicts if v.relation is PosetRelation.UNKNOWN
    ]
    if args.format == "dot":
        lines = ["digraph strata {", "  rankdir=BT;", '  node [shape=box];']
        for s in strata:
            dim = stratum_dimension(params, s)
            extra = ", peripheries=2" if s in maximals else ""
            lines.append(
                '  "%d,%d" [label="%d,%d | %d"%s];' % (s.p, s.q, s.p, s.q, dim, extra)
            )
        for a, b in sorted(_transitive_reduction(below)):
            lines.append('  "%d,%d" -> "%d,%d";' % (a.p, a.q, b.p, b.q))
        for a, b in sorted(unknown):
            lines.append(
                '  "%d,%d" -> "%d,%d" [style=dotted, dir=none, label="?"];'
                % (a.p, a.q, b.p, b.q)
            )
        lines.append("}")
        print("\n".join(lines))
        return 0
    envelope = {
        "command": "poset",
        "parameters": {"d": params.d, "n": params.n},
        "report": {
            "strata": [
                {
                    "p": s.p,
                    "q": s.q,
                    "dimension": stratum_dimension(params, s),
                    "maximal": s in maximals,
                }
                for s in strata
            ],
            "relations": [
                {
                    "lower": [v.lower.p, v.lower.q],
                    "upper": [v.upper.p, v.upper.q],
                    "relation": v.relation.value,
                    "reason": v.reason,
                }
                for v in verdicts
            ],
        },
    }
    counts = {rel: 0 for rel in PosetRelation}
    for v in verdicts:
        counts[v.relation] += 1
    lines = [f"d={params.d} n={params.n}: {len(strata)} strata"]
    for s in strata:
        mark = " *" if s in maximals else ""
        lines.append(f"  ({s.p},{s.q})  dim {stratum_dimension(params, s)}{mark}")
    lines.append("(* = componentwise-maximal)")
    lines.append(
        "ordered pairs: %d below, %d not-below, %d unknown"
        % (
            counts[PosetRelation.BELOW],
            counts[PosetRelation.NOT_BELOW],
            counts[PosetRelation.UNKNOWN],
        )
    )
    for a, b in sorted(unknown):
        lines.append("  unknown: (%d,%d) under (%d,%d)" % (a.p, a.q, b.p, b.q))
    _emit(args, envelope, lines)
    return 0


def cmd_certify_grid(args) -> int:
    params = FrameSpaceParams(args.d, args.n)
    prime = _resolve_prime(args)
    ctx = make_context(prime)
    rows = []
    all_passed = True
    for s in sorted(boundary_set(params)):
        cert = boundary_smooth_witness(params, s, ctx, args.seed, args.trials)
        all_passed = all_passed and cert.passed
        rows.append(
            {
                "p": s.p,
                "q": s.q,
                "dimension": stratum_dimension(params, s),
                "jacobian_rank": cert.jacobian_rank,
                "required_bound": cert.required_bound,
                "passed": cert.passed,
                "trials_used": cert.trials_used,
            }
        )
    envelope = {
        "command": "certify-grid",
        "parameters": {"d": params.d, "n": params.n},
        "prime": str(prime),
        "seed": args.seed,
        "report": {"strata": rows, "all_passed": all_passed},
    }
    lines = [f"d={params.d} n={params.n} prime={prime} seed={args.seed}"]
    for row in rows:
        lines.append(
            "  (%d,%d)  dim %d  rank %d/%d  %s"
            % (
                row["p"],
                row["q"],
                row["dimension"],
                row["jacobian_rank"],
                row["required_bound"],
                "ok" if row["passed"] else "FAILED",
            )
        )
    lines.append("all certificates passed" if all_passed else "some certificates FAILED")
    _emit(args, envelope, lines)
    return 0 if all_passed else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orthoframes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    dn = _Parser(add_help=False)
    dn.add_argument("--d", type=int, required=True, help="ambient dimension")
    dn.add_argument("--n", type=int, required=True, help="number of columns")
    randomized = _Parser(add_help=False)
    randomized.add_argument("--seed", type=int, default=0)
    randomized.add_argument(
        "--prime",
        type=int,
        default=None,
        help="field modulus, 1 mod 4 (default %d, or FRAMES_PRIME)" % DEFAULT_PRIME,
    )
    randomized.add_argument("--trials", type=int, default=8)

    p = sub.add_parser("analyze", parents=[dn, fmt], help="component census")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", parents=[dn, fmt], help="coordinate ring properties")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "witness", parents=[dn, randomized, fmt], help="sample a stratum point and certify"
    )
    p.add_argument("--p", type=int, required=True, help="anisotropic rank")
    p.add_argument("--q", type=int, required=True, help="isotropic rank")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("lss", parents=[fmt], help="graph orthogonality certificates")
    p.add_argument("edges", help="edge list file: one 'u v' pair per line, # comments")
    p.add_argument("--vertices", type=int, default=None, help="vertex count (default: max label)")
    p.add_argument("--d", type=int, default=None, help="ambient dimension to certify at")
    p.set_defaults(func=cmd_lss)

    p = sub.add_parser("poset", parents=[dn], help="degeneration order between strata")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser(
        "certify-grid",
        parents=[dn, randomized, fmt],
        help="smooth witnesses on every componentwise-maximal stratum",
    )
    p.set_defaults(func=cmd_certify_grid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchExhaustedError as exc:
        print("certificate search failed: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
