"""``gcm`` command-line front end.

Every command prints one JSON report with the keys ``command``, ``graph``,
``matroid``, ``verification``, ``seed``, ``elapsed_ms`` and ``details``.
Exit status: 0 success, 1 verification failure, 2 input or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from graphcurve import gcmatroid
from graphcurve.cographic import cographic_rank, cographic_rank_of_neighborhood
from graphcurve.errors import GraphCurveError, GraphInputError, VerificationError
from graphcurve.gcmatroid import (
    DEFAULT_MAX_VERTICES,
    circuits_naive,
    circuits_structured,
    graph_curve_matroid,
    matroid_loops,
)
from graphcurve.graphio import gallery, gallery_names, read_graph, serialize_graph
from graphcurve.matroid import direct_sum, is_identically_self_dual, is_isomorphic
from graphcurve.multigraph import (
    are_isomorphic,
    connectivity_report,
    delta,
    enumerate_trivalent_graphs,
    is_trivalent,
    is_two_edge_connected,
    two_switch,
    vertex_mask,
)
from graphcurve.realization import hyperplane_section, linear_matroid, verify_bond_realization

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2

COMMANDS = ("circuits", "matroid", "isd", "rank", "cographic-rank", "realize", "compare",
            "two-switch", "search-pairs", "gallery-list")


def circuits_json(circuits) -> list[list[int]]:
    return [sorted(c) for c in circuits]


def graph_summary(G) -> dict:
    rep = connectivity_report(G)
    return {
        "n": G.n,
        "m": G.m,
        "trivalent": rep.is_trivalent,
        "two_edge_connected": rep.is_two_edge_connected,
        "genus": rep.genus,
    }


def matroid_summary(M) -> dict:
    return {
        "rank": M.rank,
        "circuits": circuits_json(M.circuits),
        "num_bases": len(M.basis_masks),
        "is_isd": is_identically_self_dual(M),
    }


def empty_report(command: str) -> dict:
    return {
        "command": command,
        "graph": None,
        "matroid": None,
        "verification": {"engine_diff": None, "bond_realization": None, "hyperplane_match": None},
        "seed": None,
        "elapsed_ms": None,
        "details": {},
    }


def parse_subset(text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise GraphInputError(f"cannot parse subset {text!r}; use comma-separated ids") from None


def load(args, second: bool = False):
    name = args.with_gallery if second else args.gallery
    path = args.with_file if second else args.file
    flag = "--with-gallery/--with-file" if second else "--gallery/--file"
    if (name is None) == (path is None):
        raise GraphInputError(f"give exactly one of {flag}")
    return gallery(name) if name is not None else read_graph(path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcm", description="Graph curve matroids of multigraphs.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--gallery", metavar="NAME")
    parser.add_argument("--file", metavar="PATH")
    parser.add_argument("--with-gallery", metavar="NAME", help="second graph (compare, two-switch)")
    parser.add_argument("--with-file", metavar="PATH", help="second graph (compare, two-switch)")
    parser.add_argument("--engine", choices=("naive", "structured", "both"), default="naive")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-subset-bits", type=int, default=DEFAULT_MAX_VERTICES)
    parser.add_argument("--subset", help="comma-separated vertex ids (rank, cographic-rank)")
    parser.add_argument("--edges", help="comma-separated edge ids (cographic-rank)")
    parser.add_argument("--e1", type=int, default=1, help="edge of the first graph (two-switch)")
    parser.add_argument("--e2", type=int, default=1, help="edge of the second graph (two-switch)")
    parser.add_argument("--swap", action="store_true", help="pair a1 with b2 instead of a2")
    parser.add_argument("--n", type=int, default=8, help="vertex bound for search-pairs")
    parser.add_argument("--verify", action="store_true", help="run the structural checks (matroid)")
    out = parser.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false")
    out.add_argument("--pretty", dest="pretty", action="store_true")
    parser.set_defaults(pretty=True)
    return parser


# -- command handlers: each fills ``report`` and returns an exit code ---------


def cmd_circuits(args, report):
    doc = load(args)
    G = doc.graph
    report["graph"] = graph_summary(G)
    engine = "naive" if args.engine == "both" else args.engine
    circuits = graph_curve_matroid(G, engine, args.max_subset_bits).circuits
    report["details"] = {"name": doc.name, "engine": engine, "circuits": circuits_json(circuits)}
    return EXIT_OK


def _structural_checks(G, gcm) -> dict[str, bool]:
    """Properties that must hold for a trivalent 2-edge-connected graph."""
    rep = connectivity_report(G)
    rank = gcmatroid.NeighborhoodRank(G)
    checks = {
        "rank_is_genus_minus_one": gcm.rank == rep.genus - 1,
        "circuit_rank_equality": all(rank(vertex_mask(G, c)) == len(c) for c in gcm.circuits),
        "identically_self_dual": is_identically_self_dual(gcm.explicit),
    }
    return checks


def cmd_matroid(args, report):
    doc = load(args)
    G = doc.graph
    report["graph"] = graph_summary(G)
    timings = {}
    status = EXIT_OK
    if args.engine == "both":
        t = time.perf_counter()
        naive = circuits_naive(G, args.max_subset_bits)
        timings["naive_ms"] = round(1000 * (time.perf_counter() - t), 3)
        t = time.perf_counter()
        structured = circuits_structured(G, args.max_subset_bits)
        timings["structured_ms"] = round(1000 * (time.perf_counter() - t), 3)
        diff = sorted(set(naive) ^ set(structured), key=lambda c: (len(c), sorted(c)))
        report["verification"]["engine_diff"] = circuits_json(diff)
        if diff:
            status = EXIT_VERIFY
        gcm = gcmatroid.GraphCurveMatroid(G, naive, "naive")
    else:
        t = time.perf_counter()
        gcm = graph_curve_matroid(G, args.engine, args.max_subset_bits)
        timings[f"{args.engine}_ms"] = round(1000 * (time.perf_counter() - t), 3)
    report["matroid"] = matroid_summary(gcm.explicit)
    details = {"name": doc.name, "engine": args.engine, "timings": timings}
    if args.verify:
        if not (is_trivalent(G) and is_two_edge_connected(G)):
            raise GraphInputError("--verify needs a trivalent 2-edge-connected graph")
        checks = _structural_checks(G, gcm)
        details["checks"] = checks
        if not all(checks.values()):
            status = EXIT_VERIFY
    report["details"] = details
    return status


def cmd_isd(args, report):
    doc = load(args)
    G = doc.graph
    report["graph"] = graph_summary(G)
    M = graph_curve_matroid(G, "naive", args.max_subset_bits).explicit
    report["matroid"] = matroid_summary(M)
    details = {"name": doc.name, "is_isd": report["matroid"]["is_isd"]}
    if not details["is_isd"]:
        loops = sorted(matroid_loops(G)) if is_trivalent(G) else sorted(M.loops)
        if loops:
            details["reason"] = f"matroid loop at vertices {loops}"
        else:
            details["reason"] = "some basis complement is dependent"
        details["loops"] = loops
    report["details"] = details
    return EXIT_OK


def cmd_rank(args, report):
    doc = load(args)
    G = doc.graph
    A = parse_subset(args.subset) if args.subset is not None else list(G.vertices)
    report["graph"] = graph_summary(G)
    report["details"] = {
        "name": doc.name,
        "subset": sorted(set(A)),
        "rank": gcmatroid.rank_subset(G, A),
        "independent": gcmatroid.is_independent(G, A),
    }
    return EXIT_OK


def cmd_cographic_rank(args, report):
    doc = load(args)
    G = doc.graph
    report["graph"] = graph_summary(G)
    details = {"name": doc.name}
    if args.edges is not None:
        B = parse_subset(args.edges)
        details.update(edges=sorted(set(B)), cographic_rank=cographic_rank(G, B))
    else:
        A = parse_subset(args.subset)
        dA = delta(G, A)
        details.update(subset=sorted(set(A)), delta=sorted(dA), cographic_rank=cographic_rank(G, dA))
        if connectivity_report(G).is_connected:
            closed = cographic_rank_of_neighborhood(G, A)
            details["closed_form"] = closed
            if closed != details["cographic_rank"]:
                report["details"] = details
                return EXIT_VERIFY
    report["details"] = details
    return EXIT_OK


def cmd_realize(args, report):
    doc = load(args)
    G = doc.graph
    report["graph"] = graph_summary(G)
    report["seed"] = args.seed
    bond = verify_bond_realization(G, seed=args.seed, raise_on_failure=False)
    report["verification"]["bond_realization"] = bond.ok
    details = {
        "name": doc.name,
        "bond": {"exhaustive": bond.exhaustive, "subsets_checked": bond.subsets_checked,
                 "vertex_triples_ok": bond.vertex_triples_ok, "failure": bond.failure},
    }
    status = EXIT_OK if bond.ok else EXIT_VERIFY
    if is_trivalent(G) and is_two_edge_connected(G):
        config = hyperplane_section(G, args.seed)
        section = linear_matroid(config.points)
        M = graph_curve_matroid(G, "naive", args.max_subset_bits).explicit
        match = section == M
        report["matroid"] = matroid_summary(M)
        report["verification"]["hyperplane_match"] = match
        details["hyperplane"] = {
            "h": list(config.sample.h),
            "attempt": config.sample.attempt,
            "points": [list(p) for p in config.points],
            "circuits": circuits_json(section.circuits),
        }
        if not match:
            status = EXIT_VERIFY
    report["details"] = details
    return status


def cmd_compare(args, report):
    first, second = load(args), load(args, second=True)
    G1, G2 = first.graph, second.graph
    report["graph"] = graph_summary(G1)
    M1 = graph_curve_matroid(G1, "naive", args.max_subset_bits).explicit
    M2 = graph_curve_matroid(G2, "naive", args.max_subset_bits).explicit
    report["matroid"] = matroid_summary(M1)
    bijection = is_isomorphic(M1, M2)
    report["details"] = {
        "names": [first.name, second.name],
        "other_graph": graph_summary(G2),
        "other_matroid": matroid_summary(M2),
        "graphs_isomorphic": are_isomorphic(G1, G2),
        "matroids_isomorphic": bijection is not None,
        "bijection": None if bijection is None else {str(k): v for k, v in bijection.items()},
        "identical": M1 == M2,
    }
    return EXIT_OK


def cmd_two_switch(args, report):
    first, second = load(args), load(args, second=True)
    G = two_switch(first.graph, second.graph, args.e1, args.e2, swap=args.swap)
    report["graph"] = graph_summary(G)
    M = graph_curve_matroid(G, "naive", args.max_subset_bits).explicit
    expected = direct_sum(
        graph_curve_matroid(first.graph, "naive", args.max_subset_bits).explicit,
        graph_curve_matroid(second.graph, "naive", args.max_subset_bits).explicit,
    )
    report["matroid"] = matroid_summary(M)
    equal = M == expected
    report["details"] = {
        "names": [first.name, second.name],
        "e1": args.e1,
        "e2": args.e2,
        "swap": args.swap,
        "graph_text": serialize_graph(G),
        "equals_direct_sum": equal,
    }
    return EXIT_OK if equal else EXIT_VERIFY


def cmd_search_pairs(args, report):
    if args.n < 2:
        raise GraphInputError("--n must be at least 2")
    graphs = []
    for n in range(2, args.n + 1, 2):
        graphs += enumerate_trivalent_graphs(n, require_2ec=True)
    buckets: dict[tuple, list[list]] = {}
    for G in graphs:
        M = graph_curve_matroid(G, "naive", args.max_subset_bits).explicit
        key = (M.ground_size, M.rank, tuple(sorted(len(c) for c in M.circuits)))
        groups = buckets.setdefault(key, [])
        for group in groups:
            if is_isomorphic(group[0][1], M) is not None:
                group.append((G, M))
                break
        else:
            groups.append([(G, M)])
    found = []
    for groups in buckets.values():
        for group in groups:
            if len(group) > 1:
                found.append({
                    "matroid": matroid_summary(group[0][1]),
                    "graphs": [{"n": G.n, "edges": [list(e) for e in G.edges]} for G, _ in group],
                })
    found.sort(key=lambda g: (len(g["graphs"][0]["edges"]), g["matroid"]["circuits"]))
    report["details"] = {"max_n": args.n, "graphs_examined": len(graphs), "groups": found}
    return EXIT_OK


def cmd_gallery_list(args, report):
    report["details"] = {
        "graphs": [{"name": name, **graph_summary(gallery(name).graph)} for name in gallery_names()]
    }
    return EXIT_OK


HANDLERS = {
    "circuits": cmd_circuits,
    "matroid": cmd_matroid,
    "isd": cmd_isd,
    "rank": cmd_rank,
    "cographic-rank": cmd_cographic_rank,
    "realize": cmd_realize,
    "compare": cmd_compare,
    "two-switch": cmd_two_switch,
    "search-pairs": cmd_search_pairs,
    "gallery-list": cmd_gallery_list,
}


def execute(args: argparse.Namespace) -> tuple[dict, int]:
    report = empty_report(args.command)
    start = time.perf_counter()
    try:
        status = HANDLERS[args.command](args, report)
    except VerificationError as exc:
        report["error"] = str(exc)
        status = EXIT_VERIFY
    except GraphCurveError as exc:
        report["error"] = str(exc)
        status = EXIT_INPUT
    report["elapsed_ms"] = round(1000 * (time.perf_counter() - start), 3)
    return report, status


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    """Parse ``argv``, execute the command and return ``(report, exit_code)``."""
    return execute(build_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report, status = execute(args)
    text = json.dumps(report, indent=2 if args.pretty else None)
    print(text, file=sys.stdout if status != EXIT_INPUT else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
