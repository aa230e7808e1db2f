"""Command-line interface.

Exit codes: 0 admits / holds / all suites pass, 1 does not admit / fails,
2 budget exceeded / indeterminate, 64 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .barbell import (
    BarbellCertificate,
    BarbellPartition,
    Method,
    Verdict,
    default_brute_cap,
    find_barbell_partition,
)
from .census import CensusOptions, run_census
from .errors import GraphFormatError, HypothesisError, InvalidPartition
from .graph import (
    Graph,
    complete,
    cycle,
    encode_graph6,
    read_graph,
    structural_queries,
)
from .ops import (
    barbell_corona,
    barbell_nonadjacent_pair,
    barbell_prism,
    barbell_tensor_complete,
    cartesian,
    corona,
    dup,
    dup_creates_barbell,
    jdup,
    join,
    lift_barbell_product,
    product,
    tensor,
    transfer_barbell_dup,
    transfer_barbell_join,
    transfer_barbell_vertex_sum,
    vertex_sum,
)
from .ssp import Property, parse_matrix, property_kernel

log = logging.getLogger("barbellkit")

EXIT_USAGE = 64
NON_MEMBERSHIP = "so the graph is not in G^SSP (nor G^SAP, nor G^SMP)"
OPS_KINDS = ("dup", "jdup", "join", "vsum", "corona", "cartesian", "tensor", "strong",
             "prism", "tensor-complete")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    p = Path(arg)
    if p.is_file():
        return p.read_text()
    return arg


def load_graph(arg: str) -> Graph:
    """A graph from a file, stdin (``-``), a literal graph6 string or a name like ``K5``."""
    return read_graph(_read_text(arg))


def _vertex(arg: str, G: Graph, what: str) -> int:
    try:
        v = int(arg)
    except ValueError:
        raise UsageError(f"{what} must be a 1-based vertex number, got {arg!r}") from None
    if not 1 <= v <= G.n:
        raise UsageError(f"{what} {v} out of range 1..{G.n}")
    return v - 1


def _emit_certificate(G: Graph, cert: BarbellCertificate, as_json: bool, extra: dict | None = None):
    if as_json:
        data = cert.to_json(G)
        if extra:
            data.update(extra)
        print(json.dumps(data, sort_keys=True))
        return
    print(f"graph6: {encode_graph6(G)}  (n={G.n}, m={G.m})")
    print(f"verdict: {cert.verdict.value} [{cert.method.value}]")
    if cert.partition is not None:
        d = cert.partition.to_dict(G)
        for key in ("R", "W1", "W2"):
            print(f"  {key}: {' '.join(map(str, d[key])) or '-'}")
        print(f"a barbell partition exists, {NON_MEMBERSHIP}")
    if cert.notes:
        print(f"notes: {cert.notes}")
    for key, val in (extra or {}).items():
        print(f"{key}: {val}")


def _exit_for(cert: BarbellCertificate) -> int:
    return {Verdict.ADMITS: 0, Verdict.DOES_NOT_ADMIT: 1, Verdict.BUDGET_EXCEEDED: 2}[cert.verdict]


def _plot(G: Graph, P: BarbellPartition | None, path: str | None, title: str, grid=None):
    if not path:
        return
    from .plotting import draw_partition

    draw_partition(G, P, path, title=title, grid=grid)
    log.info("wrote %s", path)


# ---------------------------------------------------------------- barbell


def cmd_barbell_check(args) -> int:
    G = load_graph(args.graph)
    cut_sets = [[_vertex(x, G, "cut-set vertex") for x in s.split(",")] for s in args.cut_set]
    cap = args.brute_cap if args.brute_cap is not None else default_brute_cap()
    cert = find_barbell_partition(G, brute_cap=cap, budget=args.budget, cut_sets=cut_sets)
    _emit_certificate(G, cert, args.json)
    _plot(G, cert.partition, args.plot, f"{encode_graph6(G)}: {cert.verdict.value}")
    return _exit_for(cert)


# ---------------------------------------------------------------- ops


def _partition_file(path: str | None, G: Graph) -> BarbellPartition | None:
    if path is None:
        return None
    data = json.loads(Path(path).read_text())
    return BarbellPartition.from_dict(data, G)


def _known_partition(G: Graph, given: BarbellPartition | None) -> BarbellPartition | None:
    if given is not None:
        return given
    return find_barbell_partition(G).partition


def _need(inputs: Sequence[str], k: int, usage: str) -> None:
    if len(inputs) != k:
        raise UsageError(f"expected {usage}")


def _int(arg: str, what: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {arg!r}") from None


def _graph_for(kind: str, inputs: Sequence[str]):
    """Parse the inputs and build the graph.

    Returns the graph, a constructor for its partition (taking the
    ``--transfer-partition`` path), and
    a grid shape for plotting (or None).
    """
    if kind in ("dup", "jdup"):
        _need(inputs, 2, f"{kind} GRAPH VERTEX")
        G = load_graph(inputs[0])
        v = _vertex(inputs[1], G, "vertex")
        K = dup(G, v) if kind == "dup" else jdup(G, v)

        def make(given):
            P = _known_partition(G, _partition_file(given, G))
            if P is None:
                clause = "the input graph has no barbell partition to transfer"
                if G.n >= 2:
                    has = dup_creates_barbell(G, v, check_precondition=False)
                    clause += "; V - N[v] " + ("contains a fort" if has else "contains no fort")
                raise HypothesisError(clause)
            return transfer_barbell_dup(G, P, v)[0 if kind == "dup" else 1]

        return K, make, None
    if kind in ("join", "corona", "cartesian", "tensor", "strong"):
        _need(inputs, 2, f"{kind} G H")
        G, H = load_graph(inputs[0]), load_graph(inputs[1])
        if kind == "join":
            def make(given):
                P = _known_partition(H, _partition_file(given, H))
                if P is None:
                    raise HypothesisError("H has no barbell partition to transfer")
                return transfer_barbell_join(G, H, P)

            return join(G, H), make, None
        if kind == "corona":
            return corona(G, H), lambda given: barbell_corona(G, H), None

        def make(given):
            if kind != "cartesian" and given is None:
                pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)
                         if not G.has_edge(u, v)]
                try:
                    if not pairs:
                        raise HypothesisError("G has no pair of distinct non-adjacent vertices")
                    return barbell_nonadjacent_pair(G, H, pairs[0][0], pairs[0][1], kind)
                except HypothesisError:
                    if kind == "strong":
                        raise
            if kind == "strong":
                raise HypothesisError("partition lifting applies to Cartesian and tensor products")
            P = _known_partition(H, _partition_file(given, H))
            if P is None:
                raise HypothesisError("H has no barbell partition to lift")
            return lift_barbell_product(G, H, P, kind)

        return product(G, H, kind), make, (G.n, H.n)
    if kind == "vsum":
        _need(inputs, 4, "vsum G U H W")
        G, H = load_graph(inputs[0]), load_graph(inputs[2])
        u, w = _vertex(inputs[1], G, "u"), _vertex(inputs[3], H, "w")

        def make(given):
            P_H = _partition_file(given, H)
            if P_H is None and (structural_queries(G).is_path or structural_queries(H).is_path):
                P_H = find_barbell_partition(H).partition
            return transfer_barbell_vertex_sum(G, u, H, w, P_H)

        return vertex_sum(G, u, H, w), make, None
    if kind == "prism":
        _need(inputs, 2, "prism K M")
        k, m = _int(inputs[0], "k"), _int(inputs[1], "m")
        if k < 3 or m < 1:
            raise UsageError("prism needs k >= 3 and m >= 1")
        return cartesian(cycle(k), cycle(m * k)), lambda given: barbell_prism(k, m)[1], (k, m * k)
    if kind == "tensor-complete":
        _need(inputs, 2, "tensor-complete N M")
        n, m = _int(inputs[0], "n"), _int(inputs[1], "m")
        if n < 1 or m < 1:
            raise UsageError("n and m must be positive")
        return (
            tensor(complete(n), complete(m)),
            lambda given: barbell_tensor_complete(n, m)[1],
            (n, m),
        )
    raise UsageError(f"unknown kind {kind!r}")


def cmd_ops_build(args) -> int:
    K, make, grid = _graph_for(args.kind, args.inputs)
    notes: list[str] = []
    if args.kind == "jdup":
        G = load_graph(args.inputs[0])
        s = structural_queries(G)
        if s.is_path and _vertex(args.inputs[1], G, "vertex") in s.pendant_vertices:
            notes.append("join-duplicating a pendant vertex of a path gives H with q(H) = |H| - 1")
    try:
        P = make(args.transfer_partition)
    except HypothesisError as exc:
        print(f"hypothesis failed: {exc.clause}", file=sys.stderr)
        notes.append(f"construction refused: {exc.clause}")
        P = None
    if P is not None:
        cert = BarbellCertificate(Verdict.ADMITS, Method.CONSTRUCTIVE_TRANSFER, P, "; ".join(notes))
    else:
        # no construction applies: decide the built graph directly
        found = find_barbell_partition(K)
        if found.verdict is Verdict.DOES_NOT_ADMIT:
            notes.append("search: no barbell partition exists")
        if found.notes:
            notes.append(found.notes)
        cert = BarbellCertificate(found.verdict, found.method, found.partition, "; ".join(notes))
    if args.json:
        _emit_certificate(K, cert, True)
    else:
        print(encode_graph6(K))
        _emit_certificate(K, cert, False)
    _plot(K, cert.partition, args.plot, f"{args.kind}: {cert.verdict.value}", grid)
    return _exit_for(cert)


# ---------------------------------------------------------------- ssp


def cmd_ssp_check(args) -> int:
    text = _read_text(args.matrix)
    A = parse_matrix(text, "float" if args.float else "rational")
    rep = property_kernel(A, Property.coerce(args.property), tol=args.tol)
    print(json.dumps(rep.to_json(), sort_keys=True))
    if rep.indeterminate:
        return 2
    return 0 if rep.holds else 1


# ---------------------------------------------------------------- census / theorems


def cmd_census(args) -> int:
    if args.ssp_trials:
        print(f"seed={args.seed}", file=sys.stderr)
    opts = CensusOptions(args.brute_cap, args.ssp_trials, args.seed, args.timing)
    errors: list[str] = []
    records = []
    with open(args.catalog) if args.catalog != "-" else sys.stdin as fh:
        out = open(args.out, "w") if args.out else sys.stdout
        try:
            for line in run_census(fh, opts, jobs=args.jobs, errors=errors):
                out.write(line + "\n")
                if args.plot:
                    rec = json.loads(line)
                    records.append({"n": rec["n"], "barbell": {"verdict": rec["barbell"]["verdict"]}})
        finally:
            if args.out:
                out.close()
    if args.plot:
        from .plotting import census_summary

        census_summary(records, args.plot)
    return 1 if errors else 0


def cmd_theorems(args) -> int:
    from .theorems import SUITES, run_suite

    if args.list:
        for name, (summary, _) in SUITES.items():
            print(f"{name}: {summary}")
        return 0
    names = [n for n in SUITES if args.filter is None or args.filter in n]
    if not names:
        print(f"no suite matches {args.filter!r}", file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    for name in names:
        res = run_suite(name)
        print(res.line(), flush=True)
        failed += not res.passed
    return 1 if failed else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="barbellkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    bb = sub.add_parser("barbell", help="barbell partition queries")
    bsub = bb.add_subparsers(dest="action", required=True, parser_class=_Parser)
    chk = bsub.add_parser("check", help="decide and certify a barbell partition")
    chk.add_argument("graph", help="file, '-', graph6 string, or a name such as K5 or petersen")
    chk.add_argument("--brute-cap", type=int, default=None,
                     help="largest n for the brute-force fallback (default: $BARBELL_BRUTE_CAP or 15)")
    chk.add_argument("--budget", type=int, default=10**7, help="fort search node budget")
    chk.add_argument("--cut-set", action="append", default=[], metavar="V,V,...",
                     help="try this vertex set as R first (1-based, repeatable)")
    chk.add_argument("--json", action="store_true")
    chk.add_argument("--plot", metavar="PNG", help="draw the partition to this file")
    chk.set_defaults(func=cmd_barbell_check)

    ops = sub.add_parser("ops", help="graph constructions with partition transfer")
    osub = ops.add_subparsers(dest="action", required=True, parser_class=_Parser)
    bld = osub.add_parser("build", help="build a graph and its partition")
    bld.add_argument("kind", choices=OPS_KINDS)
    bld.add_argument("inputs", nargs="*")
    bld.add_argument("--transfer-partition", metavar="JSON",
                     help="partition of the input graph (H for two-graph kinds)")
    bld.add_argument("--json", action="store_true")
    bld.add_argument("--plot", metavar="PNG")
    bld.set_defaults(func=cmd_ops_build)

    sp = sub.add_parser("ssp", help="matrix property checks")
    ssub = sp.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sc = ssub.add_parser("check", help="SAP/SSP/SMP by exact kernel dimension")
    sc.add_argument("matrix", help="dense matrix file or '-'")
    sc.add_argument("--property", default="ssp", choices=["sap", "ssp", "smp", "SAP", "SSP", "SMP"])
    sc.add_argument("--float", action="store_true", help="floating point with an SVD threshold")
    sc.add_argument("--tol", type=float, default=1e-9)
    sc.set_defaults(func=cmd_ssp_check)

    cs = sub.add_parser("census", help="analyze every graph in a graph6 catalog")
    cs.add_argument("catalog", help="graph6 file, one graph per line, or '-'")
    cs.add_argument("--jobs", type=int, default=1)
    cs.add_argument("--out", metavar="FILE")
    cs.add_argument("--brute-cap", type=int, default=None)
    cs.add_argument("--ssp-trials", type=int, default=0, help="sampled matrices per graph")
    cs.add_argument("--seed", type=int, default=0)
    cs.add_argument("--timing", action="store_true", help="record wall_time_ms (breaks byte identity)")
    cs.add_argument("--plot", metavar="PNG", help="write a verdict summary figure")
    cs.set_defaults(func=cmd_census)

    th = sub.add_parser("theorems", help="run the verification suites")
    th.add_argument("--filter", metavar="NAME", help="run suites whose name contains NAME")
    th.add_argument("--list", action="store_true")
    th.set_defaults(func=cmd_theorems)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (GraphFormatError, InvalidPartition, UsageError, ValueError, OSError) as exc:
        print(f"barbellkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
