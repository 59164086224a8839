"""Edge-list parsing, serialization, DOT export, and the relcalc CLI.

Text formats are ASCII and newline-delimited with 0-based node indices.
An edge-list document is a header line "n m" followed by m lines "u v";
'#' starts a comment line and blank lines are ignored.

Exit codes: 0 success, 1 law violation or oracle disagreement, 2 input
or parse error, 3 budget or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence

from . import laws as laws_mod
from . import oracle as oracle_mod
from . import scc as scc_mod
from .laws import BudgetError, CheckConfig, LawReport
from .oracle import Graph
from .rel_core import Relation
from .scc import CondensationDag


class EdgeListError(ValueError):
    """Malformed edge-list document; the message names the line."""


def parse_edge_list(text: str, warn: Callable[[str], None] | None = None) -> Graph:
    """Parse an edge-list document into a Graph.

    Duplicate edges are accepted (deduplicated) and reported through the
    optional warn callback.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    body_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2:
                raise EdgeListError(f"line {lineno}: header must be 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: header must be 'n m'") from None
            if n < 0 or m < 0:
                raise EdgeListError(f"line {lineno}: header values must be nonnegative")
            continue
        if len(fields) != 2:
            raise EdgeListError(f"line {lineno}: edge must be 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: edge must be 'u v'") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(
                f"line {lineno}: endpoint out of range for {n} nodes: {u} {v}"
            )
        body_lines += 1
        edges.append((u, v))
    if n is None:
        raise EdgeListError("line 1: missing header 'n m'")
    if body_lines != m:
        raise EdgeListError(f"header declares {m} edges, document has {body_lines}")
    edge_set = frozenset(edges)
    duplicates = len(edges) - len(edge_set)
    if duplicates and warn is not None:
        warn(f"{duplicates} duplicate edge(s) ignored")
    return Graph(n, edge_set)


def format_edge_list(g: Graph) -> str:
    """Deterministic edge-list document; inverse of parse_edge_list."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def relation_from_graph(g: Graph) -> Relation:
    if g.n < 1:
        raise EdgeListError("relations need at least one node")
    return Relation.from_pairs(g.n, g.edges)


def graph_from_relation(r: Relation) -> Graph:
    return Graph(r.size, frozenset(r.pairs()))


def format_relation(r: Relation) -> str:
    """Relation as an edge-list document (witness block format)."""
    return format_edge_list(graph_from_relation(r))


def report_to_text(report: LawReport) -> str:
    """Report line plus witness blocks (one edge-list doc per relation)."""
    parts = [report.summary_line()]
    if report.witness is not None:
        for idx, rel in enumerate(report.witness):
            parts.append(f"# witness relation {idx}")
            parts.append(format_relation(rel).rstrip("\n"))
    return "\n".join(parts) + "\n"


def to_dot(dag: CondensationDag, labels: Sequence[str] | None = None) -> str:
    """Deterministic DOT text for a condensation DAG.

    One node per class named scc<representative>; the label lists the
    members unless an explicit per-class label is supplied.
    """
    part = dag.partition
    names = [f"scc{members[0]}" for members in part.classes]
    lines = ["digraph condensation {"]
    for idx, members in enumerate(part.classes):
        label = labels[idx] if labels is not None else ",".join(map(str, members))
        lines.append(f'  {names[idx]} [label="{label}"];')
    for a, b in sorted(dag.edges):
        lines.append(f"  {names[a]} -> {names[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# CLI


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relcalc",
        description="Finite relation algebra: law checking, SCCs, condensation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_laws = sub.add_parser("laws", help="check relation-algebra laws")
    which = p_laws.add_mutually_exclusive_group(required=True)
    which.add_argument("--law", help="law identifier (e.g. main-theorem)")
    which.add_argument("--all", action="store_true", help="check every law")
    p_laws.add_argument("--exhaustive", action="store_true")
    p_laws.add_argument("--max-size", type=int, default=2,
                        help="exhaustive mode: check carriers 1..N")
    p_laws.add_argument("--size", type=int, default=8,
                        help="randomized mode: carrier size")
    p_laws.add_argument("--samples", type=int, default=1000)
    p_laws.add_argument("--seed", type=int, default=42)
    p_laws.add_argument("--density", default="0.1,0.3,0.5,0.7,0.9",
                        help="comma-separated edge probabilities")
    p_laws.add_argument("--budget", type=int, default=laws_mod.DEFAULT_BUDGET)

    p_scc = sub.add_parser("scc", help="strongly connected components of a graph")
    p_scc.add_argument("file")
    p_scc.add_argument("--via", choices=["relational", "oracle", "both"],
                       default="relational")

    p_cond = sub.add_parser("condense", help="condensation DAG of a graph")
    p_cond.add_argument("file")
    p_cond.add_argument("--dot", help="output DOT file (default: stdout)")

    p_star = sub.add_parser("star", help="reflexive-transitive closure of a graph")
    p_star.add_argument("file")

    return parser


def _read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise EdgeListError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_edge_list(text, warn=lambda msg: print(msg, file=sys.stderr))


def _run_laws(args: argparse.Namespace) -> int:
    if args.all:
        chosen = [laws_mod.LAWS[k] for k in sorted(laws_mod.LAWS)]
    else:
        try:
            chosen = [laws_mod.get_law(args.law)]
        except KeyError as exc:
            print(exc.args[0], file=sys.stderr)
            return 3
    failed = False
    if args.exhaustive:
        if args.max_size < 1:
            print("--max-size must be >= 1", file=sys.stderr)
            return 3
        for law in chosen:
            for n in range(1, args.max_size + 1):
                try:
                    report = laws_mod.exhaustive_check(law, n, budget=args.budget)
                except BudgetError as exc:
                    print(f"skipping {law.law_id} at n={n}: {exc}", file=sys.stderr)
                    continue
                sys.stdout.write(report_to_text(report))
                failed |= report.verdict == "fail"
    else:
        try:
            densities = tuple(float(p) for p in args.density.split(","))
            config = CheckConfig(args.size, args.samples, args.seed, densities)
        except ValueError as exc:
            print(f"bad configuration: {exc}", file=sys.stderr)
            return 3
        for law in chosen:
            report = laws_mod.randomized_check(law, config)
            sys.stdout.write(report_to_text(report))
            failed |= report.verdict == "fail"
    return 1 if failed else 0


def _partition_lines(part: scc_mod.Partition) -> str:
    return "".join(" ".join(map(str, members)) + "\n" for members in part.classes)


def _run_scc(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    relational = oracle_part = None
    if args.via in ("relational", "both"):
        r = relation_from_graph(g)
        relational = scc_mod.equivalence_classes(scc_mod.scc_equivalence(r))
    if args.via in ("oracle", "both"):
        oracle_part = oracle_mod.tarjan_scc(g)
    if args.via == "both" and relational != oracle_part:
        print("relational and oracle partitions disagree", file=sys.stderr)
        sys.stdout.write("relational:\n")
        sys.stdout.write(_partition_lines(relational))
        sys.stdout.write("oracle:\n")
        sys.stdout.write(_partition_lines(oracle_part))
        return 1
    sys.stdout.write(_partition_lines(relational if relational is not None else oracle_part))
    return 0


def _run_condense(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    dag = scc_mod.condense(relation_from_graph(g))
    text = to_dot(dag)
    if args.dot:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _run_star(args: argparse.Namespace) -> int:
    from .rel_core import star

    g = _read_graph(args.file)
    closure = star(relation_from_graph(g))
    sys.stdout.write(format_edge_list(graph_from_relation(closure)))
    return 0


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "laws":
            return _run_laws(args)
        if args.command == "scc":
            return _run_scc(args)
        if args.command == "condense":
            return _run_condense(args)
        if args.command == "star":
            return _run_star(args)
    except EdgeListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
