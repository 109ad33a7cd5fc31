"""Command-line front end and batch verification harness.

Exit codes for ``check``/``obstruction``/``solve``: 0 = partitionable (or
nothing found), 1 = obstruction found / unsatisfiable, 2 = input error or
non-chordal input without ``--force-oracle``.  Batch commands exit 0 iff
their report contains no failures.  Reports are deterministic for fixed
flags and seed; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .catalogue import (
    CatalogueEntry,
    FINITE_MINIMAL_TAGS,
    ObstructionKind,
    catalogue,
    fan,
    fan_kind,
    find_obstruction_by_scan,
    obstruction_graph,
)
from .chordal import (
    MAX_ENUMERATION_N,
    enumerate_connected_chordal,
    is_chordal,
    random_chordal,
)
from .graph import (
    Graph,
    from_edgelist,
    from_graph6,
    to_dot,
    to_edgelist,
    to_graph6,
)
from .patterns import M1, Pattern, is_minimal_obstruction, solve
from .solver import (
    M1Certificate,
    NotChordalError,
    solve_certifying,
    verify_certificate,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


@dataclass
class RunReport:
    """Aggregated batch outcome; ``failures`` empty iff the run passed."""

    command: str
    graphs_per_n: dict[int, int] = field(default_factory=dict)
    checked: int = 0
    agreements: int = 0
    failures: list[dict] = field(default_factory=list)

    def record(self, n: int) -> None:
        self.checked += 1
        self.graphs_per_n[n] = self.graphs_per_n.get(n, 0) + 1

    def fail(self, graph: Graph, kind: str, detail: str = "") -> None:
        entry = {"graph6": to_graph6(graph), "kind": kind}
        if detail:
            entry["detail"] = detail
        self.failures.append(entry)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "graphs_per_n": {str(k): v for k, v in sorted(self.graphs_per_n.items())},
            "checked": self.checked,
            "agreements": self.agreements,
            "failures": self.failures,
        }
        return json.dumps(doc, sort_keys=True, indent=2)

    @property
    def exit_code(self) -> int:
        return EXIT_YES if not self.failures else EXIT_NO


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "edgelist":
        return from_edgelist(text)
    return from_graph6(text)


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    return to_graph6(g) + "\n"


def _certificate_exit(cert: M1Certificate) -> int:
    return EXIT_YES if cert.decision == "yes" else EXIT_NO


def cmd_check(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.input, args.format)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        cert = solve_certifying(g)
    except NotChordalError as exc:
        if not args.force_oracle:
            print(
                json.dumps(
                    {"error": "not chordal", "hole": list(exc.hole)}, sort_keys=True
                )
            )
            return EXIT_ERROR
        assignment = solve(g, M1)
        cert = M1Certificate(assignment, None) if assignment is not None else None
        if cert is None:
            print(
                json.dumps(
                    {"decision": "no", "parts": None, "witness": None}, sort_keys=True
                )
            )
            return EXIT_NO
    print(cert.to_json())
    return _certificate_exit(cert)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.input, args.format)
        doc = json.loads(_read_text(args.certificate))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    cert = _certificate_from_json(g, doc)
    if isinstance(cert, str):
        print(json.dumps({"valid": False, "reason": cert}, sort_keys=True))
        return EXIT_NO
    problem = verify_certificate(g, cert)
    print(json.dumps({"valid": problem is None, "reason": problem}, sort_keys=True))
    return EXIT_YES if problem is None else EXIT_NO


def _certificate_from_json(g: Graph, doc: dict) -> M1Certificate | str:
    if doc.get("decision") == "yes":
        parts = doc.get("parts")
        if not isinstance(parts, list) or len(parts) != 3:
            return "yes certificates need exactly three parts"
        assignment = [-1] * g.n
        for i, part in enumerate(parts):
            for v in part:
                if not isinstance(v, int) or not 0 <= v < g.n or assignment[v] != -1:
                    return f"bad or duplicated vertex {v!r} in parts"
                assignment[v] = i
        if -1 in assignment:
            return "parts do not cover every vertex"
        return M1Certificate(tuple(assignment), None)
    if doc.get("decision") == "no":
        wit = doc.get("witness")
        if not isinstance(wit, dict):
            return "no certificates need a witness object"
        try:
            kind = ObstructionKind(wit["kind"], wit.get("k"))
        except (KeyError, ValueError) as exc:
            return f"bad witness kind: {exc}"
        vertices = wit.get("vertices")
        if not isinstance(vertices, list):
            return "witness needs a vertex list"
        return M1Certificate(None, (kind, frozenset(vertices)))
    return "decision must be 'yes' or 'no'"


def cmd_obstruction(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.input, args.format)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    found = find_obstruction_by_scan(g)
    if found is None:
        print(json.dumps({"obstruction": None}, sort_keys=True))
        return EXIT_YES
    kind, vertices = found
    doc = {"obstruction": {"kind": kind.tag, "vertices": sorted(vertices)}}
    if kind.k is not None:
        doc["obstruction"]["k"] = kind.k
    print(json.dumps(doc, sort_keys=True))
    return EXIT_NO


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.input, args.format)
        pattern = Pattern.parse(_read_text(args.pattern))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    assignment = solve(g, pattern)
    if assignment is None:
        print(json.dumps({"decision": "no", "parts": None}, sort_keys=True))
        return EXIT_NO
    parts: list[list[int]] = [[] for _ in range(pattern.m)]
    for v, part in enumerate(assignment):
        parts[part].append(v)
    print(json.dumps({"decision": "yes", "parts": parts}, sort_keys=True))
    return EXIT_YES


def cmd_enumerate(args: argparse.Namespace) -> int:
    report = RunReport(command="enumerate")
    started = time.monotonic()
    for g in enumerate_connected_chordal(args.max_n):
        report.record(g.n)
        if not args.verify:
            print(to_graph6(g))
            continue
        cert = solve_certifying(g)
        problem = verify_certificate(g, cert)
        if problem is not None:
            report.fail(g, "invalid-certificate", problem)
            continue
        by_oracle = solve(g, M1) is not None
        by_scan = find_obstruction_by_scan(g) is None
        by_solver = cert.decision == "yes"
        if by_solver == by_oracle == by_scan:
            report.agreements += 1
        else:
            report.fail(
                g,
                "disagreement",
                f"solver={by_solver} oracle={by_oracle} scan={by_scan}",
            )
    if args.verify:
        print(report.to_json())
        _elapsed(started)
        return report.exit_code
    if args.counts:
        print(
            json.dumps(
                {str(k): v for k, v in sorted(report.graphs_per_n.items())},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
    return EXIT_YES


def cmd_random(args: argparse.Namespace) -> int:
    report = RunReport(command="random")
    started = time.monotonic()
    for trial in range(args.trials):
        g = random_chordal(args.n, args.attach_bias, seed=args.seed + trial)
        report.record(g.n)
        if not is_chordal(g):
            report.fail(g, "not-chordal")
            continue
        cert = solve_certifying(g)
        problem = verify_certificate(g, cert)
        if problem is None:
            report.agreements += 1
        else:
            report.fail(g, "invalid-certificate", problem)
    print(report.to_json())
    _elapsed(started)
    return report.exit_code


_DEFAULT_MINIMALITY = ("F1", "F2", "F3", "F4", "F5", "F6", "F7",
                       "Fan(2)", "Fan(3)", "Fan(4)", "Fan(5)")


def _parse_kind(token: str) -> ObstructionKind:
    if token.startswith("Fan(") and token.endswith(")"):
        return fan_kind(int(token[4:-1]))
    return ObstructionKind(token)


def cmd_minimality(args: argparse.Namespace) -> int:
    report = RunReport(command="minimality")
    started = time.monotonic()
    tokens = args.kinds or list(_DEFAULT_MINIMALITY)
    for token in tokens:
        try:
            kind = _parse_kind(token)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_ERROR
        g = obstruction_graph(kind)
        report.record(g.n)
        minimal = is_minimal_obstruction(g, M1)
        expected = kind.tag == "Fan" or kind.tag in FINITE_MINIMAL_TAGS
        if minimal == expected:
            report.agreements += 1
        else:
            report.fail(g, "minimality-mismatch", f"{kind}: minimal={minimal}")
    print(report.to_json())
    _elapsed(started)
    return report.exit_code


def cmd_catalogue(args: argparse.Namespace) -> int:
    entries = list(catalogue())
    for k in range(2, args.fan_max + 1):
        entries.append(CatalogueEntry(fan_kind(k), fan(k), True))
    if args.json:
        docs = []
        for entry in entries:
            doc = {
                "kind": entry.kind.tag,
                "minimal": entry.minimal,
                "graph6": to_graph6(entry.graph),
            }
            if entry.kind.k is not None:
                doc["k"] = entry.kind.k
            docs.append(doc)
        print(json.dumps(docs, sort_keys=True, indent=2))
        return EXIT_YES
    for entry in entries:
        if args.format == "dot":
            print(f"// {entry.kind}")
            sys.stdout.write(to_dot(entry.graph))
        else:
            print(f"{entry.kind}\t{to_graph6(entry.graph)}")
    return EXIT_YES


def cmd_convert(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.input, args.input_format)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(_emit_graph(g, args.format))
    return EXIT_YES


def _elapsed(started: float) -> None:
    print(f"wall-time: {time.monotonic() - started:.2f}s", file=sys.stderr)


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-",
                   help="graph file, or - for stdin (default)")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpartition",
        description="Certifying matrix-partition tools for chordal graphs",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="certify one graph under the built-in pattern")
    _add_input_options(p)
    p.add_argument("--force-oracle", action="store_true",
                   help="fall back to the exhaustive solver on non-chordal input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    _add_input_options(p)
    p.add_argument("certificate", help="certificate JSON file, or -")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("obstruction", help="scan a small graph for catalogue members")
    _add_input_options(p)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("solve", help="exhaustive solve under an arbitrary pattern")
    _add_input_options(p)
    p.add_argument("--pattern", required=True, help="pattern text file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="connected chordal graphs up to max-n")
    p.add_argument("--max-n", type=int, default=6, dest="max_n",
                   metavar="K", choices=range(1, MAX_ENUMERATION_N + 1))
    p.add_argument("--verify", action="store_true",
                   help="check solver/oracle/scan agreement instead of printing")
    p.add_argument("--counts", action="store_true",
                   help="print per-n counts to stderr")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", help="validate certificates on random chordal graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attach-bias", type=float, default=0.5, dest="attach_bias")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("minimality", help="oracle-check minimal-obstruction status")
    p.add_argument("kinds", nargs="*",
                   help="kind tags, e.g. F3 or Fan(2); default: F1..F7, Fan(2..5)")
    p.set_defaults(func=cmd_minimality)

    p = sub.add_parser("catalogue", help="emit the catalogue graphs")
    p.add_argument("--fan-max", type=int, default=3, dest="fan_max")
    p.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    p.add_argument("--json", action="store_true",
                   help="emit one JSON array instead of per-entry lines")
    p.set_defaults(func=cmd_catalogue)

    p = sub.add_parser("convert", help="convert between graph formats")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--input-format", choices=("graph6", "edgelist"),
                   default="graph6", dest="input_format")
    p.add_argument("--format", choices=("graph6", "edgelist", "dot"),
                   default="graph6")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
