"""Command-line surface: generate, analyze, separate, build, verify, scan.

Exit codes are a stable contract: 0 ok, 1 verification checks failed,
2 input/usage error, 3 hypothesis-failure witness produced, 4 internal
assertion failed.  All randomness flows through --seed (default 0).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import coarse, document, graph, separators, treedecomp
from .errors import HypothesisViolation, InputError, InternalError, ParseError, ScaleError
from .independence import alpha

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_INPUT = 2
EXIT_WITNESS = 3
EXIT_INTERNAL = 4


def _load_graph(path: str) -> graph.Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    first = text.lstrip().split("\n", 1)[0]
    if " " in first.strip():
        return graph.parse_edgelist(text)
    return graph.parse_graph6(text)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_vertex_list(spec: str) -> list[int]:
    if not spec.strip():
        return []
    try:
        return [int(tok) for tok in spec.split(",")]
    except ValueError:
        raise InputError(f"expected comma-separated vertex ids, got {spec!r}") from None


# -- gen ------------------------------------------------------------------------


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected an integer size, got {token!r}") from None


def _generate(family: str, sizes: list[str], seed: int) -> graph.Graph:
    if family.startswith("two-subdivision-of:"):
        inner = _generate(family[len("two-subdivision-of:") :], sizes, seed)
        return graph.two_subdivision(inner)[0]

    def want(count: int) -> list[str]:
        if len(sizes) != count:
            raise InputError(f"family {family!r} takes {count} size argument(s)")
        return sizes

    if family == "path":
        return graph.path(_int(want(1)[0]))
    if family == "cycle":
        return graph.cycle(_int(want(1)[0]))
    if family == "complete":
        return graph.complete(_int(want(1)[0]))
    if family == "grid":
        a, b = want(2)
        return graph.grid(_int(a), _int(b))
    if family == "biclique":
        s, t = want(2)
        return graph.complete_bipartite(_int(s), _int(t))
    if family == "random":
        n, p = want(2)
        try:
            prob = float(p)
        except ValueError:
            raise InputError(f"expected an edge probability, got {p!r}") from None
        return graph.random_graph(_int(n), prob, seed)
    raise InputError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    g = _generate(args.family, args.sizes, args.seed)
    if args.format == "edgelist":
        text = graph.emit_edgelist(g)
    else:
        text = graph.emit_graph6(g) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# -- analyze ----------------------------------------------------------------------


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    report: dict = {"n": g.n, "m": g.m, "alpha": alpha(g).value}
    try:
        report["treewidth"] = treedecomp.exact_treewidth(g)[0]
    except ScaleError as exc:
        report["treewidth"] = None
        report["treewidth_skipped"] = str(exc)
    try:
        report["separation_number_indicator"] = separators.separation_number_indicator(g)
    except ScaleError as exc:
        report["separation_number_indicator"] = None
        report["separation_number_skipped"] = str(exc)
    _emit(json.dumps(report, sort_keys=True, indent=1) + "\n", args.out)
    return EXIT_OK


# -- sep --------------------------------------------------------------------------


def _read_weights(path: str, n: int) -> separators.WeightFunction:
    weights = [0] * n
    try:
        lines = Path(path).read_text().split("\n")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    for i, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"weights line must be 'vertex weight', got {line!r}", line=i)
        try:
            v, w = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"weights line must hold two integers, got {line!r}", line=i)
        if not 0 <= v < n:
            raise ParseError(f"weight for unknown vertex {v}", line=i)
        if w < 0:
            raise ParseError(f"negative weight {w} for vertex {v}", line=i)
        weights[v] = w
    return separators.WeightFunction(tuple(weights))


def cmd_sep(args) -> int:
    g = _load_graph(args.graph)
    if args.all_indicators:
        ok, failing = separators.admits_kr_balanced_separators_indicator(g, args.k, args.r)
        payload = {"admits": ok, "k": args.k, "r": args.r}
        if not ok:
            payload["failing_indicator"] = sorted(failing)
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return EXIT_OK
    if args.weights is not None:
        mu = _read_weights(args.weights, g.n)
    elif args.indicator is not None:
        mu = separators.WeightFunction.indicator(g.n, _parse_vertex_list(args.indicator))
    else:
        raise InputError("one of --weights, --indicator, --all-indicators is required")
    witness = separators.find_centred_balanced_separator(g, mu, args.k, args.r)
    if witness is None:
        _emit("none\n", args.out)
        return EXIT_OK
    payload = {
        "centres": sorted(witness.centres),
        "radius": witness.radius,
        "separator": sorted(witness.separator),
        "heaviest_component_weight": witness.heaviest_component_weight,
        "total_weight": witness.total_weight,
    }
    _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
    return EXIT_OK


# -- build ------------------------------------------------------------------------


def cmd_build(args) -> int:
    g = _load_graph(args.graph)
    command = "build " + " ".join(args.echo_argv)
    if args.mode == "classic":
        if args.max_sep_size is None:
            raise InputError("--max-sep-size is required in classic mode")
        result = treedecomp.decomposition_from_separator_oracle(g, args.max_sep_size)
        if not result.ok:
            payload = {
                "error": "separator-oracle-failure",
                "witness_tracked_set": sorted(result.failing_set),
                "max_sep_size": result.max_sep_size,
            }
            _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
            return EXIT_WITNESS
        doc = document.classic_document(g, result, command, seed=args.seed)
        _emit(document.document_to_json(doc), args.out)
        return EXIT_OK

    params = coarse.ConstructionParams(
        k=args.k,
        t=args.t,
        z_fraction_denominator=args.z_denominator,
        base_alpha_threshold=args.base_alpha_threshold,
        x_alpha_cap=args.x_alpha_cap,
    )
    x = _parse_vertex_list(args.x)
    try:
        built = coarse.build_coarse_decomposition(g, x, params)
    except HypothesisViolation as exc:
        payload = {
            "error": "hypothesis-violation",
            "witness_independent_set": sorted(exc.independent_set),
            "k": exc.k,
            "r": exc.r,
        }
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return EXIT_WITNESS
    doc = document.coarse_document(g, built, params, command, seed=args.seed, x=x)
    violations = document.run_document_checks(g, doc, ("valid", "centred", "hub"))
    if violations:  # pragma: no cover - the builder validates by construction
        raise InternalError("; ".join(violations))
    _emit(document.document_to_json(doc), args.out)
    return EXIT_OK


# -- verify -----------------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    doc = document.parse_document(Path(args.document).read_text())
    if args.check:
        checks = tuple(args.check)
    elif doc["provenance"].get("hub_node") is None:
        checks = ("valid", "centred")  # classic documents carry no hub
    else:
        checks = ("valid", "centred", "hub")
    violations = document.run_document_checks(g, doc, checks)
    for violation in violations:
        print(violation)
    return EXIT_CHECKS_FAILED if violations else EXIT_OK


# -- lemma-suite --------------------------------------------------------------------


def cmd_lemma_suite(args) -> int:
    failures = []
    for k in _parse_vertex_list(args.k):
        start = time.perf_counter()
        report = coarse.check_subdivided_clique_obstruction(k)
        elapsed = time.perf_counter() - start
        print(
            f"obstruction k={k}: n={report.vertex_count}, "
            f"{report.centre_sets_checked} centre sets checked, "
            f"{report.balanced_found} balanced separators found ({elapsed:.2f}s)"
        )
        if not report.ok:
            failures.append({"check": "obstruction", "k": k})
    start = time.perf_counter()
    laws = treedecomp.check_width_separation_laws(args.law_max_n)
    elapsed = time.perf_counter() - start
    print(
        f"width/separation laws: {laws.graphs_checked} graphs up to n={laws.max_n}, "
        f"{len(laws.violations)} violations ({elapsed:.1f}s)"
    )
    for violation in laws.violations:
        failures.append({"check": "laws", "violation": violation})
    if failures:
        print(json.dumps(failures, sort_keys=True))
        return EXIT_INTERNAL
    return EXIT_OK


# -- scan ----------------------------------------------------------------------------


def _load_corpus(spec: str) -> list[tuple[str, graph.Graph | Exception]]:
    if spec.startswith("builtin:"):
        return list(coarse.builtin_corpus(spec[len("builtin:") :]))
    root = Path(spec)
    if not root.is_dir():
        raise InputError(f"corpus {spec!r} is neither a directory nor builtin:<name>")
    out: list[tuple[str, graph.Graph | Exception]] = []
    for p in sorted(root.iterdir()):
        if p.suffix in (".g6", ".graph6", ".el", ".edgelist", ".txt"):
            try:
                out.append((p.name, _load_graph(str(p))))
            except (ParseError, InputError) as exc:
                out.append((p.name, exc))  # an unreadable file becomes a row
    return out


def cmd_scan(args) -> int:
    corpus = _load_corpus(args.corpus)
    params = coarse.ConstructionParams(
        k=args.k,
        z_fraction_denominator=args.z_denominator,
        base_alpha_threshold=args.base_alpha_threshold,
        x_alpha_cap=args.x_alpha_cap,
    )
    rows = []
    for name, entry in corpus:
        if isinstance(entry, Exception):
            row = {f: "" for f in coarse.SCAN_FIELDS}
            row["graph"] = name
            row["admits"] = f"error:{type(entry).__name__}"
            rows.append(row)
        else:
            rows.extend(coarse.scan_corpus([(name, entry)], args.k, params))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=coarse.SCAN_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buffer.getvalue(), args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coarsekit",
        description="Exact toolkit for centred sets, balanced separators, and tree-decompositions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph from a named family")
    p.add_argument("family")
    p.add_argument("sizes", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="report n, m, alpha, treewidth, separation number")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sep", help="search for a ball-centred balanced separator")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--weights")
    p.add_argument("--indicator")
    p.add_argument("--all-indicators", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("build", help="build a tree-decomposition document")
    p.add_argument("graph")
    p.add_argument("--mode", choices=("coarse", "classic"), default="coarse")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--z-denominator", type=int, default=None)
    p.add_argument("--base-alpha-threshold", type=int, default=None)
    p.add_argument("--x-alpha-cap", type=int, default=None)
    p.add_argument("--x", default="")
    p.add_argument("--max-sep-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="re-verify a decomposition document")
    p.add_argument("graph")
    p.add_argument("document")
    p.add_argument(
        "--check", action="append", choices=("valid", "centred", "hub"), default=None
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma-suite", help="obstruction checks plus exhaustive law sweep")
    p.add_argument("--k", default="1,2")
    p.add_argument("--law-max-n", type=int, default=6)
    p.set_defaults(func=cmd_lemma_suite)

    p = sub.add_parser("scan", help="centred-decomposition evidence scan over a corpus")
    p.add_argument("corpus")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--z-denominator", type=int, default=2)
    p.add_argument("--base-alpha-threshold", type=int, default=4)
    p.add_argument("--x-alpha-cap", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.echo_argv = list(argv)
    try:
        return args.func(args)
    except (ParseError, InputError, ScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisViolation as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_WITNESS
    except (InternalError, AssertionError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
