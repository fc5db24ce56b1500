"""Decomposition documents: a stable JSON schema plus re-verification checks.

Documents round-trip losslessly (sorted keys, fixed separators, one trailing
newline), so byte-identical reruns are a meaningful determinism check.  The
formula constant is serialized as a decimal string because it exceeds native
integer widths in most consumers.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional

from .centred import CentreCertificate, certificate_is_valid
from .coarse import CentredDecomposition, ConstructionParams
from .errors import InputError, ParseError
from .graph import Graph
from .treedecomp import ClassicBuildResult, TreeDecomposition, validate

SCHEMA_VERSION = "1"


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def coarse_document(
    g: Graph,
    built: CentredDecomposition,
    params: ConstructionParams,
    command: str,
    seed: Optional[int] = None,
    x: Iterable[int] = (),
) -> dict:
    td = built.decomposition
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": _graph_payload(g),
        "tree_edges": [list(e) for e in td.edges],
        "bags": [sorted(b) for b in td.bags],
        "certificates": [
            {
                "node": i,
                "centres": sorted(c.centres),
                "radius": c.radius,
                "mode": c.mode,
                "size": c.size,
            }
            for i, c in enumerate(built.certificates)
        ],
        "params": {
            "mode": "coarse",
            "k": params.k,
            "t": params.t,
            "z_fraction_denominator": params.z_fraction_denominator,
            "base_alpha_threshold": params.base_alpha_threshold,
            "x_alpha_cap": params.x_alpha_cap,
            "formula_d": str(params.formula_d),
            "overridden": list(params.overridden),
        },
        "provenance": {
            "command": command,
            "seed": seed,
            "guard_tripped": built.guard_tripped,
            "hub_node": built.hub_node,
            "realized_k": built.realized_k,
            "x": sorted(x),
        },
    }


def classic_document(
    g: Graph, result: ClassicBuildResult, command: str, seed: Optional[int] = None
) -> dict:
    if result.decomposition is None:
        raise InputError("cannot emit a document for a failed construction")
    td = result.decomposition
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": _graph_payload(g),
        "tree_edges": [list(e) for e in td.edges],
        "bags": [sorted(b) for b in td.bags],
        "certificates": [],
        "params": {
            "mode": "classic",
            "max_sep_size": result.max_sep_size,
            "tracked_cap": result.tracked_cap,
        },
        "provenance": {
            "command": command,
            "seed": seed,
            "guard_tripped": False,
            "hub_node": None,
            "x": [],
        },
    }


def document_to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"document is not valid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("document root must be a JSON object")
    for key in ("schema_version", "graph", "tree_edges", "bags", "certificates", "params", "provenance"):
        if key not in doc:
            raise ParseError(f"document is missing the {key!r} field")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise ParseError(
            f"unsupported schema_version {doc['schema_version']!r}, expected {SCHEMA_VERSION!r}"
        )
    nodes = len(doc["bags"])
    for cert in doc["certificates"]:
        if not 0 <= cert.get("node", -1) < nodes:
            raise ParseError(f"certificate references missing node {cert.get('node')!r}")
    return doc


def document_graph(doc: dict) -> Graph:
    graph = doc["graph"]
    return Graph(graph["n"], [tuple(e) for e in graph["edges"]])


def document_decomposition(doc: dict) -> TreeDecomposition:
    return TreeDecomposition(
        tuple(frozenset(b) for b in doc["bags"]),
        tuple((a, b) for a, b in doc["tree_edges"]),
    )


def run_document_checks(g: Graph, doc: dict, checks: Iterable[str]) -> list[str]:
    """Re-verify a parsed document against a graph; returns violations.

    Supported checks: "valid" (tree-decomposition conditions), "centred"
    (every certificate re-validates in its stated mode), "hub" (the hub bag
    contains the closed neighborhood of the recorded x).
    """
    if document_graph(doc) != g:
        raise InputError("document was produced for a different graph")
    td = document_decomposition(doc)
    out: list[str] = []
    for check in checks:
        if check == "valid":
            out.extend(validate(g, td))
        elif check == "centred":
            for cert in doc["certificates"]:
                node = cert["node"]
                bag = td.bags[node]
                within = bag if cert["mode"] == "induced" else None
                rebuilt = CentreCertificate(
                    frozenset(cert["centres"]), cert["radius"], bag, within
                )
                if cert["size"] != len(rebuilt.centres):
                    out.append(f"certificate at node {node} misstates its size")
                if not certificate_is_valid(g, rebuilt):
                    out.append(f"certificate at node {node} does not cover its bag")
        elif check == "hub":
            hub = doc["provenance"].get("hub_node")
            if hub is None:
                out.append("document records no hub node")
                continue
            x = doc["provenance"].get("x", [])
            if not g.ball(x, 1) <= td.bags[hub]:
                out.append(f"hub bag {hub} does not contain the closed neighborhood of x")
        else:
            raise InputError(f"unknown check {check!r}")
    return out
