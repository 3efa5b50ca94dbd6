"""Command line interface: render, facets, serve.

Exit codes: 0 success, 1 domain error (parse failure, unknown seed,
missing renderer, busy port), 2 usage error. Domain errors print one
stderr line formatted ``error: <code>: <message>``.
"""

from __future__ import annotations

import argparse
import os
import socket
import sys

from .dot import Layout, emit_dot, render
from .errors import KgAtlasError
from .facets import SubgraphRequest, extract_subgraph, list_concepts, list_individuals
from .graph import Graph
from .ontology import Ontology, load_ontology
from .parser import parse_rdf
from .provenance import load_provenance
from .terms import node_id, parse_node_id


class PortBusyError(KgAtlasError):
    code = "port_busy"


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _rdf_format(path: str) -> str:
    if path.endswith((".nt", ".ntriples")):
        return "ntriples"
    return "turtle"


def _load_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_rdf(fh.read(), format=_rdf_format(path))


def _load_ontology(path: str) -> Ontology:
    return load_ontology(_load_graph(path))


def _parse_docs(pairs: list[str]) -> dict[str, str]:
    docs: dict[str, str] = {}
    for pair in pairs:
        doc_id, sep, path = pair.partition("=")
        if not sep or not doc_id:
            raise KgAtlasError(f"--doc expects <id>=<path>, got {pair!r}")
        docs[doc_id] = _read_text(path)
    return docs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kg-atlas",
        description="Faceted exploration of extracted knowledge graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    render_p = sub.add_parser("render", help="write a subgraph view to a DOT or SVG file")
    render_p.add_argument("--rdf", required=True, help="RDF data file (.ttl or .nt)")
    render_p.add_argument("--ontology", help="ontology file (default: $KGATLAS_ONTOLOGY)")
    render_p.add_argument(
        "--doc",
        action="append",
        default=[],
        metavar="ID=PATH",
        help="source text document, repeatable",
    )
    render_p.add_argument("--mode", choices=["concept", "individual"], default="individual")
    render_p.add_argument(
        "--seed", action="append", default=[], required=False, help="seed IRI, repeatable"
    )
    render_p.add_argument("--depth", type=int, default=1)
    render_p.add_argument("--lang", default="en")
    render_p.add_argument(
        "--layout",
        choices=[layout.value for layout in Layout],
        default="hierarchical",
    )
    render_p.add_argument("--format", choices=["dot", "svg"], default="dot")
    render_p.add_argument("-o", "--output", required=True, help="output file path")

    facets_p = sub.add_parser("facets", help="print concept and individual facets")
    facets_p.add_argument("--rdf", required=True)
    facets_p.add_argument("--ontology", help="ontology file (default: $KGATLAS_ONTOLOGY)")
    facets_p.add_argument("--lang", default="en")

    serve_p = sub.add_parser("serve", help="run the HTTP service")
    serve_p.add_argument("--ontology", help="ontology file (default: $KGATLAS_ONTOLOGY)")
    serve_p.add_argument("--port", type=int, default=None, help="default: $KGATLAS_PORT or 8000")
    serve_p.add_argument("--host", default="127.0.0.1")
    serve_p.add_argument("--ui-dir", default=None, help="static frontend directory")

    return parser


def _ontology_path(args: argparse.Namespace) -> str:
    path = args.ontology or os.environ.get("KGATLAS_ONTOLOGY")
    if not path:
        raise KgAtlasError("no ontology given (--ontology or KGATLAS_ONTOLOGY)")
    return path


def run_render(args: argparse.Namespace) -> int:
    graph = _load_graph(args.rdf)
    ontology = _load_ontology(_ontology_path(args))
    docs = _parse_docs(args.doc)
    if docs:
        load_provenance(graph, docs)
    if not args.seed:
        raise KgAtlasError("at least one --seed is required")
    seeds = tuple(parse_node_id(seed) for seed in args.seed)
    request = SubgraphRequest(mode=args.mode, seeds=seeds, depth=args.depth, lang=args.lang)
    view = extract_subgraph(graph, ontology, request)
    doc = emit_dot(view, Layout(args.layout))
    if args.format == "dot":
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(doc.text)
    else:
        data = render(doc, "svg", renderer_dir=os.environ.get("KGATLAS_RENDERER"))
        with open(args.output, "wb") as fh:
            fh.write(data)
    return 0


def run_facets(args: argparse.Namespace) -> int:
    graph = _load_graph(args.rdf)
    ontology = _load_ontology(_ontology_path(args))
    for facet in list_concepts(graph, ontology, args.lang):
        print(f"{facet.label}\t{facet.class_iri.value}\t{facet.instance_count}")
    for facet in list_individuals(graph, ontology, args.lang):
        print(f"{facet.label}\t{node_id(facet.node)}\t")
    return 0


def run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    ontology = _load_ontology(_ontology_path(args))
    port = args.port
    if port is None:
        port = int(os.environ.get("KGATLAS_PORT", "8000"))
    # Probe the port up front so a busy port is an orderly exit, not a
    # traceback from deep inside the event loop.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, port))
    except OSError as exc:
        raise PortBusyError(f"cannot bind {args.host}:{port}: {exc}") from None
    finally:
        probe.close()
    app = create_app(
        ontology,
        renderer_dir=os.environ.get("KGATLAS_RENDERER"),
        ui_dir=args.ui_dir,
    )
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"render": run_render, "facets": run_facets, "serve": run_serve}
    try:
        return handlers[args.command](args)
    except KgAtlasError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: bad_request: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: io_error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
