"""HTTP API over graph sessions.

A session is one uploaded RDF document plus its source texts, parsed
once and immutable afterwards. The ontology is loaded at startup and
shared by all sessions. Every error response carries a JSON body
{code, message, line?, column?} with a code from the closed taxonomy:
syntax_error, unknown_prefix is folded into syntax_error, not_found,
unknown_seed, bad_depth, bad_request, unknown_document,
span_out_of_bounds, renderer_unavailable.
"""

from __future__ import annotations

import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass

from fastapi import FastAPI, File, Form, Query, Request, UploadFile
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import dot as dot_mod
from .errors import KgAtlasError
from .facets import (
    SubgraphRequest,
    ViewGraph,
    extract_subgraph,
    list_concepts,
    list_individuals,
    triple_table,
)
from .graph import Graph
from .ontology import Ontology
from .parser import parse_rdf
from .provenance import DocumentStore, load_provenance
from .terms import node_id, parse_node_id


class NotFoundError(KgAtlasError):
    code = "not_found"


class BadDepthError(KgAtlasError):
    code = "bad_depth"


class BadRequestError(KgAtlasError):
    code = "bad_request"


_STATUS = {
    "not_found": 404,
    "unknown_document": 404,
    "renderer_unavailable": 503,
}


@dataclass(frozen=True)
class GraphSession:
    id: str
    graph: Graph
    ontology: Ontology
    store: DocumentStore
    created_at: float


class SessionStore:
    """In-memory LRU map of sessions; oldest-touched evicted at the cap."""

    def __init__(self, max_sessions: int = 64):
        self._max = max_sessions
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, GraphSession] = OrderedDict()

    def add(self, session: GraphSession) -> None:
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self._max:
                self._sessions.popitem(last=False)

    def get(self, session_id: str) -> GraphSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise NotFoundError(f"unknown session {session_id!r}")
            self._sessions.move_to_end(session_id)
            return session

    def __len__(self) -> int:
        with self._lock:
            return len(self._sessions)


def view_to_json(view: ViewGraph) -> dict:
    return {
        "nodes": [
            {
                "id": n.id,
                "label": n.label,
                "classIri": n.class_iri.value if n.class_iri else None,
                "classLabel": n.class_label,
                "iconKey": n.icon_key,
                "tooltip": [{"property": p, "value": v} for p, v in n.tooltip],
                "spans": [
                    {"doc": s.doc_id, "begin": s.begin, "end": s.end} for s in n.spans
                ],
            }
            for n in view.nodes
        ],
        "edges": [
            {
                "source": node_id(e.source),
                "target": node_id(e.target),
                "property": e.property.value,
                "label": e.label,
            }
            for e in view.edges
        ],
        "lang": view.lang,
        "depth": view.depth,
        "seeds": sorted(node_id(s) for s in view.seeds),
    }


def _error_body(exc: KgAtlasError) -> dict:
    body = {"code": exc.code, "message": str(exc)}
    line = getattr(exc, "line", None)
    column = getattr(exc, "column", None)
    if line is not None:
        body["line"] = line
    if column is not None:
        body["column"] = column
    return body


def _parse_depth(raw: str) -> int:
    try:
        depth = int(raw)
    except ValueError:
        raise BadDepthError(f"depth must be an integer, got {raw!r}") from None
    if depth < 0:
        raise BadDepthError(f"depth must be non-negative, got {depth}")
    return depth


def _parse_request(mode: str, seeds: list[str], depth: str, lang: str) -> SubgraphRequest:
    depth_value = _parse_depth(depth)
    flat: list[str] = []
    for chunk in seeds:
        flat.extend(part for part in chunk.split(",") if part)
    seed_terms = []
    for raw in flat:
        try:
            seed_terms.append(parse_node_id(raw))
        except ValueError:
            raise BadRequestError(f"malformed seed {raw!r}") from None
    try:
        return SubgraphRequest(
            mode=mode, seeds=tuple(seed_terms), depth=depth_value, lang=lang
        )
    except ValueError as exc:
        raise BadRequestError(str(exc)) from None


def create_app(
    ontology: Ontology,
    *,
    renderer_dir: str | None = None,
    max_sessions: int = 64,
    ui_dir: str | None = None,
) -> FastAPI:
    """Build the application around one loaded ontology."""
    app = FastAPI(title="kg-atlas", docs_url=None, redoc_url=None)
    sessions = SessionStore(max_sessions)

    @app.exception_handler(KgAtlasError)
    async def domain_error(request: Request, exc: KgAtlasError):
        status = _STATUS.get(exc.code, 400)
        return JSONResponse(status_code=status, content=_error_body(exc))

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        if exc.status_code == 404:
            body = {"code": "not_found", "message": "no such resource"}
        else:
            body = {"code": "bad_request", "message": str(exc.detail)}
        return JSONResponse(status_code=exc.status_code, content=body)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": "invalid request parameters"},
        )

    @app.post("/api/sessions")
    def create_session(
        rdf: UploadFile,
        format: str = Form("turtle"),
        documents: list[UploadFile] = File(default=[]),
    ):
        if format not in ("turtle", "ntriples"):
            raise BadRequestError(f"unknown RDF format {format!r}")
        graph = parse_rdf(rdf.file.read(), format=format)
        docs: dict[str, str] = {}
        for item in documents:
            docs[item.filename] = item.file.read().decode("utf-8")
        store = load_provenance(graph, docs)
        session = GraphSession(
            id=secrets.token_hex(16),
            graph=graph,
            ontology=ontology,
            store=store,
            created_at=time.time(),
        )
        sessions.add(session)
        return {"id": session.id, "triples": len(graph)}

    @app.get("/api/sessions/{session_id}/facets")
    def get_facets(session_id: str, lang: str = "en"):
        session = sessions.get(session_id)
        concepts = list_concepts(session.graph, session.ontology, lang)
        individuals = list_individuals(session.graph, session.ontology, lang)
        return {
            "concepts": [
                {"classIri": c.class_iri.value, "label": c.label, "count": c.instance_count}
                for c in concepts
            ],
            "individuals": [
                {
                    "id": node_id(i.node),
                    "label": i.label,
                    "classIri": i.class_iri.value if i.class_iri else None,
                }
                for i in individuals
            ],
            "lang": lang,
        }

    @app.get("/api/sessions/{session_id}/view")
    def get_view(
        session_id: str,
        mode: str = "individual",
        seeds: list[str] = Query(default=[]),
        depth: str = "1",
        lang: str = "en",
        format: str = "view",
        layout: str = "hierarchical",
    ):
        session = sessions.get(session_id)
        request = _parse_request(mode, seeds, depth, lang)
        view = extract_subgraph(session.graph, session.ontology, request)
        if format == "view":
            return view_to_json(view)
        if format == "table":
            rows = triple_table(view, session.graph, session.ontology, lang)
            return {
                "rows": [
                    {"subject": r.subject, "predicate": r.predicate, "object": r.object}
                    for r in rows
                ]
            }
        try:
            layout_value = dot_mod.Layout(layout)
        except ValueError:
            raise BadRequestError(f"unknown layout {layout!r}") from None
        doc = dot_mod.emit_dot(view, layout_value)
        if format == "dot":
            return PlainTextResponse(doc.text)
        if format == "svg":
            data = dot_mod.render(doc, "svg", renderer_dir=renderer_dir)
            return Response(content=data, media_type="image/svg+xml")
        raise BadRequestError(f"unknown view format {format!r}")

    @app.get("/api/sessions/{session_id}/table")
    def get_table(
        session_id: str,
        mode: str = "individual",
        seeds: list[str] = Query(default=[]),
        depth: str = "1",
        lang: str = "en",
    ):
        session = sessions.get(session_id)
        request = _parse_request(mode, seeds, depth, lang)
        view = extract_subgraph(session.graph, session.ontology, request)
        rows = triple_table(view, session.graph, session.ontology, lang)
        return {
            "rows": [
                {"subject": r.subject, "predicate": r.predicate, "object": r.object}
                for r in rows
            ]
        }

    @app.get("/api/sessions/{session_id}/documents/{doc_id}")
    def get_document(session_id: str, doc_id: str):
        session = sessions.get(session_id)
        return PlainTextResponse(session.store.document(doc_id))

    @app.get("/api/meta/languages")
    def get_languages():
        return list(ontology.supported_languages)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
