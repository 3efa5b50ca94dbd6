"""Linking graph nodes to the text spans they were extracted from.

A span is attached to a node in the data graph itself:

    ex:attack1 viz:sourceSpan [ viz:doc "ex1" ; viz:begin 52 ; viz:end 60 ] .

Offsets count Unicode codepoints, begin inclusive, end exclusive.
Span structs whose pieces are missing or unparseable are skipped
rather than rejected; the graph may carry annotations this module
does not understand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KgAtlasError
from .graph import Graph
from .terms import Iri, Literal, Subject, node_id, term_sort_key
from .vocab import VIZ_BEGIN, VIZ_DOC, VIZ_END, VIZ_SOURCE_SPAN


class SpanOutOfBoundsError(KgAtlasError):
    """A span's offsets fall outside its document."""

    code = "span_out_of_bounds"

    def __init__(self, doc_id: str, begin: int, end: int, length: int):
        super().__init__(
            f"span [{begin}, {end}) exceeds document {doc_id!r} of length {length}"
        )
        self.doc_id = doc_id


class UnknownDocumentError(KgAtlasError):
    """A document id that no uploaded document carries."""

    code = "unknown_document"

    def __init__(self, doc_id: str):
        super().__init__(f"unknown document {doc_id!r}")
        self.doc_id = doc_id


@dataclass(frozen=True, slots=True)
class TextSpan:
    doc_id: str
    begin: int
    end: int

    def __post_init__(self):
        if self.begin < 0 or self.end <= self.begin:
            raise ValueError(f"invalid span [{self.begin}, {self.end})")


def _int_value(term) -> int | None:
    if isinstance(term, Literal):
        try:
            return int(term.lexical)
        except ValueError:
            return None
    return None


def _span_records(graph: Graph) -> list[tuple[Subject, TextSpan]]:
    records: list[tuple[Subject, TextSpan]] = []
    for triple in graph.match(predicate=VIZ_SOURCE_SPAN):
        struct = triple.object
        if isinstance(struct, Literal):
            continue
        doc_id: str | None = None
        for term in graph.objects(struct, VIZ_DOC):
            if isinstance(term, Literal):
                doc_id = term.lexical
                break
        begin = next(
            (v for v in (_int_value(t) for t in graph.objects(struct, VIZ_BEGIN)) if v is not None),
            None,
        )
        end = next(
            (v for v in (_int_value(t) for t in graph.objects(struct, VIZ_END)) if v is not None),
            None,
        )
        if doc_id is None or begin is None or end is None:
            continue
        if begin < 0 or end <= begin:
            continue
        records.append((triple.subject, TextSpan(doc_id, begin, end)))
    return records


def node_spans(graph: Graph, node: Subject) -> list[TextSpan]:
    """All spans attached to one node, sorted, without document checks."""
    spans = [span for subject, span in _span_records(graph) if subject == node]
    spans.sort(key=lambda s: (s.doc_id, s.begin, s.end))
    return spans


class DocumentStore:
    """Documents plus a two-way node/span index."""

    def __init__(
        self,
        documents: dict[str, str],
        spans: list[tuple[Subject, TextSpan]],
    ):
        self._documents = dict(documents)
        self._by_node: dict[str, list[TextSpan]] = {}
        self._by_doc: dict[str, list[tuple[int, int, Subject]]] = {}
        for node, span in spans:
            self._by_node.setdefault(node_id(node), []).append(span)
            self._by_doc.setdefault(span.doc_id, []).append((span.begin, span.end, node))
        for items in self._by_node.values():
            items.sort(key=lambda s: (s.doc_id, s.begin, s.end))
        for items in self._by_doc.values():
            items.sort(key=lambda e: (e[0], e[1], term_sort_key(e[2])))

    @property
    def doc_ids(self) -> list[str]:
        return sorted(self._documents)

    def document(self, doc_id: str) -> str:
        if doc_id not in self._documents:
            raise UnknownDocumentError(doc_id)
        return self._documents[doc_id]

    def spans_for_node(self, node: Subject | Iri) -> list[TextSpan]:
        return list(self._by_node.get(node_id(node), []))

    def nodes_at_offset(self, doc_id: str, offset: int) -> list[Subject]:
        """Nodes whose span covers the given codepoint offset."""
        if doc_id not in self._documents:
            raise UnknownDocumentError(doc_id)
        entries = self._by_doc.get(doc_id, [])
        nodes: list[Subject] = []
        seen: set[str] = set()
        for begin, end, node in entries:
            if begin > offset:
                break
            if begin <= offset < end:
                key = node_id(node)
                if key not in seen:
                    seen.add(key)
                    nodes.append(node)
        return nodes


def load_provenance(graph: Graph, documents: dict[str, str]) -> DocumentStore:
    """Validate span annotations against documents and build the index.

    Raises UnknownDocumentError when a span names a document that was
    not supplied and SpanOutOfBoundsError when offsets exceed the
    document's codepoint length.
    """
    records = _span_records(graph)
    for _, span in records:
        if span.doc_id not in documents:
            raise UnknownDocumentError(span.doc_id)
        length = len(documents[span.doc_id])
        if span.end > length:
            raise SpanOutOfBoundsError(span.doc_id, span.begin, span.end, length)
    return DocumentStore(documents, records)
