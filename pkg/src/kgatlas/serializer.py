"""Canonical N-Triples output.

Equal graphs serialize to byte-identical documents: lines are sorted,
then blank nodes are renamed b0, b1, ... in order of first appearance
in the sorted output. Renaming after sorting keeps the line order
independent of the labels the parser happened to assign.
"""

from __future__ import annotations

from .graph import Graph
from .terms import BlankNode, Iri, Literal, Term, Triple
from .vocab import RDF_LANGSTRING, XSD_STRING

_LITERAL_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _escape_literal(value: str) -> str:
    chars: list[str] = []
    for c in value:
        if c in _LITERAL_ESCAPES:
            chars.append(_LITERAL_ESCAPES[c])
        elif ord(c) < 0x20:
            chars.append(f"\\u{ord(c):04X}")
        else:
            chars.append(c)
    return "".join(chars)


def _escape_iri(value: str) -> str:
    chars: list[str] = []
    for c in value:
        if ord(c) <= 0x20 or c in '<>"{}|^`\\':
            chars.append(f"\\u{ord(c):04X}")
        else:
            chars.append(c)
    return "".join(chars)


def _format_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{_escape_iri(term.value)}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    assert isinstance(term, Literal)
    quoted = f'"{_escape_literal(term.lexical)}"'
    if term.language:
        return f"{quoted}@{term.language}"
    if term.datatype == XSD_STRING:
        return quoted
    return f"{quoted}^^<{_escape_iri(term.datatype.value)}>"


def serialize_ntriples(graph: Graph) -> str:
    """Serialize a graph to canonical N-Triples text.

    Returns "" for the empty graph; otherwise every line ends with a
    newline. Equal graphs always produce identical bytes.
    """
    entries: list[tuple[str, Triple]] = []
    for triple in graph:
        entries.append(
            (
                f"{_format_term(triple.subject)} {_format_term(triple.predicate)}"
                f" {_format_term(triple.object)} .",
                triple,
            )
        )
    entries.sort(key=lambda e: e[0])

    names: dict[str, str] = {}
    for _, triple in entries:
        for term in (triple.subject, triple.object):
            if isinstance(term, BlankNode) and term.label not in names:
                names[term.label] = f"b{len(names)}"

    lines: list[str] = []
    for _, triple in entries:
        subject, obj = triple.subject, triple.object
        if isinstance(subject, BlankNode):
            subject = BlankNode(names[subject.label])
        if isinstance(obj, BlankNode):
            obj = BlankNode(names[obj.label])
        lines.append(
            f"{_format_term(subject)} {_format_term(triple.predicate)}"
            f" {_format_term(obj)} .\n"
        )
    return "".join(lines)
