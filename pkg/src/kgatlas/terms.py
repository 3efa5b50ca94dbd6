"""RDF data model: IRIs, blank nodes, literals and triples.

All terms are immutable and hashable so they can live in sets and serve
as index keys. A fixed kind order (IRIs, then blank nodes, then
literals) plus per-kind lexicographic order gives every sorted listing
in the package a reproducible result. Strings are compared by exact
codepoint sequence; no Unicode normalization is applied anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI: non-empty, no whitespace, has a scheme separator."""

    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise ValueError("IRI must be non-empty")
        if any(c.isspace() for c in self.value):
            raise ValueError(f"IRI contains whitespace: {self.value!r}")
        if ":" not in self.value:
            raise ValueError(f"IRI has no scheme separator: {self.value!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class BlankNode:
    """A blank node, identified by a label scoped to one parsed document."""

    label: str

    def __str__(self) -> str:
        return "_:" + self.label


_RDF_LANGSTRING = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#langString")
_XSD_STRING = Iri("http://www.w3.org/2001/XMLSchema#string")


@dataclass(frozen=True, slots=True)
class Literal:
    """A literal value: lexical form plus datatype, optionally language-tagged.

    A language-tagged literal always has datatype rdf:langString; an
    untagged one has a concrete datatype, defaulting to xsd:string.
    Language tags are lowercased on construction so that label lookup by
    tag is a plain dict lookup.
    """

    lexical: str
    datatype: Iri = None  # type: ignore[assignment]  # filled in __post_init__
    language: str | None = None

    def __post_init__(self) -> None:
        if self.language is not None:
            lowered = self.language.lower()
            if lowered != self.language:
                object.__setattr__(self, "language", lowered)
            if self.datatype is None:
                object.__setattr__(self, "datatype", _RDF_LANGSTRING)
            elif self.datatype != _RDF_LANGSTRING:
                raise ValueError(
                    "language-tagged literal must have datatype rdf:langString"
                )
        elif self.datatype is None:
            object.__setattr__(self, "datatype", _XSD_STRING)

    def __str__(self) -> str:
        if self.language is not None:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype == _XSD_STRING:
            return f'"{self.lexical}"'
        return f'"{self.lexical}"^^<{self.datatype.value}>'


Term = Union[Iri, BlankNode, Literal]
Subject = Union[Iri, BlankNode]


@dataclass(frozen=True, slots=True)
class Triple:
    """One RDF statement. The predicate is always an IRI."""

    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise TypeError(f"triple subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TypeError(f"triple predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise TypeError(f"triple object must be an RDF term, got {self.object!r}")

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


def term_sort_key(term: Term) -> tuple[int, str, str, str]:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BlankNode):
        return (1, term.label, "", "")
    return (2, term.lexical, term.datatype.value, term.language or "")


def triple_sort_key(triple: Triple) -> tuple:
    return (
        term_sort_key(triple.subject),
        term_sort_key(triple.predicate),
        term_sort_key(triple.object),
    )


def local_name(iri: Iri) -> str:
    """Short display name for an IRI.

    Text after the last ``#``, else after the last ``/``, else the full
    IRI. An empty suffix falls back to the full IRI so the result is
    always non-empty.
    """
    value = iri.value
    if "#" in value:
        tail = value.rsplit("#", 1)[1]
    elif "/" in value:
        tail = value.rsplit("/", 1)[1]
    else:
        tail = value
    return tail or value


def node_id(node: Subject) -> str:
    """Stable textual id for a graph node: the IRI, or ``_:label``."""
    if isinstance(node, Iri):
        return node.value
    return "_:" + node.label


def parse_node_id(text: str) -> Subject:
    """Inverse of node_id. Raises ValueError for text that is neither form."""
    if text.startswith("_:"):
        label = text[2:]
        if not label:
            raise ValueError("blank node id must have a label")
        return BlankNode(label)
    return Iri(text)
