"""Faceted, multilingual exploration of extracted knowledge graphs."""

from .errors import KgAtlasError
from .facets import (
    ConceptFacet,
    IndividualFacet,
    SubgraphRequest,
    TableRow,
    UnknownSeedError,
    ViewEdge,
    ViewGraph,
    ViewNode,
    collect_tooltip,
    expand_seeds,
    extract_subgraph,
    list_concepts,
    list_individuals,
    triple_table,
)
from .graph import Graph
from .ontology import (
    CyclicHierarchyError,
    DuplicateDeclarationError,
    Ontology,
    OntologyClass,
    OntologyProperty,
    PropertyKind,
    load_ontology,
    resolve_label,
)
from .parser import RdfSyntaxError, UnknownPrefixError, parse_rdf
from .provenance import (
    DocumentStore,
    SpanOutOfBoundsError,
    TextSpan,
    UnknownDocumentError,
    load_provenance,
)
from .serializer import serialize_ntriples
from .terms import BlankNode, Iri, Literal, Triple, local_name

__all__ = [
    "BlankNode",
    "ConceptFacet",
    "CyclicHierarchyError",
    "DocumentStore",
    "DuplicateDeclarationError",
    "Graph",
    "IndividualFacet",
    "Iri",
    "KgAtlasError",
    "Literal",
    "Ontology",
    "OntologyClass",
    "OntologyProperty",
    "PropertyKind",
    "RdfSyntaxError",
    "SpanOutOfBoundsError",
    "SubgraphRequest",
    "TableRow",
    "TextSpan",
    "Triple",
    "UnknownDocumentError",
    "UnknownPrefixError",
    "UnknownSeedError",
    "ViewEdge",
    "ViewGraph",
    "ViewNode",
    "collect_tooltip",
    "expand_seeds",
    "extract_subgraph",
    "list_concepts",
    "list_individuals",
    "load_ontology",
    "load_provenance",
    "local_name",
    "parse_rdf",
    "resolve_label",
    "serialize_ntriples",
    "triple_table",
]
