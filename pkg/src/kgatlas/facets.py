"""Faceted selection and subgraph extraction.

Two facet modes drive exploration: concepts (classes with at least one
instance) and individuals (typed nodes). A selection seeds a breadth
first expansion over object-property edges; literal-valued assertions
never become edges but feed node tooltips instead.

Edges follow declared owl:ObjectProperty assertions plus undeclared
predicates whose object is a node. rdf:type, rdfs:label and the span
annotation vocabulary are bookkeeping, not content, and are excluded
from edges, tooltips and facet counts alike.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import KgAtlasError
from .graph import Graph
from .ontology import Ontology, PropertyKind, class_label, node_label_bundle, resolve_label
from .provenance import TextSpan, node_spans
from .terms import BlankNode, Iri, Literal, Subject, node_id, term_sort_key
from .vocab import RDF_TYPE, RDFS_LABEL, VIZ_NS


class UnknownSeedError(KgAtlasError):
    """A requested seed does not occur in the data graph."""

    code = "unknown_seed"

    def __init__(self, seeds: list[str]):
        super().__init__("unknown seed(s): " + ", ".join(sorted(seeds)))
        self.seeds = tuple(sorted(seeds))


@dataclass(frozen=True)
class ConceptFacet:
    class_iri: Iri
    label: str
    instance_count: int


@dataclass(frozen=True)
class IndividualFacet:
    node: Subject
    label: str
    class_iri: Iri | None


@dataclass(frozen=True)
class SubgraphRequest:
    mode: str  # "concept" or "individual"
    seeds: tuple[Subject, ...]
    depth: int
    lang: str = "en"

    def __post_init__(self):
        if self.mode not in ("concept", "individual"):
            raise ValueError(f"unknown facet mode: {self.mode!r}")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        if self.depth < 0:
            raise ValueError("depth must be non-negative")


@dataclass(frozen=True)
class ViewNode:
    node: Subject
    label: str
    class_iri: Iri | None
    class_label: str
    icon_key: str | None
    tooltip: tuple[tuple[str, str], ...]
    spans: tuple[TextSpan, ...]

    @property
    def id(self) -> str:
        return node_id(self.node)


@dataclass(frozen=True)
class ViewEdge:
    source: Subject
    target: Subject
    property: Iri
    label: str


@dataclass(frozen=True)
class ViewGraph:
    nodes: tuple[ViewNode, ...]
    edges: tuple[ViewEdge, ...]
    lang: str
    request: SubgraphRequest

    @property
    def depth(self) -> int:
        return self.request.depth

    @property
    def seeds(self) -> tuple[Subject, ...]:
        return self.request.seeds


@dataclass(frozen=True)
class TableRow:
    subject: str
    predicate: str
    object: str


def _is_annotation(predicate: Iri) -> bool:
    return (
        predicate == RDF_TYPE
        or predicate == RDFS_LABEL
        or predicate.value.startswith(VIZ_NS)
    )


def is_edge_triple(triple, ontology: Ontology) -> bool:
    """True when a triple is a node-to-node content edge."""
    if not isinstance(triple.object, (Iri, BlankNode)):
        return False
    if _is_annotation(triple.predicate):
        return False
    return ontology.property_kind(triple.predicate) is not PropertyKind.DATATYPE


def _is_tooltip_triple(triple, ontology: Ontology) -> bool:
    if not isinstance(triple.object, Literal):
        return False
    if _is_annotation(triple.predicate):
        return False
    return True


def _node_class(graph: Graph, node: Subject) -> Iri | None:
    """The node's class, smallest IRI first when several are asserted."""
    candidates = [
        term for term in graph.objects(node, RDF_TYPE) if isinstance(term, Iri)
    ]
    return min(candidates, key=term_sort_key) if candidates else None


def _display_label(graph: Graph, ontology: Ontology, node: Subject, lang: str) -> str:
    bundle = node_label_bundle(graph, node)
    if isinstance(node, Iri):
        return resolve_label(ontology, node, lang, instance_labels=bundle)
    lang = lang.lower()
    for key in (lang, "en"):
        if key in bundle:
            return bundle[key]
    if bundle:
        return bundle[min(bundle)]
    return "_:" + node.label


def _typed_nodes(graph: Graph, ontology: Ontology) -> list[tuple[Subject, Iri]]:
    """(node, class) pairs for data individuals, skipping schema subjects."""
    pairs: list[tuple[Subject, Iri]] = []
    seen: set[str] = set()
    for triple in graph.match(predicate=RDF_TYPE):
        node = triple.subject
        if isinstance(node, Iri) and (node in ontology.classes or node in ontology.properties):
            continue
        key = node_id(node)
        if key in seen:
            continue
        seen.add(key)
        cls = _node_class(graph, node)
        if cls is not None:
            pairs.append((node, cls))
    return pairs


def list_concepts(graph: Graph, ontology: Ontology, lang: str = "en") -> list[ConceptFacet]:
    """Classes that have instances in the data, with distinct counts."""
    counts: dict[Iri, int] = {}
    for _, cls in _typed_nodes(graph, ontology):
        counts[cls] = counts.get(cls, 0) + 1
    facets = [
        ConceptFacet(class_iri=cls, label=resolve_label(ontology, cls, lang), instance_count=n)
        for cls, n in counts.items()
    ]
    facets.sort(key=lambda f: (f.label, f.class_iri.value))
    return facets


def list_individuals(graph: Graph, ontology: Ontology, lang: str = "en") -> list[IndividualFacet]:
    """Typed nodes in the data graph, labelled for the given language."""
    facets = [
        IndividualFacet(
            node=node,
            label=_display_label(graph, ontology, node, lang),
            class_iri=cls,
        )
        for node, cls in _typed_nodes(graph, ontology)
    ]
    facets.sort(key=lambda f: (f.label, node_id(f.node)))
    return facets


def expand_seeds(graph: Graph, ontology: Ontology, request: SubgraphRequest) -> list[Subject]:
    """Turn facet selections into concrete start nodes.

    Individual mode requires every seed to occur in the graph as a
    subject or object. Concept mode collects the instances of each
    selected class; a class with no instances is an unknown seed.
    """
    if request.mode == "individual":
        missing = [
            node_id(seed)
            for seed in request.seeds
            if not _occurs(graph, seed)
        ]
        if missing:
            raise UnknownSeedError(missing)
        out: list[Subject] = []
        seen: set[str] = set()
        for seed in request.seeds:
            key = node_id(seed)
            if key not in seen:
                seen.add(key)
                out.append(seed)
        return out

    instances: dict[Iri, list[Subject]] = {seed: [] for seed in request.seeds if isinstance(seed, Iri)}
    for node, _ in _typed_nodes(graph, ontology):
        for term in graph.objects(node, RDF_TYPE):
            if isinstance(term, Iri) and term in instances:
                instances[term].append(node)
    missing = [node_id(seed) for seed in request.seeds if not isinstance(seed, Iri) or not instances.get(seed)]
    if missing:
        raise UnknownSeedError(missing)
    out = []
    seen = set()
    for seed in request.seeds:
        for node in instances[seed]:
            key = node_id(node)
            if key not in seen:
                seen.add(key)
                out.append(node)
    return out


def _occurs(graph: Graph, node: Subject) -> bool:
    if graph.match(subject=node):
        return True
    return bool(graph.match(object=node))


def _neighbors(graph: Graph, node: Subject, ontology: Ontology) -> list[Subject]:
    out: list[Subject] = []
    for triple in graph.match(subject=node):
        if is_edge_triple(triple, ontology):
            out.append(triple.object)
    for triple in graph.match(object=node):
        if is_edge_triple(triple, ontology):
            out.append(triple.subject)
    return out


def collect_tooltip(
    graph: Graph, ontology: Ontology, node: Subject, lang: str = "en"
) -> list[tuple[str, str]]:
    """Datatype assertions for one node as (property label, value) rows."""
    rows: list[tuple[str, str]] = []
    for triple in graph.match(subject=node):
        if _is_tooltip_triple(triple, ontology):
            rows.append(
                (resolve_label(ontology, triple.predicate, lang), triple.object.lexical)
            )
    rows.sort()
    return rows


def extract_subgraph(
    graph: Graph, ontology: Ontology, request: SubgraphRequest
) -> ViewGraph:
    """Breadth-first neighborhood of the seeds, depth hops wide.

    Expansion is undirected over content edges. The result contains
    every edge of the full graph whose both endpoints were reached
    (induced closure), so depth 0 of two connected seeds still shows
    their connecting edge.
    """
    seeds = expand_seeds(graph, ontology, request)
    visited: set[Subject] = set(seeds)
    frontier: list[Subject] = list(seeds)
    for _ in range(request.depth):
        if not frontier:
            break
        next_frontier: list[Subject] = []
        for node in frontier:
            for neighbor in _neighbors(graph, node, ontology):
                if neighbor not in visited:
                    visited.add(neighbor)
                    next_frontier.append(neighbor)
        frontier = next_frontier

    edges: list[ViewEdge] = []
    for node in visited:
        for triple in graph.match(subject=node):
            if triple.object in visited and is_edge_triple(triple, ontology):
                edges.append(
                    ViewEdge(
                        source=triple.subject,
                        target=triple.object,
                        property=triple.predicate,
                        label=resolve_label(ontology, triple.predicate, request.lang),
                    )
                )
    edges.sort(
        key=lambda e: (
            term_sort_key(e.source),
            term_sort_key(e.property),
            term_sort_key(e.target),
        )
    )

    nodes: list[ViewNode] = []
    for node in sorted(visited, key=term_sort_key):
        cls = _node_class(graph, node)
        icon_key = None
        if cls is not None and cls in ontology.classes:
            icon_key = ontology.classes[cls].icon_key
        nodes.append(
            ViewNode(
                node=node,
                label=_display_label(graph, ontology, node, request.lang),
                class_iri=cls,
                class_label=class_label(ontology, cls, request.lang),
                icon_key=icon_key,
                tooltip=tuple(collect_tooltip(graph, ontology, node, request.lang)),
                spans=tuple(node_spans(graph, node)),
            )
        )

    return ViewGraph(
        nodes=tuple(nodes),
        edges=tuple(edges),
        lang=request.lang,
        request=request,
    )


def triple_table(
    view: ViewGraph, graph: Graph, ontology: Ontology, lang: str | None = None
) -> list[TableRow]:
    """Subject/Predicate/Object rows for a view, labels in ``lang``.

    Edge rows use node labels; every tooltip entry becomes a row with
    the literal value in the object column. Rows sort by subject, then
    predicate, then object.
    """
    lang = lang or view.lang
    labels = {
        node_id(vn.node): _display_label(graph, ontology, vn.node, lang)
        for vn in view.nodes
    }
    rows: list[TableRow] = []
    for edge in view.edges:
        rows.append(
            TableRow(
                subject=labels[node_id(edge.source)],
                predicate=resolve_label(ontology, edge.property, lang),
                object=labels[node_id(edge.target)],
            )
        )
    for vn in view.nodes:
        for prop_label, value in collect_tooltip(graph, ontology, vn.node, lang):
            rows.append(
                TableRow(subject=labels[node_id(vn.node)], predicate=prop_label, object=value)
            )
    rows.sort(key=lambda r: (r.subject, r.predicate, r.object))
    return rows
