"""Ontology loading and label resolution.

An ontology graph declares classes (owl:Class), object properties
(owl:ObjectProperty) and datatype properties (owl:DatatypeProperty),
carries language-tagged rdfs:label annotations for all of them, and
may attach an icon key to a class via viz:icon. The subclass
hierarchy must be acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import KgAtlasError
from .graph import Graph
from .terms import BlankNode, Iri, Literal, Subject, local_name, term_sort_key
from .vocab import (
    OWL_CLASS,
    OWL_DATATYPE_PROPERTY,
    OWL_OBJECT_PROPERTY,
    RDF_TYPE,
    RDFS_DOMAIN,
    RDFS_LABEL,
    RDFS_RANGE,
    RDFS_SUBCLASSOF,
    VIZ_ICON,
)


class CyclicHierarchyError(KgAtlasError):
    """The rdfs:subClassOf relation contains a cycle."""

    code = "cyclic_hierarchy"

    def __init__(self, cycle: tuple[str, ...]):
        super().__init__("cyclic class hierarchy: " + " -> ".join(cycle))
        self.cycle = cycle


class DuplicateDeclarationError(KgAtlasError):
    """One IRI was declared as two incompatible ontology entities."""

    code = "duplicate_declaration"

    def __init__(self, iri: str, kinds: tuple[str, str]):
        super().__init__(f"{iri} declared as both {kinds[0]} and {kinds[1]}")
        self.iri = iri


class PropertyKind(Enum):
    OBJECT = "object"
    DATATYPE = "datatype"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class OntologyClass:
    iri: Iri
    labels: dict[str, str] = field(default_factory=dict)
    parents: frozenset[Iri] = frozenset()
    icon_key: str | None = None


@dataclass(frozen=True)
class OntologyProperty:
    iri: Iri
    kind: PropertyKind
    labels: dict[str, str] = field(default_factory=dict)
    domain: Iri | None = None
    range: Iri | None = None


@dataclass(frozen=True)
class Ontology:
    classes: dict[Iri, OntologyClass]
    properties: dict[Iri, OntologyProperty]
    supported_languages: tuple[str, ...]

    def property_kind(self, iri: Iri) -> PropertyKind:
        prop = self.properties.get(iri)
        return prop.kind if prop else PropertyKind.UNKNOWN


def _label_bundle(graph: Graph, subject: Subject) -> dict[str, str]:
    """Collect rdfs:label literals keyed by language tag.

    Untagged labels live under "". The canonical match order makes the
    first literal per tag the lexicographically smallest, and that one
    wins when a tag appears twice.
    """
    labels: dict[str, str] = {}
    for triple in graph.match(subject=subject, predicate=RDFS_LABEL):
        obj = triple.object
        if not isinstance(obj, Literal):
            continue
        tag = obj.language or ""
        if tag not in labels:
            labels[tag] = obj.lexical
    return labels


def _first_iri(graph: Graph, subject: Subject, predicate: Iri) -> Iri | None:
    for term in graph.objects(subject, predicate):
        if isinstance(term, Iri):
            return term
    return None


def _check_acyclic(parents: dict[Iri, frozenset[Iri]]) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[Iri, int] = {}
    for root in sorted(parents, key=term_sort_key):
        if color.get(root, WHITE) != WHITE:
            continue
        stack: list[tuple[Iri, tuple[Iri, ...]]] = [(root, (root,))]
        while stack:
            node, path = stack.pop()
            state = color.get(node, WHITE)
            if state == BLACK:
                continue
            if state == GRAY:
                # Finished expanding: mark done.
                color[node] = BLACK
                continue
            color[node] = GRAY
            stack.append((node, path))  # revisit to blacken
            for parent in sorted(parents.get(node, frozenset()), key=term_sort_key):
                pstate = color.get(parent, WHITE)
                if pstate == GRAY:
                    idx = path.index(parent)
                    cycle = path[idx:] + (parent,)
                    raise CyclicHierarchyError(tuple(i.value for i in cycle))
                if pstate == WHITE:
                    stack.append((parent, path + (parent,)))


def load_ontology(graph: Graph) -> Ontology:
    """Build an Ontology view over a parsed annotation graph.

    Raises DuplicateDeclarationError when one IRI is declared as more
    than one kind of entity and CyclicHierarchyError when the subclass
    relation loops.
    """
    class_iris: list[Iri] = []
    prop_kinds: dict[Iri, PropertyKind] = {}
    for triple in graph.match(predicate=RDF_TYPE):
        subject = triple.subject
        if not isinstance(subject, Iri):
            continue
        if triple.object == OWL_CLASS:
            class_iris.append(subject)
        elif triple.object == OWL_OBJECT_PROPERTY:
            prior = prop_kinds.get(subject)
            if prior is PropertyKind.DATATYPE:
                raise DuplicateDeclarationError(subject.value, ("an object property", "a datatype property"))
            prop_kinds[subject] = PropertyKind.OBJECT
        elif triple.object == OWL_DATATYPE_PROPERTY:
            prior = prop_kinds.get(subject)
            if prior is PropertyKind.OBJECT:
                raise DuplicateDeclarationError(subject.value, ("an object property", "a datatype property"))
            prop_kinds[subject] = PropertyKind.DATATYPE

    for iri in class_iris:
        if iri in prop_kinds:
            raise DuplicateDeclarationError(iri.value, ("a class", "a property"))

    sub_edges: dict[Iri, set[Iri]] = {}
    for triple in graph.match(predicate=RDFS_SUBCLASSOF):
        if isinstance(triple.subject, Iri) and isinstance(triple.object, Iri):
            sub_edges.setdefault(triple.subject, set()).add(triple.object)
    _check_acyclic({iri: frozenset(parents) for iri, parents in sub_edges.items()})

    classes: dict[Iri, OntologyClass] = {}
    for iri in class_iris:
        parents = frozenset(sub_edges.get(iri, set()))
        icon_key: str | None = None
        for term in graph.objects(iri, VIZ_ICON):
            if isinstance(term, Literal):
                icon_key = term.lexical
                break
        classes[iri] = OntologyClass(
            iri=iri,
            labels=_label_bundle(graph, iri),
            parents=parents,
            icon_key=icon_key,
        )

    properties: dict[Iri, OntologyProperty] = {}
    for iri, kind in prop_kinds.items():
        properties[iri] = OntologyProperty(
            iri=iri,
            kind=kind,
            labels=_label_bundle(graph, iri),
            domain=_first_iri(graph, iri, RDFS_DOMAIN),
            range=_first_iri(graph, iri, RDFS_RANGE),
        )

    tags: set[str] = set()
    for bundle in [c.labels for c in classes.values()] + [p.labels for p in properties.values()]:
        tags.update(tag for tag in bundle if tag)
    return Ontology(
        classes=classes,
        properties=properties,
        supported_languages=tuple(sorted(tags)),
    )


def resolve_label(
    ontology: Ontology,
    entity: Iri,
    lang: str,
    instance_labels: dict[str, str] | None = None,
) -> str:
    """Pick the display label for an entity in the requested language.

    Fallback chain: instance label in lang, ontology label in lang,
    instance label in English, ontology label in English, then any
    available label (smallest language tag first, instance labels
    before ontology ones), and finally the IRI's local name.
    """
    lang = lang.lower()
    instance = instance_labels or {}
    declared = ontology.classes.get(entity) or ontology.properties.get(entity)
    declared_labels = declared.labels if declared else {}

    if lang in instance:
        return instance[lang]
    if lang in declared_labels:
        return declared_labels[lang]
    if "en" in instance:
        return instance["en"]
    if "en" in declared_labels:
        return declared_labels["en"]
    if instance:
        return instance[min(instance)]
    if declared_labels:
        return declared_labels[min(declared_labels)]
    return local_name(entity)


def node_label_bundle(graph: Graph, node: Subject) -> dict[str, str]:
    """Instance-level rdfs:label bundle for a data graph node."""
    return _label_bundle(graph, node)


def class_label(ontology: Ontology, class_iri: Iri | None, lang: str) -> str:
    """Label for a node's class, or "" when the node has no class."""
    if class_iri is None:
        return ""
    return resolve_label(ontology, class_iri, lang)
