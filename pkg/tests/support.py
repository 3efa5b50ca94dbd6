"""Shared test helpers: generators, oracles, graph isomorphism.

The BFS oracle here is deliberately naive and independent of the
package's traversal code: it rescans the full triple list on every
hop and decides edge-ness from the generator's own property bookkeeping
rather than the ontology classifier under test.
"""

from __future__ import annotations

import random

from kgatlas.graph import Graph
from kgatlas.ontology import load_ontology
from kgatlas.parser import parse_rdf
from kgatlas.terms import BlankNode, Iri, Literal, Triple

RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
RDFS_LABEL = Iri("http://www.w3.org/2000/01/rdf-schema#label")
VIZ = "http://kg-atlas.dev/viz#"
EX = "http://example.org/"


def build_random_world(rng: random.Random, max_nodes: int = 50, max_triples: int = 200):
    """A data graph plus matching ontology for traversal tests.

    Returns (graph, ontology, node_list, object_props, datatype_props,
    undeclared_props). Edge triples connect nodes through object or
    undeclared properties; datatype properties only carry literals.
    """
    n_nodes = rng.randint(1, max_nodes)
    nodes = [Iri(f"{EX}n{i}") for i in range(n_nodes)]
    n_classes = rng.randint(1, 5)
    classes = [Iri(f"{EX}C{i}") for i in range(n_classes)]
    object_props = {Iri(f"{EX}op{i}") for i in range(rng.randint(1, 4))}
    datatype_props = {Iri(f"{EX}dp{i}") for i in range(rng.randint(1, 3))}
    undeclared_props = {Iri(f"{EX}up{i}") for i in range(rng.randint(0, 2))}

    onto_lines = []
    for cls in classes:
        onto_lines.append(f"<{cls.value}> <{RDF_TYPE.value}> <http://www.w3.org/2002/07/owl#Class> .")
    for prop in sorted(object_props, key=lambda p: p.value):
        onto_lines.append(
            f"<{prop.value}> <{RDF_TYPE.value}> <http://www.w3.org/2002/07/owl#ObjectProperty> ."
        )
    for prop in sorted(datatype_props, key=lambda p: p.value):
        onto_lines.append(
            f"<{prop.value}> <{RDF_TYPE.value}> <http://www.w3.org/2002/07/owl#DatatypeProperty> ."
        )
    ontology = load_ontology(parse_rdf("\n".join(onto_lines) + "\n", format="ntriples"))

    triples: set[Triple] = set()
    edge_props = sorted(object_props | undeclared_props, key=lambda p: p.value)
    n_triples = rng.randint(0, max_triples)
    for _ in range(n_triples):
        kind = rng.random()
        subject = rng.choice(nodes)
        if kind < 0.55:
            prop = rng.choice(edge_props)
            triples.add(Triple(subject, prop, rng.choice(nodes)))
        elif kind < 0.75:
            prop = rng.choice(sorted(datatype_props, key=lambda p: p.value))
            triples.add(Triple(subject, prop, Literal(f"v{rng.randint(0, 99)}")))
        elif kind < 0.9:
            triples.add(Triple(subject, RDF_TYPE, rng.choice(classes)))
        else:
            triples.add(Triple(subject, RDFS_LABEL, Literal(f"node {rng.randint(0, 99)}", language="en")))
    graph = Graph(triples)
    return graph, ontology, nodes, object_props, datatype_props, undeclared_props


def oracle_bfs(
    graph: Graph,
    seeds: list[Iri],
    depth: int,
    datatype_props: set[Iri],
) -> set[Iri]:
    """Reachable node set by brute force, rescanning all triples per hop."""
    edge_pairs = []
    for triple in graph:
        if isinstance(triple.object, Literal):
            continue
        pred = triple.predicate
        if pred == RDF_TYPE or pred == RDFS_LABEL or pred.value.startswith(VIZ):
            continue
        if pred in datatype_props:
            continue
        edge_pairs.append((triple.subject, triple.object))

    reached = set(seeds)
    for _ in range(depth):
        added = set()
        for a, b in edge_pairs:
            if a in reached and b not in reached:
                added.add(b)
            if b in reached and a not in reached:
                added.add(a)
        if not added:
            break
        reached |= added
    return reached


def random_plain_graph(rng: random.Random, max_triples: int = 40) -> Graph:
    """Arbitrary RDF content for serializer round-trips.

    Mixes IRIs, shared blank nodes and literals with awkward lexical
    forms (escapes, unicode, tabs) plus language tags and datatypes.
    """
    nasty = ['plain', 'with "quotes"', "back\\slash", "line\nbreak", "tab\there", "émoji ✓", ""]
    iris = [Iri(f"{EX}r{i}") for i in range(rng.randint(1, 8))]
    bnodes = [BlankNode(f"x{i}") for i in range(rng.randint(0, 4))]
    subjects = iris + bnodes
    preds = [Iri(f"{EX}p{i}") for i in range(rng.randint(1, 5))]
    triples: set[Triple] = set()
    for _ in range(rng.randint(1, max_triples)):
        subject = rng.choice(subjects)
        pred = rng.choice(preds)
        roll = rng.random()
        if roll < 0.4:
            obj = rng.choice(subjects)
        elif roll < 0.6:
            obj = Literal(rng.choice(nasty))
        elif roll < 0.8:
            obj = Literal(rng.choice(nasty), language=rng.choice(["en", "fr", "ar", "zh", "en-us"]))
        else:
            obj = Literal(str(rng.randint(0, 500)), datatype=Iri("http://www.w3.org/2001/XMLSchema#integer"))
        triples.add(Triple(subject, pred, obj))
    return Graph(triples)


def _ground(term):
    if isinstance(term, BlankNode):
        return None
    return term


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """True when g2 equals g1 under some blank-node bijection."""
    if len(g1) != len(g2):
        return False
    t1 = list(g1)
    t2 = list(g2)

    def signature(triple):
        return (
            _ground(triple.subject),
            triple.predicate,
            _ground(triple.object),
        )

    ground1 = [t for t in t1 if not isinstance(t.subject, BlankNode) and not isinstance(t.object, BlankNode)]
    ground2 = [t for t in t2 if not isinstance(t.subject, BlankNode) and not isinstance(t.object, BlankNode)]
    if set(ground1) != set(ground2):
        return False

    open1 = [t for t in t1 if isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode)]
    open2 = [t for t in t2 if isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode)]
    if len(open1) != len(open2):
        return False

    by_sig: dict = {}
    for t in open2:
        by_sig.setdefault(signature(t), []).append(t)

    def unify(term_a, term_b, mapping, reverse):
        if isinstance(term_a, BlankNode) != isinstance(term_b, BlankNode):
            return None
        if not isinstance(term_a, BlankNode):
            return mapping if term_a == term_b else None
        bound = mapping.get(term_a.label)
        if bound is not None:
            return mapping if bound == term_b.label else None
        if term_b.label in reverse:
            return None
        new_map = dict(mapping)
        new_map[term_a.label] = term_b.label
        return new_map

    def backtrack(remaining, used, mapping):
        if not remaining:
            return True
        head, *rest = remaining
        for candidate in by_sig.get(signature(head), []):
            if id(candidate) in used:
                continue
            reverse = set(mapping.values())
            m1 = unify(head.subject, candidate.subject, mapping, reverse)
            if m1 is None:
                continue
            reverse1 = set(m1.values())
            m2 = unify(head.object, candidate.object, m1, reverse1)
            if m2 is None:
                continue
            if head.predicate != candidate.predicate:
                continue
            if backtrack(rest, used | {id(candidate)}, m2):
                return True
        return False

    # Most-constrained-first keeps the search shallow on realistic graphs.
    open1.sort(key=lambda t: len(by_sig.get(signature(t), [])))
    return backtrack(open1, set(), {})
