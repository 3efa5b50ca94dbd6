"""In-memory triple store with pattern-match indexes.

A Graph is an immutable set of triples (duplicate insertion is a no-op)
carrying three orderings: subject-predicate-object, predicate-object-
subject and object-subject-predicate. ``match`` answers any binding
pattern from the best-fitting index in that index's canonical order, so
identical calls always return identical lists. Immutability makes a
Graph safe for unlimited concurrent readers.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .terms import Iri, Subject, Term, Triple, term_sort_key


def _spo_key(t: Triple):
    return (term_sort_key(t.subject), term_sort_key(t.predicate), term_sort_key(t.object))


def _pos_key(t: Triple):
    return (term_sort_key(t.predicate), term_sort_key(t.object), term_sort_key(t.subject))


def _osp_key(t: Triple):
    return (term_sort_key(t.object), term_sort_key(t.subject), term_sort_key(t.predicate))


class Graph:
    """Immutable set of triples with three pattern-match indexes."""

    __slots__ = ("_triples", "_spo", "_pos", "_osp", "_all")

    def __init__(self, triples: Iterable[Triple] = ()):
        tset = frozenset(triples)
        for t in tset:
            if not isinstance(t, Triple):
                raise TypeError(f"expected Triple, got {t!r}")
        self._triples = tset
        self._all: tuple[Triple, ...] = tuple(sorted(tset, key=_spo_key))

        spo: dict[Subject, dict[Iri, list[Triple]]] = {}
        for t in self._all:
            spo.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t)
        pos: dict[Iri, dict[Term, list[Triple]]] = {}
        for t in sorted(tset, key=_pos_key):
            pos.setdefault(t.predicate, {}).setdefault(t.object, []).append(t)
        osp: dict[Term, dict[Subject, list[Triple]]] = {}
        for t in sorted(tset, key=_osp_key):
            osp.setdefault(t.object, {}).setdefault(t.subject, []).append(t)
        self._spo = spo
        self._pos = pos
        self._osp = osp

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._all)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"Graph({len(self._triples)} triples)"

    def match(
        self,
        subject: Subject | None = None,
        predicate: Iri | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """All triples matching the bound positions.

        Results come in the canonical ordering of the index that fits
        the pattern, so two identical calls return identical lists. An
        unbound query returns every triple.
        """
        s, p, o = subject, predicate, object
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o)
            return [t] if t in self._triples else []
        if s is not None:
            by_pred = self._spo.get(s)
            if by_pred is None:
                return []
            if p is not None:
                return list(by_pred.get(p, ()))
            if o is not None:
                by_subj = self._osp.get(o)
                return list(by_subj.get(s, ())) if by_subj else []
            out: list[Triple] = []
            for matches in by_pred.values():
                out.extend(matches)
            return out
        if p is not None:
            by_obj = self._pos.get(p)
            if by_obj is None:
                return []
            if o is not None:
                return list(by_obj.get(o, ()))
            out = []
            for matches in by_obj.values():
                out.extend(matches)
            return out
        if o is not None:
            by_subj = self._osp.get(o)
            if by_subj is None:
                return []
            out = []
            for matches in by_subj.values():
                out.extend(matches)
            return out
        return list(self._all)

    def subjects(self, predicate: Iri | None = None, object: Term | None = None) -> list[Subject]:
        """Distinct subjects of matching triples, in first-match order."""
        seen: dict[Subject, None] = {}
        for t in self.match(None, predicate, object):
            seen.setdefault(t.subject, None)
        return list(seen)

    def objects(self, subject: Subject | None = None, predicate: Iri | None = None) -> list[Term]:
        """Distinct objects of matching triples, in first-match order."""
        seen: dict[Term, None] = {}
        for t in self.match(subject, predicate, None):
            seen.setdefault(t.object, None)
        return list(seen)
