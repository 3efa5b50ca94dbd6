"""Turtle (subset) and N-Triples parsing.

The Turtle subset covers what extraction pipelines actually emit:
``@prefix`` and ``@base`` directives, the ``a`` keyword, predicate
lists (``;``), object lists (``,``), anonymous blank nodes and
blank-node property lists ``[ ... ]``, string literals (short and
long double-quoted form) with ``@lang`` or ``^^`` datatype, numeric
and boolean literals, and ``#`` comments. Collections ``( ... )``,
TriG blocks and quoted triples are rejected with a clear error.

N-Triples support is the full grammar: IRIREFs, blank node labels,
literals with ``@lang``/``^^``, comments.

Input is strictly UTF-8. Language tags are lowercased at parse time.
Blank node labels are scoped to one document; anonymous nodes get
generated labels containing ``:``, which the explicit-label grammar
cannot produce, so the two can never collide.
"""

from __future__ import annotations

import re
from urllib.parse import urljoin

from .errors import KgAtlasError
from .graph import Graph
from .terms import BlankNode, Iri, Literal, Subject, Term, Triple
from .vocab import RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER


class RdfSyntaxError(KgAtlasError):
    """Malformed RDF input, with 1-based line and column of the problem."""

    code = "syntax_error"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnknownPrefixError(RdfSyntaxError):
    """A prefixed name used a prefix that was never declared."""

    def __init__(self, prefix: str, line: int, column: int):
        super().__init__(f"unknown prefix {prefix + ':'!r}", line, column)
        self.prefix = prefix


_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_LANGTAG_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
# Ordered alternatives: exponent forms first, then decimal, then integer.
_NUMBER_RE = re.compile(
    r"[+-]?(?:"
    r"\d+\.\d*[eE][+-]?\d+"
    r"|\.\d+[eE][+-]?\d+"
    r"|\d+[eE][+-]?\d+"
    r"|\d*\.\d+"
    r"|\d+"
    r")"
)
_HEX_DIGITS = set("0123456789abcdefABCDEF")
_ESCAPE_MAP = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
# Codepoints that may not appear raw inside an IRIREF.
_IRI_FORBIDDEN = set('<>"{}|^`\\')


def _decode_utf8(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        prefix = data[: exc.start].decode("utf-8", errors="replace")
        line = prefix.count("\n") + 1
        column = len(prefix) - (prefix.rfind("\n") + 1) + 1
        raise RdfSyntaxError("invalid UTF-8 byte sequence", line, column) from None


def parse_rdf(text: str | bytes, format: str, base: str | None = None) -> Graph:
    """Parse a complete RDF document into a Graph.

    ``format`` is ``"turtle"`` or ``"ntriples"``. ``base`` seeds the
    base IRI used to resolve relative references (a ``@base`` directive
    overrides it). Raises RdfSyntaxError on malformed input and
    UnknownPrefixError when a prefixed name has no declaration.
    """
    if isinstance(text, bytes):
        text = _decode_utf8(text)
    if text.startswith("﻿"):
        text = text[1:]
    if format == "turtle":
        return Graph(_TurtleParser(text, base).parse())
    if format == "ntriples":
        return Graph(_NTriplesParser(text).parse())
    raise ValueError(f"unknown RDF format: {format!r}")


class _Cursor:
    """Character cursor with 1-based line/column tracking."""

    __slots__ = ("text", "n", "pos", "line", "col")

    def __init__(self, text: str):
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.line = 1
        self.col = 1

    def at_end(self) -> bool:
        return self.pos >= self.n

    def peek(self, offset: int = 0) -> str:
        p = self.pos + offset
        return self.text[p] if p < self.n else ""

    def advance(self) -> str:
        c = self.text[self.pos]
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return c

    def rewind_in_line(self, count: int) -> None:
        # Only valid when the skipped-back characters contain no newline.
        self.pos -= count
        self.col -= count

    def mark(self) -> tuple[int, int]:
        return (self.line, self.col)

    def error(self, message: str, mark: tuple[int, int] | None = None) -> "NoReturn":  # noqa: F821
        line, col = mark if mark else (self.line, self.col)
        raise RdfSyntaxError(message, line, col)

    def skip_ws(self) -> None:
        """Skip whitespace and # comments."""
        while not self.at_end():
            c = self.peek()
            if c in " \t\r\n":
                self.advance()
            elif c == "#":
                while not self.at_end() and self.peek() != "\n":
                    self.advance()
            else:
                return

    def expect(self, char: str, what: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            self.error(f"expected {what}, found {found!r}")
        self.advance()

    # -- shared token readers -------------------------------------------

    def read_uchar(self) -> str:
        """Read a \\uXXXX or \\UXXXXXXXX escape; the backslash is consumed."""
        kind = self.advance()
        width = 4 if kind == "u" else 8
        start = self.mark()
        digits = ""
        for _ in range(width):
            if self.at_end() or self.peek() not in _HEX_DIGITS:
                self.error(f"expected {width} hex digits after \\{kind}", start)
            digits += self.advance()
        code = int(digits, 16)
        if code > 0x10FFFF:
            self.error(f"codepoint U+{digits.upper()} out of range", start)
        return chr(code)

    def read_iriref(self) -> str:
        """Read <...>, returning the raw (unresolved) IRI text."""
        start = self.mark()
        self.advance()  # consume '<'
        if self.peek() == "<":
            self.error("quoted triples are not supported", start)
        chars: list[str] = []
        while True:
            if self.at_end():
                self.error("unterminated IRI reference", start)
            c = self.peek()
            if c == ">":
                self.advance()
                return "".join(chars)
            if c == "\\":
                esc_mark = self.mark()
                self.advance()
                if self.peek() in "uU":
                    chars.append(self.read_uchar())
                else:
                    self.error("only \\u and \\U escapes are allowed in IRIs", esc_mark)
            elif c in _IRI_FORBIDDEN or ord(c) <= 0x20:
                self.error(f"character {c!r} must not appear in an IRI reference")
            else:
                chars.append(self.advance())

    def read_string(self, allow_long: bool) -> str:
        """Read a double-quoted string literal, decoding escapes."""
        start = self.mark()
        self.advance()  # consume opening '"'
        if allow_long and self.peek() == '"' and self.peek(1) == '"':
            self.advance()
            self.advance()
            return self._read_long_string_body(start)
        chars: list[str] = []
        while True:
            if self.at_end():
                self.error("unterminated string literal", start)
            c = self.peek()
            if c == '"':
                self.advance()
                return "".join(chars)
            if c in "\n\r":
                self.error("unterminated string literal", start)
            if c == "\\":
                chars.append(self._read_echar(start))
            else:
                chars.append(self.advance())

    def _read_long_string_body(self, start: tuple[int, int]) -> str:
        chars: list[str] = []
        while True:
            if self.at_end():
                self.error("unterminated long string literal", start)
            c = self.peek()
            if c == '"':
                run = 0
                while self.peek(run) == '"':
                    run += 1
                if run >= 3:
                    if run > 5:
                        self.error("too many consecutive quotes in long string")
                    chars.append('"' * (run - 3))
                    for _ in range(run):
                        self.advance()
                    return "".join(chars)
                for _ in range(run):
                    chars.append(self.advance())
            elif c == "\\":
                chars.append(self._read_echar(start))
            else:
                chars.append(self.advance())

    def _read_echar(self, string_start: tuple[int, int]) -> str:
        esc_mark = self.mark()
        self.advance()  # consume backslash
        if self.at_end():
            self.error("unterminated string literal", string_start)
        c = self.peek()
        if c in "uU":
            return self.read_uchar()
        if c in _ESCAPE_MAP:
            self.advance()
            return _ESCAPE_MAP[c]
        self.error(f"unknown escape sequence \\{c}", esc_mark)

    def read_bnode_label(self) -> str:
        """Read _:label (the cursor sits on '_')."""
        start = self.mark()
        self.advance()  # '_'
        if self.peek() != ":":
            self.error("expected ':' after '_' in blank node label", start)
        self.advance()
        c = self.peek()
        if not (c.isalnum() or c == "_"):
            self.error("blank node label must start with a letter, digit or '_'", start)
        chars = [self.advance()]
        while not self.at_end():
            c = self.peek()
            if c.isalnum() or c in "_-.":
                chars.append(self.advance())
            else:
                break
        # Trailing dots belong to the statement terminator, not the label.
        trailing = 0
        while chars and chars[-1] == ".":
            chars.pop()
            trailing += 1
        if trailing:
            self.rewind_in_line(trailing)
        return "".join(chars)

    def read_langtag(self) -> str:
        """Read the language tag after '@' (already consumed)."""
        start = self.mark()
        m = _LANGTAG_RE.match(self.text, self.pos)
        if not m:
            self.error("malformed language tag", start)
        tag = m.group(0)
        for _ in tag:
            self.advance()
        # Reject things like "en--us" glued on: next char must not be '-'.
        if self.peek() == "-":
            self.error("malformed language tag", start)
        return tag.lower()


class _NTriplesParser:
    """Line-oriented N-Triples grammar over a shared cursor."""

    def __init__(self, text: str):
        self.cur = _Cursor(text)
        self.bnodes: dict[str, BlankNode] = {}

    def parse(self) -> list[Triple]:
        triples: list[Triple] = []
        cur = self.cur
        cur.skip_ws()
        while not cur.at_end():
            subject = self._subject()
            cur.skip_ws()
            predicate = self._predicate()
            cur.skip_ws()
            obj = self._object()
            cur.skip_ws()
            cur.expect(".", "'.' at end of triple")
            triples.append(Triple(subject, predicate, obj))
            cur.skip_ws()
        return triples

    def _iri(self) -> Iri:
        cur = self.cur
        mark = cur.mark()
        raw = cur.read_iriref()
        if not _SCHEME_RE.match(raw):
            cur.error("relative IRI not allowed here", mark)
        try:
            return Iri(raw)
        except ValueError as exc:
            cur.error(str(exc), mark)

    def _bnode(self) -> BlankNode:
        label = self.cur.read_bnode_label()
        return self.bnodes.setdefault(label, BlankNode(label))

    def _subject(self) -> Subject:
        c = self.cur.peek()
        if c == "<":
            return self._iri()
        if c == "_":
            return self._bnode()
        self.cur.error("expected IRI or blank node as subject")

    def _predicate(self) -> Iri:
        if self.cur.peek() == "<":
            return self._iri()
        self.cur.error("expected IRI as predicate")

    def _object(self) -> Term:
        cur = self.cur
        c = cur.peek()
        if c == "<":
            return self._iri()
        if c == "_":
            return self._bnode()
        if c == '"':
            lexical = cur.read_string(allow_long=False)
            if cur.peek() == "@":
                cur.advance()
                return Literal(lexical, language=cur.read_langtag())
            if cur.peek() == "^" and cur.peek(1) == "^":
                cur.advance()
                cur.advance()
                if cur.peek() != "<":
                    cur.error("expected IRI after '^^'")
                return Literal(lexical, datatype=self._iri())
            return Literal(lexical)
        cur.error("expected IRI, blank node or literal as object")


class _TurtleParser:
    """Recursive-descent parser for the Turtle subset."""

    def __init__(self, text: str, base: str | None = None):
        self.cur = _Cursor(text)
        self.base = base
        self.prefixes: dict[str, str] = {}
        self.bnodes: dict[str, BlankNode] = {}
        self.anon_count = 0
        self.triples: list[Triple] = []

    def parse(self) -> list[Triple]:
        cur = self.cur
        cur.skip_ws()
        while not cur.at_end():
            if cur.peek() == "@":
                self._directive()
            elif cur.peek() == "{":
                cur.error("TriG graph blocks are not supported")
            else:
                self._triples_block()
            cur.skip_ws()
        return self.triples

    # -- directives ------------------------------------------------------

    def _directive(self) -> None:
        cur = self.cur
        mark = cur.mark()
        cur.advance()  # '@'
        word = self._bare_word()
        if word == "prefix":
            cur.skip_ws()
            prefix = self._pname_prefix_decl()
            cur.skip_ws()
            if cur.peek() != "<":
                cur.error("expected IRI in @prefix directive")
            iri_mark = cur.mark()
            self.prefixes[prefix] = self._resolve(cur.read_iriref(), iri_mark)
            cur.skip_ws()
            cur.expect(".", "'.' after @prefix directive")
        elif word == "base":
            cur.skip_ws()
            if cur.peek() != "<":
                cur.error("expected IRI in @base directive")
            iri_mark = cur.mark()
            self.base = self._resolve(cur.read_iriref(), iri_mark)
            cur.skip_ws()
            cur.expect(".", "'.' after @base directive")
        else:
            cur.error(f"unknown directive @{word}", mark)

    def _bare_word(self) -> str:
        chars: list[str] = []
        while not self.cur.at_end() and self.cur.peek().isalpha():
            chars.append(self.cur.advance())
        return "".join(chars)

    def _pname_prefix_decl(self) -> str:
        """Prefix label in a @prefix directive, including the ':'."""
        cur = self.cur
        chars: list[str] = []
        while not cur.at_end():
            c = cur.peek()
            if c == ":":
                cur.advance()
                return "".join(chars)
            if c.isalnum() or c in "_-":
                chars.append(cur.advance())
            else:
                break
        cur.error("expected ':' in prefix declaration")

    # -- IRI handling ------------------------------------------------------

    def _resolve(self, raw: str, mark: tuple[int, int]) -> str:
        if _SCHEME_RE.match(raw):
            resolved = raw
        elif self.base is None:
            self.cur.error(f"relative IRI {raw!r} without a base", mark)
        else:
            resolved = urljoin(self.base, raw)
        try:
            Iri(resolved)
        except ValueError as exc:
            self.cur.error(str(exc), mark)
        return resolved

    def _iriref(self) -> Iri:
        mark = self.cur.mark()
        return Iri(self._resolve(self.cur.read_iriref(), mark))

    def _prefixed_name(self) -> Iri:
        cur = self.cur
        mark = cur.mark()
        prefix_chars: list[str] = []
        while not cur.at_end():
            c = cur.peek()
            if c.isalnum() or c in "_-":
                prefix_chars.append(cur.advance())
            else:
                break
        if cur.peek() != ":":
            cur.error("expected ':' in prefixed name", mark)
        cur.advance()
        prefix = "".join(prefix_chars)
        if prefix not in self.prefixes:
            raise UnknownPrefixError(prefix, mark[0], mark[1])
        local_chars: list[str] = []
        while not cur.at_end():
            c = cur.peek()
            if c.isalnum() or c in "_-.%:":
                local_chars.append(cur.advance())
            else:
                break
        trailing = 0
        while local_chars and local_chars[-1] == ".":
            local_chars.pop()
            trailing += 1
        if trailing:
            cur.rewind_in_line(trailing)
        value = self.prefixes[prefix] + "".join(local_chars)
        try:
            return Iri(value)
        except ValueError as exc:
            cur.error(str(exc), mark)

    def _iri(self) -> Iri:
        if self.cur.peek() == "<":
            return self._iriref()
        return self._prefixed_name()

    # -- triples -----------------------------------------------------------

    def _fresh_bnode(self) -> BlankNode:
        # ':' cannot occur in an explicit blank node label, so generated
        # labels never collide with parsed ones.
        node = BlankNode(f"anon:{self.anon_count}")
        self.anon_count += 1
        return node

    def _triples_block(self) -> None:
        cur = self.cur
        if cur.peek() == "[":
            subject = self._bnode_property_list()
            cur.skip_ws()
            if cur.peek() != ".":
                self._predicate_object_list(subject)
                cur.skip_ws()
        else:
            subject = self._subject()
            cur.skip_ws()
            self._predicate_object_list(subject)
            cur.skip_ws()
        cur.expect(".", "'.' at end of statement")

    def _subject(self) -> Subject:
        cur = self.cur
        c = cur.peek()
        if c == "<":
            return self._iriref()
        if c == "_":
            label = cur.read_bnode_label()
            return self.bnodes.setdefault(label, BlankNode(label))
        if c == "(":
            cur.error("collections are not supported")
        if c == '"' or c.isdigit() or c in "+-.":
            cur.error("a literal cannot be the subject of a triple")
        if c == "":
            cur.error("expected subject, found end of input")
        return self._prefixed_name()

    def _predicate_object_list(self, subject: Subject) -> None:
        cur = self.cur
        while True:
            predicate = self._verb()
            cur.skip_ws()
            self._object_list(subject, predicate)
            cur.skip_ws()
            if cur.peek() != ";":
                return
            while cur.peek() == ";":
                cur.advance()
                cur.skip_ws()
            if cur.peek() in {".", "]", ""}:
                return

    def _verb(self) -> Iri:
        cur = self.cur
        if cur.peek() == "a" and (cur.peek(1) in " \t\r\n<[\"#" or cur.pos + 1 >= cur.n):
            cur.advance()
            return RDF_TYPE
        if cur.peek() == "":
            cur.error("expected predicate, found end of input")
        if cur.peek() in ".;,]":
            cur.error(f"expected predicate, found {cur.peek()!r}")
        return self._iri()

    def _object_list(self, subject: Subject, predicate: Iri) -> None:
        cur = self.cur
        while True:
            obj = self._object()
            self.triples.append(Triple(subject, predicate, obj))
            cur.skip_ws()
            if cur.peek() != ",":
                return
            cur.advance()
            cur.skip_ws()

    def _object(self) -> Term:
        cur = self.cur
        c = cur.peek()
        if c == "":
            cur.error("expected object, found end of input")
        if c == "<":
            return self._iriref()
        if c == "[":
            return self._bnode_property_list()
        if c == "(":
            cur.error("collections are not supported")
        if c == "_":
            label = cur.read_bnode_label()
            return self.bnodes.setdefault(label, BlankNode(label))
        if c == '"':
            return self._literal()
        if c.isdigit() or c in "+-" or (c == "." and cur.peek(1).isdigit()):
            return self._numeric_literal()
        if c in ".;,]":
            cur.error(f"expected object, found {c!r}")
        word_end = self._keyword_boundary("true")
        if word_end:
            return Literal("true", datatype=XSD_BOOLEAN)
        word_end = self._keyword_boundary("false")
        if word_end:
            return Literal("false", datatype=XSD_BOOLEAN)
        return self._prefixed_name()

    def _keyword_boundary(self, word: str) -> bool:
        """Consume ``word`` if present as a whole token; report success."""
        cur = self.cur
        if cur.text.startswith(word, cur.pos):
            after = cur.peek(len(word))
            if not (after.isalnum() or after in "_-:."):
                for _ in word:
                    cur.advance()
                return True
        return False

    def _literal(self) -> Literal:
        cur = self.cur
        lexical = cur.read_string(allow_long=True)
        if cur.peek() == "@":
            cur.advance()
            return Literal(lexical, language=cur.read_langtag())
        if cur.peek() == "^" and cur.peek(1) == "^":
            cur.advance()
            cur.advance()
            if cur.peek() not in ("<",) and not (cur.peek().isalnum() or cur.peek() in "_:"):
                cur.error("expected datatype IRI after '^^'")
            return Literal(lexical, datatype=self._iri())
        return Literal(lexical)

    def _numeric_literal(self) -> Literal:
        cur = self.cur
        mark = cur.mark()
        m = _NUMBER_RE.match(cur.text, cur.pos)
        if not m:
            cur.error("malformed numeric literal", mark)
        lexical = m.group(0)
        for _ in lexical:
            cur.advance()
        if "e" in lexical or "E" in lexical:
            datatype = XSD_DOUBLE
        elif "." in lexical:
            datatype = XSD_DECIMAL
        else:
            datatype = XSD_INTEGER
        return Literal(lexical, datatype=datatype)

    def _bnode_property_list(self) -> BlankNode:
        cur = self.cur
        open_mark = cur.mark()
        cur.advance()  # '['
        node = self._fresh_bnode()
        cur.skip_ws()
        if cur.peek() == "]":
            cur.advance()
            return node
        self._predicate_object_list(node)
        cur.skip_ws()
        if cur.peek() != "]":
            cur.error("unterminated blank node property list", open_mark)
        cur.advance()
        return node
