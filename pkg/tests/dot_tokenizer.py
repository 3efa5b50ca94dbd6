"""A small independent DOT reader used to validate emitter output.

Understands exactly the statement shapes the emitter produces: one
graph attribute line, quoted node statements with a bracketed
attribute list, and quoted edge statements. Raises ValueError on
anything else, which is the point: emitter output must stay inside
this narrow, unambiguous dialect.
"""

from __future__ import annotations

_UNESCAPE = {"\\": "\\", '"': '"', "n": "\n"}


class DotGraph:
    def __init__(self):
        self.graph_attrs: dict[str, str] = {}
        self.nodes: dict[str, dict[str, str]] = {}
        self.edges: list[tuple[str, str, dict[str, str]]] = []


def _read_quoted(text: str, pos: int) -> tuple[str, int]:
    if text[pos] != '"':
        raise ValueError(f"expected '\"' at {pos}")
    pos += 1
    out: list[str] = []
    while True:
        if pos >= len(text):
            raise ValueError("unterminated quoted string")
        c = text[pos]
        if c == '"':
            return "".join(out), pos + 1
        if c == "\\":
            esc = text[pos + 1]
            if esc not in _UNESCAPE:
                raise ValueError(f"unknown escape \\{esc}")
            out.append(_UNESCAPE[esc])
            pos += 2
        else:
            out.append(c)
            pos += 1


def _read_attrs(text: str) -> dict[str, str]:
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"malformed attribute list: {text!r}")
    inner = text[1:-1]
    attrs: dict[str, str] = {}
    pos = 0
    while pos < len(inner):
        eq = inner.index("=", pos)
        key = inner[pos:eq].strip()
        if not key.isidentifier() and key != "URL":
            raise ValueError(f"bad attribute name {key!r}")
        value, pos = _read_quoted(inner, eq + 1)
        if key in attrs:
            raise ValueError(f"duplicate attribute {key!r}")
        attrs[key] = value
        if pos < len(inner):
            if not inner.startswith(", ", pos):
                raise ValueError(f"expected ', ' between attributes at {pos}")
            pos += 2
    return attrs


def parse_dot(text: str) -> DotGraph:
    lines = text.split("\n")
    if lines[-1] != "":
        raise ValueError("missing trailing newline")
    lines = lines[:-1]
    if lines[0] != "digraph G {" or lines[-1] != "}":
        raise ValueError("bad document frame")
    result = DotGraph()
    for line in lines[1:-1]:
        if not line.startswith("  "):
            raise ValueError(f"bad indentation: {line!r}")
        body = line[2:]
        if not body.endswith(";"):
            raise ValueError(f"missing ';': {line!r}")
        body = body[:-1]
        if body[0] != '"':
            key, _, value = body.partition("=")
            value, end = _read_quoted(value, 0)
            if _ := body[len(key) + 1 + end:]:
                raise ValueError(f"trailing junk: {line!r}")
            result.graph_attrs[key] = value
            continue
        name, pos = _read_quoted(body, 0)
        rest = body[pos:]
        if rest.startswith(" -> "):
            target, pos2 = _read_quoted(rest, 4)
            attrs = _read_attrs(rest[pos2 + 1:])
            result.edges.append((name, target, attrs))
        elif rest.startswith(" ["):
            if name in result.nodes:
                raise ValueError(f"duplicate node {name!r}")
            result.nodes[name] = _read_attrs(rest[1:])
        else:
            raise ValueError(f"unrecognized statement: {line!r}")
    return result
