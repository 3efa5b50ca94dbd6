"""DOT output and optional rendering through a GraphViz binary.

Output is deterministic: the same view and options always produce the
same bytes. Node order follows the view (already sorted), attributes
appear in a fixed order, and all values are quoted.
"""

from __future__ import annotations

import os
import subprocess
from dataclasses import dataclass
from enum import Enum
from urllib.parse import quote

from .errors import KgAtlasError
from .facets import ViewGraph
from .terms import local_name, node_id


class RendererUnavailableError(KgAtlasError):
    """The external layout engine could not be executed."""

    code = "renderer_unavailable"


class Layout(Enum):
    HIERARCHICAL = "hierarchical"
    RADIAL = "radial"
    CIRCULAR = "circular"


_ENGINES = {
    Layout.HIERARCHICAL: "dot",
    Layout.RADIAL: "twopi",
    Layout.CIRCULAR: "circo",
}

# Node shape per class, keyed by the class IRI's local name.
_SHAPES = {
    "Person": "ellipse",
    "Location": "house",
    "Organization": "box",
    "ViolentAct": "octagon",
    "Date": "note",
}
_DEFAULT_SHAPE = "ellipse"

# The one place presentation defaults live. Passing theme=DEFAULT_THEME
# (or a dict with the same keys) styles every node and edge; the
# bare emission carries no styling at all.
DEFAULT_THEME = {
    "fontname": "Helvetica",
    "fontsize": "10",
    "node_color": "#1f3552",
    "node_fill": "#eef3fa",
    "edge_color": "#5a6b7f",
}

RENDER_FORMATS = ("svg", "png", "pdf")


@dataclass(frozen=True)
class DotDocument:
    text: str
    engine: str


def layout_engine_for(layout: Layout) -> str:
    """GraphViz engine name for a layout style."""
    return _ENGINES[layout]


def escape_dot(value: str) -> str:
    """Escape a string for use inside a double-quoted DOT attribute."""
    return value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def _node_shape(class_iri) -> str:
    if class_iri is None:
        return _DEFAULT_SHAPE
    return _SHAPES.get(local_name(class_iri), _DEFAULT_SHAPE)


def emit_dot(
    view: ViewGraph,
    layout: Layout = Layout.HIERARCHICAL,
    *,
    hyperlink_base: str | None = None,
    include_tooltips: bool = True,
    icon_dir: str | None = None,
    theme: dict[str, str] | None = None,
) -> DotDocument:
    """Emit a GraphViz document for a view.

    Node labels show the instance label over its class label. When
    ``icon_dir`` holds ``<icon key>.png`` for a node's class, the node
    is drawn as that image instead of a shape. ``hyperlink_base``
    turns each node into a link to base + urlencoded node id. A
    ``theme`` mapping (see DEFAULT_THEME) styles fonts and colors;
    without one the document carries no styling attributes.
    """
    engine = layout_engine_for(layout)
    node_style: list[str] = []
    edge_style: list[str] = []
    if theme:
        node_style = [
            f'fontname="{escape_dot(theme["fontname"])}"',
            f'fontsize="{escape_dot(theme["fontsize"])}"',
            f'color="{escape_dot(theme["node_color"])}"',
            f'fillcolor="{escape_dot(theme["node_fill"])}"',
            'style="filled"',
        ]
        edge_style = [
            f'fontname="{escape_dot(theme["fontname"])}"',
            f'fontsize="{escape_dot(theme["fontsize"])}"',
            f'color="{escape_dot(theme["edge_color"])}"',
        ]
    lines = ["digraph G {", f'  layout="{engine}";']
    for node in view.nodes:
        label = node.label
        if node.class_label:
            label = f"{node.label}\n({node.class_label})"
        attrs = [f'label="{escape_dot(label)}"']
        icon_path = None
        if icon_dir and node.icon_key:
            candidate = os.path.join(icon_dir, f"{node.icon_key}.png")
            if os.path.isfile(candidate):
                icon_path = candidate
        if icon_path:
            attrs.append(f'image="{escape_dot(icon_path)}"')
            attrs.append('shape="none"')
        else:
            attrs.append(f'shape="{_node_shape(node.class_iri)}"')
        if include_tooltips and node.tooltip:
            text = "\n".join(f"{prop}: {value}" for prop, value in node.tooltip)
            attrs.append(f'tooltip="{escape_dot(text)}"')
        if hyperlink_base:
            attrs.append(f'URL="{escape_dot(hyperlink_base + quote(node.id, safe=""))}"')
        attrs.extend(node_style)
        lines.append(f'  "{escape_dot(node.id)}" [{", ".join(attrs)}];')
    for edge in view.edges:
        source = escape_dot(node_id(edge.source))
        target = escape_dot(node_id(edge.target))
        attrs = [f'label="{escape_dot(edge.label)}"'] + edge_style
        lines.append(f'  "{source}" -> "{target}" [{", ".join(attrs)}];')
    lines.append("}")
    return DotDocument(text="\n".join(lines) + "\n", engine=engine)


def render(doc: DotDocument, fmt: str, renderer_dir: str | None = None) -> bytes:
    """Run the layout engine, returning the rendered bytes.

    ``renderer_dir`` points at the directory holding the GraphViz
    binaries; otherwise PATH decides. Raises RendererUnavailableError
    when the engine is missing or exits nonzero.
    """
    if fmt not in RENDER_FORMATS:
        raise ValueError(f"unsupported render format: {fmt!r}")
    executable = doc.engine
    if renderer_dir:
        executable = os.path.join(renderer_dir, doc.engine)
    try:
        proc = subprocess.run(
            [executable, f"-T{fmt}"],
            input=doc.text.encode("utf-8"),
            capture_output=True,
        )
    except OSError as exc:
        raise RendererUnavailableError(f"cannot run {executable!r}: {exc}") from None
    if proc.returncode != 0:
        detail = proc.stderr.decode("utf-8", errors="replace").strip()
        raise RendererUnavailableError(
            f"{doc.engine} exited with status {proc.returncode}: {detail}"
        )
    return proc.stdout
