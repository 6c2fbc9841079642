"""Plain-text graph and labeling documents, and DOT export.

Both documents are line oriented. ``key: value`` lines set scalar fields, and a
key with an empty value (``edges:``, ``labels:``) opens a block of
whitespace-separated two-token rows that runs until the next key line.
Blank lines and ``#`` comments are ignored. Example::

    format: radiolabel-graph/1
    vertices: v1 v2 v'1
    edges:
    v1 v'1
    v2 v'1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .graph import Graph, GraphError, is_edge_vertex_name
from .labeling import Labeling, by_name, from_names

GRAPH_FORMAT = "radiolabel-graph/1"
LABELING_FORMAT = "radiolabel-labeling/1"
KINDS = ("radio", "L21")

_NAME_RE = re.compile(r"^[^\s:#\"]+$")
_KEY_RE = re.compile(r"^([A-Za-z_]+):\s*(.*)$")


class DocumentError(ValueError):
    pass


def _check_name(name: str) -> None:
    if not _NAME_RE.match(name):
        raise DocumentError(f"invalid vertex name {name!r}")


def _parse_sections(text: str) -> tuple[dict[str, str], dict[str, list[tuple[str, str]]]]:
    scalars: dict[str, str] = {}
    blocks: dict[str, list[tuple[str, str]]] = {}
    current: list[tuple[str, str]] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _KEY_RE.match(line)
        if m:
            key, value = m.groups()
            if key in scalars or key in blocks:
                raise DocumentError(f"line {lineno}: duplicate key {key!r}")
            if value:
                scalars[key] = value
                current = None
            else:
                current = blocks[key] = []
            continue
        parts = line.split()
        if current is None or len(parts) != 2:
            raise DocumentError(f"line {lineno}: unexpected content {raw!r}")
        current.append((parts[0], parts[1]))
    return scalars, blocks


@dataclass
class GraphDocument:
    names: list[str]
    edges: list[tuple[str, str]]
    version: int = 1

    @classmethod
    def from_graph(cls, g: Graph) -> GraphDocument:
        return cls(list(g.names), [(g.names[u], g.names[v]) for u, v in g.edges()])

    def to_graph(self) -> Graph:
        try:
            return Graph.from_edges(self.names, self.edges)
        except (GraphError, KeyError) as exc:
            raise DocumentError(f"invalid graph: {exc}") from None

    def dumps(self) -> str:
        for name in self.names:
            _check_name(name)
        lines = [f"format: {GRAPH_FORMAT}", "vertices: " + " ".join(self.names), "edges:"]
        lines += [f"{a} {b}" for a, b in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> GraphDocument:
        scalars, blocks = _parse_sections(text)
        if scalars.get("format") != GRAPH_FORMAT:
            raise DocumentError(f"expected format {GRAPH_FORMAT!r}, got {scalars.get('format')!r}")
        return cls._from_sections(scalars, blocks)

    @classmethod
    def _from_sections(cls, scalars: dict, blocks: dict) -> GraphDocument:
        if "vertices" not in scalars:
            raise DocumentError("missing 'vertices'")
        names = scalars["vertices"].split()
        if len(set(names)) != len(names):
            raise DocumentError("duplicate vertex names")
        known = set(names)
        edges = blocks.get("edges", [])
        for a, b in edges:
            if a not in known or b not in known:
                raise DocumentError(f"edge {a} {b} references an undeclared vertex")
        return cls(names, list(edges))


@dataclass
class LabelingDocument:
    labels: dict[str, int]
    kind: str = "radio"
    graph_path: str | None = None
    graph: GraphDocument | None = field(default=None)
    version: int = 1

    @classmethod
    def from_labeling(
        cls, g: Graph, labels: Mapping[int, int], kind: str = "radio", graph_path: str | None = None
    ) -> LabelingDocument:
        inline = None if graph_path else GraphDocument.from_graph(g)
        return cls(by_name(g, dict(sorted(labels.items()))), kind, graph_path, inline)

    def to_labeling(self, g: Graph) -> Labeling:
        missing = [name for name in g.names if name not in self.labels]
        if missing:
            raise DocumentError(f"labeling does not cover {', '.join(missing)}")
        try:
            return from_names(g, self.labels)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None

    def dumps(self) -> str:
        if self.kind not in KINDS:
            raise DocumentError(f"unknown kind {self.kind!r}")
        lines = [f"format: {LABELING_FORMAT}", f"kind: {self.kind}"]
        if self.graph_path:
            lines.append(f"graph: {self.graph_path}")
        if self.graph is not None:
            lines.append("vertices: " + " ".join(self.graph.names))
            lines.append("edges:")
            lines += [f"{a} {b}" for a, b in self.graph.edges]
        lines.append("labels:")
        lines += [f"{name} {lab}" for name, lab in self.labels.items()]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> LabelingDocument:
        scalars, blocks = _parse_sections(text)
        if scalars.get("format") != LABELING_FORMAT:
            raise DocumentError(f"expected format {LABELING_FORMAT!r}, got {scalars.get('format')!r}")
        kind = scalars.get("kind", "radio")
        if kind not in KINDS:
            raise DocumentError(f"unknown kind {kind!r}")
        labels: dict[str, int] = {}
        for name, value in blocks.get("labels", []):
            if name in labels:
                raise DocumentError(f"vertex {name} labeled twice")
            try:
                labels[name] = int(value)
            except ValueError:
                raise DocumentError(f"label of {name} is not an integer: {value!r}") from None
            if labels[name] < 0:
                raise DocumentError(f"label of {name} is negative")
        inline = GraphDocument._from_sections(scalars, blocks) if "vertices" in scalars else None
        return cls(labels, kind, scalars.get("graph"), inline)


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return GraphDocument.loads(text).to_graph()


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(GraphDocument.from_graph(g).dumps())


def read_labeling(path: str | Path) -> LabelingDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return LabelingDocument.loads(text)


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT; edge vertices (``v'i``) drawn as boxes, others as circles."""
    lines = [f"graph {name} {{"]
    for v in g.names:
        shape = "box" if is_edge_vertex_name(v) else "circle"
        lines.append(f'  "{v}" [shape={shape}];')
    for u, v in g.edges():
        lines.append(f'  "{g.names[u]}" -- "{g.names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
