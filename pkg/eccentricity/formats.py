"""
Plain-text edge lists and Graphviz DOT output.

Edge-list documents are::

    # free comment
    # label v0 0
    n m
    u v          (m lines, 0-based ids)

Serialization is canonical (edges sorted, u < v on every line), so a
serialized graph parses back to an equal Graph.
"""
import logging
import re

from .exceptions import GraphValidationError, PreconditionError
from .graph_core import Path, build_graph

logger = logging.getLogger(__name__)

DEFAULT_COLOR = "red"
THICK = "thick"


def serialize_edge_list(g, labels=None, comments=()):
    lines = [f"# {comment}" for comment in comments]
    for name, vertex in sorted((labels or {}).items(), key=lambda item: (item[1], item[0])):
        lines.append(f"# label {name} {vertex}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def _integers(line, number, what):
    fields = line.split()
    if len(fields) != 2:
        raise GraphValidationError(f"expected {what}, got {line!r}", number)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphValidationError(f"expected {what}, got {line!r}", number) from None


def parse_edge_list_document(text):
    """Parse a document into (Graph, labels)."""
    header = None
    edges = []
    labels = {}
    label_lines = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 3 and fields[0] == "label":
                try:
                    labels[fields[1]] = int(fields[2])
                except ValueError:
                    raise GraphValidationError(f"label id must be an integer, got {fields[2]!r}", number) from None
                label_lines[fields[1]] = number
            continue
        if header is None:
            header = _integers(line, number, "an 'n m' header")
            n, m = header
            if n < 1 or m < 0:
                raise GraphValidationError(f"invalid header {line!r}", number)
            continue

        u, v = _integers(line, number, "an edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) uses an id outside 0..{n - 1}", number)
        if u == v:
            raise GraphValidationError(f"self-loop on vertex {u}", number)
        edges.append((u, v))

    if header is None:
        raise GraphValidationError("missing 'n m' header")
    if len(edges) != m:
        raise GraphValidationError(f"header announces {m} edges but {len(edges)} were listed")
    for name, vertex in labels.items():
        if not 0 <= vertex < n:
            raise GraphValidationError(f"label {name} points at {vertex}, outside 0..{n - 1}", label_lines[name])

    graph = build_graph(n, edges)
    logger.debug(f"parsed edge list: {graph.n} vertices, {graph.m} edges, {len(labels)} labels")
    return graph, labels


def parse_edge_list(text):
    return parse_edge_list_document(text)[0]


def parse_path_spec(spec, labels=None):
    """Comma (or space) separated vertex ids or label names, e.g. ``0,1,2`` or ``v0,v1,v2``."""
    labels = labels or {}
    vertices = []
    for token in re.split(r"[,\s]+", spec.strip()):
        if not token:
            continue
        if token.lstrip("-").isdigit():
            vertices.append(int(token))
        elif token in labels:
            vertices.append(labels[token])
        else:
            raise PreconditionError(f"unknown vertex {token!r} in path {spec!r}")
    if not vertices:
        raise PreconditionError("empty path specification")
    return vertices


def parse_highlight(spec, labels=None):
    """``SPEC[:COLOR]``; the color tag defaults to red, ``thick`` draws a bold path."""
    path_spec, _, color = spec.partition(":")
    return parse_path_spec(path_spec, labels), color or DEFAULT_COLOR


def _edge_attributes(tags):
    attributes = []
    colors = [tag for tag in tags if tag != THICK]
    if colors:
        attributes.append(f"color={colors[-1]}")
    attributes.append("penwidth=3" if THICK in tags else "penwidth=2")
    return ", ".join(attributes)


def write_dot(g, highlights=(), labels=None):
    """
    Render g as an undirected DOT graph. Each highlight is (path, tag) where the
    tag is a Graphviz color name or ``thick``; edges on several highlighted
    paths combine their tags, the last color winning.
    """
    styled = {}
    for path, tag in highlights:
        walk = path.vertices if isinstance(path, Path) else tuple(path)
        for a, b in zip(walk, walk[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n and g.has_edge(a, b)):
                raise PreconditionError(f"highlighted path uses {a}-{b}, which is not an edge")
            styled.setdefault((min(a, b), max(a, b)), []).append(tag)

    names = {vertex: name for name, vertex in (labels or {}).items()}
    lines = ["graph G {", "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{names[v]}"];' if v in names else f"  {v};")
    for u, v in g.edge_list():
        tags = styled.get((u, v))
        lines.append(f"  {u} -- {v} [{_edge_attributes(tags)}];" if tags else f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
