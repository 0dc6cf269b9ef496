"""Plain-text signed graph files.

Format::

    # comment lines and trailing comments start with '#'
    n m
    u v s        (m lines, 0-indexed vertices, s in {+, -, +1, -1, 1})
"""

from __future__ import annotations

import hashlib
from pathlib import Path

from .core import SignedGraph, build_graph
from .errors import GraphError, ParseError

__all__ = ["parse_graph", "format_graph", "read_graph", "write_graph", "graph_digest"]

_SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str) -> SignedGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file: expected header 'n m'")
    lineno, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"line {lineno}: header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: header values must be integers") from exc
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative vertex or edge count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    edges = []
    for lineno, tok in body:
        if len(tok) != 3:
            raise ParseError(f"line {lineno}: expected 'u v s', got {' '.join(tok)!r}")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from exc
        if tok[2] not in _SIGNS:
            raise ParseError(f"line {lineno}: sign must be one of + - +1 -1, got {tok[2]!r}")
        edges.append((u, v, _SIGNS[tok[2]]))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: SignedGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.n} {g.num_edges}")
    out.extend(f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges)
    return "\n".join(out) + "\n"


def read_graph(path) -> SignedGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def write_graph(g: SignedGraph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_graph(g, comment))


def graph_digest(g: SignedGraph) -> str:
    """SHA-256 of the canonical (comment-free) text form."""
    return hashlib.sha256(format_graph(g).encode()).hexdigest()
