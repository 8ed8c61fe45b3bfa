"""Line-oriented text format for a single graph.

::

    # comment
    v <id> [label]
    e <src> <dst> <d|u> [label]

Vertex ids are unique non-negative decimals; edges may only reference
vertices declared above them. File order is insertion order. The format
records edge order but not the order of incidence lists, which are rebuilt
in edge order on parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .coder import graph_hash
from .graph import LABEL_MAX, LABEL_MIN, Graph

_ID = re.compile(r"\d+\Z")
_LABEL = re.compile(r"[+-]?\d+\Z")


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _label(tok: str, lineno: int) -> int:
    if not _LABEL.match(tok):
        raise ParseError(lineno, f"bad label {tok!r}")
    value = int(tok)
    if not LABEL_MIN <= value <= LABEL_MAX:
        raise ParseError(lineno, f"label {tok} outside signed 64-bit range")
    return value


def read_graph(text: str) -> tuple[Graph, list[int]]:
    """Parse a graph document; returns the graph and the file id of each vertex."""
    g = Graph()
    ids: list[int] = []
    index: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "v":
            if len(tok) not in (2, 3) or not _ID.match(tok[1]):
                raise ParseError(lineno, f"malformed vertex line {raw.strip()!r}")
            vid = int(tok[1])
            if vid in index:
                raise ParseError(lineno, f"duplicate vertex id {vid}")
            label = _label(tok[2], lineno) if len(tok) == 3 else None
            index[vid] = g.add_vertex(label)
            ids.append(vid)
        elif kind == "e":
            if len(tok) not in (4, 5) or not (_ID.match(tok[1]) and _ID.match(tok[2])) or tok[3] not in ("d", "u"):
                raise ParseError(lineno, f"malformed edge line {raw.strip()!r}")
            ends = []
            for t in tok[1:3]:
                vid = int(t)
                if vid not in index:
                    raise ParseError(lineno, f"undeclared vertex {vid}")
                ends.append(index[vid])
            label = _label(tok[4], lineno) if len(tok) == 5 else None
            g.add_edge(ends[0], ends[1], tok[3] == "d", label)
        else:
            raise ParseError(lineno, f"unknown record {kind!r}")
    return g, ids


def parse_graph(text: str) -> Graph:
    return read_graph(text)[0]


def serialize_graph(g: Graph, ids=None) -> str:
    """Render ``g`` in the text format, vertex ids defaulting to vertex refs."""
    if ids is None:
        ids = range(g.num_vertices)
    ids = list(ids)
    lines = []
    for vid, v in zip(ids, g.vertices):
        lines.append(f"v {vid}" if v.label is None else f"v {vid} {v.label}")
    for e in g.edges:
        head = f"e {ids[e.source]} {ids[e.target]} {'d' if e.directed else 'u'}"
        lines.append(head if e.label is None else f"{head} {e.label}")
    return "\n".join(lines) + "\n" if lines else ""


@dataclass
class DedupeGroup:
    hash: bytes
    members: list[str] = field(default_factory=list)


def dedupe(documents, hash_labels: bool = True):
    """Group named documents by graph hash.

    ``documents`` is an iterable of ``(name, text)``. Returns the groups in
    order of first appearance and a list of ``(name, error)`` for documents
    that failed to parse.
    """
    groups: dict[bytes, DedupeGroup] = {}
    errors: list[tuple[str, ParseError]] = []
    for name, text in documents:
        try:
            g = parse_graph(text)
        except ParseError as exc:
            errors.append((name, exc))
            continue
        h = graph_hash(g, hash_labels)
        groups.setdefault(h, DedupeGroup(h)).members.append(name)
    return list(groups.values()), errors
