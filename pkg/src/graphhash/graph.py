"""Graph data model and seeded generators.

A graph is a store of vertices and edges. Each vertex keeps an ordered
incidence list; an edge is listed by both endpoints, but only once by a
vertex it loops on. Labels are optional 64-bit signed integers (``None`` is
the null label). Directed and undirected edges may be mixed, parallel edges
are allowed and the graph need not be connected.

Random corpora use :class:`random.Random` (CPython's Mersenne Twister,
MT19937) seeded with the given integer. Only ``randrange`` and ``shuffle``
are drawn from it, both of which are stable across CPython 3 releases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

Label = Optional[int]

LABEL_MIN = -(2**63)
LABEL_MAX = 2**63 - 1


class GraphError(ValueError):
    """Raised on an invalid graph construction request."""


@dataclass(frozen=True)
class Edge:
    label: Label
    source: int
    target: int
    directed: bool

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass
class Vertex:
    label: Label
    edges: list[int] = field(default_factory=list)


def _check_label(label: Label) -> Label:
    if label is None:
        return None
    if isinstance(label, bool) or not isinstance(label, int):
        raise GraphError(f"label must be an int or None, got {label!r}")
    if not LABEL_MIN <= label <= LABEL_MAX:
        raise GraphError(f"label {label} outside signed 64-bit range")
    return label


class Graph:
    """Vertex/edge store with per-vertex incidence lists.

    Vertex and edge refs are dense indices in insertion order.
    """

    def __init__(self) -> None:
        self.vertices: list[Vertex] = []
        self.edges: list[Edge] = []

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Graph(vertices={len(self.vertices)}, edges={len(self.edges)})"

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def add_vertex(self, label: Label = None) -> int:
        self.vertices.append(Vertex(_check_label(label)))
        return len(self.vertices) - 1

    def add_edge(self, source: int, target: int, directed: bool = True, label: Label = None) -> int:
        self._check_ref(source)
        self._check_ref(target)
        ref = len(self.edges)
        self.edges.append(Edge(_check_label(label), source, target, bool(directed)))
        self.vertices[source].edges.append(ref)
        if target != source:
            self.vertices[target].edges.append(ref)
        return ref

    def incident_edges(self, v: int) -> list[int]:
        self._check_ref(v)
        return list(self.vertices[v].edges)

    def vertex_label(self, v: int) -> Label:
        self._check_ref(v)
        return self.vertices[v].label

    def _check_ref(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self.vertices):
            raise GraphError(f"vertex ref {v!r} out of range (graph has {len(self.vertices)} vertices)")

    def degree_sum(self) -> int:
        return sum(len(v.edges) for v in self.vertices)

    def check_consistency(self) -> None:
        """Raise :class:`GraphError` if incidence lists and the edge store disagree."""
        expected: list[list[int]] = [[] for _ in self.vertices]
        for ref, e in enumerate(self.edges):
            if not (0 <= e.source < len(self.vertices) and 0 <= e.target < len(self.vertices)):
                raise GraphError(f"edge {ref} has a dangling endpoint")
            expected[e.source].append(ref)
            if not e.is_loop:
                expected[e.target].append(ref)
        for v, vert in enumerate(self.vertices):
            if sorted(vert.edges) != expected[v]:
                raise GraphError(f"incidence list of vertex {v} is inconsistent")


def complete_digraph(n: int) -> Graph:
    """Fully interconnected directed graph: one edge u->v for every u != v."""
    g = Graph()
    for _ in range(n):
        g.add_vertex()
    for u in range(n):
        for v in range(n):
            if u != v:
                g.add_edge(u, v, directed=True)
    return g


def random_graph(
    nv: int,
    ne: int,
    directed: bool = True,
    label_range: Optional[int] = None,
    seed: int = 0,
) -> Graph:
    """Random multigraph with exactly ``nv`` vertices and ``ne`` edges.

    Each edge picks its (source, target) pair uniformly over all ordered
    vertex pairs, so loops and parallel edges occur. With ``label_range``
    set, every vertex and edge label is drawn uniformly from
    ``[0, label_range)``; otherwise labels are null.
    """
    if nv < 0 or ne < 0:
        raise GraphError("vertex and edge counts must be non-negative")
    if ne > 0 and nv == 0:
        raise GraphError("cannot place edges in a graph without vertices")
    if label_range is not None and label_range < 1:
        raise GraphError("label_range must be at least 1")
    rng = random.Random(seed)

    def draw_label() -> Label:
        return rng.randrange(label_range) if label_range is not None else None

    g = Graph()
    for _ in range(nv):
        g.add_vertex(draw_label())
    for _ in range(ne):
        s = rng.randrange(nv)
        t = rng.randrange(nv)
        g.add_edge(s, t, directed, draw_label())
    return g


def scramble(g: Graph, seed: int = 0) -> Graph:
    """Isomorphic clone with vertex, edge and incidence orderings shuffled.

    Undirected edges also get their endpoints swapped at random. Labels stay
    attached to their vertices and edges.
    """
    rng = random.Random(seed)
    n = len(g.vertices)
    order = list(range(n))
    rng.shuffle(order)
    # order[new] = old
    new_of_old = [0] * n
    for new, old in enumerate(order):
        new_of_old[old] = new

    edge_order = list(range(len(g.edges)))
    rng.shuffle(edge_order)

    out = Graph()
    for old in order:
        out.add_vertex(g.vertices[old].label)
    for old_ref in edge_order:
        e = g.edges[old_ref]
        s, t = new_of_old[e.source], new_of_old[e.target]
        if not e.directed and rng.random() < 0.5:
            s, t = t, s
        out.add_edge(s, t, e.directed, e.label)
    for vert in out.vertices:
        rng.shuffle(vert.edges)
    return out


def relabel(g: Graph, seed: int = 0, label_range: int = 1000) -> Graph:
    """Copy of ``g`` with every vertex and edge label redrawn at random."""
    rng = random.Random(seed)
    out = Graph()
    for v in g.vertices:
        out.add_vertex(rng.randrange(label_range))
    for e in g.edges:
        out.add_edge(e.source, e.target, e.directed, rng.randrange(label_range))
    for old, new in zip(g.vertices, out.vertices):
        new.edges = list(old.edges)
    return out


def digraph_from_bits(n: int, bits: int) -> Graph:
    """Simple loop-free digraph on ``n`` vertices encoded as a bitmask.

    Bit ``k`` selects the k-th ordered pair (u, v), u != v, in row-major order.
    Enumerating ``bits`` over ``range(2 ** (n * (n - 1)))`` yields every
    labeled simple digraph once.
    """
    g = Graph()
    for _ in range(n):
        g.add_vertex()
    k = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if bits >> k & 1:
                g.add_edge(u, v, directed=True)
            k += 1
    return g
