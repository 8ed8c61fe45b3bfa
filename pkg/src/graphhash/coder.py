"""MD5 hash codes for graphs by iterative vertex-neighborhood expansion.

Every vertex of the graph becomes a child of a root coder. Each child grows
an acyclic DAG of coders, one level of neighborhood per expansion, keyed by
(vertex, edge) so a traversal is recorded at most once per subtree. Coder
codes are MD5 digests over the coder's own data followed by its children's
codes in sorted order. The root keeps expanding vertices whose codes tie
until every code is unique or cannot change anymore, then hashes the sorted
vertex codes into the graph code.

Content layout of a coder, in order:

* vertex label (labeled pass only): presence byte ``00``/``01`` then the
  value as 8 bytes big-endian two's complement;
* parent edge label (labeled pass only), same encoding;
* parent edge kind: ``00`` directed with source == this vertex, ``01``
  directed otherwise, ``02`` undirected;
* the 16-byte codes of the children, ascending.
"""

from __future__ import annotations

import hashlib
import itertools
from operator import attrgetter
from typing import Optional

from .graph import Graph, Label

HASH_SIZE = 16
ZERO_CODE = bytes(HASH_SIZE)

_KIND_OUT = b"\x00"
_KIND_IN = b"\x01"
_KIND_UNDIRECTED = b"\x02"

_by_code = attrgetter("code")
_pass_ids = itertools.count(1)


def md5_digest(data: bytes) -> bytes:
    return hashlib.md5(data).digest()


def hex_code(code: bytes) -> str:
    return code.hex()


def encode_label(label: Label) -> bytes:
    if label is None:
        return b"\x00"
    return b"\x01" + label.to_bytes(8, "big", signed=True)


class _Subtree:
    """State shared by all coders under one root child."""

    __slots__ = ("graph", "vertex_map")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.vertex_map: dict[tuple[int, Optional[int]], VertexCoder] = {}


class VertexCoder:
    """Node of the coder DAG.

    The root has ``vertex is None``. Root children have no parent edge and
    generation 1; every other coder sits one generation below the coder
    that created it.
    """

    __slots__ = (
        "vertex",
        "parent_edge",
        "code",
        "children",
        "creator",
        "expanded",
        "generation",
        "subtree",
        "_kind",
        "_pass",
    )

    def __init__(
        self,
        vertex: Optional[int],
        parent_edge: Optional[int],
        creator: Optional[VertexCoder],
        generation: int,
        subtree: Optional[_Subtree],
    ):
        self.vertex = vertex
        self.parent_edge = parent_edge
        self.code = ZERO_CODE
        self.children: list[VertexCoder] = []
        self.creator = creator
        self.expanded = False
        self.generation = generation
        self.subtree = subtree
        self._pass = 0
        self._kind = b""
        if parent_edge is not None:
            e = subtree.graph.edges[parent_edge]
            if not e.directed:
                self._kind = _KIND_UNDIRECTED
            elif e.source == vertex:
                self._kind = _KIND_OUT
            else:
                self._kind = _KIND_IN

    @property
    def is_root(self) -> bool:
        return self.vertex is None

    @property
    def vertex_map(self) -> dict:
        return self.subtree.vertex_map if self.subtree is not None else {}

    def __repr__(self) -> str:
        return (
            f"VertexCoder(vertex={self.vertex}, edge={self.parent_edge}, gen={self.generation}, "
            f"code={self.code.hex()[:8]}, children={len(self.children)}, expanded={self.expanded})"
        )

    def expand(self) -> None:
        """Grow this coder's subtree by one level of neighborhood."""
        stack = [self]
        while stack:
            c = stack.pop()
            if c.expanded:
                continue
            if c.children:
                # only the creator expands a shared child
                stack.extend(ch for ch in reversed(c.children) if ch.creator is c)
            else:
                c._expand_leaf()

    def _expand_leaf(self) -> None:
        sub = self.subtree
        graph = sub.graph
        vmap = sub.vertex_map
        v = self.vertex
        next_gen = self.generation + 1
        for ref in graph.vertices[v].edges:
            e = graph.edges[ref]
            neighbor = e.target if e.source == v else e.source
            key = (neighbor, ref)
            child = vmap.get(key)
            if child is None:
                child = VertexCoder(neighbor, ref, self, next_gen, sub)
                vmap[key] = child
                self.children.append(child)
            elif child.generation == next_gen:
                self.children.append(child)
            # any other generation is a cycle back into the subtree

    def generate_code(self, hash_labels: bool) -> None:
        """Recompute codes, running the root's convergence loop first when called on the root."""
        if self.is_root:
            self._converge()
        self._recode(hash_labels)

    def _converge(self) -> None:
        children = self.children
        for c in children:
            c.expand()
            c._recode(False)
        n = len(children)
        while True:
            if all(c.expanded for c in children):
                break
            children.sort(key=_by_code)
            i = 0
            while i < n - 1:
                a, b = children[i], children[i + 1]
                if (not a.expanded or not b.expanded) and a.code == b.code:
                    break
                i += 1
            if i >= n - 1:
                break
            j = i + 1
            while j < n and children[j].code == children[i].code:
                j += 1
            for c in children[i:j]:
                if not c.expanded:
                    c.expand()
                    c._recode(False)

    def _recode(self, hash_labels: bool) -> None:
        """One bottom-up code pass over the DAG below (and including) this coder.

        A coder reached through several parents is coded once per pass.
        """
        pass_id = next(_pass_ids)
        stack: list[tuple[VertexCoder, bool]] = [(self, False)]
        while stack:
            c, ready = stack.pop()
            if ready:
                c._finish_code(hash_labels)
                continue
            if c._pass == pass_id:
                continue
            c._pass = pass_id
            stack.append((c, True))
            for ch in c.children:
                if ch._pass != pass_id:
                    stack.append((ch, False))

    def _finish_code(self, hash_labels: bool) -> None:
        old = self.code
        children = self.children
        children.sort(key=_by_code)
        parts = []
        if hash_labels and self.vertex is not None:
            graph = self.subtree.graph
            parts.append(encode_label(graph.vertices[self.vertex].label))
            if self.parent_edge is not None:
                parts.append(encode_label(graph.edges[self.parent_edge].label))
        parts.append(self._kind)
        parts.extend(ch.code for ch in children)
        self.code = md5_digest(b"".join(parts))
        if self.code == old:
            self.expanded = True

    def walk(self):
        """Yield every distinct coder reachable from this one (pre-order)."""
        seen = set()
        stack = [self]
        while stack:
            c = stack.pop()
            if id(c) in seen:
                continue
            seen.add(id(c))
            yield c
            stack.extend(reversed(c.children))


def build_root(g: Graph) -> VertexCoder:
    root = VertexCoder(None, None, None, 0, None)
    for v in range(len(g.vertices)):
        sub = _Subtree(g)
        child = VertexCoder(v, None, root, 1, sub)
        sub.vertex_map[(v, None)] = child
        root.children.append(child)
    return root


def hash_graph(g: Graph, hash_labels: bool = True) -> VertexCoder:
    """Build and fully code the coder DAG for ``g``; returns the root."""
    root = build_root(g)
    root.generate_code(hash_labels)
    return root


def graph_hash(g: Graph, hash_labels: bool = True) -> bytes:
    return hash_graph(g, hash_labels).code


def vertex_codes(g: Graph) -> dict[int, bytes]:
    """Label-blind converged code of every vertex."""
    root = hash_graph(g, hash_labels=False)
    return {c.vertex: c.code for c in root.children}
