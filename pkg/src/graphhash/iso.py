"""Isomorphism testing: brute-force oracle, Ullmann baseline, hash-constrained search.

Two graphs are isomorphic under a vertex bijection ``m`` when vertex labels
agree and, for every ordered vertex pair (unordered for undirected edges),
the multiset of edge (label, directedness) annotations is carried over
unchanged. Parallel edges and loops are part of that multiset.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

from .coder import vertex_codes
from .graph import Graph

BRUTE_FORCE_CAP = 8

Mapping = dict[int, int]


class OracleCapExceeded(ValueError):
    """The brute-force oracle refuses inputs above its vertex cap."""


@dataclass
class IsoResult:
    found: bool
    mapping: Optional[Mapping] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.found


def _edge_key(u: int, v: int, directed: bool, label) -> tuple:
    if not directed and v < u:
        u, v = v, u
    return (u, v, directed, label)


def _annotation_counter(g: Graph, m=None) -> Counter:
    keys = Counter()
    for e in g.edges:
        s, t = (e.source, e.target) if m is None else (m[e.source], m[e.target])
        keys[_edge_key(s, t, e.directed, e.label)] += 1
    return keys


def verify_isomorphism(g1: Graph, g2: Graph, m) -> bool:
    """Check that ``m`` (dict or sequence, g1 vertex -> g2 vertex) is an isomorphism."""
    n = g1.num_vertices
    if n != g2.num_vertices or g1.num_edges != g2.num_edges:
        return False
    try:
        image = [m[v] for v in range(n)]
    except (KeyError, IndexError):
        return False
    if len(m) != n or sorted(image) != list(range(n)):
        return False
    for v in range(n):
        if g1.vertices[v].label != g2.vertices[image[v]].label:
            return False
    return _annotation_counter(g1, image) == _annotation_counter(g2)


def _pair_annotations(g: Graph) -> dict[tuple[int, int], tuple]:
    """Ordered pair -> canonical multiset of (label, directed) on edges between them.

    A directed edge u->v is filed under (u, v) only; an undirected one under
    both orientations.
    """
    acc: dict[tuple[int, int], list] = defaultdict(list)
    for e in g.edges:
        acc[(e.source, e.target)].append((e.directed, e.label))
        if not e.directed and e.source != e.target:
            acc[(e.target, e.source)].append((e.directed, e.label))
    return {k: tuple(sorted(Counter(v).items(), key=repr)) for k, v in acc.items()}


def _quick_reject(g1: Graph, g2: Graph) -> bool:
    if g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges:
        return True
    if Counter(v.label for v in g1.vertices) != Counter(v.label for v in g2.vertices):
        return True
    ann = lambda g: Counter((e.directed, e.label) for e in g.edges)  # noqa: E731
    return ann(g1) != ann(g2)


def brute_force_isomorphic(g1: Graph, g2: Graph, cap: int = BRUTE_FORCE_CAP) -> IsoResult:
    """Exhaustive permutation search; exact but only for tiny graphs.

    Every leaf of the permutation tree is checked with
    :func:`verify_isomorphism`, nothing is pruned. ``nodes`` counts the
    partial assignments visited.
    """
    n = g1.num_vertices
    if max(n, g2.num_vertices) > cap:
        raise OracleCapExceeded(f"brute force refuses {max(n, g2.num_vertices)} vertices (cap {cap})")
    if n != g2.num_vertices or g1.num_edges != g2.num_edges:
        return IsoResult(False)
    perm: list[int] = []
    used = [False] * n
    nodes = 0

    def search() -> bool:
        nonlocal nodes
        if len(perm) == n:
            return verify_isomorphism(g1, g2, perm)
        for j in range(n):
            if used[j]:
                continue
            nodes += 1
            used[j] = True
            perm.append(j)
            if search():
                return True
            perm.pop()
            used[j] = False
        return False

    if search():
        return IsoResult(True, dict(enumerate(perm)), nodes)
    return IsoResult(False, None, nodes)


def _consistent(i, j, mapping, ann1, ann2) -> bool:
    """Pairs between ``i`` and the already-mapped vertices carry the same annotations."""
    empty = ()
    if ann1.get((i, i), empty) != ann2.get((j, j), empty):
        return False
    for k, mk in mapping.items():
        if ann1.get((i, k), empty) != ann2.get((j, mk), empty):
            return False
        if ann1.get((k, i), empty) != ann2.get((mk, j), empty):
            return False
    return True


def _projection(g: Graph) -> tuple[list[int], list[int]]:
    """Bitset adjacency of the simple projection: out[u] and in[u] per vertex."""
    n = g.num_vertices
    out = [0] * n
    inn = [0] * n
    for e in g.edges:
        s, t = e.source, e.target
        out[s] |= 1 << t
        inn[t] |= 1 << s
        if not e.directed:
            out[t] |= 1 << s
            inn[s] |= 1 << t
    return out, inn


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _refine(m: list[int], out1, in1, out2, in2) -> bool:
    """Ullmann refinement to a fixpoint; False once some row is empty."""
    n = len(m)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            row = m[i]
            for j in _bits(row):
                ok = all(m[x] & out2[j] for x in _bits(out1[i])) and all(
                    m[x] & in2[j] for x in _bits(in1[i])
                )
                if not ok:
                    row &= ~(1 << j)
                    changed = True
            if row == 0:
                return False
            m[i] = row
    return True


def ullmann_isomorphic(g1: Graph, g2: Graph) -> IsoResult:
    """Ullmann's candidate-matrix backtracking, specialized to full isomorphism.

    The matrix works on the simple projection of both graphs (any edge
    u->v, or undirected u-v, makes u adjacent to v); parallel edges and
    labels are enforced by the pair-annotation check on every assignment.
    """
    n = g1.num_vertices
    if _quick_reject(g1, g2):
        return IsoResult(False)
    if n == 0:
        return IsoResult(True, {}, 0)
    out1, in1 = _projection(g1)
    out2, in2 = _projection(g2)
    deg1 = [len(v.edges) for v in g1.vertices]
    deg2 = [len(v.edges) for v in g2.vertices]
    m0 = []
    for i in range(n):
        row = 0
        sig = (
            g1.vertices[i].label,
            deg1[i],
            out1[i].bit_count(),
            in1[i].bit_count(),
            out1[i] >> i & 1,
        )
        for j in range(n):
            if sig == (
                g2.vertices[j].label,
                deg2[j],
                out2[j].bit_count(),
                in2[j].bit_count(),
                out2[j] >> j & 1,
            ):
                row |= 1 << j
        m0.append(row)
    if not _refine(m0, out1, in1, out2, in2):
        return IsoResult(False)
    ann1 = _pair_annotations(g1)
    ann2 = _pair_annotations(g2)
    mapping: Mapping = {}
    nodes = 0

    def search(d: int, m: list[int]) -> bool:
        nonlocal nodes
        if d == n:
            return True
        for j in _bits(m[d]):
            if not _consistent(d, j, mapping, ann1, ann2):
                continue
            nodes += 1
            m2 = [row & ~(1 << j) for row in m]
            m2[d] = 1 << j
            if _refine(m2, out1, in1, out2, in2):
                mapping[d] = j
                if search(d + 1, m2):
                    return True
                del mapping[d]
        return False

    if search(0, m0) and verify_isomorphism(g1, g2, mapping):
        return IsoResult(True, dict(mapping), nodes)
    return IsoResult(False, None, nodes)


def hash_constrained_isomorphic(
    g1: Graph,
    g2: Graph,
    codes1: Optional[dict[int, bytes]] = None,
    codes2: Optional[dict[int, bytes]] = None,
) -> IsoResult:
    """Backtracking where a vertex may only map to vertices with its structural code.

    Precomputed :func:`~graphhash.coder.vertex_codes` may be passed in to
    avoid rehashing. Vertices of ``g1`` are placed smallest candidate class
    first.
    """
    n = g1.num_vertices
    if n != g2.num_vertices or g1.num_edges != g2.num_edges:
        return IsoResult(False)
    if codes1 is None:
        codes1 = vertex_codes(g1)
    if codes2 is None:
        codes2 = vertex_codes(g2)
    if Counter(codes1.values()) != Counter(codes2.values()):
        return IsoResult(False)
    classes: dict[bytes, list[int]] = defaultdict(list)
    for v in range(n):
        classes[codes2[v]].append(v)
    order = sorted(range(n), key=lambda v: (len(classes[codes1[v]]), v))
    ann1 = _pair_annotations(g1)
    ann2 = _pair_annotations(g2)
    labels1 = [v.label for v in g1.vertices]
    labels2 = [v.label for v in g2.vertices]
    mapping: Mapping = {}
    used = [False] * n
    nodes = 0

    def search(d: int) -> bool:
        nonlocal nodes
        if d == n:
            return True
        i = order[d]
        for j in classes[codes1[i]]:
            if used[j] or labels1[i] != labels2[j]:
                continue
            if not _consistent(i, j, mapping, ann1, ann2):
                continue
            nodes += 1
            used[j] = True
            mapping[i] = j
            if search(d + 1):
                return True
            del mapping[i]
            used[j] = False
        return False

    if search(0) and verify_isomorphism(g1, g2, mapping):
        return IsoResult(True, dict(sorted(mapping.items())), nodes)
    return IsoResult(False, None, nodes)


MATCHERS = {
    "brute": brute_force_isomorphic,
    "ullmann": ullmann_isomorphic,
    "hash": hash_constrained_isomorphic,
}
