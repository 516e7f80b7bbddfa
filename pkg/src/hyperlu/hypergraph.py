"""Hypergraphs on vertices 1..n with edges stored as n-bit vertex-set words.

Vertex ``k`` (1-based) is bit ``n - k`` of a word, so vertex 1 is the most
significant bit. With that convention a vertex-set word is also the index of
the computational basis string ``|1_S>`` with qubit 1 leftmost.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import EdgeTooSmall, EmptyHyperedge, SizeOutOfRange, VertexOutOfRange

MAX_VERTICES = 24


def vertex_bit(n: int, v: int) -> int:
    return 1 << (n - v)


def mask_from_vertices(n: int, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise VertexOutOfRange(f"vertex {v} not in 1..{n}")
        mask |= 1 << (n - v)
    return mask


def vertices_of(n: int, mask: int) -> tuple[int, ...]:
    """1-based vertex labels of a vertex-set word, ascending."""
    return tuple(v for v in range(1, n + 1) if mask >> (n - v) & 1)


def _edge_key(n: int, mask: int):
    return (mask.bit_count(), vertices_of(n, mask))


def remove_vertex_bit(n: int, mask: int, a: int) -> int:
    """Drop vertex ``a`` from a word over n vertices, giving a word over n-1."""
    p = n - a
    return ((mask >> (p + 1)) << p) | (mask & ((1 << p) - 1))


def insert_vertex_bit(n: int, mask: int, a: int, bit: int = 0) -> int:
    """Inverse of :func:`remove_vertex_bit`: word over n-1 vertices to one over n."""
    p = n - a
    low = mask & ((1 << p) - 1)
    return ((mask >> p) << (p + 1)) | (bit << p) | low


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph; ``edges`` is a canonically sorted tuple of words."""

    n: int
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise SizeOutOfRange(f"vertex count {self.n} not in 1..{MAX_VERTICES}")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e == 0:
                raise EmptyHyperedge("empty hyperedge")
            if e & ~full:
                raise VertexOutOfRange(f"edge word {e:#x} exceeds {self.n} vertices")
        canon = tuple(sorted(set(self.edges), key=lambda e: _edge_key(self.n, e)))
        if len(canon) != len(self.edges):
            raise ValueError("duplicate edges; use from_edge_words to cancel them")
        object.__setattr__(self, "edges", canon)

    @classmethod
    def from_edge_words(cls, n: int, words: Iterable[int]) -> "Hypergraph":
        """Build from possibly repeated words; repeats cancel mod 2."""
        counts = Counter(words)
        return cls(n, tuple(w for w, c in counts.items() if c % 2))

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def edge_lists(self) -> list[tuple[int, ...]]:
        return [vertices_of(self.n, e) for e in self.edges]

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return mask_from_vertices(self.n, vertices) in self.edge_set

    def edge_sizes(self) -> list[int]:
        return [e.bit_count() for e in self.edges]

    def permuted(self, perm: Sequence[int]) -> "Hypergraph":
        """Relabel vertex ``v`` as ``perm[v - 1]`` (perm is a 1-based permutation)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("not a permutation of 1..n")
        words = []
        for e in self.edges:
            words.append(mask_from_vertices(self.n, (perm[v - 1] for v in vertices_of(self.n, e))))
        return Hypergraph(self.n, tuple(words))

    def __str__(self):
        body = ", ".join("".join(map(str, vs)) if self.n < 10 else "{" + ",".join(map(str, vs)) + "}"
                         for vs in self.edge_lists())
        return f"Hypergraph(n={self.n}, edges={{{body}}})"


def parse_hypergraph(n: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Canonicalize a list of vertex lists. Edges listed twice cancel."""
    if n < 1:
        raise SizeOutOfRange("need at least one vertex")
    words = []
    for raw in raw_edges:
        raw = list(raw)
        if not raw:
            raise EmptyHyperedge("a hyperedge must contain at least one vertex")
        words.append(mask_from_vertices(n, raw))
    return Hypergraph.from_edge_words(n, words)


def _check_vertex(G: Hypergraph, a: int):
    if not 1 <= a <= G.n:
        raise VertexOutOfRange(f"vertex {a} not in 1..{G.n}")


def uniformity(G: Hypergraph) -> int | None:
    sizes = set(G.edge_sizes())
    if len(sizes) == 1:
        return sizes.pop()
    return None


def reduced_sets(G: Hypergraph, a: int) -> set[int]:
    """Reduced sets ``e \\ {a}`` for edges containing ``a``, as words."""
    _check_vertex(G, a)
    bit = vertex_bit(G.n, a)
    return {e & ~bit for e in G.edges if e & bit}


def shared_reduced_map(G: Hypergraph) -> dict[int, frozenset[int]]:
    """Map each reduced set (word) to the vertices it is a reduced set for."""
    owners: dict[int, set[int]] = {}
    for e in G.edges:
        for a in vertices_of(G.n, e):
            owners.setdefault(e & ~vertex_bit(G.n, a), set()).add(a)
    return {r: frozenset(vs) for r, vs in owners.items()}


def sharing_adjacency(G: Hypergraph) -> dict[int, set[int]]:
    """Vertex -> set of other vertices it shares at least one reduced set with."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, G.n + 1)}
    for vs in shared_reduced_map(G).values():
        for a in vs:
            adj[a].update(vs - {a})
    return adj


def essential_vertices(G: Hypergraph) -> set[int]:
    """Vertices with at least one reduced set, all of them shared."""
    rmap = shared_reduced_map(G)
    out = set()
    for a in range(1, G.n + 1):
        mine = reduced_sets(G, a)
        if mine and all(len(rmap[r]) >= 2 for r in mine):
            out.add(a)
    return out


def maximal_cliques(adj: dict[int, set[int]], nodes: Iterable[int]) -> list[frozenset[int]]:
    """Bron-Kerbosch with pivoting over bitsets of node positions."""
    order = sorted(nodes)
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * len(order)
    for v in order:
        for u in adj.get(v, ()):
            if u in index and u != v:
                nbr[index[v]] |= 1 << index[u]

    found: list[int] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            found.append(r)
            return
        px = p | x
        pivot = max((i for i in range(len(order)) if px >> i & 1),
                    key=lambda i: (p & nbr[i]).bit_count())
        cand = p & ~nbr[pivot]
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            expand(r | low, p & nbr[i], x & nbr[i])
            p &= ~low
            x |= low
            cand &= ~low

    if order:
        expand(0, (1 << len(order)) - 1, 0)
    return [frozenset(order[i] for i in range(len(order)) if r >> i & 1) for r in found]


def essential_hypergraph(G: Hypergraph) -> Hypergraph:
    """Essential vertices joined by maximal mutually-sharing cliques.

    Defined for hypergraphs whose edges all have size >= 3. Non-essential
    vertices stay in the vertex range but are isolated. Clique enumeration is
    exponential in the worst case, which is fine at n <= 24.
    """
    if any(s < 3 for s in G.edge_sizes()):
        raise EdgeTooSmall("essential hypergraph needs every edge of size >= 3")
    vhat = essential_vertices(G)
    adj = sharing_adjacency(G)
    cliques = maximal_cliques(adj, vhat)
    return Hypergraph(G.n, tuple(mask_from_vertices(G.n, c) for c in cliques))


def complete_sizes(G: Hypergraph) -> list[int] | None:
    """Sizes m_1 < ... < m_r if the edges are exactly all subsets of those sizes."""
    counts = Counter(G.edge_sizes())
    for size, c in counts.items():
        if c != comb(G.n, size):
            return None
    return sorted(counts)


def make_complete(n: int, sizes: Iterable[int]) -> Hypergraph:
    sizes = list(sizes)
    if len(set(sizes)) != len(sizes):
        raise SizeOutOfRange("sizes must be distinct")
    words = []
    for m in sizes:
        if not 1 <= m <= n:
            raise SizeOutOfRange(f"size {m} not in 1..{n}")
        for vs in combinations(range(1, n + 1), m):
            words.append(mask_from_vertices(n, vs))
    return Hypergraph(n, tuple(words))


def delete(G: Hypergraph, a: int) -> Hypergraph:
    """Drop vertex ``a`` and every edge containing it; relabel to 1..n-1."""
    _check_vertex(G, a)
    if G.n < 2:
        raise VertexOutOfRange("cannot remove the only vertex")
    bit = vertex_bit(G.n, a)
    return Hypergraph(G.n - 1, tuple(remove_vertex_bit(G.n, e, a) for e in G.edges if not e & bit))


def shrink_with_phase(G: Hypergraph, a: int) -> tuple[Hypergraph, int]:
    """Remove ``a`` from every edge, combining edges mod 2.

    Returns the shrunk hypergraph and a global sign: -1 exactly when ``{a}``
    was an edge, whose shrunk image would be the excluded empty edge.
    """
    _check_vertex(G, a)
    if G.n < 2:
        raise VertexOutOfRange("cannot remove the only vertex")
    bit = vertex_bit(G.n, a)
    words = []
    phase = 1
    for e in G.edges:
        if e == bit:
            phase = -phase
            continue
        words.append(remove_vertex_bit(G.n, e & ~bit, a))
    return Hypergraph.from_edge_words(G.n - 1, words), phase


def shrink(G: Hypergraph, a: int) -> Hypergraph:
    return shrink_with_phase(G, a)[0]
