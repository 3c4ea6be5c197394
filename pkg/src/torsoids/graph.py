"""Immutable graphs and digraphs over dense integer ids.

Vertex sets are plain Python ints used as bitmasks: bit ``i`` set means
vertex ``i`` is a member.  Every routine that returns a collection of
vertex sets returns it sorted by :func:`set_key`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import PreconditionError

Edge = tuple[int, int]


# ---------------------------------------------------------------- bitsets

def bits(mask: int) -> list[int]:
    """Members of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def set_key(mask: int) -> tuple[int, ...]:
    """Sort key for vertex sets: the ascending member tuple."""
    return tuple(bits(mask))


def sorted_sets(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=set_key)


def subsets(mask: int):
    """All subsets of ``mask`` (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# ----------------------------------------------------------------- graphs

def _canon_edges(n: int, pairs: Iterable[Sequence[int]], directed: bool) -> tuple[Edge, ...]:
    seen = set()
    for p in pairs:
        u, v = int(p[0]), int(p[1])
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"vertex id out of range in {u}-{v} (n={n})")
        if u == v:
            raise PreconditionError(f"loop at vertex {u}")
        seen.add((u, v) if directed or u < v else (v, u))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.names is not None and len(self.names) != self.n:
            raise PreconditionError("name table length differs from n")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def labels(self, mask: int) -> list[str]:
        return [self.label(v) for v in bits(mask)]

    def vertex(self, token) -> int:
        """Resolve a vertex name (or integer id) to its id."""
        if self.names and token in self.names:
            return self.names.index(token)
        try:
            v = int(token)
        except (TypeError, ValueError):
            raise PreconditionError(f"unknown vertex {token!r}") from None
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex id {v} out of range")
        return v

    def vset(self, tokens: Iterable) -> int:
        return mask_of(self.vertex(t) for t in tokens)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """The graph with vertex ``v`` renamed ``perm[v]``."""
        names = None
        if self.names:
            inv = [0] * self.n
            for v, p in enumerate(perm):
                inv[p] = v
            names = tuple(self.names[inv[i]] for i in range(self.n))
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], names)


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[Edge, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.names is not None and len(self.names) != self.n:
            raise PreconditionError("name table length differs from n")

    @cached_property
    def out_adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.arcs:
            a[u] |= 1 << v
        return tuple(a)

    @cached_property
    def in_adj(self) -> tuple[int, ...]:
        a = [0] * self.n
        for u, v in self.arcs:
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def labels(self, mask: int) -> list[str]:
        return [self.label(v) for v in bits(mask)]

    def vertex(self, token) -> int:
        if self.names and token in self.names:
            return self.names.index(token)
        try:
            v = int(token)
        except (TypeError, ValueError):
            raise PreconditionError(f"unknown vertex {token!r}") from None
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex id {v} out of range")
        return v

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        names = None
        if self.names:
            inv = [0] * self.n
            for v, p in enumerate(perm):
                inv[p] = v
            names = tuple(self.names[inv[i]] for i in range(self.n))
        return build_digraph(self.n, [(perm[u], perm[v]) for u, v in self.arcs], names)


def build_graph(n: int, edge_list: Iterable[Sequence[int]], names: Sequence[str] | None = None) -> Graph:
    """Canonical simple graph; duplicate edges are dropped."""
    if n < 0:
        raise PreconditionError("negative vertex count")
    return Graph(n, _canon_edges(n, edge_list, False), tuple(names) if names else None)


def build_digraph(n: int, arc_list: Iterable[Sequence[int]], names: Sequence[str] | None = None) -> Digraph:
    if n < 0:
        raise PreconditionError("negative vertex count")
    return Digraph(n, _canon_edges(n, arc_list, True), tuple(names) if names else None)


# ------------------------------------------------------------------- cuts

@dataclass(frozen=True)
class Cut:
    """The edge cut ∂(shore); ``shore`` is normalized (see :func:`normal_shore`)."""

    n: int
    shore: int
    edges: tuple[Edge, ...]

    @property
    def other(self) -> int:
        return ((1 << self.n) - 1) & ~self.shore

    @property
    def shores(self) -> tuple[int, int]:
        return self.shore, self.other


def normal_shore(n: int, X: int) -> int:
    """The lexicographically smaller of X and its complement."""
    Y = ((1 << n) - 1) & ~X
    return min(X, Y, key=set_key)


def boundary(G: Graph, X: int) -> tuple[Edge, ...]:
    return tuple(e for e, m in zip(G.edges, G.edge_masks) if (X & m).bit_count() == 1)


def cut_of(G: Graph, X: int) -> Cut:
    if X & ~G.full:
        raise PreconditionError("vertex set not contained in V(G)")
    return Cut(G.n, normal_shore(G.n, X), boundary(G, X))


# ------------------------------------------------------- connectivity etc.

def reach(adj: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``within``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def induces_connected(G: Graph, X: int) -> bool:
    if X == 0:
        return True
    return reach(G.adj, lowest(X), X) == X


def components(G: Graph) -> list[int]:
    left = G.full
    out = []
    while left:
        c = reach(G.adj, lowest(left), left)
        out.append(c)
        left &= ~c
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def bipartition_of(G: Graph) -> tuple[int, int] | None:
    """Colour classes (V0, V1) with each component's lowest vertex in V0."""
    colour = [-1] * G.n
    for comp in components(G):
        s = lowest(comp)
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(G.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return None
    v0 = mask_of(v for v in range(G.n) if colour[v] == 0)
    return v0, G.full & ~v0


def induced_subgraph(G: Graph, X: int) -> tuple[Graph, list[int]]:
    """G[X] with vertices renumbered in ascending order; also the old ids."""
    old = bits(X)
    new = {v: i for i, v in enumerate(old)}
    es = [(new[u], new[v]) for u, v in G.edges if u in new and v in new]
    names = [G.label(v) for v in old] if G.names else None
    return build_graph(len(old), es, names), old
