"""Perfect matchings, the matching covered test, and the translation
between digraphs and bipartite graphs with a fixed perfect matching."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BoundExceeded, PreconditionError
from .graph import Digraph, Edge, Graph, bipartition_of, bits, build_digraph, build_graph, is_connected, lowest
from .limits import LIMITS


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    def mates(self, n: int) -> list[int]:
        m = [-1] * n
        for u, v in self.edges:
            m[u], m[v] = v, u
        return m

    def covered(self) -> int:
        c = 0
        for u, v in self.edges:
            c |= (1 << u) | (1 << v)
        return c

    def is_perfect_in(self, G: Graph) -> bool:
        if any(not G.has_edge(u, v) for u, v in self.edges):
            return False
        return self.covered() == G.full and 2 * len(self.edges) == G.n

    def crossing(self, X: int) -> int:
        """Number of matching edges with exactly one end in X."""
        return sum(1 for m in self.masks if (X & m).bit_count() == 1)


def make_matching(pairs) -> Matching:
    return Matching(tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))


def _enumerate(G: Graph, max_matchings: int) -> tuple[Matching, ...]:
    adj = G.adj
    out: list[Matching] = []
    chosen: list[Edge] = []

    def rec(free: int):
        if not free:
            if len(out) >= max_matchings:
                raise BoundExceeded(f"more than {max_matchings} perfect matchings")
            out.append(Matching(tuple(sorted(chosen))))
            return
        v = lowest(free)
        rest = free & ~(1 << v)
        for w in bits(adj[v] & rest):
            chosen.append((v, w))
            rec(rest & ~(1 << w))
            chosen.pop()

    rec(G.full)
    # backtracking on the lowest free vertex already yields sorted edge lists
    # in lexicographic order, but sort anyway so the contract is explicit
    out.sort(key=lambda m: m.edges)
    return tuple(out)


@lru_cache(maxsize=512)
def _cached(G: Graph, max_vertices: int, max_matchings: int) -> tuple[Matching, ...]:
    if G.n > max_vertices:
        raise BoundExceeded(f"matching enumeration limited to {max_vertices} vertices (got {G.n})")
    if G.n % 2:
        return ()
    return _enumerate(G, max_matchings)


def perfect_matchings(G: Graph) -> tuple[Matching, ...]:
    """All perfect matchings, ordered by their sorted edge lists (cached)."""
    return _cached(G, LIMITS.max_vertices, LIMITS.max_matchings)


def enumerate_perfect_matchings(G: Graph) -> list[Matching]:
    return list(perfect_matchings(G))


def is_matching_covered(G: Graph) -> bool:
    if G.n == 0 or G.n % 2 or not is_connected(G):
        return False
    used = set()
    for m in perfect_matchings(G):
        used.update(m.edges)
    return len(used) == len(G.edges)


# -------------------------------------------------- digraph <-> bipartite

@dataclass(frozen=True)
class MatchingGraphResult:
    graph: Graph
    matching: Matching
    split_map: tuple[tuple[int, int], ...]  # v -> (white v0, black v1)


def matching_graph(D: Digraph) -> MatchingGraphResult:
    """Split v into white ``v.0`` (in-arcs) and black ``v.1`` (out-arcs).

    Black copies get even ids ``2v`` and white copies odd ids ``2v+1`` so
    that :func:`m_direction` recovers the original orientation.
    """
    n = D.n
    edges = [(2 * v, 2 * v + 1) for v in range(n)]
    edges += [(2 * u, 2 * v + 1) for u, v in D.arcs]
    names = []
    for v in range(n):
        names += [f"{D.label(v)}.1", f"{D.label(v)}.0"]
    G = build_graph(2 * n, edges, names)
    M = make_matching((2 * v, 2 * v + 1) for v in range(n))
    return MatchingGraphResult(G, M, tuple((2 * v + 1, 2 * v) for v in range(n)))


def _black_class(G: Graph, M: Matching) -> int:
    """Black colour class: per component, the class holding the lower end
    of the component's lexicographically first matching edge."""
    if bipartition_of(G) is None:
        raise PreconditionError("graph is not bipartite")
    colour = [-1] * G.n
    black = 0
    for u, v in M.edges:
        if colour[u] >= 0:
            continue
        colour[u] = 1
        stack = [u]
        while stack:
            x = stack.pop()
            if colour[x]:
                black |= 1 << x
            for y in bits(G.adj[x]):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
    return black


def contraction_map(G: Graph, M: Matching) -> tuple[tuple[int, int], ...]:
    """For each digraph vertex i (the i-th matching edge): (white, black)."""
    if not M.is_perfect_in(G):
        raise PreconditionError("matching is not a perfect matching of the graph")
    black = _black_class(G, M)
    return tuple((v, u) if black >> u & 1 else (u, v) for u, v in M.edges)


def m_direction(G: Graph, M: Matching) -> Digraph:
    """Contract matching edges; other edges become arcs black -> white."""
    cmap = contraction_map(G, M)
    owner = [0] * G.n
    for i, (w, b) in enumerate(cmap):
        owner[w] = owner[b] = i
    black = 0
    for _, b in cmap:
        black |= 1 << b
    medges = set(M.edges)
    arcs = []
    for u, v in G.edges:
        if (u, v) in medges:
            continue
        if black >> v & 1:
            u, v = v, u
        arcs.append((owner[u], owner[v]))
    names = None
    if G.names:
        names = []
        for w, b in cmap:
            lw, lb = G.label(w), G.label(b)
            if lw.endswith(".0") and lb.endswith(".1") and lw[:-2] == lb[:-2]:
                names.append(lw[:-2])
            else:
                names.append(f"{lb}/{lw}")
        if len(set(names)) != len(names):
            names = None
    return build_digraph(len(cmap), arcs, names)


def symmetric_difference_components(M: Matching, M2: Matching) -> list[tuple[int, ...]]:
    """Cycles of M △ M2, each listed from its lowest vertex along M."""
    a = {}
    b = {}
    for u, v in set(M.edges) - set(M2.edges):
        a[u], a[v] = v, u
    for u, v in set(M2.edges) - set(M.edges):
        b[u], b[v] = v, u
    seen = set()
    out = []
    for s in sorted(a):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        x, use_a = a[s], False
        while x != s:
            cyc.append(x)
            seen.add(x)
            nxt = a.get(x) if use_a else b.get(x)
            if nxt is None:
                raise PreconditionError("matchings do not cover the same vertices")
            x, use_a = nxt, not use_a
        out.append(tuple(cyc))
    return out
