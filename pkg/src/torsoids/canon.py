"""Canonical forms of small graphs and digraphs.

Colour refinement plus individualization.  The search explores every
branch of the individualization tree except those ruled out by twin
vertices (a transposition of twins is an automorphism), and keeps the
lexicographically least edge encoding over all leaves.
"""

from __future__ import annotations

from .errors import BoundExceeded
from .graph import Digraph, Graph, bits
from .limits import LIMITS


def _refine(colors, out_adj, in_adj):
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            so = tuple(sorted(colors[u] for u in bits(out_adj[v])))
            si = tuple(sorted(colors[u] for u in bits(in_adj[v]))) if in_adj is not out_adj else ()
            sigs.append((colors[v], so, si))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _twins(u, w, out_adj, in_adj):
    mu, mw = ~(1 << w), ~(1 << u)
    if out_adj[u] & mu != out_adj[w] & mw:
        return False
    return in_adj[u] & mu == in_adj[w] & mw


def _search(n, pairs, out_adj, in_adj, directed):
    best = None

    def encode(colors):
        if directed:
            return tuple(sorted((colors[u], colors[v]) for u, v in pairs))
        return tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in pairs))

    def rec(colors):
        nonlocal best
        if len(set(colors)) == n:
            code = encode(colors)
            if best is None or code < best:
                best = code
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        reps = []
        for v in cell:
            if any(_twins(r, v, out_adj, in_adj) for r in reps):
                continue
            reps.append(v)
            child = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            rec(_refine(child, out_adj, in_adj))

    rec(_refine([0] * n, out_adj, in_adj))
    return best if best is not None else ()


def canonical_form(g: Graph | Digraph, bound: int | None = None) -> tuple:
    """Isomorphism-invariant encoding ``(kind, n, edges)``.

    Two graphs (or two digraphs) are isomorphic iff their encodings are
    equal.  Vertex names are ignored.
    """
    bound = LIMITS.max_vertices if bound is None else bound
    if g.n > bound:
        raise BoundExceeded(f"canonical form limited to {bound} vertices (got {g.n})")
    if isinstance(g, Digraph):
        return ("d", g.n, _search(g.n, g.arcs, g.out_adj, g.in_adj, True))
    return ("g", g.n, _search(g.n, g.edges, g.adj, g.adj, False))


def isomorphic(a: Graph | Digraph, b: Graph | Digraph) -> bool:
    if type(a) is not type(b) or a.n != b.n:
        return False
    if len(getattr(a, "edges", getattr(a, "arcs", ()))) != len(getattr(b, "edges", getattr(b, "arcs", ()))):
        return False
    return canonical_form(a) == canonical_form(b)
