"""Random instances for property tests and acceptance sampling."""

from __future__ import annotations

import random

from .digraphs import is_strongly_connected
from .graph import Digraph, Graph, build_digraph, build_graph
from .matching import perfect_matchings


def random_matching_covered(rng: random.Random, n: int, chord_prob: float = 0.3) -> Graph:
    """Even Hamiltonian cycle on a shuffled vertex order plus random chords.

    Chords lying in no perfect matching are dropped; dropping them leaves the
    set of perfect matchings unchanged, so the result is matching covered.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)} if n > 2 else {(0, 1)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < chord_prob:
                edges.add((u, v))
    g = build_graph(n, edges)
    used = {e for m in perfect_matchings(g) for e in m.edges}
    return build_graph(n, sorted(used))


def random_bipartite_matching_covered(rng: random.Random, k: int, chord_prob: float = 0.3) -> Graph:
    """Same construction restricted to chords joining the two colour classes."""
    n = 2 * k
    order = list(range(n))
    rng.shuffle(order)
    side = {v: i % 2 for i, v in enumerate(order)}
    edges = {tuple(sorted((order[i], order[(i + 1) % n]))) for i in range(n)} if k > 1 else {(0, 1)}
    for u in range(n):
        for v in range(u + 1, n):
            if side[u] != side[v] and (u, v) not in edges and rng.random() < chord_prob:
                edges.add((u, v))
    g = build_graph(n, edges)
    used = {e for m in perfect_matchings(g) for e in m.edges}
    return build_graph(n, sorted(used))


def random_strong_digraph(rng: random.Random, n: int, arc_prob: float | None = None) -> Digraph:
    """Uniformly random arcs, rejected until strongly connected."""
    if n < 2:
        raise ValueError("need at least two vertices")
    while True:
        p = arc_prob if arc_prob is not None else rng.uniform(0.15, 0.6)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
        D = build_digraph(n, arcs)
        if is_strongly_connected(D):
            return D
