import itertools
import random

import pytest

import oracles
from torsoids.canon import canonical_form, isomorphic
from torsoids.corpus import complete, complete_bipartite, cycle, directed_cycle, get, petersen
from torsoids.errors import BoundExceeded, PreconditionError
from torsoids.graph import (
    bipartition_of, boundary, build_digraph, build_graph, components, cut_of, induces_connected,
    is_connected, mask_of, normal_shore, set_key, subsets,
)


def test_build_cycle():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert all(g.degree(v) == 2 for v in range(4))


def test_build_dedup():
    g = build_graph(4, [(0, 1), (0, 1), (1, 0)])
    assert g.edges == ((0, 1),)
    assert len(components(g)) == 3


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_build_rejects(edges):
    with pytest.raises(PreconditionError):
        build_graph(4, edges)


def test_digraph_two_cycle_is_two_arcs():
    d = build_digraph(2, [(0, 1), (1, 0), (0, 1)])
    assert d.arcs == ((0, 1), (1, 0))
    with pytest.raises(PreconditionError):
        build_digraph(2, [(1, 1)])


def test_cut_examples():
    c6 = cycle(6)
    # {v1} and {v1,v2,v3} in 1-based naming are {0} and {0,1,2} here
    assert cut_of(c6, 0b1).edges == ((0, 1), (0, 5))
    assert cut_of(c6, 0b111).edges == ((0, 5), (2, 3))
    assert len(cut_of(complete(4), 0b0110).edges) == 4


def test_cut_shore_normalized():
    c6 = cycle(6)
    a, b = cut_of(c6, 0b000111), cut_of(c6, 0b111000)
    assert a == b
    assert a.shore == 0b000111 and a.other == 0b111000
    assert cut_of(c6, 0).edges == () and cut_of(c6, c6.full).edges == ()


def test_normal_shore_contains_vertex_zero():
    for X in range(1, 63):
        s = normal_shore(6, X)
        assert s & 1
        assert s in (X, 63 & ~X)


def test_bipartition_examples():
    assert bipartition_of(cycle(6)) == (0b010101, 0b101010)
    assert bipartition_of(complete(4)) is None
    assert bipartition_of(complete_bipartite(3, 3)) == (0b000111, 0b111000)


def test_connectivity_examples():
    assert is_connected(cycle(6))
    two = build_graph(4, [(0, 1), (2, 3)])
    assert not is_connected(two) and components(two) == [0b0011, 0b1100]
    assert is_connected(complete(4))


@pytest.mark.parametrize("name", ["C6", "C8", "K4", "K33", "PETERSEN", "K4_LADDER", "PRISM"])
def test_boundary_symmetric_and_matches_scan(name):
    g = get(name).value
    for X in subsets(g.full):
        b = boundary(g, X)
        assert b == boundary(g, g.full & ~X)
        direct = [e for e in g.edges if (e[0] in oracles.vset(X)) != (e[1] in oracles.vset(X))]
        assert list(b) == direct


def test_induces_connected_matches_oracle():
    g = get("K4_LADDER").value
    for X in subsets(g.full):
        if X:
            assert induces_connected(g, X) == oracles.is_connected(g.n, g.edges, oracles.vset(X))


def test_set_key_order():
    assert set_key(0b1010) == (1, 3)
    assert sorted([0b100, 0b011, 0b001], key=set_key) == [0b001, 0b011, 0b100]
    assert mask_of([1, 3]) == 0b1010


# ------------------------------------------------------------- canonical form

def _shuffle(g, rng):
    p = list(range(g.n))
    rng.shuffle(p)
    return g.relabel(p)


def test_canonical_examples():
    rng = random.Random(5)
    c6 = cycle(6)
    assert canonical_form(_shuffle(c6, rng)) == canonical_form(_shuffle(c6, rng))
    assert canonical_form(c6) != canonical_form(complete_bipartite(3, 3))
    p = petersen()
    a, b = _shuffle(p, rng), _shuffle(p, rng)
    assert canonical_form(a) == canonical_form(b)
    assert oracles.isomorphic(a.n, a.edges, b.n, b.edges)


def test_canonical_bound():
    with pytest.raises(BoundExceeded):
        canonical_form(cycle(8), bound=6)


def test_canonical_agrees_with_backtracking_oracle():
    # all graphs on 5 vertices with 5 edges: canonical equality <=> isomorphism
    pairs = list(itertools.combinations(range(5), 2))
    graphs = [build_graph(5, es) for es in itertools.combinations(pairs, 5)]
    rng = random.Random(0)
    sample = rng.sample(graphs, 40)
    for a, b in itertools.combinations(sample, 2):
        assert (canonical_form(a) == canonical_form(b)) == oracles.isomorphic(a.n, a.edges, b.n, b.edges)


def test_canonical_digraphs():
    rng = random.Random(3)
    arcs = [(u, v) for u in range(5) for v in range(5) if u != v]
    ds = [build_digraph(5, rng.sample(arcs, 7)) for _ in range(30)]
    for a, b in itertools.combinations(ds, 2):
        assert (canonical_form(a) == canonical_form(b)) == oracles.isomorphic(5, a.arcs, 5, b.arcs, directed=True)
    d = directed_cycle(4)
    rev = build_digraph(4, [(v, u) for u, v in d.arcs])
    assert isomorphic(d, rev)
    assert not isomorphic(d, cycle(4))
