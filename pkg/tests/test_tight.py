import itertools

import pytest

import oracles
from torsoids.corpus import CORPUS, complete, complete_bipartite, cycle, k4_ladder
from torsoids.errors import PreconditionError
from torsoids.graph import Graph, induces_connected
from torsoids.matching import make_matching, perfect_matchings
from torsoids.tight import (
    Parity, are_nested, enumerate_tight_cuts, extend_to_maximal_nested_family, is_maximal_family,
    is_tight, make_family, maximal_nested_families, parity_of, tight_cut_record, tightness,
)

GRAPHS = [k for k, v in CORPUS.items() if isinstance(v.value, Graph)]


def _oracle_tight(g):
    ms = oracles.perfect_matchings(g.n, g.edges)
    return {oracles.mask(X) for X in oracles.tight_sets(g.n, ms)}


def test_is_tight_examples():
    c6 = cycle(6)
    assert is_tight(c6, 0b000111)
    assert not is_tight(c6, 0b000011)
    assert not is_tight(c6, 0b010101)


def test_witness_for_non_tight():
    idx = tightness(cycle(6))
    m = idx.witness(0b010101)
    assert m is not None and m.crossing(0b010101) == 3
    assert idx.witness(0b000111) is None


@pytest.mark.parametrize("name", GRAPHS)
def test_tight_sets_match_oracle(name):
    g = CORPUS[name].value
    idx = tightness(g)
    want = _oracle_tight(g)
    assert set(idx.tight_sets) == want
    for X in range(1, g.full):
        assert idx.is_tight(X) == (X in want)


def test_parity_examples():
    c6 = cycle(6)
    for M in perfect_matchings(c6):
        assert parity_of(c6, M, 0b1) is Parity.ODD
        assert parity_of(c6, M, 0b111) is Parity.ODD
    M = make_matching([(0, 1), (2, 3), (4, 5)])
    assert parity_of(c6, M, 0b11) is Parity.EVEN


@pytest.mark.parametrize("g,total,nontrivial", [
    (cycle(6), 9, 3), (complete(4), 4, 0), (complete_bipartite(3, 3), 6, 0),
    (cycle(10), 25, 15), (k4_ladder(), 8, 2),
])
def test_tight_cut_counts(g, total, nontrivial):
    assert len(enumerate_tight_cuts(g)) == total
    assert len(enumerate_tight_cuts(g, nontrivial_only=True)) == nontrivial


@pytest.mark.parametrize("name", GRAPHS)
def test_shores_connected(name):
    g = CORPUS[name].value
    for c in enumerate_tight_cuts(g):
        assert all(induces_connected(g, s) for s in c.shores)


def test_cycle_tight_sets_are_odd_intervals():
    for n in (4, 6, 8, 10):
        g = cycle(n)
        ivs = set()
        for start in range(n):
            for k in range(1, n, 2):
                ivs.add(sum(1 << ((start + i) % n) for i in range(k)))
        assert set(tightness(g).tight_sets) == ivs


def test_nested_examples():
    c6 = cycle(6)
    a = tight_cut_record(c6, 0b000111)
    assert are_nested(a, tight_cut_record(c6, 0b010000))
    assert not are_nested(a, tight_cut_record(c6, 0b001110))
    assert are_nested(a, a)


def test_extend_examples():
    c6 = cycle(6)
    fam = extend_to_maximal_nested_family(c6, [0b000111])
    assert len(fam.cuts) == 7 and len(fam.nontrivial()) == 1
    assert len(extend_to_maximal_nested_family(complete(4)).cuts) == 4
    lad = k4_ladder()
    fam = extend_to_maximal_nested_family(lad)
    nt = enumerate_tight_cuts(lad, True)
    assert [c.shore for c in fam.nontrivial()] == [nt[0].shore]
    assert len(fam.cuts) == 7 and fam.maximal


def test_extend_rejects_crossing_seed():
    with pytest.raises(PreconditionError):
        extend_to_maximal_nested_family(cycle(6), [0b000111, 0b001110])


@pytest.mark.parametrize("name", ["C6", "C8", "C10", "K4_LADDER", "K4_DOUBLE_LADDER", "K33_LADDER"])
def test_maximal_families_vs_oracle(name):
    g = CORPUS[name].value
    cuts = enumerate_tight_cuts(g)
    nt = [c for c in cuts if not c.trivial]
    # literal: maximal cliques of the nested relation among nontrivial cuts
    want = set()
    for r in range(len(nt) + 1):
        for sub in itertools.combinations(nt, r):
            if all(are_nested(a, b) for a, b in itertools.combinations(sub, 2)):
                if all(c in sub or not all(are_nested(c, d) for d in sub) for c in nt):
                    want.add(frozenset(c.shore for c in sub))
    fams = maximal_nested_families(g)
    got = {frozenset(c.shore for c in f.nontrivial()) for f in fams}
    assert got == want and len(fams) == len(want)
    for f in fams:
        assert is_maximal_family(g, f.cuts)
    for seed in (None, 1, 2, 3, 4):
        f = extend_to_maximal_nested_family(g, order_seed=seed)
        assert frozenset(c.shore for c in f.nontrivial()) in want


def test_family_counts():
    assert len(maximal_nested_families(cycle(6))) == 3
    assert len(maximal_nested_families(cycle(10))) == 55
    assert len(maximal_nested_families(k4_ladder())) == 2


def test_family_tight_sets_has_both_shores():
    fam = extend_to_maximal_nested_family(cycle(6), [0b000111])
    assert 0b000111 in fam.tight_sets and 0b111000 in fam.tight_sets
    assert len(fam.tight_sets) == 14
    assert fam.contains(0b111000)
    with pytest.raises(PreconditionError):
        make_family(cycle(6), [0b000011])
