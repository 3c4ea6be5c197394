import pytest

import oracles
from torsoids.canon import isomorphic
from torsoids.corpus import CORPUS, complete, cycle, k4_ladder
from torsoids.errors import PreconditionError
from torsoids.graph import Graph
from torsoids.tight import extend_to_maximal_nested_family, make_family, maximal_nested_families
from torsoids.torso import (
    cleaves, kappa_of_torso, maximal_resident, maximal_stars, residents_family, torsoids_of_family, torsos,
    verify_preimage_counts,
)
from torsoids.torsoid import enumerate_torsoids

L = k4_ladder()
u, v, w, x, p1, p2 = (L.vset([s]) for s in ("u", "v", "w", "x", "p1", "p2"))
C6 = cycle(6)
GRAPHS = [k for k, val in CORPUS.items() if isinstance(val.value, Graph)]


def ladder_family():
    return extend_to_maximal_nested_family(L, [u | p1 | p2])


def test_star_examples_c6():
    fam = extend_to_maximal_nested_family(C6, [0b000111])
    stars = [s.partition.classes for s in maximal_stars(C6, fam)]
    assert stars == [(0b1, 0b10, 0b100, 0b111000), (0b000111, 0b1000, 0b10000, 0b100000)]


def test_star_examples_k4_and_ladder():
    k4 = complete(4)
    (s,) = maximal_stars(k4, extend_to_maximal_nested_family(k4))
    assert s.partition.classes == (1, 2, 4, 8)
    stars = [s.partition.classes for s in maximal_stars(L, ladder_family())]
    assert (u | p1 | p2, v, w, x) in stars
    # {u},{p1},{p2},{v,w,x} collapses to a 4-cycle, also a brace
    assert sorted(stars) == sorted([(u | p1 | p2, v, w, x), (u, v | w | x, p1, p2)])


def test_stars_need_maximal_family():
    fam = make_family(C6, [1 << i for i in range(6)], maximal=False)
    with pytest.raises(PreconditionError):
        maximal_stars(C6, fam)


def test_cleaves_and_kappa():
    fam = extend_to_maximal_nested_family(C6, [0b000111])
    (T,) = enumerate_torsoids(C6)
    ss = torsos(C6, fam)
    assert all(cleaves(s, T) for s in ss)
    assert {kappa_of_torso(s) for s in ss} == {T}
    lfam = ladder_family()
    for s in torsos(L, lfam):
        assert not cleaves(s, T)
    for fam in maximal_nested_families(L):
        k4_torsos = [s for s in torsos(L, fam) if not s.c4]
        assert len(k4_torsos) == 1
        t = kappa_of_torso(k4_torsos[0])
        assert t.vertices == (u, v, w, x) and t.eps_of(0, 1) == p1 | p2


def test_residents_family_examples():
    lt = [t for t in enumerate_torsoids(L) if not t.cyclic][0]
    f = residents_family(ladder_family(), lt)
    assert len(f.cuts) == 4 and all(c.trivial for c in f.cuts)
    fam = extend_to_maximal_nested_family(C6, [0b000111])
    (T,) = enumerate_torsoids(C6)
    f = residents_family(fam, T)
    assert len(f.cuts) == 7 and [c.shore for c in f.nontrivial()] == [0b000111]
    k4 = complete(4)
    (kt,) = enumerate_torsoids(k4)
    assert len(residents_family(extend_to_maximal_nested_family(k4), kt).cuts) == 4


def test_maximal_resident_examples():
    lt = [t for t in enumerate_torsoids(L) if not t.cyclic][0]
    fam = ladder_family()
    assert maximal_resident(fam, lt, 0) == u | p1 | p2
    assert maximal_resident(fam, lt, 1) == v
    cfam = extend_to_maximal_nested_family(C6, [0b000111])
    (T,) = enumerate_torsoids(C6)
    assert maximal_resident(cfam, T, (0, 1, 2)) == 0b000111


@pytest.mark.parametrize("n", [6, 8, 10])
def test_cycle_preimage_counts(n):
    g = cycle(n)
    for seed in (None, 1, 2, 3, 4):
        fam = extend_to_maximal_nested_family(g, order_seed=seed)
        rep = verify_preimage_counts(g, fam)
        assert rep.ok
        (grp,) = rep.groups
        assert grp.torsoid.cyclic and len(grp.torsos) == n // 2 - 1


@pytest.mark.parametrize("name", GRAPHS)
def test_preimage_counts_all_families(name):
    g = CORPUS[name].value
    fams = maximal_nested_families(g)[:12]
    ref = None
    for fam in fams:
        rep = verify_preimage_counts(g, fam)
        assert rep.ok
        got = torsoids_of_family(g, fam)
        ref = got if ref is None else ref
        assert got == ref


def _oracle_stars(g, fam):
    pool = {oracles.vset(X) for X in fam.tight_sets}
    out = set()
    for p in oracles.tight_partitions(g.n, pool):
        if len(p) < 4:
            continue
        owner = {}
        for i, c in enumerate(p):
            for a in c:
                owner[a] = i
        es = sorted({tuple(sorted((owner[a], owner[b]))) for a, b in g.edges if owner[a] != owner[b]})
        k = len(p)
        ts = oracles.tight_sets(k, oracles.perfect_matchings(k, es))
        if all(len(X) in (1, k - 1) for X in ts):
            out.add(frozenset(p))
    return out


@pytest.mark.parametrize("name", ["C6", "C8", "C10", "K4_LADDER", "K4_DOUBLE_LADDER", "K33_LADDER", "PRISM"])
def test_stars_vs_oracle(name):
    g = CORPUS[name].value
    for fam in maximal_nested_families(g)[:6]:
        got = {frozenset(oracles.vset(c) for c in s.partition.classes) for s in maximal_stars(g, fam)}
        assert got == _oracle_stars(g, fam)


def test_torso_isomorphic_to_brick_baselines():
    for name in ("K4", "K33", "PETERSEN"):
        g = CORPUS[name].value
        (s,) = torsos(g, extend_to_maximal_nested_family(g))
        assert isomorphic(s.graph.graph, g)
