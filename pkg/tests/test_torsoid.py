import pytest

from torsoids.corpus import CORPUS, complete, cycle, hex_parts, k4_ladder
from torsoids.errors import PreconditionError
from torsoids.partitions import validate_partition
from torsoids.tight import tight_cut_record, tightness
from torsoids.torsoid import (
    choice_functions, classify_residence, edge_residences, enumerate_torsoids, find_torsoid_correspondence,
    induced_correspondence, induced_torsoid, interval_residences, make_torsoid, partitions_from_choice, theta,
    validate_torsoid, vertex_residences,
)

L = k4_ladder()
u, v, w, x, p1, p2 = (L.vset([s]) for s in ("u", "v", "w", "x", "p1", "p2"))
LADDER_T = make_torsoid(L, [u, v, w, x], {(u, v): p1 | p2, (u, w): 0, (u, x): 0, (v, w): 0, (v, x): 0, (w, x): 0})
C6 = cycle(6)
C6_T = make_torsoid(C6, [1 << i for i in range(6)], {(1 << i, 1 << ((i + 1) % 6)): 0 for i in range(6)})


def test_validate_examples():
    assert validate_torsoid(LADDER_T).ok
    assert validate_torsoid(C6_T).ok


def test_validate_rejects_absorbed_handle():
    bad = make_torsoid(L, [u | p1 | p2, v, w, x],
                       {(u | p1 | p2, v): 0, (u | p1 | p2, w): 0, (u | p1 | p2, x): 0, (v, w): 0, (v, x): 0, (w, x): 0})
    rep = validate_torsoid(bad)
    assert not rep.ok
    assert "T5" in rep.axioms  # {p1,p2} is passable between the two ends, so eps(uv)=∅ is not largest


def test_validate_reports_cover_and_tightness():
    rep = validate_torsoid(make_torsoid(L, [u, v, w, x], {(u, v): p1, (u, w): 0, (u, x): 0, (v, w): 0, (v, x): 0, (w, x): 0}))
    assert "T4" in rep.axioms
    c6 = cycle(6)
    rep = validate_torsoid(make_torsoid(c6, [0b11, 0b1100, 0b110000], {(0b11, 0b1100): 0, (0b1100, 0b110000): 0, (0b11, 0b110000): 0}))
    assert {"T1", "T2"} <= rep.axioms


def test_induced_examples():
    single = validate_partition(C6, [1 << i for i in range(6)])
    assert induced_torsoid(single) == C6_T
    P = validate_partition(L, [u | p1 | p2, v, w, x])
    T, sigma = induced_correspondence(P)
    assert T == LADDER_T
    assert [P.classes[k] for k in sigma] == [u | p1 | p2, v, w, x]
    g, parts = hex_parts()
    with pytest.raises(PreconditionError):
        induced_torsoid(validate_partition(g, parts["middle"]))


def test_choice_examples():
    e = LADDER_T.edges.index((0, 1))
    k = [a for a, _ in LADDER_T.edges]
    assert partitions_from_choice(LADDER_T, k).classes == (u | p1 | p2, v, w, x)
    k[e] = 1
    assert partitions_from_choice(LADDER_T, k).classes == (u, v | p1 | p2, w, x)
    for kappa in choice_functions(C6_T):
        assert partitions_from_choice(C6_T, kappa).classes == C6_T.vertices
    assert len(list(choice_functions(LADDER_T, distinct_only=True))) == 2
    with pytest.raises(PreconditionError):
        partitions_from_choice(LADDER_T, [0] * 6)


def test_find_correspondence_examples():
    c = find_torsoid_correspondence(LADDER_T, validate_partition(L, [u | p1 | p2, v, w, x]))
    assert c is not None and c.strong
    c = find_torsoid_correspondence(C6_T, validate_partition(C6, [1 << i for i in range(6)]))
    assert c.sigma == tuple(range(6)) and c.strong
    # splitting the handle between u and v gives even classes: no partition at all
    with pytest.raises(PreconditionError, match="even"):
        validate_partition(L, [u | p1, v | p2, w, x])
    assert find_torsoid_correspondence(LADDER_T, validate_partition(L, [u, p1, p2, v | w | x])) is None
    assert find_torsoid_correspondence(C6_T, validate_partition(L, [u | p1 | p2, v, w, x])) is None


def test_theta_examples():
    assert theta(C6_T, tight_cut_record(C6, 0b1)) == 1
    assert theta(C6_T, 0b000111) == 3
    assert theta(LADDER_T, p1) == 0
    with pytest.raises(PreconditionError):
        theta(C6_T, 0b11)


def test_residence_examples():
    r = classify_residence(LADDER_T, p1)
    assert r.kind == "edge" and r.target == (0, 1) and r.witness == p1
    r = classify_residence(LADDER_T, u | p1 | p2)
    assert r.kind == "vertex" and r.target == 0 and r.proper and r.theta == 1
    r = classify_residence(C6_T, 0b000111)
    assert r.kind == "interval" and r.target == (0, 1, 2) and r.theta == 3


def test_residence_literal_predicates_exclusive():
    for name in ("C6", "C8", "C10", "K4_LADDER", "K4_DOUBLE_LADDER", "K33_LADDER"):
        g = CORPUS[name].value
        for T in enumerate_torsoids(g):
            for X in tightness(g).tight_sets:
                kinds = {k for k, hits in (("edge", edge_residences(T, X)), ("vertex", vertex_residences(T, X)),
                                           ("interval", interval_residences(T, X))) if hits}
                r = classify_residence(T, X)
                assert kinds == {r.kind}
                th = theta(T, X)
                assert th == 0 or th % 2 == 1
                assert th <= len(T.vertices) // 2
                if not T.cyclic:
                    assert th <= 1


def test_enumerate_examples():
    (t,) = enumerate_torsoids(C6)
    assert t == C6_T and t.cyclic
    (t,) = enumerate_torsoids(complete(4))
    assert not t.cyclic and not any(t.eps)
    ts = enumerate_torsoids(L)
    assert LADDER_T in ts
    # the handle also yields the 4-cycle u-p1-p2-v with eps(uv) = {w,x}
    assert len(ts) == 2
    (cyc,) = [t for t in ts if t.cyclic]
    assert cyc.vertices == (u, v, p1, p2) and cyc.eps_of(0, 1) == w | x
    for t in ts:
        assert validate_torsoid(t).ok


@pytest.mark.parametrize("name", ["C8", "C10", "K4", "K33", "PETERSEN", "K4_DOUBLE_LADDER", "PRISM", "K33_LADDER"])
def test_enumerated_torsoids_valid_and_seed_independent(name):
    g = CORPUS[name].value
    ts = enumerate_torsoids(g)
    assert ts
    for T in ts:
        assert validate_torsoid(T).ok
    for seed in (1, 2, 3):
        assert enumerate_torsoids(g, order_seed=seed) == ts


def test_intervals():
    assert len(C6_T.intervals(3, 3)) == 6
    assert C6_T.cycle_order == (0, 1, 2, 3, 4, 5)
    assert LADDER_T.intervals() == []
