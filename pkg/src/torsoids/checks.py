"""Exhaustive property suites.

Every suite takes a graph and returns a list of human-readable violation
strings (empty means the property held on every qualifying tuple).  Suites
for families of sets bound the family size at three.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable

from .errors import InvariantError
from .graph import Graph, bits, induces_connected, set_key
from .matching import perfect_matchings
from .partitions import (
    TightSetPartition, find_correspondence, is_cycle_graph, odd_class_indices, tight_partitions,
)
from .passable import is_passable_between, largest_passable_between, passable_sets_between
from .tight import Parity, extend_to_maximal_nested_family, parity_of, tightness
from .torso import maximal_resident, residents_family, torsos, kappa_of_torso, verify_preimage_counts
from .torsoid import (
    classify_residence, edge_residences, find_torsoid_correspondence, induced_correspondence,
    interval_residences, odd_vertices, partitions_from_choice, choice_functions, validate_torsoid,
    vertex_residences,
)


def _t(G):
    return tightness(G)


def _fmt(G, *sets):
    return " ".join("{" + ",".join(G.labels(s)) + "}" for s in sets)


def has_edge_between(G: Graph, A: int, B: int) -> bool:
    return any((m & A) and (m & B) for m in G.edge_masks)


# ------------------------------------------------------------ tight cuts

def check_tight_oracle(G: Graph) -> list[str]:
    """Memoized is_tight, the vectorized sweep and a literal scan agree."""
    idx = _t(G)
    ms = perfect_matchings(G)
    out = []
    sweep = idx.tight_set_lookup
    for X in range(1, G.full):
        lit = all(sum(1 for u, v in m.edges if (X >> u & 1) != (X >> v & 1)) == 1 for m in ms)
        if lit != idx.is_tight(X) or lit != (X in sweep):
            out.append(f"tightness mismatch on {_fmt(G, X)}")
    return out


def check_shores_connected(G: Graph) -> list[str]:
    return [f"disconnected shore of {_fmt(G, X)}" for X in _t(G).tight_sets
            if not (induces_connected(G, X) and induces_connected(G, G.full & ~X))]


def check_parity_laws(G: Graph, samples: int = 300, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    ms = perfect_matchings(G)
    out = []
    for _ in range(samples):
        X = rng.randrange(1 << G.n)
        Y = rng.randrange(1 << G.n) & ~X
        ps = {parity_of(G, m, X) for m in ms}
        if len(ps) != 1 or ps.pop().value != X.bit_count() % 2:
            out.append(f"parity of {_fmt(G, X)} depends on the matching")
        m = ms[0]
        want = Parity((parity_of(G, m, X).value + parity_of(G, m, Y).value) % 2)
        if parity_of(G, m, X | Y) != want:
            out.append(f"parity of disjoint union {_fmt(G, X, Y)}")
    return out


def check_basictight(G: Graph) -> list[str]:
    idx = _t(G)
    T = idx.tight_sets
    out = []
    for X, Y in itertools.permutations(T, 2):
        I = X & Y
        if not I.bit_count() & 1:
            continue
        if not idx.is_tight(I) or not idx.is_tight(X | Y):
            out.append(f"basictight: meet/join of {_fmt(G, X, Y)} not tight")
        if has_edge_between(G, X & ~Y, Y & ~X):
            out.append(f"basictight: edge between differences of {_fmt(G, X, Y)}")
        if X & ~Y and not has_edge_between(G, I, X & ~Y):
            out.append(f"basictight: no edge from meet to X∖X' for {_fmt(G, X, Y)}")
    return out


def check_basicnoedge(G: Graph) -> list[str]:
    T = _t(G).tight_sets
    out = []
    for X in T:
        evens = [Y for Y in T if Y != X and X & Y and not (X & Y).bit_count() & 1]
        for A, B in itertools.combinations(evens, 2):
            a, b = X & A, X & B
            if a & b == 0 and has_edge_between(G, a, b):
                out.append(f"basicnoedge: {_fmt(G, X, A, B)}")
    return out


def check_nothree(G: Graph) -> list[str]:
    T = _t(G).tight_sets
    out = []
    for X, Y, Z in itertools.combinations(T, 3):
        a = X & Y
        if a == X & Z == Y & Z and a and not a.bit_count() & 1:
            out.append(f"nothree: {_fmt(G, X, Y, Z)}")
    return out


def check_infunion(G: Graph) -> list[str]:
    idx = _t(G)
    T = idx.tight_sets
    out = []
    for fam in itertools.combinations(T, 3):
        if all(idx.is_tight(a | b) for a, b in itertools.combinations(fam, 2)):
            U = fam[0] | fam[1] | fam[2]
            if U != G.full and not idx.is_tight(U):
                out.append(f"infunion: {_fmt(G, *fam)}")
        if all((a & b).bit_count() & 1 for a, b in itertools.combinations(fam, 2)):
            I = fam[0] & fam[1] & fam[2]
            if I and not idx.is_tight(I):
                out.append(f"infintersection: {_fmt(G, *fam)}")
    return out


def check_deletemany(G: Graph, max_family: int = 3) -> list[str]:
    idx = _t(G)
    T = idx.tight_sets
    out = []
    for X in T:
        cands = {}
        for Y in T:
            m = X & Y
            if Y != X and m and not m.bit_count() & 1:
                cands.setdefault(m, Y)  # only X ∩ Y matters
        cl = sorted(cands.items())
        for k in range(1, max_family + 1):
            for fam in itertools.combinations(cl, k):
                ms = [m for m, _ in fam]
                if any(a & b for a, b in itertools.combinations(ms, 2)):
                    continue
                rm = 0
                for _, Y in fam:
                    rm |= Y
                if not idx.is_tight(X & ~rm):
                    out.append(f"deletemany: {_fmt(G, X, *[Y for _, Y in fam])}")
    return out


def check_cycle_tight_sets(G: Graph) -> list[str]:
    if not is_cycle_graph(G):
        return []
    order = [0]
    while len(order) < G.n:
        nxt = [w for w in bits(G.adj[order[-1]]) if w not in order]
        order.append(nxt[0])
    n = G.n
    intervals = {sum(1 << order[(s + k) % n] for k in range(L)) for s in range(n) for L in range(1, n, 2)}
    got = set(_t(G).tight_sets)
    return [] if got == intervals else ["tight sets of the cycle are not its odd intervals"]


def check_charcycle(G: Graph) -> list[str]:
    """Any cyclic order whose consecutive triples are tight forces a cycle."""
    if G.n < 6:
        return []
    idx = _t(G)
    out = []
    n = G.n

    def rec(order, used):
        if out:
            return
        if len(order) >= 3 and not idx.is_tight((1 << order[-1]) | (1 << order[-2]) | (1 << order[-3])):
            return
        if len(order) == n:
            ok = all(idx.is_tight(sum(1 << order[(i + k) % n] for k in range(3))) for i in range(n))
            if ok and not (is_cycle_graph(G) and all(G.has_edge(order[i], order[(i + 1) % n]) for i in range(n))):
                out.append(f"charcycle: order {order} has tight triples but G is not that cycle")
            return
        for v in range(n):
            if not used >> v & 1:
                rec(order + [v], used | 1 << v)

    rec([0], 1)
    return out


# ---------------------------------------------------------- passability

def _pairs(G: Graph):
    T = _t(G).tight_sets
    for P in T:
        for Q in T:
            if P & Q == 0 and P | Q != G.full and set_key(P) < set_key(Q):
                yield P, Q


def check_passable(G: Graph) -> list[str]:
    """notodd, passcup, maxpass, evenness; fast path vs scan."""
    out = []
    for P, Q in _pairs(G):
        ss = passable_sets_between(G, P, Q)
        U = 0
        for S in ss:
            U |= S
            if S.bit_count() & 1:
                out.append(f"passable set {_fmt(G, S)} is odd")
        for S, S2 in itertools.combinations(ss, 2):
            if (P & S & S2).bit_count() & 1 or (Q & S & S2).bit_count() & 1:
                out.append(f"notodd: {_fmt(G, P, Q, S, S2)}")
            if not is_passable_between(G, S | S2, P, Q):
                out.append(f"passcup: {_fmt(G, P, Q, S, S2)}")
        if not is_passable_between(G, U, P, Q):
            out.append(f"maxpass: union for {_fmt(G, P, Q)} not passable")
        if largest_passable_between(G, P, Q) != U:
            out.append(f"maxpass: fast path disagrees with scan for {_fmt(G, P, Q)}")
    return out


# ----------------------------------------------------------- partitions

def all_partitions(G: Graph, min_classes: int = 2, limit: int = 5000) -> list[TightSetPartition]:
    ps = tight_partitions(G, min_classes)
    return ps[:limit]


def check_collapse_lemmas(G: Graph, limit: int = 5000) -> list[str]:
    """tight_sets_in_collapse, uncrosscut, cutswell, cutscyclicpartition."""
    idx = _t(G)
    out = []
    for P in all_partitions(G, 2, limit):
        H = P.collapse.graph
        k = len(P.classes)
        hidx = tightness(H)
        for sel in range(1, (1 << k) - 1):
            U = 0
            for i in bits(sel):
                U |= P.classes[i]
            if hidx.is_tight(sel) != idx.is_tight(U):
                out.append(f"tight_sets_in_collapse: {_fmt(G, *P.classes)} / {sel}")
        bob = all(1 >= min(t.bit_count(), k - t.bit_count()) for t in hidx.tight_sets)
        cyc = is_cycle_graph(H)
        order = None
        if cyc:
            order = [0]
            while len(order) < k:
                order.append([w for w in bits(H.adj[order[-1]]) if w not in order][0])
        for X in idx.tight_sets:
            odd = odd_class_indices(P, X)
            U = 0
            for i in odd:
                U |= P.classes[i]
            if not odd or len(odd) == k or not idx.is_tight(U):
                out.append(f"uncrosscut: {_fmt(G, *P.classes)} X={_fmt(G, X)}")
                continue
            if bob and k >= 4 and min(len(odd), k - len(odd)) != 1:
                out.append(f"cutswell: {_fmt(G, *P.classes)} X={_fmt(G, X)}")
            if cyc:
                out += _cyclic_partition_check(G, P, order, X, set(odd))
    return out


def _cyclic_partition_check(G, P, order, X, odd) -> list[str]:
    n = len(order)
    m = len(odd)
    # rotate/reflect so the odd classes are positions 0..m-1
    for refl in (order, order[::-1]):
        for s in range(n):
            seq = [refl[(s + i) % n] for i in range(n)]
            if set(seq[:m]) == odd:
                break
        else:
            continue
        break
    else:
        return [f"cutscyclicpartition: odd classes of {_fmt(G, X)} are not an interval"]
    cls = [P.classes[i] for i in seq]
    inner = 0
    for i in range(1, m - 1):
        inner |= cls[i]
    outer = 0
    for i in range(m + 1, n - 1):
        outer |= cls[i]
    bad = []
    if inner & ~X or X & outer:
        bad.append(f"cutscyclicpartition: sandwich fails for {_fmt(G, X)}")
    if 3 <= m <= n - 3:
        p1, pm, pm1, pn = cls[0], cls[m - 1], cls[m], cls[n - 1]
        for S, A, B in ((p1 & ~X, p1, pn), (pn & X, p1, pn), (pm & ~X, pm, pm1), (pm1 & X, pm, pm1)):
            if not is_passable_between(G, S, A, B):
                bad.append(f"cutscyclicpartition: {_fmt(G, S)} not passable for {_fmt(G, X)}")
    return bad


def check_correspondences(G: Graph, limit: int = 400) -> list[str]:
    """corrisiso, max and passatedge over pairs of partitions with ≥ 4 classes."""
    out = []
    ps = all_partitions(G, 4, limit)
    for P, Q in itertools.product(ps, repeat=2):
        rho = find_correspondence(P, Q)
        if rho is None:
            continue
        HP, HQ = P.collapse.graph, Q.collapse.graph
        for i, j in itertools.combinations(range(len(P.classes)), 2):
            if HP.has_edge(i, j) != HQ.has_edge(rho.map[i], rho.map[j]):
                out.append(f"corrisiso: {_fmt(G, *P.classes)} -> {_fmt(G, *Q.classes)}")
                break
        if P.classification.maximal_cyclic and not Q.classification.maximal_cyclic:
            out.append(f"max: {_fmt(G, *P.classes)} -> {_fmt(G, *Q.classes)}")
        for i, j in itertools.permutations(range(len(P.classes)), 2):
            S = P.classes[i] & Q.classes[rho.map[j]]
            if not is_passable_between(G, S, P.classes[i], P.classes[j]):
                out.append(f"passatedge: {_fmt(G, S)}")
            if S and not HP.has_edge(i, j):
                out.append(f"passatedge: nonempty {_fmt(G, S)} between non-neighbours")
    return out


def inducing_partitions(G: Graph, limit: int = 5000) -> list[TightSetPartition]:
    return [P for P in all_partitions(G, 4, limit) if P.classification.torsoid_inducing]


def check_disjointpass(G: Graph) -> list[str]:
    out = []
    for P in inducing_partitions(G):
        cl = P.classes
        for a, b, c in itertools.permutations(range(len(cl)), 3):
            if b > c:
                continue
            s1 = largest_passable_between(G, cl[a], cl[b])
            s2 = largest_passable_between(G, cl[a], cl[c])
            if s1 & s2:
                out.append(f"disjointpass: {_fmt(G, *cl)}")
    return out


# --------------------------------------------------------------- torsoids

def check_torsoid_theorems(G: Graph) -> list[str]:
    """Induced torsoids are valid; corriseq; uniquecorr; epspass;
    strong correspondences are isomorphisms; passable edges stay local."""
    out = []
    ind = inducing_partitions(G)
    tors = {}
    for P in ind:
        T, sigma = induced_correspondence(P)
        tors.setdefault(T, []).append(P)
        if T not in tors or len(tors[T]) == 1:
            rep = validate_torsoid(T)
            if not rep.ok:
                out.append(f"induced torsoid invalid: {sorted(rep.axioms)}")
        corr = find_torsoid_correspondence(T, P)
        if corr is None or corr.sigma != tuple(sigma):
            out.append(f"σ_P is not the found correspondence for {_fmt(G, *P.classes)}")
    # corriseq over all pairs
    for P, Q in itertools.combinations(ind, 2):
        same = induced_correspondence(P)[0] == induced_correspondence(Q)[0]
        if (find_correspondence(P, Q) is not None) != same:
            out.append(f"corriseq: {_fmt(G, *P.classes)} vs {_fmt(G, *Q.classes)}")
    # uniquecorr and epspass
    for P in ind:
        hits = [T for T in tors if find_torsoid_correspondence(T, P) is not None]
        if hits != [induced_correspondence(P)[0]]:
            out.append(f"uniquecorr: {len(hits)} torsoids correspond to {_fmt(G, *P.classes)}")
    for T in tors:
        H = T.skeleton
        for kappa in choice_functions(T, distinct_only=True):
            P = partitions_from_choice(T, kappa)
            c = find_torsoid_correspondence(T, P)
            C = P.collapse.graph
            for i, j in itertools.combinations(range(H.n), 2):
                if H.has_edge(i, j) != C.has_edge(c.sigma[i], c.sigma[j]):
                    out.append("strongcorrisiso: correspondence is not an isomorphism")
                    break
            for (i, j), e in zip(T.edges, T.eps):
                if largest_passable_between(G, P.classes[c.sigma[i]], P.classes[c.sigma[j]]) != e:
                    out.append(f"epspass: edge {(i, j)}")
        for (i, j), e in zip(T.edges, T.eps):
            allowed = T.vertices[i] | T.vertices[j] | e
            for m in G.edge_masks:
                if m & e and m & ~allowed:
                    out.append(f"edges_of_passable_set: edge leaves {_fmt(G, allowed)}")
    return out


def check_residence(G: Graph, torsoid_list=None) -> list[str]:
    """Every tight set gets exactly one residence kind, with θ constraints."""
    from .torsoid import enumerate_torsoids

    out = []
    tl = torsoid_list if torsoid_list is not None else enumerate_torsoids(G)
    for T in tl:
        nH = len(T.vertices)
        for X in _t(G).tight_sets:
            try:
                r = classify_residence(T, X)
            except InvariantError as e:
                out.append(f"residence: {e} for {_fmt(G, X)}")
                continue
            th = r.theta
            if th != 0 and th % 2 == 0:
                out.append(f"θ even: {th}")
            if 2 * th > nH:
                out.append(f"θ too large: {th}")
            if not T.cyclic and th > 1:
                out.append(f"θ > 1 in a noncyclic torsoid: {_fmt(G, X)}")
            kinds = {k for k, hit in (("edge", edge_residences(T, X)), ("vertex", vertex_residences(T, X)),
                                      ("interval", interval_residences(T, X))) if hit}
            if kinds != {r.kind}:
                out.append(f"residence kinds {sorted(kinds)} vs {r.kind} for {_fmt(G, X)}")
            for e, x in zip(T.edges, T.eps):
                if (X & x).bit_count() & 1 and (r.kind != "edge" or r.target != e):
                    out.append(f"one_edge_odd: {_fmt(G, X)}")
    return out


def check_torsos(G: Graph, seeds=(None, 1, 2, 3, 4)) -> list[str]:
    """Pre-image counts, cleave uniqueness, C^T maximality, maximal residents."""
    from .torso import cleaves
    from .canon import isomorphic
    from .graph import build_graph

    out = []
    all_t = None
    for sd in seeds:
        C = extend_to_maximal_nested_family(G, (), order_seed=sd)
        rep = verify_preimage_counts(G, C)
        if not rep.ok:
            out.append(f"pre-image counts fail for family seed {sd}")
        found = {g.torsoid for g in rep.groups}
        if all_t is None:
            all_t = found
        elif found != all_t:
            out.append(f"family seed {sd} yields a different torsoid set")
        for S in torsos(G, C):
            k = [T for T in found if cleaves(S, T)]
            if len(k) != 1:
                out.append(f"torso cleaves {len(k)} torsoids")
        for T in found:
            try:
                CT = residents_family(C, T)
            except InvariantError as e:
                out.append(str(e))
                continue
            for i in range(len(T.vertices)):
                X = maximal_resident(C, T, i)
                if T.vertices[i] & ~X:
                    out.append("maximal resident at a vertex misses the vertex")
            del CT
        for S in torsos(G, C):
            T = kappa_of_torso(S)
            proj = []
            for X in S.classes:
                proj.append(odd_vertices(T, X))
            owner = {}
            for k, m in enumerate(proj):
                for i in bits(m):
                    owner[i] = k
            if len(owner) != len(T.vertices) or any(bin(m).count("1") == 0 for m in proj):
                out.append("torso vertices do not project to a partition of the skeleton")
                continue
            es = {(min(owner[a], owner[b]), max(owner[a], owner[b])) for a, b in T.edges if owner[a] != owner[b]}
            if not isomorphic(build_graph(len(proj), es), S.graph.graph):
                out.append("isomorphism_torso: projected collapse differs from the torso")
    return out


SUITES: dict[str, Callable[[Graph], list[str]]] = {
    "tight-oracle": check_tight_oracle,
    "shores-connected": check_shores_connected,
    "parity": check_parity_laws,
    "basictight": check_basictight,
    "basicnoedge": check_basicnoedge,
    "nothree": check_nothree,
    "infunion": check_infunion,
    "deletemany": check_deletemany,
    "cycle-tight-sets": check_cycle_tight_sets,
    "charcycle": check_charcycle,
    "passable": check_passable,
    "collapse": check_collapse_lemmas,
    "correspondence": check_correspondences,
    "disjointpass": check_disjointpass,
    "torsoid": check_torsoid_theorems,
    "residence": check_residence,
    "torso": check_torsos,
}


def run_suites(G: Graph, names=None) -> dict[str, list[str]]:
    return {k: SUITES[k](G) for k in (names or SUITES)}
