"""Maximal stars and torsos of a nested family, κ, C^T and maximal residents."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvariantError, PreconditionError
from .graph import Graph
from .partitions import CollapseResult, TightSetPartition, is_bob, is_cycle_graph, refine_to_maximal_cyclic, tight_partitions
from .tight import NestedCutFamily, is_maximal_family, make_family
from .torsoid import (
    Torsoid, classify_residence, induced_torsoid, odd_vertices, torsoid_sort_key,
)


@dataclass(frozen=True)
class MaximalStar:
    partition: TightSetPartition
    family: NestedCutFamily = field(compare=False)


@dataclass(frozen=True)
class Torso:
    star: MaximalStar
    graph: CollapseResult
    c4: bool

    @property
    def classes(self) -> tuple[int, ...]:
        return self.star.partition.classes


def _require_maximal(G: Graph, C: NestedCutFamily):
    if C.host != G:
        raise PreconditionError("family belongs to a different graph")
    if not (C.maximal or is_maximal_family(G, C.cuts)):
        raise PreconditionError("family is not a maximal nested family")


def maximal_stars(G: Graph, C: NestedCutFamily) -> list[MaximalStar]:
    """Partitions into ≥ 4 sets of D(C) whose collapse is a brick or brace."""
    _require_maximal(G, C)
    out = []
    for P in tight_partitions(G, 4, pool=C.tight_sets):
        if is_bob(P):
            out.append(MaximalStar(P, C))
    return out


def torsos(G: Graph, C: NestedCutFamily) -> list[Torso]:
    out = []
    for S in maximal_stars(G, C):
        H = S.partition.collapse
        out.append(Torso(S, H, H.graph.n == 4 and is_cycle_graph(H.graph)))
    return out


def cleaves(S: Torso, T: Torsoid) -> bool:
    if S.star.partition.host != T.host:
        return False
    return all(any(v & ~X == 0 for v in T.vertices) for X in S.classes)


def kappa_of_torso(S: Torso) -> Torsoid:
    P = S.star.partition
    if S.c4:
        P = refine_to_maximal_cyclic(P)
    T = induced_torsoid(P)
    if not cleaves(S, T):
        raise InvariantError("torso does not cleave its κ image")
    return T


def torsoids_of_family(G: Graph, C: NestedCutFamily) -> list[Torsoid]:
    found = {kappa_of_torso(S) for S in torsos(G, C)}
    return sorted(found, key=torsoid_sort_key)


def residents_family(C: NestedCutFamily, T: Torsoid) -> NestedCutFamily:
    """C^T: projections of proper vertex residents and interval residents."""
    G = T.host
    _require_maximal(G, C)
    H = T.skeleton
    sets = set()
    for c in C.cuts:
        r = classify_residence(T, c.shore)
        if r.kind == "interval" or (r.kind == "vertex" and r.proper):
            sets.add(odd_vertices(T, r.witness))
    fam = make_family(H, sets)
    if not fam.maximal:
        raise InvariantError("projected family is not maximal in the skeleton")
    return fam


def maximal_resident(C: NestedCutFamily, T: Torsoid, target) -> int:
    """Union of the members Y of D(C) with V(H)_Y equal to the target
    (a skeleton vertex index or an iterable of indices)."""
    sig = 1 << target if isinstance(target, int) else sum(1 << i for i in set(target))
    members = [Y for Y in C.tight_sets if odd_vertices(T, Y) == sig]
    if not members:
        raise PreconditionError("no member of the family has that signature")
    X = 0
    for Y in members:
        X |= Y
    if not C.contains(X) or any(Y & ~X for Y in members):
        raise InvariantError("maximal resident is not in the family")
    return X


@dataclass(frozen=True)
class PreimageGroup:
    torsoid: Torsoid
    torsos: tuple[Torso, ...]
    expected: int
    ok: bool


@dataclass(frozen=True)
class PreimageReport:
    groups: tuple[PreimageGroup, ...]

    @property
    def ok(self) -> bool:
        return all(g.ok for g in self.groups)


def verify_preimage_counts(G: Graph, C: NestedCutFamily) -> PreimageReport:
    groups: dict[Torsoid, list[Torso]] = {}
    for S in torsos(G, C):
        groups.setdefault(kappa_of_torso(S), []).append(S)
    out = []
    for T in sorted(groups, key=torsoid_sort_key):
        ss = groups[T]
        if T.cyclic:
            expected = len(T.vertices) // 2 - 1
            ok = len(ss) == expected and all(s.c4 for s in ss)
        else:
            expected = 1
            ok = len(ss) == 1 and not ss[0].c4
        out.append(PreimageGroup(T, tuple(ss), expected, ok))
    return PreimageReport(tuple(out))
