"""Tight set partitions, their collapses, correspondences and classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvariantError, PreconditionError
from .graph import Graph, bipartition_of, bits, build_graph, is_connected, set_key
from .matching import Matching, is_matching_covered, make_matching
from .tight import tightness


class Kind(enum.Enum):
    BRICK = "brick"
    BRACE = "brace"
    CYCLE = "cycle"
    OTHER = "other"


@dataclass(frozen=True)
class CollapseResult:
    graph: Graph
    class_of: tuple[int, ...]  # collapse vertex -> class (vertex set of host)


@dataclass(frozen=True)
class CollapseClass:
    kind: Kind
    cyclic: bool
    maximal_cyclic: bool
    torsoid_inducing: bool


@dataclass(frozen=True)
class TightSetPartition:
    classes: tuple[int, ...]
    host: Graph

    def __len__(self):
        return len(self.classes)

    def index_of_vertex(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        raise PreconditionError(f"vertex {v} not covered")

    @cached_property
    def collapse(self) -> CollapseResult:
        return collapse(self)

    @cached_property
    def classification(self) -> "CollapseClass":
        return classify_collapse(self)


def validate_partition(G: Graph, classes: Iterable[int]) -> TightSetPartition:
    cl = [int(c) for c in classes]
    seen = 0
    for c in cl:
        if c <= 0:
            raise PreconditionError("empty class")
        if c & seen:
            raise PreconditionError(f"classes overlap at {G.labels(c & seen)}")
        seen |= c
    if seen != G.full:
        raise PreconditionError(f"classes miss vertices {G.labels(G.full & ~seen)}")
    idx = tightness(G)
    for c in cl:
        if not idx.is_tight(c):
            w = idx.witness(c)
            why = "even class" if c.bit_count() % 2 == 0 else "not tight"
            raise PreconditionError(
                f"class {G.labels(c)} is {why}" + (f"; witness matching {list(w.edges)}" if w else ""))
    return TightSetPartition(tuple(sorted(cl, key=set_key)), G)


def collapse(P: TightSetPartition) -> CollapseResult:
    G = P.host
    owner = [0] * G.n
    for i, c in enumerate(P.classes):
        for v in bits(c):
            owner[v] = i
    es = {(min(owner[u], owner[v]), max(owner[u], owner[v])) for u, v in G.edges if owner[u] != owner[v]}
    names = None
    if G.names:
        names = ["{" + ",".join(G.labels(c)) + "}" for c in P.classes]
    H = build_graph(len(P.classes), es, names)
    if not is_matching_covered(H):
        raise InvariantError("collapse of a tight set partition is not matching covered")
    return CollapseResult(H, P.classes)


def project_matching(P: TightSetPartition, M: Matching) -> Matching:
    if not M.is_perfect_in(P.host):
        raise PreconditionError("matching is not perfect")
    owner = {}
    for i, c in enumerate(P.classes):
        for v in bits(c):
            owner[v] = i
    out = [(owner[u], owner[v]) for u, v in M.edges if owner[u] != owner[v]]
    pm = make_matching(out)
    if not pm.is_perfect_in(P.collapse.graph):
        raise InvariantError("projected matching is not perfect in the collapse")
    return pm


def odd_class_indices(P: TightSetPartition, X: int) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(P.classes) if (c & X).bit_count() & 1)


def odd_intersections(P: TightSetPartition, X: int) -> tuple[int, ...]:
    """Classes meeting X in an odd number of vertices; their union is tight."""
    idx = tightness(P.host)
    if not idx.is_tight(X):
        raise PreconditionError("set is not tight")
    odd = tuple(P.classes[i] for i in odd_class_indices(P, X))
    u = 0
    for c in odd:
        u |= c
    if not odd or len(odd) == len(P.classes) or not idx.is_tight(u):
        raise InvariantError("union of oddly met classes is not a proper tight set")
    return odd


@dataclass(frozen=True)
class Correspondence:
    map: tuple[int, ...]  # index in P -> index in Q

    def pairs(self, P: TightSetPartition, Q: TightSetPartition) -> list[tuple[int, int]]:
        return [(P.classes[i], Q.classes[j]) for i, j in enumerate(self.map)]


def find_correspondence(P: TightSetPartition, Q: TightSetPartition) -> Correspondence | None:
    if P.host != Q.host or len(P.classes) != len(Q.classes):
        return None
    rho = []
    for p in P.classes:
        odd = [j for j, q in enumerate(Q.classes) if (p & q).bit_count() & 1]
        if len(odd) != 1:
            return None
        rho.append(odd[0])
    if len(set(rho)) != len(rho):
        return None
    return Correspondence(tuple(rho))


# --------------------------------------------------------- classification

def is_cycle_graph(H: Graph) -> bool:
    return H.n >= 3 and all(H.degree(v) == 2 for v in range(H.n)) and is_connected(H)


def unions_tight_in_collapse(P: TightSetPartition) -> list[int]:
    """Nontrivial tight sets of the collapse, as masks over class indices."""
    idx = tightness(P.host)
    k = len(P.classes)
    out = []
    for sel in range(1, 1 << k):
        s = sel.bit_count()
        if s < 2 or s > k - 2 or not s & 1:
            continue
        u = 0
        for i in bits(sel):
            u |= P.classes[i]
        if idx.is_tight(u):
            out.append(sel)
    return out


def is_bob(P: TightSetPartition) -> bool:
    """Collapse has no nontrivial tight set (checked through unions in G)."""
    idx = tightness(P.host)
    k = len(P.classes)
    first = P.classes[0]
    rest = P.classes[1:]
    for sel in range(1 << (k - 1)):
        s = sel.bit_count() + 1
        if s < 2 or s > k - 2 or not s & 1:
            continue
        u = first
        for i in bits(sel):
            u |= rest[i]
        if idx.is_tight(u):
            return False
    return True


def _tight_subsets(P: TightSetPartition, c: int) -> list[int]:
    idx = tightness(P.host)
    return [t for t in idx.tight_sets if t & ~c == 0 and t != c]


def three_splits(P: TightSetPartition, i: int):
    """Splits of class i into three tight parts keeping the collapse a cycle,
    as sorted triples, in lexicographic order."""
    idx = tightness(P.host)
    c = P.classes[i]
    subs = _tight_subsets(P, c)
    found = set()
    for a in subs:
        for b in subs:
            if b & a or b <= a:
                continue
            rest = c & ~a & ~b
            if not rest or rest <= b or not idx.is_tight(rest):
                continue
            trip = tuple(sorted((a, b, rest), key=set_key))
            if trip in found:
                continue
            classes = P.classes[:i] + trip + P.classes[i + 1:]
            Q = TightSetPartition(tuple(sorted(classes, key=set_key)), P.host)
            if is_cycle_graph(Q.collapse.graph):
                found.add(trip)
    return sorted(found, key=lambda t: [set_key(x) for x in t])


def is_maximal_cyclic(P: TightSetPartition) -> bool:
    if not is_cycle_graph(P.collapse.graph):
        return False
    return all(not three_splits(P, i) for i in range(len(P.classes)))


def classify_collapse(P: TightSetPartition) -> CollapseClass:
    H = P.collapse.graph
    cyclic = is_cycle_graph(H)
    bob = is_bob(P)
    if bob:
        kind = Kind.BRACE if bipartition_of(H) is not None else Kind.BRICK
    elif cyclic:
        kind = Kind.CYCLE
    else:
        kind = Kind.OTHER
    maxcyc = cyclic and is_maximal_cyclic(P)
    c4 = H.n == 4 and cyclic
    inducing = len(P.classes) >= 4 and (maxcyc or (bob and not c4))
    return CollapseClass(kind, cyclic, maxcyc, inducing)


def refine_to_maximal_cyclic(P: TightSetPartition) -> TightSetPartition:
    if not is_cycle_graph(P.collapse.graph):
        raise PreconditionError("partition is not cyclic")
    while True:
        for i in range(len(P.classes)):
            splits = three_splits(P, i)
            if splits:
                classes = P.classes[:i] + splits[0] + P.classes[i + 1:]
                P = TightSetPartition(tuple(sorted(classes, key=set_key)), P.host)
                break
        else:
            return P


def tight_partitions(G: Graph, min_classes: int = 1, pool: Sequence[int] | None = None):
    """All partitions of V(G) into tight sets drawn from ``pool`` (default:
    every tight set), each as a sorted class tuple."""
    idx = tightness(G)
    pool = list(idx.tight_sets if pool is None else pool)
    by_low: dict[int, list[int]] = {}
    for t in pool:
        by_low.setdefault((t & -t).bit_length() - 1, []).append(t)
    out = []

    def rec(left: int, acc: list[int]):
        if not left:
            if len(acc) >= min_classes:
                out.append(tuple(sorted(acc, key=set_key)))
            return
        v = (left & -left).bit_length() - 1
        for t in by_low.get(v, ()):
            if t & ~left == 0:
                acc.append(t)
                rec(left & ~t, acc)
                acc.pop()

    rec(G.full, [])
    out.sort(key=lambda cl: [set_key(c) for c in cl])
    return [TightSetPartition(cl, G) for cl in out]
