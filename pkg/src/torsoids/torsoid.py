"""Torsoids: validation, induced torsoids, correspondences and residence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvariantError, PreconditionError
from .graph import Graph, bits, build_graph, set_key, subsets
from .matching import is_matching_covered
from .partitions import TightSetPartition, is_cycle_graph, validate_partition
from .passable import is_passable_for, largest_passable_between
from .tight import TightCutRecord, tightness


@dataclass(frozen=True)
class Torsoid:
    """Skeleton H on vertex sets of ``host`` plus the edge map ε.

    ``vertices`` are sorted by :func:`set_key`; ``edges`` are index pairs
    into ``vertices`` in sorted order and ``eps`` is aligned with ``edges``.
    Equality is on-the-nose equality of these labelled sets.
    """

    host: Graph
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    eps: tuple[int, ...]

    @cached_property
    def skeleton(self) -> Graph:
        names = ["{" + ",".join(self.host.labels(v)) + "}" for v in self.vertices]
        return build_graph(len(self.vertices), self.edges, names)

    @cached_property
    def cyclic(self) -> bool:
        return is_cycle_graph(self.skeleton)

    @cached_property
    def _eps_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.edges, self.eps))

    def eps_of(self, i: int, j: int) -> int:
        return self._eps_map[(min(i, j), max(i, j))]

    def incident(self, i: int) -> list[tuple[int, int]]:
        return [e for e in self.edges if i in e]

    def neighbourhood_eps(self, i: int) -> int:
        out = 0
        for e in self.incident(i):
            out |= self.eps_of(*e)
        return out

    def index_of(self, vset: int) -> int:
        return self.vertices.index(vset)

    @cached_property
    def cycle_order(self) -> tuple[int, ...] | None:
        """Skeleton indices around the cycle, from 0 towards its lower neighbour."""
        if not self.cyclic:
            return None
        H = self.skeleton
        order = [0]
        cur = min(bits(H.adj[0]))
        while cur != 0:
            order.append(cur)
            nxt = [w for w in bits(H.adj[cur]) if w != order[-2]]
            cur = nxt[0]
        return tuple(order)

    def intervals(self, lo: int = 1, hi: int | None = None) -> list[tuple[int, ...]]:
        """Cyclic intervals (as sorted index tuples) with lo ≤ length ≤ hi."""
        order = self.cycle_order
        if order is None:
            return []
        n = len(order)
        hi = n - 1 if hi is None else hi
        seen = set()
        out = []
        for length in range(lo, hi + 1):
            for s in range(n):
                iv = tuple(sorted(order[(s + k) % n] for k in range(length)))
                if iv not in seen:
                    seen.add(iv)
                    out.append(iv)
        return out


def make_torsoid(host: Graph, vertex_sets: Iterable[int], eps: Mapping[tuple[int, int], int]) -> Torsoid:
    """Build a torsoid value from vertex sets and ε keyed by vertex-set pairs."""
    vs = sorted(set(vertex_sets), key=set_key)
    pos = {v: i for i, v in enumerate(vs)}
    items = []
    for (a, b), e in eps.items():
        i, j = pos[a], pos[b]
        items.append(((min(i, j), max(i, j)), e))
    items.sort()
    return Torsoid(host, tuple(vs), tuple(e for e, _ in items), tuple(x for _, x in items))


# -------------------------------------------------------------- validation

@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    message: str
    witness: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[AxiomFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def axioms(self) -> set[str]:
        return {f.axiom for f in self.failures}


def validate_torsoid(T: Torsoid) -> ValidationReport:
    G = T.host
    idx = tightness(G)
    H = T.skeleton
    fails: list[AxiomFailure] = []

    def fail(ax, msg, *wit):
        fails.append(AxiomFailure(ax, msg, tuple(wit)))

    # T1
    if H.n < 4:
        fail("T1", "skeleton has fewer than 4 vertices")
    elif not is_matching_covered(H):
        fail("T1", "skeleton is not matching covered")
    else:
        hidx = tightness(H)
        nontriv = [X for X in hidx.tight_sets if 1 < X.bit_count() < H.n - 1]
        if nontriv and not T.cyclic:
            fail("T1", "skeleton is neither a brick/brace nor a cycle", nontriv[0])
    # T2
    for v in T.vertices:
        if not idx.is_tight(v):
            fail("T2", "skeleton vertex set is not tight", v)
    # T3
    if len(T.eps) != len(T.edges) or len(set(T.edges)) != len(T.edges):
        fail("T3", "eps is not a function on the skeleton edges")
    # T4
    seen = 0
    for s in list(T.vertices) + list(T.eps):
        if s & seen:
            fail("T4", "sets overlap", s & seen)
        seen |= s
    if any(v == 0 for v in T.vertices):
        fail("T4", "empty skeleton vertex set")
    if seen != G.full:
        fail("T4", "sets do not cover V(G)", G.full & ~seen)
    if fails and fails[-1].axiom == "T4":
        return ValidationReport(tuple(fails))
    # T5
    for (i, j), e in zip(T.edges, T.eps):
        v, w = T.vertices[i], T.vertices[j]
        for a, b in ((v, w), (w, v)):
            if not any((ea & (a | e)) and (ea & b) for ea in G.edge_masks):
                fail("T5", "no edge from v ∪ eps(vw) to w", a, b)
        if not (is_passable_for(G, e, v) and is_passable_for(G, e, w)):
            fail("T5", "eps(vw) is not passable for both ends", v, w, e)
        for S in subsets(v | e | w):
            if S & ~e and is_passable_for(G, S, v) and is_passable_for(G, S, w):
                fail("T5", "eps(vw) is not the largest passable set", v, w, S)
                break
    # T6
    for i, j in itertools.combinations(range(H.n), 2):
        if H.has_edge(i, j):
            continue
        v, w = T.vertices[i], T.vertices[j]
        if any((m & v) and (m & w) for m in G.edge_masks):
            fail("T6", "host edge between non-adjacent skeleton vertices", v, w)
    # T7
    if T.cyclic and H.n >= 4:
        for i in range(H.n):
            u_i, w_i = bits(H.adj[i])
            U = T.eps_of(u_i, i) | T.vertices[i] | T.eps_of(i, w_i)
            split = three_way_split(G, U, T.vertices[u_i], T.vertices[w_i])
            if split:
                fail("T7", "vertex can be split into three tight parts", T.vertices[i], *split)
    return ValidationReport(tuple(fails))


def three_way_split(G: Graph, U: int, u: int, w: int) -> tuple[int, int, int] | None:
    """Ordered tight partition (P1, P2, P3) of U with u∪P1∪P2 and P2∪P3∪w
    tight, trying both orientations of the pair (u, w)."""
    idx = tightness(G)
    parts = [t for t in idx.tight_sets if t & ~U == 0]
    for p1 in parts:
        for p2 in parts:
            if p1 & p2:
                continue
            p3 = U & ~p1 & ~p2
            if not idx.is_tight(p3):
                continue
            for a, b in ((u, w), (w, u)):
                if idx.is_tight(a | p1 | p2) and idx.is_tight(p2 | p3 | b):
                    return p1, p2, p3
    return None


# --------------------------------------------------------- induced torsoid

def induced_correspondence(P: TightSetPartition) -> tuple[Torsoid, tuple[int, ...]]:
    """The induced torsoid of P and σ_P (skeleton index -> class index)."""
    cls = P.classification
    if not cls.torsoid_inducing:
        raise PreconditionError("partition is not torsoid inducing")
    G = P.host
    C = P.collapse.graph
    delta = {}
    for i, j in C.edges:
        delta[(i, j)] = largest_passable_between(G, P.classes[i], P.classes[j])
    tau = []
    for i, c in enumerate(P.classes):
        rm = 0
        for (a, b), d in delta.items():
            if i in (a, b):
                rm |= d
        tau.append(c & ~rm)
    if any(t == 0 for t in tau):
        raise InvariantError("τ produced an empty skeleton vertex")
    eps = {(tau[i], tau[j]): d for (i, j), d in delta.items()}
    T = make_torsoid(G, tau, eps)
    sigma = tuple(tau.index(v) for v in T.vertices)
    return T, sigma


def induced_torsoid(P: TightSetPartition) -> Torsoid:
    return induced_correspondence(P)[0]


# ------------------------------------------------------ choice functions

def choice_functions(T: Torsoid, distinct_only: bool = False):
    """Every choice function, as a tuple aligned with ``T.edges``.

    With ``distinct_only`` the pick on edges with empty ε is fixed to the
    lower endpoint, so each partition P(T, κ) is produced once.
    """
    if distinct_only:
        return itertools.product(*[e if x else e[:1] for e, x in zip(T.edges, T.eps)])
    return itertools.product(*T.edges)


def partitions_from_choice(T: Torsoid, kappa: Sequence[int] | Mapping[tuple[int, int], int]) -> TightSetPartition:
    if isinstance(kappa, Mapping):
        kappa = [kappa[e] for e in T.edges]
    kappa = list(kappa)
    if len(kappa) != len(T.edges) or any(k not in e for k, e in zip(kappa, T.edges)):
        raise PreconditionError("choice function must pick an endpoint of every edge")
    classes = list(T.vertices)
    for k, e in zip(kappa, T.eps):
        classes[k] |= e
    P = validate_partition(T.host, classes)
    corr = find_torsoid_correspondence(T, P)
    if corr is None or not corr.strong:
        raise InvariantError("choice partition is not in strong correspondence")
    return P


@dataclass(frozen=True)
class TorsoidCorrespondence:
    sigma: tuple[int, ...]  # skeleton index -> class index
    strong: bool


def find_torsoid_correspondence(T: Torsoid, P: TightSetPartition) -> TorsoidCorrespondence | None:
    if T.host != P.host or len(T.vertices) != len(P.classes):
        return None
    sigma = []
    for i, v in enumerate(T.vertices):
        hits = [k for k, c in enumerate(P.classes) if c & v]
        if len(hits) != 1 or v & ~P.classes[hits[0]]:
            return None
        c = P.classes[hits[0]]
        if c & ~(v | T.neighbourhood_eps(i)):
            return None
        sigma.append(hits[0])
    if len(set(sigma)) != len(sigma):
        return None
    strong = True
    for i, k in enumerate(sigma):
        c = P.classes[k]
        for e in T.incident(i):
            x = T.eps_of(*e)
            if c & x and x & ~c:
                strong = False
    return TorsoidCorrespondence(tuple(sigma), strong)


# ---------------------------------------------------------------- residence

def odd_vertices(T: Torsoid, X: int) -> int:
    """V(H)_X as a mask over skeleton indices."""
    out = 0
    for i, v in enumerate(T.vertices):
        if (v & X).bit_count() & 1:
            out |= 1 << i
    return out


def _shore(T: Torsoid, X) -> int:
    if isinstance(X, TightCutRecord):
        return X.shore
    return int(X)


def theta(T: Torsoid, C) -> int:
    X = _shore(T, C)
    if not tightness(T.host).is_tight(X):
        raise PreconditionError("cut is not tight")
    a = odd_vertices(T, X).bit_count()
    b = odd_vertices(T, T.host.full & ~X).bit_count()
    return min(a, b)


@dataclass(frozen=True)
class Residence:
    kind: str                 # "edge" | "vertex" | "interval"
    target: object            # edge (i, j) | vertex index | interval index tuple
    theta: int
    witness: int
    proper: bool | None = None


def edge_residences(T: Torsoid, X: int) -> list[tuple[tuple[int, int], int]]:
    """Literal check: (edge, shore) with shore ⊆ ε(edge)."""
    out = []
    for Y in sorted({X, T.host.full & ~X}, key=set_key):
        for e, x in zip(T.edges, T.eps):
            if Y and Y & ~x == 0:
                out.append((e, Y))
    return out


def vertex_residences(T: Torsoid, X: int) -> list[tuple[int, int, bool]]:
    """Literal check: (vertex, shore, proper) for every vcut shore."""
    out = []
    for Y in sorted({X, T.host.full & ~X}, key=set_key):
        for i, v in enumerate(T.vertices):
            if Y & ~(v | T.neighbourhood_eps(i)):
                continue
            if all(not (Y & T.eps_of(*e)).bit_count() & 1 for e in T.incident(i)):
                out.append((i, Y, v & ~Y == 0))
    return out


def interval_residences(T: Torsoid, X: int) -> list[tuple[tuple[int, ...], int]]:
    """Literal check: (interval, shore) satisfying the interval sandwich."""
    if not T.cyclic:
        return []
    n = len(T.vertices)
    out = []
    for Y in sorted({X, T.host.full & ~X}, key=set_key):
        for iv in T.intervals(3, n - 3):
            ins = set(iv)
            lo = hi = 0
            for i in iv:
                lo |= T.vertices[i]
            hi = lo
            for e, x in zip(T.edges, T.eps):
                if e[0] in ins and e[1] in ins:
                    lo |= x
                if e[0] in ins or e[1] in ins:
                    hi |= x
            if lo & ~Y == 0 and Y & ~hi == 0:
                out.append((iv, Y))
    return out


def classify_residence(T: Torsoid, X) -> Residence:
    X = _shore(T, X)
    G = T.host
    th = theta(T, X)
    if th == 0:
        hits = edge_residences(T, X)
        if not hits:
            raise InvariantError("θ = 0 but no shore lies inside an edge set")
        e, Y = hits[0]
        return Residence("edge", e, 0, Y)
    if th == 1:
        for Y in sorted({X, G.full & ~X}, key=set_key):
            ov = odd_vertices(T, Y)
            if ov.bit_count() != 1:
                continue
            i = ov.bit_length() - 1
            for j, Z, proper in vertex_residences(T, X):
                if j == i and Z == Y:
                    return Residence("vertex", i, 1, Y, proper)
        raise InvariantError("θ = 1 but no shore is a vertex resident")
    if th % 2 == 0:
        raise InvariantError(f"θ = {th} is even and positive")
    if not T.cyclic:
        raise InvariantError("θ > 1 in a noncyclic torsoid")
    for iv, Y in interval_residences(T, X):
        if odd_vertices(T, Y) == sum(1 << i for i in iv):
            return Residence("interval", iv, th, Y)
    raise InvariantError(f"θ = {th} but no shore is an interval resident")


def enumerate_torsoids(G: Graph, order_seed: int | None = None) -> list[Torsoid]:
    from .torso import torsoids_of_family
    from .tight import extend_to_maximal_nested_family

    fam = extend_to_maximal_nested_family(G, (), order_seed=order_seed)
    return torsoids_of_family(G, fam)


def torsoid_sort_key(T: Torsoid):
    return ([set_key(v) for v in T.vertices], list(T.edges), [set_key(x) for x in T.eps])
