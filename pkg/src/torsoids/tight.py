"""Tight sets and cuts, parity, nestedness, maximal nested families."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .errors import NotMatchingCovered, PreconditionError
from .graph import Cut, Graph, bits, cut_of, induces_connected, normal_shore, set_key
from .matching import Matching, is_matching_covered, perfect_matchings


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1


class TightnessIndex:
    """Per-graph tightness oracle backed by the full matching list.

    ``is_tight`` is memoized; ``tight_sets`` sweeps all subsets at once
    with numpy.  Both are checked against each other in the tests.
    """

    def __init__(self, G: Graph):
        if not is_matching_covered(G):
            raise NotMatchingCovered("graph is not matching covered")
        self.G = G
        self.matchings: tuple[Matching, ...] = perfect_matchings(G)
        self._masks = [m.masks for m in self.matchings]
        self._memo: dict[int, bool] = {}

    def witness(self, X: int) -> Matching | None:
        """A perfect matching crossing ∂X other than exactly once."""
        for m, masks in zip(self.matchings, self._masks):
            if sum(1 for e in masks if (X & e).bit_count() == 1) != 1:
                return m
        return None

    def is_tight(self, X: int) -> bool:
        r = self._memo.get(X)
        if r is None:
            r = self._compute(X)
            self._memo[X] = r
        return r

    def _compute(self, X: int) -> bool:
        G = self.G
        if X <= 0 or X >= G.full or not X.bit_count() & 1:
            return False
        if not induces_connected(G, X) or not induces_connected(G, G.full & ~X):
            return False
        return self.witness(X) is None

    @cached_property
    def tight_sets(self) -> tuple[int, ...]:
        """All tight sets (both shores of every tight cut), sorted."""
        n = self.G.n
        cand = np.arange(1, (1 << n) - 1, dtype=np.int64)
        pop = np.zeros_like(cand)
        for v in range(n):
            pop += (cand >> v) & 1
        cand = cand[(pop & 1) == 1]
        for m in self.matchings:
            cnt = np.zeros_like(cand)
            for u, v in m.edges:
                cnt += ((cand >> u) ^ (cand >> v)) & 1
            cand = cand[cnt == 1]
            if cand.size == 0:
                break
        out = sorted((int(x) for x in cand), key=set_key)
        for x in out:
            self._memo.setdefault(x, True)
        return tuple(out)

    @cached_property
    def tight_set_lookup(self) -> frozenset[int]:
        return frozenset(self.tight_sets)


@lru_cache(maxsize=256)
def tightness(G: Graph) -> TightnessIndex:
    return TightnessIndex(G)


def is_tight(G: Graph, X: int) -> bool:
    if X < 0 or X & ~G.full:
        raise PreconditionError("vertex set not contained in V(G)")
    return tightness(G).is_tight(X)


def parity_of(G: Graph, M: Matching, X: int) -> Parity:
    if not M.is_perfect_in(G):
        raise PreconditionError("matching is not perfect")
    return Parity(M.crossing(X) & 1)


# ------------------------------------------------------------- tight cuts

@dataclass(frozen=True)
class TightCutRecord:
    cut: Cut
    trivial: bool

    @property
    def shore(self) -> int:
        return self.cut.shore

    @property
    def shores(self) -> tuple[int, int]:
        return self.cut.shores


def tight_cut_record(G: Graph, X: int) -> TightCutRecord:
    if not is_tight(G, X):
        raise PreconditionError("set is not tight")
    c = cut_of(G, X)
    return TightCutRecord(c, min(X.bit_count(), G.n - X.bit_count()) == 1)


@lru_cache(maxsize=256)
def _all_cuts(G: Graph) -> tuple[TightCutRecord, ...]:
    shores = {normal_shore(G.n, X) for X in tightness(G).tight_sets}
    recs = [tight_cut_record(G, X) for X in shores]
    recs.sort(key=lambda r: set_key(r.shore))
    return tuple(recs)


def enumerate_tight_cuts(G: Graph, nontrivial_only: bool = False) -> list[TightCutRecord]:
    return [r for r in _all_cuts(G) if not (nontrivial_only and r.trivial)]


def _shores_of(c, n: int) -> tuple[int, int]:
    if isinstance(c, TightCutRecord):
        return c.shores
    X = int(c)
    return X, ((1 << n) - 1) & ~X


def sets_nested(X: int, Y: int, full: int) -> bool:
    """Whether ∂X and ∂Y have disjoint inducing shores."""
    Xc, Yc = full & ~X, full & ~Y
    return not (X & Y) or not (X & Yc) or not (Xc & Y) or not (Xc & Yc)


def are_nested(c1: TightCutRecord, c2: TightCutRecord) -> bool:
    if c1.cut.n != c2.cut.n:
        raise PreconditionError("cuts live on different hosts")
    return sets_nested(c1.shore, c2.shore, (1 << c1.cut.n) - 1)


@dataclass(frozen=True)
class NestedCutFamily:
    cuts: tuple[TightCutRecord, ...]
    host: Graph
    maximal: bool = False

    @cached_property
    def shores(self) -> frozenset[int]:
        return frozenset(c.shore for c in self.cuts)

    @cached_property
    def tight_sets(self) -> tuple[int, ...]:
        """D(C): both shores of every cut, sorted."""
        out = set()
        for c in self.cuts:
            out.update(c.shores)
        return tuple(sorted(out, key=set_key))

    def contains(self, X: int) -> bool:
        return normal_shore(self.host.n, X) in self.shores

    def nontrivial(self) -> list[TightCutRecord]:
        return [c for c in self.cuts if not c.trivial]


def _as_records(G: Graph, seed: Iterable) -> list[TightCutRecord]:
    out = []
    for c in seed:
        out.append(c if isinstance(c, TightCutRecord) else tight_cut_record(G, int(c)))
    return out


def make_family(G: Graph, cuts: Iterable, maximal: bool | None = None) -> NestedCutFamily:
    """Validate a nested family; ``maximal=None`` means compute the flag."""
    recs = {r.shore: r for r in _as_records(G, cuts)}
    rl = sorted(recs.values(), key=lambda r: set_key(r.shore))
    for i, a in enumerate(rl):
        for b in rl[i + 1:]:
            if not are_nested(a, b):
                raise PreconditionError("cuts are not pairwise nested")
    if maximal is None:
        maximal = is_maximal_family(G, rl)
    return NestedCutFamily(tuple(rl), G, maximal)


def is_maximal_family(G: Graph, cuts: Iterable[TightCutRecord]) -> bool:
    have = {c.shore for c in cuts}
    cl = [c for c in _all_cuts(G) if c.shore in have]
    for r in _all_cuts(G):
        if r.shore not in have and all(are_nested(r, c) for c in cl):
            return False
    return True


def extend_to_maximal_nested_family(G: Graph, seed: Iterable = (), order_seed: int | None = None) -> NestedCutFamily:
    """Greedily extend ``seed`` to a maximal nested family.

    Candidates are taken in canonical cut order, or in a random order drawn
    from ``order_seed`` when given.  Trivial cuts are always included.
    """
    fam = list(make_family(G, seed, maximal=False).cuts)
    have = {c.shore for c in fam}
    cands = [c for c in _all_cuts(G) if c.shore not in have]
    if order_seed is not None:
        random.Random(order_seed).shuffle(cands)
    for c in cands:
        if all(are_nested(c, d) for d in fam):
            fam.append(c)
    return make_family(G, fam, maximal=True)


def maximal_nested_families(G: Graph) -> list[NestedCutFamily]:
    """Every maximal nested family (Bron–Kerbosch over the nested relation)."""
    trivial = [c for c in _all_cuts(G) if c.trivial]
    nt = [c for c in _all_cuts(G) if not c.trivial]
    k = len(nt)
    nb = [0] * k
    for i in range(k):
        for j in range(k):
            if i != j and are_nested(nt[i], nt[j]):
                nb[i] |= 1 << j
    cliques: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            cliques.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (nb[u] & p).bit_count())
        for v in bits(p & ~nb[pivot]):
            bk(r | 1 << v, p & nb[v], x & nb[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << k) - 1, 0)
    fams = [make_family(G, trivial + [nt[i] for i in bits(c)], maximal=True) for c in cliques]
    fams.sort(key=lambda f: [set_key(c.shore) for c in f.cuts])
    return fams
