"""Directed 1-separations, their pairing with tight sets, and pulling apart."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .canon import canonical_form
from .errors import BoundExceeded, InvariantError, PreconditionError
from .graph import Digraph, bits, build_digraph, reach, set_key
from .limits import LIMITS
from .matching import matching_graph
from .tight import tightness


def is_strongly_connected(D: Digraph) -> bool:
    if D.n == 0:
        return False
    return reach(D.out_adj, 0, D.full) == D.full and reach(D.in_adj, 0, D.full) == D.full


def _strong_within(D: Digraph, within: int) -> bool:
    if not within:
        return False
    s = (within & -within).bit_length() - 1
    return reach(D.out_adj, s, within) == within and reach(D.in_adj, s, within) == within


def is_strongly_2connected(D: Digraph) -> bool:
    if D.n < 3 or not is_strongly_connected(D):
        return False
    return all(_strong_within(D, D.full & ~(1 << v)) for v in range(D.n))


@dataclass(frozen=True)
class OneSeparation:
    """(a, b) with a ∩ b = {separator}.

    ``no_arcs_from`` names the side whose private part sends no arc to the
    other private part: ``"b"`` means no arc from b∖a to a∖b.  A separation
    where both directions are arc-free (one side is all of V) is listed
    once per direction.
    """

    a: int
    b: int
    separator: int
    no_arcs_from: str = "b"

    @property
    def proper(self) -> bool:
        return bool(self.a & ~self.b) and bool(self.b & ~self.a)


def _arc_free(D: Digraph, src: int, dst: int) -> bool:
    return all(not (D.out_adj[u] & dst) for u in bits(src))


def enumerate_one_separations(D: Digraph) -> list[OneSeparation]:
    if not is_strongly_connected(D):
        raise PreconditionError("digraph is not strongly connected")
    if D.n > LIMITS.max_vertices:
        raise BoundExceeded(f"separation enumeration limited to {LIMITS.max_vertices} vertices")
    out = []
    for s in range(D.n):
        rest = D.full & ~(1 << s)
        sub = rest
        while True:
            a = sub | 1 << s
            b = (rest & ~sub) | 1 << s
            pa, pb = a & ~b, b & ~a
            if _arc_free(D, pb, pa):
                out.append(OneSeparation(a, b, s, "b"))
            if _arc_free(D, pa, pb):
                out.append(OneSeparation(a, b, s, "a"))
            if sub == 0:
                break
            sub = (sub - 1) & rest
    out.sort(key=lambda x: (x.separator, set_key(x.a), x.no_arcs_from))
    return out


def proper_one_separations(D: Digraph) -> list[OneSeparation]:
    return [s for s in enumerate_one_separations(D) if s.proper and s.no_arcs_from == "b"]


# ---------------------------------------------------- tight set pairing

def tight_set_to_separation(D: Digraph, X: int) -> OneSeparation:
    """Image of a tight set of matching_graph(D) under the pairing.

    With e the matching edge leaving X and X' the digraph vertices whose
    split pair lies inside X: (X' ∪ {v_e}, V ∖ X').  The arc-free direction
    is recorded from the colour of e's end inside X (black: no arcs into
    the first side's private part).
    """
    n = D.n
    xp = 0
    ve = -1
    black_in = False
    for v in range(n):
        b_in, w_in = X >> (2 * v) & 1, X >> (2 * v + 1) & 1
        if b_in and w_in:
            xp |= 1 << v
        elif b_in or w_in:
            if ve >= 0:
                raise PreconditionError("set is not tight: several matching edges cross it")
            ve, black_in = v, bool(b_in)
    if ve < 0:
        raise PreconditionError("set is not tight: no matching edge crosses it")
    return OneSeparation(xp | 1 << ve, D.full & ~xp, ve, "b" if black_in else "a")


def separation_to_tight_set(D: Digraph, s: OneSeparation) -> int:
    """Inverse of :func:`tight_set_to_separation`."""
    priv = s.a & ~s.b
    X = 0
    for v in bits(priv):
        X |= 0b11 << (2 * v)
    X |= 1 << (2 * s.separator + (0 if s.no_arcs_from == "b" else 1))
    return X


@dataclass(frozen=True)
class BijectionReport:
    pairs: tuple[tuple[int, OneSeparation], ...]
    orphan_tight_sets: tuple[int, ...]
    orphan_separations: tuple[OneSeparation, ...]
    tight_count: int
    separation_count: int

    @property
    def ok(self) -> bool:
        return not self.orphan_tight_sets and not self.orphan_separations and self.tight_count == self.separation_count


def separation_tight_bijection(D: Digraph) -> BijectionReport:
    seps = enumerate_one_separations(D)
    G = matching_graph(D).graph
    idx = tightness(G)
    tights = idx.tight_sets
    sepset = set(seps)
    pairs = []
    orphan_t = []
    hit = set()
    for X in tights:
        s = tight_set_to_separation(D, X)
        if s in sepset and s not in hit and separation_to_tight_set(D, s) == X:
            pairs.append((X, s))
            hit.add(s)
        else:
            orphan_t.append(X)
    orphan_s = [s for s in seps if s not in hit or not idx.is_tight(separation_to_tight_set(D, s))]
    return BijectionReport(tuple(pairs), tuple(orphan_t), tuple(orphan_s), len(tights), len(seps))


# ------------------------------------------------------------ pulling apart

def _contract(D: Digraph, keep: int, into: int) -> Digraph:
    """Keep vertices in ``keep``; everything else is merged into ``into``."""
    old = bits(keep)
    pos = {v: i for i, v in enumerate(old)}
    tgt = pos[into]
    arcs = set()
    for u, v in D.arcs:
        a = pos.get(u, tgt)
        b = pos.get(v, tgt)
        if a != b:
            arcs.add((a, b))
    names = [D.label(v) for v in old] if D.names else None
    return build_digraph(len(old), arcs, names)


def pull_apart(D: Digraph, s: OneSeparation) -> tuple[Digraph, Digraph]:
    if not s.proper:
        raise PreconditionError("degenerate separation: one side is the whole vertex set")
    if s.a | s.b != D.full or s.a & s.b != 1 << s.separator:
        raise PreconditionError("not a 1-separation of this digraph")
    pa, pb = s.a & ~s.b, s.b & ~s.a
    if not (_arc_free(D, pb, pa) or _arc_free(D, pa, pb)):
        raise PreconditionError("not a 1-separation of this digraph")
    return _contract(D, s.a, s.separator), _contract(D, s.b, s.separator)


def lovasz_pieces(D: Digraph, order_seed: int = 0) -> list[Digraph]:
    if not is_strongly_connected(D):
        raise PreconditionError("digraph is not strongly connected")
    rng = random.Random(order_seed)
    todo = [D]
    done = []
    while todo:
        X = todo.pop(rng.randrange(len(todo)))
        seps = proper_one_separations(X)
        if not seps:
            if X.n >= 3 and not is_strongly_2connected(X):
                raise InvariantError("piece without proper 1-separation is not strongly 2-connected")
            done.append(X)
            continue
        a, b = pull_apart(X, rng.choice(seps))
        todo += [a, b]
    return done


def lovasz_decompose(D: Digraph, order_seed: int = 0) -> list[tuple]:
    """Sorted multiset (as a list) of canonical forms of the pieces."""
    return sorted(canonical_form(p) for p in lovasz_pieces(D, order_seed))


def multiset_summary(forms: list[tuple]) -> list[tuple[tuple, int]]:
    return sorted(Counter(forms).items())
