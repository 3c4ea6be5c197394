"""Passable sets between disjoint tight sets."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, PreconditionError
from .graph import Graph, subsets
from .tight import tightness


@dataclass(frozen=True)
class PassabilityWitness:
    set: int
    for_p: bool
    for_q: bool


def is_passable_for(G: Graph, S: int, P: int) -> bool:
    idx = tightness(G)
    return idx.is_tight(P & ~S) and idx.is_tight(P | S)


def _check_pair(G: Graph, P: int, Q: int):
    idx = tightness(G)
    if P & Q:
        raise PreconditionError("P and Q are not disjoint")
    if not (idx.is_tight(P) and idx.is_tight(Q)):
        raise PreconditionError("P and Q must both be tight")


def witness(G: Graph, S: int, P: int, Q: int) -> PassabilityWitness:
    return PassabilityWitness(S, is_passable_for(G, S, P), is_passable_for(G, S, Q))


def is_passable_between(G: Graph, S: int, P: int, Q: int) -> bool:
    _check_pair(G, P, Q)
    if S & ~(P | Q):
        return False
    return is_passable_for(G, S, P) and is_passable_for(G, S, Q)


def passable_sets_between(G: Graph, P: int, Q: int) -> list[int]:
    """Every passable set between P and Q, by scanning subsets of P ∪ Q."""
    _check_pair(G, P, Q)
    return sorted(S for S in subsets(P | Q) if is_passable_for(G, S, P) and is_passable_for(G, S, Q))


def largest_passable_between(G: Graph, P: int, Q: int, scan: bool = False) -> int:
    """The union of all passable sets between P and Q.

    Writing S = A ∪ B with A ⊆ P and B ⊆ Q, passability of S only asks for
    P∖A, Q∪A, Q∖B and P∪B to be tight, so the A and B parts can be found
    independently.  ``scan=True`` walks every subset of P ∪ Q instead.
    """
    _check_pair(G, P, Q)
    if P | Q == G.full:
        raise PreconditionError("largest passable set needs P ∪ Q to differ from V(G)")
    if scan:
        out = 0
        for S in passable_sets_between(G, P, Q):
            out |= S
        if not is_passable_between(G, out, P, Q):
            raise InvariantError("union of passable sets is not passable")
        return out
    idx = tightness(G)
    a_part = 0
    for A in subsets(P):
        if A not in (0, P) and idx.is_tight(P & ~A) and idx.is_tight(Q | A):
            a_part |= A
    b_part = 0
    for B in subsets(Q):
        if B not in (0, Q) and idx.is_tight(Q & ~B) and idx.is_tight(P | B):
            b_part |= B
    return a_part | b_part
