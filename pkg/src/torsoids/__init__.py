"""Tight cuts, torsoids and torsos of small matching covered graphs."""

from .errors import BoundExceeded, InvariantError, NotMatchingCovered, PreconditionError, TorsoidError  # noqa: F401
from .graph import Cut, Digraph, Graph, build_digraph, build_graph  # noqa: F401
from .matching import Matching, is_matching_covered, m_direction, matching_graph, perfect_matchings  # noqa: F401
from .tight import (  # noqa: F401
    NestedCutFamily, enumerate_tight_cuts, extend_to_maximal_nested_family, is_tight, maximal_nested_families,
)
from .partitions import TightSetPartition, collapse, find_correspondence, validate_partition  # noqa: F401
from .passable import is_passable_between, largest_passable_between  # noqa: F401
from .torsoid import Torsoid, classify_residence, enumerate_torsoids, induced_torsoid, validate_torsoid  # noqa: F401
from .torso import kappa_of_torso, torsos, verify_preimage_counts  # noqa: F401
from .digraphs import enumerate_one_separations, lovasz_decompose, pull_apart  # noqa: F401

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop memoized matchings, tightness indexes and cut lists."""
    from . import matching, tight

    matching._cached.cache_clear()
    tight.tightness.cache_clear()
    tight._all_cuts.cache_clear()
