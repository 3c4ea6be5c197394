"""Named instances used by the CLI, the tests and ``verify``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graph import Digraph, Graph, build_digraph, build_graph


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    value: Graph | Digraph | tuple
    notes: dict = field(default_factory=dict)


def cycle(n: int, prefix: str = "v") -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], [f"{prefix}{i}" for i in range(n)])


def directed_cycle(n: int) -> Digraph:
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def doubled_directed_cycle(n: int) -> Digraph:
    arcs = [(i, (i + 1) % n) for i in range(n)] + [((i + 1) % n, i) for i in range(n)]
    return build_digraph(n, arcs)


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def k4_ladder() -> Graph:
    names = ["u", "v", "w", "x", "p1", "p2"]
    ix = {s: i for i, s in enumerate(names)}
    es = [("u", "p1"), ("p1", "p2"), ("p2", "v"), ("u", "w"), ("u", "x"), ("v", "w"), ("v", "x"), ("w", "x")]
    return build_graph(6, [(ix[a], ix[b]) for a, b in es], names)


def k4_double_ladder() -> Graph:
    """K4 with two disjoint edges each replaced by a path of length 3."""
    names = ["u", "v", "w", "x", "p1", "p2", "q1", "q2"]
    ix = {s: i for i, s in enumerate(names)}
    es = [("u", "p1"), ("p1", "p2"), ("p2", "v"), ("w", "q1"), ("q1", "q2"), ("q2", "x"),
          ("u", "w"), ("u", "x"), ("v", "w"), ("v", "x")]
    return build_graph(8, [(ix[a], ix[b]) for a, b in es], names)


def k4_claw_ladder() -> Graph:
    """K4 with the three edges at u each replaced by a path of length 3."""
    names = ["u", "v", "w", "x", "a1", "a2", "b1", "b2", "c1", "c2"]
    ix = {s: i for i, s in enumerate(names)}
    es = [("u", "a1"), ("a1", "a2"), ("a2", "v"), ("u", "b1"), ("b1", "b2"), ("b2", "w"),
          ("u", "c1"), ("c1", "c2"), ("c2", "x"), ("v", "w"), ("v", "x"), ("w", "x")]
    return build_graph(10, [(ix[a], ix[b]) for a, b in es], names)


def prism() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching."""
    return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k33_ladder() -> Graph:
    """K_{3,3} with one edge replaced by a path of length 3."""
    es = [(i, 3 + j) for i in range(3) for j in range(3) if (i, j) != (0, 0)]
    es += [(0, 6), (6, 7), (7, 3)]
    return build_graph(8, es)


def hex_parts() -> tuple:
    g = cycle(6)
    m = lambda *vs: sum(1 << v for v in vs)  # noqa: E731
    left = (m(0), m(4), m(5), m(1, 2, 3))
    middle = (m(0), m(1), m(5), m(2, 3, 4))
    right = (m(0), m(1), m(2), m(3, 4, 5))
    return g, {"left": left, "middle": middle, "right": right}


def _build() -> dict[str, CorpusInstance]:
    c = {}

    def add(name, value, **notes):
        c[name] = CorpusInstance(name, value, notes)

    for n in (4, 6, 8, 10):
        add(f"C{n}", cycle(n), torsoids=1, cyclic=True, torsos_per_family=n // 2 - 1)
    add("K4", complete(4), kind="brick", nontrivial_cuts=0)
    add("K33", complete_bipartite(3, 3), kind="brace", nontrivial_cuts=0)
    add("PETERSEN", petersen(), kind="brick", nontrivial_cuts=0)
    add("K4_LADDER", k4_ladder(), nontrivial_cuts=2, torsoids=2)
    add("K4_DOUBLE_LADDER", k4_double_ladder())
    add("K4_CLAW_LADDER", k4_claw_ladder())
    add("PRISM", prism())
    add("K33_LADDER", k33_ladder())
    add("HEX_PARTS", hex_parts())
    add("DC3", directed_cycle(3), pieces="2 x 2-cycle")
    add("DC5", directed_cycle(5), pieces="4 x 2-cycle")
    add("DDC5", doubled_directed_cycle(5), strongly_2_connected=True)
    return c


CORPUS: dict[str, CorpusInstance] = _build()

GRAPH_NAMES = [k for k, v in CORPUS.items() if isinstance(v.value, Graph)]
DIGRAPH_NAMES = [k for k, v in CORPUS.items() if isinstance(v.value, Digraph)]


def get(name: str) -> CorpusInstance:
    try:
        return CORPUS[name.upper()]
    except KeyError:
        raise PreconditionError(f"unknown corpus instance {name!r}; known: {', '.join(CORPUS)}") from None
