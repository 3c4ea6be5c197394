"""Text, JSON and DOT serialization.

Edge-list format::

    g 6            # or "d 6" for a digraph
    #! names u v w x p1 p2
    u p1
    p1 p2

``#`` starts a comment.  The ``#! names`` directive (optional, still a
comment to other readers) pins the id of every named vertex; without it
names get ids in first-seen order.  Integer tokens are ids when the file
uses no names at all.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import PreconditionError
from .graph import Digraph, Graph, build_digraph, build_graph
from .matching import Matching, make_matching

SCHEMA = 1


def _directives(line: str) -> tuple[str, list[str]] | None:
    s = line.strip()
    if s.startswith("#!"):
        parts = s[2:].split()
        if parts:
            return parts[0], parts[1:]
    return None


def parse_graph_text(text: str) -> Graph | Digraph:
    header = None
    names: list[str] = []
    rows: list[tuple[list[str], bool]] = []
    for raw in text.splitlines():
        d = _directives(raw)
        if d and d[0] == "names":
            names = d[1]
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if header is None:
            if len(toks) != 2 or toks[0] not in ("g", "d"):
                raise PreconditionError("first line must be 'g <n>' or 'd <n>'")
            try:
                header = (toks[0], int(toks[1]))
            except ValueError:
                raise PreconditionError("vertex count must be an integer") from None
            continue
        if len(toks) == 3 and toks[1] == ">":
            rows.append(([toks[0], toks[2]], True))
        elif len(toks) == 2:
            rows.append((toks, False))
        else:
            raise PreconditionError(f"cannot parse line {raw!r}")
    if header is None:
        raise PreconditionError("empty input")
    kind, n = header
    directed = kind == "d"
    if any(arrow != directed for _, arrow in rows):
        raise PreconditionError("use 'u > v' lines in digraphs and 'u v' lines in graphs")
    tokens = [t for toks, _ in rows for t in toks]
    if not names and all(t.lstrip("-").isdigit() for t in tokens):
        pairs = [(int(a), int(b)) for (a, b), _ in rows]
        table = None
    else:
        ids = {s: i for i, s in enumerate(names)}
        if len(ids) != len(names):
            raise PreconditionError("duplicate vertex name")
        for t in tokens:
            if t not in ids:
                ids[t] = len(ids)
        if len(ids) > n:
            raise PreconditionError(f"{len(ids)} named vertices exceed declared n={n}")
        table = list(ids)
        k = len(table)
        for i in range(k, n):
            filler = str(i)
            if filler in ids:
                raise PreconditionError("cannot name unnamed vertices without a collision")
            table.append(filler)
        pairs = [(ids[a], ids[b]) for (a, b), _ in rows]
    if directed:
        return build_digraph(n, pairs, table)
    return build_graph(n, pairs, table)


def format_graph_text(g: Graph | Digraph) -> str:
    lines = [("d" if isinstance(g, Digraph) else "g") + f" {g.n}"]
    if g.names:
        lines.append("#! names " + " ".join(g.names))
    sep = " > " if isinstance(g, Digraph) else " "
    pairs = g.arcs if isinstance(g, Digraph) else g.edges
    for u, v in pairs:
        lines.append(f"{g.label(u)}{sep}{g.label(v)}")
    return "\n".join(lines) + "\n"


def parse_sets(text: str, G: Graph | Digraph, tag: str | None = None) -> list[int]:
    """Lines ``X: 1 2 3`` (cut files) or ``P: 1 2 3`` (partition files)."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PreconditionError(f"expected 'TAG: members' in {raw!r}")
        t, rest = line.split(":", 1)
        if tag and t.strip() != tag:
            raise PreconditionError(f"expected tag {tag!r}, found {t.strip()!r}")
        m = 0
        for tok in rest.split():
            m |= 1 << G.vertex(tok)
        out.append(m)
    return out


def format_sets(G: Graph, sets: Iterable[int], tag: str) -> str:
    return "".join(f"{tag}: " + " ".join(G.labels(s)) + "\n" for s in sets)


def parse_matching(text: str, G: Graph) -> Matching:
    pairs = []
    for raw in text.splitlines():
        d = _directives(raw)
        if d and d[0] == "matching":
            toks = d[1]
        else:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            toks = line.split()
            if toks[0] in ("g", "d"):
                continue
        if len(toks) != 2:
            raise PreconditionError(f"cannot parse matching line {raw!r}")
        pairs.append((G.vertex(toks[0]), G.vertex(toks[1])))
    return make_matching(pairs)


def embedded_matching(text: str, G: Graph) -> Matching | None:
    """The ``#! matching u v`` directives of a graph file, if any."""
    pairs = []
    for raw in text.splitlines():
        d = _directives(raw)
        if d and d[0] == "matching":
            if len(d[1]) != 2:
                raise PreconditionError(f"bad matching directive {raw!r}")
            pairs.append((G.vertex(d[1][0]), G.vertex(d[1][1])))
    return make_matching(pairs) if pairs else None


# ------------------------------------------------------------------ JSON

def dumps(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def vset(G, mask: int) -> list:
    return G.labels(mask)


def graph_json(G: Graph | Digraph) -> dict:
    if isinstance(G, Digraph):
        return {"kind": "digraph", "n": G.n, "vertices": [G.label(v) for v in range(G.n)],
                "arcs": [[G.label(u), G.label(v)] for u, v in G.arcs]}
    return {"kind": "graph", "n": G.n, "vertices": [G.label(v) for v in range(G.n)],
            "edges": [[G.label(u), G.label(v)] for u, v in G.edges]}


def matching_json(G: Graph, M: Matching) -> list:
    return [[G.label(u), G.label(v)] for u, v in M.edges]


def cut_json(G: Graph, rec) -> dict:
    return {"shore": vset(G, rec.shore), "other": vset(G, rec.cut.other), "trivial": rec.trivial,
            "edges": [[G.label(u), G.label(v)] for u, v in rec.cut.edges]}


def torsoid_json(T, tid: int | None = None) -> dict:
    G = T.host
    d = {}
    if tid is not None:
        d["id"] = tid
    d["cyclic"] = T.cyclic
    d["skeleton"] = {
        "vertices": [{"id": i, "set": vset(G, v)} for i, v in enumerate(T.vertices)],
        "edges": [{"u": i, "v": j, "eps": vset(G, x)} for (i, j), x in zip(T.edges, T.eps)],
    }
    return d


def torso_json(S, family_id: int, kappa_id: int, tid: int) -> dict:
    G = S.star.partition.host
    H = S.graph.graph
    return {
        "id": tid,
        "family_id": family_id,
        "kappa": kappa_id,
        "c4": S.c4,
        "skeleton": {
            "vertices": [{"id": i, "set": vset(G, c)} for i, c in enumerate(S.classes)],
            "edges": [{"u": i, "v": j} for i, j in H.edges],
        },
    }


def residence_json(T, r) -> dict:
    G = T.host
    d = {"kind": r.kind, "theta": r.theta, "witness": vset(G, r.witness)}
    if r.kind == "edge":
        d["edge"] = list(r.target)
        d["eps"] = vset(G, T.eps_of(*r.target))
    elif r.kind == "vertex":
        d["vertex"] = r.target
        d["set"] = vset(G, T.vertices[r.target])
        d["proper"] = r.proper
    else:
        d["interval"] = list(r.target)
    return d


# ------------------------------------------------------------------- DOT

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_dot(G: Graph | Digraph, name: str = "G") -> str:
    directed = isinstance(G, Digraph)
    lines = [("digraph " if directed else "graph ") + _q(name) + " {"]
    for v in range(G.n):
        lines.append(f"  {v} [label={_q(G.label(v))}];")
    arrow = "->" if directed else "--"
    for u, v in (G.arcs if directed else G.edges):
        lines.append(f"  {u} {arrow} {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def torsoid_dot(T, name: str = "torsoid") -> str:
    G = T.host
    lines = ["graph " + _q(name) + " {"]
    for i, v in enumerate(T.vertices):
        lines.append(f"  {i} [label={_q('{' + ','.join(G.labels(v)) + '}')}];")
    for (i, j), x in zip(T.edges, T.eps):
        lab = "{" + ",".join(G.labels(x)) + "}" if x else ""
        lines.append(f"  {i} -- {j}" + (f" [label={_q(lab)}]" if lab else "") + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
