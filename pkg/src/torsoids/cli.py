"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 input violates a precondition,
3 internal invariant failure (or a failed ``verify``).
"""

from __future__ import annotations

import argparse
import sys

from . import formats as fm
from .canon import canonical_form
from .corpus import CORPUS, DIGRAPH_NAMES, GRAPH_NAMES, get
from .errors import InvariantError, PreconditionError, TorsoidError
from .graph import Digraph, Graph, bipartition_of, is_connected
from .limits import LIMITS, override

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(TorsoidError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# ------------------------------------------------------------------ input

def _corpus(name: str):
    try:
        return get(name)
    except PreconditionError as e:
        raise UsageError(str(e)) from None


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def load(path: str):
    """A Graph, a Digraph, or (for HEX_PARTS) a (graph, partitions) pair."""
    if path.startswith("corpus:"):
        return _corpus(path[len("corpus:"):]).value, None
    text = read_text(path)
    return fm.parse_graph_text(text), text


def load_graph(path: str) -> Graph:
    g, _ = load(path)
    if isinstance(g, tuple):
        g = g[0]
    if not isinstance(g, Graph):
        raise UsageError("this command needs an undirected graph input")
    return g


def load_digraph(path: str) -> Digraph:
    g, _ = load(path)
    if not isinstance(g, Digraph):
        raise UsageError("this command needs a digraph input")
    return g


def emit(args, obj: dict, dot: str | None = None):
    if getattr(args, "dot", False):
        if dot is None:
            raise UsageError("--dot is not available for this command")
        sys.stdout.write(dot)
    else:
        sys.stdout.write(fm.dumps(obj))


# --------------------------------------------------------------- commands

def cmd_info(args):
    from .digraphs import is_strongly_2connected, is_strongly_connected
    from .matching import is_matching_covered, perfect_matchings
    from .tight import enumerate_tight_cuts

    g, _ = load(args.input)
    if isinstance(g, tuple):
        g = g[0]
    d = {"graph": fm.graph_json(g)}
    if isinstance(g, Digraph):
        d["strongly_connected"] = is_strongly_connected(g)
        d["strongly_2_connected"] = is_strongly_2connected(g)
    else:
        bp = bipartition_of(g)
        d["connected"] = is_connected(g)
        d["bipartite"] = bp is not None
        if bp:
            d["colour_classes"] = [g.labels(bp[0]), g.labels(bp[1])]
        mc = is_matching_covered(g)
        d["matching_covered"] = mc
        d["perfect_matchings"] = len(perfect_matchings(g)) if g.n % 2 == 0 else 0
        if mc:
            cuts = enumerate_tight_cuts(g)
            d["tight_cuts"] = len(cuts)
            d["nontrivial_tight_cuts"] = sum(1 for c in cuts if not c.trivial)
    d["canonical_form"] = [list(p) for p in canonical_form(g)[2]]
    emit(args, d, fm.graph_dot(g))


def _family(g, args):
    from .tight import extend_to_maximal_nested_family

    return extend_to_maximal_nested_family(g, (), order_seed=args.seed)


def cmd_tight_cuts(args):
    from .tight import enumerate_tight_cuts

    g = load_graph(args.input)
    if args.family:
        fam = _family(g, args)
        cuts = [c for c in fam.cuts if not (args.nontrivial and c.trivial)]
    else:
        cuts = enumerate_tight_cuts(g, args.nontrivial)
    if args.cut_file:
        sys.stdout.write(fm.format_sets(g, [c.shore for c in cuts], "X"))
        return
    emit(args, {"graph": fm.graph_json(g), "count": len(cuts), "cuts": [fm.cut_json(g, c) for c in cuts]})


def cmd_torsoids(args):
    from .torsoid import enumerate_torsoids, validate_torsoid

    g = load_graph(args.input)
    ts = enumerate_torsoids(g, order_seed=args.seed)
    for T in ts:
        rep = validate_torsoid(T)
        if not rep.ok:
            raise InvariantError(f"enumerated torsoid fails {sorted(rep.axioms)}")
    dot = "".join(fm.torsoid_dot(T, f"torsoid{i}") for i, T in enumerate(ts))
    emit(args, {"count": len(ts), "torsoids": [fm.torsoid_json(T, i) for i, T in enumerate(ts)]}, dot)


def cmd_torsos(args):
    from .torso import kappa_of_torso, torsos, verify_preimage_counts
    from .torsoid import torsoid_sort_key

    g = load_graph(args.input)
    fam = _family(g, args)
    ss = torsos(g, fam)
    kap = [kappa_of_torso(S) for S in ss]
    tl = sorted(set(kap), key=torsoid_sort_key)
    ids = {T: i for i, T in enumerate(tl)}
    rep = verify_preimage_counts(g, fam)
    d = {
        "family": [g.labels(c.shore) for c in fam.cuts],
        "torsos": [fm.torso_json(S, 0, ids[T], i) for i, (S, T) in enumerate(zip(ss, kap))],
        "torsoids": [fm.torsoid_json(T, i) for i, T in enumerate(tl)],
        "preimages": [{"torsoid": ids[gr.torsoid], "torsos": len(gr.torsos), "expected": gr.expected, "ok": gr.ok}
                      for gr in rep.groups],
    }
    dot = "".join(fm.graph_dot(S.graph.graph, f"torso{i}") for i, S in enumerate(ss))
    emit(args, d, dot)
    if not rep.ok:
        raise InvariantError("torso pre-image counts do not match")


def cmd_classify(args):
    from .partitions import validate_partition
    from .tight import tightness
    from .torsoid import classify_residence, enumerate_torsoids, induced_torsoid, theta

    g = load_graph(args.input)
    if args.partition:
        classes = fm.parse_sets(read_text(args.partition), g, "P")
        P = validate_partition(g, classes)
        c = P.classification
        d = {"classes": [g.labels(x) for x in P.classes], "kind": c.kind.value, "cyclic": c.cyclic,
             "maximal_cyclic": c.maximal_cyclic, "torsoid_inducing": c.torsoid_inducing}
        if c.torsoid_inducing:
            d["induced_torsoid"] = fm.torsoid_json(induced_torsoid(P))
        emit(args, d)
        return
    sets = fm.parse_sets(read_text(args.cuts), g, "X") if args.cuts else list(tightness(g).tight_sets)
    ts = enumerate_torsoids(g, order_seed=args.seed)
    rows = []
    for X in sets:
        row = {"set": g.labels(X), "residence": []}
        for i, T in enumerate(ts):
            r = classify_residence(T, X)
            row["residence"].append({"torsoid": i, **fm.residence_json(T, r)})
            assert r.theta == theta(T, X)
        rows.append(row)
    emit(args, {"torsoids": [fm.torsoid_json(T, i) for i, T in enumerate(ts)], "sets": rows})


def cmd_digraph(args):
    from .digraphs import (
        enumerate_one_separations, lovasz_pieces, multiset_summary, separation_tight_bijection,
    )

    D = load_digraph(args.input)
    if args.action == "decompose":
        pieces = lovasz_pieces(D, args.seed or 0)
        forms = sorted(canonical_form(p) for p in pieces)
        summary = multiset_summary(forms)
        d = {"pieces": len(pieces),
             "multiset": [{"n": f[1], "arcs": [list(a) for a in f[2]], "multiplicity": k} for f, k in summary]}
        emit(args, d, "".join(fm.graph_dot(p, f"piece{i}") for i, p in enumerate(pieces)))
    elif args.action == "separations":
        seps = enumerate_one_separations(D)
        emit(args, {"count": len(seps), "separations": [
            {"a": D.labels(s.a), "b": D.labels(s.b), "separator": D.label(s.separator),
             "no_arcs_from": s.no_arcs_from, "proper": s.proper} for s in seps]})
    else:
        from .matching import matching_graph

        rep = separation_tight_bijection(D)
        G = matching_graph(D).graph
        emit(args, {"tight_sets": rep.tight_count, "separations": rep.separation_count, "ok": rep.ok,
                    "pairs": [{"tight_set": G.labels(X), "a": D.labels(s.a), "b": D.labels(s.b),
                               "no_arcs_from": s.no_arcs_from} for X, s in rep.pairs]})
        if not rep.ok:
            raise InvariantError("tight sets and 1-separations are not in bijection")


def cmd_convert(args):
    from .matching import contraction_map, is_matching_covered, m_direction, matching_graph

    g, text = load(args.input)
    if args.to_matching:
        if not isinstance(g, Digraph):
            raise UsageError("--to-matching needs a digraph input")
        r = matching_graph(g)
        G = r.graph
        lines = [fm.format_graph_text(G).rstrip("\n")]
        lines += [f"#! matching {G.label(u)} {G.label(v)}" for u, v in r.matching.edges]
        lines += [f"# {g.label(v)}: ({G.label(a)}, {G.label(b)})" for v, (a, b) in enumerate(r.split_map)]
        sys.stdout.write("\n".join(lines) + "\n")
        return
    if isinstance(g, tuple):
        g = g[0]
    if not isinstance(g, Graph):
        raise UsageError("--to-digraph needs an undirected graph input")
    if args.matching:
        M = fm.parse_matching(read_text(args.matching), g)
    else:
        M = fm.embedded_matching(text or "", g)
        if M is None:
            raise UsageError("--to-digraph needs --matching FILE or '#! matching' lines in the input")
    if not M.is_perfect_in(g):
        raise PreconditionError("matching is not a perfect matching of the graph")
    if bipartition_of(g) is None:
        raise PreconditionError("graph is not bipartite")
    if not is_matching_covered(g):
        raise PreconditionError("graph is not matching covered")
    D = m_direction(g, M)
    lines = [fm.format_graph_text(D).rstrip("\n")]
    lines += [f"# {D.label(i)}: ({g.label(w)}, {g.label(b)})" for i, (w, b) in enumerate(contraction_map(g, M))]
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_verify(args):
    from .checks import SUITES
    from .digraphs import lovasz_decompose, separation_tight_bijection
    from .canon import isomorphic
    from .matching import m_direction, matching_graph
    from .tight import maximal_nested_families
    from .torso import verify_preimage_counts

    names = [a[len("corpus:"):] if a.startswith("corpus:") else a for a in args.inputs] or list(CORPUS)
    report = {}
    failed = False
    for name in names:
        if name.upper() in CORPUS:
            inst = _corpus(name)
            label, g = inst.name, inst.value
        else:
            label, g = name, load(name)[0]
        if isinstance(g, tuple):
            from .partitions import find_correspondence, validate_partition

            G, parts = g
            P = {k: validate_partition(G, v) for k, v in parts.items()}
            res = {
                "left~middle": find_correspondence(P["left"], P["middle"]) is not None,
                "middle~right": find_correspondence(P["middle"], P["right"]) is not None,
                "left~right": find_correspondence(P["left"], P["right"]) is not None,
            }
            ok = res["left~middle"] and res["middle~right"] and not res["left~right"]
            report[label] = {"correspondences": res, "ok": ok}
            failed |= not ok
            continue
        if isinstance(g, Digraph):
            r = separation_tight_bijection(g)
            mg = matching_graph(g)
            forms = {tuple(lovasz_decompose(g, s)) for s in range(5)}
            pieces_ok = all(is_strongly_2connected_or_2cycle(p) for p in _pieces(g))
            entry = {"bijection": r.ok, "tight_sets": r.tight_count, "separations": r.separation_count,
                     "round_trip": isomorphic(m_direction(mg.graph, mg.matching), g),
                     "order_invariant": len(forms) == 1, "pieces_strongly_2_connected": pieces_ok}
            entry["ok"] = all(v for k, v in entry.items() if isinstance(v, bool))
            report[label] = entry
            failed |= not entry["ok"]
            continue
        if g.n > LIMITS.max_vertices:
            raise PreconditionError(f"{label} exceeds the vertex bound")
        suites = {}
        for sname, fn in SUITES.items():
            if g.n > 10 and sname not in ("shores-connected", "residence", "torso"):
                continue
            v = fn(g)
            suites[sname] = {"violations": len(v), "examples": v[:3]}
        pre = []
        for fam in maximal_nested_families(g)[:args.max_families]:
            rep = verify_preimage_counts(g, fam)
            pre.append([{"cyclic": gr.torsoid.cyclic, "torsos": len(gr.torsos), "expected": gr.expected,
                         "ok": gr.ok} for gr in rep.groups])
        ok = all(s["violations"] == 0 for s in suites.values()) and all(x["ok"] for p in pre for x in p)
        report[label] = {"suites": suites, "preimage_counts": pre, "ok": ok}
        failed |= not ok
    emit(args, {"ok": not failed, "instances": report})
    if failed:
        raise SystemExit(EXIT_INVARIANT)


def _pieces(D):
    from .digraphs import lovasz_pieces

    return lovasz_pieces(D, 0)


def is_strongly_2connected_or_2cycle(D) -> bool:
    from .digraphs import is_strongly_2connected

    return is_strongly_2connected(D) or (D.n == 2 and len(D.arcs) == 2)


def cmd_corpus(args):
    d = {"graphs": GRAPH_NAMES, "digraphs": DIGRAPH_NAMES,
         "other": [k for k in CORPUS if k not in GRAPH_NAMES and k not in DIGRAPH_NAMES]}
    if args.name:
        inst = _corpus(args.name)
        if isinstance(inst.value, tuple):
            G, parts = inst.value
            sys.stdout.write(fm.format_graph_text(G))
            for k, v in parts.items():
                sys.stdout.write(f"# {k}\n" + fm.format_sets(G, v, "P"))
        else:
            sys.stdout.write(fm.format_graph_text(inst.value))
        return
    emit(args, d)


# ------------------------------------------------------------------ parser

def _bound(sp):
    # also accepted after the subcommand; SUPPRESS keeps the global value
    sp.add_argument("--bound", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="torsoids", description="Tight cuts, torsoids and torsos of matching covered graphs.")
    p.add_argument("--bound", type=int, default=None, help="vertex bound for brute-force enumeration")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_, inp=True, dot=False):
        sp = sub.add_parser(name, help=help_)
        if inp:
            sp.add_argument("input", help="graph file, '-' for stdin, or corpus:NAME")
        if dot:
            sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
        sp.add_argument("--seed", type=int, default=None, help="ordering seed for families/decompositions")
        _bound(sp)
        sp.set_defaults(func=fn)
        return sp

    add("info", cmd_info, "basic facts about a graph or digraph", dot=True)
    sp = add("tight-cuts", cmd_tight_cuts, "list tight cuts")
    sp.add_argument("--nontrivial", action="store_true")
    sp.add_argument("--family", action="store_true", help="only the cuts of a maximal nested family")
    sp.add_argument("--cut-file", action="store_true", help="print 'X: ...' lines instead of JSON")
    add("torsoids", cmd_torsoids, "enumerate torsoids", dot=True)
    add("torsos", cmd_torsos, "torsos of a maximal nested family and their κ images", dot=True)
    sp = add("classify", cmd_classify, "classify a partition or the residence of tight sets")
    sp.add_argument("--partition", help="partition file with 'P: ...' lines")
    sp.add_argument("--cuts", help="cut file with 'X: ...' lines (default: every tight set)")
    sp = sub.add_parser("digraph", help="directed 1-separations")
    sp.add_argument("action", choices=["decompose", "separations", "bijection"])
    sp.add_argument("input")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--dot", action="store_true")
    _bound(sp)
    sp.set_defaults(func=cmd_digraph)
    sp = add("convert", cmd_convert, "digraph <-> bipartite graph with perfect matching")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-matching", action="store_true")
    g.add_argument("--to-digraph", action="store_true")
    sp.add_argument("--matching", help="matching file (one 'u v' per line)")
    sp = sub.add_parser("verify", help="run the property suites")
    sp.add_argument("inputs", nargs="*", help="corpus:NAME or files (default: whole corpus)")
    sp.add_argument("--max-families", type=int, default=3)
    _bound(sp)
    sp.set_defaults(func=cmd_verify, dot=False)
    sp = sub.add_parser("corpus", help="list corpus instances or print one")
    sp.add_argument("name", nargs="?")
    sp.set_defaults(func=cmd_corpus, dot=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    bound = {} if args.bound is None else {"max_vertices": args.bound}
    try:
        with override(**bound):
            args.func(args)
    except SystemExit as e:
        return int(e.code or 0)
    except UsageError as e:
        print(f"torsoids: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as e:
        print(f"torsoids: input error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InvariantError, AssertionError) as e:
        print(f"torsoids: invariant failure: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
