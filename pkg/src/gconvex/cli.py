"""Command-line surface.

Subcommands: gen, hull, shadow, semispaces, halfspaces, check, separate,
numbers.  Graphs travel as edge lists (header "n m", one "u v" line per
edge) read from --graph FILE or stdin.  Exit status: 0 success / condition
holds, 1 negative verdict, 2 usage or input error, 3 guard exceeded or
undecided.  GCONVEX_MAX_N overrides the default size guards.
"""

import argparse
import json
import os
import sys

from .graph import (
    GraphError,
    TooLarge,
    VertexSet,
    check_metric_condition,
    format_edge_list,
    is_meshed,
    parse_edge_list,
)
from .convexity import (
    EmptyInput,
    NotPointedMaximalClique,
    ShadowSpec,
    check_peano,
    check_sandglass,
)
from .altconvexity import KINDS, hull_by_kind
from .proximal import PreconditionViolated, enumerate_semispaces_tc
from .oracles import (
    caratheodory_number,
    enumerate_semispaces_bruteforce,
    helly_number,
    radon_number,
)
from .separation import (
    StrategyInapplicable,
    greedy_separation,
    three_step_separation,
    enumerate_halfspaces,
)
from .axioms import (
    check_convex_clique_shadows,
    check_s2,
    check_s3,
    check_s4,
    is_partial_cube,
    S3_METHODS,
)
from . import families

JSON_VERSION = "1"

CHECKS = (
    "s2", "s3", "s4", "tc", "qc", "meshed", "pc",
    "partial-cube", "clique-shadows", "peano", "sandglass",
)


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _read_graph(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise CliError("cannot read %s: %s" % (path, e))
    return parse_edge_list(text)


def _parse_set(spec, n, flag):
    if spec is None:
        raise CliError("missing required flag %s" % flag)
    try:
        ids = [int(p) for p in spec.replace(",", " ").split()]
    except ValueError:
        raise CliError("%s expects comma-separated vertex ids" % flag)
    if not ids:
        raise CliError("%s must name at least one vertex" % flag)
    for v in ids:
        if not 0 <= v < n:
            raise CliError("%s: vertex %d out of range 0..%d" % (flag, v, n - 1))
    return VertexSet.of(n, ids)


def _guard(args, fallback):
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    env = os.environ.get("GCONVEX_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError("GCONVEX_MAX_N must be an integer, got %r" % env)
    return fallback


def _emit(args, record, lines):
    if args.json:
        record = {"version": JSON_VERSION, **record}
        print(json.dumps(record))
    else:
        for line in lines:
            print(line)


def _ids(vs):
    return " ".join(str(v) for v in vs.members())


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen(args):
    if args.family == "basis_graph_graphic":
        if len(args.params) != 1:
            raise CliError("basis_graph_graphic takes one edge-list file")
        h = _read_graph(args.params[0])
        g = families.basis_graph_graphic(h)
    else:
        g = families.generate(args.family, args.params)
    text = format_edge_list(g)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif args.json:
        _emit(args, {"command": "gen", "n": g.n, "m": len(g.edges),
                     "edges": [list(e) for e in g.edges]}, [])
    else:
        sys.stdout.write(text)
    return 0


def cmd_hull(args):
    g = _read_graph(args.graph)
    s = _parse_set(args.set, g.n, "--set")
    out = hull_by_kind(g, s, args.convexity)
    _emit(args, {"command": "hull", "convexity": args.convexity,
                 "members": out.members()}, [_ids(out)])
    return 0


def cmd_shadow(args):
    g = _read_graph(args.graph)
    base = _parse_set(args.set, g.n, "--set")
    if args.vertex is not None:
        if not 0 <= args.vertex < g.n:
            raise CliError("--vertex out of range")
        pole = VertexSet.of(g.n, [args.vertex])
    else:
        pole = _parse_set(args.set_b, g.n, "--set-b")
    kind = "set"
    if args.union:
        kind = "union"
    elif args.extended:
        kind = "extended"
    out = ShadowSpec(base, pole, kind).evaluate(g)
    _emit(args, {"command": "shadow", "kind": kind, "members": out.members()},
          [_ids(out)])
    return 0


def cmd_semispaces(args):
    g = _read_graph(args.graph)
    if args.strategy == "tc":
        if args.convexity != "geodesic":
            raise CliError("the tc strategy enumerates geodesic semispaces")
        grouped = [
            (ss.members, sorted({pc.x0 for pc in gens} | {ss.attaching_vertex}))
            for ss, gens in enumerate_semispaces_tc(g)
        ]
    else:
        flat = enumerate_semispaces_bruteforce(g, args.convexity, _guard(args, 18))
        grouped = []
        for ss in flat:
            if grouped and grouped[-1][0].mask == ss.members.mask:
                grouped[-1][1].append(ss.attaching_vertex)
            else:
                grouped.append((ss.members, [ss.attaching_vertex]))
    lines = [
        "%s | %s" % (_ids(members), " ".join(map(str, attached)))
        for members, attached in grouped
    ]
    _emit(args, {"command": "semispaces", "count": len(grouped),
                 "semispaces": [{"members": m.members(), "attached": a}
                                for m, a in grouped]}, lines)
    return 0


def cmd_halfspaces(args):
    g = _read_graph(args.graph)
    pairs = enumerate_halfspaces(
        g, args.convexity, args.strategy, max_n=_guard(args, 18)
    )
    lines = ["%s | %s" % (_ids(p.h1), _ids(p.h2)) for p in pairs]
    _emit(args, {"command": "halfspaces", "convexity": args.convexity,
                 "count": len(pairs),
                 "pairs": [{"h1": p.h1.members(), "h2": p.h2.members()}
                           for p in pairs]}, lines)
    return 0


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    return obj


def cmd_check(args):
    g = _read_graph(args.graph)
    name = args.condition
    method = reason = None
    if name == "s3":
        v = check_s3(g, strategy=args.strategy or "auto", max_n=_guard(args, 14))
        holds, witness, method, reason = v.holds, v.witness, v.method, v.reason
    elif name == "s2":
        w = check_s2(g, max_n=_guard(args, 18))
        holds, witness = w.holds, w.witness
    elif name == "s4":
        w = check_s4(g)
        holds, witness = w.holds, w.witness
    elif name in ("tc", "qc", "pc"):
        w = check_metric_condition(g, name)
        holds, witness = w.holds, w.witness
    elif name == "meshed":
        w = is_meshed(g)
        holds, witness = w.holds, w.witness
    elif name == "partial-cube":
        w = is_partial_cube(g)
        holds, witness = w.holds, w.witness
    elif name == "clique-shadows":
        w = check_convex_clique_shadows(g)
        holds, witness = w.holds, w.witness
    elif name == "peano":
        w = check_peano(g)
        holds, witness = w.holds, w.witness
    else:
        w = check_sandglass(g)
        holds, witness = w.holds, w.witness

    if holds is None:
        lines = ["%s: unknown (%s)" % (name, reason)]
    elif holds:
        lines = ["%s: holds" % name] + (
            ["method: %s" % method] if method else []
        )
    else:
        lines = ["%s: fails" % name]
        if method:
            lines.append("method: %s" % method)
        if witness is not None:
            lines.append("witness: %s" % (witness,))
    record = {"command": "check", "name": name, "holds": holds,
              "witness": _jsonable(witness)}
    if method:
        record["method"] = method
    if reason:
        record["reason"] = reason
    _emit(args, record, lines)
    if holds is None:
        return 3
    return 0 if holds else 1


def cmd_separate(args):
    g = _read_graph(args.graph)
    a = _parse_set(args.set, g.n, "--set")
    b = _parse_set(args.set_b, g.n, "--set-b")
    if args.strategy == "greedy":
        res = greedy_separation(g, args.convexity, a, b)
    else:
        res = three_step_separation(g, args.convexity, a, b,
                                    max_n=_guard(args, 18))
    record = {"command": "separate", "convexity": args.convexity,
              "status": res.status}
    lines = ["status: %s" % res.status]
    if res.pair is not None:
        record["h1"] = res.pair.h1.members()
        record["h2"] = res.pair.h2.members()
        lines.append("h1: %s" % _ids(res.pair.h1))
        lines.append("h2: %s" % _ids(res.pair.h2))
    if res.reason:
        record["reason"] = res.reason
        lines.append("reason: %s" % res.reason)
    _emit(args, record, lines)
    if res.status == "separable":
        return 0
    if res.status == "not_separable":
        return 1
    return 3


def cmd_numbers(args):
    g = _read_graph(args.graph)
    guard = _guard(args, 16)
    h = helly_number(g, args.convexity, guard)
    r = radon_number(g, args.convexity, guard)
    c = caratheodory_number(g, args.convexity, guard)
    _emit(args, {"command": "numbers", "convexity": args.convexity,
                 "helly": h, "radon": r, "caratheodory": c},
          ["helly %d" % h, "radon %d" % r, "caratheodory %d" % c])
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p, graph=True, convexity=True, max_n=True):
    if graph:
        p.add_argument("--graph", default="-", metavar="FILE",
                       help="edge-list file, or - for stdin (default)")
    if convexity:
        p.add_argument("--convexity", choices=KINDS, default="geodesic")
    if max_n:
        p.add_argument("--max-n", type=int, dest="max_n", default=None,
                       help="size guard override (or GCONVEX_MAX_N)")
    p.add_argument("--json", action="store_true",
                   help="emit one structured record instead of lines")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gconvex",
        description="Convexity, separation, and semispace toolkit for "
        "finite connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("family",
                   choices=sorted(list(families._FAMILIES) + ["basis_graph_graphic"]))
    p.add_argument("params", nargs="*",
                   help="integer parameters (or an edge-list file for "
                   "basis_graph_graphic)")
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    _add_common(p, graph=False, convexity=False, max_n=False)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hull", help="hull of a vertex set")
    p.add_argument("--set", required=True, metavar="V1,V2,...")
    _add_common(p, max_n=False)
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("shadow", help="shadow of --set away from a pole")
    p.add_argument("--set", required=True, metavar="V1,V2,...")
    p.add_argument("--set-b", dest="set_b", default=None, metavar="V1,V2,...")
    p.add_argument("--vertex", type=int, default=None)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--union", action="store_true",
                      help="union shadow of --vertex over the clique --set")
    mode.add_argument("--extended", action="store_true",
                      help="extended shadow of --vertex over the clique --set")
    _add_common(p, convexity=False, max_n=False)
    p.set_defaults(func=cmd_shadow)

    p = sub.add_parser("semispaces", help="every semispace, grouped by members")
    p.add_argument("--strategy", choices=("bruteforce", "tc"),
                   default="bruteforce")
    _add_common(p)
    p.set_defaults(func=cmd_semispaces)

    p = sub.add_parser("halfspaces", help="every complementary halfspace pair")
    p.add_argument("--strategy",
                   choices=("bruteforce", "bipartite", "gated_edges",
                            "dismantling"),
                   default="bruteforce")
    _add_common(p)
    p.set_defaults(func=cmd_halfspaces)

    p = sub.add_parser("check", help="test a separation axiom or metric condition")
    p.add_argument("condition", choices=CHECKS)
    p.add_argument("--strategy", choices=("auto",) + S3_METHODS, default=None,
                   help="force an s3 method")
    _add_common(p, convexity=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("separate", help="separate --set from --set-b")
    p.add_argument("--set", required=True, metavar="V1,V2,...")
    p.add_argument("--set-b", dest="set_b", required=True, metavar="V1,V2,...")
    p.add_argument("--strategy", choices=("three-step", "greedy"),
                   default="three-step")
    _add_common(p)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("numbers", help="Helly, Radon, Caratheodory numbers")
    _add_common(p)
    p.set_defaults(func=cmd_numbers)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print("gconvex: %s" % e, file=sys.stderr)
        return e.code
    except TooLarge as e:
        print("gconvex: %s" % e, file=sys.stderr)
        return 3
    except (families.BadParams, StrategyInapplicable, PreconditionViolated,
            NotPointedMaximalClique, EmptyInput, GraphError) as e:
        print("gconvex: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
