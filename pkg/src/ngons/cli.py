"""Command-line interface.

One command per invocation; all commands read the shared text graph
format.  Exit codes: 0 when the queried property holds, 1 when it fails
(with a witness where one exists), 2 on malformed input.  Output is
deterministic; `--format structured` prints the same data as key-value
records.
"""

import argparse
import sys

from .graph import GraphError, is_generalized_ngon
from . import io as gio
from .predimension import delta, d_min, closure, is_strong
from .zeroalg import (enumerate_zero_min_pairs, is_zero_algebraic,
                      is_zero_minimally_algebraic, minimal_base)
from .kmu import MuFunction, default_mu, in_class
from .witnesses import make_path, make_cycle, make_gamma, make_cl_witness
from .builder import grow
from .groups import (automorphism_group, format_cycles, is_moufang,
                     is_strongly_transitive, stabilizer_transitivity_degree)


class _InputError(Exception):
    pass


def _load(path):
    try:
        return gio.load_graph(path)
    except (OSError, gio.ParseError, GraphError) as exc:
        raise _InputError(str(exc))


def _subset(g, token):
    """A stored subset name, or comma-separated vertex ids."""
    if token in g.subsets:
        return g.subsets[token]
    try:
        ids = [int(x) for x in token.split(",") if x != ""]
    except ValueError:
        raise _InputError("subset %r is neither a stored name nor a "
                          "comma-separated id list" % token)
    try:
        return g.check_subset(ids)
    except GraphError as exc:
        raise _InputError(str(exc))


def _load_mu(path, n):
    if path is None:
        return default_mu(n)
    try:
        with open(path) as fh:
            mu = MuFunction.from_json(fh.read())
    except (OSError, ValueError, KeyError, gio.ParseError, GraphError) as exc:
        raise _InputError("bad mu file %s: %s" % (path, exc))
    if mu.n != n:
        raise _InputError("mu file is for n=%d, graph has n=%d" % (mu.n, n))
    return mu


def _emit(args, key, value):
    if args.format == "structured":
        print("%s %s" % (key, value))
    else:
        print(value)


def _ids(vertices):
    return ",".join(str(v) for v in sorted(vertices))


def _write_graph(graph, path):
    if path is None:
        sys.stdout.write(gio.format_graph(graph))
    else:
        gio.save_graph(graph, path)


def _cmd_delta(args):
    g = _load(args.file)
    _emit(args, "delta", delta(g, _subset(g, args.subset)))
    return 0


def _cmd_dmin(args):
    g = _load(args.file)
    _emit(args, "dmin", d_min(g, _subset(g, args.subset)))
    return 0


def _cmd_closure(args):
    g = _load(args.file)
    _emit(args, "closure", _ids(closure(g, _subset(g, args.subset))))
    return 0


def _cmd_strong(args):
    g = _load(args.file)
    ok, witness = is_strong(g, _subset(g, args.subset))
    _emit(args, "strong", "true" if ok else "false")
    if not ok:
        print("violator %s" % _ids(witness), file=sys.stderr)
        return 1
    return 0


def _cmd_zeroalg(args):
    g = _load(args.file)
    if args.enumerate:
        for pair in enumerate_zero_min_pairs(g, args.max_body):
            print("PAIR base=%s body=%s" % (_ids(pair.base), _ids(pair.body)))
        return 0
    if args.base is None or args.body is None:
        raise _InputError("zeroalg needs --base and --body, or --enumerate")
    base = _subset(g, args.base)
    body = _subset(g, args.body)
    try:
        alg = is_zero_algebraic(g, base, body)
        minimal = alg and is_zero_minimally_algebraic(g, base, body)
    except GraphError as exc:
        raise _InputError(str(exc))
    _emit(args, "algebraic", "true" if alg else "false")
    _emit(args, "minimally_algebraic", "true" if minimal else "false")
    if alg and not minimal:
        print("minimal_base %s" % _ids(minimal_base(g, base, body)),
              file=sys.stderr)
    return 0 if minimal else 1


def _cmd_kmu(args):
    g = _load(args.file)
    mu = _load_mu(args.mu, g.n)
    member, reports = in_class(g, mu, horizon=args.horizon,
                               max_body=args.max_body)
    _emit(args, "member", "true" if member else "false")
    for report in reports:
        print(report.format())
    return 0 if member else 1


def _cmd_witness(args):
    try:
        if args.kind == "path":
            graph = make_path(args.n, args.length)
        elif args.kind == "cycle":
            graph = make_cycle(args.n, args.length)
        elif args.kind == "gamma":
            graph = make_gamma(args.n)
        else:
            graph = make_cl_witness(args.n, args.l, with_b=args.with_b)
    except GraphError as exc:
        raise _InputError(str(exc))
    _write_graph(graph, args.output)
    return 0


def _cmd_grow(args):
    g = _load(args.seedfile)
    mu = _load_mu(args.mu, g.n)
    result, log = grow(g, args.steps, args.seed, mu=mu)
    _write_graph(result, args.output)
    if args.log is not None:
        with open(args.log, "w") as fh:
            for record in log:
                fh.write(record.format() + "\n")
    else:
        for record in log:
            print(record.format(), file=sys.stderr)
    return 0


def _cmd_verify_ngon(args):
    g = _load(args.file)
    ok, reason = is_generalized_ngon(g, thick=args.thick)
    _emit(args, "ngon", "true" if ok else "false")
    if not ok:
        print(reason, file=sys.stderr)
        return 1
    return 0


def _cmd_aut(args):
    g = _load(args.file)
    grp = automorphism_group(g, type_preserving=args.type_preserving)
    print("order %d" % grp.order)
    for gen in grp.generators:
        print(format_cycles(gen))
    return 0


def _cmd_strans(args):
    g = _load(args.file)
    try:
        grp = automorphism_group(g, type_preserving=True)
        ok, witness = is_strongly_transitive(g, grp)
    except GraphError as exc:
        raise _InputError(str(exc))
    _emit(args, "strongly_transitive", "true" if ok else "false")
    if not ok:
        print("path %s" % ",".join(str(v) for v in witness), file=sys.stderr)
        return 1
    return 0


def _cmd_moufang(args):
    g = _load(args.file)
    try:
        grp = automorphism_group(g, type_preserving=True)
        ok, witness = is_moufang(g, grp)
    except GraphError as exc:
        raise _InputError(str(exc))
    _emit(args, "moufang", "true" if ok else "false")
    if not ok:
        print("path %s" % ",".join(str(v) for v in witness), file=sys.stderr)
        return 1
    return 0


def _cmd_transdeg(args):
    g = _load(args.file)
    if args.vertex not in g.vertices:
        raise _InputError("unknown vertex %d" % args.vertex)
    grp = automorphism_group(g, type_preserving=True)
    _emit(args, "transdeg",
          stabilizer_transitivity_degree(g, grp, args.vertex))
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ngons",
        description="Predimension calculus, class membership and "
                    "transitivity checks on finite generalized n-gons.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "structured"),
                        default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, doc in (
            ("delta", _cmd_delta, "predimension of a subset"),
            ("dmin", _cmd_dmin, "minimum of delta over supersets"),
            ("closure", _cmd_closure, "smallest strong superset")):
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("file")
        p.add_argument("subset", help="stored subset name or id1,id2,...")
        p.set_defaults(fn=fn)

    p = sub.add_parser("strong", parents=[common],
                       help="is the subset strongly embedded")
    p.add_argument("file")
    p.add_argument("subset")
    p.set_defaults(fn=_cmd_strong)

    p = sub.add_parser("zeroalg", parents=[common],
                       help="0-(minimally-)algebraic pair check or enumeration")
    p.add_argument("file")
    p.add_argument("--base")
    p.add_argument("--body")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--max-body", type=int, default=None)
    p.set_defaults(fn=_cmd_zeroalg)

    p = sub.add_parser("kmu", parents=[common], help="class membership check")
    p.add_argument("file")
    p.add_argument("--mu", default=None, help="mu-function JSON file")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--max-body", type=int, default=None)
    p.set_defaults(fn=_cmd_kmu)

    p = sub.add_parser("witness", parents=[common],
                       help="emit a standard witness graph")
    ws = p.add_subparsers(dest="kind", required=True)
    wp = ws.add_parser("path")
    wp.add_argument("n", type=int)
    wp.add_argument("length", type=int)
    wc = ws.add_parser("cycle")
    wc.add_argument("n", type=int)
    wc.add_argument("length", type=int)
    wg = ws.add_parser("gamma")
    wg.add_argument("n", type=int)
    wl = ws.add_parser("cl")
    wl.add_argument("n", type=int)
    wl.add_argument("l", type=int)
    wl.add_argument("--with-b", action="store_true")
    for q in (wp, wc, wg, wl):
        q.add_argument("-o", "--output", default=None)
        q.add_argument("--format", choices=("plain", "structured"),
                       default="plain")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("grow", parents=[common],
                       help="seeded growth by free amalgamation")
    p.add_argument("seedfile")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True,
                   help="rng seed (explicit, for reproducibility)")
    p.add_argument("--mu", default=None)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--log", default=None)
    p.set_defaults(fn=_cmd_grow)

    p = sub.add_parser("verify-ngon", parents=[common],
                       help="check the generalized n-gon axioms")
    p.add_argument("file")
    p.add_argument("--thick", action="store_true")
    p.set_defaults(fn=_cmd_verify_ngon)

    p = sub.add_parser("aut", parents=[common], help="automorphism group")
    p.add_argument("file")
    p.add_argument("--type-preserving", action="store_true")
    p.set_defaults(fn=_cmd_aut)

    p = sub.add_parser("strans", parents=[common],
                       help="strong transitivity of the type-preserving group")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_strans)

    p = sub.add_parser("moufang", parents=[common], help="Moufang condition")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_moufang)

    p = sub.add_parser("transdeg", parents=[common],
                       help="transitivity degree of a point stabilizer")
    p.add_argument("file")
    p.add_argument("vertex", type=int)
    p.set_defaults(fn=_cmd_transdeg)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code else 0
    try:
        return args.fn(args)
    except _InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except GraphError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
