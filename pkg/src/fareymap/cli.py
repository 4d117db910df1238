"""Command line entry point: ``fareymap <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

import argparse
import sys
from fractions import Fraction

from . import __version__
from .errors import FareyMapError, TooLarge
from .export import FORMATS, export_graph
from .map_builder import build_map, star
from .metrics import bfs_distance, classify_distance_prime, poles, star_decomposition
from .modular_arith import check_level, fibonacci_semiperiod, is_prime, statistics
from .petrie import petrie_path_from
from .projective_line import enumerate_vertices, make_fraction, parse_fraction
from .render import RenderSpec, render_universal_farey
from .verify import format_report, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _level(text):
    try:
        return check_level(int(text))
    except (ValueError, FareyMapError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _viewport(text):
    try:
        lo, hi = text.split(":")
        lo, hi = Fraction(lo), Fraction(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"viewport must look like X0:X1, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError("viewport needs X0 < X1")
    return lo, hi


def _write(data, path):
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def cmd_stats(args):
    s = statistics(args.n)
    for key, value in s.as_dict().items():
        print(f"{key:<9} {value}")
    return EXIT_OK


def cmd_vertices(args):
    print(" ".join(str(v) for v in enumerate_vertices(args.n)))
    return EXIT_OK


def cmd_star(args):
    v = parse_fraction(args.vertex, args.n)
    print(f"{v}: " + " ".join(str(w) for w in star(v)))
    return EXIT_OK


def cmd_distance(args):
    u = parse_fraction(args.u, args.n)
    v = parse_fraction(args.v, args.n)
    d = bfs_distance(args.n, u, v)
    line = f"distance({u}, {v}) = {d}"
    if is_prime(args.n):
        line += f"  [prime classification: {classify_distance_prime(args.n, u, v).value}]"
    print(line)
    return EXIT_OK


def cmd_petrie(args):
    n = args.n
    m = build_map(n)
    if args.start:
        try:
            left, right = args.start.split(",")
        except ValueError:
            raise FareyMapError("--start must be a/c,b/d") from None
        start = (parse_fraction(left, n), parse_fraction(right, n))
    else:
        start = (make_fraction(1, 0, n), make_fraction(0, 1, n))
    path = petrie_path_from(m, start)
    print(path)
    print(f"length {path.length} (semiperiod {fibonacci_semiperiod(n)})")
    return EXIT_OK


def cmd_poles(args):
    ps = poles(args.n)
    print(" ".join(str(p) for p in ps))
    return EXIT_OK


def cmd_decompose(args):
    for pole, nbrs in star_decomposition(args.p):
        print(f"{pole}: " + " ".join(str(w) for w in nbrs))
    return EXIT_OK


def cmd_export(args):
    _write(export_graph(args.n, args.format), args.output)
    return EXIT_OK


def cmd_render(args):
    x0, x1 = args.viewport
    spec = RenderSpec(max_denominator=args.max_den, x0=x0, x1=x1, width=args.width, height=args.height)
    _write(render_universal_farey(spec), args.output)
    return EXIT_OK


def cmd_verify(args):
    last = args.m if args.m is not None else args.n
    results = verify(range(args.n, last + 1))
    print(format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="fareymap", description="Farey maps modulo n.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="darts, edges, faces, vertices, valency, genus")
    p.add_argument("n", type=_level)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("vertices", help="list the vertices")
    p.add_argument("n", type=_level)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("star", help="neighbours of a vertex in cyclic order")
    p.add_argument("n", type=_level)
    p.add_argument("vertex", metavar="a/c")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("distance", help="graph distance between two vertices")
    p.add_argument("n", type=_level)
    p.add_argument("u", metavar="a/c")
    p.add_argument("v", metavar="b/d")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("petrie", help="Petrie polygon")
    p.add_argument("n", type=_level)
    p.add_argument("--start", metavar="a/c,b/d", help="starting dart (default 1/0,0/1)")
    p.set_defaults(func=cmd_petrie)

    p = sub.add_parser("poles", help="vertices of the form a/0")
    p.add_argument("n", type=_level)
    p.set_defaults(func=cmd_poles)

    p = sub.add_parser("decompose", help="star decomposition at an odd prime")
    p.add_argument("p", type=_level)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("export", help="write the graph as dot, graphml, json or csv")
    p.add_argument("n", type=_level)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("render", help="SVG of the universal Farey map")
    p.add_argument("--max-den", type=int, default=8)
    p.add_argument("--viewport", type=_viewport, default=(Fraction(0), Fraction(1)), metavar="X0:X1")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=440)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="check every invariant for levels N..M")
    p.add_argument("n", type=_level)
    p.add_argument("m", type=_level, nargs="?")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"fareymap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FareyMapError, ValueError) as exc:
        print(f"fareymap: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
