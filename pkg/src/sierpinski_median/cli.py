"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails or distance methods
disagree, 2 for usage errors (bad flags, malformed vertices, orders above cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import export, sierpinski, triangle, verify
from .errors import OrderTooLarge, SierpinskiError
from .metrics import compute_metrics
from .words import parse_word

DEFAULT_CAPS = {"enum_cap": 12, "tri_cap": 9, "allpairs_s": 7, "allpairs_st": 6}


@dataclass(frozen=True)
class Caps:
    enum_cap: int
    tri_cap: int
    allpairs_s: int
    allpairs_st: int

    def allpairs(self, family: str) -> int:
        return self.allpairs_s if family == "s" else self.allpairs_st


class UsageError(SierpinskiError):
    pass


def _caps(args: argparse.Namespace) -> Caps:
    chosen = {
        "enum_cap": args.enum_cap,
        "tri_cap": args.tri_cap,
        "allpairs_s": args.allpairs_cap if args.allpairs_cap is not None else DEFAULT_CAPS["allpairs_s"],
        "allpairs_st": args.allpairs_cap if args.allpairs_cap is not None else DEFAULT_CAPS["allpairs_st"],
    }
    if not args.unsafe_cap:
        for key, value in chosen.items():
            if value > DEFAULT_CAPS[key]:
                raise UsageError(f"cap {key}={value} is above the default {DEFAULT_CAPS[key]}; pass --unsafe-cap")
    return Caps(**chosen)


def _check_n(n: int, cap: int) -> None:
    if n < 0:
        raise UsageError(f"--n must be non-negative, got {n}")
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds cap {cap}")


def parse_range(text: str) -> list[int]:
    """``"2..4"`` -> [2, 3, 4]; ``"1,3"`` -> [1, 3]; ``"5"`` -> [5]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order range {text!r}") from None
    if any(n < 0 for n in out):
        raise argparse.ArgumentTypeError(f"orders must be non-negative: {text!r}")
    return out


def cmd_generate(args: argparse.Namespace, caps: Caps) -> int:
    if args.family == "s":
        _check_n(args.n, caps.enum_cap)
        text = export.sierpinski_dot(args.n) if args.format == "dot" else export.sierpinski_edgelist(args.n)
    else:
        _check_n(args.n, caps.tri_cap)
        g = triangle.build_triangle(args.n)
        text = export.triangle_dot(g) if args.format == "dot" else export.triangle_edgelist(g)
    sys.stdout.write(text)
    return 0


def _word(text: str, n: int):
    w = parse_word(text)
    if w.length != n:
        raise UsageError(f"vertex {text!r} must have length {n} in S^{n}")
    return w


def _tri_vertex(text: str, n: int):
    v = triangle.parse_vertex(text)
    triangle.check_vertex(n, v)
    return v


def cmd_dist(args: argparse.Namespace, caps: Caps) -> int:
    if args.family == "s":
        _check_n(args.n, caps.enum_cap)
        s, t = _word(args.s, args.n), _word(args.t, args.n)
        methods = {
            "bfs": lambda: sierpinski.distance_bfs(args.n, s, t, cap=caps.enum_cap),
            "closed": lambda: sierpinski.distance_closed(args.n, s, t),
        }
    else:
        _check_n(args.n, caps.tri_cap)
        s, t = _tri_vertex(args.s, args.n), _tri_vertex(args.t, args.n)
        methods = {
            "bfs": lambda: triangle.distance_bfs_tri(triangle.build_triangle(args.n), s, t),
            "formula": lambda: triangle.distance_formula(args.n, s, t),
        }
    if args.method == "all":
        values = {name: fn() for name, fn in methods.items()}
        for name, value in values.items():
            print(f"{name} {value}")
        if len(set(values.values())) > 1:
            print("error: methods disagree", file=sys.stderr)
            return 1
        return 0
    if args.method not in methods:
        raise UsageError(f"method {args.method!r} is not available for family {args.family!r}")
    print(methods[args.method]())
    return 0


def _report(args: argparse.Namespace, caps: Caps):
    _check_n(args.n, caps.allpairs(args.family))
    if args.family == "s":
        graph = sierpinski.indexed_graph(args.n)
    else:
        graph = triangle.build_triangle(args.n).indexed()
    return compute_metrics(graph, threads=args.threads)


def cmd_metrics(args: argparse.Namespace, caps: Caps) -> int:
    report = _report(args, caps)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_csv())
    return 0


def cmd_median(args: argparse.Namespace, caps: Caps) -> int:
    report = _report(args, caps)
    if args.format == "json":
        data = report.to_dict()
        print(json.dumps({k: data[k] for k in ("order", "median", "proximity", "remoteness")}, indent=2))
    else:
        print(",".join(report.median))
        print(f"proximity={report.proximity} ({float(report.proximity):.6f})")
        print(f"remoteness={report.remoteness} ({float(report.remoteness):.6f})")
    return 0


def cmd_lift(args: argparse.Namespace, caps: Caps) -> int:
    _check_n(args.n, caps.tri_cap)
    for text in args.vertices:
        if not text.startswith("p") and len(text) == args.n + 1:
            print(f"{text} -> {triangle.project(args.n, parse_word(text))}")
        else:
            v = _tri_vertex(text, args.n)
            first, second = triangle.lift(args.n, v)
            print(f"{v} -> {first} {second}")
    return 0


def cmd_verify(args: argparse.Namespace, caps: Caps) -> int:
    if not args.all and not args.claim:
        raise UsageError("verify needs --all or at least one --claim")
    claims = None if args.all else args.claim
    results = verify.run_suite(
        args.n,
        claims,
        mode=args.mode,
        seed=args.seed,
        samples=args.samples,
        max_counterexamples=args.max_counterexamples,
        threads=args.threads,
    )
    text = verify.suite_report(results, mode=args.mode, seed=args.seed, samples=args.samples)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    for r in results:
        print(f"{r.claim:<10} n={r.n:<2} {r.status.value}", file=sys.stderr)
    return 1 if any(r.status is verify.Status.FAIL for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads for BFS fan-out")
    common.add_argument("--enum-cap", type=int, default=DEFAULT_CAPS["enum_cap"])
    common.add_argument("--tri-cap", type=int, default=DEFAULT_CAPS["tri_cap"])
    common.add_argument("--allpairs-cap", type=int, default=None, help="default 7 for S^n, 6 for the triangle graph")
    common.add_argument("--unsafe-cap", action="store_true", help="allow caps above the defaults")

    parser = argparse.ArgumentParser(prog="sierpinski-median", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family(p):
        p.add_argument("--family", choices=("s", "st"), required=True, help="s = S^n, st = triangle graph")
        p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("generate", parents=[common], help="emit a graph as an edge list or DOT")
    family(p)
    p.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("dist", parents=[common], help="distance between two vertices")
    family(p)
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--method", choices=("bfs", "closed", "formula", "all"), default="bfs")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("metrics", parents=[common], help="per-vertex metric table")
    family(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("median", parents=[common], help="median set, proximity and remoteness")
    family(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_median)

    p = sub.add_parser("lift", parents=[common], help="lift triangle vertices to S^{n+1} edges (or project words)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("vertices", nargs="+", help="p0/p1/p2, a word of length 1..n, or a word of length n+1 to project")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", parents=[common], help="run the claim verification suite")
    p.add_argument("--all", action="store_true")
    p.add_argument("--claim", action="append", choices=sorted(verify.CLAIMS))
    p.add_argument("--n", type=parse_range, required=True, help="e.g. 2..4 or 1,3")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=verify.DEFAULT_SAMPLES)
    p.add_argument("--max-counterexamples", type=int, default=verify.MAX_COUNTEREXAMPLES)
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = _caps(args)
        return args.func(args, caps)
    except SierpinskiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
