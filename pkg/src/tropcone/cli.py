"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 semantic error (vector not
in the cone, violated precondition), 3 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path

from .cone import AffineSystem, dehomogenize, homogenize, satisfies
from .ddm import double_description, tropical_upper_bound, upper_bound
from .extremality import (
    ENUMERATION_CAP,
    EnumerationCapError,
    extreme_type,
    extreme_witness_oracle,
    zero_one_tangent_elements,
)
from .formats import (
    ParseError,
    VRep,
    format_vrep,
    parse_hrep,
    parse_hypergraph,
    parse_vector,
)
from .hypergraph import canonical_classes, scc_oracle
from .instances import RandomSpec, random_system
from .maxplus import BOTTOM, is_zero, sort_key
from .minscc import min_scc_count, minimal_classes

EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC, EXIT_MISMATCH = 0, 1, 2, 3

CSV_HEADER = [
    "label", "d", "n", "final_count", "mean_intermediate",
    "time_ms_hypergraph", "time_ms_residuation", "ratio",
]


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


class MismatchError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_extreme(args, out) -> int:
    S = parse_hrep(_read(args.input))
    if args.affine:
        if S.d < 2:
            raise SemanticError("affine mode needs at least one variable plus the constant column")
        # last column holds the constant terms c and e
        aff = AffineSystem(
            tuple(r[:-1] for r in S.A), tuple(r[-1] for r in S.A),
            tuple(r[:-1] for r in S.B), tuple(r[-1] for r in S.B), S.d - 1,
        )
        S = homogenize(aff)
    rays, trace = double_description(S, method=args.method, ordering=args.ordering)
    if args.affine:
        points, rs = dehomogenize(rays)
        vrep = VRep(S.d - 1, sorted(rs, key=sort_key), sorted(points, key=sort_key))
    else:
        vrep = VRep(S.d, rays)
    out.write(format_vrep(vrep))
    if args.stats:
        out.write("\n".join(trace.summary_lines()) + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    S = parse_hrep(_read(args.input))
    try:
        g = parse_vector(args.vector)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(g) != S.d:
        raise UsageError(f"vector has {len(g)} entries, system has dimension {S.d}")
    if is_zero(g) or not satisfies(S, g):
        out.write("not a member\n")
        return EXIT_SEMANTIC
    t = extreme_type(g, S)
    out.write(f"extreme, type {t + 1}\n" if t is not None else "not extreme\n")
    if args.oracle:
        try:
            elems = zero_one_tangent_elements(g, S, cap=args.cap)
            w = extreme_witness_oracle(g, S, cap=args.cap)
        except EnumerationCapError as exc:
            raise SemanticError(str(exc)) from None
        rendered = sorted(
            "".join("1" if v != BOTTOM else "0" for v in x) for x in elems
        )
        out.write(f"oracle: {'extreme' if w is not None else 'not extreme'}"
                  + (f", witness type {w + 1}" if w is not None else "") + "\n")
        out.write("oracle elements (1 = unit, 0 = -inf, over the support): "
                  + " ".join(sorted(rendered, reverse=True)) + "\n")
        if (w is None) != (t is None):
            raise MismatchError("hypergraph test and enumeration oracle disagree")
    return EXIT_OK


def _render_class(H, cls) -> str:
    return "{" + ",".join(H.label(v) for v in sorted(cls)) + "}"


def cmd_minscc(args, out) -> int:
    H = parse_hypergraph(_read(args.input))
    r = min_scc_count(H)
    classes = minimal_classes(r)
    noun = "minimal SCC" if r.nb == 1 else "minimal SCCs"
    out.write(f"{r.nb} {noun}: " + " ".join(_render_class(H, c) for c in classes) + "\n")
    if args.oracle:
        o = scc_oracle(H)
        if canonical_classes(o.minimal_classes) != canonical_classes(classes) or r.nb != len(o.minimal_classes):
            raise MismatchError("min_scc_count disagrees with the reachability oracle")
        out.write("oracle: agree\n")
    return EXIT_OK


def _parse_random(tokens: list[str]) -> dict:
    spec = {"count": 10, "seed": 0, "density": 0.5, "lo": -5, "hi": 5}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"expected key=value in --random, got {tok!r}")
        k, v = tok.split("=", 1)
        if k not in ("d", "n", "count", "seed", "density", "lo", "hi"):
            raise UsageError(f"unknown --random key {k!r}")
        try:
            spec[k] = float(v) if k == "density" else int(v)
        except ValueError:
            raise UsageError(f"bad value for {k}: {v!r}") from None
    if "d" not in spec or "n" not in spec:
        raise UsageError("--random needs d=<int> and n=<int>")
    return spec


def bench_row(spec: dict, residuation: bool = True) -> list:
    """One CSV row averaged over ``count`` seeded systems."""
    finals, inters, th, tr = [], [], [], []
    for i in range(spec["count"]):
        rs = RandomSpec(spec["d"], spec["n"], spec["density"], (spec["lo"], spec["hi"]),
                        seed=spec["seed"] * 1_000_003 + i)
        S = random_system(rs)
        t0 = time.perf_counter()
        rays, trace = double_description(S, "hypergraph")
        th.append(time.perf_counter() - t0)
        if residuation:
            t0 = time.perf_counter()
            rays2, _ = double_description(S, "residuation")
            tr.append(time.perf_counter() - t0)
            if rays2 != rays:
                raise MismatchError(f"methods disagree on {rs.describe()}")
        finals.append(len(rays))
        inters.append(trace.mean_intermediate)
    label = (f"rnd{spec['count']}-p{spec['density']:g}-r{spec['lo']}:{spec['hi']}"
             f"-s{spec['seed']}")
    mh = 1000 * statistics.fmean(th)
    mr = 1000 * statistics.fmean(tr) if tr else None
    return [
        label, spec["d"], spec["n"],
        f"{statistics.fmean(finals):g}", f"{statistics.fmean(inters):.3f}",
        f"{mh:.3f}", "" if mr is None else f"{mr:.3f}",
        "" if mr is None else f"{mh / mr:.4g}",
    ]


def cmd_bench(args, out) -> int:
    if not args.random:
        raise UsageError("bench needs at least one --random specification")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for tokens in args.random:
        writer.writerow(bench_row(_parse_random(tokens), residuation=not args.no_residuation))
    return EXIT_OK


def cmd_bound(args, out) -> int:
    if args.raw and args.n <= args.d:
        # no d-polytope has fewer than d + 1 facets
        raise SemanticError(f"--raw needs n > d, got n={args.n}, d={args.d}")
    try:
        value = upper_bound(args.n, args.d) if args.raw else tropical_upper_bound(args.n, args.d)
    except ValueError as exc:
        raise SemanticError(str(exc)) from None
    out.write(f"{value}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tropcone", description="Extreme rays of tropical polyhedral cones.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("extreme", help="compute the extreme rays of an H-representation")
    e.add_argument("input", help="H-representation file ('-' for stdin)")
    e.add_argument("--method", choices=("hypergraph", "residuation"), default="hypergraph")
    e.add_argument("--ordering", choices=("heuristic", "input"), default="heuristic")
    e.add_argument("--affine", action="store_true",
                   help="treat the last column as constant terms; emit points and rays")
    e.add_argument("--stats", action="store_true", help="append the elimination trace")
    e.set_defaults(func=cmd_extreme)

    c = sub.add_parser("check", help="test whether a vector is extreme")
    c.add_argument("input")
    c.add_argument("vector", help="e.g. '2,2,0' or '(2, 5/2, -inf)'")
    c.add_argument("--oracle", action="store_true", help="also run the {-inf,0} enumeration")
    c.add_argument("--cap", type=int, default=ENUMERATION_CAP)
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("minscc", help="count the minimal SCCs of a hypergraph")
    m.add_argument("input")
    m.add_argument("--oracle", action="store_true", help="cross-check with brute-force reachability")
    m.set_defaults(func=cmd_minscc)

    b = sub.add_parser("bench", help="benchmark both extremality tests on random cones (CSV)")
    b.add_argument("--random", nargs="+", action="append", metavar="KEY=VALUE",
                   help="d=, n=, count=, seed=, density=, lo=, hi=")
    b.add_argument("--no-residuation", action="store_true", help="skip the baseline method")
    b.set_defaults(func=cmd_bench)

    u = sub.add_parser("bound", help="upper bound on the number of extreme rays")
    u.add_argument("n", type=int)
    u.add_argument("d", type=int)
    u.add_argument("--raw", action="store_true", help="print McMullen's U(n, d) itself")
    u.set_defaults(func=cmd_bound)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"tropcone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemanticError as exc:
        print(f"tropcone: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except MismatchError as exc:
        print(f"tropcone: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"tropcone: error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
