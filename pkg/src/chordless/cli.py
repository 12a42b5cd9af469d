"""Command line: ``chordless {check,enum,gen,oracle,bench}``.

Exit status is 0 for an orientable graph, 1 for a non-orientable one and 2
for unusable input.  ``oracle`` exits 3 when the oracles and the reducer
disagree.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .generator import GenParams, GeneratorError, gen_co_graph, generate
from .graph import Graph, ParseError, canonicalize, read_graph
from .oracle import (
    DEFAULT_MAX_EDGES,
    OracleRangeError,
    brute_chordless_cycles,
    brute_is_co,
    decompose_is_co,
)
from .reducer import Verdict, enumerate_chordless_cycles

EXIT_CO, EXIT_NOT_CO, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3
ORACLE_MAX_VERTICES = 25
DEFAULT_SIZES = "1000,2000,4000,8000,16000,32000,64000"


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except ParseError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"{path}: {exc.strerror}", file=sys.stderr)
    raise SystemExit(EXIT_INPUT)


def _labelled(g: Graph, cycles) -> list[list[int]]:
    """Cycles in external labels, canonical and sorted."""
    lab = g.labels
    return sorted(list(canonicalize([lab[v] for v in c])) for c in cycles)


def _run(g: Graph, threads: int) -> tuple[Verdict, float]:
    t0 = time.perf_counter()
    verdict = enumerate_chordless_cycles(g, workers=threads)
    return verdict, (time.perf_counter() - t0) * 1000.0


def cmd_check(args) -> int:
    g = _load(args.input)
    verdict, _ = _run(g, args.threads)
    print(verdict)
    return EXIT_CO if verdict.co else EXIT_NOT_CO


def cmd_enum(args) -> int:
    g = _load(args.input)
    verdict, ms = _run(g, args.threads)
    cycles = _labelled(g, verdict.cycles)
    if args.json:
        doc = {
            "co": verdict.co,
            "n": g.n,
            "m": g.m,
            "cycles": cycles,
            "components": [r.cycles for r in verdict.components],
            "duration_ms": round(ms, 3),
        }
        if not verdict.co:
            doc["reason"] = str(verdict.reason)
        print(json.dumps(doc))
    else:
        lines = [str(verdict)]
        lines.extend(" ".join(map(str, c)) for c in cycles)
        print("\n".join(lines))
    return EXIT_CO if verdict.co else EXIT_NOT_CO


def cmd_gen(args) -> int:
    try:
        p = GenParams(args.attachments, args.min_len, args.max_len, args.seed, not args.non_co)
    except ValueError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        _, text = generate(p)
    except GeneratorError as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    g = _load(args.input)
    if g.n > ORACLE_MAX_VERTICES:
        print(f"oracle out of range: n={g.n} > {ORACLE_MAX_VERTICES}", file=sys.stderr)
        return EXIT_INPUT
    brute = brute_chordless_cycles(g)
    decomp = decompose_is_co(g)
    try:
        orient: bool | None = brute_is_co(g, args.max_edges)
    except OracleRangeError:
        orient = None
    verdict, _ = _run(g, 1)

    print(f"chordless_cycles {len(brute)}")
    for c in _labelled(g, brute):
        print(" ".join(map(str, c)))
    print(f"decompose_is_co {str(decomp).lower()}")
    if orient is None:
        print(f"brute_is_co skipped (oracle out of range: m={g.m} > {args.max_edges})")
    else:
        print(f"brute_is_co {str(orient).lower()}")
    print(f"reducer {verdict}")

    problems = []
    if orient is not None and orient != decomp:
        problems.append("brute_is_co disagrees with decompose_is_co")
    if verdict.co != decomp:
        problems.append("reducer verdict disagrees with decompose_is_co")
    if verdict.co and sorted(verdict.cycles) != brute:
        problems.append("reducer cycle set differs from brute force")
    for msg in problems:
        print(f"MISMATCH: {msg}", file=sys.stderr)
    if problems:
        return EXIT_DISAGREE
    print("agreement ok")
    return 0


def loglog_slope(ns, durations) -> float:
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.maximum(np.asarray(durations, dtype=float), 1e-9))
    return float(np.polyfit(x, y, 1)[0])


def bench_rows(sizes, seed: int, min_len: int = 3, max_len: int = 6, repeat: int = 3):
    """Yield ``(n, m, cycles, duration_ms)`` for a generated graph per size."""
    growth = (min_len + max_len) / 2 - 2
    for size in sizes:
        attach = max(0, math.ceil((size - (min_len + max_len) / 2) / growth))
        g = gen_co_graph(GenParams(attach, min_len, max_len, seed))
        best = math.inf
        for _ in range(repeat):
            verdict, ms = _run(g, 1)
            best = min(best, ms)
        if not verdict.co:
            raise RuntimeError(f"generated graph of size {size} rejected: {verdict}")
        yield g.n, g.m, len(verdict.cycles), best


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        print("bench: --sizes must be a comma-separated list of integers", file=sys.stderr)
        return EXIT_INPUT
    if sizes != sorted(sizes):
        print("bench: sizes must be ascending", file=sys.stderr)
        return EXIT_INPUT
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    ns, ds = [], []
    try:
        print("n,m,cycles,duration_ms", file=out)
        for n, m, cycles, ms in bench_rows(sizes, args.seed, args.min_len, args.max_len, args.repeat):
            print(f"{n},{m},{cycles},{ms:.3f}", file=out, flush=True)
            ns.append(n)
            ds.append(ms)
    finally:
        if out is not sys.stdout:
            out.close()
    if len(ns) >= 2:
        print(f"loglog slope {loglog_slope(ns, ds):.3f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordless",
        description="Cyclically orientable graph recognition and chordless cycle listing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print CO or NOT_CO <reason>")
    p.add_argument("input")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enum", help="list chordless cycles of a CO graph")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("gen", help="generate a CO (or non-CO) graph")
    p.add_argument("--attachments", type=int, default=10)
    p.add_argument("--min-len", type=int, default=3)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--non-co", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="cross-check against brute-force oracles")
    p.add_argument("input")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time enumeration on generated graphs (CSV)")
    p.add_argument("--sizes", default=DEFAULT_SIZES)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--min-len", type=int, default=3)
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
