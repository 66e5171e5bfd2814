"""Command-line front end with stable line-oriented text formats.

Formats (ASCII decimal, LF line endings, 1-based labels):

  DAG file      header ``n m``, then m lines ``u v`` for the edge u->v.
                Canonical output lists edges in lexicographic (u, v)
                order. Self-loops and duplicate edges are parse errors.
  sequence file header ``n``, then exactly n-1 lines; line k holds the
                elements of S_k ascending, space-separated; an empty set
                is an empty line.
  tree file     header ``n``, then n-1 lines ``u v`` (undirected).

Subcommands: encode (DAG file -> sequence file), decode (sequence file ->
DAG file), validate (exit code only), count N, selftest N_MAX, bridge
(tree file -> oriented DAG + sequence + MATCH line). Every file argument
may be ``-`` for standard input.

Exit codes: 0 success, 1 malformed input, 2 semantic violation (directed
cycle or prefix-union violation), 3 selftest mismatch.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import codec, counting, prufer
from .errors import CyclicGraph, DagCodecError, InvalidSequence, NotATree
from .graphs import (
    LabeledDag,
    SetSequence,
    make_dag,
    make_sequence,
    validate_sequence,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_SEMANTIC = 2
EXIT_SELFTEST = 3

COUNT_MAX_N = 1000  # keeps the quadratic big-integer evaluation bounded


class ParseError(DagCodecError):
    """Malformed input file (wrong shape, bad tokens, bad labels)."""


# ---------------------------------------------------------------------------
# parsing and serialization


def _lines(text: str) -> list[str]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline convention
    return lines


def _ints(line: str, expect: int, what: str) -> list[int]:
    tokens = line.split()
    if len(tokens) != expect:
        raise ParseError(f"{what}: expected {expect} fields, got {len(tokens)} in {line!r}")
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"{what}: non-integer token in {line!r}") from None


def parse_dag_file(text: str) -> LabeledDag:
    """Parse a DAG file; raises ParseError or CyclicGraph."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input, expected 'n m' header")
    n, m = _ints(lines[0], 2, "header")
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}")
    if m < 0:
        raise ParseError(f"edge count must be >= 0, got {m}")
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(lines) - 1} lines follow")
    edges = []
    seen = set()
    for line in lines[1:]:
        u, v = _ints(line, 2, "edge")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}): label out of range 1..{n}")
        if u == v:
            raise ParseError(f"self-loop edge ({u}, {v}) not allowed")
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return make_dag(n, edges)  # may raise CyclicGraph


def format_dag_file(g: LabeledDag) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_seq_file(text: str) -> SetSequence:
    """Parse a sequence file; raises ParseError."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input, expected 'n' header")
    (n,) = _ints(lines[0], 1, "header")
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}")
    if len(lines) - 1 != n - 1:
        raise ParseError(f"expected {n - 1} set lines for n={n}, got {len(lines) - 1}")
    sets = []
    for k, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        try:
            elements = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"set S_{k}: non-integer token in {line!r}") from None
        for x in elements:
            if not 1 <= x <= n:
                raise ParseError(f"set S_{k}: label {x} out of range 1..{n}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise ParseError(f"set S_{k}: elements must be strictly ascending in {line!r}")
        sets.append(elements)
    return make_sequence(n, sets)


def format_seq_file(s: SetSequence) -> str:
    out = [str(s.n)]
    out.extend(" ".join(str(x) for x in elements) for elements in s.sorted_sets())
    return "\n".join(out) + "\n"


def parse_tree_file(text: str) -> prufer.LabeledTree:
    """Parse a tree file; raises ParseError or NotATree."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input, expected 'n' header")
    (n,) = _ints(lines[0], 1, "header")
    if n < 2:
        raise ParseError(f"trees need at least 2 vertices, got {n}")
    if len(lines) - 1 != n - 1:
        raise ParseError(f"a tree on {n} vertices has {n - 1} edges, got {len(lines) - 1} lines")
    edges = []
    for line in lines[1:]:
        u, v = _ints(line, 2, "edge")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"edge ({u}, {v}): label out of range 1..{n}")
        if u == v:
            raise ParseError(f"self-loop edge ({u}, {v}) not allowed")
        edges.append((u, v))
    return prufer.make_tree(n, edges)  # may raise NotATree


# ---------------------------------------------------------------------------
# subcommands


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def cmd_encode(path: str) -> int:
    g = parse_dag_file(_read(path))
    sys.stdout.write(format_seq_file(codec.encode(g)))
    return EXIT_OK


def cmd_decode(path: str) -> int:
    s = parse_seq_file(_read(path))
    g = codec.decode(s)  # raises InvalidSequence with the failing prefix
    sys.stdout.write(format_dag_file(g))
    return EXIT_OK


def cmd_validate(path: str) -> int:
    s = parse_seq_file(_read(path))
    return EXIT_OK if validate_sequence(s) else EXIT_SEMANTIC


def cmd_count(n_text: str) -> int:
    try:
        n = int(n_text)
    except ValueError:
        raise ParseError(f"count needs an integer, got {n_text!r}") from None
    if not 0 <= n <= COUNT_MAX_N:
        raise ParseError(f"count supports 0..{COUNT_MAX_N}, got {n}")
    sys.stdout.write(f"{counting.robinson_count(n)}\n")
    return EXIT_OK


def cmd_bridge(path: str) -> int:
    t = parse_tree_file(_read(path))
    oriented = prufer.orient_tree(t)
    direct = prufer.bridge_sequence(t)
    via_codec = codec.encode(oriented)
    sys.stdout.write(format_dag_file(oriented))
    sys.stdout.write(format_seq_file(direct))
    sys.stdout.write("MATCH\n" if via_codec == direct else "MISMATCH\n")
    return EXIT_OK if via_codec == direct else EXIT_SELFTEST


def cmd_selftest(n_max_text: str, quiet: bool = False) -> int:
    """Cross-check every counting path and both round-trips up to n_max.

    Exhaustively re-derives the DAG counts three ways (recursion, graph
    scan, sequence scan), round-trips every enumerated object through the
    codec, and replays the Prufer bridge over all trees on up to
    n_max + 1 vertices (via Cayley-complete code enumeration).
    """
    try:
        n_max = int(n_max_text)
    except ValueError:
        raise ParseError(f"selftest needs an integer, got {n_max_text!r}") from None
    if not 1 <= n_max <= counting.ENUMERATION_MAX_N:
        raise ParseError(
            f"selftest supports 1..{counting.ENUMERATION_MAX_N}, got {n_max}"
        )

    def emit(line: str) -> None:
        if not quiet:
            sys.stdout.write(line + "\n")

    ok = True

    def verdict(label: str, passed: bool) -> None:
        nonlocal ok
        ok = ok and passed
        emit(f"{label}: {'PASS' if passed else 'FAIL'}")

    counts_agree = True
    roundtrip_dag = True
    roundtrip_seq = True
    for n in range(1, n_max + 1):
        recursion = counting.robinson_count(n)
        dags = 0
        for g in counting.enumerate_dags(n):
            dags += 1
            if codec.decode(codec.encode(g)) != g:
                roundtrip_dag = False
        seqs = 0
        for s in counting.enumerate_sequences(n):
            seqs += 1
            if codec.encode(codec.decode(s)) != s:
                roundtrip_seq = False
        emit(f"n={n}: recursion={recursion} dags={dags} sequences={seqs}")
        if not recursion == dags == seqs:
            counts_agree = False
    verdict("counts agree (recursion = graph scan = sequence scan)", counts_agree)
    verdict("round-trip dag -> sequence -> dag", roundtrip_dag)
    verdict("round-trip sequence -> dag -> sequence", roundtrip_seq)

    bridge_ok = True
    tree_max = n_max + 1
    for n in range(2, tree_max + 1):
        for t in _all_trees(n):
            if codec.encode(prufer.orient_tree(t)) != prufer.bridge_sequence(t):
                bridge_ok = False
            if prufer.prufer_decode(n, prufer.prufer_encode(t).code) != t:
                bridge_ok = False
    verdict(f"prufer bridge equality (trees on 2..{tree_max} vertices)", bridge_ok)

    return EXIT_OK if ok else EXIT_SELFTEST


def _all_trees(n: int):
    """Every labeled tree on 1..n, one per Prufer code (n^(n-2) total)."""
    from itertools import product

    for code in product(range(1, n + 1), repeat=n - 2):
        yield prufer.prufer_decode(n, code)


# ---------------------------------------------------------------------------
# dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dagcodec",
        description="Codec between labeled DAGs and prefix-bounded set sequences.",
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="suppress report output (exit codes only)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="DAG file -> canonical sequence file")
    p.add_argument("path", help="DAG file, or - for stdin")

    p = sub.add_parser("decode", help="sequence file -> canonical DAG file")
    p.add_argument("path", help="sequence file, or - for stdin")

    p = sub.add_parser("validate", help="check the prefix-union bound; exit code only")
    p.add_argument("path", help="sequence file, or - for stdin")

    p = sub.add_parser("count", help="print the number of DAGs on N labeled vertices")
    p.add_argument("n", help=f"vertex count, 0..{COUNT_MAX_N}")

    p = sub.add_parser("selftest", help="cross-check counts, round-trips and the bridge")
    p.add_argument("n_max", help=f"largest vertex count to scan, 1..{counting.ENUMERATION_MAX_N}")

    p = sub.add_parser("bridge", help="orient a tree, print DAG + sequence + MATCH line")
    p.add_argument("path", help="tree file, or - for stdin")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "encode":
            return cmd_encode(args.path)
        if args.command == "decode":
            return cmd_decode(args.path)
        if args.command == "validate":
            return cmd_validate(args.path)
        if args.command == "count":
            return cmd_count(args.n)
        if args.command == "selftest":
            return cmd_selftest(args.n_max, quiet=args.quiet)
        if args.command == "bridge":
            return cmd_bridge(args.path)
        raise AssertionError(f"unhandled command {args.command}")
    except (CyclicGraph, InvalidSequence) as exc:
        print(f"dagcodec: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (DagCodecError, OSError, UnicodeDecodeError) as exc:
        print(f"dagcodec: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
