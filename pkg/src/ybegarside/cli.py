"""Command-line interface.

Exit codes: 0 success, 1 invalid solution, 2 usage error, 3 size guard
exceeded, 4 a brace-law or oracle check failed. Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import perm as P
from .brace import DEFAULT_SEED, BraceView, verify_brace_laws
from .errors import GuardExceeded, IndexOutOfRange, SolutionError, YBEError
from .group import DEFAULT_MAX_GERM, build_germ, coset_tables
from .oracle import DEFAULT_MAX_BALL, check_counts, check_pi_injectivity, check_span_stabilization
from .rep import decompose, dimension_report, psi, spanning_set
from .solution import SolutionTable, load_solution, profile

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_GUARD, EXIT_CHECK_FAILED = 0, 1, 2, 3, 4

FIXTURES = ("example15", "p3", "trivial1", "trivial2", "trivial3")


def fixture_path(name: str) -> Path:
    """Path of a bundled solution file, e.g. ``fixture_path("p3")``."""
    name = name[:-5] if name.endswith(".json") else name
    if name not in FIXTURES:
        raise FileNotFoundError(name)
    return Path(str(resources.files("ybegarside") / "data" / f"{name}.json"))


def read_solution(arg: str) -> SolutionTable:
    path = Path(arg)
    if not path.exists():
        try:
            path = fixture_path(path.name)
        except FileNotFoundError:
            raise SolutionError(f"no such file: {arg}") from None
    return load_solution(path.read_text(encoding="utf-8"))


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _word(s: str) -> list[int]:
    return [int(tok) for tok in s.replace(",", " ").split()]


def cmd_validate(args) -> int:
    S = read_solution(args.file)
    print(f"valid: n = {S.n}")
    return EXIT_OK


def cmd_info(args) -> int:
    pr = profile(read_solution(args.file))
    if args.json:
        print(_dump(pr.to_dict()))
        return EXIT_OK
    print(f"n                      = {pr.n}")
    print(f"class m                = {pr.class_m}")
    print(f"D                      = {P.one_based(pr.D_table)}")
    print(f"condition (C)          = {pr.satisfies_C}")
    print(f"square-free            = {pr.square_free}")
    print(f"retraction sizes       = {list(pr.retraction_levels)}")
    print(f"multipermutation level = {pr.multipermutation_level}")
    for k, w in enumerate(pr.frozen_words):
        print(f"theta{k + 1} = " + "".join(f"x{x + 1}" for x in w))
    return EXIT_OK


def cmd_germ(args) -> int:
    G = build_germ(read_solution(args.file), args.max_germ)
    rows = [
        {"vector": list(v), "permutation": P.one_based(G.table[v]), "word": P.one_based(G.witness[v])}
        for v in sorted(G.table)
    ]
    if args.json:
        print(_dump(rows if args.list else {"m": G.m, "n": G.n, "size": G.size}))
    elif args.list:
        for r in rows:
            print(" ".join(map(str, r["vector"])), "|", " ".join(map(str, r["permutation"])), "|",
                  " ".join(map(str, r["word"])))
    else:
        print(f"germ size = {G.size} = {G.m}^{G.n}")
    return EXIT_OK


def cmd_brace_check(args) -> int:
    G = build_germ(read_solution(args.file), args.max_germ)
    report = verify_brace_laws(BraceView(G), seed=args.seed)
    if args.json:
        print(_dump(report.to_dict()))
    else:
        print(f"{'PASS' if report.passed else 'FAIL'}: {report.triples_checked} triples ({report.mode})")
        if not report.passed:
            print(f"  law {report.failed_law!r} fails on {report.counterexample}")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_rep(args) -> int:
    S = read_solution(args.file)
    G = build_germ(S, args.max_germ)
    span = spanning_set(G, coset_tables(G))
    report = dimension_report(S, germ=G)
    doc = {
        "n": S.n,
        "m": G.m,
        "dimension": report.dimension,
        "basis_indices": list(report.basis_indices),
        "spanning_set": [lm.to_dict() for lm in span],
    }
    text = _dump(doc)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"wrote {len(span)} matrices to {args.out}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


def cmd_dim(args) -> int:
    report = dimension_report(read_solution(args.file), args.max_germ)
    if args.json:
        print(_dump(report.to_dict()))
        return EXIT_OK
    print(f"dimension = {report.dimension} (bound {report.bound})")
    print(f"n = {report.n}, m = {report.m}, |IYB| = {report.iyb_order}")
    for i, label in enumerate(report.spanning_labels):
        mark = "*" if i in report.basis_indices else " "
        print(f"  {mark} {label}")
    print(f"simples alone: rank {report.simples_only_rank}"
          f" ({'spans' if report.simples_span else 'does not span'})")
    return EXIT_OK


def cmd_oracle(args) -> int:
    S = read_solution(args.file)
    G = build_germ(S, args.max_germ)
    inj = check_pi_injectivity(S, args.radius)
    counts = check_counts(S, germ=G)
    stab = check_span_stabilization(S, args.radius, args.max_ball, germ=G)
    ok = inj.passed and counts.passed and stab.agrees
    if args.json:
        print(_dump({"passed": ok, "injectivity": inj.to_dict(), "counts": counts.to_dict(),
                     "stabilization": stab.to_dict()}))
    else:
        print(f"pi injectivity (radius {inj.radius}): {'pass' if inj.passed else 'FAIL'}"
              f" ({inj.words_checked} words, {inj.distinct_vectors} vectors)")
        print(f"counts: {'pass' if counts.passed else 'FAIL'} {counts.counts}")
        for f in counts.failures:
            print(f"  {f}")
        print(f"span ranks by radius: {list(stab.ranks)} -> dimension {stab.dimension}:"
              f" {'agrees' if stab.agrees else 'DISAGREES'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_element(args) -> int:
    S = read_solution(args.file)
    G = build_germ(S, args.max_germ)
    word = [x - 1 for x in _word(args.word)]
    if any(not 0 <= x < S.n for x in word):
        raise IndexOutOfRange(f"word letters must lie in 1..{S.n}")
    g = G.from_word(word)
    s, alpha = decompose(G, g)
    doc = {
        "word": P.one_based(word),
        "vector": list(g.vec),
        "phi": P.one_based(G.phi(g)),
        "psi": psi(G, g).tolist(),
        "simple": {"vector": list(s.vec), "word": P.one_based(G.witness[s.vec])},
        "alpha": list(alpha),
    }
    if args.json:
        print(_dump(doc))
        return EXIT_OK
    print(f"vector = {doc['vector']}")
    print(f"phi    = {doc['phi']}")
    print("psi    =")
    for row in doc["psi"]:
        print("  " + " ".join(f"{v:3d}" for v in row))
    print(f"simple = {doc['simple']['vector']} (word {doc['simple']['word']}), alpha = {doc['alpha']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybegarside",
        description="Garside invariants and matrix-span dimension for involutive YBE solutions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        p.add_argument("file", help="solution JSON file, or a bundled fixture name (e.g. p3.json)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-germ", type=int, default=DEFAULT_MAX_GERM,
                       help="largest germ size m^n to build (default %(default)s)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the solution axioms")
    add("info", cmd_info, "class, diagonal map, frozen words, retraction")
    add("germ", cmd_germ, "the m^n simple elements").add_argument(
        "--list", action="store_true", help="one line per simple: vector | permutation | word")
    add("brace-check", cmd_brace_check, "verify the left brace laws").add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="seed for sampled triples (default %(default)s)")
    add("rep", cmd_rep, "export the spanning matrices").add_argument(
        "--out", help="write JSON here instead of stdout")
    add("dim", cmd_dim, "dimension of the span of the matrix image")
    p = add("oracle", cmd_oracle, "brute-force cross-checks")
    p.add_argument("--radius", type=int, default=4, help="word length for the checks (default %(default)s)")
    p.add_argument("--max-ball", type=int, default=DEFAULT_MAX_BALL,
                   help="largest ball to enumerate (default %(default)s)")
    add("element", cmd_element, "vector, phi, psi and decomposition of a word").add_argument(
        "--word", required=True, help='letters 1..n, e.g. "1 2"')
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (SolutionError, IndexOutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except YBEError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
