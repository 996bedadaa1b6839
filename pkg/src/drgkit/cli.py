"""Command-line interface: analyze, check, enumerate, reproduce-table1,
corpus-verify.

Exit codes: 0 success, 1 verification/reproduction failure (or a failing
check verdict), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .checks import ArrayAnalysis, full_report
from .core import ArrayFormatError, format_array, parse_array
from .exact import surd_string
from .corpus import CorpusSchemaError, builtin_corpus, load_corpus, verify_entry
from .search import (
    NodeBudgetExceeded,
    SearchSpec,
    SearchWindow,
    enumerate_arrays,
    reproduce_table1,
)
from .spectral import standard_sequence


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def _exact_str(ev) -> str:
    return surd_string(ev) or _fmt12(float(ev))


def _input_array(args) -> object:
    sources = [s for s in (args.array, args.file, args.entry) if s]
    if len(sources) != 1:
        raise SystemExit2("exactly one of ARRAY, --file or --entry is required")
    if args.array:
        return parse_array(args.array)
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_array(fh.read())
    corpus = _default_corpus()
    for e in corpus:
        if e.name == args.entry:
            return e.array
    raise SystemExit2(f"no corpus entry named {args.entry!r}")


def _default_corpus():
    path = os.environ.get("DRGKIT_CORPUS")
    return load_corpus(path) if path else builtin_corpus()


class SystemExit2(Exception):
    """Usage error; converted to exit code 2."""


def cmd_analyze(args) -> int:
    arr = _input_array(args)
    an = ArrayAnalysis(arr)
    sp = an.spectrum
    der = an.derived
    if args.format == "json":
        payload = {
            "array": format_array(arr),
            "a": list(der.a),
            "k": [str(x) for x in der.kseq],
            "v": str(der.v),
            "flags": an.flags(),
            "spectrum": sp.to_json(),
            "standard_sequences": [
                {
                    "theta": _exact_str(ev),
                    "u": [_fmt12(float(x)) for x in seq.u],
                    "sign_changes": seq.sign_changes,
                }
                for ev in sp.eigenvalues
                for seq in [standard_sequence(arr, ev)]
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"array {format_array(arr)}   D = {arr.diameter}, k = {arr.k}")
    print(f"a = {der.a}")
    print(f"k_i = {tuple(str(x) for x in der.kseq)}, v = {der.v}")
    print("flags: " + ", ".join(f"{k}={str(v).lower()}" for k, v in an.flags().items()))
    print("eigenvalues:")
    for ev, m in zip(sp.eigenvalues, sp.multiplicities):
        exact = surd_string(ev) or "(degree > 2)"
        mult = str(m.exact) if m.exact is not None else \
            (str(m.candidate) if m.integral else f"~{m.value:.9g}")
        print(f"  theta = {_fmt12(float(ev)):>18}  exact {exact:>14}  mult {mult}")
    print("standard sequences (value: u_0..u_D, sign changes):")
    for ev in sp.eigenvalues:
        seq = standard_sequence(arr, ev)
        us = ", ".join(_fmt12(float(x)) for x in seq.u)
        print(f"  theta = {_fmt12(float(ev)):>18}: ({us})  changes = {seq.sign_changes}")
    return 0


def cmd_check(args) -> int:
    arr = _input_array(args)
    report = full_report(arr, args.conditions, args.strict_paper)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def _window(args) -> SearchWindow:
    lo = None if args.theta1_lo in (None, "", "none") else Fraction(args.theta1_lo)
    hi = None if args.theta1_hi in (None, "", "none") else Fraction(args.theta1_hi)
    return SearchWindow(lo, hi)


def cmd_enumerate(args) -> int:
    spec = SearchSpec(
        k_min=args.k_min, k_max=args.k_max, d_min=args.d_min, d_max=args.d_max,
        window=_window(args), conditions=args.conditions,
        strict_paper=args.strict_paper, parallelism=args.parallelism,
        node_budget=args.node_budget,
    )

    def stream(acc):
        if args.format == "json":
            print(json.dumps(acc.to_json()))
        else:
            print(f"accepted {format_array(acc.array)}")

    try:
        result = enumerate_arrays(spec, on_accept=stream)
    except NodeBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(result.summary_json()))
    else:
        print(f"accepted {len(result.accepted)} of {result.nodes} candidates "
              f"in {result.wall_seconds:.2f}s")
        for name, n in sorted(result.pruned.items()):
            print(f"  pruned by {name}: {n}")
        for name, n in sorted(result.rejected.items()):
            print(f"  rejected by {name}: {n}")
    return 0


def cmd_reproduce(args) -> int:
    rep = reproduce_table1(parallelism=args.parallelism,
                           small_k_d_max=args.d_max,
                           strict_paper=args.strict_paper)
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2))
    else:
        for name, res in rep.strata.items():
            print(f"stratum {name}: accepted {len(res.accepted)}, "
                  f"nodes {res.nodes}, {res.wall_seconds:.1f}s")
        print("missing:", ", ".join(format_array(a) for a in rep.missing) or "none")
        print("extra:", ", ".join(format_array(a) for a in rep.extra) or "none")
        print("result:", "ok" if rep.ok else "MISSING ARRAYS")
    return 0 if rep.ok else 1


def cmd_corpus_verify(args) -> int:
    entries = load_corpus(args.file) if args.file else _default_corpus()
    failures = []
    for e in entries:
        problems = verify_entry(e)
        status = "ok" if not problems else "MISMATCH"
        if e.spectrum is None:
            status = "skipped (no expected spectrum)"
        if args.format != "json":
            print(f"{e.name:>12}  {format_array(e.array):<24} {status}")
        failures += problems
    if args.format == "json":
        print(json.dumps({"entries": len(entries), "problems": failures}, indent=2))
    else:
        for p in failures:
            print("  " + p)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drgkit",
        description="Exact spectral analysis and feasibility search for "
                    "distance-regular graph intersection arrays.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_input(p):
        p.add_argument("array", nargs="?", default=None,
                       help="intersection array, e.g. '{3,2,2;1,1,3}'")
        p.add_argument("--file", help="file containing one array (text or JSON)")
        p.add_argument("--entry", help="name of a corpus entry")

    def add_conditions(p):
        p.add_argument("--conditions", choices=("basic", "paper"), default="paper")
        p.add_argument("--strict-paper", action="store_true",
                       help="disable the extra-paper conditions (parity, "
                            "antipodality-based identities)")

    p = sub.add_parser("analyze", help="spectrum, multiplicities, standard sequences")
    add_common(p); add_input(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("check", help="feasibility report")
    add_common(p); add_input(p); add_conditions(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("enumerate", help="bounded exhaustive search")
    add_common(p); add_conditions(p)
    p.add_argument("--k-min", type=int, default=3)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--d-min", type=int, default=3)
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--theta1-lo", default=None,
                   help="rational lower window bound (exclusive), e.g. '1'")
    p.add_argument("--theta1-hi", default=None,
                   help="rational upper window bound (inclusive), e.g. '2'")
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("reproduce-table1",
                       help="re-run the classification search and diff against "
                            "the builtin 23-row table")
    add_common(p)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--d-max", type=int, default=10,
                   help="diameter cap for the valency 3-4 stratum")
    p.add_argument("--strict-paper", action="store_true")
    p.set_defaults(fn=cmd_reproduce)

    p = sub.add_parser("corpus-verify",
                       help="check corpus spectra against the exact engine")
    add_common(p)
    p.add_argument("--file", help="corpus JSON path (default: DRGKIT_CORPUS "
                                  "or the builtin corpus)")
    p.set_defaults(fn=cmd_corpus_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (ArrayFormatError, CorpusSchemaError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
