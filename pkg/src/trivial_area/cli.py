"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import oracle
from .power_area import solve_powers, theorem2_check
from .spelling import area_free_trivial
from .subset_sum import zero_subset
from .suites import bench, exhaustive_suite, random_suite
from .witness import (
    POWERS, TRIVIAL, Matching, validate_matching, validate_partition, witness_json,
)
from .word import WordSyntaxError, cyclic_canonicalize, format_word, parse_word

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2


def _emit(obj: dict) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def run_area(text: str, presentation: str, oracle_check: bool) -> tuple[dict, bool]:
    """Build the run report for one word; the flag is False on any verification failure."""
    w = parse_word(text)
    t0 = time.perf_counter()
    if presentation == TRIVIAL:
        area, wit = area_free_trivial(w)
        canon = cyclic_canonicalize(w)
        host = w
    else:
        sol = solve_powers(w)
        area, wit, canon = sol.area, sol.witness, sol.canonical
        host = canon.word
    elapsed = (time.perf_counter() - t0) * 1e3

    if isinstance(wit, Matching):
        ok, implied = validate_matching(host, wit)
    else:
        ok, implied = validate_partition(host, wit)
    verified = ok and implied == area

    report = {"input": text}
    report.update(witness_json(host, presentation, area, wit))
    report["canonical"] = {
        "kind": canon.kind,
        "word": format_word(canon.word, "caret"),
        "rotation": canon.rotation,
        "cancelled_pairs": canon.cancelled_pairs,
        "conjugator": canon.conjugator.text,
        "source_positions": list(canon.source_positions),
    }
    report["witness_valid"] = verified
    agreement = None
    if oracle_check and len(w) <= oracle.MAX_ORACLE_LEN:
        fn = oracle.oracle_area_trivial if presentation == TRIVIAL else oracle.oracle_area_powers
        agreement = fn(w) == area
        verified = verified and agreement
    report["oracle_agreement"] = agreement
    report["time_ms"] = round(elapsed, 3)
    return report, verified


def cmd_area(args) -> int:
    texts = [args.word] if args.word is not None else [
        line.strip() for line in sys.stdin if line.strip()
    ]
    status = EXIT_OK
    for text in texts:
        try:
            report, verified = run_area(text, args.presentation, args.oracle_check)
        except WordSyntaxError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        if not verified:
            status = EXIT_VERIFY
        if args.json:
            _emit(report)
            continue
        print(f"area {report['area']}")
        if args.witness:
            c = report["canonical"]
            print(f"canonical {c['kind']} {c['word'] or '(empty)'} "
                  f"rotation={c['rotation']} cancelled_pairs={c['cancelled_pairs']}")
            print(f"word {report['word'] or '(empty)'}")
            if "matching" in report:
                print("matching " + " ".join(f"({p},{q})" for p, q in report["matching"]))
            else:
                for b in report["partition"]:
                    print(f"block {b['letter']} {' '.join(map(str, b['positions']))}")
        if report["oracle_agreement"] is not None:
            print(f"oracle agreement {str(report['oracle_agreement']).lower()}")
        elif args.oracle_check:
            print("oracle skipped (word too long)")
        if not report["witness_valid"]:
            print("witness validation FAILED", file=sys.stderr)
    return status


def cmd_subset_sum(args) -> int:
    if any(v == 0 for v in args.integers):
        print("error: entries must be nonzero", file=sys.stderr)
        return EXIT_INPUT
    exists, wit = zero_subset(args.integers)
    report = {"values": args.integers, "exists": exists, "witness": list(wit) if wit else None}
    status = EXIT_OK
    if args.theorem2:
        if not args.integers:
            print("error: --theorem2 needs at least one integer", file=sys.stderr)
            return EXIT_INPUT
        rep = theorem2_check(args.integers)
        report["theorem2"] = {
            "word": format_word(rep.word, "caret"),
            "k": len(rep.exponents),
            "area": rep.area,
            "equivalence_holds": rep.equivalence_holds,
            "upper_bound_holds": rep.upper_bound_holds,
        }
        if not (rep.equivalence_holds and rep.upper_bound_holds):
            status = EXIT_VERIFY
    if args.json:
        _emit(report)
        return status
    print(f"exists {str(exists).lower()}" + (f" ({', '.join(map(str, wit))})" if wit else ""))
    if args.theorem2:
        t = report["theorem2"]
        print(f"word {t['word']}")
        print(f"area {t['area']} (k = {t['k']})")
        print("equivalence " + ("holds" if t["equivalence_holds"] else "FAILS"))
        print("upper bound k+1 " + ("holds" if t["upper_bound_holds"] else "FAILS"))
    return status


def cmd_selftest(args) -> int:
    if args.max_len > oracle.MAX_ORACLE_LEN:
        print(f"error: --max-len must be <= {oracle.MAX_ORACLE_LEN}", file=sys.stderr)
        return EXIT_INPUT
    exhaustive_len = min(args.max_len, 8)
    results = []
    for i, mode in enumerate((TRIVIAL, POWERS)):
        results.append(exhaustive_suite(exhaustive_len, mode))
        results.append(random_suite(args.samples, args.max_len, mode, args.seed + i))
    failed = False
    for res in results:
        if args.json:
            _emit({"suite": res.name, "checked": res.checked, "failures": res.failures,
                   "ok": res.ok})
        else:
            print(res.summary(timing=False))
            for f in res.failures:
                print(f"  {f}")
        failed |= not res.ok
    if not args.json:
        print("selftest " + ("FAILED" if failed else "passed"))
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_bench(args) -> int:
    max_n = args.max_n or (1024 if args.presentation == TRIVIAL else 512)
    res = bench(max_n, args.presentation, seed=args.seed)
    if args.json:
        _emit({"presentation": res.presentation, "sizes": res.sizes,
               "seconds": res.seconds, "slope": res.slope})
        return EXIT_OK
    print(f"{'n':>6}  {'ms':>12}")
    for n, s in zip(res.sizes, res.seconds):
        print(f"{n:>6}  {s * 1e3:>12.3f}")
    if res.slope is None:
        print("slope: insufficient range")
    else:
        print(f"fitted exponent {res.slope:.2f} (sizes {res.sizes[-4]}..{res.sizes[-1]})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivial-area",
        description="Exact area in <a,b | a,b> and <a,b | a^k,b^k>.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area", help="area of a word (reads stdin lines if no word given)")
    p.add_argument("word", nargs="?")
    p.add_argument("--presentation", choices=(TRIVIAL, POWERS), default=TRIVIAL)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle-check", action="store_true")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("subset-sum", help="nonempty zero-sum subset of nonzero integers")
    p.add_argument("integers", type=int, nargs="*")
    p.add_argument("--theorem2", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_subset_sum)

    p = sub.add_parser("selftest", help="differential tests against the brute-force oracles")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time the dynamic programs and fit the growth exponent")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--presentation", choices=(TRIVIAL, POWERS), default=TRIVIAL)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
