"""Command-line front end.

Subcommands: compute (one partition), table (the full table up to n_max),
verify (formula and oracle cross-checks), stabilize (limit-series report).
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb

from . import counting, oracle
from .counting import ConsistencyError, factored_count, p_poly, r_poly
from .partitions import (
    Partition,
    PartitionError,
    dim_irrep,
    parse_symbolic,
    partitions_of,
    to_compact_symbolic,
    to_symbolic,
)
from .polynomial import IntPolynomial, bracketed, coeffs_to_strings, factor_out
from .stabilization import verify_stabilization

DEFAULT_TABLE_MAX_N = 40


def _load_config(path: str | None) -> dict[str, str]:
    config: dict[str, str] = {}
    if path:
        with open(path) as f:
            for line in f:
                line = line.strip()
                if line and not line.startswith("#") and "=" in line:
                    key, _, value = line.partition("=")
                    config[key.strip()] = value.strip()
    return config


def _cache_file(cache_dir: str) -> str:
    return os.path.join(cache_dir, "polynomials.json")


def load_poly_cache(cache_dir: str) -> None:
    """Populate the memo caches from cache_dir/polynomials.json if present."""
    path = _cache_file(cache_dir)
    if not os.path.exists(path):
        return
    with open(path) as f:
        data = json.load(f)
    for sym, coeffs in data.get("P", {}).items():
        counting._P_CACHE[parse_symbolic(sym).parts] = IntPolynomial(int(c) for c in coeffs)
    for sym, coeffs in data.get("R", {}).items():
        counting._R_CACHE[parse_symbolic(sym).parts] = IntPolynomial(int(c) for c in coeffs)


def save_poly_cache(cache_dir: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    data = {
        "P": {
            to_symbolic(Partition(parts)): coeffs_to_strings(poly.coeffs)
            for parts, poly in counting._P_CACHE.items()
        },
        "R": {
            to_symbolic(Partition(parts)): coeffs_to_strings(poly.coeffs)
            for parts, poly in counting._R_CACHE.items()
        },
    }
    with open(_cache_file(cache_dir), "w") as f:
        json.dump(data, f)


def _parse_lambda(text: str) -> Partition:
    try:
        return parse_symbolic(text)
    except PartitionError as exc:
        print(f"error: cannot parse partition {text!r}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _row_dict(lam: Partition) -> dict:
    fc = factored_count(lam)
    return {
        "lambda": to_symbolic(lam),
        "lambda_compact": to_compact_symbolic(lam),
        "d": fc.d,
        "e": fc.e,
        "r_coeffs": coeffs_to_strings(fc.r.coeffs),
    }


def cmd_compute(args) -> int:
    lam = _parse_lambda(args.partition)
    if not lam.parts:
        print("error: the empty partition has no count row", file=sys.stderr)
        return 2
    fc = factored_count(lam)
    if args.format == "json":
        row = _row_dict(lam)
        row["p_coeffs"] = coeffs_to_strings(fc.p.coeffs)
        row["deg_p"] = fc.p.degree
        row["deg_r"] = fc.r.degree
        row["dim_irrep"] = str(dim_irrep(lam))
        print(json.dumps(row))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["lambda", "d", "e", "r_coeffs"])
        writer.writerow([to_compact_symbolic(lam), fc.d, fc.e, " ".join(map(str, fc.r.coeffs))])
    else:
        print(f"{to_compact_symbolic(lam)} {fc.prefix} {bracketed(fc.r.coeffs)}")
        if args.verbose:
            print(f"deg P = {fc.p.degree}")
            print(f"deg R = {fc.r.degree}")
            print(f"dim V = {dim_irrep(lam)}")
    return 0


def table_rows(n_max: int, workers: int = 1) -> list[Partition]:
    lams = [lam for n in range(1, n_max + 1) for lam in partitions_of(n)]
    if workers > 1:
        # warm the memo caches in parallel; row order is fixed by lams
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(factored_count, lams))
    return lams


def cmd_table(args) -> int:
    if args.n_max > args.table_max_n:
        print(
            f"error: n_max {args.n_max} exceeds the table budget {args.table_max_n}",
            file=sys.stderr,
        )
        return 1
    lams = table_rows(args.n_max, workers=args.workers)
    if args.format == "json":
        print(json.dumps([_row_dict(lam) for lam in lams]))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["lambda", "d", "e", "r_coeffs"])
        for lam in lams:
            fc = factored_count(lam)
            writer.writerow(
                [to_compact_symbolic(lam), fc.d, fc.e, " ".join(map(str, fc.r.coeffs))]
            )
    else:
        for lam in lams:
            fc = factored_count(lam)
            print(f"{to_compact_symbolic(lam)} {fc.prefix} {bracketed(fc.r.coeffs)}")
    return 0


def render_table_text(n_max: int, workers: int = 1) -> str:
    out = io.StringIO()
    for lam in table_rows(n_max, workers=workers):
        fc = factored_count(lam)
        out.write(f"{to_compact_symbolic(lam)} {fc.prefix} {bracketed(fc.r.coeffs)}\n")
    return out.getvalue()


def _verify_formulas(n_max: int) -> list[dict]:
    checks = []
    bad_sum = [n for n in range(1, n_max + 1) if not counting.sum_identity_holds(n)]
    checks.append(
        {
            "name": "sum_identity",
            "pass": not bad_sum,
            "detail": f"failed at n = {bad_sum}" if bad_sum else f"n <= {n_max}",
        }
    )
    failures = []
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            try:
                factored_count(lam)
            except ConsistencyError as exc:
                failures.append(str(exc))
    checks.append(
        {
            "name": "factorization_and_formulas",
            "pass": not failures,
            "detail": failures[0] if failures else f"all partitions with n <= {n_max}",
        }
    )
    stab_failures = []
    for n in range(1, min(n_max, 9) + 1):
        for lam in partitions_of(n):
            alpha1 = sum(1 for p in lam.parts if p == 1)
            diff = r_poly(lam.extend_ones(1)) - r_poly(lam)
            if any(diff[k] for k in range(alpha1 + 1)):
                stab_failures.append(to_symbolic(lam))
    checks.append(
        {
            "name": "stabilization_divisibility",
            "pass": not stab_failures,
            "detail": f"failed for {stab_failures}" if stab_failures else f"n <= {min(n_max, 9)}",
        }
    )
    return checks


def _verify_oracle(n_max: int, q_list: list[int], workers: int, budget: int) -> list[dict]:
    checks = []
    for q in q_list:
        mismatches = []
        covered = []
        for n in range(1, n_max + 1):
            if q ** comb(n, 2) > budget:
                break
            tally = oracle.enumerate_counts(n, q, workers=workers, budget=budget)
            covered.append(n)
            for lam in partitions_of(n):
                expected = p_poly(lam)(q)
                got = tally.counts.get(lam, 0)
                if expected != got:
                    mismatches.append(f"{to_symbolic(lam)}: counted {got}, polynomial {expected}")
        checks.append(
            {
                "name": f"oracle_agreement_q{q}",
                "pass": not mismatches,
                "detail": mismatches[0] if mismatches else f"n in {covered}",
            }
        )
    return checks


def cmd_verify(args) -> int:
    checks = []
    if args.mode in ("formulas", "all"):
        checks.extend(_verify_formulas(args.n_max))
    if args.mode in ("oracle", "all"):
        q_list = [int(q) for q in args.q.split(",")]
        checks.extend(_verify_oracle(args.n_max, q_list, args.workers, args.budget))
    ok = all(c["pass"] for c in checks)
    if args.format == "json":
        print(json.dumps({"pass": ok, "checks": checks}))
    else:
        for c in checks:
            status = "PASS" if c["pass"] else "FAIL"
            print(f"{status} {c['name']}: {c['detail']}")
    return 0 if ok else 1


def cmd_stabilize(args) -> int:
    lam = _parse_lambda(args.partition)
    report = verify_stabilization(lam, k_max=args.k_max, order=args.order)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["k", "agreement_order"])
        for k, agree in zip(report.k_range, report.agreement_orders):
            writer.writerow([k, agree])
        writer.writerow(["limit", " ".join(map(str, report.limit.coeffs))])
    else:
        print(f"limit {bracketed(report.limit.coeffs)}")
        for k, agree in zip(report.k_range, report.agreement_orders):
            print(f"k={k}: agrees with k={k + 1} through degree {agree - 1}")
        print("pass" if report.passed else "FAIL")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcount",
        description="Count strictly upper-triangular matrices over F_q by Jordan type.",
    )
    parser.add_argument("--config", help="key=value config file", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="factored count for one partition")
    p.add_argument("partition", help="symbolic partition, e.g. '321' or '2^2 1^3'")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="table of all partitions with n <= n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run formula and oracle cross-checks")
    p.add_argument("--n-max", type=int, default=8, dest="n_max")
    p.add_argument("--q", default="2,3,5", help="comma-separated primes for the oracle")
    p.add_argument("--mode", choices=["formulas", "oracle", "all"], default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None, help="matrix-count guard")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stabilize", help="limit series and stabilization report")
    p.add_argument("partition")
    p.add_argument("--k-max", type=int, default=6, dest="k_max")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_stabilize)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _load_config(args.config)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = int(config.get("budget", oracle.DEFAULT_BUDGET))
    args.table_max_n = int(config.get("table_max_n", DEFAULT_TABLE_MAX_N))
    cache_dir = config.get("cache_dir")
    if cache_dir:
        load_poly_cache(cache_dir)
    try:
        code = args.func(args)
    except ConsistencyError as exc:
        print(f"FAIL internal consistency: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if cache_dir:
        save_poly_cache(cache_dir)
    return code


if __name__ == "__main__":
    sys.exit(main())
