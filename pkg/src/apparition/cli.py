"""Command-line surface.

Exit codes: 0 success, 1 invalid input (parse errors, excluded or
inadmissible parameters), 2 verification failure (a suite reported
violations).  All configuration is via flags; rationals use the strict
"a/b" format; decimals are fixed at six places.

The classification JSON record has the schema produced by
classify.to_json_dict: scalar flags plus "per_r" keyed by the prime r,
with rationals rendered as "a/b" strings.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import experiments, partition, ring
from .classify import classify, predicted_densities, to_json_dict
from .errors import ApparitionError
from .exactnum import parse_rational

LIMIT_CAP = 10**8


@dataclass
class RunConfig:
    command: str
    t: Optional[Fraction] = None
    r: int = 2
    limit: int = 10**6
    j_max: int = 8
    fmt: str = "csv"
    threads: int = 1
    out: Optional[str] = None

    def validate(self) -> None:
        if self.limit > LIMIT_CAP:
            raise ValueError(f"limit capped at {LIMIT_CAP}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


def _write(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _cmd_classify(args) -> int:
    cls = classify(parse_rational(args.t))
    print(json.dumps(to_json_dict(cls), indent=2))
    return 0


def _cmd_index(args) -> int:
    t = parse_rational(args.t)
    p = int(args.p)
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p = {p} is not an odd prime")
    chi = ring.index(t, p)
    print(f"chi({t},{p}) = {chi}")
    return 0


def _partition_one(t: Fraction, cfg: RunConfig) -> str:
    report = partition.compute_partition(
        t, cfg.r, cfg.limit, j_max=cfg.j_max, threads=cfg.threads
    )
    pred = predicted_densities(classify(t), cfg.r, cfg.j_max)
    if pred.supported:
        rows = partition.compare(report, pred)
    else:
        rows = partition.counts_rows(report)
        print(f"note: no supported prediction for t={t} ({pred.source})", file=sys.stderr)
    if cfg.fmt == "json":
        return partition.report_to_json(report, rows) + "\n"
    return partition.rows_to_csv(rows)


def _cmd_partition(args) -> int:
    cfg = RunConfig(
        command="partition",
        r=args.r,
        limit=args.limit,
        j_max=args.jmax,
        fmt=args.format,
        threads=args.threads,
        out=args.out,
    )
    cfg.validate()
    if args.batch:
        chunks = []
        with open(args.batch, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                t = parse_rational(line)
                chunks.append(f"# t={t}\n" + _partition_one(t, cfg))
        _write("".join(chunks), cfg.out)
        return 0
    if args.t is None:
        raise ValueError("either t or --batch is required")
    _write(_partition_one(parse_rational(args.t), cfg), cfg.out)
    return 0


def _report_exit(rep, out: Optional[str]) -> int:
    print(rep.summary())
    if out:
        lines = ["p,expected,actual"]
        lines += [f"{p},{e},{a}" for p, e, a in rep.violations]
        _write("\n".join(lines) + "\n", out)
    return 0 if rep.passed else 2


def _cmd_verify(args) -> int:
    limit = args.limit
    if args.suite == "prop11":
        rep = experiments.verify_prop11(parse_rational(args.t), args.r, limit)
    elif args.suite == "twin":
        rep = experiments.verify_twin(parse_rational(args.t), limit)
    elif args.suite == "cubic":
        rep = experiments.verify_cubic_associates(parse_rational(args.t), limit)
    elif args.suite == "circular":
        rep = experiments.verify_circular(parse_rational(args.t), limit)
    elif args.suite == "bridge":
        rep = experiments.verify_bridge(experiments.LucasSpec(args.T, args.Q), limit)
    elif args.suite == "splitting":
        rep = experiments.verify_splitting_theorems(
            parse_rational(args.t), args.r, limit, n_max=args.nmax, j_max=args.jmax
        )
    elif args.suite == "ballot":
        rep = experiments.ballot_check(
            experiments.LucasSpec(args.T, args.Q), args.r, limit, k_max=args.kmax
        )
    elif args.suite == "sequences":
        rep = experiments.sequence_divisor_check(
            parse_rational(args.t), args.family, limit, subseq_r=args.r
        )
    else:
        raise ValueError(f"unknown suite {args.suite!r}")
    return _report_exit(rep, args.out)


def _cmd_dynamics(args) -> int:
    if args.kind == "chebyshev":
        rep = experiments.chebyshev_orbit_divisors(
            parse_rational(args.x0), args.k, args.nmax, args.limit
        )
        status = "PASS" if rep.passed else "FAIL"
        print(
            f"{status} chebyshev-orbit(x0={rep.x0}, k={rep.k}): "
            f"{len(rep.divisors)} divisors / {rep.primes_checked} primes "
            f"(fraction {rep.fraction:.6f}), {len(rep.violations)} violations"
        )
        for bound, count, frac in rep.checkpoints:
            print(f"  N={bound}: {count} divisors, fraction {frac:.6f}")
        return 0 if rep.passed else 2
    rep = experiments.quadmap_divisor_check(parse_rational(args.t), args.limit)
    status = "PASS" if rep.passed else "FAIL"
    print(
        f"{status} quadmap(t={rep.t}): {len(rep.divisors)} divisors / "
        f"{rep.primes_checked} primes (density {rep.density:.6f}), "
        f"{len(rep.violations)} violations"
    )
    return 0 if rep.passed else 2


def _cmd_nondivisor(args) -> int:
    rep = experiments.nondivisor_density(
        parse_rational(args.t),
        parse_rational(args.y0),
        parse_rational(args.y1),
        args.r,
        args.limit,
    )
    status = "PASS" if rep.passed else "FAIL"
    print(
        f"{status} nondivisor(t={rep.t}, Y=[{rep.y0}, {rep.y1}], r={rep.r}): "
        f"|T| = {rep.target_count} of {rep.pi_limit} primes, "
        f"ratio {rep.ratio:.6f} vs expected {rep.expected} "
        f"({float(rep.expected):.6f})"
    )
    if rep.criterion_disagreements:
        print(f"  note: {len(rep.criterion_disagreements)} literal-vs-subgroup criterion disagreements")
    if not rep.passed:
        for p, e, a in (rep.order_index_mismatches + rep.scan_divisor_conflicts)[:10]:
            print(f"  violation p={p}: expected {e}, got {a}")
    return 0 if rep.passed else 2


# let argparse accept negative rationals like -8/19 as positionals
_NEG_RATIONAL = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _allow_negative_rationals(parser: argparse.ArgumentParser) -> None:
    if hasattr(parser, "_negative_number_matcher"):
        parser._negative_number_matcher = _NEG_RATIONAL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="apparition")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification record of t as JSON")
    p.add_argument("t")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("index", help="the index of appearance chi(t, p)")
    p.add_argument("t")
    p.add_argument("p")
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("partition", help="valuation partition sweep over primes <= N")
    p.add_argument("t", nargs="?")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument("--jmax", type=int, default=8)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--batch", help="file with one rational per line (# comments)")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("verify", help="exact per-prime verification suites")
    p.add_argument(
        "suite",
        choices=(
            "prop11", "twin", "cubic", "circular",
            "bridge", "splitting", "ballot", "sequences",
        ),
    )
    p.add_argument("t", nargs="?")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--limit", type=int, default=10**4)
    p.add_argument("--T", type=int, default=1)
    p.add_argument("--Q", type=int, default=-1)
    p.add_argument("--family", default="W")
    p.add_argument("--nmax", type=int, default=2)
    p.add_argument("--jmax", type=int, default=3)
    p.add_argument("--kmax", type=int, default=30)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dynamics", help="orbit divisor experiments")
    p.add_argument("kind", choices=("chebyshev", "quadmap"))
    p.add_argument("x0", nargs="?", help="initial value (chebyshev)")
    p.add_argument("--t", dest="t", help="parameter (quadmap)")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--limit", type=int, default=10**4)
    p.set_defaults(func=_cmd_dynamics)

    p = sub.add_parser("nondivisor", help="non-divisor witness density for Y = [y0, y1]")
    p.add_argument("t")
    p.add_argument("y0")
    p.add_argument("y1")
    p.add_argument("--r", type=int, default=7)
    p.add_argument("--limit", type=int, default=10**6)
    p.set_defaults(func=_cmd_nondivisor)

    _allow_negative_rationals(ap)
    for action in ap._subparsers._group_actions:
        for sp in action.choices.values():
            _allow_negative_rationals(sp)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "dynamics" and args.kind == "quadmap" and args.t is None:
        args.t = args.x0  # positional doubles as t for quadmap
    try:
        return args.func(args)
    except (ApparitionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
