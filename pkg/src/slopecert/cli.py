"""Command line front end: one-shot and batch certification."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import (
    DEFAULT_GAMMA_BUDGET,
    CertificateError,
    batch,
    certify_slope,
    parse_slope,
)
from .homfly import MEMO_CAP_ENV

_EPILOG = (
    f"The environment variable {MEMO_CAP_ENV} caps the size of the internal "
    "memo tables (entries per table)."
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slopecert",
        description="Certify that a rational surgery slope is shared by two distinct knots.",
        epilog=_EPILOG,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    one = sub.add_parser("certify", help="certify a single slope P/Q", epilog=_EPILOG)
    one.add_argument("--slope", required=True, help="slope as P/Q or a bare integer P")
    one.add_argument("--s-start", type=int, default=1, help="lower bound for the s search")
    one.add_argument(
        "--gamma-budget",
        type=int,
        default=DEFAULT_GAMMA_BUDGET,
        metavar="CROSSINGS",
        help="run the direct polynomial route only up to this many crossings",
    )
    one.add_argument("--json", metavar="PATH", help="write the certificate JSON here ('-' for stdout)")
    one.add_argument(
        "--verify-oracle",
        action="store_true",
        help="cross-check the fast engine against the exact skein oracle when affordable",
    )

    many = sub.add_parser("batch", help="certify every slope listed in a file", epilog=_EPILOG)
    many.add_argument("--slopes", required=True, metavar="FILE", help="one P/Q per line, # comments")
    many.add_argument("--s-start", type=int, default=1)
    many.add_argument("--gamma-budget", type=int, default=DEFAULT_GAMMA_BUDGET, metavar="CROSSINGS")
    many.add_argument("--verify-oracle", action="store_true")
    many.add_argument("--json-dir", metavar="DIR", help="write one certificate JSON per slope here")

    return parser


def _normalize(p: int, q: int):
    """Map a negative slope to its mirror, reporting the reduction."""
    if p < 0:
        return -p, q, f"{p}/{q}"
    return p, q, None


def _cmd_certify(args) -> int:
    try:
        p, q = parse_slope(args.slope)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    p, q, mirrored_from = _normalize(p, q)
    if mirrored_from is not None:
        print(f"certifying {p}/{q}, the mirror of {mirrored_from}")
    try:
        cert = certify_slope(
            p,
            q,
            s_start=args.s_start,
            gamma_budget=args.gamma_budget,
            verify_oracle=args.verify_oracle,
        )
    except (ValueError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(cert.summary())
    if args.json:
        obj = cert.to_obj()
        obj["mirror_of"] = mirrored_from
        payload = json.dumps(obj, sort_keys=True, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(payload)
        else:
            Path(args.json).write_text(payload)
            print(f"wrote {args.json}")
    return 0


def _cmd_batch(args) -> int:
    path = Path(args.slopes)
    try:
        raw_lines = path.read_text().splitlines()
    except OSError as exc:
        print(f"error: cannot read {args.slopes}: {exc}", file=sys.stderr)
        return 1
    slopes = []
    for line in raw_lines:
        line = line.split("#", 1)[0].strip()
        if line:
            slopes.append(line)
    normalized = []
    for text in slopes:
        try:
            p, q = parse_slope(text)
            p, q, mirrored = _normalize(p, q)
            normalized.append((f"{p}/{q}" if mirrored is None else text, (p, q)))
        except ValueError:
            normalized.append((text, None))
    report = batch(
        [text if pq is None else pq for text, pq in normalized],
        s_start=args.s_start,
        gamma_budget=args.gamma_budget,
        verify_oracle=args.verify_oracle,
    )
    for line in report.summary_lines():
        print(line)
    if args.json_dir:
        out = Path(args.json_dir)
        out.mkdir(parents=True, exist_ok=True)
        for entry in report.entries:
            if entry.ok:
                p, q = entry.certificate.slope
                (out / f"certificate_{p}_{q}.json").write_text(entry.certificate.to_json())
    return 0 if report.all_ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "certify":
        return _cmd_certify(args)
    return _cmd_batch(args)


if __name__ == "__main__":
    sys.exit(main())
