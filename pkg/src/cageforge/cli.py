"""Command-line interface.

Exit codes: 0 success, 1 a certification or expectation check failed,
2 bad input (unsupported q, unreadable file), 3 amalgam plan failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .amalgam import PlanError, amalgamate
from .certify import Claim, certify, moore_bound
from .families import UnsupportedPrimeError, plan_for, supported_primes
from .formats import FormatError, certificate_json, load_graph, to_graph6, write_edge_list
from .reductions import reduce
from .semiplane import SemiplaneError, build_levi

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_PLAN = 0, 1, 2, 3


def _csv_set(text: str) -> frozenset[int]:
    try:
        return frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt_set(ws) -> str:
    return "{" + ",".join(map(str, sorted(ws))) + "}"


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def cmd_build(args: argparse.Namespace) -> int:
    try:
        plan = plan_for(args.q, args.u)
    except PlanError as exc:
        _err(str(exc))
        return EXIT_PLAN
    except (UnsupportedPrimeError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT

    for name, given, used in (("S", args.S, plan.spec.S), ("T", args.T, plan.spec.T)):
        if given is not None and given != used:
            _err(
                f"--{name} {_fmt_set(given)} differs from the q={args.q} construction's "
                f"{name}={_fmt_set(used)}; custom pieces are not supported"
            )
            return EXIT_INPUT

    try:
        levi = build_levi(args.q)
    except SemiplaneError as exc:
        _err(str(exc))
        return EXIT_INPUT
    reduced = reduce(levi, plan.spec)
    try:
        graph = amalgamate(reduced, plan, check_girth=not args.no_cert)
    except PlanError as exc:
        _err(str(exc))
        return EXIT_PLAN

    status = EXIT_OK
    head = f"q={args.q} u={args.u} → "
    if args.no_cert:
        print(head + f"{plan.degree}-regular, n={graph.n} (uncertified)")
    else:
        cert = certify(graph, Claim(plan.degree, 5, plan.order))
        print(head + cert.summary())
        if not cert.passed:
            status = EXIT_CHECK
        if args.cert:
            Path(args.cert).write_text(certificate_json(cert))

    if args.out:
        if args.format == "g6":
            Path(args.out).write_bytes(to_graph6(graph) + b"\n")
        else:
            meta = {
                "q": args.q,
                "S": ",".join(map(str, sorted(plan.spec.S))),
                "T": ",".join(map(str, sorted(plan.spec.T))),
                "u": args.u,
                "construction": plan.family,
            }
            Path(args.out).write_text(write_edge_list(graph, meta))
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        graph = load_graph(Path(args.path).read_bytes())
    except (OSError, FormatError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    claim = Claim(args.expect_degree, args.expect_girth, args.expect_order)
    cert = certify(graph, claim)
    sys.stdout.write(certificate_json(cert))
    return EXIT_OK if cert.passed else EXIT_CHECK


def cmd_weights(args: argparse.Namespace) -> int:
    try:
        plan = plan_for(args.q)
    except PlanError as exc:
        _err(str(exc))
        return EXIT_PLAN
    except (UnsupportedPrimeError, ValueError) as exc:
        _err(str(exc))
        return EXIT_INPUT
    pw, lw = plan.point_weights(), plan.line_weights()
    verdict = "DISJOINT" if not pw & lw else f"INTERSECT {_fmt_set(pw & lw)}"
    print(f"P_ω={_fmt_set(pw)}; L_ω={_fmt_set(lw)}; {verdict}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    print(f"{'q':>4} {'degree':>6} {'order':>7} {'moore':>7} {'excess':>7}")
    for q in supported_primes(args.qmax):
        plan = plan_for(q, 0)
        n0 = moore_bound(plan.degree, 5)
        print(f"{q:>4} {plan.degree:>6} {plan.order:>7} {n0:>7} {plan.order - n0:>7}")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cageforge",
        description="Build and certify regular girth-5 graphs from elliptic semiplane Levi graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct B*_q(S,T,u) and certify it")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--S", type=_csv_set, default=None, help="must match the built-in construction")
    p.add_argument("--T", type=_csv_set, default=None, help="must match the built-in construction")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("--out", help="write the graph here")
    p.add_argument("--cert", help="write the certificate JSON here")
    p.add_argument("--no-cert", action="store_true", help="skip the girth computation (uncertified)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="certify a graph6 or edge-list file")
    p.add_argument("path")
    p.add_argument("--expect-degree", type=int)
    p.add_argument("--expect-girth", type=int)
    p.add_argument("--expect-order", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weights", help="print the point and line weight sets for q")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("table", help="tabulate u=0 constructions for supported q <= qmax")
    p.add_argument("--qmax", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
