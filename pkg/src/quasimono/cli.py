"""Command-line access: construct, inspect, verify, export, report.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success or all
checks passing, 1 verification failure, 2 invalid input, 3 I/O failure.
"""

import argparse
import json
import sys
from fractions import Fraction

from .generators import build_all
from .polynomials import (Poly3, format_poly, poly_from_json_terms,
                          poly_to_json_terms, wr_basis)
from .restrictions import good_set, kernel_dim, kernel_poly, restriction_matrix
from .semigroup import build_context, factorizations, profile
from .verification import full_report

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_IO = 3


def _context_or_exit(n):
    if n < 3:
        print(f"error: n must be at least 3, got {n}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)
    return build_context(n)


def _emit(text, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def generators_json(ctx, gs):
    return {
        "n": ctx.n,
        "generators": [
            {
                "k": rec.k,
                "sigma_order": rec.sigma_order,
                "f": poly_to_json_terms(rec.f),
                "g": poly_to_json_terms(rec.g),
            }
            for rec in gs.generators
        ],
    }


def generators_from_json(payload):
    """Inverse of generators_json on the polynomial fields (round-trip)."""
    return {rec["k"]: (poly_from_json_terms(rec["f"]),
                       poly_from_json_terms(rec["g"]))
            for rec in payload["generators"]}


def cas_script(ctx, gs):
    """A CAS session: the ring, the map images, the ideal, a preimage check."""
    n, a, q = ctx.n, ctx.a, ctx.q
    lines = [
        f"int n={n};",
        "if (n mod 2 == 0)",
        "{int q=n-1;} else {int q=n;}",
        "int a1=(n-1)*n div 2;",
        "int a2=a1+q;",
        "int b=a1+1;",
        "int c=a1+2;",
        "q,a1,a2,b,c;",
        "ring A=0,(x,y,z),ds;",
    ]
    for rec in gs.generators:
        lines.append(f"poly f{rec.k}={format_poly(rec.f, compact=True)};")
    names = ",".join(f"f{rec.k}" for rec in gs.generators)
    lines.append(f"ideal I={names};")
    lines.append("ring B=0,(u),ds;")
    lines.append(f"ideal L=u^({a})+u^({a + q}),u^({a + 1}),u^({a + 2});")
    lines.append("map phi=A,L;")
    for rec in gs.generators:
        lines.append(f"phi(f{rec.k});")
    lines.append("ideal Z;")
    lines.append("setring A;")
    lines.append("ideal P=preimage(B,phi,Z);")
    lines.append("minbase(P);")
    return "\n".join(lines) + "\n"


def cmd_gens(args):
    ctx = _context_or_exit(args.n)
    gs = build_all(ctx)
    if args.format == "json":
        text = json.dumps(generators_json(ctx, gs), indent=2) + "\n"
    elif args.format == "cas-script":
        text = cas_script(ctx, gs)
    else:
        lines = []
        for rec in gs.generators:
            if args.with_leading:
                lines.append(f"f{rec.k} = {format_poly(rec.f)}   "
                             f"[leading {format_poly(rec.g)}, order {rec.sigma_order}]")
            else:
                lines.append(f"f{rec.k} = {format_poly(rec.f)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args):
    ctx = _context_or_exit(args.n)
    try:
        factor = Fraction(args.order_bound_factor)
    except (ValueError, ZeroDivisionError):
        print(f"error: bad factor {args.order_bound_factor!r}", file=sys.stderr)
        return EXIT_BAD_INPUT
    bound = None
    if factor != 1:
        bound = int(factor * (ctx.la - 1))
    report = full_report(ctx, search_max_n=args.search_max_n, search_bound=bound)
    if args.format == "json":
        payload = {
            "n": report.n,
            "overall": "pass" if report.overall else "fail",
            "checks": [{"name": c.name,
                        "status": "pass" if c.passed else "fail",
                        "detail": c.detail} for c in report.checks],
        }
        print(json.dumps(payload, indent=2))
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
        print(f"overall: {'PASS' if report.overall else 'FAIL'}")
    return EXIT_OK if report.overall else EXIT_CHECK_FAILED


def _inspect_payload(ctx, r):
    prof = profile(ctx, r)
    payload = {
        "n": ctx.n, "r": r, "member": prof.member,
        "ell": prof.ell, "eps": prof.eps, "phi": list(prof.phi),
        "kappa": prof.kappa, "iota": prof.iota, "c": prof.c,
        "delta": prof.delta,
        "factorizations": [list(e) for e in factorizations(ctx, r)],
    }
    if prof.member and 0 < r < ctx.la:
        gset = good_set(ctx, r)
        payload["basis"] = [list(e) for e in wr_basis(ctx, r)]
        payload["i_set"] = list(prof.i_set)
        payload["h_set"] = list(prof.h_set)
        payload["good_set"] = list(gset.elements)
        payload["matrix"] = [list(row) for row in
                             restriction_matrix(ctx, r, prof.h_set).matrix.data]
        payload["kernel_dim"] = kernel_dim(ctx, r, gset.elements)
        if len(gset.elements) == prof.delta - 1:
            payload["kernel_poly"] = format_poly(kernel_poly(ctx, r, gset.elements))
    return payload


def cmd_inspect(args):
    if args.r < 0:
        print(f"error: r must be non-negative, got {args.r}", file=sys.stderr)
        return EXIT_BAD_INPUT
    ctx = _context_or_exit(args.n)
    payload = _inspect_payload(ctx, args.r)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    r = args.r
    if not payload["member"]:
        print(f"r={r}: not in S = <{ctx.a},{ctx.a + 1},{ctx.a + 2}>")
        return EXIT_OK
    print(f"r={r} in S: ell={payload['ell']} eps={payload['eps']} "
          f"phi={tuple(payload['phi'])} (iota,c)=({payload['iota']},{payload['c']}) "
          f"delta={payload['delta']}")
    print(f"factorizations: {[tuple(e) for e in payload['factorizations']]}")
    if "basis" in payload:
        print(f"slice basis: {[tuple(e) for e in payload['basis']]}")
        print(f"I={list(payload['i_set'])} H={list(payload['h_set'])} "
              f"good set={payload['good_set']}")
        print("restriction matrix on H:")
        for row in payload["matrix"]:
            print("  " + " ".join(f"{v:>4}" for v in row))
        print(f"good-kernel dimension: {payload['kernel_dim']}")
        if "kernel_poly" in payload:
            print(f"kernel polynomial: {payload['kernel_poly']}")
    else:
        print(f"(r >= la = {ctx.la}: slice data not validated)")
    return EXIT_OK


def cmd_export(args):
    ctx = _context_or_exit(args.n)
    gs = build_all(ctx)
    _emit(cas_script(ctx, gs), args.out)
    return EXIT_OK


def cmd_report(args):
    from .report import write_report_files
    ctx = _context_or_exit(args.n)
    gs = build_all(ctx)
    report = full_report(ctx, search_max_n=args.search_max_n)
    try:
        created = write_report_files(ctx, gs, report, args.out_dir)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    for c in report.checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}")
    for path in created:
        print(f"wrote {path}")
    return EXIT_OK if report.overall else EXIT_CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quasimono",
        description="Minimal generating sets for kernels of quasi-monomial "
                    "curve maps, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="construct and print the generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "cas-script"],
                   default="text")
    p.add_argument("--with-leading", action="store_true",
                   help="also print leading forms and orders (text format)")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("verify", help="run the full verification report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--order-bound-factor", default="1",
                   help="scale the kernel-search bound (default la-1)")
    p.add_argument("--search-max-n", type=int, default=8,
                   help="largest n for which the bounded search runs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("inspect", help="per-element data for one r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("export", help="emit a CAS cross-check script")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("report", help="write delimited results and figures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--search-max-n", type=int, default=8)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
