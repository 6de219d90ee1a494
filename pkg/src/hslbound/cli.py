"""Command line front end: analyze | bound | verify | dim1.

Input files are JSON documents with a "generators" array of integer
arrays; unknown fields are ignored with a warning.  Output is JSON by
default (sorted keys, so byte-identical across runs) or a plain table
via --format table.

Exit codes: 0 success, 1 invalid input or flags, 2 input not pointed,
3 gamma search budget exhausted, 4 verify found bound violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import empirical_hsl, hsl_exact_dim1, theoretical_bound
from .errors import BudgetExhaustedError, EmptyInputError, NotPointedError
from .intlinalg import is_prime
from .semigroups import AffineSemigroup, all_facet_data, find_gamma, n_q

REPORT_PRIMES = (2, 3, 5, 7, 11, 13)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 means "not pointed" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class InputError(ValueError):
    pass


def load_input(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "generators" not in doc:
        raise InputError("input document needs a 'generators' array")
    gens = doc["generators"]
    if (
        not isinstance(gens, list)
        or not gens
        or not all(
            isinstance(v, list) and v and all(isinstance(e, int) for e in v)
            for v in gens
        )
    ):
        raise InputError("'generators' must be a nonempty array of integer arrays")
    if len({len(v) for v in gens}) != 1:
        raise InputError("generator vectors must share one dimension")
    for key in sorted(doc):
        if key not in ("generators", "labels"):
            print(f"warning: ignoring field {key!r}", file=sys.stderr)
    return [tuple(v) for v in gens]


def analysis_report(S: AffineSemigroup, cert, facets) -> dict:
    nq = n_q(S, facets)
    bounds = {
        str(p): theoretical_bound(cert, nq, p) for p in REPORT_PRIMES
    }
    return {
        "ambient_dim": len(S.raw_generators[0]),
        "rank": S.dim,
        "pointed": True,
        "lattice_basis": [list(b) for b in S.lattice_basis],
        "generators": [list(g) for g in S.generators],
        "support_forms": [list(u) for u in S.support_forms],
        "grading": list(S.grading),
        "extreme_rays": [list(r) for r in S.cone.extreme_rays],
        "gamma": list(cert.gamma),
        "facet_values": list(cert.facet_values),
        "m_q": cert.m_q,
        "min_facet_value_uncertified": cert.min_facet_value,
        "saturated": cert.m_q == 0,
        "facets": [
            {
                "index": fd.index,
                "support_form": list(fd.support_form),
                "generators": [list(g) for g in fd.facet_gens],
                "invariant_factors": list(fd.invariant_factors),
                "interior_element": list(fd.interior_element),
            }
            for fd in facets
        ],
        "n_q": nq,
        "bounds": bounds,
    }


def _render_table(doc: dict, out) -> None:
    def emit(key, value):
        print(f"{key:28} {value}", file=out)

    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:", file=out)
            for item in value:
                inner = ", ".join(f"{k}={item[k]}" for k in sorted(item))
                print(f"    {inner}", file=out)
        elif isinstance(value, dict):
            print(f"{key}:", file=out)
            for k in sorted(value):
                print(f"    {k:24} {value[k]}", file=out)
        else:
            emit(key, value)


def emit_report(doc: dict, fmt: str) -> None:
    if fmt == "table":
        _render_table(doc, sys.stdout)
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))


def _pipeline(args):
    from .semigroups import build

    gens = load_input(args.input)
    S = build(gens)
    cert = find_gamma(S, budget=args.budget)
    facets = all_facet_data(S)
    return S, cert, facets


def cmd_analyze(args) -> int:
    S, cert, facets = _pipeline(args)
    emit_report(analysis_report(S, cert, facets), args.format)
    return 0


def cmd_bound(args) -> int:
    if not is_prime(args.prime):
        print(f"error: {args.prime} is not prime", file=sys.stderr)
        return 1
    S, cert, facets = _pipeline(args)
    nq = n_q(S, facets)
    bound = theoretical_bound(cert, nq, args.prime)
    if bound is None:
        print(f"no guarantee: p <= N_Q = {nq}")
    else:
        print(bound)
    return 0


def cmd_verify(args) -> int:
    if not is_prime(args.prime):
        print(f"error: {args.prime} is not prime", file=sys.stderr)
        return 1
    if args.window < 1:
        print("error: --window must be at least 1", file=sys.stderr)
        return 1
    S, cert, facets = _pipeline(args)
    nq = n_q(S, facets)
    bound = theoretical_bound(cert, nq, args.prime)
    e_max = args.emax
    if e_max is None:
        e_max = bound + 2 if bound is not None else 10
    cap = args.cap if args.cap is not None else 10 * cert.m_q
    report = empirical_hsl(S, cert, facets, args.prime, args.window, e_max, cap)
    emit_report(report.as_dict(), args.format)
    return 4 if report.violations else 0


def cmd_dim1(args) -> int:
    if not is_prime(args.prime):
        print(f"error: {args.prime} is not prime", file=sys.stderr)
        return 1
    from .semigroups import build

    S = build(load_input(args.input))
    if S.dim != 1:
        print(f"error: input has rank {S.dim}, not 1", file=sys.stderr)
        return 1
    print(hsl_exact_dim1(S, args.prime))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hslbound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prime=False):
        p.add_argument("--input", required=True, help="JSON input file")
        p.add_argument("--budget", type=int, default=10000, help="gamma search budget")
        p.add_argument("--format", choices=("json", "table"), default="json")
        if prime:
            p.add_argument("--prime", type=int, required=True)

    common(sub.add_parser("analyze", help="geometry, gamma, m_Q, N_Q"))
    common(sub.add_parser("bound", help="nilpotence bound for one prime"), prime=True)
    verify = sub.add_parser("verify", help="window sweep against the bound")
    common(verify, prime=True)
    verify.add_argument("--window", type=int, default=10, help="degree box radius")
    verify.add_argument("--emax", type=int, default=None, help="largest Frobenius power")
    verify.add_argument("--cap", type=int, default=None, help="witness search cap")
    common(sub.add_parser("dim1", help="exact answer for rank-1 input"), prime=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "analyze": cmd_analyze,
        "bound": cmd_bound,
        "verify": cmd_verify,
        "dim1": cmd_dim1,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except EmptyInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotPointedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
