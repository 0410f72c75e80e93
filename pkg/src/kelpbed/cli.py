"""Command-line front end: ``kelpbed <subcommand> ...``.

Exit status is 0 on success, 1 when an input violates a mathematical
precondition (the message names it), and 2 when input text cannot be parsed.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bijections, demazure, growth, monge
from .biword import DomainError, OracleCapacityError
from .formats import ParseError, format_matrices, format_matrix, parse_matrix
from .verification import format_report, verify


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _matrix(args, name, stdin, signed=False):
    return parse_matrix(_read(getattr(args, name), stdin), signed=signed)


def cmd_star(args, stdin, out):
    X, Y = _matrix(args, "a", stdin), _matrix(args, "b", stdin)
    out.write(format_matrix(demazure.star(X, Y)))


def cmd_phi(args, stdin, out):
    out.write(format_matrix(monge.phi(_matrix(args, "a", stdin))))


def cmd_phi_inv(args, stdin, out):
    out.write(format_matrix(monge.phi_inverse(_matrix(args, "a", stdin))))


def cmd_dprod(args, stdin, out):
    A, B = _matrix(args, "a", stdin), _matrix(args, "b", stdin)
    product = monge.distance_product_monge if args.fast else monge.distance_product
    out.write(format_matrix(product(A, B)))


def cmd_check(args, stdin, out):
    A = _matrix(args, "a", stdin)
    bad = monge.first_monge_violation(A)
    if bad is None:
        out.write("monge: yes\n")
    else:
        i, j = bad
        out.write(f"monge: no (rows {i}-{i + 1}, columns {j}-{j + 1}: "
                  f"{A[i - 1, j - 1]} + {A[i, j]} > {A[i - 1, j]} + {A[i, j - 1]})\n")
    out.write(f"simple: {'yes' if monge.is_simple(A) else 'no'}\n")
    return 0 if bad is None else 1


def cmd_series(args, stdin, out):
    if args.norm == "l11-inf":
        coeffs = growth.series_l11_infinity(args.trunc)
    else:
        if args.n is None:
            raise DomainError(f"--n is required for --norm {args.norm}")
        fn = growth.series_max if args.norm == "max" else growth.series_l11
        coeffs = fn(args.n, args.trunc)
    if args.partial_sums:
        coeffs = growth.partial_sum_series(coeffs)
    out.write((",".join(map(str, coeffs)) if args.csv else "\n".join(map(str, coeffs))) + "\n")


def cmd_enumerate(args, stdin, out):
    mats = growth.enumerate_graded(args.n, args.k, args.norm, at_most=args.at_most, cap=args.cap)
    out.write(format_matrices(mats))


def _write_density_views(M, out):
    rho = bijections.density_to_r(M)
    out.write(f"k: {M.k}\n")
    out.write(f"pi: {bijections.density_to_p(M)}\n")
    out.write(f"rho: {rho}\n")
    out.write(f"signature: {bijections.star_algebra_signature(rho)}\n")


def cmd_biject(args, stdin, out):
    if args.inverse:
        part = bijections.parse_partition(args.source)
        if isinstance(part, bijections.DivisorCopyPartition):
            M = bijections.p_to_density(part)
        else:
            M = bijections.r_to_density(part)
        out.write(format_matrix(M.square()) if M.k else "1\n0\n")
        _write_density_views(M, out)
        return
    M = bijections.DensityClass.from_matrix(parse_matrix(_read(args.source, stdin)))
    _write_density_views(M, out)
    out.write("sigma-bar:\n" + format_matrix(bijections.sigma_bar(M)))


def cmd_verify(args, stdin, out):
    report = verify(args.trials, args.n, args.max_entry, args.seed)
    out.write(format_report(report))
    return 0 if all(t.passed == t.total for t in report.values()) else 1


def cmd_decompose(args, stdin, out):
    parts = monge.decompose(_matrix(args, "a", stdin))
    out.write("simple part:\n" + format_matrix(parts.simple_part))
    out.write("sum part:\n" + format_matrix(parts.sum_part))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kelpbed", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def files(name, help, *names):
        sp = sub.add_parser(name, help=help)
        for n in names:
            sp.add_argument(n, help="matrix file, or - for standard input")
        return sp

    files("star", "Demazure product of two biword matrices", "a", "b").set_defaults(func=cmd_star)
    files("phi", "simple Monge matrix of a biword matrix", "a").set_defaults(func=cmd_phi)
    files("phi-inv", "biword matrix of a simple Monge matrix", "a").set_defaults(func=cmd_phi_inv)
    sp = files("dprod", "min-plus product", "a", "b")
    sp.add_argument("--fast", action="store_true", help="monotone-argmin product (simple Monge inputs)")
    sp.set_defaults(func=cmd_dprod)
    files("check", "report Monge and simple status", "a").set_defaults(func=cmd_check)
    files("decompose", "split a Monge matrix into simple and sum parts", "a").set_defaults(func=cmd_decompose)

    sp = sub.add_parser("series", help="growth series coefficients")
    sp.add_argument("--norm", choices=("max", "l11", "l11-inf"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--trunc", type=int, default=32)
    sp.add_argument("--partial-sums", action="store_true")
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("enumerate", help="all simple Monge matrices of a given norm")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--norm", choices=growth.NORMS, required=True)
    sp.add_argument("--at-most", action="store_true", help="norm <= k instead of == k")
    sp.add_argument("--cap", type=int, default=growth.DEFAULT_ENUMERATION_CAP)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("biject", help="partition views of a density matrix")
    sp.add_argument("source", help="density matrix file (or -), or a partition with --inverse")
    sp.add_argument("--inverse", action="store_true",
                    help="read a decorated partition such as '4[1]^2, 1[1]' or '3(1)^2, 3(2)'")
    sp.set_defaults(func=cmd_biject)

    sp = sub.add_parser("verify", help="seeded randomized checks of the product identities")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--max-entry", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args, stdin, stdout)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return 2
    except (DomainError, OracleCapacityError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
