"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 verification mismatch,
3 documented size bound exceeded.
"""

import argparse
import json
import sys

from . import lr_engine, symfunc
from .kostant import kostant_partition
from .partitions import (
    MAX_CONTENT,
    MAX_LENGTH,
    PartitionError,
    SizeError,
    check_bounds,
    common_length,
    enumerate_dominated,
    is_dominated,
    pad,
    parse_partition,
    parse_vector,
)
from .tableaux import construct_ssyt, kostka_kostant, kostka_ssyt, semistandard_tableaux
from .verify import run_verify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_SIZE = 3

VERIFY_MAX_SIZE = 12
VERIFY_MAX_N = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for mismatches here
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def render_json(obj):
    return json.dumps(obj, sort_keys=True)


def _resolve_n(explicit, *parts):
    need = max(common_length(*parts), 1)
    if explicit is None:
        return need
    if explicit < need:
        raise PartitionError(f"--n {explicit} is smaller than the number of parts {need}")
    return explicit


def _emit(args, out, text, payload):
    if args.json:
        print(render_json(payload), file=out)
    else:
        print(text, file=out)


def cmd_lr(args, out):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    n = _resolve_n(args.n, lam, mu, nu)
    check_bounds(lam, mu, n=n)
    value = lr_engine.lr_coefficient(lam, mu, nu, n, method=args.method, kostka=args.kostka)
    _emit(args, out, str(value), {
        "lambda": list(pad(lam, n)), "mu": list(pad(mu, n)), "nu": list(pad(nu, n)),
        "n": n, "method": args.method, "value": value,
    })
    return EXIT_OK


def cmd_kostka(args, out):
    shape = parse_partition(args.shape)
    content = parse_vector(args.content)
    if any(c < 0 for c in content):
        raise PartitionError(f"content {content} has a negative entry")
    n = _resolve_n(args.n, shape, content)
    check_bounds(shape, n=max(n, len(content)))
    if args.method == "ssyt":
        value = kostka_ssyt(shape, content)
    else:
        value = kostka_kostant(shape, content, max(n, len(content)))
    payload = {"shape": list(shape), "content": list(content), "method": args.method, "value": value}
    text = str(value)
    if args.list:
        tabs = semistandard_tableaux(shape, content)
        payload["tableaux"] = [[list(r) for r in t.rows] for t in tabs]
        text = "\n\n".join([str(value)] + [str(t) for t in tabs])
    _emit(args, out, text, payload)
    return EXIT_OK


def cmd_schur_product(args, out):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    n = _resolve_n(args.n, lam, mu)
    check_bounds(lam, mu, n=n)
    expansion = lr_engine.sorted_expansion(lr_engine.schur_product_expand(lam, mu, n))
    text = "\n".join(f"{c} * s[{','.join(map(str, nu))}]" for nu, c in expansion)
    _emit(args, out, text, {
        "lambda": list(pad(lam, n)), "mu": list(pad(mu, n)), "n": n,
        "terms": [{"nu": list(nu), "coeff": c} for nu, c in expansion],
    })
    return EXIT_OK


def cmd_schur_poly(args, out):
    lam = parse_partition(args.lam)
    n = _resolve_n(args.n, lam)
    check_bounds(lam, n=n)
    poly = symfunc.schur_polynomial(lam, n)
    _emit(args, out, "\n".join(poly.format_terms()), {
        "lambda": list(pad(lam, n)), "n": n,
        "terms": [{"exponents": list(e), "coeff": c} for e, c in poly.items()],
    })
    return EXIT_OK


def cmd_kostant(args, out):
    v = parse_vector(args.vector)
    if not v:
        raise PartitionError("--vector must be non-empty")
    if len(v) > MAX_LENGTH or sum(abs(x) for x in v) > 2 * MAX_CONTENT:
        raise SizeError(f"vector {v} exceeds the documented bound")
    value = kostant_partition(v)
    _emit(args, out, str(value), {"vector": list(v), "value": value})
    return EXIT_OK


def cmd_dominated(args, out):
    mu = parse_partition(args.mu)
    if args.xi is not None:
        xi = parse_partition(args.xi)
        check_bounds(mu, n=_resolve_n(args.n, mu, xi))
        answer = is_dominated(xi, mu)
        payload = {"xi": list(xi), "mu": list(mu), "dominated": answer}
        text = "true" if answer else "false"
        if args.tableau and answer:
            t = construct_ssyt(mu, xi)
            payload["tableau"] = [list(r) for r in t.rows]
            text += "\n" + str(t)
        _emit(args, out, text, payload)
        return EXIT_OK
    n = _resolve_n(args.n, mu)
    check_bounds(mu, n=n)
    found = enumerate_dominated(mu, n)
    _emit(args, out, "\n".join(",".join(map(str, p)) for p in found), {
        "mu": list(pad(mu, n)), "n": n, "dominated": [list(p) for p in found],
    })
    return EXIT_OK


def cmd_king_embed(args, out):
    mu = parse_partition(args.mu)
    check_bounds(mu)
    pair = lr_engine.king_embedding(mu)
    text = f"sigma={','.join(map(str, pair.sigma))} tau={','.join(map(str, pair.tau))}"
    _emit(args, out, text, {"mu": list(mu), "sigma": list(pair.sigma), "tau": list(pair.tau)})
    return EXIT_OK


def cmd_cauchy_check(args, out):
    ok = symfunc.cauchy_truncated_check(args.n, args.maxdeg)
    _emit(args, out, "ok" if ok else "FAILED", {"n": args.n, "maxdeg": args.maxdeg, "ok": ok})
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args, out):
    if args.max_size > VERIFY_MAX_SIZE or args.n > VERIFY_MAX_N:
        raise SizeError(f"verify is bounded by --max-size {VERIFY_MAX_SIZE} and --n {VERIFY_MAX_N}")
    if args.max_size < 0 or args.n < 1:
        raise PartitionError("need --max-size >= 0 and --n >= 1")
    report = run_verify(args.max_size, args.n)
    lines = [f"cases_run: {report.cases_run}", f"mismatches: {len(report.mismatches)}"]
    for m in report.mismatches:
        lines.append(f"  {m.lam} {m.mu} {m.nu} {m.method}: {m.value} != {m.oracle_value}")
    _emit(args, out, "\n".join(lines), report.to_json())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser():
    parser = _Parser(prog="lrkostka", description="Kostka numbers and Littlewood-Richardson coefficients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(fn=fn)
        return p

    p = add("lr", cmd_lr, "LR coefficient c^nu_{lambda,mu}")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=sorted(lr_engine.LR_METHODS), default="matching")
    p.add_argument("--kostka", choices=("ssyt", "kostant"), default="ssyt",
                   help="Kostka routine used by the signed and matching methods")

    p = add("kostka", cmd_kostka, "Kostka number K_{shape,content}")
    p.add_argument("--shape", required=True)
    p.add_argument("--content", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("ssyt", "kostant"), default="ssyt")
    p.add_argument("--list", action="store_true", help="also print every tableau")

    p = add("schur-product", cmd_schur_product, "Schur expansion of S_lambda S_mu")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int)

    p = add("schur-poly", cmd_schur_poly, "Schur polynomial as a term list")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int)

    p = add("kostant", cmd_kostant, "Kostant partition function (use --vector=-1,0,1 for a leading minus)")
    p.add_argument("--vector", required=True)

    p = add("dominated", cmd_dominated, "dominance test, or list every partition below mu")
    p.add_argument("--mu", required=True)
    p.add_argument("--xi")
    p.add_argument("--n", type=int)
    p.add_argument("--tableau", action="store_true", help="print an SSYT of shape mu and content xi")

    p = add("king-embed", cmd_king_embed, "suffix-sum pair (sigma, tau) with K_{lambda,mu} = c^tau_{sigma,lambda}")
    p.add_argument("--mu", required=True)

    p = add("cauchy-check", cmd_cauchy_check, "check the truncated Cauchy identity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxdeg", type=int, required=True)

    p = add("verify", cmd_verify, "cross-method agreement sweep")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def run(argv, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_INPUT
    except SizeError as exc:
        print(f"size bound: {exc}", file=err)
        return EXIT_SIZE
    except (PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
