"""Command line interface.

Exit codes: 0 success / verdict pass, 1 verdict fail (``check-gsb`` or an
oracle disagreement in ``dims``), 2 usage or input error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .expr import ExpressionError, format_polynomial, lower, parse_expression
from .graph import GraphFormatError, parse_graph
from .gsb import (
    DegreeBoundError,
    ResourceLimitError,
    check_gsb,
    enumerate_basis,
    generate_s,
    nilpotent_basis,
    normal_form,
)
from .oracle import dims_by_clique_series, dims_by_linear_algebra

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_MAX_TERMS = 10**6


class UsageError(Exception):
    pass


def max_terms() -> int:
    raw = os.environ.get("PCLIE_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"PCLIE_MAX_TERMS must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("PCLIE_MAX_TERMS must be positive")
    return value


def _load_graph(path):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    return parse_graph(data)


def _coef_json(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_json(p, alphabet):
    return [
        {"word": alphabet.nword_to_json(t), "coefficient": _coef_json(c)}
        for t, c in p.nword_terms()
    ]


def _emit(obj):
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _print_words_by_degree(by_degree, alphabet, fmt, key="words", extra=None):
    if fmt == "json":
        obj = dict(extra or {})
        obj["degrees"] = [
            {"degree": d, "dimension": len(ts), key: [alphabet.nword_to_json(t) for t in ts]}
            for d, ts in sorted(by_degree.items())
        ]
        _emit(obj)
        return
    for d, ts in sorted(by_degree.items()):
        print(f"degree {d}: {len(ts)}")
        for t in ts:
            print(f"  {alphabet.format_nword(t)}")


def _parse_poly(text, graph, limit):
    p = lower(parse_expression(text, graph.alphabet), graph.alphabet)
    if len(p) > limit:
        raise ResourceLimitError(f"expression has {len(p)} terms (limit {limit})")
    return p


def cmd_basis(args):
    g = _load_graph(args.graph)
    basis = enumerate_basis(g, args.max_degree)
    _print_words_by_degree(basis, g.alphabet, args.format, extra={"max_degree": args.max_degree})
    return EXIT_OK


def cmd_nilpotent_basis(args):
    g = _load_graph(args.graph)
    basis = nilpotent_basis(g, args.cls)
    _print_words_by_degree(basis, g.alphabet, args.format, extra={"class": args.cls})
    return EXIT_OK


def cmd_relators(args):
    g = _load_graph(args.graph)
    s = generate_s(g, args.max_degree)
    _print_words_by_degree(
        {d: ts for d, ts in s.by_degree.items()}, g.alphabet, args.format,
        key="relators", extra={"max_degree": args.max_degree},
    )
    return EXIT_OK


def cmd_dims(args):
    g = _load_graph(args.graph)
    d = args.max_degree
    engine = [len(ts) for _, ts in sorted(enumerate_basis(g, d).items())]
    columns = {"engine": engine}
    if args.oracle == "linear":
        columns["linear"] = dims_by_linear_algebra(g, d)
    elif args.oracle == "series":
        columns["series"] = dims_by_clique_series(g, d)
    agree = all(col == engine for col in columns.values())
    if args.format == "json":
        _emit({"max_degree": d, **columns, "agree": agree})
    else:
        names = list(columns)
        print("degree " + " ".join(f"{n:>8}" for n in names))
        for i in range(d):
            print(f"{i + 1:>6} " + " ".join(f"{columns[n][i]:>8}" for n in names))
        if args.oracle != "none":
            print(f"agree: {'true' if agree else 'false'}")
    return EXIT_OK if agree else EXIT_FAIL


def _degree_for(args, *polys):
    needed = max([p.degree() for p in polys] + [2])
    return args.max_degree if args.max_degree is not None else needed


def cmd_nf(args):
    g = _load_graph(args.graph)
    limit = max_terms()
    p = _parse_poly(args.expr, g, limit)
    s = generate_s(g, max(_degree_for(args, p), 2))
    nf = normal_form(p, s, max_terms=limit)
    if args.format == "json":
        _emit({"normal_form": _poly_json(nf, g.alphabet)})
    else:
        print(format_polynomial(nf, g.alphabet))
    return EXIT_OK


def cmd_eq(args):
    if len(args.expr) != 2:
        raise UsageError("eq needs exactly two --expr arguments")
    g = _load_graph(args.graph)
    limit = max_terms()
    p, q = (_parse_poly(e, g, limit) for e in args.expr)
    s = generate_s(g, max(_degree_for(args, p, q), 2))
    equal = not normal_form(p - q, s, max_terms=limit)
    if args.format == "json":
        _emit({"equal": equal})
    else:
        print("true" if equal else "false")
    return EXIT_OK


def cmd_check_gsb(args):
    g = _load_graph(args.graph)
    report = check_gsb(g, args.max_degree, max_terms=max_terms())
    a = g.alphabet
    counts = report.counts()
    if args.format == "json":
        _emit({
            "max_degree": report.max_degree,
            "relators": report.relator_count,
            "intersection": counts["intersection"],
            "inclusion": counts["inclusion"],
            "verdict": "pass" if report.passed else "fail",
            "failures": [
                {
                    "kind": c.kind,
                    "f": a.nword_to_json(c.f),
                    "g": a.nword_to_json(c.g),
                    "w": a.format_word(c.w),
                    "remainder": _poly_json(c.remainder, a),
                }
                for c in report.failures
            ],
        })
    else:
        print(f"relators: {report.relator_count}")
        print(f"compositions: intersection {counts['intersection']}, inclusion {counts['inclusion']}")
        for c in report.failures:
            print(
                f"  nontrivial {c.kind} of {a.format_nword(c.f)} and {a.format_nword(c.g)}"
                f" at {a.format_word(c.w)}: {format_polynomial(c.remainder, a)}"
            )
        print(f"verdict: {'pass' if report.passed else 'fail'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _positive(min_value):
    def conv(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < min_value:
            raise argparse.ArgumentTypeError(f"must be at least {min_value}")
        return value
    return conv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pclie",
        description="Bases and normal forms for partially commutative Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(name, help, degree=True, degree_required=True, min_degree=1):
        p = sub.add_parser(name, help=help)
        p.add_argument("--graph", required=True, help="graph JSON file ('-' for stdin)")
        if degree:
            p.add_argument("--max-degree", type=_positive(min_degree), required=degree_required)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    common("basis", "S-reduced Lyndon-Shirshov basis by degree").set_defaults(func=cmd_basis)
    p = common("dims", "dimensions by degree, optionally cross-checked")
    p.add_argument("--oracle", choices=("linear", "series", "none"), default="none")
    p.set_defaults(func=cmd_dims)
    p = common("nf", "normal form of an expression", degree_required=False)
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_nf)
    p = common("eq", "decide equality of two expressions", degree_required=False)
    p.add_argument("--expr", action="append", required=True)
    p.set_defaults(func=cmd_eq)
    common("check-gsb", "verify all compositions of S(G) reduce to zero", min_degree=2).set_defaults(
        func=cmd_check_gsb
    )
    p = common("nilpotent-basis", "basis of the nilpotent quotient L(G, N)", degree=False)
    p.add_argument("--class", dest="cls", type=_positive(2), required=True)
    p.set_defaults(func=cmd_nilpotent_basis)
    common("relators", "list S(G)", min_degree=2).set_defaults(func=cmd_relators)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"pclie: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, GraphFormatError, ExpressionError, DegreeBoundError) as exc:
        print(f"pclie: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
