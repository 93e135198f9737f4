"""Command-line front end: count, poly, enumerate, pivots, canon, verify.

Exit codes: 0 success, 1 usage or validation error, 2 size guard
(enumeration cap or oracle budget), 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import counting
from .errors import GuardError
from .field import FieldSpec, parse_field
from .grassmannian import (canonicalize, enumerate_grassmannian,
                           enumerate_grassmannian_parallel, pivot_sequences)
from .matrix import format_matrix, matrix_from_json, matrix_to_json, parse_matrix
from .oracle import cross_check

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_MISMATCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"error: {message}\n")


@dataclass
class CliConfig:
    command: str
    field: FieldSpec | None = None
    n: int | None = None
    d: int | None = None
    method: str = "pivot"
    format: str = "text"
    cap: int | None = None
    force: bool = False
    parallel: int = 0
    input: str = "-"
    budget: int | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> CliConfig:
        q = getattr(ns, "q", None)
        return cls(
            command=ns.command,
            field=parse_field(q) if q is not None else None,
            n=getattr(ns, "n", None),
            d=getattr(ns, "d", None),
            method=getattr(ns, "method", "pivot"),
            format=ns.format,
            cap=getattr(ns, "cap", None),
            force=getattr(ns, "force", False),
            parallel=getattr(ns, "parallel", 0),
            input=getattr(ns, "input", "-"),
            budget=getattr(ns, "budget", None),
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grassfq", description="Grassmannians over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help, q=False, nd=False):
        p = sub.add_parser(name, help=help)
        if q:
            p.add_argument("--q", required=True, help='field order, "9" or "3^2"')
        if nd:
            p.add_argument("--n", type=int, required=True, help="ambient dimension")
            p.add_argument("--d", type=int, required=True, help="subspace dimension")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = command("count", "cardinality of Gr(d,n)", q=True, nd=True)
    p.add_argument("--method", choices=counting.METHODS, default="pivot")
    p.add_argument("--parallel", type=int, default=0, metavar="WORKERS")

    command("poly", "coefficients of |Gr(d,n)| as a polynomial in q", nd=True)

    p = command("enumerate", "list every subspace as its echelon form", q=True, nd=True)
    p.add_argument("--cap", type=int, default=None, help="refuse above this many subspaces")
    p.add_argument("--force", action="store_true", help="ignore the cap")
    p.add_argument("--parallel", type=int, default=0, metavar="WORKERS")

    command("pivots", "list pivot sequences", nd=True)

    p = command("canon", "canonical echelon form of a row space", q=True)
    p.add_argument("--input", default="-", help="matrix file, or - for stdin")

    p = command("verify", "cross-check against the brute-force oracle", q=True, nd=True)
    p.add_argument("--budget", type=int, default=None, help="oracle tuple budget")
    return parser


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_count(cfg: CliConfig) -> int:
    value = counting.count(cfg.field.q, cfg.n, cfg.d, cfg.method, workers=cfg.parallel)
    if cfg.format == "json":
        _emit(json.dumps({"q": cfg.field.q, "n": cfg.n, "d": cfg.d,
                          "method": cfg.method, "count": value}))
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_poly(cfg: CliConfig) -> int:
    poly = counting.coeff_poly(cfg.n, cfg.d)
    _emit(json.dumps(poly.to_json()) if cfg.format == "json" else poly.to_text())
    return EXIT_OK


def cmd_enumerate(cfg: CliConfig) -> int:
    f = cfg.field
    if cfg.parallel and cfg.parallel > 1:
        stream = enumerate_grassmannian_parallel(f, cfg.n, cfg.d, cfg.parallel, cfg.cap, cfg.force)
    else:
        stream = enumerate_grassmannian(f, cfg.n, cfg.d, cfg.cap, cfg.force)
    out = sys.stdout
    first = True
    for w in stream:
        if cfg.format == "json":
            rec = matrix_to_json(w.canon.rows)
            rec["pivots"] = list(w.canon.pivots.s)
            out.write(json.dumps(rec) + "\n")
        else:
            if not first:
                out.write("-\n")
            out.write(format_matrix(w.canon.rows) + "\n")
        first = False
    return EXIT_OK


def cmd_pivots(cfg: CliConfig) -> int:
    for s in pivot_sequences(cfg.n, cfg.d):
        _emit(json.dumps(list(s.s)) if cfg.format == "json" else " ".join(map(str, s.s)))
    return EXIT_OK


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_canon(cfg: CliConfig) -> int:
    text = _read_input(cfg.input)
    if text.lstrip().startswith("{"):
        a = matrix_from_json(text, cfg.field)
    else:
        a = parse_matrix(text, cfg.field)
    w = canonicalize(cfg.field, a)
    if cfg.format == "json":
        rec = matrix_to_json(w.canon.rows)
        rec["dim"] = w.dim
        _emit(json.dumps(rec))
    else:
        body = format_matrix(w.canon.rows)
        if body:
            _emit(body)
        _emit(f"dim {w.dim}")
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    report = cross_check(cfg.field, cfg.n, cfg.d, budget=cfg.budget)
    _emit(report.to_json_text() if cfg.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_MISMATCH


COMMANDS = {
    "count": cmd_count,
    "poly": cmd_poly,
    "enumerate": cmd_enumerate,
    "pivots": cmd_pivots,
    "canon": cmd_canon,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = CliConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except GuardError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
