"""Command line entry point: ``partialhopf verify|crossed|eval|catalog``.

Exit codes are stable: 0 success, 1 a verification failed, 2 bad input
(parse error, unknown label or parameter, missing value), 3 an element is
not in the span of the extracted crossed-product basis.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog
from .algebra import AlgebraElement, TensorElement, check_associative, check_unital, format_linear
from .crossed_product import (
    Ratio,
    SmashElement,
    check_table_associative,
    check_unit,
    express_in_basis,
    extract_basis,
    product_table,
    structure_constants,
)
from .definition import DefinitionDocument, load_definition
from .errors import MissingParameter, NotInSpan, PartialHopfError
from .expression import evaluate_expression, specialize_value
from .hopf import check_hopf
from .partial_action import verify_all
from .render import (
    basis_structured,
    basis_text,
    report_structured,
    report_text,
    table_structured,
    table_text,
)
from .report import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SPAN = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--catalog", metavar="ID", help="built-in entry (see `catalog list`)")
    src.add_argument("--input", metavar="FILE", help="definition file")
    p.add_argument("--action", metavar="NAME", help="action block to use when a file has several")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partialhopf", description="Exact checks for twisted partial Hopf actions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check the action axioms (or algebra / Hopf axioms)")
    _add_source(v)
    v.add_argument("--profile", choices=("core", "crossed"), default="core")
    v.add_argument("--format", choices=("text", "structured"), default="text")
    v.add_argument("--workers", type=int, default=None, help="worker processes (default: $PARTIALHOPF_WORKERS or 1)")

    c = sub.add_parser("crossed", help="basis and product table of the partial crossed product")
    _add_source(c)
    c.add_argument("--emit", choices=("basis", "table"), default="basis")
    c.add_argument("--over", choices=("generators", "basis"), default="generators",
                   help="table rows: every nonzero generator pair or only basis pairs")
    c.add_argument("--format", choices=("text", "structured"), default="text")
    c.add_argument("--check", action="store_true", help="also check unit and associativity of the table")

    e = sub.add_parser("eval", help="evaluate an expression such as 'act(nu, e1)' or 'smash(e1,nu)*smash(e2,nu)'")
    _add_source(e)
    e.add_argument("expression")
    e.add_argument("--set", action="append", default=[], metavar="k1=1,k2=0",
                   help="specialize parameters (rational values, repeatable)")
    e.add_argument("--basis", action="store_true", help="write crossed-product results in basis coordinates")
    e.add_argument("--format", choices=("text", "structured"), default="text")

    cat = sub.add_parser("catalog", help="list or print built-in data")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True, parser_class=_Parser)
    cat_sub.add_parser("list")
    show = cat_sub.add_parser("show")
    show.add_argument("id")
    return parser


def _load(args) -> tuple[str, DefinitionDocument]:
    if args.catalog is not None:
        return args.catalog, catalog.load_document(args.catalog)
    return args.input, load_definition(args.input)


def _action(args, doc: DefinitionDocument, what: str):
    try:
        return doc.action(args.action)
    except KeyError:
        if args.action:
            raise _InputError(f"no action block named {args.action!r}") from None
        raise _InputError(f"{what} needs an action block") from None


class _InputError(Exception):
    pass


def _write(text: str) -> None:
    sys.stdout.write(text)


def _cmd_verify(args) -> int:
    name, doc = _load(args)
    if doc.actions:
        P = _action(args, doc, "verify")
        report = verify_all(P, args.profile, informational=True, workers=args.workers)
        title = f"{P.name} [{args.profile}]"
    else:
        parts = []
        for H in doc.hopfs.values():
            parts.append(check_hopf(H))
        hopf_algebras = {H.algebra.name for H in doc.hopfs.values()}
        for A in doc.algebras.values():
            if A.name not in hopf_algebras:
                parts += [check_associative(A), check_unital(A)]
        report = VerificationReport("structure", parts=tuple(parts), title=name)
        title = name
    if args.format == "text":
        _write(report_text(report, title))
    else:
        _write(report_structured(report))
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_crossed(args) -> int:
    _, doc = _load(args)
    P = _action(args, doc, "crossed")
    core = verify_all(P, "core")
    if not core.passed:
        sys.stderr.write("core axioms fail; run `verify` for the counterexamples\n")
        for leaf in core.walk():
            for e in leaf.counterexamples[:3]:
                sys.stderr.write(f"  {leaf.check} ({', '.join(e.labels)})\n")
        return EXIT_FAIL
    B = extract_basis(P)
    title = f"{P.target.name} # {P.H.name} ({P.name})"
    if args.emit == "basis":
        _write(basis_text(B, title) if args.format == "text" else basis_structured(B))
    else:
        table = product_table(P, B, over=args.over)
        _write(table_text(table, title) if args.format == "text" else table_structured(table))
    status = EXIT_OK
    if args.check:
        for rep in (check_unit(P, B), check_table_associative(P, B, structure_constants(P, B))):
            sys.stderr.write(rep.summary() + "\n")
            if not rep.passed:
                status = EXIT_FAIL
    return status


def parse_assignment(items: list[str]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for item in items:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            key, sep, val = part.partition("=")
            if not sep or not key.strip():
                raise _InputError(f"bad assignment {part!r}; expected name=value")
            try:
                out[key.strip()] = Fraction(val.strip())
            except ValueError:
                raise _InputError(f"bad value in {part!r}") from None
    return out


def _eval_scalar(c, assignment):
    if isinstance(c, Ratio):
        return Fraction(c.num.evaluate(assignment)) / Fraction(c.den.evaluate(assignment))
    return c.evaluate(assignment) if hasattr(c, "evaluate") else c


def _cmd_eval(args) -> int:
    _, doc = _load(args)
    P = _action(args, doc, "eval")
    assignment = parse_assignment(args.set)
    unknown = sorted(set(assignment) - set(doc.params) - set(P.parameters()))
    if unknown:
        raise _InputError(f"unknown parameter(s) in --set: {', '.join(unknown)}")
    value = evaluate_expression(P, args.expression, params=tuple(doc.params) or P.parameters())
    coords = None
    if args.basis:
        if not isinstance(value, SmashElement):
            raise _InputError("--basis applies to crossed-product values (use smash(a, h))")
        B = extract_basis(P)
        coords = express_in_basis(B, value)
        if args.set:
            coords = {p: _eval_scalar(c, assignment) for p, c in coords.items()}
            coords = {p: c for p, c in coords.items() if c}
    if args.set:
        value = specialize_value(value, assignment)

    if isinstance(value, SmashElement):
        kind = "crossed"
    elif isinstance(value, AlgebraElement):
        kind = "H" if value.algebra.name == P.H.name else "A"
    elif isinstance(value, TensorElement):
        kind = "tensor"
    else:
        kind = "scalar"
    shown = format_linear((f"{a}#{h}", c) for (a, h), c in coords.items()) if coords is not None else None
    if args.format == "text":
        _write(f"{value}\n")
        if shown is not None:
            _write(f"= {shown}\n")
    else:
        rec = {"expression": args.expression, "kind": kind, "value": str(value)}
        if coords is not None:
            rec["coords"] = [[f"{a}#{h}", str(c)] for (a, h), c in coords.items()]
        _write(json.dumps(rec, ensure_ascii=False, separators=(", ", ": ")) + "\n")
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        for cid in catalog.CATALOG_IDS:
            _write(f"{cid:<11} {catalog.describe(cid)}\n")
    else:
        _write(catalog.catalog_text(args.id))
    return EXIT_OK


_COMMANDS = {"verify": _cmd_verify, "crossed": _cmd_crossed, "eval": _cmd_eval, "catalog": _cmd_catalog}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except NotInSpan as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SPAN
    except (PartialHopfError, _InputError, OSError) as exc:
        msg = str(exc) if not isinstance(exc, MissingParameter) else f"{exc}; pass it with --set"
        sys.stderr.write(f"error: {msg}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
