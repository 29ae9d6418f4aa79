"""Text and line-delimited JSON rendering of reports, bases and tables.

All output is deterministic: entries keep checker order and polynomials
print in canonical form.
"""
from __future__ import annotations

import json
from typing import Iterable

from .algebra import format_linear
from .crossed_product import BasisExtraction, Pair, express_in_basis
from .report import Entry, VerificationReport


def _side(x) -> str:
    if isinstance(x, tuple):
        return " ; ".join(_side(v) for v in x)
    return str(x)


def _pair(p: Pair) -> str:
    return f"{p[0]}#{p[1]}"


def _coords_text(coords: dict) -> str:
    return format_linear((_pair(p), c) for p, c in coords.items())


def _record(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))


def report_text(report: VerificationReport, name: str = "") -> str:
    lines = [f"# {name or report.title or report.check}"]
    for leaf in report.walk():
        status = "PASS" if leaf.passed else "FAIL"
        tag = "" if leaf.required else " (informational)"
        lines.append(f"{leaf.check}: {leaf.title}  {status} {leaf.n_passed}/{leaf.n_entries}{tag}")
        for e in leaf.entries:
            mark = "ok " if e.passed else "BAD"
            lines.append(f"  [{mark}] ({', '.join(e.labels)}) lhs = {_side(e.lhs)} | rhs = {_side(e.rhs)}")
    bad = [(leaf.check, e) for leaf in report.walk() if leaf.required for e in leaf.counterexamples]
    for check, e in bad:
        lines.append(f"counterexample {check} ({', '.join(e.labels)})")
    lines.append(f"RESULT: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def report_records(report: VerificationReport) -> Iterable[str]:
    """One JSON object per entry."""
    for leaf in report.walk():
        for e in leaf.entries:
            yield _record(_entry_dict(leaf, e))


def _entry_dict(leaf: VerificationReport, e: Entry) -> dict:
    return {
        "check": leaf.check,
        "tuple": list(e.labels),
        "lhs": _side(e.lhs),
        "rhs": _side(e.rhs),
        "pass": e.passed,
        "required": leaf.required,
    }


def report_structured(report: VerificationReport) -> str:
    return "".join(r + "\n" for r in report_records(report))


def basis_text(B: BasisExtraction, title: str = "") -> str:
    lines = [f"# {title}" if title else "# partial crossed product basis", f"rank {B.rank}", "basis:"]
    for p in B.selected:
        lines.append(f"  {_pair(p)} = {B.generator(p)}")
    lines.append("generators:")
    for p, g in B.generators:
        if p in B.selected:
            continue
        if g.is_zero():
            lines.append(f"  {_pair(p)} = 0")
            continue
        coords = express_in_basis(B, g)
        lines.append(f"  {_pair(p)} = {g} = {_coords_text(coords)}")
    lines.append("pivots:")
    for step in B.trace:
        lines.append(f"  {_pair(step.pair)} column {step.column[0]}@{step.column[1]} pivot {step.pivot}")
    return "\n".join(lines) + "\n"


def basis_structured(B: BasisExtraction) -> str:
    out = [_record({"rank": B.rank, "selected": [list(p) for p in B.selected]})]
    for p, g in B.generators:
        coords = express_in_basis(B, g)
        out.append(_record({
            "generator": list(p),
            "selected": p in B.selected,
            "tensor": str(g),
            "coords": [[_pair(q), str(c)] for q, c in coords.items()],
        }))
    return "".join(r + "\n" for r in out)


def table_text(table: list[tuple[Pair, Pair, dict]], title: str = "") -> str:
    lines = [f"# {title}" if title else "# product table"]
    for p, q, coords in table:
        lines.append(f"({_pair(p)}) * ({_pair(q)}) = {_coords_text(coords)}")
    return "\n".join(lines) + "\n"


def table_structured(table: list[tuple[Pair, Pair, dict]]) -> str:
    return "".join(
        _record({"left": list(p), "right": list(q), "product": [[_pair(s), str(c)] for s, c in coords.items()]})
        + "\n"
        for p, q, coords in table
    )
