"""Plain-text definition format for algebras, Hopf algebras and actions.

Grammar (one statement per line, ``#`` starts a comment)::

    document   := header* block*
    header     := "name" IDENT | "provenance" TEXT | "params" IDENT*
                | "include" FILENAME
    block      := algebra | hopf | action
    algebra    := "algebra" IDENT NL alg_stmt* "end"
    hopf       := "hopf" IDENT NL (alg_stmt | hopf_stmt)* "end"
    action     := "action" IDENT NL act_stmt* "end"
    alg_stmt   := "basis" LABEL+ | "unit" element | "mul" LABEL LABEL "=" element
    hopf_stmt  := "delta" LABEL "=" tensor | "counit" LABEL "=" scalar
                | "antipode" LABEL "=" element
    act_stmt   := "hopf" IDENT | "target" IDENT
                | "act" LABEL LABEL "=" element | "omega" LABEL LABEL "=" element

    element    := term (("+" | "-") term)*        term := [scalar "*"]* LABEL
    tensor     := tterm (("+" | "-") tterm)*      tterm := [scalar "*"]* LABEL "@" LABEL
    scalar     := polynomial in declared parameters, e.g. (k1^2 + k2^2), 2, (3/2)

A term's trailing label names a basis element and every factor before it
is a scalar, so ``k1*1`` is ``k1`` times the basis element ``1``.  The
literal ``0`` is the zero element.  Products, action and cocycle entries
that are not listed are zero.  ``include`` pulls in the blocks and
parameters of another file, resolved relative to the including file.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from ._lexer import LexError, Token, TokenStream
from .algebra import AlgebraElement, StructureAlgebra, _sparse
from .errors import (
    DefinitionError,
    DefinitionSyntaxError,
    DuplicateBlock,
    UndeclaredLabel,
    UndeclaredParameter,
)
from .hopf import HopfData
from .partial_action import PartialActionData
from .symbolic import Polynomial, PolynomialSyntaxError, as_polynomial, parse_scalar_expr


@dataclass
class DefinitionDocument:
    name: str = ""
    provenance: str = ""
    params: tuple[str, ...] = ()
    algebras: dict[str, StructureAlgebra] = field(default_factory=dict)
    hopfs: dict[str, HopfData] = field(default_factory=dict)
    actions: dict[str, PartialActionData] = field(default_factory=dict)

    def block(self, name: str):
        for table in (self.actions, self.hopfs, self.algebras):
            if name in table:
                return table[name]
        raise KeyError(name)

    def action(self, name: str | None = None) -> PartialActionData:
        if name is not None:
            return self.actions[name]
        if not self.actions:
            raise KeyError("document defines no action block")
        return list(self.actions.values())[-1]


# -- element parsing ---------------------------------------------------------



def parse_linear(
    ts: TokenStream,
    spaces: tuple[StructureAlgebra, ...],
    resolve_param: Callable[[Token], Polynomial],
    on_bad_label: Callable[[Token], Exception] | None = None,
) -> list[tuple[Polynomial, tuple[int, ...]]]:
    """Parse ``sum coef * label1 @ label2 @ ...`` with one label per space.

    Returns ``[(coef, (index1, index2, ...)), ...]`` (not collected).
    """
    terms = []
    first = True
    while True:
        sign = 1
        if ts.at_op("+", "-"):
            sign = -1 if ts.next().text == "-" else 1
        elif not first:
            break
        first = False
        coef: Polynomial = Polynomial.constant(sign)
        # scalar factors: anything followed by '*'
        while True:
            tok = ts.peek
            if tok.kind in ("num", "ident") and not _is_scalar_factor(ts):
                break
            if tok.kind in ("num", "ident") or ts.at_op("(", "-"):
                coef = coef * _parse_factor(ts, resolve_param)
                ts.expect("*")
                continue
            raise LexError(f"expected a term, found {tok.text or 'end of input'!r}", tok.pos)
        tok = ts.peek
        if tok.text == "0" and "0" not in spaces[0].index and not ts.peek_at(1).text == "@":
            ts.next()
            terms.append((Polynomial(), (0,) * len(spaces)))
            if not ts.at_op("+", "-"):
                break
            continue
        legs = []
        for n, space in enumerate(spaces):
            if n:
                ts.expect("@")
            tok = ts.next()
            if tok.kind not in ("num", "ident"):
                raise LexError(f"expected a basis label, found {tok.text or 'end of input'!r}", tok.pos)
            if tok.text not in space.index:
                if on_bad_label is not None:
                    raise on_bad_label(tok)
                raise LexError(f"undeclared basis label {tok.text!r}", tok.pos)
            legs.append(space.index[tok.text])
        terms.append((coef, tuple(legs)))
        if not ts.at_op("+", "-"):
            break
    return terms


def _is_scalar_factor(ts: TokenStream) -> bool:
    nxt = ts.peek_at(1)
    if nxt.kind == "op" and nxt.text == "^":
        return True
    return nxt.kind == "op" and nxt.text == "*"


def _parse_factor(ts: TokenStream, resolve_param) -> Polynomial:
    tok = ts.peek
    if ts.accept("-"):
        return -_parse_factor(ts, resolve_param)
    if tok.kind == "num":
        ts.next()
        base = Polynomial.constant(int(tok.text))
    elif tok.kind == "ident":
        ts.next()
        base = resolve_param(tok)
    else:
        ts.expect("(")
        base = parse_scalar_expr(ts, resolve_param)
        ts.expect(")")
    if ts.accept("^"):
        e = ts.next()
        if e.kind != "num":
            raise LexError("exponent must be a non-negative integer", e.pos)
        base = base ** int(e.text)
    return base


def element_from_terms(space: StructureAlgebra, terms) -> AlgebraElement:
    coords: list = [0] * space.dim
    for c, (i,) in terms:
        coords[i] = coords[i] + c
    return AlgebraElement(space, tuple(as_polynomial(c) for c in coords))


# -- document parsing --------------------------------------------------------


class _Parser:
    def __init__(self, source: str, loader: Callable[[str, str], tuple[str, str]] | None):
        self.source = source
        self.loader = loader
        self.doc = DefinitionDocument()
        self.params: set[str] = set()
        self.line_no = 0
        self.line = ""
        self.offset = 0

    # errors carry 1-based line/column in the current line
    def err(self, cls, *args, pos: int = 0):
        return cls(*args, line=self.line_no, column=self.offset + pos + 1, source=self.source)

    def syntax(self, msg: str, pos: int = 0):
        return self.err(DefinitionSyntaxError, msg, pos=pos)

    def resolve_param(self, tok: Token) -> Polynomial:
        if tok.text not in self.params:
            raise self.err(UndeclaredParameter, tok.text, pos=tok.pos)
        return Polynomial.variable(tok.text)

    def bad_label(self, tok: Token):
        return self.err(UndeclaredLabel, tok.text, pos=tok.pos)

    def run(self, text: str) -> DefinitionDocument:
        lines = text.splitlines()
        i = 0
        while i < len(lines):
            self._set_line(i + 1, lines[i])
            words = self.line.split()
            i += 1
            if not words:
                continue
            kw = words[0]
            rest = self.line[len(kw):].strip()
            if kw == "name":
                self.doc.name = rest
            elif kw == "provenance":
                self.doc.provenance = rest
            elif kw == "params":
                for p in words[1:]:
                    if not p.isidentifier():
                        raise self.syntax(f"bad parameter name {p!r}", self.line.find(p))
                    self._declare_param(p)
            elif kw == "include":
                self._include(rest)
            elif kw in ("algebra", "hopf", "action"):
                if len(words) != 2:
                    raise self.syntax(f"expected '{kw} NAME'")
                start = self.line_no
                body = []
                while i < len(lines):
                    self._set_line(i + 1, lines[i])
                    i += 1
                    if self.line.split() == ["end"]:
                        break
                    body.append((i, lines[i - 1]))
                else:
                    self.line_no = start
                    raise self.syntax(f"block {words[1]!r} is missing 'end'")
                getattr(self, f"_block_{kw}")(words[1], start, body)
            else:
                raise self.syntax(f"unknown statement {kw!r}", self.line.find(kw))
        self.doc.params = tuple(sorted(self.params))
        return self.doc

    def _set_line(self, no: int, raw: str) -> None:
        self.line_no = no
        code = raw.split("#", 1)[0]
        self.offset = len(code) - len(code.lstrip())
        self.line = code.strip()

    def _declare_param(self, p: str) -> None:
        for table in (self.doc.algebras, self.doc.hopfs):
            for alg in table.values():
                if p in alg.basis:
                    raise self.syntax(f"parameter {p!r} clashes with a basis label")
        self.params.add(p)

    def _include(self, name: str) -> None:
        name = name.strip().strip('"')
        if self.loader is None:
            raise self.syntax("include is not available for this input")
        try:
            text, source = self.loader(name, self.source)
        except OSError as exc:
            raise self.syntax(f"cannot include {name!r}: {exc}") from None
        sub = _Parser(source, self.loader)
        sub.params = set(self.params)
        sub.doc.algebras = dict(self.doc.algebras)
        sub.doc.hopfs = dict(self.doc.hopfs)
        sub.doc.actions = dict(self.doc.actions)
        sub.run(text)
        self.params = sub.params
        self.doc.algebras = sub.doc.algebras
        self.doc.hopfs = sub.doc.hopfs
        self.doc.actions = sub.doc.actions

    def _check_new(self, name: str) -> None:
        if name in self.doc.algebras or name in self.doc.hopfs or name in self.doc.actions:
            raise self.err(DuplicateBlock, name, pos=self.line.find(name))

    def _statement(self, body_line: tuple[int, str]):
        """Split ``kw args = rhs``; returns (kw, args, rhs token stream, rhs offset)."""
        self._set_line(*body_line)
        if not self.line:
            return None
        lhs, eq, rhs = self.line.partition("=")
        words = lhs.split()
        rhs_offset = len(lhs) + 1
        return words, (rhs if eq else None), rhs_offset

    def _parse_rhs(self, rhs: str | None, rhs_offset: int, fn):
        if rhs is None:
            raise self.syntax("expected '='", len(self.line))
        saved = self.offset
        self.offset += rhs_offset
        try:
            ts = TokenStream(rhs)
            value = fn(ts)
            ts.expect_end()
        except (LexError, PolynomialSyntaxError) as exc:
            raise self.syntax(getattr(exc, "message", str(exc)), exc.pos) from None
        finally:
            self.offset = saved
        return value

    def _label(self, space: StructureAlgebra, label: str) -> int:
        if label not in space.index:
            raise self.err(UndeclaredLabel, label, pos=self.line.find(label))
        return space.index[label]

    def _element(self, space: StructureAlgebra, rhs: str | None, off: int) -> AlgebraElement:
        terms = self._parse_rhs(
            rhs, off, lambda ts: parse_linear(ts, (space,), self.resolve_param, self.bad_label)
        )
        return element_from_terms(space, terms)

    def _algebra_statements(self, name, start, body, extra=None):
        basis = None
        unit_stmt = None
        products = []
        rest = []
        for bl in body:
            st = self._statement(bl)
            if st is None:
                continue
            words, rhs, off = st
            kw = words[0]
            if kw == "basis":
                if basis is not None:
                    raise self.syntax("basis declared twice")
                basis = tuple(words[1:])
                if not basis or len(set(basis)) != len(basis):
                    raise self.syntax("basis must list distinct labels")
                clash = set(basis) & self.params
                if clash:
                    raise self.syntax(f"basis label {sorted(clash)[0]!r} clashes with a parameter")
            elif kw in ("unit", "mul"):
                if kw == "unit":
                    unit_stmt = (bl, words)
                else:
                    products.append((bl, words, rhs, off))
            elif extra is not None:
                rest.append(bl)
            else:
                raise self.syntax(f"unknown statement {kw!r} in algebra block")
        if basis is None:
            self.line_no = start
            raise self.syntax(f"block {name!r} declares no basis")
        space = StructureAlgebra(name, basis, tuple(tuple(() for _ in basis) for _ in basis), (0,) * len(basis))
        table = [[() for _ in basis] for _ in basis]
        seen = set()
        for bl, words, rhs, off in products:
            self._set_line(*bl)
            if len(words) != 3:
                raise self.syntax("expected 'mul A B = element'")
            i, j = self._label(space, words[1]), self._label(space, words[2])
            if (i, j) in seen:
                raise self.syntax(f"product {words[1]}*{words[2]} given twice")
            seen.add((i, j))
            table[i][j] = _sparse(self._element(space, rhs, off).coords)
        if unit_stmt is None:
            self.line_no = start
            raise self.syntax(f"block {name!r} declares no unit")
        self._set_line(*unit_stmt[0])
        unit_text = self.line[len("unit"):].strip()
        unit = self._element(space, unit_text, len(self.line) - len(unit_text))
        alg = StructureAlgebra(name, basis, tuple(map(tuple, table)), unit.coords)
        return alg, rest

    def _block_algebra(self, name, start, body):
        self.line_no = start
        self._check_new(name)
        alg, _ = self._algebra_statements(name, start, body)
        self.doc.algebras[name] = alg

    def _block_hopf(self, name, start, body):
        self.line_no = start
        self._check_new(name)
        alg, rest = self._algebra_statements(name, start, body, extra=True)
        dim = alg.dim
        delta: list = [() for _ in range(dim)]
        counit: list = [Polynomial() for _ in range(dim)]
        antipode: list = [(0,) * dim for _ in range(dim)]
        for bl in rest:
            words, rhs, off = self._statement(bl)
            kw = words[0]
            if kw not in ("delta", "counit", "antipode"):
                raise self.syntax(f"unknown statement {kw!r} in hopf block")
            if len(words) != 2:
                raise self.syntax(f"expected '{kw} LABEL = ...'")
            i = self._label(alg, words[1])
            if kw == "delta":
                terms = self._parse_rhs(
                    rhs, off, lambda ts: parse_linear(ts, (alg, alg), self.resolve_param, self.bad_label)
                )
                acc: dict = {}
                for c, (a, b) in terms:
                    acc[a, b] = acc.get((a, b), 0) + c
                delta[i] = tuple((a, b, c) for (a, b), c in sorted(acc.items()) if c)
            elif kw == "counit":
                counit[i] = self._parse_rhs(rhs, off, lambda ts: parse_scalar_expr(ts, self.resolve_param))
            else:
                antipode[i] = self._element(alg, rhs, off).coords
        self.doc.hopfs[name] = HopfData(alg, tuple(delta), tuple(counit), tuple(antipode))

    def _block_action(self, name, start, body):
        self.line_no = start
        self._check_new(name)
        hopf = target = None
        entries = []
        for bl in body:
            st = self._statement(bl)
            if st is None:
                continue
            words, rhs, off = st
            kw = words[0]
            if kw in ("hopf", "target"):
                if len(words) != 2:
                    raise self.syntax(f"expected '{kw} NAME'")
                ref = words[1]
                if kw == "hopf":
                    if ref not in self.doc.hopfs:
                        raise self.err(UndeclaredLabel, ref, pos=self.line.find(ref))
                    hopf = self.doc.hopfs[ref]
                else:
                    if ref in self.doc.algebras:
                        target = self.doc.algebras[ref]
                    elif ref in self.doc.hopfs:
                        target = self.doc.hopfs[ref].algebra
                    else:
                        raise self.err(UndeclaredLabel, ref, pos=self.line.find(ref))
            elif kw in ("act", "omega"):
                entries.append((bl, words, rhs, off))
            else:
                raise self.syntax(f"unknown statement {kw!r} in action block")
        if hopf is None or target is None:
            self.line_no = start
            raise self.syntax(f"action {name!r} needs 'hopf' and 'target'")
        H = hopf.algebra
        act = [[() for _ in target.basis] for _ in H.basis]
        om = [[() for _ in H.basis] for _ in H.basis]
        seen = set()
        for bl, words, rhs, off in entries:
            self._set_line(*bl)
            kw = words[0]
            if len(words) != 3:
                raise self.syntax(f"expected '{kw} H_LABEL {'A' if kw == 'act' else 'H'}_LABEL = element'")
            i = self._label(H, words[1])
            j = self._label(target if kw == "act" else H, words[2])
            if (kw, i, j) in seen:
                raise self.syntax(f"{kw} {words[1]} {words[2]} given twice")
            seen.add((kw, i, j))
            value = _sparse(self._element(target, rhs, off).coords)
            (act if kw == "act" else om)[i][j] = value
        self.doc.actions[name] = PartialActionData(name, hopf, target, tuple(map(tuple, act)), tuple(map(tuple, om)))


def _file_loader(name: str, source: str) -> tuple[str, str]:
    base = Path(source).parent if source else Path.cwd()
    path = base / name
    return path.read_text(encoding="utf-8"), str(path)


def parse_definition(text: str, source: str = "", loader=None) -> DefinitionDocument:
    """Parse and validate a definition document.

    Raises a :class:`~partialhopf.errors.DefinitionError` subclass carrying
    the line and column of the problem.
    """
    parser = _Parser(source, loader if loader is not None else _file_loader)
    try:
        return parser.run(text)
    except DefinitionError:
        raise
    except (LexError, PolynomialSyntaxError) as exc:
        raise parser.syntax(getattr(exc, "message", str(exc)), exc.pos) from None


def load_definition(path: str | Path) -> DefinitionDocument:
    path = Path(path)
    return parse_definition(path.read_text(encoding="utf-8"), str(path))


# -- printing ------------------------------------------------------------------


def _algebra_lines(alg: StructureAlgebra) -> list[str]:
    lines = ["  basis " + " ".join(alg.basis), f"  unit {alg.unit()}"]
    for i, a in enumerate(alg.basis):
        for j, b in enumerate(alg.basis):
            lines.append(f"  mul {a} {b} = {alg.product(i, j)}")
    return lines


def print_definition(doc: DefinitionDocument) -> str:
    """Serialize a document; ``parse_definition(print_definition(d)) == d``."""
    out = []
    if doc.name:
        out.append(f"name {doc.name}")
    if doc.provenance:
        out.append(f"provenance {doc.provenance}")
    if doc.params:
        out.append("params " + " ".join(doc.params))
    for name, alg in doc.algebras.items():
        out += ["", f"algebra {name}", *_algebra_lines(alg), "end"]
    for name, hopf in doc.hopfs.items():
        out += ["", f"hopf {name}", *_algebra_lines(hopf.algebra)]
        for i, b in enumerate(hopf.basis):
            out.append(f"  delta {b} = {hopf.delta_of(i)}")
        for i, b in enumerate(hopf.basis):
            out.append(f"  counit {b} = {as_polynomial(hopf.counit_values[i])}")
        for i, b in enumerate(hopf.basis):
            out.append(f"  antipode {b} = {hopf.antipode(i)}")
        out.append("end")
    for name, P in doc.actions.items():
        hopf_name = next((k for k, v in doc.hopfs.items() if v is P.hopf or v == P.hopf), P.H.name)
        out += ["", f"action {name}", f"  hopf {hopf_name}", f"  target {P.A.name}"]
        for i, h in enumerate(P.H.basis):
            for j, a in enumerate(P.A.basis):
                out.append(f"  act {h} {a} = {P.action_value(i, j)}")
        for i, h in enumerate(P.H.basis):
            for j, l in enumerate(P.H.basis):
                out.append(f"  omega {h} {l} = {P.cocycle_value(i, j)}")
        out.append("end")
    return "\n".join(out) + "\n"
