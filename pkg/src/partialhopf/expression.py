"""Small expression language for exploring an action interactively.

Values are scalars (polynomials), elements of the target algebra ``A`` or
of the Hopf algebra ``H``, tensors in ``H ⊗ H`` and crossed-product
elements.  Functions::

    act(h, a)     omega(h, l)     smash(a, h)     tensor(a, h)
    counit(h)     antipode(h)     delta(h)

``smash(a, h)`` is ``a # h``; ``tensor(a, h)`` is the plain ``a ⊗ h``,
which need not lie in the crossed product.

A bare label resolves in the algebra the position expects (``H`` inside
the first slot of ``act``, ``A`` at top level), falling back to the other
algebra; a number that is not a label there is a scalar.  ``*`` multiplies
within one algebra, in the crossed product, or by scalars.
"""
from __future__ import annotations

from typing import Mapping

from ._lexer import LexError, Token, TokenStream
from .algebra import AlgebraElement, TensorElement
from .crossed_product import SmashElement, smash_mul, smash_of
from .errors import DefinitionSyntaxError, UndeclaredLabel, UndeclaredParameter
from .partial_action import PartialActionData, act, cocycle
from .symbolic import Polynomial


class EvalTypeError(DefinitionSyntaxError):
    pass


def _is_scalar(v) -> bool:
    return isinstance(v, Polynomial)


class _Evaluator:
    def __init__(self, P: PartialActionData, params):
        self.P = P
        self.params = set(params)

    def fail(self, msg: str, pos: int, cls=DefinitionSyntaxError):
        return cls(msg, line=1, column=pos + 1)

    def expr(self, ts: TokenStream, ctx: str):
        neg = False
        if ts.at_op("+", "-"):
            neg = ts.next().text == "-"
        acc = self.term(ts, ctx)
        if neg:
            acc = self.neg(acc)
        while ts.at_op("+", "-"):
            op = ts.next()
            rhs = self.term(ts, ctx)
            acc = self.add(acc, self.neg(rhs) if op.text == "-" else rhs, op.pos)
        return acc

    def term(self, ts, ctx):
        acc = self.unary(ts, ctx)
        while ts.at_op("*", "/"):
            op = ts.next()
            rhs = self.unary(ts, ctx)
            if op.text == "*":
                acc = self.mul(acc, rhs, op.pos)
            else:
                if not (_is_scalar(rhs) and rhs.is_constant() and rhs):
                    raise self.fail("division only by a nonzero number", op.pos, EvalTypeError)
                acc = self.mul(acc, Polynomial.constant(1) / rhs.constant_value(), op.pos)
        return acc

    def unary(self, ts, ctx):
        if ts.accept("-"):
            return self.neg(self.unary(ts, ctx))
        base = self.atom(ts, ctx)
        if ts.at_op("^"):
            op = ts.next()
            e = ts.next()
            if e.kind != "num":
                raise self.fail("exponent must be a non-negative integer", e.pos)
            n = int(e.text)
            if _is_scalar(base):
                return base ** n
            if isinstance(base, AlgebraElement):
                out = base.algebra.unit()
                for _ in range(n):
                    out = out * base
                return out
            raise self.fail("cannot raise this value to a power", op.pos, EvalTypeError)
        return base

    def atom(self, ts, ctx):
        tok = ts.peek
        if ts.accept("("):
            v = self.expr(ts, ctx)
            ts.expect(")")
            return v
        if tok.kind == "ident" and ts.peek_at(1).text == "(" and ts.peek_at(1).kind == "op":
            return self.call(ts)
        if tok.kind in ("num", "ident"):
            ts.next()
            return self.name(tok, ctx)
        raise self.fail(f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def name(self, tok: Token, ctx: str):
        P = self.P
        first, second = (P.A, P.H) if ctx == "A" else (P.H, P.A)
        if tok.text in first.index:
            return first.basis_element(tok.text)
        if tok.kind == "num":
            return Polynomial.constant(int(tok.text))
        if tok.text in self.params:
            return Polynomial.variable(tok.text)
        if tok.text in second.index:
            return second.basis_element(tok.text)
        # names shaped like a declared parameter family (k7 next to k1..k4)
        stem = tok.text.rstrip("0123456789")
        if stem != tok.text and stem in {p.rstrip("0123456789") for p in self.params}:
            raise UndeclaredParameter(tok.text, line=1, column=tok.pos + 1)
        raise UndeclaredLabel(tok.text, line=1, column=tok.pos + 1)

    def call(self, ts: TokenStream):
        fn = ts.next()
        ts.expect("(")
        P = self.P
        name = fn.text
        if name in ("act", "omega", "smash", "tensor"):
            ctx1, ctx2 = {"act": ("H", "A"), "omega": ("H", "H"), "smash": ("A", "H"), "tensor": ("A", "H")}[name]
            x = self.expr(ts, ctx1)
            ts.expect(",")
            y = self.expr(ts, ctx2)
            ts.expect(")")
            x = self.coerce(x, P.H if ctx1 == "H" else P.A, fn.pos)
            y = self.coerce(y, P.H if ctx2 == "H" else P.A, fn.pos)
            if name == "act":
                return act(P, x, y)
            if name == "omega":
                return cocycle(P, x, y)
            if name == "tensor":
                return SmashElement(TensorElement.pure(x, y))
            return smash_of(P, x, y)
        if name in ("counit", "antipode", "delta"):
            x = self.coerce(self.expr(ts, "H"), P.H, fn.pos)
            ts.expect(")")
            if name == "counit":
                return Polynomial() + P.hopf.counit_of(x)
            if name == "antipode":
                return P.hopf.antipode_of(x)
            return P.hopf.delta_of_element(x)
        raise self.fail(f"unknown function {name!r}", fn.pos)

    def coerce(self, v, algebra, pos):
        if _is_scalar(v):
            return v * algebra.unit()
        if isinstance(v, AlgebraElement) and v.algebra.name == algebra.name and v.algebra.basis == algebra.basis:
            return v
        raise self.fail(f"expected an element of {algebra.name}", pos, EvalTypeError)

    def neg(self, v):
        return -v

    def add(self, x, y, pos):
        if _is_scalar(x) and _is_scalar(y):
            return x + y
        if type(x) is type(y):
            try:
                return x + y
            except Exception as exc:
                raise self.fail(str(exc), pos, EvalTypeError) from None
        raise self.fail("cannot add values of different kinds", pos, EvalTypeError)

    def mul(self, x, y, pos):
        if _is_scalar(x) or _is_scalar(y):
            return x * y
        if isinstance(x, SmashElement) and isinstance(y, SmashElement):
            return smash_mul(self.P, x, y)
        if isinstance(x, AlgebraElement) and isinstance(y, AlgebraElement):
            try:
                return x * y
            except Exception as exc:
                raise self.fail(str(exc), pos, EvalTypeError) from None
        raise self.fail("cannot multiply values of these kinds", pos, EvalTypeError)


def evaluate_expression(P: PartialActionData, text: str, params=None):
    """Evaluate ``text`` symbolically; returns a scalar, element or tensor."""
    params = P.parameters() if params is None else params
    ev = _Evaluator(P, params)
    try:
        ts = TokenStream(text)
        value = ev.expr(ts, "A")
        ts.expect_end()
    except LexError as exc:
        raise DefinitionSyntaxError(str(exc), line=1, column=exc.pos + 1) from None
    return value


def specialize_value(value, assignment: Mapping[str, object]):
    """Evaluate every coefficient of ``value`` at ``assignment`` (strict)."""
    if isinstance(value, Polynomial):
        return Polynomial.constant(value.evaluate(assignment))
    if isinstance(value, (AlgebraElement, TensorElement, SmashElement)):
        return value.evaluate(assignment)
    raise TypeError(type(value).__name__)
