"""Exact multivariate polynomials over the rationals in named parameters.

A :class:`Polynomial` is kept in a canonical normal form (no zero
coefficients, integral coefficients stored as ``int``), so deciding an
identity reduces to checking that a difference is the zero polynomial.

Monomials are tuples of ``(name, exponent)`` pairs sorted by name.  Terms
print in pure lexicographic order: parameters compare by name, and a larger
exponent on an earlier parameter comes first.  The constant term is last::

    >>> p = parse_polynomial("(k1 + k2)*(k1 - k2)")
    >>> str(p)
    'k1^2 - k2^2'

Scalars elsewhere in the package may be plain numbers (``int`` or
``Fraction``) or polynomials; the ``scalar_*`` helpers at the bottom of
this module work uniformly on both.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from ._lexer import LexError, TokenStream
from .errors import MissingParameter, NotDivisible

Monomial = tuple[tuple[str, int], ...]
Coefficient = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()
_LAST = chr(0x10FFFF)


def _normalize_coef(c) -> Coefficient:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@lru_cache(maxsize=1 << 16)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


@lru_cache(maxsize=1 << 14)
def _mono_order_key(m: Monomial):
    return tuple((name, -e) for name, e in m) + ((_LAST, 0),)


def _mono_divides(d: Monomial, m: Monomial) -> bool:
    exps = dict(m)
    return all(exps.get(name, 0) >= e for name, e in d)


def _mono_div(m: Monomial, d: Monomial) -> Monomial:
    exps = dict(m)
    for name, e in d:
        exps[name] -= e
    return tuple((name, e) for name, e in sorted(exps.items()) if e)


def _format_monomial(m: Monomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)


def _format_coef(c: Coefficient) -> str:
    if isinstance(c, Fraction):
        return f"({c.numerator}/{c.denominator})"
    return str(c)


class Polynomial:
    """Immutable polynomial with rational coefficients in named parameters."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None):
        clean: dict[Monomial, Coefficient] = {}
        for mono, c in (terms or {}).items():
            c = _normalize_coef(c)
            if c:
                key = tuple(sorted((str(n), int(e)) for n, e in mono if e))
                if any(e < 0 for _, e in key):
                    raise ValueError("negative exponent in monomial")
                clean[key] = _normalize_coef(clean.get(key, 0) + c)
                if not clean[key]:
                    del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Coefficient]) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = _normalize_coef(c)
        return cls._raw({ONE_MONOMIAL: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls._raw({((name, 1),): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Coefficient]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=lambda t: _mono_order_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_MONOMIAL in self._terms)

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get(ONE_MONOMIAL, 0)

    def parameters(self) -> tuple[str, ...]:
        return tuple(sorted({name for mono in self._terms for name, _ in mono}))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def leading_term(self) -> tuple[Monomial, Coefficient]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = min(self._terms, key=_mono_order_key)
        return mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = _normalize_coef(s)
            else:
                out.pop(mono, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self._terms or not other._terms:
                return ZERO
            out: dict[Monomial, Coefficient] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = _mono_mul(m1, m2)
                    out[m] = out.get(m, 0) + c1 * c2
            return Polynomial._raw({m: _normalize_coef(c) for m, c in out.items() if c})
        if isinstance(other, (int, Rational)):
            if not other:
                return ZERO
            other = _normalize_coef(other)
            return Polynomial._raw({m: _normalize_coef(c * other) for m, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, Polynomial):
            return self.divexact(other)
        return NotImplemented

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        """Return ``self / divisor``; raise :class:`NotDivisible` if not exact.

        Plain multivariate division by a single divisor under the
        lexicographic order.  If the divisor divides ``self`` every partial
        remainder is again a multiple, so a leading term that fails to
        divide proves non-divisibility.
        """
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_constant():
            return self * (1 / Fraction(divisor.constant_value()))
        dmono, dcoef = divisor.leading_term()
        quotient: dict[Monomial, Coefficient] = {}
        rem = self
        while rem:
            mono, coef = rem.leading_term()
            if not _mono_divides(dmono, mono):
                raise NotDivisible(f"{divisor} does not divide {self}")
            qm = _mono_div(mono, dmono)
            qc = _normalize_coef(Fraction(coef) / dcoef)
            quotient[qm] = qc
            rem = rem - Polynomial._raw({qm: qc}) * divisor
        return Polynomial._raw(quotient)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, object]) -> Coefficient:
        """Exact value at ``assignment``; every parameter must be assigned."""
        total: Coefficient = 0
        for mono, c in self._terms.items():
            v = c
            for name, e in mono:
                try:
                    x = assignment[name]
                except KeyError:
                    raise MissingParameter(name) from None
                v = v * _normalize_coef(x) ** e
            total = total + v
        return _normalize_coef(total)

    def subs(self, assignment: Mapping[str, object]) -> "Polynomial":
        """Partial substitution: assigned parameters become numbers."""
        out = ZERO
        for mono, c in self._terms.items():
            v = c
            rest = []
            for name, e in mono:
                if name in assignment:
                    v = v * _normalize_coef(assignment[name]) ** e
                else:
                    rest.append((name, e))
            out = out + Polynomial._raw({tuple(rest): _normalize_coef(v)} if v else {})
        return out

    # -- comparison, hashing, printing -----------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self._terms.get(ONE_MONOMIAL, 0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(ONE_MONOMIAL, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = _format_coef(a)
            elif a == 1:
                body = _format_monomial(mono)
            else:
                body = f"{_format_coef(a)}*{_format_monomial(mono)}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def __reduce__(self):
        return (Polynomial, (self._terms,))


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({ONE_MONOMIAL: 1})


def var(name: str) -> Polynomial:
    return Polynomial.variable(name)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_eval(p: Polynomial, assignment: Mapping[str, object]) -> Coefficient:
    return as_polynomial(p).evaluate(assignment)


def poly_is_zero(p: Polynomial) -> bool:
    return as_polynomial(p).is_zero()


# -- parsing ----------------------------------------------------------------


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.message = message
        self.pos = pos


def parse_scalar_expr(ts: TokenStream, resolve) -> Polynomial:
    """Parse ``expr := term (('+'|'-') term)*`` from ``ts``.

    ``resolve(token)`` maps an identifier token to a polynomial; it may
    raise to reject undeclared names.
    """
    neg = False
    if ts.at_op("+", "-"):
        neg = ts.next().text == "-"
    acc = _parse_term(ts, resolve)
    if neg:
        acc = -acc
    while ts.at_op("+", "-"):
        op = ts.next().text
        t = _parse_term(ts, resolve)
        acc = acc + t if op == "+" else acc - t
    return acc


def _parse_term(ts: TokenStream, resolve) -> Polynomial:
    acc = _parse_power(ts, resolve)
    while ts.at_op("*", "/"):
        op = ts.next()
        rhs = _parse_power(ts, resolve)
        if op.text == "*":
            acc = acc * rhs
        else:
            if not rhs.is_constant() or not rhs:
                raise PolynomialSyntaxError("division only by a nonzero number", op.pos)
            acc = acc / rhs.constant_value()
    return acc


def _parse_power(ts: TokenStream, resolve) -> Polynomial:
    base = _parse_atom(ts, resolve)
    if ts.accept("^"):
        tok = ts.next()
        if tok.kind != "num":
            raise PolynomialSyntaxError("exponent must be a non-negative integer", tok.pos)
        base = base ** int(tok.text)
    return base


def _parse_atom(ts: TokenStream, resolve) -> Polynomial:
    tok = ts.peek
    if tok.kind == "num":
        ts.next()
        return Polynomial.constant(int(tok.text))
    if tok.kind == "ident":
        ts.next()
        return resolve(tok)
    if ts.accept("("):
        inner = parse_scalar_expr(ts, resolve)
        ts.expect(")")
        return inner
    if ts.at_op("-"):
        ts.next()
        return -_parse_power(ts, resolve)
    raise PolynomialSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_polynomial(text: str, parameters: Iterable[str] | None = None) -> Polynomial:
    """Parse the canonical text form (and any equivalent expression).

    When ``parameters`` is given, identifiers outside it are rejected.
    """
    allowed = None if parameters is None else set(parameters)

    def resolve(tok):
        if allowed is not None and tok.text not in allowed:
            raise PolynomialSyntaxError(f"unknown parameter {tok.text!r}", tok.pos)
        return Polynomial.variable(tok.text)

    try:
        ts = TokenStream(text)
        p = parse_scalar_expr(ts, resolve)
        ts.expect_end()
    except LexError as exc:
        raise PolynomialSyntaxError(str(exc), exc.pos) from None
    return p


# -- scalar helpers -----------------------------------------------------------
#
# Algebra coordinates are "scalars": either Polynomial (symbolic mode) or
# int/Fraction (after specializing parameters to numbers).


def as_polynomial(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


def scalar_is_constant(x) -> bool:
    return not isinstance(x, Polynomial) or x.is_constant()


def scalar_exact_div(a, b):
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        return as_polynomial(a).divexact(as_polynomial(b))
    return _normalize_coef(Fraction(a) / b)


def scalar_eval(x, assignment: Mapping[str, object]) -> Coefficient:
    if isinstance(x, Polynomial):
        return x.evaluate(assignment)
    return _normalize_coef(x)


def scalar_str(x) -> str:
    return str(as_polynomial(x))


def scalar_parameters(x) -> tuple[str, ...]:
    return x.parameters() if isinstance(x, Polynomial) else ()
