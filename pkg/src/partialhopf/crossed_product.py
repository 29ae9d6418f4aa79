"""Partial crossed products ``A # H`` built from a twisted partial action.

The product on ``A ⊗ H`` is

    (a ⊗ h)(b ⊗ l) = a (h1 · b) ω(h2, l1) ⊗ h3 l2

and ``A # H`` is the image of right multiplication by ``1_A ⊗ 1_H``,
spanned by the generators ``a # h = a (h1 · 1_A) ⊗ h2``.

A basis of ``A # H`` is extracted by fraction-free (Bareiss) elimination
over the polynomial ring, treating parameters as independent
indeterminates; the resulting rank is the generic rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import TensorElement
from .errors import NotDivisible, NotInSpan
from .partial_action import PartialActionData, _act_sparse, _omega_basis
from .report import Entry, VerificationReport
from .symbolic import Polynomial, as_polynomial, scalar_eval, scalar_exact_div, scalar_is_constant

Pair = tuple[str, str]


@dataclass(frozen=True, eq=False)
class SmashElement:
    """An element of ``A ⊗ H`` produced by the crossed-product operations."""

    underlying: TensorElement

    def __add__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        return SmashElement(self.underlying + other.underlying)

    def __sub__(self, other):
        if not isinstance(other, SmashElement):
            return NotImplemented
        return SmashElement(self.underlying - other.underlying)

    def __neg__(self):
        return SmashElement(-self.underlying)

    def __mul__(self, other):
        if isinstance(other, SmashElement):
            return NotImplemented  # needs the action data: use smash_mul
        return SmashElement(self.underlying * other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SmashElement):
            return NotImplemented
        return self.underlying == other.underlying

    def __hash__(self) -> int:
        return hash(self.underlying)

    def is_zero(self) -> bool:
        return self.underlying.is_zero()

    def evaluate(self, assignment) -> "SmashElement":
        return SmashElement(self.underlying.evaluate(assignment))

    def __str__(self) -> str:
        return str(self.underlying)


class Ratio:
    """Quotient of two polynomials whose division was not exact."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = as_polynomial(num)
        self.den = as_polynomial(den)

    def __eq__(self, other) -> bool:
        if isinstance(other, Ratio):
            return self.num * other.den == other.num * self.den
        return self.num == as_polynomial(other) * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _ratio(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator")
    try:
        return scalar_exact_div(num, den)
    except NotDivisible:
        return Ratio(num, den)


# -- products ------------------------------------------------------------------

_CACHE_LIMIT = 32
_basis_product_cache: dict[int, tuple[PartialActionData, dict]] = {}


def _basis_products(P: PartialActionData) -> dict:
    hit = _basis_product_cache.get(id(P))
    if hit is not None and hit[0] is P:
        return hit[1]
    if len(_basis_product_cache) >= _CACHE_LIMIT:
        _basis_product_cache.pop(next(iter(_basis_product_cache)))
    table: dict = {}
    _basis_product_cache[id(P)] = (P, table)
    return table


def _basis_product(P: PartialActionData, a: int, h: int, b: int, l: int) -> dict:
    """``(a ⊗ h)(b ⊗ l)`` as ``{(i, j): coef}``."""
    cache = _basis_products(P)
    key = (a, h, b, l)
    if key in cache:
        return cache[key]
    A, Hd = P.A, P.hopf
    H = Hd.algebra
    ea = [0] * A.dim
    ea[a] = 1
    eb = [0] * A.dim
    eb[b] = 1
    out: dict = {}
    for (h1, h2, h3), c in Hd.coproduct_indices(h, 3):
        moved = _act_sparse(P, ((h1, 1),), eb)
        if not any(moved):
            continue
        left = A.mul_coords(ea, moved)
        for l1, l2, d in Hd.delta[l]:
            w = _omega_basis(P, h2, l1)
            if not any(w):
                continue
            coords = A.mul_coords(left, w)
            hl = H.table[h3][l2]
            cd = c * d
            for i, x in enumerate(coords):
                if not x:
                    continue
                for j, y in hl:
                    out[i, j] = out.get((i, j), 0) + cd * x * y
    result = {k: v for k, v in sorted(out.items()) if v}
    cache[key] = result
    return result


def _tensor_mul(P: PartialActionData, x: TensorElement, y: TensorElement) -> TensorElement:
    acc: dict = {}
    H = P.H
    for (a, h), c in x.coords.items():
        for (b, l), d in y.coords.items():
            cd = c * d
            for k, v in _basis_product(P, a, h, b, l).items():
                acc[k] = acc.get(k, 0) + cd * v
    return TensorElement(P.A, H, {k: v for k, v in sorted(acc.items()) if v})


def smash_mul(P: PartialActionData, x: SmashElement, y: SmashElement) -> SmashElement:
    """Bilinear extension of ``(a ⊗ h)(b ⊗ l) = a(h1·b)ω(h2,l1) ⊗ h3 l2``."""
    return SmashElement(_tensor_mul(P, x.underlying, y.underlying))


def tensor_mul(P: PartialActionData, x: TensorElement, y: TensorElement) -> TensorElement:
    """The same product on arbitrary elements of ``A ⊗ H``."""
    return _tensor_mul(P, x, y)


def smash_of(P: PartialActionData, a, h) -> SmashElement:
    """``a # h = a (h1 · 1_A) ⊗ h2`` for labels or elements ``a``, ``h``."""
    A, Hd = P.A, P.hopf
    a_el = A.basis_element(a) if isinstance(a, str) else a
    h_el = Hd.algebra.basis_element(h) if isinstance(h, str) else h
    one = list(A.unit_coords)
    terms = []
    for hi, hc in enumerate(h_el.coords):
        if not hc:
            continue
        for h1, h2, c in Hd.delta[hi]:
            coords = A.mul_coords(a_el.coords, _act_sparse(P, ((h1, 1),), one))
            terms += [(hc * c * x, i, h2) for i, x in enumerate(coords) if x]
    return SmashElement(TensorElement.from_terms(A, Hd.algebra, terms))


def smash_unit(P: PartialActionData) -> SmashElement:
    return smash_of(P, P.A.unit(), P.H.unit())


def generator_pairs(P: PartialActionData) -> list[Pair]:
    """All ``(a, h)`` label pairs in scan order: H-basis outer, A-basis inner."""
    return [(a, h) for h in P.H.basis for a in P.A.basis]


# -- basis extraction ------------------------------------------------------------


@dataclass(frozen=True)
class PivotStep:
    pair: Pair
    column: Pair
    pivot: object


@dataclass(frozen=True)
class BasisExtraction:
    generators: tuple[tuple[Pair, SmashElement], ...]
    selected: tuple[Pair, ...]
    rank: int
    trace: tuple[PivotStep, ...]
    # reduced rows of the selected generators, each with its combination
    # over the selected generators (Bareiss state, used for coordinates)
    _rows: tuple = ()
    _pivot_cols: tuple = ()
    _combos: tuple = ()
    left_name: str = ""
    right_basis: tuple[str, ...] = ()

    @property
    def pivots(self) -> tuple:
        return tuple(step.pivot for step in self.trace)

    def generator(self, pair: Pair) -> SmashElement:
        for p, g in self.generators:
            if p == pair:
                return g
        raise KeyError(pair)

    def degeneracy_polynomials(self) -> tuple[Polynomial, ...]:
        """Non-constant pivots: specializations vanishing on one may drop rank."""
        return tuple(as_polynomial(p) for p in self.pivots if not scalar_is_constant(p))


def _bareiss_reduce(vec: list, combo: list, rows, pivot_cols, combos, pivots) -> tuple[list, list, object]:
    """Run ``vec`` through the stored Bareiss steps.

    Returns the reduced vector, its combination and the accumulated
    multiplier ``s`` (the current last pivot).  Every division is exact by
    Sylvester's identity.
    """
    prev = 1
    for row, col, rcombo, p in zip(rows, pivot_cols, combos, pivots):
        f = vec[col]
        vec = [scalar_exact_div(p * v - f * r, prev) if (v or (f and r)) else 0 for v, r in zip(vec, row)]
        combo = [scalar_exact_div(p * v - f * r, prev) if (v or (f and r)) else 0 for v, r in zip(combo, rcombo)]
        prev = p
    return vec, combo, prev


def _choose_pivot(vec: Sequence):
    first = None
    for k, v in enumerate(vec):
        if not v:
            continue
        if scalar_is_constant(v):
            return k
        if first is None:
            first = k
    return first


def extract_basis(P: PartialActionData) -> BasisExtraction:
    """Select an independent subset of the ``a # h`` generators.

    Generators are scanned H-basis first (``a # 1`` for every ``a``, then
    ``a # g`` and so on); a generator is kept when it is independent of the
    ones kept before it.  The pivot column of a kept row is its first
    constant nonzero entry in row-major ``(a, h)`` order, or its first
    nonzero entry when none is constant.
    """
    A, H = P.A, P.H
    n = A.dim * H.dim
    gens = tuple((pair, smash_of(P, *pair)) for pair in generator_pairs(P))
    rows: list = []
    cols: list = []
    combos: list = []
    pivots: list = []
    selected: list = []
    trace: list = []
    for pair, g in gens:
        r = len(selected)
        vec = g.underlying.vector()
        combo = [0] * (n + 1)  # combination over the selected generators
        combo[r] = 1
        red, cmb, _ = _bareiss_reduce(vec, combo, rows, cols, combos, pivots)
        k = _choose_pivot(red)
        if k is None:
            continue
        rows.append(red)
        cols.append(k)
        combos.append(cmb)
        pivots.append(red[k])
        selected.append(pair)
        trace.append(PivotStep(pair, (A.basis[k // H.dim], H.basis[k % H.dim]), red[k]))
    return BasisExtraction(
        gens, tuple(selected), len(selected), tuple(trace),
        tuple(rows), tuple(cols), tuple(combos), A.name, H.basis,
    )


def express_in_basis(B: BasisExtraction, x: SmashElement | TensorElement) -> dict[Pair, object]:
    """Coordinates of ``x`` over ``B.selected`` (zeros omitted).

    Coordinates are polynomials when the division is exact and
    :class:`Ratio` values otherwise.  Raises :class:`NotInSpan` when ``x``
    has a nonzero residual after elimination.
    """
    t = x.underlying if isinstance(x, SmashElement) else x
    n = t.left.dim * t.right.dim
    combo = [0] * (n + 1)
    combo[B.rank] = 1
    red, cmb, s = _bareiss_reduce(t.vector(), combo, B._rows, B._pivot_cols, B._combos, B.pivots)
    if any(red):
        raise NotInSpan(f"{t} is not in the span of the extracted basis")
    # red = s*x + sum_j cmb[j] g_j = 0  =>  x = -sum_j (cmb[j]/s) g_j
    out = {}
    for j, pair in enumerate(B.selected):
        c = cmb[j]
        if c:
            out[pair] = _ratio(-c, s)
    return out


def product_table(P: PartialActionData, B: BasisExtraction, over: str = "basis") -> list[tuple[Pair, Pair, dict]]:
    """Products of basis (or all nonzero generator) pairs in ``#``-coordinates.

    Rows come out in scan order.  Propagates :class:`NotInSpan`.
    """
    if over == "basis":
        elems = [(p, B.generator(p)) for p in B.selected]
    elif over == "generators":
        elems = [(p, g) for p, g in B.generators if not g.is_zero()]
    else:
        raise ValueError(f"unknown table domain {over!r}")
    table = []
    for p, x in elems:
        for q, y in elems:
            table.append((p, q, express_in_basis(B, smash_mul(P, x, y))))
    return table


def structure_constants(P: PartialActionData, B: BasisExtraction) -> list[list[dict[int, object]]]:
    """``c[i][j] = {k: coef}`` with ``x_i x_j = sum_k coef x_k`` over ``B.selected``."""
    index = {p: k for k, p in enumerate(B.selected)}
    r = B.rank
    c: list = [[{} for _ in range(r)] for _ in range(r)]
    for p, q, coords in product_table(P, B, "basis"):
        c[index[p]][index[q]] = {index[s]: v for s, v in coords.items()}
    return c


def _mul_sc(c, x: Mapping[int, object], y: Mapping[int, object]) -> dict[int, object]:
    out: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            ab = a * b
            for k, v in c[i][j].items():
                out[k] = out.get(k, 0) + ab * v
    return {k: v for k, v in out.items() if v}


def _same_coords(x: Mapping, y: Mapping) -> bool:
    return all(not (x.get(k, 0) - y.get(k, 0)) for k in set(x) | set(y))


def _fmt_coords(B: BasisExtraction, coords: Mapping[int, object]) -> str:
    from .algebra import format_linear

    return format_linear((f"{B.selected[k][0]}#{B.selected[k][1]}", coords[k]) for k in sorted(coords))


def check_unit(P: PartialActionData, B: BasisExtraction) -> VerificationReport:
    """``1_A # 1_H`` is a two-sided unit for every basis element."""
    unit = smash_unit(P)
    entries = []
    for p in B.selected:
        x = B.generator(p)
        lhs, rhs = smash_mul(P, unit, x), smash_mul(P, x, unit)
        entries.append(Entry(("1#1",) + p, lhs, x, lhs == x, "left unit"))
        entries.append(Entry(p + ("1#1",), rhs, x, rhs == x, "right unit"))
    return VerificationReport("crossed-unit", tuple(entries), title="1#1 is a two-sided unit")


def check_table_associative(P: PartialActionData, B: BasisExtraction, c=None) -> VerificationReport:
    """``(x_i x_j) x_k == x_i (x_j x_k)`` for all basis triples, via structure constants."""
    c = structure_constants(P, B) if c is None else c
    r = B.rank
    entries = []
    for i in range(r):
        for j in range(r):
            for k in range(r):
                lhs = _mul_sc(c, c[i][j], {k: 1})
                rhs = _mul_sc(c, {i: 1}, c[j][k])
                ok = _same_coords(lhs, rhs)
                labels = tuple(f"{B.selected[m][0]}#{B.selected[m][1]}" for m in (i, j, k))
                entries.append(Entry(labels, _fmt_coords(B, lhs), _fmt_coords(B, rhs), ok, "associativity"))
    return VerificationReport("crossed-associativity", tuple(entries), title="associativity of the product table")


# -- numeric cross-check -------------------------------------------------------


def numeric_rank(P: PartialActionData, assignment: Mapping[str, object]) -> int:
    """Rank of the generator matrix at a rational point (plain Gaussian elimination)."""
    rows = []
    for _, g in extract_generators(P):
        rows.append([Fraction(scalar_eval(v, assignment)) for v in g.underlying.vector()])
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank


def extract_generators(P: PartialActionData) -> list[tuple[Pair, SmashElement]]:
    return [(pair, smash_of(P, *pair)) for pair in generator_pairs(P)]


def generic_assignment_ok(B: BasisExtraction, assignment: Mapping[str, object]) -> bool:
    """True when no pivot of the extraction vanishes at ``assignment``."""
    return all(scalar_eval(p, assignment) != 0 for p in B.pivots)
