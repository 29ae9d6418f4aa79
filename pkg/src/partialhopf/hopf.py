"""Coalgebra and Hopf structure on a structure-constant algebra.

Comultiplication, counit and antipode are stored on every basis element,
not just on generators; :func:`check_bialgebra_compat` guards their
consistency with the multiplication table.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .algebra import AlgebraElement, StructureAlgebra, TensorElement, format_linear
from .report import Entry, VerificationReport
from .symbolic import Polynomial, as_polynomial, scalar_eval

# one summand of Δ(b): (left index, right index, coefficient)
DeltaTerm = tuple[int, int, object]


@dataclass(frozen=True)
class SweedlerTerm:
    legs: tuple[str, ...]
    coefficient: object

    def __str__(self) -> str:
        return format_linear([("@".join(self.legs), self.coefficient)])


@dataclass(frozen=True, eq=False)
class MultiTensor:
    """Element of ``H ⊗ ... ⊗ H`` (``n`` legs) keyed by index tuples."""

    algebra: StructureAlgebra
    coords: Mapping[tuple[int, ...], object]

    @classmethod
    def collect(cls, algebra, items) -> "MultiTensor":
        acc: dict = {}
        for legs, c in items:
            acc[legs] = acc.get(legs, 0) + c
        return cls(algebra, {k: v for k, v in sorted(acc.items()) if v})

    def terms(self) -> list[SweedlerTerm]:
        return [
            SweedlerTerm(tuple(self.algebra.basis[i] for i in legs), c)
            for legs, c in sorted(self.coords.items())
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiTensor):
            return NotImplemented
        keys = set(self.coords) | set(other.coords)
        return all(not (self.coords.get(k, 0) - other.coords.get(k, 0)) for k in keys)

    def __hash__(self) -> int:
        return hash(tuple((k, as_polynomial(c)) for k, c in sorted(self.coords.items())))

    def __str__(self) -> str:
        return format_linear(
            ("@".join(self.algebra.basis[i] for i in legs), c) for legs, c in sorted(self.coords.items())
        )


@dataclass(frozen=True, eq=False)
class HopfData:
    algebra: StructureAlgebra
    delta: tuple[tuple[DeltaTerm, ...], ...]
    counit_values: tuple
    antipode_coords: tuple[tuple, ...]

    @classmethod
    def from_labels(
        cls,
        algebra: StructureAlgebra,
        delta: Mapping[str, Sequence[tuple[object, str, str]]],
        counit: Mapping[str, object],
        antipode: Mapping[str, Mapping[str, object] | AlgebraElement],
    ) -> "HopfData":
        """``delta[b]`` is a list of ``(coef, left, right)``; all maps total."""
        dim = algebra.dim
        d: list = [() for _ in range(dim)]
        eps: list = [Polynomial() for _ in range(dim)]
        s: list = [algebra.zero().coords for _ in range(dim)]
        for label, terms in delta.items():
            t = TensorElement.from_terms(algebra, algebra, list(terms))
            d[algebra.label_index(label)] = tuple((i, j, c) for (i, j), c in t.items())
        for label, value in counit.items():
            eps[algebra.label_index(label)] = as_polynomial(value)
        for label, value in antipode.items():
            el = value if isinstance(value, AlgebraElement) else algebra.element(value)
            s[algebra.label_index(label)] = el.coords
        return cls(algebra, tuple(d), tuple(eps), tuple(s))

    @property
    def basis(self) -> tuple[str, ...]:
        return self.algebra.basis

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def delta_of(self, label: str | int) -> TensorElement:
        i = label if isinstance(label, int) else self.algebra.label_index(label)
        return TensorElement.from_terms(self.algebra, self.algebra, [(c, a, b) for a, b, c in self.delta[i]])

    def counit(self, label: str | int):
        i = label if isinstance(label, int) else self.algebra.label_index(label)
        return self.counit_values[i]

    def antipode(self, label: str | int) -> AlgebraElement:
        i = label if isinstance(label, int) else self.algebra.label_index(label)
        return AlgebraElement(self.algebra, self.antipode_coords[i])

    def counit_of(self, x: AlgebraElement):
        total = 0
        for c, e in zip(x.coords, self.counit_values):
            if c and e:
                total = total + c * e
        return total

    def antipode_of(self, x: AlgebraElement) -> AlgebraElement:
        out = self.algebra.zero()
        for i, c in enumerate(x.coords):
            if c:
                out = out + c * self.antipode(i)
        return out

    def delta_of_element(self, x: AlgebraElement) -> TensorElement:
        terms = [(c * d, a, b) for i, c in enumerate(x.coords) if c for a, b, d in self.delta[i]]
        return TensorElement.from_terms(self.algebra, self.algebra, terms)

    @cached_property
    def _coproduct_cache(self) -> dict:
        return {}

    def coproduct_indices(self, i: int, n: int, nesting: str = "left") -> tuple[tuple[tuple[int, ...], object], ...]:
        """n-fold coproduct of basis element ``i`` as ``((legs, coef), ...)``."""
        key = (i, n, nesting)
        cache = self._coproduct_cache
        if key not in cache:
            if n < 1:
                raise ValueError("coproduct order must be >= 1")
            if nesting not in ("left", "right"):
                raise ValueError("nesting must be 'left' or 'right'")
            cur: dict[tuple[int, ...], object] = {(i,): 1}
            for _ in range(n - 1):
                nxt: dict[tuple[int, ...], object] = {}
                for legs, c in cur.items():
                    pos = 0 if nesting == "left" else len(legs) - 1
                    for a, b, d in self.delta[legs[pos]]:
                        new = legs[:pos] + (a, b) + legs[pos + 1:]
                        nxt[new] = nxt.get(new, 0) + c * d
                cur = {k: v for k, v in nxt.items() if v}
            cache[key] = tuple(sorted(cur.items()))
        return cache[key]

    def specialize(self, assignment: Mapping[str, object]) -> "HopfData":
        return HopfData(
            self.algebra.specialize(assignment),
            tuple(tuple((a, b, scalar_eval(c, assignment)) for a, b, c in row) for row in self.delta),
            tuple(scalar_eval(c, assignment) for c in self.counit_values),
            tuple(tuple(scalar_eval(c, assignment) for c in row) for row in self.antipode_coords),
        )

    def replace(self, *, delta=None, counit=None, antipode=None) -> "HopfData":
        """Copy with some per-label values replaced (same formats as from_labels)."""
        d = list(self.delta)
        eps = list(self.counit_values)
        s = list(self.antipode_coords)
        A = self.algebra
        for label, terms in (delta or {}).items():
            t = TensorElement.from_terms(A, A, list(terms))
            d[A.label_index(label)] = tuple((i, j, c) for (i, j), c in t.items())
        for label, value in (counit or {}).items():
            eps[A.label_index(label)] = as_polynomial(value)
        for label, value in (antipode or {}).items():
            el = value if isinstance(value, AlgebraElement) else A.element(value)
            s[A.label_index(label)] = el.coords
        return HopfData(A, tuple(d), tuple(eps), tuple(s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HopfData):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and all(self.delta_of(i) == other.delta_of(i) for i in range(self.dim))
            and all(not (a - b) for a, b in zip(self.counit_values, other.counit_values))
            and all(self.antipode(i) == other.antipode(i) for i in range(self.dim))
        )

    def __hash__(self) -> int:
        return hash(self.algebra)


def coproduct_n(H: HopfData, b: str, n: int, nesting: str = "left") -> list[SweedlerTerm]:
    """Fully expanded ``b_1 ⊗ ... ⊗ b_n``; ``n == 1`` returns ``b`` itself."""
    i = H.algebra.label_index(b)
    return [
        SweedlerTerm(tuple(H.basis[k] for k in legs), c)
        for legs, c in H.coproduct_indices(i, n, nesting)
    ]


def sweedler_sum(H: HopfData, b: str | int, n: int, nesting: str = "left") -> MultiTensor:
    i = b if isinstance(b, int) else H.algebra.label_index(b)
    return MultiTensor(H.algebra, dict(H.coproduct_indices(i, n, nesting)))


def apply_counit_to_leg(H: HopfData, t: MultiTensor, leg: int) -> MultiTensor:
    """Contract leg ``leg`` of ``t`` with the counit."""
    items = []
    for legs, c in t.coords.items():
        e = H.counit_values[legs[leg]]
        if e:
            items.append((legs[:leg] + legs[leg + 1:], c * e))
    return MultiTensor.collect(H.algebra, items)


def check_coalgebra(H: HopfData) -> VerificationReport:
    """Coassociativity and both counit laws on every basis element."""
    A = H.algebra
    entries = []
    for i, b in enumerate(H.basis):
        delta = H.delta[i]
        left = MultiTensor.collect(
            A, [((x, y, r), c * d) for l, r, c in delta for x, y, d in H.delta[l]]
        )
        right = MultiTensor.collect(
            A, [((l, x, y), c * d) for l, r, c in delta for x, y, d in H.delta[r]]
        )
        entries.append(Entry((b,), left, right, left == right, "coassociativity"))
    for i, b in enumerate(H.basis):
        delta = H.delta[i]
        lhs = A.zero()
        rhs = A.zero()
        for l, r, c in delta:
            lhs = lhs + (c * H.counit_values[l]) * A.basis_element(r)
            rhs = rhs + (c * H.counit_values[r]) * A.basis_element(l)
        e = A.basis_element(i)
        entries.append(Entry((b,), lhs, e, lhs == e, "left counit"))
        entries.append(Entry((b,), rhs, e, rhs == e, "right counit"))
    return VerificationReport("coalgebra", tuple(entries), title=f"coalgebra laws of {A.name}")


def check_antipode(H: HopfData) -> VerificationReport:
    """μ(S⊗id)Δ(b) = ε(b)1 = μ(id⊗S)Δ(b) on every basis element."""
    A = H.algebra
    entries = []
    for i, b in enumerate(H.basis):
        target = H.counit_values[i] * A.unit()
        lhs = A.zero()
        rhs = A.zero()
        for l, r, c in H.delta[i]:
            lhs = lhs + c * (H.antipode(l) * A.basis_element(r))
            rhs = rhs + c * (A.basis_element(l) * H.antipode(r))
        entries.append(Entry((b,), lhs, target, lhs == target, "S*id"))
        entries.append(Entry((b,), rhs, target, rhs == target, "id*S"))
    return VerificationReport("antipode", tuple(entries), title=f"antipode of {A.name}")


def _tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    A = x.left
    terms = []
    for (a, b), c in x.coords.items():
        for (p, q), d in y.coords.items():
            left = A.table[a][p]
            right = A.table[b][q]
            cd = c * d
            for k, u in left:
                for m, v in right:
                    terms.append((cd * u * v, k, m))
    return TensorElement.from_terms(A, A, terms)


def check_bialgebra_compat(H: HopfData) -> VerificationReport:
    """Δ and ε are unital algebra maps, checked on all basis pairs."""
    A = H.algebra
    entries = []
    one = A.unit()
    d_one = H.delta_of_element(one)
    one_one = TensorElement.pure(one, one)
    entries.append(Entry(("unit",), d_one, one_one, d_one == one_one, "delta unit"))
    e_one = H.counit_of(one)
    entries.append(Entry(("unit",), e_one, 1, not (e_one - 1), "counit unit"))
    for i, a in enumerate(H.basis):
        for j, b in enumerate(H.basis):
            prod = A.product(i, j)
            lhs = H.delta_of_element(prod)
            rhs = _tensor_mul(H.delta_of(i), H.delta_of(j))
            entries.append(Entry((a, b), lhs, rhs, lhs == rhs, "delta multiplicative"))
    for i, a in enumerate(H.basis):
        for j, b in enumerate(H.basis):
            lhs = H.counit_of(A.product(i, j))
            rhs = H.counit_values[i] * H.counit_values[j]
            entries.append(Entry((a, b), lhs, rhs, not (lhs - rhs), "counit multiplicative"))
    return VerificationReport("bialgebra", tuple(entries), title=f"bialgebra compatibility of {A.name}")


def check_hopf(H: HopfData) -> VerificationReport:
    parts = (check_coalgebra(H), check_bialgebra_compat(H), check_antipode(H))
    return VerificationReport("hopf", parts=parts, title=f"Hopf axioms of {H.algebra.name}")
