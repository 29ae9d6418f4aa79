"""Finite-dimensional algebras given by structure constants.

Coordinates and structure constants are scalars in the sense of
:mod:`partialhopf.symbolic`: polynomials in the formal parameters, or plain
rationals once the parameters have been specialized.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import AlgebraMismatch, UnknownBasisLabel
from .report import Entry, VerificationReport
from .symbolic import Polynomial, as_polynomial, scalar_eval

# sparse row of a multiplication table: ((k, structure constant), ...)
SparseVec = tuple[tuple[int, object], ...]


def _sparse(coords: Sequence) -> SparseVec:
    return tuple((k, c) for k, c in enumerate(coords) if c)


def _coef_prefix(c) -> tuple[bool, str]:
    """Split a scalar into (negative?, multiplier text) for ``coef*label``."""
    p = as_polynomial(c)
    if len(p) == 1:
        mono, v = next(iter(p.terms.items()))
        neg = v < 0
        body = str(-p if neg else p)
        if body == "1":
            return neg, ""
        return neg, body + "*"
    return False, f"({p})*"


def format_linear(pairs: Iterable[tuple[str, object]]) -> str:
    """Render ``sum coef*label`` in canonical element syntax."""
    out = []
    for label, c in pairs:
        if not c:
            continue
        neg, prefix = _coef_prefix(c)
        body = prefix + label
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    """Basis labels, a total multiplication table and a declared unit.

    ``table[i][j]`` is the sparse coordinate vector of ``basis[i]*basis[j]``.
    """

    name: str
    basis: tuple[str, ...]
    table: tuple[tuple[SparseVec, ...], ...]
    unit_coords: tuple

    @classmethod
    def from_products(
        cls,
        name: str,
        basis: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, object]],
        unit: str | Mapping[str, object],
    ) -> "StructureAlgebra":
        """Build from ``{(a, b): {label: coef}}``; omitted products are zero."""
        basis = tuple(basis)
        index = {b: i for i, b in enumerate(basis)}
        dim = len(basis)

        def coords_of(d: Mapping[str, object]) -> list:
            v = [Polynomial() for _ in range(dim)]
            for label, c in d.items():
                if label not in index:
                    raise UnknownBasisLabel(label, name)
                v[index[label]] = v[index[label]] + as_polynomial(c)
            return v

        rows = [[() for _ in range(dim)] for _ in range(dim)]
        for (a, b), value in products.items():
            for label in (a, b):
                if label not in index:
                    raise UnknownBasisLabel(label, name)
            rows[index[a]][index[b]] = _sparse(coords_of(value))
        unit_map = {unit: 1} if isinstance(unit, str) else unit
        return cls(name, basis, tuple(tuple(r) for r in rows), tuple(coords_of(unit_map)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {b: i for i, b in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def label_index(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownBasisLabel(label, self.name) from None

    def basis_element(self, label: str | int) -> "AlgebraElement":
        i = label if isinstance(label, int) else self.label_index(label)
        coords = [0] * self.dim
        coords[i] = 1
        return AlgebraElement(self, tuple(coords))

    def element(self, coords: Mapping[str, object] | Sequence) -> "AlgebraElement":
        if isinstance(coords, Mapping):
            v = [Polynomial() for _ in range(self.dim)]
            for label, c in coords.items():
                i = self.label_index(label)
                v[i] = v[i] + as_polynomial(c)
            return AlgebraElement(self, tuple(v))
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(self, tuple(coords))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (0,) * self.dim)

    def unit(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit_coords)

    def product(self, a: str | int, b: str | int) -> "AlgebraElement":
        i = a if isinstance(a, int) else self.label_index(a)
        j = b if isinstance(b, int) else self.label_index(b)
        coords = [0] * self.dim
        for k, c in self.table[i][j]:
            coords[k] = c
        return AlgebraElement(self, tuple(coords))

    def mul_coords(self, x: Sequence, y: Sequence) -> list:
        """Bilinear product on raw coordinate sequences."""
        out: list = [0] * self.dim
        table = self.table
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                xy = xi * yj
                for k, c in row[j]:
                    out[k] = out[k] + xy * c
        return out

    def with_product(self, a: str, b: str, value: Mapping[str, object]) -> "StructureAlgebra":
        """Copy with one table entry replaced (handy for mutation tests)."""
        i, j = self.label_index(a), self.label_index(b)
        rows = [list(r) for r in self.table]
        rows[i][j] = _sparse(self.element(value).coords)
        return StructureAlgebra(self.name, self.basis, tuple(tuple(r) for r in rows), self.unit_coords)

    def with_unit(self, unit: str | Mapping[str, object]) -> "StructureAlgebra":
        unit_map = {unit: 1} if isinstance(unit, str) else unit
        return StructureAlgebra(self.name, self.basis, self.table, self.element(unit_map).coords)

    def specialize(self, assignment: Mapping[str, object]) -> "StructureAlgebra":
        table = tuple(
            tuple(tuple((k, scalar_eval(c, assignment)) for k, c in cell) for cell in row)
            for row in self.table
        )
        unit = tuple(scalar_eval(c, assignment) for c in self.unit_coords)
        return StructureAlgebra(self.name, self.basis, table, unit)

    def products(self) -> dict[tuple[str, str], "AlgebraElement"]:
        return {
            (a, b): self.product(i, j)
            for i, a in enumerate(self.basis)
            for j, b in enumerate(self.basis)
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureAlgebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.basis == other.basis
            and self.unit_coords == other.unit_coords
            and all(
                dict(self.table[i][j]) == dict(other.table[i][j])
                for i in range(self.dim)
                for j in range(self.dim)
            )
        )

    def __hash__(self) -> int:
        return hash((self.name, self.basis))

    def __repr__(self) -> str:
        return f"StructureAlgebra({self.name!r}, basis={self.basis})"


def _same_space(a: StructureAlgebra, b: StructureAlgebra) -> bool:
    return a is b or (a.name == b.name and a.basis == b.basis)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    algebra: StructureAlgebra
    coords: tuple

    def coord(self, label: str):
        return self.coords[self.algebra.label_index(label)]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: "AlgebraElement") -> None:
        if not _same_space(self.algebra, other.algebra):
            raise AlgebraMismatch(f"{self.algebra.name} vs {other.algebra.name}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        if isinstance(other, (int, Polynomial)) or hasattr(other, "denominator"):
            return AlgebraElement(self.algebra, tuple(a * other for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Polynomial)) or hasattr(other, "denominator"):
            return AlgebraElement(self.algebra, tuple(other * a for a in self.coords))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return _same_space(self.algebra, other.algebra) and all(
            not (a - b) for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self) -> int:
        return hash((self.algebra.name, tuple(as_polynomial(c) for c in self.coords)))

    def evaluate(self, assignment: Mapping[str, object]) -> "AlgebraElement":
        return AlgebraElement(self.algebra, tuple(scalar_eval(c, assignment) for c in self.coords))

    def parameters(self) -> tuple[str, ...]:
        return tuple(sorted({p for c in self.coords for p in as_polynomial(c).parameters()}))

    def __str__(self) -> str:
        return format_linear(zip(self.algebra.basis, self.coords))

    def __repr__(self) -> str:
        return f"<{self.algebra.name}: {self}>"


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    return AlgebraElement(x.algebra, tuple(x.algebra.mul_coords(x.coords, y.coords)))


@dataclass(frozen=True, eq=False)
class TensorElement:
    """Element of ``left ⊗ right`` keyed by basis-index pairs, zeros dropped."""

    left: StructureAlgebra
    right: StructureAlgebra
    coords: Mapping[tuple[int, int], object]

    @classmethod
    def from_terms(cls, left, right, terms: Iterable[tuple[object, int | str, int | str]]):
        """Collect ``(coef, left label/index, right label/index)`` triples."""
        acc: dict[tuple[int, int], object] = {}
        for c, a, b in terms:
            i = a if isinstance(a, int) else left.label_index(a)
            j = b if isinstance(b, int) else right.label_index(b)
            acc[i, j] = acc.get((i, j), 0) + c
        return cls(left, right, {k: v for k, v in sorted(acc.items()) if v})

    @classmethod
    def pure(cls, x: AlgebraElement, y: AlgebraElement) -> "TensorElement":
        terms = [(a * b, i, j) for i, a in enumerate(x.coords) if a for j, b in enumerate(y.coords) if b]
        return cls.from_terms(x.algebra, y.algebra, terms)

    def _check(self, other: "TensorElement") -> None:
        if not (_same_space(self.left, other.left) and _same_space(self.right, other.right)):
            raise AlgebraMismatch("tensor factors differ")

    def items(self):
        return sorted(self.coords.items())

    def label_items(self) -> list[tuple[tuple[str, str], object]]:
        return [((self.left.basis[i], self.right.basis[j]), c) for (i, j), c in self.items()]

    def coord(self, a: str, b: str):
        key = (self.left.label_index(a), self.right.label_index(b))
        return self.coords.get(key, Polynomial())

    def vector(self) -> list:
        """Dense coordinates in row-major (left index, right index) order."""
        n = self.right.dim
        v: list = [Polynomial()] * (self.left.dim * n)
        for (i, j), c in self.coords.items():
            v[i * n + j] = c
        return v

    @classmethod
    def from_vector(cls, left, right, v: Sequence) -> "TensorElement":
        n = right.dim
        return cls(left, right, {divmod(k, n): c for k, c in enumerate(v) if c})

    def is_zero(self) -> bool:
        return not self.coords

    def __bool__(self) -> bool:
        return bool(self.coords)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        terms = [(c, i, j) for (i, j), c in self.coords.items()]
        terms += [(c, i, j) for (i, j), c in other.coords.items()]
        return TensorElement.from_terms(self.left, self.right, terms)

    def __neg__(self):
        return TensorElement(self.left, self.right, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Polynomial)) or hasattr(other, "denominator"):
            return TensorElement.from_terms(
                self.left, self.right, [(c * other, i, j) for (i, j), c in self.coords.items()]
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            _same_space(self.left, other.left)
            and _same_space(self.right, other.right)
            and (self - other).is_zero()
        )

    def __hash__(self) -> int:
        return hash(tuple((k, as_polynomial(c)) for k, c in self.items()))

    def evaluate(self, assignment: Mapping[str, object]) -> "TensorElement":
        return TensorElement.from_terms(
            self.left, self.right,
            [(scalar_eval(c, assignment), i, j) for (i, j), c in self.coords.items()],
        )

    def format(self, sep: str = "@") -> str:
        return format_linear(
            (f"{self.left.basis[i]}{sep}{self.right.basis[j]}", c) for (i, j), c in self.items()
        )

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"<{self.left.name}⊗{self.right.name}: {self}>"


def tensor_scalar_collect(x: TensorElement | Iterable) -> TensorElement:
    """Canonical form of a tensor: coordinates collected, zeros dropped.

    Accepts a :class:`TensorElement` or ``(left, right, terms)`` where
    ``terms`` are ``(coef, a, b)`` triples.
    """
    if isinstance(x, TensorElement):
        return TensorElement.from_terms(x.left, x.right, [(c, i, j) for (i, j), c in x.coords.items()])
    left, right, terms = x
    return TensorElement.from_terms(left, right, terms)


# -- structural checks ---------------------------------------------------------


def check_associative(A: StructureAlgebra) -> VerificationReport:
    """(b_i b_j) b_k == b_i (b_j b_k) for every basis triple."""
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            bij = A.product(i, j)
            for k in range(A.dim):
                lhs = bij * A.basis_element(k)
                rhs = A.basis_element(i) * A.product(j, k)
                entries.append(
                    Entry((A.basis[i], A.basis[j], A.basis[k]), lhs, rhs, lhs == rhs, "associativity")
                )
    return VerificationReport("associativity", tuple(entries), title=f"associativity of {A.name}")


def check_unital(A: StructureAlgebra) -> VerificationReport:
    """The declared unit is a two-sided identity on every basis element."""
    u = A.unit()
    entries = []
    for i, b in enumerate(A.basis):
        e = A.basis_element(i)
        left, right = u * e, e * u
        entries.append(Entry(("unit", b), left, e, left == e, "left unit"))
        entries.append(Entry((b, "unit"), right, e, right == e, "right unit"))
    return VerificationReport("unitality", tuple(entries), title=f"unitality of {A.name}")
