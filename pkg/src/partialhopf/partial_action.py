"""Twisted partial actions of a Hopf algebra ``H`` on an algebra ``A``.

A pair of linear maps ``· : H⊗A → A`` and ``ω : H⊗H → A`` is stored as two
tables on basis elements.  The checkers below test the defining identities
on every basis tuple, which by multilinearity is equivalent to the
universally quantified statements:

    E1  1_H · a = a
    E2  h · (ab) = (h1 · a)(h2 · b)
    E3  (h1 · (l1 · a)) ω(h2, l2) = ω(h1, l1) (h2 l2 · a)
    E4  ω(h, l) = ω(h1, l1) (h2 l2 · 1_A)
    E5  ω(h, 1_H) = ω(1_H, h) = h · 1_A
    E6  (h1 · ω(m1, t1)) ω(h2, m2 t2) = ω(h1, m1) ω(h2 m2, t)

E1–E4 make ``(·, ω)`` a twisted partial action; E5–E6 are the extra
conditions under which the partial crossed product is associative and
unital.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Mapping, Sequence

from .algebra import AlgebraElement, StructureAlgebra, _sparse
from .errors import AlgebraMismatch
from .hopf import HopfData
from .report import Entry, VerificationReport, parallel_map
from .symbolic import as_polynomial, scalar_eval

CORE = ("E1", "E2", "E3", "E4")
CROSSED = CORE + ("E5", "E6")


@dataclass(frozen=True, eq=False)
class PartialActionData:
    """Action table ``action[h][a]`` and cocycle table ``cocycle[h][l]``.

    Both tables hold sparse coordinate vectors in the target algebra.
    """

    name: str
    hopf: HopfData
    target: StructureAlgebra
    action: tuple[tuple[tuple, ...], ...]
    cocycle: tuple[tuple[tuple, ...], ...]

    @classmethod
    def from_labels(
        cls,
        name: str,
        hopf: HopfData,
        target: StructureAlgebra,
        action: Mapping[tuple[str, str], Mapping[str, object] | AlgebraElement],
        cocycle: Mapping[tuple[str, str], Mapping[str, object] | AlgebraElement],
    ) -> "PartialActionData":
        """Tables keyed by label pairs; omitted entries are zero."""
        H = hopf.algebra
        act = [[() for _ in target.basis] for _ in H.basis]
        om = [[() for _ in H.basis] for _ in H.basis]
        for (h, a), value in action.items():
            el = value if isinstance(value, AlgebraElement) else target.element(value)
            act[H.label_index(h)][target.label_index(a)] = _sparse(el.coords)
        for (h, l), value in cocycle.items():
            el = value if isinstance(value, AlgebraElement) else target.element(value)
            om[H.label_index(h)][H.label_index(l)] = _sparse(el.coords)
        return cls(name, hopf, target, tuple(map(tuple, act)), tuple(map(tuple, om)))

    @property
    def H(self) -> StructureAlgebra:
        return self.hopf.algebra

    @property
    def A(self) -> StructureAlgebra:
        return self.target

    def action_value(self, h: str | int, a: str | int) -> AlgebraElement:
        i = h if isinstance(h, int) else self.H.label_index(h)
        j = a if isinstance(a, int) else self.A.label_index(a)
        return self._dense(self.action[i][j])

    def cocycle_value(self, h: str | int, l: str | int) -> AlgebraElement:
        i = h if isinstance(h, int) else self.H.label_index(h)
        j = l if isinstance(l, int) else self.H.label_index(l)
        return self._dense(self.cocycle[i][j])

    def _dense(self, sparse) -> AlgebraElement:
        coords = [0] * self.A.dim
        for k, c in sparse:
            coords[k] = c
        return AlgebraElement(self.A, tuple(coords))

    def parameters(self) -> tuple[str, ...]:
        names: set[str] = set()
        for table in (self.action, self.cocycle):
            for row in table:
                for cell in row:
                    for _, c in cell:
                        names.update(as_polynomial(c).parameters())
        return tuple(sorted(names))

    def with_action(self, h: str, a: str, value: Mapping[str, object] | AlgebraElement) -> "PartialActionData":
        el = value if isinstance(value, AlgebraElement) else self.A.element(value)
        rows = [list(r) for r in self.action]
        rows[self.H.label_index(h)][self.A.label_index(a)] = _sparse(el.coords)
        return PartialActionData(self.name, self.hopf, self.target, tuple(map(tuple, rows)), self.cocycle)

    def with_cocycle(self, h: str, l: str, value: Mapping[str, object] | AlgebraElement) -> "PartialActionData":
        el = value if isinstance(value, AlgebraElement) else self.A.element(value)
        rows = [list(r) for r in self.cocycle]
        rows[self.H.label_index(h)][self.H.label_index(l)] = _sparse(el.coords)
        return PartialActionData(self.name, self.hopf, self.target, self.action, tuple(map(tuple, rows)))

    def specialize(self, assignment: Mapping[str, object]) -> "PartialActionData":
        """Numeric copy: every parameter replaced by its value everywhere."""

        def spec(table):
            return tuple(
                tuple(tuple((k, scalar_eval(c, assignment)) for k, c in cell) for cell in row)
                for row in table
            )

        return PartialActionData(
            self.name,
            self.hopf.specialize(assignment),
            self.target.specialize(assignment),
            spec(self.action),
            spec(self.cocycle),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialActionData):
            return NotImplemented
        H, A = self.H, self.A
        return (
            self.name == other.name
            and self.hopf == other.hopf
            and self.target == other.target
            and all(
                self.action_value(i, j) == other.action_value(i, j)
                for i in range(H.dim)
                for j in range(A.dim)
            )
            and all(
                self.cocycle_value(i, j) == other.cocycle_value(i, j)
                for i in range(H.dim)
                for j in range(H.dim)
            )
        )

    def __hash__(self) -> int:
        return hash((self.name, self.target, self.hopf))


# -- index-level kernels ------------------------------------------------------


def _act_sparse(P: PartialActionData, hvec, a_coords: Sequence) -> list:
    """``h · a`` for ``h`` given as sparse ``((k, coef), ...)`` over H."""
    out: list = [0] * P.A.dim
    action = P.action
    for k, ck in hvec:
        row = action[k]
        for c, ac in enumerate(a_coords):
            if not ac:
                continue
            coef = ck * ac
            for idx, v in row[c]:
                out[idx] = out[idx] + coef * v
    return out


def _act_basis(P: PartialActionData, h: int, a_coords: Sequence) -> list:
    return _act_sparse(P, ((h, 1),), a_coords)


def _omega_sparse(P: PartialActionData, hvec, lvec) -> list:
    """Bilinear ``ω(h, l)`` for sparse H-vectors."""
    out: list = [0] * P.A.dim
    for i, ci in hvec:
        row = P.cocycle[i]
        for j, cj in lvec:
            coef = ci * cj
            for idx, v in row[j]:
                out[idx] = out[idx] + coef * v
    return out


def _omega_basis(P: PartialActionData, h: int, l: int) -> list:
    out: list = [0] * P.A.dim
    for idx, v in P.cocycle[h][l]:
        out[idx] = v
    return out


def _add_scaled(acc: list, coef, vec: Sequence) -> None:
    for k, v in enumerate(vec):
        if v:
            acc[k] = acc[k] + coef * v


def _delta2(P: PartialActionData, i: int):
    return P.hopf.delta[i]


def _elem(P: PartialActionData, coords) -> AlgebraElement:
    return AlgebraElement(P.A, tuple(coords))


def _same(x: Sequence, y: Sequence) -> bool:
    return all(not (a - b) for a, b in zip(x, y))


def _unit_vec(dim: int, i: int) -> list:
    v = [0] * dim
    v[i] = 1
    return v


# -- per-entry workers (module level so they pickle for worker processes) ----


def _e1_entry(P: PartialActionData, a: int) -> Entry:
    one_h = _sparse(P.H.unit_coords)
    e = _unit_vec(P.A.dim, a)
    lhs = _act_sparse(P, one_h, e)
    return Entry(("1_H", P.A.basis[a]), _elem(P, lhs), _elem(P, e), _same(lhs, e), "E1")


def _e2_entry(P: PartialActionData, t: tuple[int, int, int]) -> Entry:
    h, a, b = t
    A = P.A
    ab = A.mul_coords(_unit_vec(A.dim, a), _unit_vec(A.dim, b))
    lhs = _act_basis(P, h, ab)
    rhs: list = [0] * A.dim
    ea, eb = _unit_vec(A.dim, a), _unit_vec(A.dim, b)
    for h1, h2, c in _delta2(P, h):
        prod = A.mul_coords(_act_basis(P, h1, ea), _act_basis(P, h2, eb))
        _add_scaled(rhs, c, prod)
    labels = (P.H.basis[h], A.basis[a], A.basis[b])
    return Entry(labels, _elem(P, lhs), _elem(P, rhs), _same(lhs, rhs), "E2")


def _e3_entry(P: PartialActionData, t: tuple[int, int, int]) -> Entry:
    h, l, a = t
    A, Hm = P.A, P.H
    ea = _unit_vec(A.dim, a)
    lhs: list = [0] * A.dim
    rhs: list = [0] * A.dim
    for h1, h2, c in _delta2(P, h):
        for l1, l2, d in _delta2(P, l):
            cd = c * d
            inner = _act_basis(P, h1, _act_basis(P, l1, ea))
            _add_scaled(lhs, cd, A.mul_coords(inner, _omega_basis(P, h2, l2)))
            h2l2 = Hm.table[h2][l2]
            if h2l2:
                moved = _act_sparse(P, h2l2, ea)
                _add_scaled(rhs, cd, A.mul_coords(_omega_basis(P, h1, l1), moved))
    labels = (Hm.basis[h], Hm.basis[l], A.basis[a])
    return Entry(labels, _elem(P, lhs), _elem(P, rhs), _same(lhs, rhs), "E3")


def _e4_entry(P: PartialActionData, t: tuple[int, int]) -> Entry:
    h, l = t
    A, Hm = P.A, P.H
    lhs = _omega_basis(P, h, l)
    rhs: list = [0] * A.dim
    one = list(A.unit_coords)
    for h1, h2, c in _delta2(P, h):
        for l1, l2, d in _delta2(P, l):
            h2l2 = Hm.table[h2][l2]
            if h2l2:
                moved = _act_sparse(P, h2l2, one)
                _add_scaled(rhs, c * d, A.mul_coords(_omega_basis(P, h1, l1), moved))
    labels = (Hm.basis[h], Hm.basis[l])
    return Entry(labels, _elem(P, lhs), _elem(P, rhs), _same(lhs, rhs), "E4")


def _e5_entry(P: PartialActionData, h: int) -> Entry:
    one_h = _sparse(P.H.unit_coords)
    hv = ((h, 1),)
    right_unit = _omega_sparse(P, hv, one_h)
    left_unit = _omega_sparse(P, one_h, hv)
    target = _act_basis(P, h, list(P.A.unit_coords))
    ok = _same(right_unit, target) and _same(left_unit, target)
    lhs = (_elem(P, right_unit), _elem(P, left_unit))
    rhs = (_elem(P, target), _elem(P, target))
    return Entry((P.H.basis[h],), lhs, rhs, ok, "E5")


def _e6_entry(P: PartialActionData, t: tuple[int, int, int]) -> Entry:
    h, m, t_ = t
    A, Hm = P.A, P.H
    lhs: list = [0] * A.dim
    rhs: list = [0] * A.dim
    for h1, h2, c in _delta2(P, h):
        for m1, m2, d in _delta2(P, m):
            for t1, t2, f in _delta2(P, t_):
                m2t2 = Hm.table[m2][t2]
                if not m2t2:
                    continue
                acted = _act_basis(P, h1, _omega_basis(P, m1, t1))
                if not any(acted):
                    continue
                w = _omega_sparse(P, ((h2, 1),), m2t2)
                _add_scaled(lhs, c * d * f, A.mul_coords(acted, w))
            h2m2 = Hm.table[h2][m2]
            if h2m2:
                w = _omega_sparse(P, h2m2, ((t_, 1),))
                _add_scaled(rhs, c * d, A.mul_coords(_omega_basis(P, h1, m1), w))
    labels = (Hm.basis[h], Hm.basis[m], Hm.basis[t_])
    return Entry(labels, _elem(P, lhs), _elem(P, rhs), _same(lhs, rhs), "E6")


# -- public API -----------------------------------------------------------------


def act(P: PartialActionData, h: AlgebraElement | str, a: AlgebraElement | str) -> AlgebraElement:
    """Bilinear extension of the action table."""
    if isinstance(h, str):
        h = P.H.basis_element(h)
    if isinstance(a, str):
        a = P.A.basis_element(a)
    if h.algebra.basis != P.H.basis or h.algebra.name != P.H.name:
        raise AlgebraMismatch(f"{h.algebra.name} is not the acting Hopf algebra {P.H.name}")
    if a.algebra.basis != P.A.basis or a.algebra.name != P.A.name:
        raise AlgebraMismatch(f"{a.algebra.name} is not the target algebra {P.A.name}")
    return _elem(P, _act_sparse(P, _sparse(h.coords), a.coords))


def cocycle(P: PartialActionData, h: AlgebraElement | str, l: AlgebraElement | str) -> AlgebraElement:
    """``ω(h, l)``: table lookup on basis labels, bilinear on elements."""
    hv = P.H.basis_element(h) if isinstance(h, str) else h
    lv = P.H.basis_element(l) if isinstance(l, str) else l
    for x in (hv, lv):
        if x.algebra.basis != P.H.basis or x.algebra.name != P.H.name:
            raise AlgebraMismatch(f"{x.algebra.name} is not the Hopf algebra {P.H.name}")
    return _elem(P, _omega_sparse(P, _sparse(hv.coords), _sparse(lv.coords)))


_TITLES = {
    "E1": "1_H . a = a",
    "E2": "h . (ab) = (h1 . a)(h2 . b)",
    "E3": "(h1 . (l1 . a)) w(h2, l2) = w(h1, l1)(h2 l2 . a)",
    "E4": "w(h, l) = w(h1, l1)(h2 l2 . 1_A)",
    "E5": "w(h, 1_H) = w(1_H, h) = h . 1_A",
    "E6": "(h1 . w(m1, t1)) w(h2, m2 t2) = w(h1, m1) w(h2 m2, t)",
}


def _report(name: str, worker, items, workers, required=True) -> VerificationReport:
    entries = parallel_map(worker, items, workers)
    return VerificationReport(name, tuple(entries), required=required, title=_TITLES[name])


def check_e1(P: PartialActionData, workers: int | None = None) -> VerificationReport:
    return _report("E1", partial(_e1_entry, P), range(P.A.dim), workers)


def check_e2(P: PartialActionData, workers: int | None = None) -> VerificationReport:
    items = [(h, a, b) for h in range(P.H.dim) for a in range(P.A.dim) for b in range(P.A.dim)]
    return _report("E2", partial(_e2_entry, P), items, workers)


def check_e3(P: PartialActionData, workers: int | None = None) -> VerificationReport:
    items = [(h, l, a) for h in range(P.H.dim) for l in range(P.H.dim) for a in range(P.A.dim)]
    return _report("E3", partial(_e3_entry, P), items, workers)


def check_e4(P: PartialActionData, workers: int | None = None) -> VerificationReport:
    items = [(h, l) for h in range(P.H.dim) for l in range(P.H.dim)]
    return _report("E4", partial(_e4_entry, P), items, workers)


def check_e5(P: PartialActionData, workers: int | None = None, required: bool = True) -> VerificationReport:
    return _report("E5", partial(_e5_entry, P), range(P.H.dim), workers, required)


def check_e6(P: PartialActionData, workers: int | None = None, required: bool = True) -> VerificationReport:
    n = P.H.dim
    items = [(h, m, t) for h in range(n) for m in range(n) for t in range(n)]
    return _report("E6", partial(_e6_entry, P), items, workers, required)


CHECKS = {"E1": check_e1, "E2": check_e2, "E3": check_e3, "E4": check_e4, "E5": check_e5, "E6": check_e6}


def verify_all(
    P: PartialActionData,
    profile: str = "core",
    informational: bool = False,
    workers: int | None = None,
) -> VerificationReport:
    """Run E1–E4 (``core``) or E1–E6 (``crossed``).

    With ``informational=True`` the core profile also runs E5–E6 but marks
    them not required, so they never affect ``passed``.
    """
    if profile not in ("core", "crossed"):
        raise ValueError(f"unknown profile {profile!r}")
    parts = [check_e1(P, workers), check_e2(P, workers), check_e3(P, workers), check_e4(P, workers)]
    if profile == "crossed":
        parts += [check_e5(P, workers), check_e6(P, workers)]
    elif informational:
        parts += [check_e5(P, workers, required=False), check_e6(P, workers, required=False)]
    return VerificationReport(profile, parts=tuple(parts), title=f"{P.name} [{profile}]")


def random_assignment(params: Sequence[str], rng: random.Random, bound: int = 9) -> dict[str, Fraction]:
    """Random nonzero-denominator rationals ``p/q`` with ``|p| <= bound``, ``1 <= q <= bound``."""
    return {
        name: Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for name in params
    }


def specialization_check(
    P: PartialActionData,
    assignment: Mapping[str, object],
    checks: Sequence[str] = CORE,
    symbolic: VerificationReport | None = None,
) -> list[str]:
    """Recompute ``checks`` on the numerically specialized tables.

    Returns a list of problems (empty when consistent): a numeric entry that
    fails, or, when a symbolic report is given, a symbolic side whose value
    at ``assignment`` differs from the numerically computed side.
    """
    Q = P.specialize(assignment)
    problems = []
    for name in checks:
        numeric = CHECKS[name](Q, workers=1)
        sym = symbolic.part(name) if symbolic is not None else None
        for k, e in enumerate(numeric.entries):
            if not e.passed:
                problems.append(f"{name}{e.labels}: numeric sides differ")
            if sym is not None:
                s = sym.entries[k]
                for num_side, sym_side in ((e.lhs, s.lhs), (e.rhs, s.rhs)):
                    pairs = zip(num_side, sym_side) if isinstance(num_side, tuple) else [(num_side, sym_side)]
                    for x, y in pairs:
                        if y.evaluate(assignment) != x:
                            problems.append(f"{name}{e.labels}: symbolic value differs at assignment")
    return problems
