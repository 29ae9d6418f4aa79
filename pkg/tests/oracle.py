"""Independent sympy oracle.

The algebra relations and action tables are typed in here a second time,
straight from the printed tables and with no code shared with the
package.  The axioms are recomputed with plain sympy matrices.  Tests
compare the package's data and results against these.
"""
from __future__ import annotations

import sympy as sp

k1, k2, k3, k4, l1, l2, l3, l4 = sp.symbols("k1 k2 k3 k4 l1 l2 l3 l4")
SYMBOLS = {str(s): s for s in (k1, k2, k3, k4, l1, l2, l3, l4)}

A_BASIS = ["1", "e1", "e2", "e3"]
H_BASIS = ["1", "g", "nu", "gnu"]


def V(*c):
    return sp.Matrix(c)


Z = V(0, 0, 0, 0)


def e(i):
    return sp.eye(4)[:, i]


def _algebra(rel):
    T = {}
    for i, a in enumerate(A_BASIS):
        for j, b in enumerate(A_BASIS):
            if a == "1":
                T[i, j] = e(j)
            elif b == "1":
                T[i, j] = e(i)
            else:
                T[i, j] = rel.get((a, b), Z)
    return T


# nonzero products only, basis index 0..3 = 1, e1, e2, e3
HSS = _algebra({
    ("e1", "e1"): e(0), ("e1", "e2"): e(3), ("e2", "e1"): -e(3),
    ("e3", "e1"): -e(2), ("e1", "e3"): e(2),
})
HS = _algebra({
    ("e1", "e1"): -e(0), ("e2", "e2"): e(0), ("e3", "e3"): e(0),
    ("e1", "e2"): e(3), ("e2", "e1"): -e(3), ("e2", "e3"): -e(1),
    ("e3", "e2"): e(1), ("e3", "e1"): e(2), ("e1", "e3"): -e(2),
})
H00 = _algebra({("e1", "e2"): e(3), ("e2", "e1"): -e(3)})
ALGEBRAS = {"hss": HSS, "hs": HS, "h00": H00}


def mul(T, x, y):
    r = Z
    for i in range(4):
        for j in range(4):
            if x[i] != 0 and y[j] != 0:
                r = r + x[i] * y[j] * T[i, j]
    return r.applyfunc(sp.expand)


# Sweedler algebra: products of H basis indices as {index: coef}
def hmul(a, b):
    if a == 0:
        return {b: 1}
    if b == 0:
        return {a: 1}
    tab = {
        (1, 1): {0: 1}, (1, 2): {3: 1}, (1, 3): {2: 1},
        (2, 1): {3: -1}, (3, 1): {2: -1},
    }
    return tab.get((a, b), {})


# coproduct as (coef, left, right)
DELTA = {0: [(1, 0, 0)], 1: [(1, 1, 1)], 2: [(1, 1, 2), (1, 2, 0)], 3: [(1, 0, 3), (1, 3, 1)]}
COUNIT = {0: 1, 1: 1, 2: 0, 3: 0}

_w = V(k1 * l1 + k2 * l2, k2 * l1 + k1 * l2, k3 * l1 + k4 * l2 + k1 * l3 + k2 * l4,
       -k4 * l1 - k3 * l2 + k2 * l3 + k1 * l4)
ACTIONS = {
    "action_hss": (
        HSS,
        {0: [e(i) for i in range(4)], 1: [Z] * 4,
         2: [V(k1, k2, k3, -k4), V(k2, k1, k4, -k3), V(0, 0, k1, k2), V(0, 0, k2, k1)],
         3: [V(l1, l2, l3, l4), V(l2, l1, l4, l3), V(0, 0, l1, -l2), V(0, 0, -l2, l1)]},
        {0: [e(0), Z, V(k1, k2, k3, -k4), V(l1, l2, l3, l4)], 1: [Z] * 4,
         2: [V(k1, k2, k3, -k4), Z, V(k1**2 + k2**2, 2 * k1 * k2, 2 * k1 * k3, -2 * k1 * k4), _w],
         3: [V(l1, l2, l3, l4), Z, _w, Z]},
    ),
    "action_hs": (
        HS,
        {0: [e(i) for i in range(4)], 1: [Z] * 4, 2: [e(3), e(2), e(1), e(0)],
         3: [V(l1, -l2, l3, l4), V(l2, l1, -l4, l3), V(l3, -l4, l1, l2), V(l4, l3, -l2, l1)]},
        {0: [e(0), Z, e(3), V(l1, -l2, l3, l4)], 1: [Z] * 4,
         2: [e(3), Z, e(0), V(l4, l3, -l2, l1)],
         3: [V(l1, -l2, l3, l4), Z, V(l4, l3, -l2, l1), Z]},
    ),
    "action_h00": (
        H00,
        {0: [e(i) for i in range(4)], 1: [Z] * 4,
         2: [V(0, k1, k2, k3), V(0, 0, 0, -k2), V(0, 0, 0, k1), Z],
         3: [V(l1, l2, l3, l4), V(0, l1, 0, l3), V(0, 0, l1, -l2), V(0, 0, 0, l1)]},
        {0: [e(0), Z, V(0, k1, k2, k3), V(l1, l2, l3, l4)], 1: [Z] * 4,
         2: [V(0, k1, k2, k3), Z, Z, V(0, k1 * l1, k2 * l1, k3 * l1 - k2 * l2 + k1 * l3)],
         3: [V(l1, l2, l3, l4), Z, V(0, k1 * l1, k2 * l1, k3 * l1 - k2 * l2 + k1 * l3), Z]},
    ),
}


def _is_zero(v):
    return v.applyfunc(sp.expand) == Z


def axiom_failures(name):
    """Failing tuples per axiom (E1..E6), recomputed from scratch."""
    T, act, om = ACTIONS[name]

    def actv(h, x):
        r = Z
        for i in range(4):
            if x[i] != 0:
                r = r + x[i] * act[h][i]
        return r.applyfunc(sp.expand)

    bad = {k: [] for k in ("E1", "E2", "E3", "E4", "E5", "E6")}
    for a in range(4):
        if not _is_zero(act[0][a] - e(a)):
            bad["E1"].append((0, a))
    for h in range(4):
        for a in range(4):
            for b in range(4):
                lhs = actv(h, mul(T, e(a), e(b)))
                rhs = Z
                for c, h1, h2 in DELTA[h]:
                    rhs = rhs + c * mul(T, act[h1][a], act[h2][b])
                if not _is_zero(lhs - rhs):
                    bad["E2"].append((h, a, b))
    for h in range(4):
        for l_ in range(4):
            for a in range(4):
                lhs = rhs = Z
                for c, h1, h2 in DELTA[h]:
                    for d, m1, m2 in DELTA[l_]:
                        lhs = lhs + c * d * mul(T, actv(h1, act[m1][a]), om[h2][m2])
                        for q, cc in hmul(h2, m2).items():
                            rhs = rhs + c * d * cc * mul(T, om[h1][m1], act[q][a])
                if not _is_zero(lhs - rhs):
                    bad["E3"].append((h, l_, a))
    for h in range(4):
        for l_ in range(4):
            rhs = Z
            for c, h1, h2 in DELTA[h]:
                for d, m1, m2 in DELTA[l_]:
                    for q, cc in hmul(h2, m2).items():
                        rhs = rhs + c * d * cc * mul(T, om[h1][m1], act[q][0])
            if not _is_zero(om[h][l_] - rhs):
                bad["E4"].append((h, l_))
    for h in range(4):
        if not (_is_zero(om[h][0] - act[h][0]) and _is_zero(om[0][h] - act[h][0])):
            bad["E5"].append((h,))
    for h in range(4):
        for m in range(4):
            for t in range(4):
                lhs = rhs = Z
                for c, h1, h2 in DELTA[h]:
                    for d, m1, m2 in DELTA[m]:
                        for f, t1, t2 in DELTA[t]:
                            for q, qq in hmul(m2, t2).items():
                                lhs = lhs + c * d * f * qq * mul(T, actv(h1, om[m1][t1]), om[h2][q])
                        for q, qq in hmul(h2, m2).items():
                            rhs = rhs + c * d * qq * mul(T, om[h1][m1], om[q][t])
                if not _is_zero(lhs - rhs):
                    bad["E6"].append((h, m, t))
    return bad


def smash_vector(name, a, h):
    """a#h = sum a (h1 . 1) (x) h2 as a length-16 vector, A index major."""
    T, act, _ = ACTIONS[name]
    out = sp.zeros(16, 1)
    for c, h1, h2 in DELTA[h]:
        x = mul(T, e(a), act[h1][0])
        for i in range(4):
            out[4 * i + h2] += c * x[i]
    return out.applyfunc(sp.expand)


def smash_product(name, x, y):
    """(a (x) h)(b (x) l) = a (h1 . b) w(h2, l1) (x) h3 l2 on 16-vectors."""
    T, act, om = ACTIONS[name]

    def delta3(h):
        return [(c * d, h1, m1, m2) for c, h1, h2 in DELTA[h] for d, m1, m2 in DELTA[h2]]

    out = sp.zeros(16, 1)
    for ia in range(4):
        for ih in range(4):
            cx = x[4 * ia + ih]
            if cx == 0:
                continue
            for ib in range(4):
                for il in range(4):
                    cy = y[4 * ib + il]
                    if cy == 0:
                        continue
                    for c, h1, h2, h3 in delta3(ih):
                        for d, m1, m2 in DELTA[il]:
                            left = mul(T, mul(T, e(ia), act[h1][ib]), om[h2][m1])
                            for q, qq in hmul(h3, m2).items():
                                for i in range(4):
                                    out[4 * i + q] += cx * cy * c * d * qq * left[i]
    return out.applyfunc(sp.expand)


def generic_rank(name):
    cols = [smash_vector(name, a, h) for h in range(4) for a in range(4)]
    return sp.Matrix.hstack(*cols).rank(simplify=True)


def to_sympy(x):
    """Package polynomial (or number) to a sympy expression."""
    terms = getattr(x, "terms", None)
    if terms is None:
        return sp.Rational(x)
    total = sp.Integer(0)
    for mono, c in x.terms.items():
        term = sp.Rational(c)
        for name, exp in mono:
            term *= SYMBOLS.get(name, sp.Symbol(name)) ** exp
        total += term
    return sp.expand(total)


def element_vector(el):
    return sp.Matrix([to_sympy(c) for c in el.coords])


def tensor_vector(t):
    return sp.Matrix([to_sympy(c) for c in t.vector()])
