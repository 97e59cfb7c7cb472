"""Finite commutative rings with unity as fully tabulated structures.

A ring element is an integer index into the ring's addition/multiplication
tables; index 0 is always the additive identity and the index of the
multiplicative identity is recorded in ``FiniteRing.one`` (it is 1 for Zn,
GF and quotient constructions; direct products place the all-ones tuple
wherever lexicographic tuple order puts it).

Every build runs an exhaustive ring-axiom scan over the finished tables, so
a FiniteRing that exists is a commutative ring with unity by construction.
"""

from __future__ import annotations

import itertools
from math import prod

import numpy as np

from .dsl import GF, Polynomial, Product, Quotient, RingExpr, Zn, expr_order, parse

DEFAULT_MAX_ORDER = 4096


class ValidationError(Exception):
    """An axiom scan failed; the construction produced corrupt tables."""


class BoundError(Exception):
    """Requested ring order exceeds the configured bound."""


class NotAUnitError(Exception):
    """Inverse requested for an element without one."""


class FiniteRing:
    """Immutable tabulated ring: order, add/mul tables, labels, unit mask."""

    def __init__(self, add: np.ndarray, mul: np.ndarray, labels: tuple[str, ...],
                 one: int, expr: RingExpr | None = None):
        self.order = int(add.shape[0])
        self.add = add
        self.mul = mul
        self.labels = labels
        self.zero = 0
        self.one = int(one)
        self.expr = expr
        _validate(add, mul, self.one)
        self.neg = (add == 0).argmax(axis=1)
        self.unit_mask = (mul == self.one).any(axis=1)
        self.characteristic = self._additive_order_of_one()
        for arr in (self.add, self.mul, self.neg, self.unit_mask):
            arr.setflags(write=False)

    def _additive_order_of_one(self) -> int:
        acc, k = self.one, 1
        while acc != 0:
            acc = int(self.add[acc, self.one])
            k += 1
        return k

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def is_unit(self, e: int) -> bool:
        return bool(self.unit_mask[e])

    def inverse(self, e: int) -> int:
        """The unique f with e*f == one; raises NotAUnitError otherwise."""
        if not self.unit_mask[e]:
            raise NotAUnitError(f"element {self.labels[e]} has no inverse")
        return int(np.flatnonzero(self.mul[e] == self.one)[0])

    def units(self) -> list[int]:
        return [int(e) for e in np.flatnonzero(self.unit_mask)]

    def zero_divisors(self) -> list[int]:
        """All non-units, the trivial zero-divisor 0 included."""
        return [int(e) for e in np.flatnonzero(~self.unit_mask)]

    def label(self, e: int) -> str:
        return self.labels[e]

    def __repr__(self) -> str:
        return f"FiniteRing(order={self.order}, characteristic={self.characteristic})"


def build(expr: RingExpr | str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Evaluate a ring expression (AST or DSL text) into a validated ring."""
    if isinstance(expr, str):
        expr = parse(expr)
    order = expr_order(expr)
    if order > max_order:
        raise BoundError(f"ring order {order} exceeds bound {max_order}")
    return _build_node(expr)


def _build_node(expr: RingExpr) -> FiniteRing:
    if isinstance(expr, Zn):
        add, mul, labels = _zn_tables(expr.n)
        return FiniteRing(add, mul, labels, one=1, expr=expr)
    if isinstance(expr, GF):
        if expr.k == 1:
            add, mul, labels = _zn_tables(expr.p)
            return FiniteRing(add, mul, labels, one=1, expr=expr)
        base = _build_node(Zn(expr.p))
        modulus = _find_irreducible(expr.p, expr.k)
        add, mul, labels = _quotient_tables(base, modulus)
        return FiniteRing(add, mul, labels, one=1, expr=expr)
    if isinstance(expr, Quotient):
        base = _build_node(expr.base)
        add, mul, labels = _quotient_tables(base, expr.modulus.coeffs)
        return FiniteRing(add, mul, labels, one=1, expr=expr)
    factors = [_build_node(f) for f in expr.factors]
    add, mul, labels, one = _product_tables(factors)
    return FiniteRing(add, mul, labels, one=one, expr=expr)


# --- base constructions ------------------------------------------------------


def _zn_tables(n: int) -> tuple[np.ndarray, np.ndarray, tuple[str, ...]]:
    idx = np.arange(n)
    add = (np.add.outer(idx, idx) % n).astype(np.int32)
    mul = (np.multiply.outer(idx, idx) % n).astype(np.int32)
    return add, mul, tuple(str(i) for i in range(n))


def _quotient_tables(base: FiniteRing, modulus: tuple[int, ...]):
    """Polynomials of degree < deg(modulus) over base, reduced modulo the
    monic modulus.  Element index = sum(c_i * base.order**i)."""
    assert base.one == 1, "quotient bases index their one at 1"
    d = len(modulus) - 1
    bo = base.order
    order = bo**d
    coeffs = [tuple((e // bo**i) % bo for i in range(d)) for e in range(order)]
    weights = [bo**i for i in range(d)]

    badd, bmul, bneg = base.add, base.mul, base.neg

    def reduce_product(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        raw = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = bmul[ai]
            for j, bj in enumerate(b):
                if bj:
                    raw[i + j] = badd[raw[i + j], row[bj]]
        for t in range(2 * d - 2, d - 1, -1):
            c = raw[t]
            if c == 0:
                continue
            raw[t] = 0
            shift = t - d
            for i in range(d):
                if modulus[i]:
                    raw[shift + i] = badd[raw[shift + i], bneg[bmul[c, modulus[i]]]]
        return sum(int(raw[i]) * weights[i] for i in range(d))

    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    for e in range(order):
        a = coeffs[e]
        for f in range(e, order):
            b = coeffs[f]
            s = sum(int(badd[a[i], b[i]]) * weights[i] for i in range(d))
            add[e, f] = add[f, e] = s
            p = reduce_product(a, b)
            mul[e, f] = mul[f, e] = p

    labels = tuple(_poly_label(c, base.labels) for c in coeffs)
    return add, mul, labels


def _poly_label(coeffs: tuple[int, ...], base_labels: tuple[str, ...]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = base_labels[coeffs[i]]
        if c == "0":
            continue
        if i == 0:
            terms.append(c)
            continue
        xpart = "x" if i == 1 else f"x^{i}"
        if c == "1":
            terms.append(xpart)
        elif c.isalnum():
            terms.append(f"{c}{xpart}")
        else:
            terms.append(f"({c}){xpart}")
    return "+".join(terms) if terms else "0"


def _product_tables(factors: list[FiniteRing]):
    """Componentwise tables over element tuples ordered lexicographically by
    component index (first factor most significant)."""
    orders = [r.order for r in factors]
    order = prod(orders)
    idx = np.arange(order)
    comps = []
    rem = idx.copy()
    for o in reversed(orders):
        comps.append(rem % o)
        rem //= o
    comps.reverse()

    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    one = 0
    weight = 1
    for k in range(len(factors) - 1, -1, -1):
        ci, cj = comps[k][:, None], comps[k][None, :]
        add += factors[k].add[ci, cj].astype(np.int64) * weight
        mul += factors[k].mul[ci, cj].astype(np.int64) * weight
        one += factors[k].one * weight
        weight *= orders[k]

    labels = []
    for e in range(order):
        parts = [factors[k].labels[comps[k][e]] for k in range(len(factors))]
        labels.append("[" + ",".join(parts) + "]")
    return add.astype(np.int32), mul.astype(np.int32), tuple(labels), one


# --- irreducible modulus search ----------------------------------------------


def _find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over Z_p, lexicographic by
    coefficient tuple, constant term first."""
    for tail in itertools.product(range(p), repeat=k):
        f = tail + (1,)
        if _is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible of degree {k} over Z_{p}")  # unreachable


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = tail + (1,)
            if _poly_divides(g, f, p):
                return False
    return True


def _poly_divides(g: tuple[int, ...], f: tuple[int, ...], p: int) -> bool:
    r = list(f)
    dg = len(g) - 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg or not r:
            break
        c = r[-1]
        shift = len(r) - 1 - dg
        for i, gc in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gc) % p
    return not r


# --- axiom scan ---------------------------------------------------------------


def _validate(add: np.ndarray, mul: np.ndarray, one: int) -> None:
    """Exhaustive O(order**3) scan of the commutative-ring-with-unity axioms."""
    n = add.shape[0]
    idx = np.arange(n)
    if not np.array_equal(add[0], idx):
        raise ValidationError("0 is not an additive identity")
    if not np.array_equal(mul[one], idx):
        raise ValidationError("recorded one is not a multiplicative identity")
    if not np.array_equal(add, add.T):
        raise ValidationError("addition is not commutative")
    if not np.array_equal(mul, mul.T):
        raise ValidationError("multiplication is not commutative")
    if not (add == 0).any(axis=1).all():
        raise ValidationError("some element has no additive inverse")

    block = max(1, (1 << 22) // max(n * n, 1))
    for lo in range(0, n, block):
        blk = np.arange(lo, min(lo + block, n))
        arows, mrows = add[blk], mul[blk]
        if not np.array_equal(add[arows], arows[:, add]):
            raise ValidationError("addition is not associative")
        if not np.array_equal(mul[mrows], mrows[:, mul]):
            raise ValidationError("multiplication is not associative")
        lhs = mrows[:, add]
        rhs = add[mrows[:, :, None], mrows[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise ValidationError("distributivity fails")


# --- display -------------------------------------------------------------------


def format_tables(ring: FiniteRing) -> str:
    """Both operation tables as text grids with label headers."""
    out = []
    for symbol, table in (("+", ring.add), ("*", ring.mul)):
        width = max(len(lbl) for lbl in ring.labels + (symbol,))
        head = [symbol.rjust(width)] + [lbl.rjust(width) for lbl in ring.labels]
        lines = [" ".join(head)]
        lines.append("-" * len(lines[0]))
        for e in range(ring.order):
            row = [ring.labels[e].rjust(width)]
            row += [ring.labels[table[e, f]].rjust(width) for f in range(ring.order)]
            lines.append(" ".join(row))
        out.append("\n".join(lines))
    return "\n\n".join(out)
