"""Exact sparse linear algebra.

Rows are dictionaries ``{column: value}``.  Ranks are computed by an
incremental fraction-free elimination over Python integers: each row is
scaled to a primitive integer vector, and eliminating a leading entry uses
``a*r - b*p`` followed by removal of the content, so no rationals appear.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


def _primitive(row: Mapping[int, object]) -> dict:
    """Scale a rational row to a primitive integer row with positive lead."""
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = lcm(den, v.denominator)
    ints = {c: int(v * den) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def _content_reduce(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g in (0, 1):
        return row
    return {c: v // g for c, v in row.items()}


class Echelon:
    """Incrementally maintained integer row-echelon form.

    ``add`` returns True when the row was independent of those seen so far.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    def reduce(self, row: Mapping[int, object]) -> dict:
        r = _primitive(row)
        pivots = self.pivots
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                return r
            a, b = p[c], r[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            out = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            r = _content_reduce(out)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparse_rank(rows: Iterable[Mapping[int, object]]) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def dense_to_sparse(rows: Sequence[Sequence]) -> list:
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a dense matrix given as a list of rows."""
    return sparse_rank(dense_to_sparse(rows))


def rref(rows: Iterable[Mapping[int, object]]) -> tuple[list, list]:
    """Reduced row echelon form over Q.

    Returns ``(pivot_columns, rows)`` with each row normalized to have a 1
    in its pivot column and zeros in every other pivot column.
    """
    ech = Echelon()
    for row in rows:
        ech.add(row)
    cols = sorted(ech.pivots)
    red: dict[int, dict] = {}
    for c in reversed(cols):
        p = ech.pivots[c]
        lead = Fraction(p[c])
        r = {k: Fraction(v) / lead for k, v in p.items()}
        for k in [k for k in r if k != c and k in red]:
            f = r[k]
            for kk, vv in red[k].items():
                nv = r.get(kk, 0) - f * vv
                if nv:
                    r[kk] = nv
                else:
                    r.pop(kk, None)
        red[c] = r
    return cols, [red[c] for c in cols]


def nullspace(rows: Iterable[Mapping[int, object]], ncols: int) -> list:
    """Basis of {x : row . x = 0 for every row}, as sparse Fraction dicts."""
    cols, red = rref(rows)
    pivset = set(cols)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: Fraction(1)}
        for c, r in zip(cols, red):
            v = r.get(free)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One exact solution of ``mat @ x = rhs``; None when inconsistent.

    Free variables are set to zero.
    """
    n = len(mat[0]) if mat else 0
    rows = []
    for r, b in zip(mat, rhs):
        d = {j: v for j, v in enumerate(r) if v}
        if b:
            d[n] = b
        rows.append(d)
    cols, red = rref(rows)
    if n in cols:
        return None
    x = [Fraction(0)] * n
    for c, r in zip(cols, red):
        x[c] = r.get(n, Fraction(0))
    return x


def in_span(basis: Sequence[Mapping[int, object]], vec: Mapping[int, object]) -> bool:
    ech = Echelon()
    for b in basis:
        ech.add(b)
    return not ech.reduce(vec)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int) -> list:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_inverse(a: Sequence[Sequence]) -> list:
    n = len(a)
    rows = [{**{j: v for j, v in enumerate(r) if v}, **{n + i: Fraction(1)}} for i, r in enumerate(a)]
    cols, red = rref(rows)
    if cols[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [[red[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]
