"""Standard subgroups as finite presentations and H^1 via Fox calculus.

Generators are numbered 0 (a), 1..m1 (b_i), m1+1..m1+m2 (c_j).  A word is a
list of ``(generator, +1 | -1)`` letters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .catalog import RankOneDatum
from .chevalley import GradedSlices, StructureConstants, setup
from .linalg import identity, mat_inverse, mat_mul, sparse_rank
from .roots import InvalidInput


def _power(g: int, e: int) -> list:
    return [(g, 1 if e > 0 else -1)] * abs(e)


def inverse_word(w: list) -> list:
    return [(g, -e) for g, e in reversed(w)]


def commutator(x: int, y: int) -> list:
    return [(x, 1), (y, 1), (x, -1), (y, -1)]


@dataclass
class StandardPresentation:
    k: int
    m1: int
    m2: int
    exponents: dict = field(default_factory=dict)  # (i, j) -> {l: m_ij^l}, i < j over b's
    relators: list = field(default_factory=list)

    @property
    def ngens(self) -> int:
        return 1 + self.m1 + self.m2

    def b(self, i: int) -> int:
        return 1 + i

    def c(self, j: int) -> int:
        return 1 + self.m1 + j

    def names(self) -> list:
        return ["a"] + [f"b{i + 1}" for i in range(self.m1)] + [f"c{j + 1}" for j in range(self.m2)]

    def word_str(self, w: list) -> str:
        nm = self.names()
        return " ".join(nm[g] + ("" if e > 0 else "^-1") for g, e in w)


def standard_presentation(m1: int, m2: int, exponents: dict, k: int) -> StandardPresentation:
    if k < 2:
        raise InvalidInput("k must be at least 2")
    for vec in exponents.values():
        for v in vec.values():
            if Fraction(v).denominator != 1:
                raise InvalidInput("structure constants of the lattice basis must be integers")
    p = StandardPresentation(k, m1, m2, {key: {l: int(v) for l, v in vec.items()} for key, vec in exponents.items()})
    rel = []
    for i in range(m1):
        for j in range(m2):
            rel.append(commutator(p.b(i), p.c(j)))
    for i, j in combinations(range(m2), 2):
        rel.append(commutator(p.c(i), p.c(j)))
    for i, j in combinations(range(m1), 2):
        cword = [letter for l, m in sorted(p.exponents.get((i, j), {}).items()) for letter in _power(p.c(l), m)]
        rel.append(commutator(p.b(i), p.b(j)) + inverse_word(cword))
    for i in range(m1):
        rel.append([(0, 1), (p.b(i), 1), (0, -1)] + _power(p.b(i), -k))
    for j in range(m2):
        rel.append([(0, 1), (p.c(j), 1), (0, -1)] + _power(p.c(j), -k * k))
    p.relators = rel
    return p


def build_presentation(datum: RankOneDatum, k: int = 2) -> StandardPresentation:
    """Presentation with the Chevalley root vectors of g_1, g_2 as lattice basis."""
    sc, gs = setup(datum)
    g1, g2 = gs.slices[1], gs.slices[2]
    pos2 = {x: l for l, x in enumerate(g2)}
    exps = {}
    for i, j in combinations(range(len(g1)), 2):
        br = sc.bracket(g1[i], g1[j])
        if br:
            exps[(i, j)] = {pos2[x]: v for x, v in br.items()}
    return standard_presentation(len(g1), len(g2), exps, k)


def psl2_presentation(k: int = 2) -> StandardPresentation:
    """<a, b | a b a^-1 = b^k>."""
    return standard_presentation(1, 0, {}, k)


@dataclass
class GroupRep:
    dim: int
    matrices: list  # one per generator
    inverses: list = field(default_factory=list)

    def __post_init__(self):
        if not self.inverses:
            self.inverses = [mat_inverse(m) for m in self.matrices]

    def evaluate(self, word: list) -> list:
        out = identity(self.dim)
        for g, e in word:
            out = mat_mul(out, self.matrices[g] if e > 0 else self.inverses[g])
        return out

    def check(self, pres: StandardPresentation) -> bool:
        ident = identity(self.dim)
        return all(self.evaluate(r) == ident for r in pres.relators)


def _exp_ad_on_quotient(sc: StructureConstants, x: int, basis: list) -> list:
    """Matrix of exp(ad x) induced on span(basis) = g/p (p is ad(n)-stable)."""
    pos = {b: c for c, b in enumerate(basis)}
    cols = []
    for b in basis:
        term = {b: Fraction(1)}
        acc = dict(term)
        k = 1
        while term:
            nxt: dict = {}
            for j, v in term.items():
                for t, c in sc.bracket(x, j).items():
                    nxt[t] = nxt.get(t, 0) + c * v / k
            term = {t: v for t, v in nxt.items() if v}
            for t, v in term.items():
                acc[t] = acc.get(t, 0) + v
            k += 1
        cols.append([acc.get(b2, Fraction(0)) for b2 in basis])
    del pos
    return [[cols[j][i] for j in range(len(basis))] for i in range(len(basis))]


def adjoint_rep_on_g_mod_p(sc: StructureConstants, gs: GradedSlices, pres: StandardPresentation, k=None) -> GroupRep:
    k = Fraction(pres.k if k is None else k)
    basis = gs.indices(-1, -2)
    a = [[Fraction(0)] * len(basis) for _ in basis]
    for c, b in enumerate(basis):
        a[c][c] = k ** gs.weight[b]
    mats = [a]
    mats += [_exp_ad_on_quotient(sc, x, basis) for x in gs.slices[1]]
    mats += [_exp_ad_on_quotient(sc, x, basis) for x in gs.slices[2]]
    rep = GroupRep(len(basis), mats)
    if not rep.check(pres):
        raise AssertionError("relators do not evaluate to the identity on g/p")
    return rep


def scalar_rep(pres: StandardPresentation, s) -> GroupRep:
    s = Fraction(s)
    one = [[Fraction(1)]]
    return GroupRep(1, [[[s]]] + [one] * (pres.m1 + pres.m2))


def fox_jacobian(pres: StandardPresentation, rep: GroupRep) -> list:
    """Rows of the linearized relator system acting on (z(x_0), ..., z(x_n))."""
    d = rep.dim
    rows = []
    for rel in pres.relators:
        block = [[[Fraction(0)] * d for _ in range(d)] for _ in range(pres.ngens)]
        P = identity(d)
        for g, e in rel:
            if e > 0:
                coef = P
                P = mat_mul(P, rep.matrices[g])
            else:
                P = mat_mul(P, rep.inverses[g])
                coef = [[-v for v in row] for row in P]
            blk = block[g]
            for i in range(d):
                for j in range(d):
                    blk[i][j] += coef[i][j]
        if P != identity(d):
            raise AssertionError("relator does not evaluate to the identity")
        for i in range(d):
            rows.append({g * d + j: block[g][i][j] for g in range(pres.ngens) for j in range(d) if block[g][i][j]})
    return rows


def h0(pres: StandardPresentation, rep: GroupRep) -> int:
    d = rep.dim
    rows = []
    for m in rep.matrices:
        for i in range(d):
            rows.append({j: m[i][j] - (1 if i == j else 0) for j in range(d) if m[i][j] != (1 if i == j else 0)})
    return d - sparse_rank(rows)


def coboundary(pres: StandardPresentation, rep: GroupRep, v: list) -> dict:
    """z(x) = rho(x) v - v, flattened over generators."""
    d = rep.dim
    out = {}
    for g, m in enumerate(rep.matrices):
        for i in range(d):
            val = sum((m[i][j] * v[j] for j in range(d)), Fraction(0)) - v[i]
            if val:
                out[g * d + i] = val
    return out


@dataclass
class FoxResult:
    h0: int
    h1: int
    z1: int
    b1: int


def fox_h1(pres: StandardPresentation, rep: GroupRep) -> FoxResult:
    rows = fox_jacobian(pres, rep)
    d = rep.dim
    for i in range(d):
        z = coboundary(pres, rep, [Fraction(int(i == j)) for j in range(d)])
        for r in rows:
            if sum((v * z.get(c, 0) for c, v in r.items()), Fraction(0)):
                raise AssertionError("a coboundary fails the cocycle equations")
    z1 = pres.ngens * d - sparse_rank(rows)
    hz = h0(pres, rep)
    b1 = d - hz
    return FoxResult(hz, z1 - b1, z1, b1)


def abelianization_rank(pres: StandardPresentation) -> int:
    """Rank of the abelianization: generators minus rank of exponent sums."""
    rows = []
    for rel in pres.relators:
        row: dict = {}
        for g, e in rel:
            row[g] = row.get(g, 0) + e
        rows.append({g: v for g, v in row.items() if v})
    return pres.ngens - sparse_rank(rows)


def with_redundant_relator(pres: StandardPresentation) -> StandardPresentation:
    """Append a conjugate of the first relator (a Tietze move)."""
    extra = [(0, 1)] + pres.relators[0] + [(0, -1)]
    return StandardPresentation(pres.k, pres.m1, pres.m2, pres.exponents, pres.relators + [extra])


NON_EXCEPTIONAL = (Fraction(3), Fraction(5), Fraction(1, 2), Fraction(-1))


@dataclass
class ScanReport:
    k: int
    values: dict  # str(s) -> (h0, h1)
    exceptional: tuple
    passed: bool


def scalar_scan(pres: StandardPresentation, k: int | None = None) -> ScanReport:
    k = pres.k if k is None else k
    exceptional = (Fraction(1), Fraction(k), Fraction(k * k))
    values = {}
    ok = True
    for s in exceptional + NON_EXCEPTIONAL:
        res = fox_h1(pres, scalar_rep(pres, s))
        values[str(s)] = (res.h0, res.h1)
        if s != 1 and res.h0 != 0:
            ok = False
        if s not in exceptional and res.h1 != 0:
            ok = False
    return ScanReport(k, values, tuple(str(s) for s in exceptional), ok)


def gamma_h1_g_mod_p(datum: RankOneDatum, k: int = 2) -> FoxResult:
    sc, gs = setup(datum)
    pres = build_presentation(datum, k)
    return fox_h1(pres, adjoint_rep_on_g_mod_p(sc, gs, pres))
