"""Polynomial vector fields on n_- and the big-cell embedding of g.

Coordinates y_s on n_- follow the basis order g_-1 then g_-2.  A field is a
dictionary ``{(exponent tuple, target index): coefficient}`` and the bracket
is the usual one, [V, W] = V(W) - W(V).

For X in g and Y in n_- put W = pi(exp(-ad Y) X), where pi projects to n_-.
The left action moves exp(Y)P with velocity W + [Y, W]/2 (two-step BCH), and
fundamental fields of a left action anti-commute with the bracket, so
lambda(X)(Y) = -(W + [Y, W]/2) is a homomorphism.  On n_- this is
-X + [Y, X]/2, and lambda(E) is the linear field of -ad(E) on n_-.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .chevalley import ConstructionError, GradedSlices, ModuleAction, StructureConstants, _add_into, n_bracket
from .linalg import Echelon, in_span, nullspace, sparse_rank
from .roots import InvalidInput


def monomials(nvars: int, degree: int) -> list:
    """Exponent vectors of the given total degree, graded-lex order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def _mono_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class PolyField:
    nvars: int
    terms: tuple  # sorted ((mono, target), coef) pairs

    @classmethod
    def from_dict(cls, nvars: int, d: dict) -> "PolyField":
        return cls(nvars, tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(m) for (m, _), _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PolyField") -> "PolyField":
        return PolyField.from_dict(self.nvars, _add_into(self.as_dict(), other.as_dict()))

    def __sub__(self, other: "PolyField") -> "PolyField":
        return PolyField.from_dict(self.nvars, _add_into(self.as_dict(), other.as_dict(), -1))

    def scale(self, c) -> "PolyField":
        return PolyField.from_dict(self.nvars, {k: c * v for k, v in self.terms})

    def truncate(self, max_degree: int) -> "PolyField":
        return PolyField(self.nvars, tuple(t for t in self.terms if sum(t[0][0]) <= max_degree))


def _bracket_dicts(v: dict, w: dict, nvars: int) -> dict:
    out: dict = {}
    for sign, a, b in ((1, v, w), (-1, w, v)):
        for (ma, s), ca in a.items():
            for (mb, t), cb in b.items():
                k = mb[s]
                if not k:
                    continue
                m = list(_mono_add(ma, mb))
                m[s] -= 1
                key = (tuple(m), t)
                nv = out.get(key, 0) + sign * k * ca * cb
                if nv:
                    out[key] = nv
                else:
                    out.pop(key)
    return out


def poly_bracket(f: PolyField, g: PolyField) -> PolyField:
    if f.nvars != g.nvars:
        raise InvalidInput("fields live on different coordinate spaces")
    return PolyField.from_dict(f.nvars, _bracket_dicts(f.as_dict(), g.as_dict(), f.nvars))


def field_weight(key: tuple, var_grade: list) -> int:
    """a-weight of y^m d/dy_t: p + 2q - (grade of the target)."""
    mono, t = key
    return sum(e * g for e, g in zip(mono, var_grade)) - var_grade[t]


@dataclass
class LambdaEmbedding:
    sc: StructureConstants = field(repr=False)
    gs: GradedSlices = field(repr=False)
    nm: list  # g-basis indices of the n_- coordinates
    var_grade: list
    images: list  # PolyField per g-basis element
    residual: int = 0  # number of basis pairs where the homomorphism identity fails

    @property
    def nvars(self) -> int:
        return len(self.nm)

    def image_of(self, vec: dict) -> PolyField:
        acc: dict = {}
        for i, c in vec.items():
            _add_into(acc, self.images[i].as_dict(), c)
        return PolyField.from_dict(self.nvars, acc)

    def weight(self, key) -> int:
        return field_weight(key, self.var_grade)


def _poly_scale_mono(p: dict, mono: tuple, c) -> dict:
    return {_mono_add(m, mono): c * v for m, v in p.items()}


def _ad_Y(sc: StructureConstants, nm: list, vec: dict) -> dict:
    """[Y, vec] for the generic element Y = sum y_s X_s of n_-."""
    nvars = len(nm)
    unit = [tuple(int(i == s) for i in range(nvars)) for s in range(nvars)]
    out: dict = {}
    for k, poly in vec.items():
        for s, x in enumerate(nm):
            br = sc.bracket(x, k)
            for j, c in br.items():
                tgt = out.setdefault(j, {})
                _add_into(tgt, _poly_scale_mono(poly, unit[s], c))
                if not tgt:
                    del out[j]
    return out


def build_lambda(sc: StructureConstants, gs: GradedSlices, certify: bool = True) -> LambdaEmbedding:
    nm = gs.indices(-1, -2)
    nvars = len(nm)
    pos = {x: s for s, x in enumerate(nm)}
    var_grade = [-gs.weight[x] for x in nm]
    zero = tuple([0] * nvars)
    images = []
    for i in range(sc.dim):
        term = {i: {zero: Fraction(1)}}
        acc = {i: {zero: Fraction(1)}}
        k = 1
        while term:
            term = {j: {m: -v / k for m, v in p.items()} for j, p in _ad_Y(sc, nm, term).items()}
            for j, p in term.items():
                tgt = acc.setdefault(j, {})
                _add_into(tgt, p)
                if not tgt:
                    del acc[j]
            k += 1
            if k > 6:
                raise ConstructionError("ad(Y) failed to be nilpotent")
        W = {j: p for j, p in acc.items() if j in pos}
        corr = _ad_Y(sc, nm, W)
        fld: dict = {}
        for j, p in W.items():
            for m, v in p.items():
                fld[(m, pos[j])] = fld.get((m, pos[j]), 0) - v
        for j, p in corr.items():
            if j not in pos:
                raise ConstructionError("[n_-, n_-] left n_-")
            for m, v in p.items():
                fld[(m, pos[j])] = fld.get((m, pos[j]), 0) - v / 2
        images.append(PolyField.from_dict(nvars, fld))
    emb = LambdaEmbedding(sc, gs, nm, var_grade, images)
    if certify:
        emb.residual = homomorphism_residual(emb)
        if emb.residual:
            raise ConstructionError(f"lambda fails to be a homomorphism on {emb.residual} pairs")
    return emb


def homomorphism_residual(emb: LambdaEmbedding) -> int:
    bad = 0
    sc = emb.sc
    for i, j in combinations(range(sc.dim), 2):
        lhs = emb.image_of(sc.bracket(i, j))
        rhs = poly_bracket(emb.images[i], emb.images[j])
        if lhs != rhs:
            bad += 1
    return bad


def lambda_rank(emb: LambdaEmbedding) -> int:
    keys: dict = {}
    rows = []
    for img in emb.images:
        rows.append({keys.setdefault(k, len(keys)): v for k, v in img.terms})
    return sparse_rank(rows)


def lambda_E(emb: LambdaEmbedding) -> PolyField:
    return emb.image_of(emb.gs.E)


def expected_lambda_E(emb: LambdaEmbedding) -> PolyField:
    """Linear field x -> -ad(E)x on n_-: coefficient g on a grade -g coordinate."""
    d = {}
    for s, g in enumerate(emb.var_grade):
        mono = tuple(int(i == s) for i in range(emb.nvars))
        d[(mono, s)] = Fraction(g)
    return PolyField.from_dict(emb.nvars, d)


def ad_E_eigenvalues_on_nminus(emb: LambdaEmbedding) -> list:
    sc, gs = emb.sc, emb.gs
    return sorted({sc.bracket_vec(gs.E, {x: 1})[x] for x in emb.nm})


def field_keys(nvars: int, max_degree: int, min_degree: int = 0) -> list:
    return [(m, t) for d in range(min_degree, max_degree + 1) for m in monomials(nvars, d) for t in range(nvars)]


def _solve_fields(keys: list, constraints, nvars: int) -> list:
    """Null space of a linear map on span(keys) given by ``constraints(key) -> dict``."""
    col = {k: c for c, k in enumerate(keys)}
    rows: dict = {}
    for k in keys:
        for tag, v in constraints(k).items():
            rows.setdefault(tag, {})[col[k]] = v
    sols = nullspace(list(rows.values()), len(keys))
    return [PolyField.from_dict(nvars, {keys[c]: v for c, v in s.items()}) for s in sols]


@dataclass
class Centralizer:
    basis: list
    weights: list
    derived_dim: int
    closed: bool

    @property
    def dim(self) -> int:
        return len(self.basis)


def centralizer_of_lambda_nminus(emb: LambdaEmbedding, degree_cap: int = 2) -> Centralizer:
    if degree_cap < 2:
        raise InvalidInput("degree cap must be at least 2")
    nv = emb.nvars
    gens = [emb.images[x].as_dict() for x in emb.nm]
    keys = field_keys(nv, degree_cap)
    blocks: dict = {}
    for k in keys:
        blocks.setdefault(emb.weight(k), []).append(k)
    basis, weights = [], []
    for w in sorted(blocks):
        def constraints(k, gens=gens):
            out = {}
            for gi, gd in enumerate(gens):
                for kk, v in _bracket_dicts({k: Fraction(1)}, gd, nv).items():
                    out[(gi, kk)] = v
            return out
        sols = _solve_fields(blocks[w], constraints, nv)
        basis += sols
        weights += [w] * len(sols)
    col: dict = {}

    def vec(f):
        return {col.setdefault(k, len(col)): v for k, v in f.terms}

    span = [vec(f) for f in basis]
    brackets = [vec(poly_bracket(a, b)) for a, b in combinations(basis, 2)]
    closed = all(in_span(span, b) for b in brackets)
    return Centralizer(basis, weights, sparse_rank(brackets), closed)


@dataclass
class JetAlgebra:
    order: int
    keys: list
    weights: list

    @property
    def dim(self) -> int:
        return len(self.keys)


def jet_module(emb: LambdaEmbedding, r: int) -> tuple[JetAlgebra, ModuleAction]:
    """j^r(n_-, 0) and the action of n on it through ad(lambda(X))."""
    if r not in (1, 2, 3, 4):
        raise InvalidInput("jet order must be between 1 and 4")
    nv = emb.nvars
    keys = field_keys(nv, r, min_degree=1)
    pos = {k: c for c, k in enumerate(keys)}
    weights = [emb.weight(k) for k in keys]
    gs = emb.gs
    mats = []
    for x in gs.n:
        lam = emb.images[x].as_dict()
        if any(sum(m) == 0 for (m, _) in lam):
            raise ConstructionError("lambda(X) does not vanish at the origin for X in n")
        m = {}
        for c, k in enumerate(keys):
            img = _bracket_dicts(lam, {k: Fraction(1)}, nv)
            img = {pos[kk]: v for kk, v in img.items() if sum(kk[0]) <= r}
            if img:
                m[c] = img
        mats.append(m)
    action = ModuleAction(
        labels=[_key_label(k) for k in keys],
        weights=weights,
        acting=[emb.sc.labels[x] for x in gs.n],
        acting_weights=[gs.weight[x] for x in gs.n],
        matrices=mats,
        bracket=n_bracket(emb.sc, gs),
    )
    return JetAlgebra(r, keys, weights), action


def _key_label(key) -> str:
    mono, t = key
    parts = [f"y{i}^{e}" if e > 1 else f"y{i}" for i, e in enumerate(mono) if e]
    return ("*".join(parts) or "1") + f" d{t}"


def jet_E_eigenvalues(emb: LambdaEmbedding, jet: JetAlgebra) -> list:
    """Eigenvalues of ad(lambda(E)) on the jet basis, checked to be diagonal."""
    lamE = lambda_E(emb).as_dict()
    vals = set()
    for k, w in zip(jet.keys, jet.weights):
        img = _bracket_dicts(lamE, {k: Fraction(1)}, emb.nvars)
        if img != ({k: Fraction(w)} if w else {}):
            raise ConstructionError(f"lambda(E) is not diagonal on {k}")
        vals.add(w)
    return sorted(vals)


def weight_zero_keys(emb: LambdaEmbedding) -> list:
    """Basis of a-weight-zero fields; these automatically have degree <= 2."""
    return [k for k in field_keys(emb.nvars, 2) if emb.weight(k) == 0]


@dataclass
class NormalizerReport:
    solution_dim: int
    g0_dim: int
    contains_g0: bool

    @property
    def passed(self) -> bool:
        return self.contains_g0 and self.solution_dim == self.g0_dim


def verify_normalizer(emb: LambdaEmbedding) -> NormalizerReport:
    """Weight-zero fields X with [X, lambda(n)] in lambda(n) versus lambda(g_0).

    Weight-zero fields commute with lambda(E) automatically, so the
    a-centralizing condition is built into the unknowns.
    """
    nv = emb.nvars
    gs = emb.gs
    xkeys = weight_zero_keys(emb)
    n = gs.n
    # unknowns: coefficients of X, then a_{v,u} for [X, lambda(v)] = sum_u a_{v,u} lambda(u)
    aux = [(v, u) for v in n for u in n if gs.weight[u] == gs.weight[v]]
    ncols = len(xkeys) + len(aux)
    rows: dict = {}
    for c, k in enumerate(xkeys):
        for vi, v in enumerate(n):
            for kk, val in _bracket_dicts({k: Fraction(1)}, emb.images[v].as_dict(), nv).items():
                rows.setdefault((vi, kk), {})[c] = val
    for c, (v, u) in enumerate(aux, start=len(xkeys)):
        vi = n.index(v)
        for kk, val in emb.images[u].terms:
            rows.setdefault((vi, kk), {})[c] = -val
    sols = nullspace(list(rows.values()), ncols)
    proj = [{c: v for c, v in s.items() if c < len(xkeys)} for s in sols]
    ech = Echelon()
    for p in proj:
        ech.add(p)
    xcol = {k: c for c, k in enumerate(xkeys)}
    g0_vecs = []
    for x in gs.g0:
        img = emb.images[x]
        if any(k not in xcol for k, _ in img.terms):
            g0_vecs = None
            break
        g0_vecs.append({xcol[k]: v for k, v in img.terms})
    contains = g0_vecs is not None and all(not ech.reduce(v) for v in g0_vecs)
    g0_dim = sparse_rank(g0_vecs) if g0_vecs is not None else -1
    return NormalizerReport(ech.rank, g0_dim, contains)


def f4_lambda_enabled(flag: bool = False) -> bool:
    return flag or os.environ.get("RANKONE_ENABLE_F4_LAMBDA", "") == "1"


F4_LAMBDA_MEMORY_ENV = "RANKONE_F4_LAMBDA_MAX_MB"
