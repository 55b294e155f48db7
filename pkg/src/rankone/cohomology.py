"""Chevalley-Eilenberg cohomology of n in degrees 0 and 1.

Cochains are graded by a-weight: a 1-cochain sending x to v has weight
wt(v) - wt(x).  Both differentials preserve this weight, so the a-invariant
part is computed on the weight-zero slab alone.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .catalog import RankOneDatum
from .chevalley import ModuleAction, _add_into, ad_action_module, ad_g0_image_rank, derivations, setup
from .kostant import kostant_h1_dimension, h1_highest_weights
from .linalg import Echelon
from .roots import InvalidInput


@dataclass
class CEComplex:
    module: ModuleAction
    weight: int | None  # None means the full complex
    c0: list = field(default_factory=list)  # module basis indices
    c1: list = field(default_factory=list)  # (x, v)
    c2: list = field(default_factory=list)  # (x, y, v) with x < y

    def __post_init__(self):
        M = self.module
        m = len(M.acting)

        def ok(total):
            return self.weight is None or total == self.weight

        self.c0 = [v for v in range(M.dim) if ok(M.weights[v])]
        self.c1 = [(x, v) for x in range(m) for v in range(M.dim)
                   if ok(M.weights[v] - M.acting_weights[x])]
        self.c2 = [(x, y, v) for x, y in combinations(range(m), 2) for v in range(M.dim)
                   if ok(M.weights[v] - M.acting_weights[x] - M.acting_weights[y])]
        self._c1_pos = {k: c for c, k in enumerate(self.c1)}
        self._c2_pos = {k: c for c, k in enumerate(self.c2)}

    def d0(self, v: int) -> dict:
        """(d0 v)(x) = x.v, as a sparse vector over c1."""
        out = {}
        for x in range(len(self.module.acting)):
            for r, val in self.module.matrices[x].get(v, {}).items():
                out[self._c1_pos[(x, r)]] = val
        return out

    def d1_of(self, cochain: dict) -> dict:
        """d1 f(x, y) = x.f(y) - y.f(x) - f([x, y]) for f sparse over c1."""
        M = self.module
        m = len(M.acting)
        f: dict = {}
        for c, val in cochain.items():
            x, v = self.c1[c]
            f.setdefault(x, {})[v] = val
        out: dict = {}
        for x, y in combinations(range(m), 2):
            img: dict = {}
            if y in f:
                _add_into(img, M.act(x, f[y]))
            if x in f:
                _add_into(img, M.act(y, f[x]), -1)
            for k, c in M.bracket.get((x, y), {}).items():
                if k in f:
                    _add_into(img, f[k], -c)
            for v, val in img.items():
                out[self._c2_pos[(x, y, v)]] = val
        return out

    def d1_basis(self, c: int) -> dict:
        return self.d1_of({c: 1})


@dataclass
class CohomologyResult:
    degree: int
    dimension: int
    a_invariant: bool
    path: str = "ce"
    ranks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"degree": self.degree, "dimension": self.dimension, "a_invariant": self.a_invariant,
                "path": self.path, "ranks": self.ranks}


def _check_rep(module: ModuleAction) -> None:
    if module.representation_defect():
        raise InvalidInput("action matrices do not define a representation of n")


def ce_h(module: ModuleAction, degree: int, a_invariant: bool = True, check: bool = True) -> CohomologyResult:
    if degree not in (0, 1):
        raise InvalidInput("only H^0 and H^1 are implemented")
    if check:
        _check_rep(module)
    cx = CEComplex(module, 0 if a_invariant else None)
    e0 = Echelon()
    images0 = []
    for v in cx.c0:
        img = cx.d0(v)
        images0.append(img)
        e0.add(img)
    rank_d0 = e0.rank
    if degree == 0:
        return CohomologyResult(0, len(cx.c0) - rank_d0, a_invariant,
                                ranks={"dim_C0": len(cx.c0), "rank_d0": rank_d0})
    for img in images0:
        if cx.d1_of(img):
            raise AssertionError("d1 o d0 is not zero")
    e1 = Echelon()
    for c in range(len(cx.c1)):
        e1.add(cx.d1_basis(c))
    rank_d1 = e1.rank
    z1 = len(cx.c1) - rank_d1
    return CohomologyResult(1, z1 - rank_d0, a_invariant, ranks={
        "dim_C0": len(cx.c0), "dim_C1": len(cx.c1), "dim_C2": len(cx.c2),
        "rank_d0": rank_d0, "rank_d1": rank_d1, "dim_Z1": z1, "dim_B1": rank_d0})


def h1_pair(module: ModuleAction, a_invariant: bool = True) -> tuple[int, int]:
    """(dim H^0, dim H^1) from a single complex."""
    r = ce_h(module, 1, a_invariant)
    return r.ranks["dim_C0"] - r.ranks["rank_d0"], r.dimension


def cocycle_basis(module: ModuleAction, a_invariant: bool = True) -> tuple[CEComplex, list]:
    from .linalg import nullspace

    cx = CEComplex(module, 0 if a_invariant else None)
    rows: dict = {}
    for c in range(len(cx.c1)):
        for r, v in cx.d1_basis(c).items():
            rows.setdefault(r, {})[c] = v
    return cx, nullspace(list(rows.values()), len(cx.c1))


def permuted(module: ModuleAction, seed: int) -> ModuleAction:
    """The same module with the acting n basis reordered."""
    m = len(module.acting)
    perm = list(range(m))
    random.Random(seed).shuffle(perm)
    inv = {old: new for new, old in enumerate(perm)}
    bracket = {}
    for (i, j), vec in module.bracket.items():
        a, b = inv[i], inv[j]
        v = {inv[k]: c for k, c in vec.items()}
        if a < b:
            bracket[(a, b)] = v
        else:
            bracket[(b, a)] = {k: -c for k, c in v.items()}
    return ModuleAction(module.labels, module.weights, [module.acting[p] for p in perm],
                        [module.acting_weights[p] for p in perm],
                        [module.matrices[p] for p in perm], bracket)


def adjoint_h1(datum: RankOneDatum) -> int:
    sc, gs = setup(datum)
    return ce_h(ad_action_module(sc, gs, "adjoint"), 1).dimension


@dataclass
class CrossCheck:
    algebra: str
    ce_dim: int
    kostant_dim: int
    weights: list

    @property
    def passed(self) -> bool:
        return self.ce_dim == self.kostant_dim


def cross_check(datum: RankOneDatum) -> CrossCheck:
    return CrossCheck(datum.ident, adjoint_h1(datum), kostant_h1_dimension(datum),
                      [str(w) for w in h1_highest_weights(datum)])


@dataclass
class JetReport:
    algebra: str
    h0_jet: int
    h1_jet: int
    h1_p: int
    h1_g: int
    induced_rank: int

    @property
    def passed(self) -> bool:
        return (self.h0_jet == 0 and self.h1_jet == self.h1_p == self.h1_g
                and self.induced_rank == self.h1_p)


def _induced_rank(emb, p_module: ModuleAction, jet_module_: ModuleAction, jet_keys: list) -> int:
    """Rank of H^1(n, p)^a -> H^1(n, j^3)^a induced by lambda."""
    sc, gs = emb.sc, emb.gs
    pidx = gs.p
    jpos = {k: c for c, k in enumerate(jet_keys)}
    r = jet_keys and max(sum(k[0]) for k in jet_keys)
    pmap = []
    for b in pidx:
        img = {jpos[k]: v for k, v in emb.images[b].terms if sum(k[0]) <= r}
        pmap.append(img)
    pcx, z1 = cocycle_basis(p_module)
    jcx = CEComplex(jet_module_, 0)
    jpos1 = {k: c for c, k in enumerate(jcx.c1)}
    boundaries = Echelon()
    for v in jcx.c0:
        boundaries.add(jcx.d0(v))
    base = boundaries.rank
    for z in z1:
        img: dict = {}
        for c, val in z.items():
            x, v = pcx.c1[c]
            for jv, coef in pmap[v].items():
                key = jpos1[(x, jv)]
                img[key] = img.get(key, 0) + val * coef
        if jcx.d1_of(img):
            raise AssertionError("lambda does not carry cocycles to cocycles")
        boundaries.add(img)
    return boundaries.rank - base


def verify_jet_iso(datum: RankOneDatum, emb=None) -> JetReport:
    from .fields import build_lambda, jet_module

    sc, gs = setup(datum)
    if emb is None:
        emb = build_lambda(sc, gs)
    jet, jmod = jet_module(emb, 3)
    h0, h1 = h1_pair(jmod)
    pmod = ad_action_module(sc, gs, "p")
    h1p = ce_h(pmod, 1).dimension
    h1g = ce_h(ad_action_module(sc, gs, "adjoint"), 1).dimension
    rank = _induced_rank(emb, pmod, jmod, jet.keys)
    return JetReport(datum.ident, h0, h1, h1p, h1g, rank)


def rigidity_verdict(datum: RankOneDatum) -> str:
    cc = cross_check(datum)
    if not cc.passed:
        raise AssertionError(f"Kostant and CE disagree for {datum.ident}")
    return "rigid" if cc.ce_dim == 0 else "non_rigid"


@dataclass
class Codimension:
    algebra: str
    der_a: int
    ad_g0: int
    h1: int
    der_full: int

    @property
    def codim(self) -> int:
        return self.der_a - self.ad_g0

    @property
    def identity_holds(self) -> bool:
        return self.codim == self.h1


def derivation_codimension(datum: RankOneDatum) -> Codimension:
    sc, gs = setup(datum)
    der = derivations(sc, gs)
    img = ad_g0_image_rank(sc, gs)
    if datum.is_simple and img != len(gs.g0):
        raise AssertionError("ad: g_0 -> Der(n) is not injective")
    return Codimension(datum.ident, der.invariant_dim, img, adjoint_h1(datum), der.dim)
