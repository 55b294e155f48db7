"""Chevalley bases from root data, gradings, derivations and module actions.

Structure constants follow the extraspecial-pair recipe: N is fixed to
+(p+1) on extraspecial pairs and every other constant is forced by the
standard identities.  The result is checked against the Jacobi identity on
every basis triple.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .catalog import RankOneDatum
from .linalg import nullspace, rank, solve, sparse_rank
from .roots import InvalidInput, RootSystem, Weight


class ConstructionError(RuntimeError):
    pass


def _add_into(acc: dict, vec: dict, c=1) -> dict:
    for k, v in vec.items():
        nv = acc.get(k, 0) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)
    return acc


def _string_p(rs: RootSystem, alpha: Weight, beta: Weight) -> int:
    """Largest p with beta - p*alpha a root."""
    p = 0
    cur = beta - alpha
    while rs.is_root(cur):
        p += 1
        cur = cur - alpha
    return p


class _Constants:
    """N_{r,s} for all pairs of roots whose sum is a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.order = {a: i for i, a in enumerate(rs.positive_roots)}
        self.norm = {a: a.dot(a) for a in rs.roots}
        self.table: dict = {}
        self.extraspecial: dict = {}
        for xi in rs.positive_roots:
            pairs = [(r, xi - r) for r in rs.positive_roots
                     if rs.is_positive(xi - r) and self.order[r] < self.order[xi - r]]
            if not pairs:
                continue
            r1, s1 = min(pairs, key=lambda rs_: self.order[rs_[0]])
            self.extraspecial[xi] = (r1, s1)
            self.table[(r1, s1)] = Fraction(_string_p(rs, r1, s1) + 1)
            for r, s in pairs:
                if (r, s) != (r1, s1):
                    self.table[(r, s)] = self._special(r, s, r1, s1, xi)

    def _special(self, r, s, r1, s1, xi) -> Fraction:
        rs = self.rs
        total = Fraction(0)
        if rs.is_root(s - r1):
            total += self.N(s, -r1) * self.N(r, -s1) / self.norm[s - r1]
        if rs.is_root(r - r1):
            total += self.N(-r1, r) * self.N(s, -s1) / self.norm[r - r1]
        return self.norm[xi] / self.table[(r1, s1)] * total

    def N(self, r: Weight, s: Weight) -> Fraction:
        rs = self.rs
        if not rs.is_root(r + s):
            return Fraction(0)
        pr, ps = rs.is_positive(r), rs.is_positive(s)
        if pr and ps:
            if self.order[r] > self.order[s]:
                return -self.N(s, r)
            return self.table[(r, s)]
        if not pr and not ps:
            return -self.N(-r, -s)
        t = -(r + s)
        if rs.is_positive(t) == pr:
            # (t, r) share a sign: N_{r,s}/|t|^2 = N_{t,r}/|s|^2
            return self.norm[t] / self.norm[s] * self.N(t, r)
        # (s, t) share a sign: N_{r,s}/|t|^2 = N_{s,t}/|r|^2
        return self.norm[t] / self.norm[r] * self.N(s, t)


@dataclass
class StructureConstants:
    """Bracket table on the basis h_1..h_r, e_alpha (alpha a root)."""

    labels: list
    roots: list  # root of each basis element, None for Cartan elements
    table: dict  # (i, j) -> {k: Fraction}, for i < j
    root_system: RootSystem = field(repr=False)
    n_int: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def bracket(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        return {k: -v for k, v in self.table.get((j, i), {}).items()}

    def bracket_vec(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                br = self.bracket(i, j)
                if br:
                    _add_into(out, br, a * b)
        return out

    def index_of_root(self, a: Weight) -> int:
        return self._root_index[a]

    def __post_init__(self):
        self._root_index = {r: i for i, r in enumerate(self.roots) if r is not None}

    def jacobi_residual(self) -> int:
        """Number of basis triples violating the Jacobi identity."""
        bad = 0
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            acc: dict = {}
            _add_into(acc, self.bracket_vec({i: 1}, self.bracket(j, k)))
            _add_into(acc, self.bracket_vec({j: 1}, self.bracket(k, i)))
            _add_into(acc, self.bracket_vec({k: 1}, self.bracket(i, j)))
            if acc:
                bad += 1
        return bad


@lru_cache(maxsize=None)
def _cached(ident: str):
    from .catalog import build

    return build_chevalley(build(ident).root_system, check=True)


def build_chevalley(rs: RootSystem, check: bool = True) -> StructureConstants:
    """Chevalley basis with integer structure constants for ``rs``."""
    consts = _Constants(rs)
    r = rs.rank
    labels = [f"h{i + 1}" for i in range(r)] + [f"e[{a}]" for a in rs.roots]
    roots = [None] * r + list(rs.roots)
    idx = {a: r + i for i, a in enumerate(rs.roots)}
    simple = rs.simple_roots
    coroot_cols = [[2 * c / s.dot(s) for c in s.coords] for s in simple]
    table: dict = {}

    def put(i, j, vec):
        vec = {k: v for k, v in vec.items() if v}
        if not vec:
            return
        if i < j:
            table[(i, j)] = vec
        else:
            table[(j, i)] = {k: -v for k, v in vec.items()}

    for a in rs.roots:
        ia = idx[a]
        for i, s in enumerate(simple):
            put(i, ia, {ia: 2 * a.dot(s) / s.dot(s)})
    n_int = {}
    for a in rs.roots:
        for b in rs.roots:
            ia, ib = idx[a], idx[b]
            if ia >= ib:
                continue
            if (a + b).is_zero():
                # [e_a, e_-a] = h_a, the coroot written in simple coroots
                target = [2 * c / a.dot(a) for c in rs.normalize(a).coords]
                mat = [[coroot_cols[j][k] for j in range(r)] for k in range(rs.dim)]
                coeffs = solve(mat, target)
                if coeffs is None:
                    raise ConstructionError(f"coroot of {a} not in the coroot lattice span")
                put(ia, ib, {j: c for j, c in enumerate(coeffs)})
            elif rs.is_root(a + b):
                nv = consts.N(a, b)
                p = _string_p(rs, a, b)
                if abs(nv) != p + 1:
                    raise ConstructionError(f"|N({a},{b})| = {abs(nv)} but p+1 = {p + 1}")
                n_int[(a, b)] = int(nv)
                n_int[(b, a)] = -int(nv)
                put(ia, ib, {idx[a + b]: nv})
    sc = StructureConstants(labels, roots, table, rs, n_int)
    if check:
        bad = sc.jacobi_residual()
        if bad:
            raise ConstructionError(f"Jacobi identity fails on {bad} basis triples")
    return sc


def chevalley_for(datum: RankOneDatum) -> StructureConstants:
    return _cached(datum.ident)


@dataclass
class GradedSlices:
    slices: dict  # grade -> list of basis indices
    weight: list  # a-weight (grade) of every basis element
    E: dict  # grading element as {cartan index: Fraction}

    def indices(self, *grades) -> list:
        return [i for g in grades for i in self.slices[g]]

    @property
    def n(self) -> list:
        return self.indices(1, 2)

    @property
    def n_minus(self) -> list:
        return self.indices(-1, -2)

    @property
    def p(self) -> list:
        return self.indices(0, 1, 2)

    @property
    def g0(self) -> list:
        return self.slices[0]

    def dims(self) -> tuple:
        return tuple(len(self.slices[g]) for g in (-2, -1, 0, 1, 2))


def graded_slices(sc: StructureConstants, datum: RankOneDatum) -> GradedSlices:
    rs = datum.root_system
    r = rs.rank
    weight = []
    for a in sc.roots:
        if a is None:
            weight.append(0)
        elif a in datum.grade:
            weight.append(datum.grade[a])
        elif -a in datum.grade:
            weight.append(-datum.grade[-a])
        else:
            weight.append(0)
    # alpha(h_i) = <alpha, alpha_i^vee>; solve alpha(E) = grade(alpha) on Delta(n)
    simple = rs.simple_roots
    mat = [[2 * a.dot(s) / s.dot(s) for s in simple] for a in datum.delta_n]
    sol = solve(mat, [Fraction(datum.grade[a]) for a in datum.delta_n])
    if sol is None:
        raise ConstructionError("no grading element solves alpha(E) = grade(alpha)")
    E = {i: c for i, c in enumerate(sol) if c}
    slices = {g: [] for g in (-2, -1, 0, 1, 2)}
    for i, w in enumerate(weight):
        slices[w].append(i)
    gs = GradedSlices(slices, weight, E)
    for i in range(sc.dim):
        br = sc.bracket_vec(E, {i: 1})
        expect = {i: Fraction(weight[i])} if weight[i] else {}
        if br != expect:
            raise ConstructionError(f"ad(E) does not act by {weight[i]} on {sc.labels[i]}")
    return gs


def check_grading(sc: StructureConstants, gs: GradedSlices) -> bool:
    for i in range(sc.dim):
        for j in range(i + 1, sc.dim):
            t = gs.weight[i] + gs.weight[j]
            for k in sc.bracket(i, j):
                if gs.weight[k] != t:
                    return False
    return True


def two_step(sc: StructureConstants, gs: GradedSlices) -> bool:
    n = gs.n
    for i in n:
        for j in n:
            inner = sc.bracket(i, j)
            for k in n:
                if sc.bracket_vec({k: 1}, inner):
                    return False
    return True


def center_of_n(sc: StructureConstants, gs: GradedSlices) -> list:
    """Basis of the centralizer of n in n (sparse vectors over basis indices)."""
    n = gs.n
    pos = {i: c for c, i in enumerate(n)}
    rows = []
    for x in n:
        # row block: coefficients of [x, sum c_j e_j] in every basis direction
        acc: dict = {}
        for j in n:
            for k, v in sc.bracket(x, j).items():
                acc.setdefault(k, {})[pos[j]] = v
        rows += list(acc.values())
    return [{n[c]: v for c, v in vec.items()} for vec in nullspace(rows, len(n))]


@dataclass
class DerivationSpace:
    basis: list  # matrices as {(row, col): Fraction} on the n basis
    invariant_basis: list
    n_indices: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def invariant_dim(self) -> int:
        return len(self.invariant_basis)


def _leibniz_rows(sc, n, unknown):
    """Linear equations D[x,y] = [Dx,y] + [x,Dy] over the chosen unknowns."""
    pos = {i: c for c, i in enumerate(n)}
    col = {u: c for c, u in enumerate(unknown)}
    by_src: dict = {}
    for (r, s) in unknown:
        by_src.setdefault(s, []).append(r)
    rows = []
    for a, b in combinations(n, 2):
        eq: dict = {}
        # D[x_a, x_b]
        for k, v in sc.bracket(a, b).items():
            for r in by_src.get(k, []):
                key = r
                eq.setdefault(key, {})
                c = col[(r, k)]
                eq[key][c] = eq[key].get(c, 0) + v
        # - [D x_a, x_b]
        for r in by_src.get(a, []):
            for k, v in sc.bracket(r, b).items():
                eq.setdefault(k, {})
                c = col[(r, a)]
                eq[k][c] = eq[k].get(c, 0) - v
        # - [x_a, D x_b]
        for r in by_src.get(b, []):
            for k, v in sc.bracket(a, r).items():
                eq.setdefault(k, {})
                c = col[(r, b)]
                eq[k][c] = eq[k].get(c, 0) - v
        rows += [{c: v for c, v in e.items() if v} for e in eq.values()]
    del pos
    return [r for r in rows if r]


def derivations(sc: StructureConstants, gs: GradedSlices) -> DerivationSpace:
    n = gs.n
    full = [(r, s) for s in n for r in n]
    inv = [(r, s) for (r, s) in full if gs.weight[r] == gs.weight[s]]
    out = []
    for unknown in (full, inv):
        sols = nullspace(_leibniz_rows(sc, n, unknown), len(unknown))
        out.append([{unknown[c]: v for c, v in vec.items()} for vec in sols])
    return DerivationSpace(out[0], out[1], n)


def ad_g0_image_rank(sc: StructureConstants, gs: GradedSlices) -> int:
    """Rank of ad restricted to n, as a map g_0 -> Der(n)."""
    n = gs.n
    cols = {(r, s): c for c, (r, s) in enumerate((r, s) for s in n for r in n)}
    rows = []
    for x in gs.g0:
        vec: dict = {}
        for s in n:
            for r, v in sc.bracket(x, s).items():
                vec[cols[(r, s)]] = v
        rows.append(vec)
    return sparse_rank(rows)


@dataclass
class ModuleAction:
    """Action of n on a finite-dimensional module, with an a-weight grading.

    ``matrices[x]`` maps a module basis column to its image ``{row: value}``.
    """

    labels: list
    weights: list
    acting: list  # labels of the acting n basis
    acting_weights: list
    matrices: list
    bracket: dict = field(default_factory=dict, repr=False)  # (i, j) -> {k: v} on the acting basis

    @property
    def dim(self) -> int:
        return len(self.labels)

    def act(self, x: int, vec: dict) -> dict:
        out: dict = {}
        m = self.matrices[x]
        for c, a in vec.items():
            col = m.get(c)
            if col:
                _add_into(out, col, a)
        return out

    def representation_defect(self) -> int:
        """Number of (pair, basis vector) where x.(y.v) - y.(x.v) != [x,y].v."""
        bad = 0
        m = len(self.acting)
        for i in range(m):
            for j in range(i + 1, m):
                br = self.bracket.get((i, j), {})
                for c in range(self.dim):
                    lhs = _add_into(self.act(i, self.act(j, {c: 1})), self.act(j, self.act(i, {c: 1})), -1)
                    rhs: dict = {}
                    for k, v in br.items():
                        _add_into(rhs, self.act(k, {c: 1}), v)
                    if _add_into(lhs, rhs, -1):
                        bad += 1
        return bad


def n_bracket(sc: StructureConstants, gs: GradedSlices) -> dict:
    n = gs.n
    pos = {i: c for c, i in enumerate(n)}
    out = {}
    for a, b in combinations(range(len(n)), 2):
        br = sc.bracket(n[a], n[b])
        if br:
            out[(a, b)] = {pos[k]: v for k, v in br.items()}
    return out


def ad_action_module(sc: StructureConstants, gs: GradedSlices, spec: str) -> ModuleAction:
    """n acting on ``adjoint`` (g), ``p`` or ``g/p``."""
    if spec == "adjoint":
        basis = list(range(sc.dim))
    elif spec == "p":
        basis = gs.p
    elif spec == "g/p":
        basis = gs.indices(-1, -2)
    else:
        raise InvalidInput(f"unknown module {spec!r}; expected adjoint, p or g/p")
    pos = {b: c for c, b in enumerate(basis)}
    mats = []
    for x in gs.n:
        m = {}
        for b in basis:
            img = {pos[k]: v for k, v in sc.bracket(x, b).items() if k in pos}
            if spec == "p" and any(k not in pos for k in sc.bracket(x, b)):
                raise ConstructionError("p is not n-stable")
            if img:
                m[pos[b]] = img
        mats.append(m)
    return ModuleAction(
        labels=[sc.labels[b] for b in basis],
        weights=[gs.weight[b] for b in basis],
        acting=[sc.labels[x] for x in gs.n],
        acting_weights=[gs.weight[x] for x in gs.n],
        matrices=mats,
        bracket=n_bracket(sc, gs),
    )


def ad_E_on(sc: StructureConstants, gs: GradedSlices, basis: list) -> list:
    """Diagonal of ad(E) on the span of ``basis`` (projected)."""
    out = []
    for b in basis:
        br = sc.bracket_vec(gs.E, {b: 1})
        out.append(br.get(b, Fraction(0)))
    return out


def setup(datum: RankOneDatum) -> tuple[StructureConstants, GradedSlices]:
    sc = chevalley_for(datum)
    return sc, graded_slices(sc, datum)


__all__ = [
    "ConstructionError", "DerivationSpace", "GradedSlices", "ModuleAction", "StructureConstants",
    "ad_action_module", "ad_g0_image_rank", "build_chevalley", "center_of_n", "check_grading",
    "chevalley_for", "derivations", "graded_slices", "rank", "setup", "two_step",
]
