"""Root data for the complexified real-rank-one simple Lie algebras.

Each entry records the roots of g, of the nilradical n of the minimal
parabolic, and of the Levi factor l, the vector spanning a*, and the grading
of n into g_1 + g_2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .roots import InvalidInput, RootSystem, Weight, delta, is_dominant, sub_root_system

FAMILIES = ("so_odd", "so_even", "sl", "sp", "f4")

REAL_FORMS = {
    "so": "SO0({p},1)",
    "sl": "SU({p},1)",
    "sp": "Sp({p},1)",
    "f4": "F4^{{-20}}",
}


@dataclass
class RankOneDatum:
    family: str
    rank: int  # dimension parameter: m for so(m), n for sl(n), 2n for sp(2n), 4 for f4
    root_system: RootSystem
    delta_n: list
    delta_l: list
    a_star: Weight
    grade: dict
    adjoint_hw: list
    l_system: RootSystem | None = field(default=None, repr=False)

    @property
    def ident(self) -> str:
        if self.family == "f4":
            return "f4"
        prefix = "so" if self.family.startswith("so") else self.family
        return f"{prefix}:{self.rank}"

    @property
    def dim(self) -> int:
        return self.root_system.dim

    @property
    def positive_l(self) -> list:
        return [a for a in self.delta_l if self.root_system.is_positive(a)]

    @property
    def is_simple(self) -> bool:
        return len(self.adjoint_hw) == 1

    @property
    def real_form(self) -> str:
        base = "so" if self.family.startswith("so") else self.family
        p = {"so": self.rank - 1, "sl": self.rank - 1, "sp": self.rank // 2 - 1, "f4": 0}[base]
        return REAL_FORMS[base].format(p=p)

    def g_slice(self, i: int) -> list:
        """Roots of g_i for i in -2..2 (g_0 roots are the l roots)."""
        if i == 0:
            return list(self.delta_l)
        if i > 0:
            return [a for a in self.delta_n if self.grade[a] == i]
        return [-a for a in self.delta_n if self.grade[a] == -i]


def _e(dim: int, *terms) -> Weight:
    c = [Fraction(0)] * dim
    for coef, idx in terms:
        c[idx] += coef
    return Weight(c)


def _classical_roots(family: str, n: int) -> tuple[list, list]:
    """Simple and positive roots in the standard e-basis."""
    pos = []
    if family in ("so_odd", "so_even", "sp"):
        for i, j in combinations(range(n), 2):
            pos.append(_e(n, (1, i), (-1, j)))
            pos.append(_e(n, (1, i), (1, j)))
        simple = [_e(n, (1, i), (-1, i + 1)) for i in range(n - 1)]
        if family == "so_odd":
            pos += [_e(n, (1, i)) for i in range(n)]
            simple.append(_e(n, (1, n - 1)))
        elif family == "sp":
            pos += [_e(n, (2, i)) for i in range(n)]
            simple.append(_e(n, (2, n - 1)))
        else:
            simple.append(_e(n, (1, n - 2), (1, n - 1)))
    elif family == "sl":
        pos = [_e(n, (1, i), (-1, j)) for i, j in combinations(range(n), 2)]
        simple = [_e(n, (1, i), (-1, i + 1)) for i in range(n - 1)]
    elif family == "f4":
        pos = [Weight((1,) + s) for s in product((1, -1), repeat=3)]
        for i, j in combinations(range(4), 2):
            pos.append(_e(4, (2, i), (-2, j)))
            pos.append(_e(4, (2, i), (2, j)))
        pos += [_e(4, (2, i)) for i in range(4)]
        simple = [Weight((1, -1, -1, -1)), _e(4, (2, 1), (-2, 2)), _e(4, (2, 2), (-2, 3)), _e(4, (2, 3))]
    else:
        raise InvalidInput(f"unknown family {family!r}")
    return simple, pos


def _nilradical(family: str, n: int) -> tuple[list, Weight]:
    """Delta(n) and the a* vector, read off from the restricted-root listing."""
    dn = []
    if family in ("so_odd", "so_even"):
        for j in range(1, n):
            dn += [_e(n, (1, 0), (1, j)), _e(n, (1, 0), (-1, j))]
        if family == "so_odd":
            dn.append(_e(n, (1, 0)))
        a = _e(n, (1, 0))
    elif family == "sl":
        dn = [_e(n, (1, 0), (-1, j)) for j in range(1, n)]
        dn += [_e(n, (1, i), (-1, n - 1)) for i in range(1, n - 1)]
        a = _e(n, (1, 0), (-1, n - 1))
    elif family == "sp":
        for i in (0, 1):
            for j in range(2, n):
                dn += [_e(n, (1, i), (1, j)), _e(n, (1, i), (-1, j))]
        dn += [_e(n, (2, 0)), _e(n, (1, 0), (1, 1)), _e(n, (2, 1))]
        a = _e(n, (1, 0), (1, 1))
    else:
        dn = [Weight((1,) + s) for s in product((1, -1), repeat=3)]
        dn += [_e(4, (2, 0), (s, j)) for j in range(1, 4) for s in (2, -2)]
        dn.append(_e(4, (2, 0)))
        a = _e(4, (1, 0))
    return dn, a


def parse_algebra_id(text: str) -> tuple[str, int]:
    """``so:<m> | sl:<n> | sp:<2n> | f4`` to (family, rank parameter)."""
    text = text.strip().lower()
    if text == "f4":
        return "f4", 4
    m = re.fullmatch(r"(so|sl|sp):(\d+)", text)
    if not m:
        raise InvalidInput(f"bad algebra id {text!r}; expected so:<m>, sl:<n>, sp:<2n> or f4")
    kind, size = m.group(1), int(m.group(2))
    if kind == "so":
        return ("so_even" if size % 2 == 0 else "so_odd"), size
    return kind, size


def _check_bounds(family: str, size: int) -> int:
    """Validate the rank parameter and return the ambient dimension."""
    if family in ("so_odd", "so_even"):
        if size < 4:
            raise InvalidInput(f"so(m) requires m >= 4 (so(2n+1) and so(2n) with n >= 2), got m={size}")
        if (size % 2 == 0) != (family == "so_even"):
            raise InvalidInput(f"parity of m={size} does not match family {family}")
        return size // 2
    if family == "sl":
        if size < 3:
            raise InvalidInput(f"sl(n) requires n >= 3, got n={size}")
        return size
    if family == "sp":
        if size % 2 or size < 6:
            raise InvalidInput(f"sp(2n) requires an even size with n >= 3, got {size}")
        return size // 2
    if family == "f4":
        if size != 4:
            raise InvalidInput("f4 has no rank parameter")
        return 4
    raise InvalidInput(f"unknown family {family!r}")


@lru_cache(maxsize=None)
def build_catalog(family: str, rank: int | None = None) -> RankOneDatum:
    """Build a catalog entry.

    ``family`` may also be a full algebra id such as ``"sp:6"``; ``rank`` is
    the dimension parameter (m of so(m), n of sl(n), 2n of sp(2n)).
    """
    if rank is None:
        family, rank = parse_algebra_id(family)
    dim = _check_bounds(family, rank)
    simple, pos = _classical_roots(family, dim)
    rs = RootSystem(family, dim, simple, pos, centered=(family == "sl"))
    dn, a = _nilradical(family, dim)
    dn = sorted(dn, key=rs._height_key)
    nset = set(dn)
    dl = [r for r in rs.roots if r not in nset and -r not in nset]
    pairings = {r: r.dot(a) for r in dn}
    base = min(pairings.values())
    grade = {r: p / base for r, p in pairings.items()}
    datum = RankOneDatum(
        family=family,
        rank=rank,
        root_system=rs,
        delta_n=dn,
        delta_l=dl,
        a_star=a,
        grade={r: int(g) for r, g in grade.items()},
        adjoint_hw=rs.highest_roots(),
        l_system=sub_root_system(rs, dl, family="l"),
    )
    _validate(datum, grade)
    return datum


def build(algebra_id: str) -> RankOneDatum:
    return build_catalog(*parse_algebra_id(algebra_id))


def _validate(d: RankOneDatum, raw_grade: dict) -> None:
    rs = d.root_system
    nset, lset = set(d.delta_n), set(d.delta_l)
    neg = {-a for a in d.delta_n}
    if len(nset) + len(lset) + len(neg) != len(rs.roots) or nset & lset or neg & lset:
        raise AssertionError("roots of g do not split as n + l + n_-")
    if not all(rs.is_positive(a) for a in d.delta_n):
        raise AssertionError("Delta(n) is not contained in the positive roots")
    if any(-a not in lset for a in lset):
        raise AssertionError("Delta(l) is not closed under negation")
    if any(a.dot(d.a_star) != 0 for a in lset):
        raise AssertionError("an l root pairs nontrivially with a*")
    if any(a.dot(d.a_star) <= 0 for a in nset):
        raise AssertionError("an n root pairs nonpositively with a*")
    if any(g not in (1, 2) for g in raw_grade.values()):
        raise AssertionError(f"grades outside {{1, 2}}: {set(raw_grade.values())}")
    if d.l_system is not None:
        lsimple = set(d.l_system.simple_roots)
        if not lsimple <= set(rs.simple_roots):
            raise AssertionError("Levi factor is not standard")
    # n must be an l-module: adding a positive l root keeps us in Delta(n)
    for a in nset:
        for b in d.positive_l:
            if rs.is_root(a + b) and (a + b) not in nset:
                raise AssertionError("Delta(n) is not stable under l")


def a_star(datum: RankOneDatum) -> Weight:
    return datum.a_star


def grade_of(datum: RankOneDatum, alpha: Weight) -> int:
    try:
        return datum.grade[alpha]
    except KeyError:
        raise InvalidInput(f"{alpha} is not a root of n") from None


def l_lowest_weights_of_n_minus(datum: RankOneDatum) -> dict:
    """Weights of l-lowest weight vectors in n_-.

    Returns ``{"g_lowest": [...], "other": [...]}``; the g-lowest weights are
    the negatives of the highest roots.
    """
    nminus = {-a for a in datum.delta_n}
    lowest = [
        lam for lam in sorted(nminus, key=lambda w: datum.root_system._height_key(-w))
        if all((lam - b) not in nminus for b in datum.positive_l)
    ]
    glow = {-h for h in datum.adjoint_hw}
    return {
        "g_lowest": [w for w in lowest if w in glow],
        "other": [w for w in lowest if w not in glow],
    }


def is_l_dominant(datum: RankOneDatum, mu: Weight, strict: bool = False) -> bool:
    return is_dominant(mu, datum.positive_l, strict=strict)


def delta_g(datum: RankOneDatum) -> Weight:
    return delta(datum.root_system)


DEFAULT_IDS = ("so:4", "so:5", "so:6", "so:7", "so:8", "sl:3", "sl:4", "sl:5", "sl:6",
               "sp:6", "sp:8", "sp:10", "f4")
