"""Kostant's formula for H^r(n, F_lambda) and the Weyl-group scans behind it.

For a dominant lambda the degree-r cohomology is the sum of the irreducible
l-modules of highest weight w(lambda + delta) - delta over Weyl elements of
length r whose result is l-dominant; those are exactly the minimal-length
coset representatives of W_l \\ W.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .catalog import RankOneDatum, delta_g, is_l_dominant, l_lowest_weights_of_n_minus
from .roots import InvalidInput, Weight, WeylElement, is_dominant, same_w_orbit, weyl_dimension


@dataclass
class Summand:
    mu: Weight
    w: WeylElement

    def to_json(self) -> dict:
        return {"mu": str(self.mu), "coords": self.mu.to_json(), "word": list(self.w.word),
                "length": self.w.length}


@dataclass
class KostantResult:
    degree: int
    summands: list
    a_invariant_summands: list

    def weights(self, a_invariant: bool = False) -> list:
        src = self.a_invariant_summands if a_invariant else self.summands
        return sorted(s.mu for s in src)


def _min_coset_rep(datum: RankOneDatum, w: WeylElement) -> bool:
    """w^-1 keeps the positive l roots positive, i.e. <a, w(delta)> > 0."""
    return all(a.dot(w.image) > 0 for a in datum.positive_l)


def kostant_cohomology(datum: RankOneDatum, lam: Weight, r: int) -> KostantResult:
    rs = datum.root_system
    lam = rs.normalize(lam)
    if not is_dominant(lam, rs.positive_roots):
        raise InvalidInput(f"{lam} is not dominant for the positive roots of g")
    if r < 0:
        raise InvalidInput("degree must be nonnegative")
    d = delta_g(datum)
    shifted = lam + d
    out = []
    for w in rs.weyl_by_length().get(r, []):
        mu = rs.normalize(w.apply_word(shifted) - d)
        dominant = is_l_dominant(datum, mu)
        if dominant != _min_coset_rep(datum, w):
            raise AssertionError(f"l-dominance of {mu} disagrees with the coset test for {w.word}")
        if dominant:
            out.append(Summand(mu, w))
    out.sort(key=lambda s: (s.mu, s.w.word))
    return KostantResult(r, out, a_invariant_filter(datum, out))


def a_invariant_filter(datum: RankOneDatum, items: list) -> list:
    """Keep the weights (or summands) orthogonal to a*."""
    def weight(x):
        return x.mu if isinstance(x, Summand) else x
    return [x for x in items if weight(x).dot(datum.a_star) == 0]


def h1_highest_weights(datum: RankOneDatum) -> list:
    """l-highest weights of H^1(n, g)^a, one entry per irreducible summand."""
    out = []
    for hw in datum.adjoint_hw:
        out += kostant_cohomology(datum, hw, 1).weights(a_invariant=True)
    return sorted(out)


def l_module_dimension(datum: RankOneDatum, mu: Weight) -> int:
    dim = weyl_dimension(mu, datum.positive_l)
    if dim.denominator != 1 or dim <= 0:
        raise AssertionError(f"{mu} is not an integral l-dominant weight (dimension {dim})")
    return int(dim)


def kostant_h1_dimension(datum: RankOneDatum) -> int:
    return sum(l_module_dimension(datum, mu) for mu in h1_highest_weights(datum))


def euler_count(datum: RankOneDatum, lam: Weight) -> tuple[int, int]:
    """(total summands over all degrees, |W| / |W_l|); these must agree."""
    rs = datum.root_system
    total = sum(len(kostant_cohomology(datum, lam, r).summands) for r in rs.weyl_by_length())
    wl = len(datum.l_system.weyl_group()) if datum.l_system else 1
    return total, len(rs.weyl_group()) // wl


@dataclass
class ScanEntry:
    word: tuple
    mu: Weight
    l_dominant: bool
    orthogonal: bool
    strictly_l_dominant: bool


@dataclass
class OrthogonalityReport:
    algebra: str
    scanned: dict = field(default_factory=dict)  # str(lambda) -> number of Weyl elements
    hits: dict = field(default_factory=dict)  # str(lambda) -> list of ScanEntry
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _scan(datum: RankOneDatum, lam: Weight) -> list:
    """All w with mu = w(lam - delta) - delta l-dominant and orthogonal to a*."""
    rs = datum.root_system
    d = delta_g(datum)
    base = lam - d
    hits = []
    for w in rs.weyl_group():
        mu = rs.normalize(w.apply_word(base) - d)
        if mu.dot(datum.a_star) != 0:
            continue
        if not is_l_dominant(datum, mu):
            continue
        hits.append(ScanEntry(w.word, mu, True, True, is_l_dominant(datum, mu, strict=True)))
    hits.sort(key=lambda e: (e.mu, e.word))
    return hits


def scan_non_lowest(datum: RankOneDatum) -> OrthogonalityReport:
    """Scan the l-lowest weights of n_- that are not g-lowest; any hit is a counterexample."""
    rep = OrthogonalityReport(datum.ident)
    for lam in l_lowest_weights_of_n_minus(datum)["other"]:
        hits = _scan(datum, lam)
        rep.scanned[str(lam)] = len(datum.root_system.weyl_group())
        rep.hits[str(lam)] = hits
        rep.counterexamples += [(lam, e) for e in hits]
    return rep


def scan_lowest(datum: RankOneDatum, by_lambda: bool = False):
    """Qualifying mu for each g-lowest weight lambda of g.

    Returns the sorted multiset of mu, or a dict keyed by lambda when
    ``by_lambda`` is set.
    """
    per = {}
    for lam in l_lowest_weights_of_n_minus(datum)["g_lowest"]:
        per[lam] = _scan(datum, lam)
    if by_lambda:
        return per
    return sorted(e.mu for hits in per.values() for e in hits)


def strictness_flags(datum: RankOneDatum) -> list:
    """Qualifying mu of the lowest-weight scan that are only weakly l-dominant."""
    return sorted({e.mu for hits in scan_lowest(datum, by_lambda=True).values()
                   for e in hits if not e.strictly_l_dominant})


def infinitesimal_character_match(datum: RankOneDatum, chi1: Weight, chi2: Weight) -> bool:
    return same_w_orbit(chi1, chi2, datum.root_system)


def multiset(weights) -> Counter:
    return Counter(str(w) for w in weights)


def h1_multiplicity_one(datum: RankOneDatum) -> bool:
    return all(v == 1 for v in multiset(h1_highest_weights(datum)).values())


__all__ = [
    "KostantResult", "OrthogonalityReport", "Summand", "a_invariant_filter", "scan_lowest",
    "euler_count", "infinitesimal_character_match", "kostant_cohomology", "kostant_h1_dimension",
    "l_module_dimension", "h1_highest_weights", "strictness_flags", "scan_non_lowest",
]
