from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from rankone.catalog import build
from rankone.chevalley import setup
from rankone.fields import (PolyField, ad_E_eigenvalues_on_nminus, build_lambda, centralizer_of_lambda_nminus,
                            expected_lambda_E, f4_lambda_enabled, field_keys, homomorphism_residual,
                            jet_E_eigenvalues, jet_module, lambda_E, lambda_rank, monomials, poly_bracket,
                            verify_normalizer)
from rankone.roots import InvalidInput

_cache = {}


def emb_for(alg):
    if alg not in _cache:
        _cache[alg] = build_lambda(*setup(build(alg)))
    return _cache[alg]


def to_sympy(f: PolyField, ys):
    comps = [sympy.Integer(0)] * f.nvars
    for (mono, t), c in f.terms:
        term = sympy.Rational(c.numerator, c.denominator)
        for y, e in zip(ys, mono):
            term *= y ** e
        comps[t] += term
    return comps


def sympy_bracket(v, w, ys):
    return [sympy.expand(sum(v[s] * sympy.diff(w[t], ys[s]) - w[s] * sympy.diff(v[t], ys[s])
                             for s in range(len(ys)))) for t in range(len(ys))]


keys3 = field_keys(3, 3)
field3 = st.dictionaries(st.sampled_from(keys3), st.fractions(min_value=-3, max_value=3, max_denominator=2),
                         max_size=5).map(lambda d: PolyField.from_dict(3, d))


@given(field3, field3)
def test_bracket_matches_sympy(f, g):
    ys = sympy.symbols("y0:3")
    got = to_sympy(poly_bracket(f, g), ys)
    want = sympy_bracket(to_sympy(f, ys), to_sympy(g, ys), ys)
    assert [sympy.expand(a - b) for a, b in zip(got, want)] == [0, 0, 0]


@given(field3, field3, field3)
def test_bracket_jacobi(f, g, h):
    total = (poly_bracket(f, poly_bracket(g, h)) + poly_bracket(g, poly_bracket(h, f))
             + poly_bracket(h, poly_bracket(f, g)))
    assert total.is_zero()


def test_constants_commute_and_euler_scales():
    c1 = PolyField.from_dict(2, {((0, 0), 0): Fraction(1)})
    c2 = PolyField.from_dict(2, {((0, 0), 1): Fraction(3)})
    assert poly_bracket(c1, c2).is_zero()
    euler = PolyField.from_dict(2, {((1, 0), 0): Fraction(1), ((0, 1), 1): Fraction(1)})
    f = PolyField.from_dict(2, {((2, 1), 0): Fraction(1), ((0, 3), 1): Fraction(-2)})
    assert poly_bracket(euler, f) == f.scale(2)


def test_bracket_degrees_add_minus_one():
    f = PolyField.from_dict(2, {((1, 1), 0): Fraction(1)})
    g = PolyField.from_dict(2, {((3, 0), 1): Fraction(1), ((1, 2), 0): Fraction(1)})
    b = poly_bracket(f, g)
    assert not b.is_zero()
    assert {sum(m) for (m, _), _ in b.terms} == {4}


def test_monomial_counts():
    assert [len(monomials(3, d)) for d in range(4)] == [1, 3, 6, 10]


@pytest.mark.parametrize("alg", ["sl:3", "sl:4", "so:5", "so:6", "sp:6"])
def test_lambda_certificate(alg):
    emb = emb_for(alg)
    assert homomorphism_residual(emb) == 0
    assert lambda_rank(emb) == emb.sc.dim
    assert max(img.degree for img in emb.images) <= 4
    assert max(emb.images[x].degree for x in emb.nm) <= 1
    assert lambda_E(emb) == expected_lambda_E(emb)
    assert set(ad_E_eigenvalues_on_nminus(emb)) <= {-2, -1}


def test_lambda_sl3_matches_sympy():
    emb = emb_for("sl:3")
    ys = sympy.symbols(f"y0:{emb.nvars}")
    fields = [to_sympy(img, ys) for img in emb.images]
    sc = emb.sc
    for i, j in combinations(range(sc.dim), 2):
        lhs = sympy_bracket(fields[i], fields[j], ys)
        rhs = [sympy.Integer(0)] * emb.nvars
        for k, c in sc.bracket(i, j).items():
            rhs = [a + sympy.Rational(c.numerator, c.denominator) * b for a, b in zip(rhs, fields[k])]
        assert [sympy.expand(a - b) for a, b in zip(lhs, rhs)] == [0] * emb.nvars


def test_lambda_sl3_on_g_minus_one_is_bch_truncation():
    emb = emb_for("sl:3")
    g1m = emb.gs.slices[-1]
    for x in g1m:
        img = emb.images[x]
        assert img.degree == 1
        const = {k: v for k, v in img.terms if sum(k[0]) == 0}
        col = emb.nm.index(x)
        assert const == {((0,) * emb.nvars, col): Fraction(-1)}


@pytest.mark.parametrize("alg", ["sl:3", "sl:4", "so:5", "so:6", "sp:6"])
def test_centralizer(alg):
    emb = emb_for(alg)
    c = centralizer_of_lambda_nminus(emb)
    assert c.dim == len(emb.nm)
    assert c.closed
    assert all(w < 0 for w in c.weights)
    assert c.derived_dim == len(emb.gs.slices[-2])


def test_sl3_centralizer_weights():
    c = centralizer_of_lambda_nminus(emb_for("sl:3"))
    assert sorted(c.weights) == [-2, -1, -1]


def test_jet_dimensions_and_eigenvalues():
    emb = emb_for("sl:3")
    jet, mod = jet_module(emb, 3)
    assert jet.dim == 3 * 3 + 6 * 3 + 10 * 3
    assert jet_E_eigenvalues(emb, jet) == list(range(-1, 6))
    assert mod.representation_defect() == 0
    jet, _ = jet_module(emb_for("so:6"), 3)
    assert jet_E_eigenvalues(emb_for("so:6"), jet) == [0, 1, 2]


def test_jet_action_is_nilpotent():
    emb = emb_for("sl:3")
    _, mod = jet_module(emb, 3)
    m = len(mod.acting)
    for v in range(mod.dim):
        frontier = [{v: Fraction(1)}]
        for _ in range(7):
            frontier = [img for vec in frontier for x in range(m) if (img := mod.act(x, vec))]
        assert not frontier


def test_jet_order_bounds():
    with pytest.raises(InvalidInput):
        jet_module(emb_for("sl:3"), 5)


@pytest.mark.parametrize("alg,dim", [("sl:4", 5), ("sl:5", 10)])
def test_normalizer_equals_lambda_g0(alg, dim):
    rep = verify_normalizer(emb_for(alg))
    assert rep.passed
    assert rep.solution_dim == rep.g0_dim == dim


def test_f4_gate(monkeypatch):
    monkeypatch.delenv("RANKONE_ENABLE_F4_LAMBDA", raising=False)
    assert not f4_lambda_enabled()
    assert f4_lambda_enabled(True)
    monkeypatch.setenv("RANKONE_ENABLE_F4_LAMBDA", "1")
    assert f4_lambda_enabled()
