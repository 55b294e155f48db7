from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rankone.catalog import build
from rankone.chevalley import (ad_action_module, ad_E_on, ad_g0_image_rank, build_chevalley, center_of_n,
                               check_grading, derivations, setup, two_step)
from rankone.roots import InvalidInput


@pytest.mark.parametrize("alg,dim", [("sl:3", 8), ("so:5", 10), ("so:6", 15), ("sp:6", 21), ("f4", 52)])
def test_dimensions(alg, dim):
    sc, _ = setup(build(alg))
    assert sc.dim == dim


@pytest.mark.parametrize("alg", ["sl:3", "sl:4", "so:5", "so:6", "so:7", "sp:6", "f4"])
def test_jacobi_identity(alg):
    sc, _ = setup(build(alg))
    assert sc.jacobi_residual() == 0


@pytest.mark.parametrize("alg", ["sl:4", "so:7", "sp:6", "f4"])
def test_root_vector_constants_are_string_lengths(alg):
    sc, _ = setup(build(alg))
    rs = sc.root_system
    for i, a in enumerate(sc.roots):
        for j, b in enumerate(sc.roots):
            if a is None or b is None or i >= j or not rs.is_root(a + b):
                continue
            p = 0
            while rs.is_root(b - (p + 1) * a):
                p += 1
            (k, v), = sc.bracket(i, j).items()
            assert sc.roots[k] == a + b
            assert abs(v) == p + 1


@given(st.data())
def test_jacobi_on_random_vectors(data):
    sc, _ = setup(build("f4"))
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    vecs = [data.draw(st.dictionaries(st.integers(0, sc.dim - 1), coef, max_size=4)) for _ in range(3)]
    x, y, z = vecs
    acc = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for k, v in sc.bracket_vec(a, sc.bracket_vec(b, c)).items():
            acc[k] = acc.get(k, 0) + v
    assert not any(acc.values())


@pytest.mark.parametrize("alg,dims", [
    ("sl:3", (1, 2, 2, 2, 1)), ("sl:4", (1, 4, 5, 4, 1)), ("so:6", (0, 4, 7, 4, 0)),
    ("sp:6", (3, 4, 7, 4, 3)), ("f4", (7, 8, 22, 8, 7)),
])
def test_graded_dimensions(alg, dims):
    sc, gs = setup(build(alg))
    assert gs.dims() == dims
    assert check_grading(sc, gs)
    assert two_step(sc, gs)


def test_center_of_n_is_g2():
    for alg in ("sl:4", "sp:6", "f4"):
        sc, gs = setup(build(alg))
        assert len(center_of_n(sc, gs)) == len(gs.slices[2])
    sc, gs = setup(build("so:6"))
    assert len(center_of_n(sc, gs)) == len(gs.n)


@pytest.mark.parametrize("alg,full,inv", [("so:5", 9, 9), ("so:6", 16, 16), ("sl:3", 6, 4)])
def test_derivation_counts(alg, full, inv):
    sc, gs = setup(build(alg))
    der = derivations(sc, gs)
    assert der.dim == full
    assert der.invariant_dim == inv


def test_grading_derivation_is_a_derivation():
    sc, gs = setup(build("sp:6"))
    n = gs.n
    euler = {(i, i): Fraction(gs.weight[i]) for i in n}
    der = derivations(sc, gs)
    rows = [[d.get((r, s), 0) for r in n for s in n] for d in der.invariant_basis]
    target = [euler.get((r, s), 0) for r in n for s in n]
    from rankone.linalg import rank
    assert rank(rows) == rank(rows + [target])


def test_ad_g0_is_injective():
    for alg in ("sl:4", "sp:6", "f4"):
        sc, gs = setup(build(alg))
        assert ad_g0_image_rank(sc, gs) == len(gs.g0)


def test_g_mod_p_module():
    sc, gs = setup(build("sp:6"))
    m = ad_action_module(sc, gs, "g/p")
    assert m.representation_defect() == 0
    assert sorted(m.weights) == [-2] * 3 + [-1] * 4
    assert sorted(ad_E_on(sc, gs, gs.n_minus)) == [-2] * 3 + [-1] * 4
    assert ad_E_on(sc, gs, gs.slices[2]) == [2] * 3
    # n acts nilpotently: any three actions compose to zero
    for x in range(len(m.acting)):
        for y in range(len(m.acting)):
            for z in range(len(m.acting)):
                for v in range(m.dim):
                    assert not m.act(x, m.act(y, m.act(z, {v: 1})))


def test_unknown_module_spec():
    sc, gs = setup(build("sl:3"))
    with pytest.raises(InvalidInput):
        ad_action_module(sc, gs, "n")


def test_build_chevalley_directly():
    sc = build_chevalley(build("so:5").root_system)
    assert sc.dim == 10 and sc.jacobi_residual() == 0
