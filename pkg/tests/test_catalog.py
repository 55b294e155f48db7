import pytest

from rankone.catalog import a_star, build, build_catalog, grade_of, l_lowest_weights_of_n_minus, parse_algebra_id
from rankone.roots import InvalidInput, Weight


def W(text, alg):
    d = build(alg)
    return d.root_system.normalize(Weight.parse(text, d.dim))


@pytest.mark.parametrize("alg,roots,n,l", [
    ("so:4", 4, 2, 0), ("so:5", 8, 3, 2), ("so:7", 18, 5, 8), ("sl:3", 6, 3, 0), ("sl:5", 20, 7, 6),
    ("sp:6", 18, 7, 4), ("sp:10", 50, 15, 20), ("f4", 48, 15, 18),
])
def test_root_counts(alg, roots, n, l):
    d = build(alg)
    assert len(d.root_system.roots) == roots
    assert len(d.delta_n) == n
    assert len(d.delta_l) == l


def test_sl3_nilradical():
    d = build("sl:3")
    assert set(d.delta_n) == {W("e1-e2", "sl:3"), W("e1-e3", "sl:3"), W("e2-e3", "sl:3")}
    assert d.delta_l == []


def test_sp6_levi_contains_e1_minus_e2():
    d = build("sp:6")
    assert W("e1-e2", "sp:6") in d.delta_l and W("-e1+e2", "sp:6") in d.delta_l


@pytest.mark.parametrize("alg,expected", [("so:7", "e1"), ("sp:8", "e1+e2"), ("sl:4", "e1-e4"), ("f4", "e1")])
def test_a_star(alg, expected):
    assert a_star(build(alg)) == W(expected, alg)


def test_grades():
    sp = build("sp:8")
    assert grade_of(sp, W("e1+e2", "sp:8")) == 2
    assert grade_of(sp, W("e1-e3", "sp:8")) == 1
    sl = build("sl:5")
    assert grade_of(sl, W("e1-e5", "sl:5")) == 2
    assert sum(1 for a in sl.delta_n if sl.grade[a] == 2) == 1
    so = build("so:7")
    assert set(so.grade.values()) == {1}
    f4 = build("f4")
    assert [sum(1 for a in f4.delta_n if f4.grade[a] == g) for g in (1, 2)] == [8, 7]
    with pytest.raises(InvalidInput):
        grade_of(so, W("e2-e3", "so:7"))


@pytest.mark.parametrize("alg,g_lowest,other", [
    ("sl:5", ["-e1+e5"], ["-e1+e4", "-e2+e5"]),
    ("sp:8", ["-2e1"], ["-e1-e3"]),
    ("f4", ["-2e1-2e2"], ["-e1-e2-e3-e4"]),
    ("so:7", ["-e1-e2"], []),
])
def test_l_lowest_weights(alg, g_lowest, other):
    low = l_lowest_weights_of_n_minus(build(alg))
    assert sorted(low["g_lowest"]) == sorted(W(t, alg) for t in g_lowest)
    assert sorted(low["other"]) == sorted(W(t, alg) for t in other)


def test_so4_has_two_lowest_weights():
    low = l_lowest_weights_of_n_minus(build("so:4"))
    assert sorted(low["g_lowest"]) == sorted([W("-e1-e2", "so:4"), W("-e1+e2", "so:4")])


@pytest.mark.parametrize("bad", ["so:3", "sl:2", "sp:4", "sp:7", "g2", "so", "so:x", "e8:1"])
def test_invalid_ids(bad):
    with pytest.raises(InvalidInput):
        build(bad)


def test_build_catalog_forms():
    assert build_catalog("sl", 4) is build("sl:4")
    assert parse_algebra_id("f4") == ("f4", 4)
    assert build("so:5").real_form == "SO0(4,1)"
    assert build("sp:8").real_form == "Sp(3,1)"
    assert build("f4").real_form == "F4^{-20}"
