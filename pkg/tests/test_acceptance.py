"""End-to-end acceptance criteria, one test per criterion.

Each test prints a ``PASS criterion N: ...`` or ``FAIL criterion N: ...``
line; the lines are repeated in the pytest terminal summary.  Values are
compared exactly.
"""
import json

import pytest

from rankone.suites import DEFAULT_ALGEBRAS, SUITES, load_golden, report, run_suites, strip_timing

RESULTS: dict = {}


def record(n: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
    RESULTS[n] = line
    print(line)


@pytest.fixture(scope="module")
def suite_doc():
    return run_suites(list(SUITES), jobs=1)


def rows(doc, check, algebras):
    found = {r["algebra"]: r for r in doc["checks"] if r["check"] == check}
    return [found[a] for a in algebras]


def elapsed(doc, suite, algebras) -> float:
    return sum(float(doc["timing"][f"{suite}|{a}"]) for a in algebras)


def test_criterion_1_h1_highest_weights(suite_doc):
    algs = ["so:4", "so:5", "so:6", "so:7", "so:8", "sl:3", "sl:4", "sl:5", "sl:6", "sp:6", "sp:8", "sp:10", "f4"]
    rs = rows(suite_doc, "kostant.h1_adjoint", algs)
    bad = [r["algebra"] for r in rs if r["status"] != "pass"]
    t = elapsed(suite_doc, "kostant", algs)
    ok = not bad and t < 120
    record(1, ok, f"H^1(n,g)^a highest weights over {len(algs)} algebras, mismatches {bad}, {t:.1f}s")
    assert ok


def test_criterion_2_non_lowest_scan(suite_doc):
    algs = ["sl:3", "sl:4", "sl:5", "sp:6", "sp:8", "f4"]
    rs = rows(suite_doc, "kostant.non_lowest_scan", algs)
    counter = {r["algebra"]: r["computed"] for r in rs}
    ok = all(v == "0" for v in counter.values()) and elapsed(suite_doc, "kostant", algs) < 120
    record(2, ok, f"counterexamples per algebra {counter}")
    assert ok


def test_criterion_3_lowest_scan_table(suite_doc):
    algs = ["so:4", "so:5", "so:6", "so:7", "sl:3", "sl:4", "sl:5", "sp:6", "sp:8", "sp:10", "f4"]
    golden = load_golden("lowest_weight_scan.json")
    assert set(algs) <= set(golden)
    rs = rows(suite_doc, "kostant.lowest_scan", algs)
    diffs = {r["algebra"]: {"tabulated": r["expected"], "computed": r["computed"]}
             for r in rs if r["status"] != "pass"}
    ok = not diffs
    record(3, ok, "qualifying weights match the tabulated five cases" if ok
           else f"mismatches {json.dumps(diffs, sort_keys=True)}")
    assert ok, diffs


def test_criterion_4_kostant_vs_ce(suite_doc):
    algs = ["sl:3", "sl:4", "so:5", "so:6", "sp:6", "f4"]
    rs = rows(suite_doc, "ce.cross_check", algs)
    dims = {r["algebra"]: (r["expected"], r["computed"]) for r in rs}
    ok = all(r["status"] == "pass" for r in rs) and elapsed(suite_doc, "ce", algs) < 300
    record(4, ok, f"(Kostant, CE) dims {dims}")
    assert ok


def test_criterion_5_jet_isomorphism(suite_doc):
    algs = ["sl:3", "so:6", "sp:6"]
    rs = rows(suite_doc, "jets.h1_isomorphism", algs)
    h1g = {r["algebra"]: r["details"]["h1_g"] for r in rs}
    literal = h1g["sl:3"] == "2" and h1g["sp:6"] == "0"
    computed = {r["algebra"]: r["computed"] for r in rs}
    ok = literal and all(r["status"] == "pass" for r in rs) and elapsed(suite_doc, "jets", algs) < 600
    record(5, ok, f"jet cohomology {json.dumps(computed, sort_keys=True)}")
    assert ok, computed


def test_criterion_6_lambda_certificate(suite_doc):
    algs = ["sl:3", "sl:4", "so:5", "so:6", "sp:6"]
    cert = rows(suite_doc, "lambda.certificate", algs)
    cent = rows(suite_doc, "lambda.centralizer", algs)
    bad = [(r["check"], r["algebra"]) for r in cert + cent if r["status"] != "pass"]
    ok = not bad and elapsed(suite_doc, "lambda", algs) < 300
    record(6, ok, f"certificates and centralizers for {algs}, failures {bad}")
    assert ok


def test_criterion_7_normalizer(suite_doc):
    algs = ["sl:4", "sl:5"]
    rs = rows(suite_doc, "lambda.normalizer", algs)
    dims = {r["algebra"]: r["computed"] for r in rs}
    ok = all(r["status"] == "pass" for r in rs)
    record(7, ok, f"normalizer equals lambda(g_0): {json.dumps(dims, sort_keys=True)}")
    assert ok


def test_criterion_8_fox(suite_doc):
    algs = ["so:6", "sl:3"]
    gp = rows(suite_doc, "gamma.g_mod_p", algs)
    scan = rows(suite_doc, "gamma.scalar_scan", algs)
    ok = all(r["status"] == "pass" for r in gp + scan) and elapsed(suite_doc, "gamma", algs) < 60
    exceptional = {r["algebra"]: {s: r["computed"][s] for s in ("1", "2", "4")} for r in scan}
    record(8, ok, f"H^1(Gamma, g/p) {[r['computed'] for r in gp]}, reported at s in 1,2,4: "
                  f"{json.dumps(exceptional, sort_keys=True)}")
    assert ok


def test_criterion_9_verdicts():
    doc = report()
    verdicts = {r["algebra"]: r["verdict"] for r in doc["rows"]}
    expected = {a: ("rigid" if a.startswith("sp") or a == "f4" else "non_rigid") for a in verdicts}
    ok = verdicts == expected and all(r["consistent"] == "True" for r in doc["rows"])
    rigid = sorted(a for a, v in verdicts.items() if v == "rigid")
    record(9, ok, f"rigid exactly {rigid}")
    assert ok


def test_criterion_10_codimension(suite_doc):
    sl4, sp6 = rows(suite_doc, "ce.codimension", ["sl:4", "sp:6"])
    stated, = rows(suite_doc, "ce.codimension_stated", ["sl:4"])
    ok = sl4["status"] == "pass" and sp6["status"] == "pass" and sp6["computed"] == "0"
    note = ""
    if stated["status"] == "warn":
        note = f"; WARNING stated sl:4 value {stated['expected']} but codim = H^1 = {stated['computed']}"
    record(10, ok, f"codim = H^1 for sl:4 ({sl4['computed']} = {sl4['expected']}), sp:6 codim {sp6['computed']}"
                   + note)
    assert ok


def test_criterion_11_determinism(suite_doc):
    parallel = run_suites(list(SUITES), jobs=2)
    a = json.dumps(strip_timing(suite_doc), sort_keys=True)
    b = json.dumps(strip_timing(parallel), sort_keys=True)
    ok = a == b and set(DEFAULT_ALGEBRAS) == set(SUITES)
    record(11, ok, f"1-job and 2-job documents identical ({len(a)} bytes)")
    assert ok
