"""Tests for the verification suites behind the CLI."""

from closurelab.suites import (
    FIXTURE_FAILURE,
    KURATOWSKI_WORDS,
    SUITES,
    _fixed_chunks,
    _pmap,
    suite_example3,
    suite_fixtures,
    suite_interior,
    suite_kuratowski14,
    suite_lemma6,
    suite_pq_closure,
    suite_remark_involution,
    suite_section4,
    suite_theorem1,
    suite_theorem2,
)


def test_suite_registry():
    assert sorted(SUITES) == [
        "example3", "fixtures", "interior", "kuratowski14", "lemma6",
        "pq-closure", "remark-involution", "section4", "theorem1",
        "theorem2",
    ]


def test_fixed_chunks_cover_range():
    assert _fixed_chunks(0) == []
    for count in (1, 5, 31, 32, 33, 100, 1000):
        chunks = _fixed_chunks(count)
        assert len(chunks) <= 32
        covered = [i for lo, hi in chunks for i in range(lo, hi)]
        assert covered == list(range(count))
    # the grid depends on the count only
    assert _fixed_chunks(100) == _fixed_chunks(100)


def test_pmap_is_order_preserving():
    items = list(range(-20, 20))
    serial = _pmap(abs, items, workers=1)
    parallel = _pmap(abs, items, workers=2)
    assert serial == parallel == [abs(x) for x in items]


def test_theorem1_suite():
    rep = suite_theorem1(2)
    assert rep.passed
    assert rep.lines[0] == "verify theorem1"
    assert "closures: 7" in rep.lines
    assert "49 pairs checked" in rep.lines
    assert "failures: 0" in rep.lines
    assert rep.lines[-1] == "PASS"
    assert rep.data["pairs_checked"] == 49
    assert rep.data["failures"] == []
    assert rep.data["passed"] is True


def test_theorem1_suite_parallel_identical():
    assert suite_theorem1(2, workers=1).lines == suite_theorem1(2, workers=2).lines


def test_kuratowski_suite():
    rep = suite_kuratowski14(3)
    assert rep.passed
    assert "61 closures, max monoid 10" in rep.lines
    assert "monoids over 14: 0" in rep.lines
    assert "hammer kckckck = kck failures: 0" in rep.lines
    assert "witness ground size: 6" in rep.lines
    assert "witness monoid size: 14" in rep.lines
    assert "witness words match canonical list: yes" in rep.lines
    assert "witness seed {1,4} distinct images: 14" in rep.lines
    assert rep.data["witness"]["words"] == list(KURATOWSKI_WORDS)


def test_theorem2_suite_small():
    rep = suite_theorem2(n=2, samples=2)
    assert rep.passed
    parts = rep.data["parts"]
    assert [p["n_blocks"] for p in parts] == [1, 2, 3, 3]
    assert [p["equations"] for p in parts] == [9, 81, 729, 729]
    assert all(p["held"] == p["equations"] for p in parts)
    assert parts[0]["pairs"] == 46
    assert "failures: 0" in rep.lines
    assert any("sampled(n=4,count=2" in ln for ln in rep.lines)
    assert any("sampled(n=5,count=2" in ln for ln in rep.lines)


def test_fixtures_suite():
    rep = suite_fixtures(2)
    assert rep.passed
    held = [ln for ln in rep.lines if "no counterexample found" in ln]
    assert len(held) == 6
    demo = [ln for ln in rep.lines if ln.startswith("noncommuting demonstration")]
    assert len(demo) == 1
    idx, size, pi, qi, witness = FIXTURE_FAILURE
    assert f"n={size} p#{pi} q#{qi}" in demo[0]
    assert rep.data["noncommuting_failure"]["commutes"] is False


def test_section4_suite():
    rep = suite_section4(2)
    assert rep.passed
    assert "p closure axioms: PASS" in rep.lines
    assert "flag preservation: PASS" in rep.lines
    assert any(ln.startswith("sandwich p00") for ln in rep.lines)
    assert "distinct images: 2" in rep.lines
    assert "growth pattern 4/8/16: PASS" in rep.lines
    assert rep.data["growth"] == [(4, 4), (8, 8), (16, 16)]
    assert rep.data["orbit"]["images"][0] == "{0,top}"


def test_example3_suite():
    rep = suite_example3(10)
    assert rep.passed
    assert any("literal p monotonicity fails at M=10" in ln for ln in rep.lines)
    assert rep.data["literal_witness"] == [[1], [1, 3]]
    assert rep.data["pq_vs_qp"] == [[0, 1, 2], [0, 1]]
    assert rep.data["monoid_sizes"] == [(8, 17), (16, 33), (32, 65)]
    assert rep.data["orbit_growth"] == [(8, 5), (16, 9), (32, 17)]


def test_lemma6_suite():
    rep = suite_lemma6()
    assert rep.passed
    assert len(rep.data["checks"]) == 16
    assert all(row["ok"] for row in rep.data["checks"])


def test_interior_and_product_suites():
    rep_i = suite_interior(2)
    assert rep_i.passed
    assert rep_i.data["counts"] == [(0, 1, 0), (1, 2, 0), (2, 7, 0)]
    rep_p = suite_pq_closure(2)
    assert rep_p.passed
    assert rep_p.data["counts"] == [(0, 1, 0), (1, 4, 0), (2, 41, 0)]


def test_remark_involution_suite():
    rep = suite_remark_involution(2)
    assert rep.passed
    assert rep.data["pairs"] == 49
    assert rep.data["involutive"] == 2
    assert rep.data["failures"] == []
    assert "failures: 0" in rep.lines


def test_every_suite_ends_with_a_verdict_line():
    quick = {
        "theorem1": lambda: suite_theorem1(2),
        "kuratowski14": lambda: suite_kuratowski14(2),
        "theorem2": lambda: suite_theorem2(n=1, samples=1),
        "fixtures": lambda: suite_fixtures(2),
        "section4": lambda: suite_section4(2),
        "example3": lambda: suite_example3(6),
        "lemma6": lambda: suite_lemma6(),
        "interior": lambda: suite_interior(2),
        "pq-closure": lambda: suite_pq_closure(2),
        "remark-involution": lambda: suite_remark_involution(2),
    }
    assert sorted(quick) == sorted(SUITES)
    for name, run in quick.items():
        rep = run()
        assert rep.name == name
        assert rep.lines[-1] in ("PASS", "FAIL")
        assert rep.passed, name
        assert rep.data["passed"] is True
