from monotri.verify import Report, run_suite, suite_conjecture


def test_exit_code_contract():
    rep = Report("x")
    rep.check("ok", 1, 1)
    rep.note("info", 1, 2)
    assert rep.exit_code == 0
    rep.check("bad", 1, 2)
    assert rep.exit_code == 1
    assert rep.counts() == {"pass": 1, "fail": 1, "report-only": 1}
    assert "[fail] bad" in rep.to_text()


def test_conjecture_suite_is_report_only():
    rep = suite_conjecture()
    assert rep.cases and all(c.status == "report-only" for c in rep.cases)


def test_fast_suites_pass():
    for name in ("ring", "operators", "asm", "p"):
        assert run_suite(name).exit_code == 0, name
