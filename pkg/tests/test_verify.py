import pytest

from heckez import verify


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_all_suites_pass_small(n):
    report = verify.run(n)
    assert report.ok, report.lines()
    assert all(r.counterexample is None for r in report.results)


def test_size_bounds_reported_as_skips():
    report = verify.run(5, "tau")
    assert report.results == []
    assert report.skipped == [("tau", 5)]


def test_unknown_selector():
    with pytest.raises(KeyError):
        verify.run(2, "nope")


def test_failure_payload(monkeypatch):
    monkeypatch.setitem(verify.SUITES, "broken",
                        verify.Suite(lambda n: [("x", "bad value")]))
    r = verify.run_one("broken", 2)
    assert not r.passed
    assert "bad value" in r.counterexample
    assert r.line().startswith("FAIL broken n=2")
