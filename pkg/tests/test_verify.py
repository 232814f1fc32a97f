import pytest

from permfact import oracle, verify


@pytest.mark.parametrize("scope", verify.SCOPES)
def test_scopes_pass(scope):
    out = verify.verify_suite(scope, 6)
    assert out["ok"], [c for c in out["checks"] if not c["ok"]]
    assert all(c["count"] > 0 for c in out["checks"])
    assert all(e["scope"] == scope for e in out["errata"])


def test_bad_scope_and_bound():
    with pytest.raises(ValueError):
        verify.verify_suite("nothing", 4)
    with pytest.raises(oracle.OracleBoundError):
        verify.verify_suite("nu", oracle.DEFAULT_MAX_N + 1)


def test_errata_confirmed():
    report = verify.erratum_report()
    ids = [e["id"] for e in report]
    assert len(ids) == len(set(ids))
    assert all(e["confirmed"] for e in report)
    assert {e["kind"] for e in report} <= {"erratum", "finding", "convention"}


def test_check_records_failures():
    c = verify.Check("x", "y")
    assert c.agree({"n": 1}, a=1, b=1)
    assert not c.agree({"n": 2}, a=1, b=2)
    assert not c.holds({"n": 3}, False, why="no")
    js = c.to_json()
    assert js["count"] == 3 and not js["ok"] and len(js["failures"]) == 2
