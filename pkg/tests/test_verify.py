import pytest

from b2kl.verify import DEFAULT_DEPTH, SUITES, failures, run_suite, summarize


def test_default_depths():
    assert DEFAULT_DEPTH["big"] == 20 and DEFAULT_DEPTH["thick"] == 24
    assert DEFAULT_DEPTH["thin"] == 12 and DEFAULT_DEPTH["intervals"] == 24
    assert set(DEFAULT_DEPTH) == set(SUITES)


@pytest.mark.parametrize("suite", ["big", "thick", "mult-lemmas"])
def test_formula_suites_pass_at_reduced_depth(suite):
    recs = run_suite(suite, 16)
    assert recs
    assert failures(recs) == []


def test_record_shape():
    for r in run_suite("coatoms", 12):
        assert set(r) == {"identity", "params", "status", "first_diff"}
        assert r["status"] in ("ok", "fail")
        assert (r["first_diff"] is None) == (r["status"] == "ok")


def test_corrected_tables_pass():
    assert failures(run_suite("intervals", 24, corrected=True)) == []
    assert failures(run_suite("coatoms", 24, corrected=True)) == []


def test_published_size_table_failures_are_confined():
    bad = {r["identity"] for r in failures(run_suite("intervals", 24))}
    assert bad == {
        "interval_size_theta[s2s0|1]", "interval_size_theta[s1s2s0|1]",
        "interval_size_theta[s2s0|t]", "interval_size_theta[s1s2s0|t]",
        "interval_size_theta[s0|ts2]", "interval_size_theta[s2s0|ts2]",
        "interval_size_theta[s1s2s0|ts2]",
    }


def test_published_coatom_failures_are_confined():
    bad = {r["identity"] for r in failures(run_suite("coatoms", 24))}
    assert bad == {"coatoms_x", "coatoms_xbar"}


def test_summarize():
    recs = [{"identity": "a", "status": "ok"}, {"identity": "a", "status": "fail"}, {"identity": "b", "status": "ok"}]
    assert summarize(recs) == {"a": {"ok": 1, "fail": 1}, "b": {"ok": 1, "fail": 0}}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything")
    with pytest.raises(ValueError):
        run_suite("big", 0)
