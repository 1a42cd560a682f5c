import pytest

from knee_mcdm.bench import METHODS, run_bench


@pytest.fixture(scope="module")
def report():
    return run_bench(scale=0.1)


def test_report_structure(report):
    categories = [row.category for row in report.rows]
    assert categories.count("C1") == 3
    assert categories.count("C2") == 4
    assert categories.count("C3") == 6
    assert [r.m for r in report.rows if r.category == "C2"] == [25, 50, 100, 200]
    for row in report.rows:
        assert set(row.total) == set(METHODS)
        assert all(v > 0 for v in row.total.values())


def test_c1_means_stable_across_rep_counts(report):
    # growing the repetition count keeps the per-run mean in the same
    # order of magnitude
    c1 = [r for r in report.rows if r.category == "C1"]
    for method in METHODS:
        means = [r.mean[method] for r in c1]
        assert max(means) <= 10.0 * min(means), (method, means)


def test_report_rendering(report):
    text = report.to_text()
    assert "dnc slower than mmd/ws" in text
    assert "C2" in text
    csv = report.to_csv()
    lines = csv.strip().splitlines()
    assert lines[0].startswith("category,case,m,n,reps")
    assert len(lines) == len(report.rows) + 1


def test_scale_must_be_positive():
    with pytest.raises(ValueError):
        run_bench(scale=0.0)
