import pytest

from pmlv.verify import SUITES, run_suite, s3_3_discrepancy


def test_exact_suite_passes():
    results = run_suite("exact", max_k=3)
    assert results and all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_lemma_suite_passes_in_parallel():
    serial = run_suite("lemma", max_k=2)
    parallel = run_suite("lemma", max_k=2, jobs=2)
    assert [r.name for r in serial] == [r.name for r in parallel]
    assert all(r.passed for r in parallel)


def test_discrepancy_record():
    r = s3_3_discrepancy()
    assert r.passed
    assert "93/128" in r.name and "93/256" in r.name
    assert r.gap > 0.1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
    assert set(SUITES) == {"exact", "numeric", "lemma"}
