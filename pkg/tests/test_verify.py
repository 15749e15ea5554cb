import pytest

from topsep.errors import BoundExceeded
from topsep.verify import SUITES, catalog_entries, family_entries, run_suite, verify_paper


def test_suites_at_three_points():
    report = verify_paper(3)
    assert report.ok, [e for e in report.entries if not e.passed]
    names = [e.theorem for e in report.entries]
    assert names[: len(SUITES)] == [n for n, _ in SUITES]
    assert all(e.checked > 0 for e in report.entries)


def test_jobs_do_not_change_the_report():
    a = verify_paper(3, jobs=1)
    b = verify_paper(3, jobs=2)
    assert [e.to_json() for e in a.entries] == [e.to_json() for e in b.entries]


def test_bound():
    with pytest.raises(BoundExceeded):
        verify_paper(6)


def test_seeded_catalog_entries_are_reproducible():
    assert [e.to_json() for e in catalog_entries(5)] == [e.to_json() for e in catalog_entries(5)]


def test_family_entries_shape():
    import random

    entries = family_entries("cofinite-line", random.Random(0), samples=10, axiom_samples=10)
    assert entries[-1].theorem == "catalog-closure-axioms:cofinite-line"
    assert all(e.passed for e in entries)


def test_single_suite_scope():
    e = run_suite("tkx-equivalences", 2)
    assert e.passed and e.scope == "n<=2" and e.checked == 7 * 6
