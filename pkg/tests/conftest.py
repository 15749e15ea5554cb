from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from topsep.core import FinSpace, from_preorder
from topsep.enumeration import enumerate_topologies

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def spaces_up_to(n: int) -> tuple[FinSpace, ...]:
    return tuple(s for k in range(n + 1) for s in enumerate_topologies(k))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@st.composite
def finite_spaces(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))), max_size=8))
    if n == 0:
        pairs = []
    return from_preorder(n, pairs)


@st.composite
def space_and_set(draw, max_n=5):
    s = draw(finite_spaces(max_n=max_n))
    a = draw(st.integers(0, s.full))
    return s, a


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, title, detail = results[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title} ({detail})")
