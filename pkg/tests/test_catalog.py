import random

import pytest
from hypothesis import given, strategies as st

from topsep.catalog import (
    FAMILY_NAMES,
    NATURALS,
    REALS,
    DescribedSet,
    DescribedSpace,
    Verdict,
    check_family,
    characterization_sweep,
    closure_axiom_sweep,
    cofin,
    d_apply,
    d_classify,
    d_classify_all,
    d_closure,
    d_delta_closure,
    d_interior,
    d_is_closed,
    d_is_compact,
    d_is_lambda_closed,
    d_is_open,
    d_regular_opens,
    fin,
    random_set,
    region_set,
    truncation,
)
from topsep.classify import classify
from topsep.errors import Unsupported
from topsep.verify import DIAGRAM_EDGES

IPC = DescribedSpace("included-point-cofinite")
PC = DescribedSpace("point-cocountable")
CL = DescribedSpace("cocountable-line")
CF = DescribedSpace("cofinite-line")


def described_sets(universe):
    return st.integers(0, 2**32).map(lambda seed: random_set(universe, random.Random(seed)))


@given(described_sets(REALS), described_sets(REALS))
def test_set_algebra_laws(a, b):
    assert ~~a == a
    assert ~(a | b) == ~a & ~b
    assert ~(a & b) == ~a | ~b
    assert a - b == a & ~b
    assert (a & b) <= a <= (a | b)


@given(described_sets(NATURALS))
def test_shapes_complement(a):
    assert a.is_finite == (~a).is_cofinite
    assert a.shape in ("FIN", "COFIN", "CTBL", "COCTBL")


def test_shapes():
    assert fin(REALS, [1, -2]).shape == "FIN"
    assert cofin(REALS, [3]).shape == "COFIN"
    assert region_set(REALS, ["even"]).shape == "CTBL"
    assert region_set(REALS, ["even", "rest"]).shape == "COCTBL"
    assert region_set(NATURALS, ["odd"]).shape == "CTBL"
    assert 4 in region_set(REALS, ["even"]) and 4 not in region_set(REALS, ["even"], minus=[4])
    assert str(fin(NATURALS, [3, 1])) == "FIN{1,3}"


def test_bad_sets():
    with pytest.raises(ValueError):
        fin(NATURALS, [-1])
    with pytest.raises(ValueError):
        DescribedSet(NATURALS, frozenset({"rest"}))
    with pytest.raises(ValueError):
        DescribedSpace("sorgenfrey-line")
    with pytest.raises(ValueError):
        DescribedSpace("included-point-cofinite", 3)


def test_closures():
    assert d_closure(IPC, fin(NATURALS, [3])) == fin(NATURALS, [3])
    assert d_closure(IPC, fin(NATURALS, [0])) == IPC.whole
    for s in map(DescribedSpace, FAMILY_NAMES):
        assert d_closure(s, s.whole) == s.whole
        assert d_closure(s, s.empty) == s.empty
    ctbl = region_set(REALS, ["odd"], plus=[-3])
    assert d_closure(CL, ctbl) == ctbl
    assert d_closure(CL, region_set(REALS, ["odd", "rest"], minus=[-1])) == CL.whole
    assert d_interior(CF, fin(REALS, [1])) == CF.empty


def test_open_and_closed():
    assert d_is_open(IPC, cofin(NATURALS, [5]))
    assert not d_is_open(IPC, cofin(NATURALS, [0]))
    assert d_is_closed(PC, fin(REALS, [4]))
    assert not d_is_closed(PC, fin(REALS, [0]))
    assert not d_is_open(PC, fin(REALS, [0]))


def test_compactness():
    evens = region_set(REALS, ["even"])
    assert d_is_compact(IPC, region_set(NATURALS, ["even"]))
    assert d_is_compact(CF, evens)
    assert not d_is_compact(PC, evens)
    assert not d_is_compact(CL, evens)
    for s in map(DescribedSpace, FAMILY_NAMES):
        assert d_is_compact(s, fin(s.universe, [1, 2]))


def test_lambda_closed_rule_table():
    assert d_is_lambda_closed(IPC, fin(NATURALS, [0, 5]))
    assert not d_is_lambda_closed(IPC, region_set(NATURALS, ["even"], minus=[0]))
    assert d_is_lambda_closed(PC, region_set(REALS, ["odd"]))
    assert not d_is_lambda_closed(PC, region_set(REALS, ["rest"]))


def test_regular_opens_trivial():
    for s in map(DescribedSpace, FAMILY_NAMES):
        assert d_regular_opens(s) == (s.empty, s.whole)
        assert d_delta_closure(s, s.singleton(1)) == s.whole


def test_operators_by_name():
    for op in ("c", "delta", "theta", "lambda", "zero", "urysohn", "quasi"):
        assert d_apply(CL, op, CL.empty) == CL.empty
    assert d_apply(CL, "lambda", fin(REALS, [2])) == fin(REALS, [2])
    with pytest.raises(ValueError):
        d_apply(CL, "bogus", CL.empty)


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_family_examples(name):
    lines = check_family(name)
    assert lines and all(line.ok for line in lines), [(l.label, l.expected, l.got) for l in lines if not l.ok]


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_diagram_edges_on_catalog(name):
    v = d_classify_all(DescribedSpace(name))
    for p, q in DIAGRAM_EDGES:
        assert not v[p].value or v[q].value, (p, q)


def test_documented_verdicts_are_labelled():
    v = d_classify(CL, "US")
    assert v.kind == "documented" and v.value is True and v.note
    assert d_classify(CL, "kc").kind == "computed"


def test_unsupported_verdict_refuses():
    with pytest.raises(Unsupported):
        Verdict("hTR1", None, "unsupported", "no rule").require()


def test_anti_compact_families():
    for s in (CL, PC):
        assert d_classify(s, "anti_compact").value
        assert d_classify(s, "kd").value == d_classify(s, "weakly_hausdorff").value is False
        assert d_classify(s, "T_third").value == d_classify(s, "T_quarter").value


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_sweeps(name):
    s = DescribedSpace(name)
    rng = random.Random(7)
    ax = closure_axiom_sweep(s, 1000, rng)
    assert ax.ok and ax.checked == 1000, ax.failures[:3]
    ch = characterization_sweep(s, 200, rng)
    assert ch.ok and ch.checked == 200, ch.failures[:3]


def test_truncations_of_included_point_space():
    for m in range(7):
        t = truncation(IPC, range(m + 1))
        assert t.n == m + 1
        # opens are the empty set and every subset containing 0
        assert set(t.opens) == {0} | {u for u in range(1 << t.n) if u & 1}
        assert classify(t, "T0") == d_classify(IPC, "T0").value
        # finite T0 spaces are always TD, while the infinite space is not
        assert classify(t, "TD") and not d_classify(IPC, "TD").value
